"""Exact-arithmetic spectral toolkit for the sixth-order Krall expression.

Everything is computed over arbitrary-precision rationals: the expression in
expanded and Lagrangian-symmetric form, its eigenvalues and monic
eigenpolynomials, the point-mass-weighted inner products, the bilinear
concomitant and its endpoint limit calculus, Frobenius series at the regular
singular endpoints with square-integrability classification, and the
self-adjoint operator in the extended space L2(-1,1) (+) C2 together with
its boundary-condition machinery.

The `suites` module packages every checkable identity as a report; the
`krall6` CLI (see `cli`) runs them and dumps exact artifacts.
"""

from .germs import DivergentLimitError, EndpointFn, LogGerm, UnspecifiedInteriorError
from .inner_products import (
    ExtendedVector,
    embed,
    extended_inner,
    gram_matrix,
    kappa_inner,
    mu_inner,
)
from .operator import (
    DegenerateEigenvalueError,
    KrallParams,
    apply_expression,
    apply_expression_factored,
    eigen_polynomial,
    eigenvalue,
    leading_coefficient_oracle,
    legendre_type,
)
from .polynomials import Poly, RationalFn, format_rational, parse_rational

__all__ = [
    "DegenerateEigenvalueError",
    "DivergentLimitError",
    "EndpointFn",
    "ExtendedVector",
    "KrallParams",
    "LogGerm",
    "Poly",
    "RationalFn",
    "UnspecifiedInteriorError",
    "apply_expression",
    "apply_expression_factored",
    "eigen_polynomial",
    "eigenvalue",
    "embed",
    "extended_inner",
    "format_rational",
    "gram_matrix",
    "kappa_inner",
    "leading_coefficient_oracle",
    "legendre_type",
    "mu_inner",
    "parse_rational",
]

__version__ = "0.1.0"
