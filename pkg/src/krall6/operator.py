"""The sixth-order Krall differential expression and its eigenstructure.

The expression acts on y as

    l[y] = b6 y^(6) + b5 y^(5) + b4 y^(4) + b3 y''' + b2 y'' + b1 y'

with polynomial coefficients depending on two positive rational parameters
A, B (see `KrallParams.expression_coefficients`).  It has no order-0 term, so
constants are annihilated.  The same expression also factors in Lagrangian
symmetric form

    l[y] = -(Q y''')''' + (P y'')'' - (pi y')'

with Q = (1-x^2)^3, P = (1-x^2)(12 + alpha(1-x^2)), alpha = 3A+3B+6 and
pi(x) = (-6A-6B-12AB)x^2 + (12A-12B)x + (12AB+18A+18B+24).  Some printings
of the factored form carry +6A instead of -6A in the x^2 coefficient of pi;
`expansion_consistency_report` expands both variants symbolically and shows
only the -6A sign reproduces the expanded coefficients (the mismatch lands in
the y' and y'' lines).  The expanded form is normative throughout.

Eigenvalues: l[.] preserves polynomial degree, and the degree-n eigenvalue is

    lambda_n = n(n+1)(n^4 + 2n^3 + (3A+3B-1)n^2 + (3A+3B-2)n + 12AB).

The leading factor is forced to be n(n+1): `leading_coefficient_oracle`
computes the coefficient of x^n in l[x^n] independently via falling
factorials, and the alternative n(n-1) printing fails that oracle already at
n = 1 (it gives 0 while l[x] = (24AB+12A+12B)x + 12B-12A is nonzero).

Eigenpolynomials come from `eigen_polynomial` (kernel solver, monic ground
truth).  `closed_form_polynomial` implements the explicit coefficient-sum
formula under several parse variants of its ambiguous inner parenthesis and
`closed_form_comparison` documents which variant (if any) is proportional to
the kernel solution; see also the fourth-order Legendre-type instance
`legendre_type`, used as a cross-check of the same machinery.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .germs import EndpointFn, LogGerm
from .polynomials import Poly, Scalar, as_fraction, format_rational


class DegenerateEigenvalueError(ValueError):
    """Two eigenvalues collide, making the polynomial kernel ambiguous."""


#: Parse variants of the closed-form coefficient sum (see module docstring).
CLOSED_FORM_VARIANTS = (
    "sum-end",                    # inner parenthesis closes after the 2j(...) term
    "before-j-term",              # inner parenthesis closes before the 2j(...) term
    "even-selector-sum-end",      # as sum-end, with even-term selector (1+(-1)^j)/2
    "even-selector-before-j-term",
)


@dataclass(frozen=True)
class KrallParams:
    """The parameter pair (A, B), both positive rationals."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", as_fraction(self.A))
        object.__setattr__(self, "B", as_fraction(self.B))
        if self.A <= 0 or self.B <= 0:
            raise ValueError("parameters A and B must be positive")

    @staticmethod
    def parse(a_text: str, b_text: str) -> "KrallParams":
        from .polynomials import parse_rational

        return KrallParams(parse_rational(a_text), parse_rational(b_text))

    @property
    def alpha(self) -> Fraction:
        return 3 * self.A + 3 * self.B + 6

    def pi_poly(self) -> Poly:
        """pi(x) = (-6A-6B-12AB)x^2 + (12A-12B)x + (12AB+18A+18B+24)."""
        A, B = self.A, self.B
        return Poly([12 * A * B + 18 * A + 18 * B + 24, 12 * A - 12 * B, -6 * A - 6 * B - 12 * A * B])

    def pi_poly_sign_variant(self) -> Poly:
        """The sign-discrepant variant (+6A in the x^2 coefficient)."""
        A, B = self.A, self.B
        return Poly([12 * A * B + 18 * A + 18 * B + 24, 12 * A - 12 * B, 6 * A - 6 * B - 12 * A * B])

    def q_poly(self) -> Poly:
        """Q(x) = (1-x^2)^3."""
        return Poly([1, 0, -1]) ** 3

    def p_poly(self) -> Poly:
        """P(x) = (1-x^2)(12 + alpha(1-x^2))."""
        w = Poly([1, 0, -1])
        return w * (Poly([12]) + self.alpha * w)

    def expression_coefficients(self) -> tuple[Poly, Poly, Poly, Poly, Poly, Poly]:
        """Coefficients (b6, b5, b4, b3, b2, b1) of the expanded form."""
        A, B = self.A, self.B
        x = Poly.x()
        x2m1 = Poly([-1, 0, 1])
        b6 = x2m1 ** 3
        b5 = 18 * x * x2m1 ** 2
        b4 = x2m1 * Poly([-3 * A - 3 * B - 36, 0, 3 * A + 3 * B + 96])
        b3 = (24 * A + 24 * B + 168) * x * x2m1
        b2 = Poly([
            -12 * A * B - 30 * A - 30 * B - 72,
            12 * B - 12 * A,
            12 * A * B + 42 * A + 42 * B + 72,
        ])
        b1 = Poly([12 * B - 12 * A, 24 * A * B + 12 * A + 12 * B])
        return b6, b5, b4, b3, b2, b1

    def label(self) -> str:
        return f"A={format_rational(self.A)}, B={format_rational(self.B)}"


# ---------------------------------------------------------------------------
# applying the expression
# ---------------------------------------------------------------------------


def _apply_to_poly(p: Poly, coeffs: tuple[Poly, ...]) -> Poly:
    out = Poly()
    for order, b in zip(range(6, 0, -1), coeffs):
        out = out + b * p.derivative(order)
    return out


def _apply_to_germ(g: LogGerm, coeffs: tuple[Poly, ...]) -> LogGerm:
    out = LogGerm.zero(g.endpoint)
    for order, b in zip(range(6, 0, -1), coeffs):
        out = out + g.derivative(order) * b
    return out


def apply_expression(f, params: KrallParams):
    """Apply the expanded sixth-order expression; returns the class of `f`."""
    coeffs = params.expression_coefficients()
    if isinstance(f, Poly):
        return _apply_to_poly(f, coeffs)
    if isinstance(f, EndpointFn):
        if f.is_global():
            return EndpointFn.from_poly(_apply_to_poly(f.poly, coeffs))
        return EndpointFn.piecewise(
            _apply_to_germ(f.germ_minus, coeffs), _apply_to_germ(f.germ_plus, coeffs)
        )
    raise TypeError("apply_expression expects a Poly or EndpointFn")


def _factored_on_poly(p: Poly, params: KrallParams, pi: Poly) -> Poly:
    q, pp = params.q_poly(), params.p_poly()
    term1 = (q * p.derivative(3)).derivative(3)
    term2 = (pp * p.derivative(2)).derivative(2)
    term3 = (pi * p.derivative(1)).derivative(1)
    return -term1 + term2 - term3


def _factored_on_germ(g: LogGerm, params: KrallParams, pi: Poly) -> LogGerm:
    q, pp = params.q_poly(), params.p_poly()
    term1 = (g.derivative(3) * q).derivative(3)
    term2 = (g.derivative(2) * pp).derivative(2)
    term3 = (g.derivative(1) * pi).derivative(1)
    return -term1 + term2 - term3


def apply_expression_factored(f, params: KrallParams, pi_variant: str = "corrected"):
    """Apply the Lagrangian symmetric form -(Qy''')''' + (Py'')'' - (pi y')'.

    pi_variant "corrected" uses the pi that reproduces the expanded form;
    "sign-variant" uses the +6A x^2-sign for the consistency report.
    """
    pi = params.pi_poly() if pi_variant == "corrected" else params.pi_poly_sign_variant()
    if isinstance(f, Poly):
        return _factored_on_poly(f, params, pi)
    if isinstance(f, EndpointFn):
        if f.is_global():
            return EndpointFn.from_poly(_factored_on_poly(f.poly, params, pi))
        return EndpointFn.piecewise(
            _factored_on_germ(f.germ_minus, params, pi),
            _factored_on_germ(f.germ_plus, params, pi),
        )
    raise TypeError("apply_expression_factored expects a Poly or EndpointFn")


def expanded_coefficients_of_factored(params: KrallParams, pi_variant: str = "corrected"):
    """Symbolically expand the factored form into (b6..b1) via Leibniz."""
    pi = params.pi_poly() if pi_variant == "corrected" else params.pi_poly_sign_variant()
    q, p = params.q_poly(), params.p_poly()
    # -(Q y''')''' = -(Q''' y''' + 3 Q'' y^(4) + 3 Q' y^(5) + Q y^(6))
    # (P y'')''   = P'' y'' + 2 P' y''' + P y^(4)
    # -(pi y')'   = -pi' y' - pi y''
    b6 = -q
    b5 = -3 * q.derivative()
    b4 = -3 * q.derivative(2) + p
    b3 = -q.derivative(3) + 2 * p.derivative()
    b2 = p.derivative(2) - pi
    b1 = -pi.derivative()
    return b6, b5, b4, b3, b2, b1


def expansion_consistency_report(params: KrallParams) -> dict:
    """Compare the expanded coefficients against both factored-form variants.

    Returns {"corrected": {order: bool}, "sign-variant": {order: bool}} plus
    the mismatching differences for the sign variant.
    """
    target = params.expression_coefficients()
    report: dict = {}
    for variant in ("corrected", "sign-variant"):
        got = expanded_coefficients_of_factored(params, variant)
        per_order = {}
        diffs = {}
        for order, (want, have) in zip(range(6, 0, -1), zip(target, got)):
            per_order[order] = want == have
            if want != have:
                diffs[order] = (have - want).format_coeffs()
        report[variant] = {"matches": per_order, "diffs": diffs}
    return report


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def eigenvalue(n: int, params: KrallParams) -> Fraction:
    """lambda_n = n(n+1)(n^4+2n^3+(3A+3B-1)n^2+(3A+3B-2)n+12AB)."""
    A, B = params.A, params.B
    n = Fraction(n)
    return n * (n + 1) * (n**4 + 2 * n**3 + (3 * A + 3 * B - 1) * n**2 + (3 * A + 3 * B - 2) * n + 12 * A * B)


def eigenvalue_shifted_factor_variant(n: int, params: KrallParams) -> Fraction:
    """The n(n-1) leading-factor variant; fails the oracle at n = 1."""
    A, B = params.A, params.B
    n = Fraction(n)
    return n * (n - 1) * (n**4 + 2 * n**3 + (3 * A + 3 * B - 1) * n**2 + (3 * A + 3 * B - 2) * n + 12 * A * B)


def _falling_factorial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def leading_coefficient_oracle(n: int, params: KrallParams) -> Fraction:
    """Coefficient of x^n in l[x^n], computed term by term.

    Independent of `eigenvalue`: sums (falling factorial) x (leading
    coefficient) over the six terms of the expression.
    """
    A, B = params.A, params.B
    leads = [
        (6, Fraction(1)),
        (5, Fraction(18)),
        (4, 3 * A + 3 * B + 96),
        (3, 24 * A + 24 * B + 168),
        (2, 12 * A * B + 42 * A + 42 * B + 72),
        (1, 24 * A * B + 12 * A + 12 * B),
    ]
    return sum((lead * _falling_factorial(n, k) for k, lead in leads), Fraction(0))


# ---------------------------------------------------------------------------
# eigenpolynomials
# ---------------------------------------------------------------------------


def operator_monomial_matrix(n: int, params: KrallParams) -> list[list[Fraction]]:
    """Matrix of the expression on the monomial basis of degree <= n.

    Column m holds the coefficients of l[x^m]; the expression preserves
    polynomial degree so the matrix is (n+1) x (n+1).
    """
    cols = []
    for m in range(n + 1):
        image = apply_expression(Poly.monomial(m), params)
        cols.append([image[i] for i in range(n + 1)])
    return [[cols[m][i] for m in range(n + 1)] for i in range(n + 1)]


def check_distinct_eigenvalues(n: int, params: KrallParams):
    values = [eigenvalue(k, params) for k in range(n + 1)]
    seen: dict[Fraction, int] = {}
    for k, v in enumerate(values):
        if v in seen:
            raise DegenerateEigenvalueError(
                f"lambda_{seen[v]} = lambda_{k} = {format_rational(v)} for {params.label()}"
            )
        seen[v] = k


@functools.lru_cache(maxsize=4096)
def eigen_polynomial(n: int, params: KrallParams) -> Poly:
    """The monic degree-n eigenpolynomial, from the finite kernel system."""
    check_distinct_eigenvalues(n, params)
    lam = eigenvalue(n, params)
    mat = operator_monomial_matrix(n, params)
    for i in range(n + 1):
        mat[i][i] -= lam
    vec = linalg.kernel_vector(mat)
    p = Poly(vec)
    if p.degree != n:
        raise DegenerateEigenvalueError(f"kernel vector has degree {p.degree}, expected {n}")
    return p.monic()


def closed_form_polynomial(n: int, params: KrallParams, variant: str = "sum-end") -> Poly:
    """Literal evaluation of the closed-form coefficient sum under one parse.

    The displayed inner factor has an unbalanced parenthesis; `variant`
    selects the reading (see CLOSED_FORM_VARIANTS).
    """
    if variant not in CLOSED_FORM_VARIANTS:
        raise ValueError(f"unknown closed-form variant {variant!r}")
    A, B = params.A, params.B
    n_f = Fraction(n)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        even_weight = (
            Fraction(2 + (-1) ** j, 2) if not variant.startswith("even-selector") else Fraction(1 + (-1) ** j, 2)
        )
        odd_weight = Fraction(1 - (-1) ** j, 2)
        core = n_f**4 + (2 * A + 2 * B - 1) * n_f**2 + 4 * A * B
        j_term = 2 * j * (n_f**2 + n_f + A + B)
        if variant.endswith("sum-end"):
            q = even_weight * (core + j_term) + odd_weight * (4 * B - 4 * A)
        else:
            q = even_weight * core + j_term + odd_weight * (4 * B - 4 * A)
        sign = Fraction((-1) ** (j // 2))
        num = sign * _fact(2 * n - j) * q
        den = (
            Fraction(2) ** (n + 1)
            * _fact(n - ((j + 1) // 2))
            * _fact((j // 2))
            * _fact(n - j)
            * (n_f**2 + n_f + A + B)
        )
        coeffs[n - j] += num / den
    return Poly(coeffs)


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def closed_form_comparison(n: int, params: KrallParams) -> dict:
    """Compare every closed-form parse variant with the kernel solution.

    A variant "matches" when it is a nonzero scalar multiple of the monic
    kernel polynomial.  Returns {variant: {"matches": bool, "scale": str}}.
    """
    reference = eigen_polynomial(n, params)
    out = {}
    for variant in CLOSED_FORM_VARIANTS:
        candidate = closed_form_polynomial(n, params, variant)
        matches = False
        scale = None
        if not candidate.is_zero() and candidate.degree == reference.degree:
            scale = candidate.leading_coefficient()
            matches = candidate == scale * reference
        out[variant] = {
            "matches": matches,
            "scale": format_rational(scale) if matches and scale is not None else None,
        }
    return out


# ---------------------------------------------------------------------------
# fourth-order Legendre-type cross-check instance
# ---------------------------------------------------------------------------


def apply_legendre_type(f: Poly, A: Scalar) -> Poly:
    """(1-x^2)^2 y'''' + 8x(x^2-1)y''' + (4A+12)(x^2-1)y'' + 8Axy'."""
    A = as_fraction(A)
    x = Poly.x()
    w = Poly([1, 0, -1])
    x2m1 = -w
    return (
        w**2 * f.derivative(4)
        + 8 * x * x2m1 * f.derivative(3)
        + (4 * A + 12) * x2m1 * f.derivative(2)
        + 8 * A * x * f.derivative(1)
    )


def legendre_type(n: int, A: Scalar) -> tuple[Poly, Fraction]:
    """(P_n, mu_n) for the fourth-order instance with equal endpoint jumps.

    P_n is the displayed coefficient sum; mu_n = n(n+1)(n^2+n+4A-2).  The
    pair satisfies apply_legendre_type(P_n) = mu_n * P_n exactly.
    """
    A = as_fraction(A)
    if A <= 0:
        raise ValueError("parameter A must be positive")
    n_f = Fraction(n)
    mu = n_f * (n_f + 1) * (n_f**2 + n_f + 4 * A - 2)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range((n // 2) + 1):
        num = Fraction((-1) ** j) * _fact(2 * n - 2 * j) * (A + Fraction(n * (n - 1), 2) + 2 * j)
        den = Fraction(2) ** n * _fact(j) * _fact(n - j) * _fact(n - 2 * j)
        coeffs[n - 2 * j] += num / den
    return Poly(coeffs), mu
