"""Bilinear concomitant, quasi-derivative, Green's formula, limit identities.

Integrating the sixth-order expression by parts produces a boundary bilinear
form [f, g] whose endpoint limits carry all boundary-condition information.
With w = 1-x^2, alpha = 3A+3B+6, Q = w^3, P = w(12+alpha w) and pi as in
`operator`, the concomitant is built from two auxiliary combinations:

    B[f]   = -(Q f''')'' + (P f'')' - pi f'     (the "bracket with one")
    Lam[f] = -(Q f''')'  +  P f''               (the quasi-derivative)

    [f, g] = B[f] g - B[g] f - Lam[f] g' + Lam[g] f' - Q (f''' g'' - f'' g''')

The five summands are kept in exactly this grouping so that divergence
diagnostics point at individual sub-expressions.  All scalars are real
rationals, so complex conjugation is the identity and [f, g] = -[g, f].

Endpoint limits are germ-valuation limits (`germs.LogGerm.limit`); divergence
raises `DivergentLimitError`, the typed signal that an input pair lies
outside the limit class.  The module also provides:

  * `symplectic_form`: [f,g](1) - [f,g](-1), the Green's-formula boundary term;
  * `greens_formula_check`: both sides of Green's formula for global
    polynomials, computed independently (exact integration vs endpoint limits);
  * the canonical test functions of the theory (piecewise weights, the
    quasi-derivative probes, log-bearing probes, piecewise constants);
  * closed-form endpoint reduction formulas valid on the reduced domain, each
    cross-checked against the direct five-term limit;
  * membership predicates for the reduced domain (quasi-derivative vanishing
    at both endpoints) and for the separated auxiliary domain.

One caution baked into the tests rather than the code: the log-bearing
probes have quasi-derivative limit 32 at their endpoint.  Some sources quote
24 for that constant; 24 is inconsistent with the probes' own definition (it
drops the -(Q f''')' boundary contribution of 16 per unit of w ln w), and the
reduction formula for [f, log-probe] reproduced here -- constant
(32A+12B-16) and residual +32 f' -- confirms 32.  See the errata suite.
"""

from __future__ import annotations

from fractions import Fraction

from .germs import EndpointFn, LogGerm
from .operator import KrallParams, apply_expression
from .polynomials import Poly

WEIGHT = Poly([1, 0, -1])  # w(x) = 1 - x^2


# ---------------------------------------------------------------------------
# canonical test functions
# ---------------------------------------------------------------------------


def one_near(endpoint: int) -> EndpointFn:
    """1 near `endpoint`, 0 near the other (a piecewise constant)."""
    return EndpointFn.poly_near(endpoint, Poly.one())


def weight_near(endpoint: int) -> EndpointFn:
    """(1-x^2) near `endpoint`, 0 near the other."""
    return EndpointFn.poly_near(endpoint, WEIGHT)


def weight_sq_near(endpoint: int) -> EndpointFn:
    """(1-x^2)^2 near `endpoint`, 0 near the other."""
    return EndpointFn.poly_near(endpoint, WEIGHT**2)


def quasi_probe(endpoint: int, params: KrallParams) -> EndpointFn:
    """The combination of w and w^2 whose bracket extracts the quasi-derivative.

    At +1:  (1/2)w + (1/8)(A+2)w^2, zero near -1; at -1 the mirror image
    (B in place of A) with an overall minus sign.  For every f in the limit
    class, [f, probe](e) = Lam[f](e); see `quasi_derivative_probe_identity`.
    """
    if endpoint == 1:
        p = Fraction(1, 2) * WEIGHT + Fraction(1, 8) * (params.A + 2) * WEIGHT**2
        return EndpointFn.poly_near(1, p)
    p = -Fraction(1, 2) * WEIGHT - Fraction(1, 8) * (params.B + 2) * WEIGHT**2
    return EndpointFn.poly_near(-1, p)


def log_probe(endpoint: int, params: KrallParams) -> EndpointFn:
    """The log-bearing maximal-domain function ((1/8)(A+2)w^2 + (1/2)w) ln w
    near +1 (B in place of A near -1), zero near the other endpoint.

    The two summands are paired exactly so that the bracket against smooth
    functions stays finite (the ln divergences cancel); any other ratio of
    the two coefficients leaves the maximal-domain limit class.
    """
    if endpoint == 1:
        p = Fraction(1, 8) * (params.A + 2) * WEIGHT**2 + Fraction(1, 2) * WEIGHT
        return EndpointFn.log_poly_near(1, p)
    p = Fraction(1, 8) * (params.B + 2) * WEIGHT**2 + Fraction(1, 2) * WEIGHT
    return EndpointFn.log_poly_near(-1, p)


def boundary_condition_functions(params: KrallParams) -> list[EndpointFn]:
    """The four piecewise weights generating the operator's boundary conditions.

    Order: w^2 near +1, w^2 near -1, w near +1, w near -1.
    """
    return [weight_sq_near(1), weight_sq_near(-1), weight_near(1), weight_near(-1)]


def partial_gkn_pair() -> list[EndpointFn]:
    """Unit-scaled seed pair: 1 near -1 and 1 near +1.

    Positive scalings (the orthonormal-basis factors) cancel in every
    rational-valued quantity computed from these, so the unit normalization
    is used throughout.
    """
    return [one_near(-1), one_near(1)]


def probe_functions(params: KrallParams) -> list[EndpointFn]:
    """Independence probes: 1 near -1, 1 near +1, log probes at +1 and -1."""
    return [one_near(-1), one_near(1), log_probe(1, params), log_probe(-1, params)]


# ---------------------------------------------------------------------------
# core combinations
# ---------------------------------------------------------------------------


def quasi_derivative(f, params: KrallParams):
    """Lam[f] = -((1-x^2)^3 f''')' + (1-x^2)(12+alpha(1-x^2)) f''.

    Returns the same class as f (Poly in, Poly out; EndpointFn in,
    EndpointFn out).
    """
    q, p = params.q_poly(), params.p_poly()
    if isinstance(f, Poly):
        return -(q * f.derivative(3)).derivative() + p * f.derivative(2)

    def on_germ(g: LogGerm) -> LogGerm:
        return -((g.derivative(3) * q).derivative()) + g.derivative(2) * p

    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    if f.is_global():
        return EndpointFn.from_poly(quasi_derivative(f.poly, params))
    return EndpointFn.piecewise(on_germ(f.germ_minus), on_germ(f.germ_plus))


def quasi_derivative_at(f, endpoint: int, params: KrallParams) -> Fraction:
    """Endpoint limit of the quasi-derivative."""
    lam = quasi_derivative(f if isinstance(f, (Poly, EndpointFn)) else Poly._coerce(f), params)
    if isinstance(lam, Poly):
        return lam(endpoint)
    return lam.value_at(endpoint)


def _bracket_with_one_germ(g: LogGerm, params: KrallParams) -> LogGerm:
    """B[f] = -(Q f''')'' + (P f'')' - pi f' on a germ."""
    q, p, pi = params.q_poly(), params.p_poly(), params.pi_poly()
    return (
        -((g.derivative(3) * q).derivative(2))
        + (g.derivative(2) * p).derivative()
        - g.derivative(1) * pi
    )


def _concomitant_germ(fg: LogGerm, gg: LogGerm, params: KrallParams) -> LogGerm:
    """The five-term concomitant as a germ at one endpoint."""
    q = params.q_poly()
    line1 = _bracket_with_one_germ(fg, params) * gg
    line2 = -(_bracket_with_one_germ(gg, params) * fg)
    lam_f = -((fg.derivative(3) * q).derivative()) + fg.derivative(2) * params.p_poly()
    lam_g = -((gg.derivative(3) * q).derivative()) + gg.derivative(2) * params.p_poly()
    line3 = -(lam_f * gg.derivative(1))
    line4 = lam_g * fg.derivative(1)
    line5 = -(
        (fg.derivative(3) * gg.derivative(2) - fg.derivative(2) * gg.derivative(3)) * q
    )
    return line1 + line2 + line3 + line4 + line5


def concomitant(f, g, endpoint: int, params: KrallParams) -> Fraction:
    """Endpoint limit of the bilinear concomitant [f, g](endpoint).

    Raises DivergentLimitError when the pair is outside the limit class.
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    g = EndpointFn.from_poly(g) if not isinstance(g, EndpointFn) else g
    germ = _concomitant_germ(f.germ_at(endpoint), g.germ_at(endpoint), params)
    return germ.limit()


def concomitant_with_one(f, endpoint: int, params: KrallParams) -> Fraction:
    """Endpoint limit of B[f] (equals concomitant(f, 1, endpoint) exactly)."""
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    return _bracket_with_one_germ(f.germ_at(endpoint), params).limit()


def symplectic_form(f, g, params: KrallParams) -> Fraction:
    """[f, g](1) - [f, g](-1), the boundary term of Green's formula."""
    return concomitant(f, g, 1, params) - concomitant(f, g, -1, params)


def greens_formula_check(f: Poly, g: Poly, params: KrallParams) -> tuple[Fraction, Fraction]:
    """(LHS, RHS) of Green's formula for global polynomials.

    LHS = integral(l[f] g - f l[g]) by exact termwise integration;
    RHS = the symplectic boundary form.  Equality is the caller's assertion.
    """
    lf = apply_expression(f, params)
    lg = apply_expression(g, params)
    lhs = (lf * g - f * lg).integrate_unit_interval()
    rhs = symplectic_form(f, g, params)
    return lhs, rhs


# ---------------------------------------------------------------------------
# closed-form endpoint reductions (reduced-domain formulas)
# ---------------------------------------------------------------------------


def reduced_bracket_with_one(f, endpoint: int, params: KrallParams) -> Fraction:
    """Closed form of [f, 1](e) on the reduced domain.

    At +1: -24 f''(1) - 24(A+1) f'(1); at -1: 24 f''(-1) - 24(B+1) f'(-1).
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    d1 = f.derivative(1).value_at(endpoint)
    d2 = f.derivative(2).value_at(endpoint)
    if endpoint == 1:
        return -24 * d2 - 24 * (params.A + 1) * d1
    return 24 * d2 - 24 * (params.B + 1) * d1


def reduced_concomitant(f, g, endpoint: int, params: KrallParams) -> Fraction:
    """Closed form of [f, g](e) on the reduced domain.

    At +1: -24(f''g - g''f)(1) - 24(A+1)(f'g - g'f)(1); the -1 version flips
    the second-derivative sign and uses B.
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    g = EndpointFn.from_poly(g) if not isinstance(g, EndpointFn) else g
    fe, ge = f.value_at(endpoint), g.value_at(endpoint)
    f1, g1 = f.derivative(1).value_at(endpoint), g.derivative(1).value_at(endpoint)
    f2, g2 = f.derivative(2).value_at(endpoint), g.derivative(2).value_at(endpoint)
    if endpoint == 1:
        return -24 * (f2 * ge - g2 * fe) - 24 * (params.A + 1) * (f1 * ge - g1 * fe)
    return 24 * (f2 * ge - g2 * fe) - 24 * (params.B + 1) * (f1 * ge - g1 * fe)


def bracket_weight_reduction(f, endpoint: int, params: KrallParams) -> Fraction:
    """[f, 1-x^2](e) via the quasi-derivative:

    +1: 2 Lam[f](1) - 48(A+2) f(1);  -1: -2 Lam[f](-1) + 48(B+2) f(-1).
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    lam = quasi_derivative_at(f, endpoint, params)
    fe = f.value_at(endpoint)
    if endpoint == 1:
        return 2 * lam - 48 * (params.A + 2) * fe
    return -2 * lam + 48 * (params.B + 2) * fe


def bracket_weight_sq_reduction(f, endpoint: int, params: KrallParams) -> Fraction:
    """[f, (1-x^2)^2](e) = +-192 f(+-1)."""
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    return endpoint * 192 * f.value_at(endpoint)


def general_endpoint_reduction(f, g, endpoint: int, params: KrallParams) -> Fraction:
    """[f, g](e) decomposed as bracket-with-one terms plus a residual limit:

    [f,1](e) g(e) - [g,1](e) f(e)
        + lim( -Lam[f] g' + Lam[g] f' - (1-x^2)^3 (f''' g'' - f'' g''') ).
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    g = EndpointFn.from_poly(g) if not isinstance(g, EndpointFn) else g
    fg, gg = f.germ_at(endpoint), g.germ_at(endpoint)
    q, p = params.q_poly(), params.p_poly()
    lam_f = -((fg.derivative(3) * q).derivative()) + fg.derivative(2) * p
    lam_g = -((gg.derivative(3) * q).derivative()) + gg.derivative(2) * p
    residual = (
        -(lam_f * gg.derivative(1))
        + lam_g * fg.derivative(1)
        - (fg.derivative(3) * gg.derivative(2) - fg.derivative(2) * gg.derivative(3)) * q
    )
    head = (
        concomitant_with_one(f, endpoint, params) * g.value_at(endpoint)
        - concomitant_with_one(g, endpoint, params) * f.value_at(endpoint)
    )
    return head + residual.limit()


def log_probe_reduction(f, endpoint: int, params: KrallParams) -> Fraction:
    """[f, log_probe(e)](e) decomposed as constant * f(e) plus a residual limit.

    At +1 the constant is 32A+12B-16; at -1 it is -(32B+12A-16).  The
    residual is -Lam[f] probe' + 32 f' - (1-x^2)^3(f''' probe'' - probe''' f'')
    whose +32 f' term is the probe's own quasi-derivative limit showing up.
    Only defined when every sub-limit exists (polynomials qualify).
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    probe = log_probe(endpoint, params)
    fg, hg = f.germ_at(endpoint), probe.germ_at(endpoint)
    q, p = params.q_poly(), params.p_poly()
    lam_f = -((fg.derivative(3) * q).derivative()) + fg.derivative(2) * p
    residual = (
        -(lam_f * hg.derivative(1))
        + fg.derivative(1) * Poly([32])
        - (fg.derivative(3) * hg.derivative(2) - fg.derivative(2) * hg.derivative(3)) * q
    )
    if endpoint == 1:
        constant = 32 * params.A + 12 * params.B - 16
    else:
        constant = -(32 * params.B + 12 * params.A - 16)
    return constant * f.value_at(endpoint) + residual.limit()


# ---------------------------------------------------------------------------
# domain predicates
# ---------------------------------------------------------------------------


def quasi_derivative_probe_identity(f, endpoint: int, params: KrallParams) -> tuple[Fraction, Fraction]:
    """([f, probe](e), Lam[f](e)) -- the pair the probe construction equates."""
    probe = quasi_probe(endpoint, params)
    return concomitant(f, probe, endpoint, params), quasi_derivative_at(f, endpoint, params)


def in_reduced_domain(f, params: KrallParams) -> tuple[bool, dict]:
    """Quasi-derivative vanishing at both endpoints, with a witness record.

    The witness reports Lam[f](+-1) and the directly computed concomitants
    against the probes (the two routes must agree).
    """
    witness = {}
    ok = True
    for endpoint in (-1, 1):
        via_probe, lam = quasi_derivative_probe_identity(f, endpoint, params)
        if via_probe != lam:
            raise AssertionError(
                f"probe identity violated at {endpoint:+d}: {via_probe} != {lam}"
            )
        witness[endpoint] = lam
        ok = ok and lam == 0
    return ok, witness


def in_separated_domain(f, params: KrallParams) -> bool:
    """Reduced-domain member whose bracket with the one-sided constants vanishes.

    This is the domain of the auxiliary self-adjoint operator in plain
    L2(-1,1): four separated conditions, two per endpoint.
    """
    ok, _ = in_reduced_domain(f, params)
    if not ok:
        return False
    return (
        concomitant(f, one_near(1), 1, params) == 0
        and concomitant(f, one_near(-1), -1, params) == 0
    )


# ---------------------------------------------------------------------------
# identity suites (exact checks, reported as rows)
# ---------------------------------------------------------------------------


def maximal_domain_suite(f, params: KrallParams, tag: str) -> list[dict]:
    """Limit identities valid on the whole maximal domain, per test function.

    Covers: vanishing of (1-x^2)^j f^(j); the weight and squared-weight
    bracket reductions; vanishing against (1-x^2)^3; the general endpoint
    reduction; and for the log probes the constants-and-residual reduction.
    Each row has name/lhs/rhs; equality is the caller's assertion.
    """
    f = EndpointFn.from_poly(f) if not isinstance(f, EndpointFn) else f
    rows = []
    w = WEIGHT
    for endpoint in (-1, 1):
        for j in (1, 2, 3):
            germ = (f.derivative(j) * w**j).germ_at(endpoint)
            rows.append(
                {
                    "name": f"{tag}:weighted-derivative-vanishing:j={j}:e={endpoint:+d}",
                    "paper_item": "vanishing-weighted-derivatives",
                    "lhs": germ.limit(),
                    "rhs": Fraction(0),
                }
            )
        rows.append(
            {
                "name": f"{tag}:bracket-weight-reduction:e={endpoint:+d}",
                "paper_item": "bracket-weight-reduction",
                "lhs": concomitant(f, EndpointFn.from_poly(w), endpoint, params),
                "rhs": bracket_weight_reduction(f, endpoint, params),
            }
        )
        rows.append(
            {
                "name": f"{tag}:bracket-weight-sq-reduction:e={endpoint:+d}",
                "paper_item": "bracket-weight-sq-reduction",
                "lhs": concomitant(f, EndpointFn.from_poly(w**2), endpoint, params),
                "rhs": bracket_weight_sq_reduction(f, endpoint, params),
            }
        )
        rows.append(
            {
                "name": f"{tag}:bracket-weight-cube-vanishing:e={endpoint:+d}",
                "paper_item": "bracket-weight-cube-vanishing",
                "lhs": concomitant(f, EndpointFn.from_poly(w**3), endpoint, params),
                "rhs": Fraction(0),
            }
        )
    return rows


def general_reduction_suite(f, g, params: KrallParams, tag: str) -> list[dict]:
    """Direct five-term limit vs the general endpoint reduction, both ends."""
    rows = []
    for endpoint in (-1, 1):
        rows.append(
            {
                "name": f"{tag}:general-endpoint-reduction:e={endpoint:+d}",
                "paper_item": "bracket-general-reduction",
                "lhs": concomitant(f, g, endpoint, params),
                "rhs": general_endpoint_reduction(f, g, endpoint, params),
            }
        )
    return rows


def reduced_domain_suite(f, g, params: KrallParams, tag: str) -> list[dict]:
    """Closed-form reductions on the reduced domain vs direct limits."""
    rows = []
    for endpoint in (-1, 1):
        rows.append(
            {
                "name": f"{tag}:bracket-with-one-closed-form:e={endpoint:+d}",
                "paper_item": "bracket-with-one-closed-form",
                "lhs": concomitant_with_one(f, endpoint, params),
                "rhs": reduced_bracket_with_one(f, endpoint, params),
            }
        )
        rows.append(
            {
                "name": f"{tag}:two-route-bracket-with-one:e={endpoint:+d}",
                "paper_item": "bracket-with-one-two-routes",
                "lhs": concomitant_with_one(f, endpoint, params),
                "rhs": concomitant(f, EndpointFn.from_poly(Poly.one()), endpoint, params),
            }
        )
        rows.append(
            {
                "name": f"{tag}:pair-closed-form:e={endpoint:+d}",
                "paper_item": "bracket-pair-closed-form",
                "lhs": concomitant(f, g, endpoint, params),
                "rhs": reduced_concomitant(f, g, endpoint, params),
            }
        )
        fe = EndpointFn.from_poly(f).value_at(endpoint)
        weight_rhs = -48 * (params.A + 2) * fe if endpoint == 1 else 48 * (params.B + 2) * fe
        rows.append(
            {
                "name": f"{tag}:weight-closed-form:e={endpoint:+d}",
                "paper_item": "bracket-weight-closed-form",
                "lhs": concomitant(f, EndpointFn.from_poly(WEIGHT), endpoint, params),
                "rhs": weight_rhs,
            }
        )
        rows.append(
            {
                "name": f"{tag}:weight-sq-closed-form:e={endpoint:+d}",
                "paper_item": "bracket-weight-sq-closed-form",
                "lhs": concomitant(f, EndpointFn.from_poly(WEIGHT**2), endpoint, params),
                "rhs": endpoint * 192 * fe,
            }
        )
    return rows
