"""Numerical verification of functional equations, extractions and closed forms.

Everything here is exact: dynamic-programming series on one side, symbolic
expansions or factorial formulas on the other, compared coefficientwise up
to a truncation order and inside guaranteed exponent windows.  There are no
tolerances; a verifier either matches every coefficient or reports the first
discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from .counting import CountTable, count_octant, count_quadrant
from .group import (
    GroupResult,
    check_extraction,
    explore_group,
    extraction_safe_variable,
    nonpositive_total_degree,
    orbit_sum_is_zero,
)
from .kernels import kernel_data, char_poly
from .laurent import LaurentPoly
from .models import LAURENT_ORBIT_4STEP, RATIONAL_ORBIT_5STEP, S0, S0_BAR, S1, S1_BAR
from .newton import (
    divide_series,
    divide_series_by_poly,
    invert_t_unit,
    series_sqrt,
    series_substitute,
    solve_algebraic_series,
)
from .ratfunc import RatFunc
from .series import TruncatedSeries, WindowError, invert_unit, positive_part
from .steps import StepSet


@dataclass
class VerificationReport:
    name: str
    order: int
    window: object
    passed: bool
    first_discrepancy: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "window": self.window,
            "passed": self.passed,
            "first_discrepancy": repr(self.first_discrepancy) if self.first_discrepancy else None,
            "details": {k: repr(v) for k, v in self.details.items()},
        }


# ---------------------------------------------------------------------------
# helpers: DP tables as Laurent-coefficient series
# ---------------------------------------------------------------------------

def _restrict(p: LaurentPoly, axes: tuple[int, ...]) -> LaurentPoly:
    """Terms with exponent 0 in all the given axes."""
    return LaurentPoly(p.nvars, {e: c for e, c in p.terms.items() if all(e[a] == 0 for a in axes)})


def table_polys(table: CountTable, n_max: int, perturb=None) -> list[LaurentPoly]:
    out = [table.coefficient_poly(n) for n in range(n_max + 1)]
    if perturb is not None:
        endpoint, n, delta = perturb
        out[n] = out[n] + LaurentPoly.monomial(out[n].nvars, tuple(endpoint), delta)
    return out


def table_series(table: CountTable, n_max: int, spec: str = "full", perturb=None) -> TruncatedSeries:
    """DP counts as an exact truncated series; spec picks a boundary slice.

    spec: 'full' (all walk variables), 'x0'/'0y' (1 variable), '00' (scalar).
    """
    polys = table_polys(table, n_max, perturb)
    if spec == "full":
        return TruncatedSeries(polys[0].nvars, n_max, polys)
    if spec == "x0":
        coeffs = [LaurentPoly(1, {(e[0],): c for e, c in p.terms.items() if e[1] == 0}) for p in polys]
        return TruncatedSeries(1, n_max, coeffs)
    if spec == "0y":
        coeffs = [LaurentPoly(1, {(e[1],): c for e, c in p.terms.items() if e[0] == 0}) for p in polys]
        return TruncatedSeries(1, n_max, coeffs)
    if spec == "00":
        coeffs = [LaurentPoly.const(0, p.coeff((0,) * p.nvars)) for p in polys]
        return TruncatedSeries(0, n_max, coeffs)
    raise ValueError(f"unknown spec {spec!r}")


# ---------------------------------------------------------------------------
# functional equation
# ---------------------------------------------------------------------------

def verify_functional_equation(model, n_max: int, perturb=None, table: CountTable | None = None) -> VerificationReport:
    """Check the step-by-step functional equation on DP series, exactly."""
    kd = kernel_data(model)
    nv = kd.nvars
    if table is None:
        counter = count_octant if isinstance(model, StepSet) else count_quadrant
        table = counter(model, n_max, keep_tables=True)
    polys = table_polys(table, n_max, perturb)

    def mono(expo) -> LaurentPoly:
        return LaurentPoly.monomial(nv, expo, 1)

    first = None
    for n in range(n_max + 1):
        rhs = LaurentPoly.const(nv, 1) if n == 0 else LaurentPoly.zero(nv)
        if n >= 1:
            prev = polys[n - 1]
            rhs = rhs + kd.s_poly * prev
            if nv == 3:
                a_m, b_m, c_m = kd.slices[0][0], kd.slices[1][0], kd.slices[2][0]
                d_m, e_m, f_m = kd.corner_neg
                rhs = rhs - mono((-1, 0, 0)) * a_m * _restrict(prev, (0,))
                rhs = rhs - mono((0, -1, 0)) * b_m * _restrict(prev, (1,))
                rhs = rhs - mono((0, 0, -1)) * c_m * _restrict(prev, (2,))
                rhs = rhs + mono((-1, -1, 0)) * d_m * _restrict(prev, (0, 1))
                rhs = rhs + mono((-1, 0, -1)) * e_m * _restrict(prev, (0, 2))
                rhs = rhs + mono((0, -1, -1)) * f_m * _restrict(prev, (1, 2))
                if kd.epsilon:
                    rhs = rhs - mono((-1, -1, -1)) * _restrict(prev, (0, 1, 2))
            else:
                a_m, b_m = kd.slices[0][0], kd.slices[1][0]
                (delta,) = kd.corner_neg
                rhs = rhs - mono((-1, 0)) * a_m * _restrict(prev, (0,))
                rhs = rhs - mono((0, -1)) * b_m * _restrict(prev, (1,))
                rhs = rhs + mono((-1, -1)) * delta * _restrict(prev, (0, 1))
        diff = polys[n] - rhs
        if not diff.is_zero():
            e = min(diff.terms)
            first = (n, e, polys[n].coeff(e), rhs.coeff(e))
            break
    return VerificationReport(
        name=f"functional-equation[{model.render()}]",
        order=n_max,
        window=None,
        passed=first is None,
        first_discrepancy=first,
    )


# ---------------------------------------------------------------------------
# kernel-method extraction
# ---------------------------------------------------------------------------

def _expand_term(r: RatFunc, priority, window, order: int) -> TruncatedSeries:
    inv = invert_unit(r.den, priority, window)
    num = TruncatedSeries.from_poly(r.num, 0)
    return inv.mul(num, clip=window).extended(order)


def _geometric_kernel(s_poly: LaurentPoly, n_max: int) -> TruncatedSeries:
    coeffs = [LaurentPoly.const(s_poly.nvars, 1)]
    for _ in range(n_max):
        coeffs.append(coeffs[-1] * s_poly)
    return TruncatedSeries.from_t_poly(s_poly.nvars, dict(enumerate(coeffs)), n_max)


def vertex_support_certificate(coords) -> tuple[int, ...] | None:
    """Positive weights certifying that no power of the element is all-positive.

    For weights w >= 1, every monomial of the expansion of num/den taken at
    the den's unique w-maximal vertex has w-degree <= max_w(num) - max_w(den).
    If that ceiling is <= 0 for every coordinate, all monomials of every
    product of coordinate powers have w-degree <= 0, while an all-positive
    monomial would have w-degree >= sum(w) > 0.
    """
    from itertools import product

    nv = coords[0].nvars

    def maxv(p: LaurentPoly, w) -> tuple[int, bool]:
        vals = [sum(a * b for a, b in zip(e, w)) for e in p.terms]
        m = max(vals)
        return m, vals.count(m) == 1

    for w in product((1, 2, 3, 4), repeat=nv):
        ok = True
        for r in coords:
            vn, _ = maxv(r.num, w)
            vd, unique = maxv(r.den, w)
            if not unique or vn > vd:
                ok = False
                break
        if ok:
            return w
    return None


def verify_extraction(model, n_max: int, group: GroupResult | None = None, table: CountTable | None = None) -> VerificationReport:
    """Compare the positive part of the orbit-sum side against the DP series.

    Every non-identity orbit element must be certified not to contribute to
    the all-positive part: syntactically (a variable whose exponents stay
    non-positive, or non-positive total degree) or, for flagged elements,
    by a windowed check that the substituted series has no all-positive
    monomial.  A flagged element with a surviving monomial means the
    extraction fails for this model; that is reported, not asserted.
    """
    if group is None:
        group = explore_group(model)
    if not group.finite:
        raise ValueError("extraction requires a finite group")
    if orbit_sum_is_zero(group):
        raise ValueError("orbit sum is zero; the orbit equation does not determine the series")
    nv = group.nvars
    name = f"extraction[{model.render()}]"

    # Prefer an expansion order under which every element meets the ring
    # conditions; if none exists, flagged elements are treated numerically
    # and the order is whichever one keeps their windows certifiable.
    ring_orders = []
    other_orders = []
    for order in permutations(range(nv)):
        verdicts = check_extraction(group, order)
        if all(v["verdict"] != "special" for v in verdicts):
            ring_orders.append(order)
        else:
            other_orders.append(order)
    last_exc = None
    for chosen in ring_orders[:1] + (other_orders if not ring_orders else []):
        try:
            return _verify_extraction_at_order(model, n_max, group, table, chosen, name)
        except WindowError as exc:
            last_exc = exc
    raise last_exc


def _verify_extraction_at_order(model, n_max, group, table, chosen, name) -> VerificationReport:
    nv = group.nvars
    verdict_map = check_extraction(group, chosen)
    margin = 1
    for g in group.elements:
        r = g.product()
        for v in range(nv):
            lo_n, hi_n = r.num.degrees(v)
            lo_d, hi_d = r.den.degrees(v)
            margin = max(margin, abs(lo_n), abs(hi_n), abs(lo_d), abs(hi_d))
    window = tuple((-(n_max + 2 + margin), 2 * n_max + 2 + margin) for _ in range(nv))

    if table is None:
        counter = count_octant if isinstance(model, StepSet) else count_quadrant
        table = counter(model, n_max, keep_tables=True)
    polys = table_polys(table, n_max)
    lhs = TruncatedSeries(nv, n_max, [p.shift((1,) * nv) for p in polys])

    s_poly = char_poly(model)
    geom = _geometric_kernel(s_poly, n_max)
    u_sum = None
    specials = []
    for g, v in zip(group.elements, verdict_map):
        term = _expand_term(g.product(), chosen, window, 0)
        if g.sign < 0:
            term = -term
        u_sum = term if u_sum is None else u_sum + term
        if g.length == 0:
            continue
        if v["verdict"] == "special" and extraction_safe_variable(g.coords) is None and not nonpositive_total_degree(g.coords):
            specials.append(g)
    rhs = u_sum.extended(n_max).mul(geom, clip=window)
    pos = rhs
    for v in range(nv):
        pos = positive_part(pos, v)

    support_notes = []
    for g in specials:
        w = vertex_support_certificate(g.coords)
        support_notes.append((g.length, w))
    details = {
        "expansion_order": chosen,
        "verdicts": [v["verdict"] for v in verdict_map],
        "special_elements": len(specials),
        "support_certificates": support_notes,
    }

    def box(n):
        return tuple((1, n + 1) for _ in range(nv))

    disc = lhs.first_discrepancy(pos, box)
    passed = disc is None
    if passed and any(w is None for _, w in support_notes):
        # The series comparison holds to this order but an orbit element has
        # no syntactic or vertex justification: inconclusive, not asserted.
        details["inconclusive"] = True
        passed = False
    return VerificationReport(name, n_max, window, passed, first_discrepancy=disc, details=details)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _as_int(f: Fraction) -> int:
    if f.denominator != 1:
        raise ValueError(f"formula value {f} is not an integer")
    return int(f)


def _formula_laurent_orbit(i, j, k, n) -> int:
    r = n - i - 2 * j - 4 * k
    if r < 0 or r % 8:
        return 0
    m = r // 8
    num = (i + 1) * (j + 1) * (k + 1) * factorial(n)
    den = (
        factorial(4 * m + i + j + 2 * k + 1)
        * factorial(2 * m + j + k + 1)
        * factorial(m + k + 1)
        * factorial(m)
    )
    return _as_int(Fraction(num, den))


def _formula_rational_orbit(i, j, k, n) -> int:
    # m may be negative; the infinite-factorial convention (negative
    # argument => the whole term is 0) is what cuts the support.
    r = n - 4 * i - 2 * j - 3 * k
    if r % 8:
        return 0
    m = r // 8
    args = (
        6 * m + 3 * i + 2 * j + 2 * k,
        3 * m + 2 * i + j + k + 1,
        3 * m + i + j + k,
        2 * m + i + k,
        2 * m + i + j + k + 1,
        4 * m + 2 * i + j + k,
    )
    if any(a < 0 for a in args):
        return 0
    scalar = 4 * m + 2 * i + j + 2 * k + 1
    if scalar <= 0:
        raise ValueError(f"ill-defined formula factor at {(i, j, k, n)}")
    val = Fraction((i + 1) * (j + 1) * (k + 1), scalar)
    val *= Fraction(factorial(args[0]), factorial(args[1]) * factorial(args[2]))
    val *= Fraction(factorial(n), factorial(args[3]) * factorial(args[4]) * factorial(args[5]))
    return _as_int(val)


def _formula_s0(i, j, n) -> int:
    r = n - i
    if r < 0 or r % 2:
        return 0
    m = r // 2
    if m - j < 0:
        return 0
    bracket = (2 * i + 3 * j + 6) * m + i * i + 5 * i + 2 * i * j + 3 * j + 6
    num = (i + 1) * (j + 1) * bracket * factorial(n) * factorial(3 * m + i + 2)
    den = (
        factorial(m)
        * factorial(m + i)
        * factorial(m - j)
        * factorial(2 * m + i + j + 3)
        * (m + i + 1)
        * (m + i + 2)
        * (m + 1)
    )
    return _as_int(Fraction(num, den))


def _formula_s0bar_j0(i, n) -> int:
    r = n - i
    if r < 0 or r % 2:
        return 0
    m = r // 2
    num = (i + 1) * (i + 2) * factorial(2 * m + i) * factorial(3 * m + 2 * i + 3)
    den = (
        factorial(m)
        * factorial(m + i)
        * factorial(m + i + 2)
        * factorial(2 * m + i + 2)
        * (m + i + 1)
        * (2 * m + 2 * i + 3)
    )
    return _as_int(Fraction(num, den))


CLOSED_FORM_MODELS = {
    "ex43": LAURENT_ORBIT_4STEP,
    "ex44": RATIONAL_ORBIT_5STEP,
    "S0": S0,
    "S0bar-j0": S0_BAR,
}


def verify_closed_form(model_id: str, n_max: int, perturb=None) -> VerificationReport:
    """Exact factorial formulas against DP counts, all endpoints, n <= n_max."""
    if model_id not in CLOSED_FORM_MODELS:
        raise ValueError(f"unknown model id {model_id!r}; expected one of {sorted(CLOSED_FORM_MODELS)}")
    model = CLOSED_FORM_MODELS[model_id]
    counter = count_octant if isinstance(model, StepSet) else count_quadrant
    table = counter(model, n_max, keep_tables=True)
    polys = table_polys(table, n_max, perturb)
    first = None
    for n in range(n_max + 1):
        if first:
            break
        if model_id in ("ex43", "ex44"):
            formula = _formula_laurent_orbit if model_id == "ex43" else _formula_rational_orbit
            for i in range(n + 1):
                for j in range(n + 1):
                    for k in range(n + 1):
                        dp = polys[n].coeff((i, j, k))
                        fv = formula(i, j, k, n)
                        if dp != fv:
                            first = (n, (i, j, k), fv, dp)
                            break
                    if first:
                        break
                if first:
                    break
        elif model_id == "S0":
            for i in range(n + 1):
                for j in range(n + 1):
                    dp = polys[n].coeff((i, j))
                    fv = _formula_s0(i, j, n)
                    if dp != fv:
                        first = (n, (i, j), fv, dp)
                        break
                if first:
                    break
        else:  # S0bar-j0: the j = 0 column only
            for i in range(n + 1):
                dp = polys[n].coeff((i, 0))
                fv = _formula_s0bar_j0(i, n)
                if dp != fv:
                    first = (n, (i, 0), fv, dp)
                    break
    return VerificationReport(
        name=f"closed-form[{model_id}]",
        order=n_max,
        window=None,
        passed=first is None,
        first_discrepancy=first,
    )


# ---------------------------------------------------------------------------
# series identities for the two computer-algebra quadrant models
# ---------------------------------------------------------------------------

def _embed(s: TruncatedSeries, nvars: int) -> TruncatedSeries:
    """Lift a scalar-coefficient series into an nvars-variable ring."""
    if s.nvars == nvars:
        return s
    assert s.nvars == 0
    zero_e = (0,) * nvars
    coeffs = [
        LaurentPoly(nvars, {zero_e: p.constant_term()}) if not p.is_zero() else LaurentPoly.zero(nvars)
        for p in s.coeffs
    ]
    return TruncatedSeries(nvars, s.order, coeffs)


def _t_poly(nvars: int, parts: dict[int, LaurentPoly], n_max: int) -> TruncatedSeries:
    return TruncatedSeries.from_t_poly(nvars, parts, n_max)


def _lp(nvars: int, terms: dict) -> LaurentPoly:
    return LaurentPoly(nvars, dict(terms))


def q00_display_coefficient(n: int) -> int:
    """Excursion count of the doubled-east-step model at length n."""
    if n % 2:
        return 0
    m = n // 2
    return _as_int(Fraction(
        6 * factorial(6 * m + 1) * factorial(2 * m + 1),
        factorial(3 * m) * factorial(4 * m + 3) * factorial(m + 1),
    ))


def q0y_display_coefficient(n: int, j: int) -> int:
    if n < j:
        return 0
    return _as_int(Fraction(
        6 * factorial(2 * j + 1) * factorial(6 * n + 1) * factorial(2 * n + j + 1),
        factorial(j) ** 2 * factorial(3 * n) * factorial(4 * n + 2 * j + 3) * factorial(n - j) * (n + 1),
    ))


def solve_t_series(n_max: int) -> TruncatedSeries:
    """T with T(1 - 4T^2) = t."""
    t1 = _t_poly(0, {1: LaurentPoly.const(0, 1)}, n_max)
    return solve_algebraic_series([-t1, 1, 0, -4], 0, n_max).expansion


def solve_s_series(n_max: int) -> TruncatedSeries:
    """S with S = T(1 + S^2)."""
    t = solve_t_series(n_max)
    return solve_algebraic_series([-t, 1, -t], 0, n_max).expansion


def solve_z_series(n_max: int) -> TruncatedSeries:
    """Z with Z(1-Z)(1-2Z)^4 = t^2."""
    t2 = _t_poly(0, {2: LaurentPoly.const(0, 1)}, n_max)
    return solve_algebraic_series([-t2, 1, -9, 32, -56, 48, -16], 0, n_max).expansion


def solve_w_series(n_max: int) -> TruncatedSeries:
    """W with W(1 - (1+y)W) = T^2; coefficients are polynomials in y."""
    t = solve_t_series(n_max)
    t2 = _embed(t.mul(t), 1)
    one_y = _lp(1, {(0,): 1, (1,): 1})
    return solve_algebraic_series([-t2, 1, TruncatedSeries.from_poly(-one_y, n_max)], 0, n_max).expansion


def kernel_roots_doubled_east(n_max: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(X(y;t), Y(x;t)) cancelling the kernel of the doubled-east model."""
    # X = t(1+1/y) + t(1+1/y)(1+y) X^2
    p0 = _t_poly(1, {1: _lp(1, {(0,): -1, (-1,): -1})}, n_max)
    p2 = _t_poly(1, {1: _lp(1, {(1,): -1, (0,): -2, (-1,): -1})}, n_max)
    x_series = solve_algebraic_series([p0, 1, p2], 0, n_max).expansion
    # Y = t(1/x + x) + t(1/x + 2x) Y + t x Y^2
    q0 = _t_poly(1, {1: _lp(1, {(-1,): -1, (1,): -1})}, n_max)
    q1 = _t_poly(1, {0: _lp(1, {(0,): 1}), 1: _lp(1, {(-1,): -1, (1,): -2})}, n_max)
    q2 = _t_poly(1, {1: _lp(1, {(1,): -1})}, n_max)
    y_series = solve_algebraic_series([q0, q1, q2], 0, n_max).expansion
    return x_series, y_series


def kernel_roots_doubled_west(n_max: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(X(y;t), Y(x;t)) for the doubled-west model."""
    # X = t(1+y)(1+1/y) + t(1+y) X^2
    p0 = _t_poly(1, {1: _lp(1, {(1,): -1, (0,): -2, (-1,): -1})}, n_max)
    p2 = _t_poly(1, {1: _lp(1, {(0,): -1, (1,): -1})}, n_max)
    x_series = solve_algebraic_series([p0, 1, p2], 0, n_max).expansion
    # Y = t/x + t(2/x + x) Y + t(1/x + x) Y^2
    q0 = _t_poly(1, {1: _lp(1, {(-1,): -1})}, n_max)
    q1 = _t_poly(1, {0: _lp(1, {(0,): 1}), 1: _lp(1, {(-1,): -2, (1,): -1})}, n_max)
    q2 = _t_poly(1, {1: _lp(1, {(-1,): -1, (1,): -1})}, n_max)
    y_series = solve_algebraic_series([q0, q1, q2], 0, n_max).expansion
    return x_series, y_series


def parametric_qx0(n_max: int) -> TruncatedSeries:
    """Closed form for Q(x,0) of the doubled-east model (degree-12 series)."""
    pad = n_max + 2  # dividing by S^2 costs two orders of precision
    s = _embed(solve_s_series(pad), 1)
    one = TruncatedSeries.from_poly(LaurentPoly.const(1, 1), pad)
    s2 = s.mul(s)
    s4 = s2.mul(s2)
    x = LaurentPoly.var(1, 0)
    x2p1 = _lp(1, {(0,): 1, (2,): 1})
    # sqrt argument (1-S^2)^2 - 4 x S (1+S^2)
    one_m = one - s2
    arg = one_m.mul(one_m) - (s.mul(one + s2) * x).scale(4)
    root = series_sqrt(arg)
    part1 = (one + s2.scale(6) + s4) * x
    part2 = s.mul(one_m).mul(TruncatedSeries.from_poly(x2p1, pad)).scale(2)
    part3 = (one * x - s.scale(2) + s2 * x).mul(root)
    numer = part1 - part2 - part3
    numer = divide_series_by_poly(numer, x * x2p1)
    numer = divide_series(numer, s2).scale(Fraction(1, 2))
    factor = (one + s2).mul(one + s2).mul(one + s2)
    factor = factor.mul(invert_t_unit(one_m.mul(one_m).mul(one_m)))
    return factor.mul(numer).truncate(n_max)


def parametric_q0y(n_max: int) -> TruncatedSeries:
    """Closed form for Q(0,y) of the doubled-east model."""
    t = _embed(solve_t_series(n_max + 2), 1)
    w = solve_w_series(n_max + 2)
    one = TruncatedSeries.from_poly(LaurentPoly.const(1, 1), n_max + 2)
    inner = one - t.mul(t).scale(4) - w.scale(2)
    return w.mul(inner).t_shift(-2).truncate(n_max)


HOMOGENEOUS_POLYS = (
    {(1, 0): 1},
    {(1, 1): 2, (3, 1): 1},
    {(2, 1): 1, (2, 0): 1, (0, 1): 1, (0, 0): 2},
    {(3, 2): 1, (3, 1): -1, (3, 0): 1, (1, 2): 2},
)


ALGEBRAIC_SELECTORS = (
    "q00-display", "q00-equation", "q00-parametric",
    "qxy", "qx0", "q0y", "q0y-display",
    "system-doubled-east", "system-doubled-west", "homogeneous",
)


def verify_algebraic_results(which: str, n_max: int) -> VerificationReport:
    """Series identities for the two doubled-step quadrant models."""
    if which not in ALGEBRAIC_SELECTORS:
        raise ValueError(f"unknown selector {which!r}; expected one of {ALGEBRAIC_SELECTORS}")
    name = f"algebraic[{which}]"

    if which in ("q00-display", "q00-equation", "q00-parametric"):
        table = count_quadrant(S1_BAR, n_max, keep_tables=True)
        q00 = table_series(table, n_max, "00")
        if which == "q00-display":
            first = None
            for n in range(n_max + 1):
                dp = q00.coeff(n).constant_term()
                fv = q00_display_coefficient(n)
                if dp != fv:
                    first = (n, (), fv, dp)
                    break
            return VerificationReport(name, n_max, None, first is None, first)
        if which == "q00-equation":
            t2 = _t_poly(0, {2: LaurentPoly.const(0, 1)}, n_max)
            t4 = t2.mul(t2)
            one = TruncatedSeries.from_poly(LaurentPoly.const(0, 1), n_max)
            coeffs = [
                t4.scale(16) + t2.scale(44) - one,
                t4.scale(48) - t2.scale(56) + one,
                (t4.scale(48) - t2.scale(8) + one.scale(9)).mul(t2),
                (t2.scale(96) + one.scale(32)).mul(t4),
                (t2.scale(48) + one.scale(56)).mul(t4).mul(t2),
                t4.mul(t4).scale(48),
                t4.mul(t4).mul(t2).scale(16),
            ]
            total = TruncatedSeries.zero(0, n_max)
            power = one
            for c in coeffs:
                total = total + c.mul(power)
                power = power.mul(q00)
            first = None
            for n in range(n_max + 1):
                v = total.coeff(n).constant_term()
                if v != 0:
                    first = (n, (), 0, v)
                    break
            return VerificationReport(name, n_max, None, first is None, first)
        z = solve_z_series(n_max)
        rhs = z.mul(
            TruncatedSeries.from_poly(LaurentPoly.const(0, 1), n_max)
            - z.scale(6) + z.mul(z).scale(4)
        )
        lhs = q00.t_shift(2)
        disc = lhs.first_discrepancy(rhs)
        return VerificationReport(name, n_max, None, disc is None, disc)

    if which == "qxy":
        table = count_quadrant(S1_BAR, n_max, keep_tables=True)
        qxy = table_series(table, n_max, "full")
        qx0 = table_series(table, n_max, "x0")
        q0y = table_series(table, n_max, "0y")
        q00 = table_series(table, n_max, "00")
        kd = kernel_data(S1_BAR)
        xy = _lp(2, {(1, 1): 1})
        kernel = _t_poly(2, {0: xy, 1: -(kd.s_poly * xy)}, n_max)
        lhs = kernel.mul(qxy)
        fx = TruncatedSeries(2, n_max, [_lp(2, {(e[0], 0): c for e, c in p.terms.items()}) for p in qx0.coeffs])
        gy = TruncatedSeries(2, n_max, [_lp(2, {(0, e[0]): c for e, c in p.terms.items()}) for p in q0y.coeffs])
        q00e = TruncatedSeries(2, n_max, [_lp(2, {(0, 0): p.constant_term()}) if not p.is_zero() else LaurentPoly.zero(2) for p in q00.coeffs])
        rhs = (
            TruncatedSeries.from_poly(xy, n_max)
            - fx.mul(TruncatedSeries.from_poly(_lp(2, {(0, 0): 1, (2, 0): 1}), n_max)).t_shift(1)
            - gy.mul(TruncatedSeries.from_poly(_lp(2, {(0, 0): 1, (0, 1): 1}), n_max)).t_shift(1)
            + q00e.t_shift(1)
        )
        disc = lhs.first_discrepancy(rhs)
        return VerificationReport(name, n_max, None, disc is None, disc)

    if which in ("qx0", "q0y"):
        table = count_quadrant(S1_BAR, n_max, keep_tables=True)
        dp = table_series(table, n_max, "x0" if which == "qx0" else "0y")
        closed = parametric_qx0(n_max) if which == "qx0" else parametric_q0y(n_max)
        disc = dp.first_discrepancy(closed.truncate(n_max))
        return VerificationReport(name, n_max, None, disc is None, disc)

    if which == "q0y-display":
        table = count_quadrant(S1_BAR, n_max, keep_tables=True)
        dp = table_series(table, n_max, "0y")
        first = None
        for n in range(n_max + 1):
            p = dp.coeff(n)
            jmax = max((e[0] for e in p.terms), default=0)
            for j in range(jmax + 2):
                fv = q0y_display_coefficient(n // 2, j) if n % 2 == 0 else 0
                if p.coeff((j,)) != fv:
                    first = (n, (j,), fv, p.coeff((j,)))
                    break
            if first:
                break
        return VerificationReport(name, n_max, None, first is None, first)

    if which in ("system-doubled-east", "system-doubled-west"):
        east = which == "system-doubled-east"
        model = S1_BAR if east else S1
        table = count_quadrant(model, n_max, keep_tables=True)
        q00 = table_series(table, n_max, "00")
        if east:
            f = parametric_qx0(n_max + 1)
            g = parametric_q0y(n_max + 1)
            xs, ys = kernel_roots_doubled_east(n_max + 1)
        else:
            f = table_series(table, n_max, "x0").extended(n_max + 1)
            g = table_series(table, n_max, "0y").extended(n_max + 1)
            xs, ys = kernel_roots_doubled_west(n_max + 1)
        work = n_max + 1
        one1 = TruncatedSeries.from_poly(LaurentPoly.const(1, 1), work)
        x = LaurentPoly.var(1, 0)
        y = LaurentPoly.var(1, 0)
        q00x = _embed(q00, 1)
        # first equation: in the ring of Laurent polynomials in x
        g_of_y = series_substitute(g, ys, work)
        wrap = one1 + ys if east else (one1 + ys).mul(one1 + ys)
        fx_weight = TruncatedSeries.from_poly(_lp(1, {(0,): 1, (2,): 1}), work) if east else one1
        lhs1 = (fx_weight.mul(f) + wrap.mul(g_of_y)).truncate(n_max)
        rhs1 = ((ys * x).t_shift(-1) + q00x).truncate(n_max)
        disc = lhs1.first_discrepancy(rhs1)
        if disc is None:
            # second equation: in the ring of Laurent polynomials in y
            f_of_x = series_substitute(f, xs, work)
            wrap2_poly = _lp(1, {(0,): 1, (1,): 1})
            wrap2 = TruncatedSeries.from_poly(wrap2_poly, work)
            if not east:
                wrap2 = wrap2.mul(wrap2)
            fx_weight2 = one1 + xs.mul(xs) if east else one1
            lhs2 = (fx_weight2.mul(f_of_x) + wrap2.mul(g)).truncate(n_max)
            rhs2 = ((xs * y).t_shift(-1) + q00x).truncate(n_max)
            disc = lhs2.first_discrepancy(rhs2)
        return VerificationReport(name, n_max, None, disc is None, disc)

    # homogeneous: the listed polynomials solve the signed orbit equation
    group = explore_group(S1)
    first = None
    for terms in HOMOGENEOUS_POLYS:
        total = None
        for el in group.elements:
            cx, cy = el.coords
            part = None
            cache: dict[tuple[int, int], RatFunc] = {}

            def cpow(v, k):
                key = (v, k)
                if key not in cache:
                    base = cx if v == 0 else cy
                    r = RatFunc.const(2, 1)
                    for _ in range(k):
                        r = r * base
                    cache[key] = r
                return cache[key]

            for (a, b), c in terms.items():
                term = cpow(0, a + 1) * cpow(1, b + 1) * c
                part = term if part is None else part + term
            if el.sign < 0:
                part = -part
            total = part if total is None else total + part
        if not total.is_zero():
            first = (terms, "nonzero orbit image")
            break
    return VerificationReport(name, n_max, None, first is None, first)
