"""Truncated power series in t with Laurent-polynomial coefficients.

The positive-part extractions expand rational functions as iterated Laurent
series (first in one walk variable, then the next, then the last).  Such
expansions have infinite support, so coefficients are kept inside a finite
per-variable window and every series carries, per variable, a *support*
interval (where the true series can have terms at all; may be unbounded)
and a *guarantee* interval (where the stored coefficients are certified
equal to the true ones).  Multiplication narrows guarantees: a factor whose
guarantee stops at g, multiplied against a factor supported down to l, is
only trustworthy up to exponent g + l.  Comparisons outside the guarantee
raise instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, Coeff
from .ratfunc import RatFunc


class WindowError(ValueError):
    """A coefficient was requested outside the guaranteed sub-window."""


class ExpansionError(ValueError):
    """No valid expansion direction for a denominator."""


def _add(a, b):
    if a is None or b is None:
        return None
    return a + b


@dataclass(frozen=True)
class VarBounds:
    """Per-variable support and guarantee intervals; None means unbounded."""

    slo: int | None = None
    shi: int | None = None
    glo: int | None = None
    ghi: int | None = None

    def guarantee_empty(self) -> bool:
        return self.glo is not None and self.ghi is not None and self.glo > self.ghi

    def guarantees(self, e: int) -> bool:
        if self.guarantee_empty():
            return False
        return (self.glo is None or e >= self.glo) and (self.ghi is None or e <= self.ghi)


def _mul_bounds(a: VarBounds, b: VarBounds) -> VarBounds:
    slo = _add(a.slo, b.slo)
    shi = _add(a.shi, b.shi)
    if a.guarantee_empty() or b.guarantee_empty():
        return VarBounds(slo, shi, 1, 0)
    his = []
    los = []
    for f, g in ((a, b), (b, a)):
        # f only poisons high exponents if its support extends above ghi.
        if f.ghi is not None and (f.shi is None or f.shi > f.ghi):
            if g.slo is None:
                return VarBounds(slo, shi, 1, 0)
            his.append(f.ghi + g.slo)
        if f.glo is not None and (f.slo is None or f.slo < f.glo):
            if g.shi is None:
                return VarBounds(slo, shi, 1, 0)
            los.append(f.glo + g.shi)
    return VarBounds(slo, shi, max(los) if los else None, min(his) if his else None)


def _and_bounds(a: VarBounds, b: VarBounds) -> VarBounds:
    """Bounds after addition: support hull, guarantee intersection."""
    slo = None if a.slo is None or b.slo is None else min(a.slo, b.slo)
    shi = None if a.shi is None or b.shi is None else max(a.shi, b.shi)
    glo = a.glo if b.glo is None else (b.glo if a.glo is None else max(a.glo, b.glo))
    ghi = a.ghi if b.ghi is None else (b.ghi if a.ghi is None else min(a.ghi, b.ghi))
    return VarBounds(slo, shi, glo, ghi)


Window = tuple[tuple[int, int], ...]


def _clip_poly(p: LaurentPoly, window: Window | None) -> LaurentPoly:
    if window is None:
        return p
    out = {
        e: c
        for e, c in p.terms.items()
        if all(lo <= x <= hi for x, (lo, hi) in zip(e, window))
    }
    return p if len(out) == len(p.terms) else LaurentPoly(p.nvars, out)


def _clip_bounds(b: VarBounds, w: tuple[int, int]) -> VarBounds:
    lo, hi = w
    glo = lo if b.glo is None else max(b.glo, lo)
    ghi = hi if b.ghi is None else min(b.ghi, hi)
    return VarBounds(b.slo, b.shi, glo, ghi)


class TruncatedSeries:
    """Power series in t, truncated at a fixed order, with windowed coefficients."""

    __slots__ = ("nvars", "order", "coeffs", "bounds")

    def __init__(self, nvars: int, order: int, coeffs: list[LaurentPoly], bounds: tuple[VarBounds, ...] | None = None):
        assert len(coeffs) == order + 1
        self.nvars = nvars
        self.order = order
        self.coeffs = coeffs
        self.bounds = bounds if bounds is not None else tuple(VarBounds() for _ in range(nvars))

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(nvars: int, order: int) -> "TruncatedSeries":
        return TruncatedSeries(nvars, order, [LaurentPoly.zero(nvars) for _ in range(order + 1)], _exact_bounds_many(nvars, []))

    @staticmethod
    def from_poly(p: LaurentPoly, order: int) -> "TruncatedSeries":
        coeffs = [p] + [LaurentPoly.zero(p.nvars) for _ in range(order)]
        return TruncatedSeries(p.nvars, order, coeffs, _exact_bounds_many(p.nvars, [p]))

    @staticmethod
    def from_t_poly(nvars: int, parts: dict[int, LaurentPoly], order: int) -> "TruncatedSeries":
        coeffs = [parts.get(n, LaurentPoly.zero(nvars)) for n in range(order + 1)]
        return TruncatedSeries(nvars, order, coeffs, _exact_bounds_many(nvars, list(parts.values())))

    @staticmethod
    def const(nvars: int, c: Coeff, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_poly(LaurentPoly.const(nvars, c), order)

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.order, list(self.coeffs), self.bounds)

    # -- queries -----------------------------------------------------------

    def coeff(self, n: int) -> LaurentPoly:
        return self.coeffs[n] if n <= self.order else LaurentPoly.zero(self.nvars)

    def term(self, n: int, expo: tuple[int, ...]) -> Coeff:
        for v, (x, b) in enumerate(zip(expo, self.bounds)):
            if not b.guarantees(x):
                raise WindowError(f"exponent {expo} outside guaranteed window in variable {v}")
        return self.coeff(n).coeff(expo)

    def is_exact(self) -> bool:
        return all(b.glo is None and b.ghi is None for b in self.bounds)

    def t_valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return None

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        order = min(self.order, other.order)
        coeffs = [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)]
        bounds = tuple(_and_bounds(a, b) for a, b in zip(self.bounds, other.bounds))
        return TruncatedSeries(self.nvars, order, coeffs, bounds)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.order, [-c for c in self.coeffs], self.bounds)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: Coeff) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.order, [p.scale(c) for p in self.coeffs], self.bounds)

    def mul(self, other: "TruncatedSeries", clip: Window | None = None) -> "TruncatedSeries":
        self._check(other)
        order = min(self.order, other.order)
        out = [LaurentPoly.zero(self.nvars) for _ in range(order + 1)]
        for a, pa in enumerate(self.coeffs):
            if pa.is_zero() or a > order:
                continue
            for b in range(order - a + 1):
                pb = other.coeffs[b]
                if pb.is_zero():
                    continue
                out[a + b] = out[a + b] + pa * pb
        if clip is not None:
            out = [_clip_poly(p, clip) for p in out]
        bounds = tuple(_mul_bounds(a, b) for a, b in zip(self.bounds, other.bounds))
        if clip is not None:
            bounds = tuple(_clip_bounds(b, w) for b, w in zip(bounds, clip))
        return TruncatedSeries(self.nvars, order, out, bounds)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        if isinstance(other, LaurentPoly):
            return self.mul(TruncatedSeries.from_poly(other, self.order))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def t_shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k; negative k requires vanishing low coefficients.

        Dividing by t^k genuinely loses the top k orders, so the truncation
        order drops accordingly rather than padding unknown coefficients.
        """
        if k >= 0:
            coeffs = [LaurentPoly.zero(self.nvars) for _ in range(k)] + self.coeffs[: self.order + 1 - k]
            return TruncatedSeries(self.nvars, self.order, coeffs, self.bounds)
        if any(not c.is_zero() for c in self.coeffs[:-k]):
            raise ValueError("t-shift would create negative powers of t")
        return TruncatedSeries(self.nvars, self.order + k, self.coeffs[-k:], self.bounds)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.nvars, order, self.coeffs[: order + 1], self.bounds)

    def extended(self, order: int) -> "TruncatedSeries":
        """Zero-pad up to `order` (valid for objects exact in t, e.g. polynomials)."""
        if order <= self.order:
            return self.truncate(order)
        pad = [LaurentPoly.zero(self.nvars) for _ in range(order - self.order)]
        return TruncatedSeries(self.nvars, order, self.coeffs + pad, self.bounds)

    def to_json(self) -> dict:
        """Per-degree dumps as (exponent vector, rational string) pairs."""
        return {
            "order": self.order,
            "coefficients": {n: c.to_json() for n, c in enumerate(self.coeffs) if not c.is_zero()},
        }

    def clip(self, window: Window) -> "TruncatedSeries":
        coeffs = [_clip_poly(p, window) for p in self.coeffs]
        bounds = tuple(_clip_bounds(b, w) for b, w in zip(self.bounds, window))
        return TruncatedSeries(self.nvars, self.order, coeffs, bounds)

    # -- comparison -----------------------------------------------------------

    def first_discrepancy(self, other: "TruncatedSeries", box_fn=None):
        """First differing (n, exponent, a, b) inside the guaranteed region.

        box_fn(n) gives the per-degree comparison box as ((lo,hi),...); it
        must lie inside both guarantees, else WindowError.  box_fn=None
        compares everything (both series must be exact).
        """
        self._check(other)
        order = min(self.order, other.order)
        for n in range(order + 1):
            if box_fn is None:
                if not (self.is_exact() and other.is_exact()):
                    raise WindowError("unwindowed comparison of windowed series")
                box = None
            else:
                box = box_fn(n)
                for v, (lo, hi) in enumerate(box):
                    for s in (self, other):
                        b = s.bounds[v]
                        if not (b.guarantees(lo) and b.guarantees(hi)):
                            raise WindowError(
                                f"comparison box {box} exceeds guarantee {s.bounds[v]} in variable {v} at order {n}"
                            )
            pa, pb = self.coeffs[n], other.coeffs[n]
            keys = set(pa.terms) | set(pb.terms)
            for e in sorted(keys):
                if box is not None and not all(lo <= x <= hi for x, (lo, hi) in zip(e, box)):
                    continue
                ca, cb = pa.coeff(e), pb.coeff(e)
                if ca != cb:
                    return (n, e, ca, cb)
        return None


def _exact_bounds_many(nvars: int, polys: list[LaurentPoly]) -> tuple[VarBounds, ...]:
    out = []
    for v in range(nvars):
        los = [p.degrees(v)[0] for p in polys if not p.is_zero()]
        his = [p.degrees(v)[1] for p in polys if not p.is_zero()]
        lo = min(los) if los else 0
        hi = max(his) if his else 0
        out.append(VarBounds(lo, hi, None, None))
    return tuple(out)


def positive_part(f: TruncatedSeries, var: int) -> TruncatedSeries:
    """Keep only monomials with strictly positive exponent in `var`."""
    coeffs = [
        LaurentPoly(f.nvars, {e: c for e, c in p.terms.items() if e[var] > 0})
        for p in f.coeffs
    ]
    bounds = list(f.bounds)
    b = bounds[var]
    glo = None if (b.glo is None or b.glo <= 1) else b.glo
    slo = 1 if b.slo is None else max(b.slo, 1)
    bounds[var] = VarBounds(slo, b.shi, glo, b.ghi)
    return TruncatedSeries(f.nvars, f.order, coeffs, tuple(bounds))


# ---------------------------------------------------------------------------
# Iterated Laurent inversion of a unit
# ---------------------------------------------------------------------------

def _priority_key(priority: tuple[int, ...]):
    return lambda e: tuple(e[v] for v in priority)


def _find_weight(r_exps: list[tuple[int, ...]], priority: tuple[int, ...], nvars: int) -> tuple[int, ...]:
    """Integer weights w >= 0 with w.e >= 1 for every exponent of the tail."""
    if not r_exps:
        return (0,) * nvars
    best = None
    from itertools import product

    for w in product(range(4), repeat=nvars):
        if all(sum(a * b for a, b in zip(w, e)) >= 1 for e in r_exps):
            if best is None or sum(w) < sum(best):
                best = w
    if best is not None:
        return best
    # Lexicographic fallback: heavy weights down the priority chain always
    # separate lex-positive exponents.
    m = 2 + max(sum(abs(x) for x in e) for e in r_exps)
    w = [0] * nvars
    for rank, v in enumerate(priority):
        w[v] = m ** (len(priority) - 1 - rank)
    if all(sum(a * b for a, b in zip(w, e)) >= 1 for e in r_exps):
        return tuple(w)
    raise ExpansionError("no valid expansion direction for denominator tail")


def invert_unit(d: LaurentPoly, priority: tuple[int, ...], window: Window) -> TruncatedSeries:
    """1/d as an iterated Laurent expansion, exact inside `window`.

    The expansion direction is fixed by `priority`: the first variable is
    the outermost Laurent level (the one extracted first), so the leading
    term of d is its minimum exponent lexicographically by priority.
    """
    if d.is_zero():
        raise ZeroDivisionError("inverting zero")
    nvars = d.nvars
    key = _priority_key(priority)
    lead = min(d.terms, key=key)
    c0 = d.terms[lead]
    tail = {
        tuple(x - y for x, y in zip(e, lead)): Fraction(c) / Fraction(c0)
        for e, c in d.terms.items()
        if e != lead
    }
    r_exps = list(tail)
    if not r_exps:
        return TruncatedSeries.from_poly(
            LaurentPoly.monomial(nvars, tuple(-x for x in lead), Fraction(1) / Fraction(c0)), 0
        )
    weight = _find_weight(r_exps, priority, nvars)
    # Ball radius: the requested window, shifted by the leading monomial,
    # must lie inside {w.e <= B}; dropped points never re-enter since every
    # tail step adds weight >= 1.
    corners = []
    for e in _corners(window):
        corners.append(sum(w * (x + l) for w, x, l in zip(weight, e, lead)))
    bound = max(corners)
    acc: dict[tuple[int, ...], Coeff] = {(0,) * nvars: Fraction(1)}
    power: dict[tuple[int, ...], Coeff] = dict(acc)
    steps = 0
    while power:
        steps += 1
        if steps > bound + 2:
            raise ExpansionError("expansion does not terminate inside the window")
        nxt: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in power.items():
            for e2, c2 in tail.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if sum(w * x for w, x in zip(weight, e)) > bound:
                    continue
                s = nxt.get(e, 0) - c1 * c2
                if s == 0:
                    nxt.pop(e, None)
                else:
                    nxt[e] = s
        power = nxt
        for e, c in power.items():
            s = acc.get(e, 0) + c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
    inv_c0 = Fraction(1) / Fraction(c0)
    result = LaurentPoly(nvars, {
        tuple(x - l for x, l in zip(e, lead)): c * inv_c0 for e, c in acc.items()
    })
    result = _clip_poly(result, window)
    bounds = []
    for v in range(nvars):
        grows = any(e[v] > 0 for e in r_exps)
        shrinks = any(e[v] < 0 for e in r_exps)
        slo = None if shrinks else -lead[v]
        shi = None if grows else -lead[v]
        bounds.append(VarBounds(slo, shi, window[v][0], window[v][1]))
    return TruncatedSeries(nvars, 0, [result], tuple(bounds))


def _corners(window: Window):
    from itertools import product

    return product(*[(lo, hi) for lo, hi in window])


# ---------------------------------------------------------------------------
# Rational function expansion
# ---------------------------------------------------------------------------

def symmetric_window(nvars: int, w: int) -> Window:
    return tuple((-w, w) for _ in range(nvars))


def expand_ratfunc(
    num,
    den=None,
    order: tuple[int, ...] | None = None,
    n: int = 10,
    window: Window | int | None = None,
    t_var: int | None = None,
) -> TruncatedSeries:
    """Iterated Laurent expansion of num/den, truncated at t-order n.

    num and den are LaurentPolys (or a RatFunc passed as `num`).  When
    `t_var` is given it must be the last variable index; den's t-degree-0
    part is inverted as an iterated Laurent unit under `order` (the first
    variable in `order` is extracted first), and the rest is expanded
    geometrically in t.  `window` bounds the kept walk exponents; the
    returned series records the guaranteed sub-window.
    """
    if isinstance(num, RatFunc):
        den = num.den
        num = num.num
    if den is None:
        den = LaurentPoly.const(num.nvars, 1)
    nv_all = num.nvars
    walk_vars = nv_all - (1 if t_var is not None else 0)
    if t_var is not None and t_var != nv_all - 1:
        raise ValueError("t must be the last variable")
    if order is None:
        order = tuple(range(walk_vars))
    if window is None:
        window = symmetric_window(walk_vars, 2 * n + 4)
    elif isinstance(window, int):
        window = symmetric_window(walk_vars, window)

    def split_t(p: LaurentPoly) -> dict[int, LaurentPoly]:
        parts: dict[int, LaurentPoly] = {}
        for e, c in p.terms.items():
            td = e[t_var] if t_var is not None else 0
            if td < 0:
                raise ValueError("negative powers of t are not supported")
            w = e[:walk_vars]
            parts.setdefault(td, {})[w] = parts.get(td, {}).get(w, 0) + c
        return {td: LaurentPoly(walk_vars, terms) for td, terms in parts.items()}

    num_parts = split_t(num)
    den_parts = split_t(den)
    if not den_parts:
        raise ZeroDivisionError("zero denominator")
    shift = min(den_parts)
    if shift:
        den_parts = {td - shift: p for td, p in den_parts.items()}

    inv0 = invert_unit(den_parts[0], order, window)
    inv0 = TruncatedSeries(walk_vars, n, inv0.coeffs + [LaurentPoly.zero(walk_vars)] * n, inv0.bounds)
    if len(den_parts) == 1:
        total = inv0
    else:
        g = TruncatedSeries.from_t_poly(walk_vars, {td: p for td, p in den_parts.items() if td > 0}, n)
        g = (-g).mul(inv0, window)
        total = inv0
        term = inv0
        for _ in range(n):
            term = term.mul(g, window)
            if all(c.is_zero() for c in term.coeffs):
                break
            total = total + term
    num_series = TruncatedSeries.from_t_poly(walk_vars, num_parts, n)
    result = total.mul(num_series, window)
    if shift:
        result = result.t_shift(-shift)
    return result
