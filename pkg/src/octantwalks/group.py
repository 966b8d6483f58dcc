"""The group of birational involutions attached to a model.

Each generator inverts one variable against the ratio of its negative and
positive step slices and fixes the others; the group they generate fixes
the characteristic polynomial.  Exploration is breadth-first with a
fingerprint: elements are tracked by their image of a random point over a
62-bit prime field, which is sound for distinguishing elements (equal maps
evaluate equally wherever defined).  A closure found by fingerprints is then
confirmed symbolically: every non-tree edge is re-checked by exact
cross-multiplication, so a fingerprint collision can delay but never corrupt
the result.  Signs come from BFS depth; an edge joining two elements at
depths of equal parity would make the sign ill-defined and raises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, try_exact_divide
from .modp import DEFAULT_PRIME
from .ratfunc import RatFunc
from .steps import StepSet, QuadrantModel

AXIS_NAMES3 = ("x", "y", "z")


class SignParityError(RuntimeError):
    """An element is reachable by words of both parities."""


class DegenerateModelError(ValueError):
    """A positive slice is zero, so the involutions are undefined."""


@dataclass
class GroupElement:
    coords: tuple[RatFunc, ...] | None
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def product(self) -> RatFunc:
        """The image of the monomial x*y(*z) under this element."""
        out = self.coords[0]
        for c in self.coords[1:]:
            out = out * c
        return out


@dataclass
class GroupResult:
    finite: bool
    order: int | None
    elements: list[GroupElement] | None
    bound: int
    generator_images: tuple[tuple[RatFunc, ...], ...]
    nvars: int

    def to_report(self, orbit_sum_zero: bool | None = None) -> dict:
        names = AXIS_NAMES3[: self.nvars]
        return {
            "order": self.order if self.finite else f">={self.bound}",
            "generators": [
                [c.render(names) for c in g] for g in self.generator_images
            ],
            "orbit_sum_zero": orbit_sum_zero,
        }


def _slices(model) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """(negative, positive) slice polynomials per axis, in the other variables.

    The slices are embedded in the full variable ring with the axis variable
    exponent set to zero; multiplicities enter as integer coefficients.
    """
    if isinstance(model, StepSet):
        nvars = 3
        items = [(s, 1) for s in model.steps()]
    elif isinstance(model, QuadrantModel):
        nvars = 2
        items = list(model.weights)
    else:
        raise TypeError("expected StepSet or QuadrantModel")
    out = []
    for axis in range(nvars):
        neg: dict = {}
        pos: dict = {}
        for step, w in items:
            target = neg if step[axis] < 0 else pos if step[axis] > 0 else None
            if target is None:
                continue
            e = tuple(0 if v == axis else step[v] for v in range(nvars))
            target[e] = target.get(e, 0) + w
        out.append((LaurentPoly(nvars, neg), LaurentPoly(nvars, pos)))
    return out


def generators(model) -> list[GroupElement]:
    """The involutions, one per axis, as coordinate tuples of rational maps."""
    slices = _slices(model)
    nvars = len(slices)
    gens = []
    for axis, (neg, pos) in enumerate(slices):
        if pos.is_zero() or neg.is_zero():
            raise DegenerateModelError(
                f"axis {AXIS_NAMES3[axis]} lacks a positive or negative slice"
            )
        coords = []
        for v in range(nvars):
            if v == axis:
                coords.append(RatFunc(neg, LaurentPoly.var(nvars, axis) * pos))
            else:
                coords.append(RatFunc.var(nvars, v))
        gens.append(GroupElement(tuple(coords), 1))
    return gens


class _Pool:
    """Known denominator factors, for exact-division cancellation (no GCDs)."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.factors: list[LaurentPoly] = []

    @staticmethod
    def _normal(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """(unit monomial, normalised factor): min-exps 0, content 1, lead > 0."""
        mc = f.monomial_content()
        g = f.shift(tuple(-x for x in mc))
        c = g.content()
        if g.leading_coeff() < 0:
            c = -c
        if c != 1:
            g = g.scale(1 / Fraction(c))
        unit = LaurentPoly.monomial(f.nvars, mc, c)
        return unit, g

    def split(self, p: LaurentPoly) -> tuple[LaurentPoly, dict[LaurentPoly, int]]:
        """p = returned_unit_part * prod(factors); registers new factors."""
        unit, rest = self._normal(p)
        found: dict[LaurentPoly, int] = {}
        changed = True
        while changed and not rest.is_monomial():
            changed = False
            for f in self.factors:
                while True:
                    q = try_exact_divide(rest, f)
                    if q is None:
                        break
                    found[f] = found.get(f, 0) + 1
                    rest = q
                    changed = True
                if rest.is_monomial():
                    break
        if not rest.is_monomial():
            # Not divisible by anything known: register as a new pool factor
            # (possibly composite; later exact divisions still cancel it).
            self.factors.append(rest)
            found[rest] = found.get(rest, 0) + 1
        else:
            unit = unit * rest
        return unit, found


class _FRat:
    """num / prod(factor^mult), with cancellation by exact division."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: dict[LaurentPoly, int]):
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p: LaurentPoly) -> "_FRat":
        return _FRat(p, {})

    def reduce(self) -> "_FRat":
        num = self.num
        den = dict(self.den)
        if num.is_zero():
            return _FRat(num, {})
        for f in list(den):
            while den.get(f, 0) > 0:
                q = try_exact_divide(num, f)
                if q is None:
                    break
                num = q
                den[f] -= 1
            if den.get(f, 0) == 0:
                den.pop(f, None)
        return _FRat(num, den)

    def mul(self, other: "_FRat") -> "_FRat":
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return _FRat(self.num * other.num, den).reduce()

    def inv(self, pool: _Pool) -> "_FRat":
        if self.num.is_zero():
            raise ZeroDivisionError
        num = LaurentPoly.const(self.num.nvars, 1)
        for f, m in self.den.items():
            for _ in range(m):
                num = num * f
        unit, den = pool.split(self.num)
        inv_unit = unit ** (-1)
        return _FRat(num * inv_unit, den).reduce()

    def add(self, other: "_FRat") -> "_FRat":
        all_f = set(self.den) | set(other.den)
        den: dict[LaurentPoly, int] = {}
        for f in all_f:
            den[f] = max(self.den.get(f, 0), other.den.get(f, 0))
        num1, num2 = self.num, other.num
        for f in all_f:
            for _ in range(den[f] - self.den.get(f, 0)):
                num1 = num1 * f
            for _ in range(den[f] - other.den.get(f, 0)):
                num2 = num2 * f
        return _FRat(num1 + num2, den).reduce()

    def to_ratfunc(self) -> RatFunc:
        den = LaurentPoly.const(self.num.nvars, 1)
        for f, m in self.den.items():
            for _ in range(m):
                den = den * f
        return RatFunc(self.num, den)


def _apply_symbolic(slices, axis: int, coords: tuple[_FRat, ...], pool: _Pool) -> tuple[_FRat, ...]:
    """Compose the axis involution after the map with the given coordinates."""
    neg, pos = slices[axis]
    nvars = len(coords)
    pows: dict[tuple[int, int], _FRat] = {}

    def power(v: int, e: int) -> _FRat:
        key = (v, e)
        if key not in pows:
            base = coords[v] if e > 0 else coords[v].inv(pool)
            r = base
            for _ in range(abs(e) - 1):
                r = r.mul(base)
            pows[key] = r
        return pows[key]

    def eval_slice(p: LaurentPoly) -> _FRat:
        total = _FRat.from_poly(LaurentPoly.zero(nvars))
        for e, c in p.terms.items():
            term = _FRat.from_poly(LaurentPoly.const(nvars, c))
            for v, x in enumerate(e):
                if x:
                    term = term.mul(power(v, x))
            total = total.add(term)
        return total

    new_axis = coords[axis].inv(pool).mul(eval_slice(neg)).mul(eval_slice(pos).inv(pool))
    out = list(coords)
    out[axis] = new_axis
    return tuple(out)


def _apply_point(slices, axis: int, pt: tuple[int, ...], p: int) -> tuple[int, ...]:
    neg, pos = slices[axis]
    others = pt
    nv = neg.eval_mod(others, p)
    pv = pos.eval_mod(others, p)
    if nv == 0 or pv == 0 or pt[axis] == 0:
        raise ZeroDivisionError
    new = nv * pow(pv * pt[axis] % p, p - 2, p) % p
    if new == 0:
        raise ZeroDivisionError
    out = list(pt)
    out[axis] = new
    return tuple(out)


def explore_group(model, bound: int = 200, seed: int = 0, prime: int = DEFAULT_PRIME) -> GroupResult:
    """Breadth-first closure of the generated group, up to `bound` elements.

    Returns Finite (with exact symbolic elements and signs) or ExceedsBound.
    Fingerprint collisions trigger a re-randomised retry; the exact check on
    closure edges is what certifies finiteness.
    """
    slices = _slices(model)
    nvars = len(slices)
    gens = generators(model)
    rng = random.Random(seed)
    for _attempt in range(32):
        try:
            return _explore_once(model, slices, nvars, gens, bound, rng, prime)
        except ZeroDivisionError:
            continue
        except _FingerprintCollision:
            continue
    raise RuntimeError("group exploration kept hitting degenerate points")


class _FingerprintCollision(Exception):
    pass


def _explore_once(model, slices, nvars, gens, bound, rng, p) -> GroupResult:
    base = tuple(rng.randrange(2, p - 1) for _ in range(nvars))
    depth: dict[tuple[int, ...], int] = {base: 0}
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    closure_edges: list[tuple[tuple[int, ...], int, tuple[int, ...]]] = []
    frontier = [base]
    order = 1
    while frontier:
        nxt = []
        for pt in frontier:
            d = depth[pt]
            for axis in range(nvars):
                img = _apply_point(slices, axis, pt, p)
                if img in depth:
                    if (depth[img] - (d + 1)) % 2:
                        raise SignParityError(
                            "element reachable at both parities; sign undefined"
                        )
                    closure_edges.append((pt, axis, img))
                else:
                    depth[img] = d + 1
                    parent[img] = (pt, axis)
                    order += 1
                    if order > bound:
                        return GroupResult(
                            False, None, None, bound,
                            tuple(g.coords for g in gens), nvars,
                        )
                    nxt.append(img)
        frontier = nxt

    # Symbolic confirmation: rebuild coordinates along the BFS tree, then
    # verify every closure edge exactly.
    pool = _Pool(nvars)
    identity = tuple(_FRat.from_poly(LaurentPoly.var(nvars, v)) for v in range(nvars))
    coords: dict[tuple[int, ...], tuple[_FRat, ...]] = {base: identity}
    todo = sorted(depth, key=lambda k: depth[k])
    for pt in todo:
        if pt == base:
            continue
        par, axis = parent[pt]
        coords[pt] = _apply_symbolic(slices, axis, coords[par], pool)
    rat: dict[tuple[int, ...], tuple[RatFunc, ...]] = {
        pt: tuple(c.to_ratfunc() for c in cs) for pt, cs in coords.items()
    }
    for pt, axis, img in closure_edges:
        cand = _apply_symbolic(slices, axis, coords[pt], pool)
        if any(a.to_ratfunc() != b for a, b in zip(cand, rat[img])):
            raise _FingerprintCollision
    elements = [GroupElement(rat[pt], depth[pt]) for pt in todo]
    return GroupResult(True, order, elements, bound, tuple(g.coords for g in gens), nvars)


# ---------------------------------------------------------------------------
# Orbit sums
# ---------------------------------------------------------------------------

def orbit_sum(group: GroupResult) -> RatFunc:
    """Signed sum of the coordinate products over the whole orbit.

    Terms are grouped by structurally equal denominators before the final
    cross-multiplication, which keeps the common denominator small for the
    orbits that arise here.
    """
    if not group.finite:
        raise ValueError("orbit sum requires a finite group")
    by_den: dict[LaurentPoly, LaurentPoly] = {}
    for g in group.elements:
        term = g.product()
        num = term.num if g.sign > 0 else -term.num
        if term.den in by_den:
            by_den[term.den] = by_den[term.den] + num
        else:
            by_den[term.den] = num
    parts = [RatFunc(num, den) for den, num in by_den.items()]
    parts.sort(key=lambda r: len(r.den.terms))
    total = parts[0]
    for r in parts[1:]:
        total = total + r
    return total


def orbit_sum_is_zero(group: GroupResult, prime: int = DEFAULT_PRIME, seed: int = 1) -> bool:
    """Exact zero test with a fast random-evaluation prefilter.

    A nonzero evaluation proves nonzero; the zero verdict always comes from
    the exact summed numerator.
    """
    rng = random.Random(seed)
    for _ in range(8):
        pt = tuple(rng.randrange(2, prime - 1) for _ in range(group.nvars))
        try:
            total = 0
            for g in group.elements:
                val = g.product().eval_mod(pt, prime)
                total = (total + (val if g.sign > 0 else -val)) % prime
            if total:
                return False
            break
        except ZeroDivisionError:
            continue
    return orbit_sum(group).is_zero()


# ---------------------------------------------------------------------------
# Extraction conditions
# ---------------------------------------------------------------------------

def _ring_condition_3d(coords, order: tuple[int, int, int]) -> str | None:
    """Which membership justifies dropping this orbit element, if any.

    order = (v1, v2, v3): v1 is extracted first.  The three rings are
    Q(v3,v2)[1/v1], Q(v3)[1/v2, v1] and Q[1/v3, v2, v1].
    """
    v1, v2, v3 = order

    def ok1(r: RatFunc) -> bool:
        return not r.den.involves(v1) and r.num.degrees(v1)[1] <= 0

    def ok2(r: RatFunc) -> bool:
        return (
            not r.den.involves(v1)
            and not r.den.involves(v2)
            and r.num.degrees(v2)[1] <= 0
            and r.num.degrees(v1)[0] >= 0
        )

    def ok3(r: RatFunc) -> bool:
        return (
            r.den.is_monomial()
            and r.as_poly().degrees(v3)[1] <= 0
            and r.as_poly().degrees(v2)[0] >= 0
            and r.as_poly().degrees(v1)[0] >= 0
        )

    if all(ok1(c) for c in coords):
        return f"negative-in-{AXIS_NAMES3[v1]}"
    if all(ok2(c) for c in coords):
        return f"negative-in-{AXIS_NAMES3[v2]}"
    if all(ok3(c) for c in coords):
        return f"negative-in-{AXIS_NAMES3[v3]}"
    return None


def _ring_condition_2d(coords, order: tuple[int, int]) -> str | None:
    v1, v2 = order

    def ok1(r: RatFunc) -> bool:
        return not r.den.involves(v1) and r.num.degrees(v1)[1] <= 0

    def ok2(r: RatFunc) -> bool:
        return (
            r.den.is_monomial()
            and r.as_poly().degrees(v2)[1] <= 0
            and r.as_poly().degrees(v1)[0] >= 0
        )

    if all(ok1(c) for c in coords):
        return f"negative-in-{AXIS_NAMES3[v1]}"
    if all(ok2(c) for c in coords):
        return f"negative-in-{AXIS_NAMES3[v2]}"
    return None


def extraction_safe_variable(coords) -> int | None:
    """A variable w with every coordinate free of w in the denominator and
    with non-positive w-exponents in the numerator.

    Such an element contributes no monomial with positive w-exponent under
    any expansion order, so it vanishes from the all-positive extraction.
    """
    nvars = coords[0].nvars
    for w in range(nvars):
        ok = True
        for r in coords:
            if r.den.involves(w) or r.num.degrees(w)[1] > 0:
                ok = False
                break
        if ok:
            return w
    return None


def nonpositive_total_degree(coords) -> bool:
    """Laurent-polynomial coordinates whose monomials all have total degree <= 0.

    This forces every monomial of the corresponding orbit-equation term to
    have total degree <= 0, so nothing survives the all-positive extraction.
    """
    for r in coords:
        if not r.den.is_monomial():
            return False
        if any(sum(e) > 0 for e in r.as_poly().terms):
            return False
    return True


def check_extraction(group: GroupResult, order: tuple[int, ...]) -> list[dict]:
    """Classify each non-identity orbit element against the ring conditions.

    Elements that satisfy no ring condition are flagged 'special'; those with
    non-positively graded Laurent coordinates are already safe and marked so.
    The remaining flagged elements feed the windowed support check in the
    verification layer.
    """
    out = []
    for g in group.elements:
        if g.length == 0:
            out.append({"element": g, "verdict": "identity"})
            continue
        ring = (
            _ring_condition_3d(g.coords, order)
            if group.nvars == 3
            else _ring_condition_2d(g.coords, order)
        )
        if ring is not None:
            out.append({"element": g, "verdict": ring})
        elif nonpositive_total_degree(g.coords):
            out.append({"element": g, "verdict": "nonpositive-degree"})
        else:
            out.append({"element": g, "verdict": "special"})
    return out
