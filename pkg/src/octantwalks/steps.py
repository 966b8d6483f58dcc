"""Step sets on {-1,0,1}^3, their canonical codes, dimension, and projections.

The 26 nonzero steps are indexed lexicographically on (i,j,k) with
-1 < 0 < 1; this bit layout is frozen: canonical codes, stores and caches
all depend on it.  A model is a 26-bit mask.  Dimension is decided by exact
rational Fourier-Motzkin elimination on the three endpoint inequalities;
unused steps are removed by iterating the combinatorial removal rules to a
fixpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fm import cone_implies

Step = tuple[int, int, int]

#: Frozen step ordering: bit b <-> STEPS3[b].
STEPS3: tuple[Step, ...] = tuple(
    (i, j, k)
    for i in (-1, 0, 1)
    for j in (-1, 0, 1)
    for k in (-1, 0, 1)
    if (i, j, k) != (0, 0, 0)
)
STEP_INDEX3: dict[Step, int] = {s: b for b, s in enumerate(STEPS3)}
FULL_MASK3 = (1 << 26) - 1

#: The six coordinate permutations, in a fixed order (identity first).
PERMS3: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations((0, 1, 2)))

AXES = ("x", "y", "z")

Step2 = tuple[int, int]
STEPS2: tuple[Step2, ...] = tuple(
    (i, j) for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0)
)
STEP_INDEX2: dict[Step2, int] = {s: b for b, s in enumerate(STEPS2)}


def _mask_of(pred) -> int:
    m = 0
    for b, s in enumerate(STEPS3):
        if pred(s):
            m |= 1 << b
    return m


POS_MASK = tuple(_mask_of(lambda s, v=v: s[v] > 0) for v in range(3))
NEG_MASK = tuple(_mask_of(lambda s, v=v: s[v] < 0) for v in range(3))
NONNEG_MASK = _mask_of(lambda s: min(s) >= 0)
#: LT_MASK[a][b]: steps whose a-coordinate is smaller than their b-coordinate.
LT_MASK = tuple(tuple(_mask_of(lambda s, a=a, b=b: s[a] < s[b]) for b in range(3)) for a in range(3))
#: For condition C along axis v: the unit step e_v, the pair {e_v, -e_v},
#: steps whose other-coordinate sum is positive, and steps with a negative
#: other-coordinate (these are the ones flagged unused).
_UNIT = []
_PAIR = []
_SUMPOS = []
_NEGOTHER = []
for v in range(3):
    unit = tuple(1 if a == v else 0 for a in range(3))
    _UNIT.append(1 << STEP_INDEX3[unit])
    _PAIR.append(1 << STEP_INDEX3[unit] | 1 << STEP_INDEX3[tuple(-c for c in unit)])
    others = [a for a in range(3) if a != v]
    _SUMPOS.append(_mask_of(lambda s, o=others: s[o[0]] + s[o[1]] > 0))
    _NEGOTHER.append(_mask_of(lambda s, o=others: s[o[0]] < 0 or s[o[1]] < 0))
UNIT_MASK, PAIR_MASK, SUMPOS_MASK, NEGOTHER_MASK = tuple(_UNIT), tuple(_PAIR), tuple(_SUMPOS), tuple(_NEGOTHER)

#: PERM_BIT[p][b] = image bit of b under coordinate permutation PERMS3[p].
PERM_BIT = tuple(
    tuple(STEP_INDEX3[(s[perm[0]], s[perm[1]], s[perm[2]])] for s in STEPS3)
    for perm in PERMS3
)


def permute_mask(mask: int, p: int) -> int:
    out = 0
    table = PERM_BIT[p]
    while mask:
        b = (mask & -mask).bit_length() - 1
        out |= 1 << table[b]
        mask &= mask - 1
    return out


class ModelError(ValueError):
    """Malformed model text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class StepSet:
    """A set of steps encoded as a 26-bit mask over the frozen ordering."""

    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= FULL_MASK3:
            raise ValueError("mask out of range")

    @staticmethod
    def of(steps) -> "StepSet":
        m = 0
        for s in steps:
            m |= 1 << STEP_INDEX3[tuple(s)]
        return StepSet(m)

    def steps(self) -> tuple[Step, ...]:
        return tuple(STEPS3[b] for b in range(26) if self.mask >> b & 1)

    def __iter__(self):
        return iter(self.steps())

    def __contains__(self, step: Step) -> bool:
        return bool(self.mask >> STEP_INDEX3[tuple(step)] & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def permuted(self, p: int) -> "StepSet":
        return StepSet(permute_mask(self.mask, p))

    def without(self, steps) -> "StepSet":
        m = self.mask
        for s in steps:
            m &= ~(1 << STEP_INDEX3[tuple(s)])
        return StepSet(m)

    def render(self) -> str:
        chars = {-1: "-", 0: "0", 1: "+"}
        return ";".join("".join(chars[c] for c in s) for s in self.steps())

    def code_hex(self) -> str:
        return f"0x{canonical_code(self):07x}"

    def __repr__(self):
        return f"StepSet({self.render() or 'empty'})"


def parse_model(text: str) -> StepSet:
    """Parse either a ';'/','-separated list of 3-char steps or a 0x mask."""
    text = text.strip()
    if text.startswith("0x") or text.startswith("0X"):
        try:
            mask = int(text, 16)
        except ValueError:
            raise ModelError("malformed hexadecimal mask", 0) from None
        if not 0 <= mask <= FULL_MASK3:
            raise ModelError("mask out of range", 0)
        return StepSet(mask)
    values = {"-": -1, "0": 0, "+": 1}
    mask = 0
    pos = 0
    for token in text.replace(",", ";").split(";"):
        token = token.strip()
        if not token:
            pos += len(token) + 1
            continue
        if len(token) != 3:
            raise ModelError(f"step {token!r} is not 3 characters", pos)
        coords = []
        for off, ch in enumerate(token):
            if ch not in values:
                raise ModelError(f"malformed character {ch!r}", pos + off)
            coords.append(values[ch])
        step = tuple(coords)
        if step == (0, 0, 0):
            raise ModelError("step '000' is not allowed", pos)
        bit = 1 << STEP_INDEX3[step]
        if mask & bit:
            raise ModelError(f"duplicate step {token!r}", pos)
        mask |= bit
        pos += len(token) + 1
    return StepSet(mask)


def canonical_code(s: StepSet | int) -> int:
    """Minimum mask over the six coordinate permutations."""
    mask = s.mask if isinstance(s, StepSet) else s
    return min(permute_mask(mask, p) for p in range(6))


# ---------------------------------------------------------------------------
# Unused steps (combinatorial removal rules, iterated to a fixpoint)
# ---------------------------------------------------------------------------

def _flag_unused_once(mask: int) -> int:
    """Bits of steps flagged unused by one application of the removal rules."""
    if mask == 0:
        return 0
    flagged = 0
    for v in range(3):
        if mask & NEG_MASK[v] and not mask & POS_MASK[v]:
            flagged |= mask & NEG_MASK[v]
    if not mask & NONNEG_MASK:
        return mask  # every step has a negative coordinate: all unused
    for v in range(3):
        if (
            mask & UNIT_MASK[v]
            and not mask & SUMPOS_MASK[v]
            and mask & ~PAIR_MASK[v]
        ):
            flagged |= mask & NEGOTHER_MASK[v]
    return flagged


def unused_mask(mask: int) -> int:
    removed = 0
    while True:
        f = _flag_unused_once(mask)
        if not f:
            return removed
        removed |= f
        mask &= ~f


def unused_steps(s: StepSet) -> frozenset[Step]:
    m = unused_mask(s.mask)
    return frozenset(STEPS3[b] for b in range(26) if m >> b & 1)


def has_unused_step(mask: int) -> bool:
    return _flag_unused_once(mask) != 0


# ---------------------------------------------------------------------------
# Dimension
# ---------------------------------------------------------------------------

def lemma1d_check(s: StepSet, axis: int | str) -> bool:
    """True iff the other two octant conditions can be ignored for `axis`.

    Combinatorial test: for each other axis w, either there is no w-negative
    step, or every step has its w-coordinate >= the axis coordinate.
    """
    u = AXES.index(axis) if isinstance(axis, str) else axis
    mask = s.mask
    for w in range(3):
        if w == u:
            continue
        if mask & NEG_MASK[w] and mask & LT_MASK[w][u]:
            return False
    return True


@dataclass(frozen=True)
class DimensionAnalysis:
    dimension: int
    redundant_axes: frozenset[str]
    certificates: dict[str, tuple[int, ...]]
    alpha_beta: tuple[tuple[int, int, int], tuple[Fraction, Fraction]] | None

    @property
    def certificate(self) -> tuple[int, ...] | None:
        return next(iter(self.certificates.values()), None)


#: Small (alpha, beta) pairs observed to certify 2-dimensionality.
ALPHA_BETA_PAIRS: tuple[tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(a), Fraction(b))
    for a, b in [(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2)), (1, 2), (2, 1)]
)


def _axis_rows(steps: tuple[Step, ...], axis: int) -> tuple[int, ...]:
    return tuple(s[axis] for s in steps)


def _implied(steps: tuple[Step, ...], given: tuple[int, ...], axis: int):
    """Is the `axis` inequality implied, over a >= 0, by the `given` ones?"""
    ineqs = [_axis_rows(steps, g) for g in given]
    return cone_implies(ineqs, _axis_rows(steps, axis))


def alpha_beta_certificate(s: StepSet):
    """Search the small observed (alpha,beta) pairs, over all permutations.

    Returns (perm, (alpha, beta)) such that every permuted step satisfies
    k >= alpha*i + beta*j, or None.
    """
    for p, perm in enumerate(PERMS3):
        steps = [(st[perm[0]], st[perm[1]], st[perm[2]]) for st in s.steps()]
        for a, b in ALPHA_BETA_PAIRS:
            if all(k >= a * i + b * j for i, j, k in steps):
                return perm, (a, b)
    return None


def dimension(s: StepSet) -> DimensionAnalysis:
    """Exact dimension per the minimal-inequality definition.

    Requires a model without unused steps: strip them first, otherwise the
    inequality system does not describe the walks.
    """
    if has_unused_step(s.mask):
        raise ValueError("model has unused steps; remove them before the dimension test")
    steps = s.steps()
    if not steps or s.mask & ~NONNEG_MASK == 0:
        return DimensionAnalysis(0, frozenset(AXES), {}, None)

    redundant: set[str] = set()
    certificates: dict[str, tuple[int, ...]] = {}
    for axis in range(3):
        others = tuple(a for a in range(3) if a != axis)
        ok, cert = _implied(steps, others, axis)
        if ok:
            redundant.add(AXES[axis])
        else:
            certificates[AXES[axis]] = cert

    dim = 3
    if redundant:
        dim = 2
        # A single sufficient axis forces both other axes to be redundant,
        # so the d=1 test only makes sense when some axis is redundant.
        for axis in range(3):
            others = [a for a in range(3) if a != axis]
            if all(_implied(steps, (axis,), other)[0] for other in others):
                dim = 1
                break

    ab = alpha_beta_certificate(s) if dim == 2 else None
    return DimensionAnalysis(dim, frozenset(redundant), certificates, ab)


# ---------------------------------------------------------------------------
# Quadrant models (projections of 2D octant models; steps with multiplicity)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadrantModel:
    """A multiset of quadrant steps: ((step, weight), ...), weights >= 1."""

    weights: tuple[tuple[Step2, int], ...]
    dropped_null_steps: int = 0

    def __post_init__(self):
        if not self.weights:
            raise ValueError("quadrant model must have at least one step")
        if any(w < 1 for _, w in self.weights):
            raise ValueError("multiplicities must be >= 1")

    @staticmethod
    def of(weights: dict[Step2, int], dropped: int = 0) -> "QuadrantModel":
        return QuadrantModel(tuple(sorted(weights.items())), dropped)

    def weight_dict(self) -> dict[Step2, int]:
        return dict(self.weights)

    def steps(self) -> tuple[Step2, ...]:
        return tuple(s for s, _ in self.weights)

    @property
    def cardinality(self) -> int:
        return sum(w for _, w in self.weights)

    def is_multiplicity_free(self) -> bool:
        return all(w == 1 for _, w in self.weights)

    def swapped(self) -> "QuadrantModel":
        return QuadrantModel(
            tuple(sorted(((j, i), w) for (i, j), w in self.weights)),
            self.dropped_null_steps,
        )

    def canonical(self) -> "QuadrantModel":
        other = self.swapped()
        return self if self.weights <= other.weights else other

    def render(self) -> str:
        chars = {-1: "-", 0: "0", 1: "+"}
        parts = []
        for (i, j), w in self.weights:
            tok = chars[i] + chars[j]
            parts.append(tok if w == 1 else f"{tok}*{w}")
        return ";".join(parts)

    @staticmethod
    def parse(text: str) -> "QuadrantModel":
        values = {"-": -1, "0": 0, "+": 1}
        weights: dict[Step2, int] = {}
        for pos, token in enumerate(text.replace(",", ";").split(";")):
            token = token.strip()
            if not token:
                continue
            if "*" in token:
                stp, _, mult = token.partition("*")
                w = int(mult)
            else:
                stp, w = token, 1
            if len(stp) != 2 or any(ch not in values for ch in stp):
                raise ModelError(f"malformed quadrant step {token!r}", pos)
            step = (values[stp[0]], values[stp[1]])
            if step == (0, 0):
                raise ModelError("null quadrant step", pos)
            weights[step] = weights.get(step, 0) + w
        return QuadrantModel.of(weights)

    def __repr__(self):
        return f"QuadrantModel({self.render()})"


def project_to_quadrant(s: StepSet, redundant_axis: int | str) -> QuadrantModel:
    """Delete the redundant coordinate, accumulating multiplicities.

    Steps projecting to (0,0) are dropped and counted; the result is
    canonical under the x<->y swap.
    """
    axis = AXES.index(redundant_axis) if isinstance(redundant_axis, str) else redundant_axis
    steps = s.steps()
    others = tuple(a for a in range(3) if a != axis)
    ok, _ = _implied(steps, others, axis)
    if not ok:
        raise ValueError(f"axis {AXES[axis]} is not redundant for this model")
    weights: dict[Step2, int] = {}
    dropped = 0
    for st in steps:
        pr = (st[others[0]], st[others[1]])
        if pr == (0, 0):
            dropped += 1
        else:
            weights[pr] = weights.get(pr, 0) + 1
    return QuadrantModel.of(weights, dropped).canonical()


# -- quadrant-side analogues (for the multiplicity-free classification) -----

POS2 = tuple(sum(1 << b for b, s in enumerate(STEPS2) if s[v] > 0) for v in range(2))
NEG2 = tuple(sum(1 << b for b, s in enumerate(STEPS2) if s[v] < 0) for v in range(2))
NONNEG2 = sum(1 << b for b, s in enumerate(STEPS2) if min(s) >= 0)
LT2 = tuple(
    tuple(sum(1 << b for b, s in enumerate(STEPS2) if s[a] < s[c]) for c in range(2))
    for a in range(2)
)


def quadrant_unused_mask(mask: int) -> int:
    removed = 0
    while mask:
        flagged = 0
        for v in range(2):
            if mask & NEG2[v] and not mask & POS2[v]:
                flagged |= mask & NEG2[v]
        if not mask & NONNEG2:
            flagged = mask
        if not flagged:
            break
        removed |= flagged
        mask &= ~flagged
    return removed


def quadrant_dimension(mask: int) -> int:
    """Dimension of a multiplicity-free quadrant step set (0, 1 or 2)."""
    if mask & ~NONNEG2 == 0:
        return 0
    for u in range(2):
        w = 1 - u
        if not (mask & NEG2[w] and mask & LT2[w][u]):
            return 1
    return 2


def quadrant_models_multiplicity_free():
    """All nontrivial quadrant models without repeated steps, up to x<->y swap.

    Nontrivial means: no unused steps and dimension 2.
    """
    seen = set()
    out = []
    for mask in range(1, 1 << 8):
        if quadrant_unused_mask(mask) or quadrant_dimension(mask) != 2:
            continue
        qm = QuadrantModel.of({STEPS2[b]: 1 for b in range(8) if mask >> b & 1}).canonical()
        if qm.weights in seen:
            continue
        seen.add(qm.weights)
        out.append(qm)
    return sorted(out, key=lambda q: (q.cardinality, q.weights))


# ---------------------------------------------------------------------------
# Model enumeration
# ---------------------------------------------------------------------------

NAMED_FILTERS = {"no_unused", "dim2or3", "dim2", "dim3"}


@lru_cache(maxsize=None)
def canonical_masks(max_card: int) -> tuple[int, ...]:
    """Ascending canonical masks of cardinality <= max_card (one per class)."""
    import numpy as np

    lows = []
    highs = []
    for p in range(6):
        table = PERM_BIT[p]
        low = np.zeros(1 << 13, dtype=np.int64)
        high = np.zeros(1 << 13, dtype=np.int64)
        for b in range(13):
            low[(1 << b):(2 << b)] = low[: 1 << b] | (1 << table[b])
            high[(1 << b):(2 << b)] = high[: 1 << b] | (1 << table[b + 13])
        lows.append(low)
        highs.append(high)

    masks = [0] if max_card >= 0 else []
    for card in range(1, max_card + 1):
        for combo in itertools.combinations(range(26), card):
            m = 0
            for b in combo:
                m |= 1 << b
            masks.append(m)
    arr = np.array(masks, dtype=np.int64)
    best = arr.copy()
    for p in range(1, 6):
        np.minimum(best, lows[p][arr & 0x1FFF] | highs[p][arr >> 13], out=best)
    keep = np.sort(arr[arr == best])
    return tuple(int(v) for v in keep)


def enumerate_models(max_card: int, filters=()):
    """Canonical representatives with <= max_card steps, ascending code.

    `filters` is an iterable of names from NAMED_FILTERS and/or callables
    on StepSet.  Nothing is yielded twice; every yielded mask is a fixpoint
    of canonical_code.
    """
    if not 0 <= max_card <= 26:
        raise ValueError("max_card must be between 0 and 26")
    named = {f for f in filters if isinstance(f, str)}
    unknown = named - NAMED_FILTERS
    if unknown:
        raise ValueError(f"unknown filters: {sorted(unknown)}")
    callables = [f for f in filters if not isinstance(f, str)]
    want_dim = {"dim2or3", "dim2", "dim3"} & named

    for mask in canonical_masks(max_card):
        if ("no_unused" in named or want_dim) and has_unused_step(mask):
            continue
        s = StepSet(mask)
        if want_dim:
            # Lemma-based prefilter: dimension <= 1 iff one axis suffices.
            if any(lemma1d_check(s, a) for a in range(3)):
                continue
            if want_dim & {"dim2", "dim3"}:
                d = dimension(s).dimension
                if "dim2" in named and d != 2:
                    continue
                if "dim3" in named and d != 3:
                    continue
        if all(f(s) for f in callables):
            yield s
