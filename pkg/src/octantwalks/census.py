"""Census of models by cardinality, up to coordinate permutation.

Two independent routes that must agree coefficientwise:

* ``burnside_census``: brute force.  Averages, over the six coordinate
  permutations, the number of invariant step sets satisfying the predicate.
  Invariant sets of a permutation are enumerated as subsets of its step
  orbits (2^26 masks for the identity, 2^17 for a transposition, 2^10 for a
  3-cycle); the predicates are evaluated bitwise with numpy, no linear
  programming in the inner loop.
* ``appendix_polynomials``: closed-form inclusion-exclusion expressions in
  the bases (1+u)^i, (1+u^2)^j, (1+u^3)^j, evaluated as exact polynomial
  powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import steps as st

PREDICATES = ("no-unused-step", "dim<=1", "dim2or3")


@dataclass(frozen=True)
class CensusPolynomial:
    """Model counts by cardinality: coefficient of u^k = number of k-step models."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) > 27:
            raise ValueError("cardinality exceeds 26")

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if k < len(self.coefficients) else 0

    def total(self) -> int:
        return sum(self.coefficients)

    def range_total(self, lo: int, hi: int) -> int:
        return sum(self[k] for k in range(lo, hi + 1))

    def __add__(self, other: "CensusPolynomial") -> "CensusPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return CensusPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "CensusPolynomial") -> "CensusPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        out = tuple(self[k] - other[k] for k in range(n))
        while out and out[-1] == 0:
            out = out[:-1]
        return CensusPolynomial(out)

    def to_json(self) -> list[int]:
        return list(self.coefficients)


# -- bitwise predicates on arrays of 26-bit masks ---------------------------

def _any_bit(masks: np.ndarray, const: int) -> np.ndarray:
    return (masks & const) != 0


def _no_unused(masks: np.ndarray) -> np.ndarray:
    bad = np.zeros(masks.shape, dtype=bool)
    for v in range(3):
        bad |= _any_bit(masks, st.NEG_MASK[v]) & ~_any_bit(masks, st.POS_MASK[v])
    bad |= (masks != 0) & ~_any_bit(masks, st.NONNEG_MASK)
    for v in range(3):
        bad |= (
            _any_bit(masks, st.UNIT_MASK[v])
            & ~_any_bit(masks, st.SUMPOS_MASK[v])
            & _any_bit(masks, ~st.PAIR_MASK[v] & st.FULL_MASK3)
        )
    return ~bad


def _dim_le1(masks: np.ndarray) -> np.ndarray:
    ok = np.zeros(masks.shape, dtype=bool)
    for u in range(3):
        cond = np.ones(masks.shape, dtype=bool)
        for w in range(3):
            if w == u:
                continue
            cond &= ~(_any_bit(masks, st.NEG_MASK[w]) & _any_bit(masks, st.LT_MASK[w][u]))
        ok |= cond
    return ok


def _predicate(masks: np.ndarray, name: str) -> np.ndarray:
    if name == "no-unused-step":
        return _no_unused(masks)
    if name == "dim<=1":
        return _no_unused(masks) & _dim_le1(masks)
    if name == "dim2or3":
        return _no_unused(masks) & ~_dim_le1(masks)
    raise ValueError(f"unknown predicate {name!r}")


_POP16 = None


def _popcount(masks: np.ndarray) -> np.ndarray:
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(v).count("1") for v in range(1 << 16)], dtype=np.int64)
    return _POP16[masks & 0xFFFF] + _POP16[masks >> 16]


def _orbit_masks(perm_index: int) -> list[int]:
    """Step-orbit masks of the permutation PERMS3[perm_index]."""
    table = st.PERM_BIT[perm_index]
    seen = set()
    orbits = []
    for b in range(26):
        if b in seen:
            continue
        orbit = 0
        c = b
        while c not in seen:
            seen.add(c)
            orbit |= 1 << c
            c = table[c]
        orbits.append(orbit)
    return orbits


def _invariant_count(perm_index: int, predicate: str, chunk_bits: int = 22) -> np.ndarray:
    """Counts by cardinality of invariant masks satisfying the predicate."""
    counts = np.zeros(27, dtype=np.int64)
    if perm_index == 0:
        total = 1 << 26
        step = 1 << chunk_bits
        for start in range(0, total, step):
            masks = np.arange(start, start + step, dtype=np.int64)
            sel = masks[_predicate(masks, predicate)]
            counts += np.bincount(_popcount(sel), minlength=27)
        return counts
    orbits = _orbit_masks(perm_index)
    n = len(orbits)
    subsets = np.arange(1 << n, dtype=np.int64)
    masks = np.zeros(1 << n, dtype=np.int64)
    for i, om in enumerate(orbits):
        masks[(subsets >> i) & 1 == 1] |= om
    sel = masks[_predicate(masks, predicate)]
    counts += np.bincount(_popcount(sel), minlength=27)
    return counts


def burnside_census(predicate: str) -> CensusPolynomial:
    """(1/6) sum over permutations of invariant-model counts, by cardinality."""
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")
    total = np.zeros(27, dtype=np.int64)
    done: dict[tuple[int, ...], np.ndarray] = {}
    for p, perm in enumerate(st.PERMS3):
        # conjugate permutations have identical counts; compute one per cycle type
        key = tuple(sorted(_cycle_type(perm)))
        if key not in done:
            done[key] = _invariant_count(p, predicate)
        total += done[key]
    assert all(int(c) % 6 == 0 for c in total), "Burnside sum not divisible by 6"
    coeffs = tuple(int(c) // 6 for c in total)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return CensusPolynomial(coeffs)


def _cycle_type(perm: tuple[int, int, int]) -> list[int]:
    seen = set()
    lens = []
    for a in range(3):
        if a in seen:
            continue
        c, n = a, 0
        while c not in seen:
            seen.add(c)
            c = perm[c]
            n += 1
        lens.append(n)
    return lens


# -- appendix closed forms ---------------------------------------------------

def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ppow(base: list[int], n: int) -> list[int]:
    out = [1]
    for _ in range(n):
        out = _pmul(out, base)
    return out


def _padd(*ps: list[int]) -> list[int]:
    n = max(len(p) for p in ps)
    out = [0] * n
    for p in ps:
        for i, x in enumerate(p):
            out[i] += x
    return out


def _pscale(p: list[int], c: int) -> list[int]:
    return [c * x for x in p]


def _b1(i: int) -> list[int]:
    return _ppow([1, 1], i)


def _b2(j: int) -> list[int]:
    return _ppow([1, 0, 1], j)


def _b3(j: int) -> list[int]:
    return _ppow([1, 0, 0, 1], j)


def per_symmetry_series() -> dict[str, list[int]]:
    """The six inclusion-exclusion polynomials, one per predicate and symmetry."""
    u = [0, 1]
    u2 = [0, 0, 1]
    j_id = _padd(
        _b1(26), _pscale(_b1(19), -1), _pscale(_b1(17), -3), _pscale(_b1(14), 3),
        _pscale(_b1(11), 3), _pscale(_b1(10), -3), _pscale(_b1(8), 3), _pscale(_b1(5), -9),
        _pscale(_b1(4), 6), _pscale(_b1(2), 3), _pscale(_b1(1), -3), [1],
        _pscale(_pmul(u, _padd(_pscale(_b1(16), -1), _pscale(_b1(13), 2), _pscale(_b1(10), -1))), 3),
    )
    j_12 = _padd(
        _pmul(_b1(8), _b2(9)),
        _pscale(_pmul(_b1(5), _padd(_b2(7), _b2(6), _b2(3))), -1),
        _pmul(_b1(4), _padd(_b2(5), _b2(3))),
        _pmul(_b1(2), _padd(_b2(3), [1])),
        _pscale(_pmul(_b1(1), _padd(_b2(2), [1])), -1),
        [1],
        _pscale(_pmul(u, _pmul(_b1(4), _padd(_b2(6), _pscale(_b2(3), -1)))), -1),
    )
    j_123 = _padd(_pmul(_b1(2), _b3(8)), _pscale(_pmul(_b1(1), _b3(6)), -1), [1])

    sq = _pmul(_padd(_b1(2), [-1]), _padd(_b1(2), [-1]))
    k_id = _padd(
        _pscale(_b1(13), 3), _pscale(_b1(12), -3), _pscale(_b1(11), 9), _pscale(_b1(10), -6),
        _pscale(_b1(9), -6), _pscale(_b1(8), 3), _pscale(_b1(7), -2), _pscale(_b1(3), 3),
        _pscale(_pmul(u2, _b1(3)), -3), _pscale(_pmul(sq, _b1(1)), -3), u2,
    )
    k_12 = _padd(
        _pmul(_b1(5), _b2(3)), _pmul(_b1(5), _b2(4)), _pscale(_pmul(_b1(4), _b2(2)), -1),
        _pmul(_b1(1), _b2(1)), _pscale(_pmul(_b1(4), _b2(4)), -1),
        _pmul(u2, _b1(3)), _pmul(sq, _b1(1)), _pscale(u2, -1),
    )
    k_123 = _padd(_pmul(_b1(1), _b3(2)), u2)
    return {
        "J^id": j_id, "J^(1,2)": j_12, "J^(1,2,3)": j_123,
        "K^id": k_id, "K^(1,2)": k_12, "K^(1,2,3)": k_123,
    }


def appendix_polynomials() -> tuple[CensusPolynomial, CensusPolynomial, CensusPolynomial]:
    """(J, K, I): no-unused-step, dimension<=1, and dimension-2-or-3 counts."""
    s = per_symmetry_series()
    j6 = _padd(s["J^id"], _pscale(s["J^(1,2)"], 3), _pscale(s["J^(1,2,3)"], 2))
    k6 = _padd(s["K^id"], _pscale(s["K^(1,2)"], 3), _pscale(s["K^(1,2,3)"], 2))
    assert all(c % 6 == 0 for c in j6) and all(c % 6 == 0 for c in k6)
    j = CensusPolynomial(tuple(c // 6 for c in j6))
    kc = [c // 6 for c in k6]
    while kc and kc[-1] == 0:
        kc.pop()
    k = CensusPolynomial(tuple(kc))
    return j, k, j - k
