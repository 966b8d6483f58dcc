"""Hadamard structure: S = (U x {0}^d2) ∪ (V x T) and count assembly.

A decomposition splits the step set, after a coordinate permutation, into a
block acting on the first d coordinates and a block on the rest, coupled
through a Cartesian product.  Octant counts then factor through a Hadamard
product: coloured walks on the first block graded by the number of black
steps, matched against T-walk counts of that length on the second block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .counting import ColouredCountTable, count_coloured, count_halfline, count_quadrant
from .steps import StepSet, QuadrantModel, Step


@dataclass(frozen=True)
class HadamardDecomposition:
    kind: tuple[int, int]  # (d, d2) with d + d2 = 3
    perm: tuple[int, int, int]  # applied to coordinates before splitting
    u_steps: tuple
    v_steps: tuple
    t_steps: tuple

    def to_json(self) -> dict:
        return {
            "kind": list(self.kind),
            "permutation": list(self.perm),
            "U": [list(s) for s in self.u_steps],
            "V": [list(s) for s in self.v_steps],
            "T": [list(s) for s in self.t_steps],
        }


def detect_hadamard(s: StepSet) -> list[HadamardDecomposition]:
    """All (1,2) and (2,1) decompositions over the six coordinate permutations."""
    out = []
    seen = set()
    steps = s.steps()
    if not steps:
        return []
    for perm in permutations(range(3)):
        permuted = [tuple(st[perm[i]] for i in range(3)) for st in steps]
        for d in (1, 2):
            u = set()
            rest = []
            for st in permuted:
                first, second = st[:d], st[d:]
                if all(c == 0 for c in second):
                    u.add(first)
                else:
                    rest.append((first, second))
            v = tuple(sorted({first for first, _ in rest}))
            t = tuple(sorted({second for _, second in rest}))
            if rest and set(rest) != {(a, b) for a in v for b in t}:
                continue
            if len(rest) != len(v) * len(t):
                continue
            dec = HadamardDecomposition((d, 3 - d), perm, tuple(sorted(u)), v, t)
            key = (dec.kind, dec.u_steps, dec.v_steps, dec.t_steps)
            if key not in seen:
                seen.add(key)
                out.append(dec)
    out.sort(key=lambda d: (d.kind, d.perm, d.u_steps, d.v_steps, d.t_steps))
    return out


def _t_counts(t_steps: tuple, dims: int, n_max: int):
    """c2(endpoint; k): T-walk counts in N^dims up to length n_max."""
    if dims == 1:
        table = count_halfline({s[0]: 1 for s in t_steps}, n_max)
        return lambda endpoint, k: (
            table[k][endpoint[0]] if 0 <= endpoint[0] <= n_max else 0
        )
    qm = QuadrantModel.of({s: 1 for s in t_steps})
    tab = count_quadrant(qm, n_max, keep_tables=True)
    return lambda endpoint, k: tab.count(endpoint, k)


def hadamard_assemble(dec: HadamardDecomposition, n_max: int) -> "AssembledTable":
    """Octant counts via the Hadamard product of the two block countings."""
    d = dec.kind[0]
    coloured = count_coloured(dec.u_steps, dec.v_steps, d, n_max)
    t_count = _t_counts(dec.t_steps, dec.kind[1], n_max)
    return AssembledTable(dec, coloured, t_count, n_max)


@dataclass
class AssembledTable:
    dec: HadamardDecomposition
    coloured: ColouredCountTable
    t_count: object
    n_max: int

    def count(self, endpoint: tuple[int, int, int], n: int) -> int:
        if n > self.n_max:
            raise IndexError("length beyond table")
        if any(x < 0 for x in endpoint):
            return 0
        perm = self.dec.perm
        permuted = tuple(endpoint[perm[i]] for i in range(3))
        d = self.dec.kind[0]
        first, second = permuted[:d], permuted[d:]
        total = 0
        for k in range(n + 1):
            c1 = self.coloured.count(first, n, k)
            if c1:
                total += c1 * self.t_count(second, k)
        return total
