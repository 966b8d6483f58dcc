"""P-recursive recurrence guessing over a prime field.

Fits sum_i p_i(n) a(n+i) = 0 with polynomial coefficients by solving a
structured nullspace modulo a large prime, sweeping (order, degree) cells
staircase-wise.  A candidate found on the fit window must also hold on a
trailing margin before it is surfaced; callers re-verify on held-out terms.
Guessing modulo two primes and comparing the rationally-lifted coefficient
vectors guards against unlucky primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .modp import DEFAULT_PRIME, rational_reconstruct

MARGIN = 10


@dataclass
class RecurrenceCandidate:
    order: int
    degree: int
    coeffs: list[list[int]]  # coeffs[i][d] = coefficient of n^d in p_i, mod prime
    prime: int
    source: str = ""

    def poly_value(self, i: int, n: int) -> int:
        total = 0
        for d in reversed(range(self.degree + 1)):
            total = (total * n + self.coeffs[i][d]) % self.prime
        return total

    def holds_at(self, seq: list[int], n: int) -> bool:
        total = 0
        for i in range(self.order + 1):
            total = (total + self.poly_value(i, n) * (seq[n + i] % self.prime)) % self.prime
        return total == 0

    def lifted(self) -> list[list[Fraction]] | None:
        """Rational lift, normalised so the first nonzero coefficient is 1."""
        flat = [c for row in self.coeffs for c in row]
        pivot = next((c for c in flat if c), None)
        if pivot is None:
            return None
        inv = pow(pivot, self.prime - 2, self.prime)
        out = []
        for row in self.coeffs:
            lifted_row = []
            for c in row:
                r = rational_reconstruct(c * inv % self.prime, self.prime)
                if r is None:
                    return None
                lifted_row.append(Fraction(*r))
            out.append(lifted_row)
        return out


def _nullspace_mod(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the right nullspace of the matrix, modulo p."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][c] % p:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(v * inv) % p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-mat[i][fc]) % p
        basis.append(vec)
    return _rref(basis, p)


def _rref(rows: list[list[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form; canonicalises a nullspace across primes."""
    mat = [row[:] for row in rows]
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(v * inv) % p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return mat


def guess_precursive(seq: list[int], r_max: int, d_max: int, prime: int = DEFAULT_PRIME, source: str = "") -> list[RecurrenceCandidate]:
    """Minimal verified recurrence candidates, staircase order (r+d, then r).

    Each (r, d) cell needs (r+1)(d+1) + r + MARGIN terms: the nullspace is
    solved on all but the last MARGIN usable indices, and a candidate is kept
    only if it also holds there.
    """
    cells = sorted(
        ((r, d) for r in range(1, r_max + 1) for d in range(d_max + 1)),
        key=lambda rd: (rd[0] + rd[1], rd[0], rd[1]),
    )
    out: list[RecurrenceCandidate] = []
    frontier: set[tuple[int, int]] = set()
    for r, d in cells:
        if any(r >= fr and d >= fd for fr, fd in frontier):
            continue
        unknowns = (r + 1) * (d + 1)
        needed = unknowns + r + MARGIN
        if len(seq) < needed:
            if not out and (r, d) == cells[-1]:
                raise ValueError(
                    f"need at least {needed} terms for order {r}, degree {d}; got {len(seq)}"
                )
            continue
        usable = len(seq) - r
        fit_rows = usable - MARGIN
        rows = []
        for n in range(fit_rows):
            row = []
            for i in range(r + 1):
                a = seq[n + i] % prime
                v = 1
                for dd in range(d + 1):
                    row.append((a * v) % prime)
                    v = (v * n) % prime
            rows.append(row)
        for vec in _nullspace_mod(rows, unknowns, prime):
            coeffs = [vec[i * (d + 1):(i + 1) * (d + 1)] for i in range(r + 1)]
            cand = RecurrenceCandidate(r, d, coeffs, prime, source)
            if all(c == 0 for c in coeffs[r]):
                continue
            if all(cand.holds_at(seq, n) for n in range(fit_rows, usable)):
                out.append(cand)
                frontier.add((r, d))
                break
    out.sort(key=lambda c: (c.order + c.degree, c.order, c.degree))
    return out


def verify_candidate(cand: RecurrenceCandidate, seq: list[int]) -> bool:
    """Does the recurrence hold at every index where all terms exist?"""
    usable = len(seq) - cand.order
    return all(cand.holds_at(seq, n) for n in range(usable))


def prime_stable(c1: RecurrenceCandidate, c2: RecurrenceCandidate) -> bool:
    """Same shape and proportional coefficient vectors across two primes."""
    if (c1.order, c1.degree) != (c2.order, c2.degree):
        return False
    l1, l2 = c1.lifted(), c2.lifted()
    return l1 is not None and l1 == l2
