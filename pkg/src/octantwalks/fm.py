"""Exact Fourier-Motzkin elimination over the rationals.

Used to decide, bit-exactly, whether one octant inequality is implied by the
others over non-negative step multiplicities.  Every constraint is an integer
row (c0, c1, ..., cm) encoding c0 + sum(ci * ai) >= 0; elimination combines
rows with integer cross-multiplication, so no floating point ever enters.
Feasible systems yield an explicit rational point by back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = tuple[int, ...]

_ROW_CAP = 100_000


def _reduce_row(row: Row) -> Row:
    g = 0
    for c in row:
        g = gcd(g, abs(c))
    if g > 1:
        row = tuple(c // g for c in row)
    return row


def fm_feasible(rows: list[Row], nvars: int) -> list[Fraction] | None:
    """A rational solution of {c0 + sum ci*ai >= 0}, or None if infeasible."""
    levels: list[list[Row]] = []
    current = [_reduce_row(tuple(r)) for r in rows]
    for var in range(nvars, 0, -1):
        levels.append(current)
        pos, neg, zero = [], [], []
        for r in current:
            c = r[var]
            if c > 0:
                pos.append(r)
            elif c < 0:
                neg.append(r)
            else:
                zero.append(r)
        nxt = set(zero)
        for rp in pos:
            cp = rp[var]
            for rn in neg:
                cn = -rn[var]
                combined = tuple(cn * a + cp * b for a, b in zip(rp, rn))
                nxt.add(_reduce_row(combined[:var] + (0,) * (nvars - var + 1)))
        if len(nxt) > _ROW_CAP:
            raise RuntimeError("Fourier-Motzkin blow-up")
        current = [r for r in nxt if any(r[1:]) or r[0] < 0]
        if any(r[0] < 0 and not any(r[1:]) for r in current):
            return None
    if any(r[0] < 0 for r in current):
        return None

    # Back-substitute: levels[k] is the system before eliminating variable
    # nvars - k, and involves variables 1..nvars-k only.  Assign ascending,
    # choosing each value inside its feasible interval.
    point: list[Fraction] = [Fraction(0)] * nvars
    for var in range(1, nvars + 1):
        system = levels[nvars - var]
        lo, hi = None, None
        for r in system:
            c = r[var]
            if c == 0:
                continue
            rest = Fraction(r[0]) + sum(Fraction(r[j]) * point[j - 1] for j in range(1, var))
            bound = -rest / c
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None:
            point[var - 1] = lo
        elif hi is not None:
            point[var - 1] = min(hi, Fraction(0))
        else:
            point[var - 1] = Fraction(0)
    return point


def cone_implies(ineqs: list[tuple[int, ...]], target: tuple[int, ...]) -> tuple[bool, tuple[int, ...] | None]:
    """Does target.a >= 0 hold whenever a >= 0 and each ineq.a >= 0?

    All forms are homogeneous; by scaling, a rational counterexample exists
    iff an integer one does.  Returns (True, None) or (False, certificate)
    with an integer certificate tuple violating only the target.
    """
    m = len(target)
    rows: list[Row] = []
    for i in range(m):
        rows.append(tuple([0] + [1 if j == i else 0 for j in range(m)]))
    for q in ineqs:
        rows.append((0,) + tuple(q))
    rows.append((-1,) + tuple(-c for c in target))
    point = fm_feasible(rows, m)
    if point is None:
        return True, None
    lcm = 1
    for x in point:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    cert = tuple(int(x * lcm) for x in point)
    assert all(c >= 0 for c in cert)
    assert sum(c * t for c, t in zip(cert, target)) < 0
    assert all(sum(c * q[i] for i, c in enumerate(cert)) >= 0 for q in ineqs)
    return False, cert
