"""Independent brute-force oracles the library code is checked against.

These are deliberately dumb: exhaustive walk enumeration and breadth-first
reachability, no recurrences, no symbolic machinery.
"""

from __future__ import annotations

import numpy as np


def enumerate_walk_count(steps, endpoint, length, dims=3):
    """Number of confined walks to `endpoint` of exact `length`, by DFS."""
    steps = [tuple(s) for s in steps]
    target = tuple(endpoint)
    reach = max(sum(abs(c) for c in s) for s in steps)

    def rec(pos, remaining):
        if remaining == 0:
            return 1 if pos == target else 0
        # prune: the L1 gap shrinks by at most `reach` per step
        if sum(abs(a - b) for a, b in zip(pos, target)) > remaining * reach:
            return 0
        total = 0
        for s in steps:
            new = tuple(p + c for p, c in zip(pos, s))
            if all(c >= 0 for c in new):
                total += rec(new, remaining - 1)
        return total

    return rec((0,) * dims, length)


def used_steps_oracle(steps, max_len=16):
    """Steps occurring in some confined walk of length <= max_len.

    Reachable positions are tracked on a dense grid; a step is used as soon
    as it can be played from any position reachable strictly earlier.
    """
    steps = [tuple(s) for s in steps]
    if not steps:
        return set()
    dims = len(steps[0])
    size = max_len + 1
    reach = np.zeros((size,) * dims, dtype=bool)
    reach[(0,) * dims] = True
    cumulative = reach.copy()
    used = set()
    for _ in range(max_len):
        new = np.zeros_like(reach)
        for s in steps:
            dst = tuple(slice(max(c, 0), size + min(c, 0)) for c in s)
            src = tuple(slice(max(-c, 0), size + min(-c, 0)) for c in s)
            moved = cumulative[src]
            if moved.any():
                used.add(s)
            new[dst] |= moved
        if not (new & ~cumulative).any():
            break
        cumulative |= new
    return used
