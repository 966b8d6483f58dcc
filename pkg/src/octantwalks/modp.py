"""Prime-field helpers shared by the fingerprinting, counting and guessing code."""

from __future__ import annotations

import random

#: Default 62-bit prime used for modular counting, fingerprints and guessing.
DEFAULT_PRIME = 2**62 - 57


def mod_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 mod p")
    return pow(a, p - 2, p)


def random_point(nvars: int, p: int, rng: random.Random) -> tuple[int, ...]:
    """A tuple of nonzero residues, suitable as an evaluation point."""
    return tuple(rng.randrange(2, p - 1) for _ in range(nvars))


def rational_reconstruct(a: int, p: int) -> tuple[int, int] | None:
    """Lift a residue to a rational n/d with |n|, d <= sqrt(p/2), if one exists.

    Standard half-extended Euclid (Wang's algorithm).  Returns None when no
    small fraction is congruent to a mod p.
    """
    a %= p
    if a == 0:
        return 0, 1
    bound = int((p // 2) ** 0.5)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    from math import gcd

    if gcd(r1, s1) != 1:
        return None
    return r1, s1
