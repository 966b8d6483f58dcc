"""Sparse multivariate Laurent polynomials with exact coefficients.

Coefficients are Python ints or Fractions; terms with coefficient zero are
never stored, so equality is structural.  Exponent vectors are plain tuples,
one slot per variable.  The number of variables is fixed per polynomial:
walk variables only (2 or 3 of them); the series layer adds the time
variable t on top of this class rather than inside it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Coeff = int | Fraction
Expo = tuple[int, ...]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """Mapping from integer exponent vectors to exact rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: dict[Expo, Coeff] | None = None):
        self.nvars = nvars
        self.terms: dict[Expo, Coeff] = terms if terms is not None else {}
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars)

    @staticmethod
    def const(nvars: int, c: Coeff) -> "LaurentPoly":
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly(nvars)
        return LaurentPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def monomial(nvars: int, expo: Expo, c: Coeff = 1) -> "LaurentPoly":
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly(nvars)
        return LaurentPoly(nvars, {tuple(expo): c})

    @staticmethod
    def var(nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return LaurentPoly(nvars, {tuple(e): 1})

    def copy(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, dict(self.terms))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * self.nvars, 0)

    def coeff(self, expo: Expo) -> Coeff:
        return self.terms.get(tuple(expo), 0)

    def degrees(self, var: int) -> tuple[int, int]:
        """(min, max) exponent of variable `var`; (0, 0) for the zero poly."""
        if not self.terms:
            return (0, 0)
        es = [e[var] for e in self.terms]
        return (min(es), max(es))

    def involves(self, var: int) -> bool:
        return any(e[var] for e in self.terms)

    def support_box(self) -> tuple[tuple[int, int], ...]:
        if not self.terms:
            return tuple((0, 0) for _ in range(self.nvars))
        return tuple(self.degrees(v) for v in range(self.nvars))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        big, small = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = _norm_coeff(s)
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly(self.nvars)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Expo, Coeff] = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        for e in list(out):
            out[e] = _norm_coeff(out[e])
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "LaurentPoly":
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly(self.nvars)
        return LaurentPoly(self.nvars, {e: _norm_coeff(v * c) for e, v in self.terms.items()})

    def shift(self, expo: Expo) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector `expo`."""
        if all(x == 0 for x in expo):
            return self
        return LaurentPoly(self.nvars, {tuple(a + b for a, b in zip(e, expo)): c for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_monomial():
                ((e, c),) = self.terms.items()
                cc = Fraction(1, 1) / Fraction(c) ** (-n)
                return LaurentPoly.monomial(self.nvars, tuple(n * x for x in e), cc)
            raise ValueError("negative powers only for monomials")
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- normalisation helpers ----------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer, coprime coefficients."""
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            f = Fraction(c)
            num_gcd = gcd(num_gcd, abs(f.numerator))
            den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
        return Fraction(num_gcd, den_lcm)

    def monomial_content(self) -> Expo:
        """Per-variable minimum exponent over the support."""
        if not self.terms:
            return (0,) * self.nvars
        mins = [None] * self.nvars
        for e in self.terms:
            for v, x in enumerate(e):
                if mins[v] is None or x < mins[v]:
                    mins[v] = x
        return tuple(mins)

    def leading_key(self) -> Expo:
        """Graded-lexicographic leading exponent (total degree, then lex)."""
        return max(self.terms, key=lambda e: (sum(e), e))

    def leading_coeff(self) -> Coeff:
        return self.terms[self.leading_key()]

    # -- evaluation ----------------------------------------------------

    def eval_mod(self, point: tuple[int, ...], p: int) -> int:
        """Evaluate at nonzero residues mod p (negative exponents allowed)."""
        invs = [pow(x, p - 2, p) for x in point]
        total = 0
        for e, c in self.terms.items():
            t = 1
            for v, x in enumerate(e):
                if x > 0:
                    t = t * pow(point[v], x, p) % p
                elif x < 0:
                    t = t * pow(invs[v], -x, p) % p
            f = Fraction(c)
            cv = f.numerator % p
            if f.denominator != 1:
                cv = cv * pow(f.denominator % p, p - 2, p) % p
            total = (total + cv * t) % p
        return total

    def eval_fractions(self, point: tuple[Fraction, ...]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(1)
            for v, x in enumerate(e):
                t *= point[v] ** x
            total += Fraction(c) * t
        return total

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset((e, Fraction(c)) for e, c in self.terms.items())))
        return self._hash

    # -- rendering ------------------------------------------------------

    def render(self, names: tuple[str, ...] | None = None) -> str:
        """ASCII form like '2*x^-1*y^2 - 3' with graded-lex term order."""
        if not self.terms:
            return "0"
        if names is None:
            names = ("x", "y", "z", "t", "v")[: self.nvars]
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                f"{names[v]}^{x}" if x != 1 else names[v]
                for v, x in enumerate(e) if x != 0
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    __repr__ = __str__ = lambda self: f"LaurentPoly({self.render()})"

    def to_json(self) -> list:
        """JSON-friendly dump: sorted (exponent vector, rational string) pairs."""
        return [[list(e), str(Fraction(c))] for e, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(nvars: int, data: list) -> "LaurentPoly":
        return LaurentPoly(nvars, {tuple(e): _norm_coeff(Fraction(c)) for e, c in data})


def try_exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly | None:
    """p/d when d divides p exactly, else None.

    Leading-term elimination under the graded-lex order.  With the divisor
    shifted to min-exponent 0 per variable, an exact quotient never dips
    below p's own per-variable minimum exponents; crossing that floor
    certifies non-divisibility and bounds the descent.
    """
    if d.is_zero():
        raise ZeroDivisionError
    if p.is_zero():
        return p
    if d.is_monomial():
        ((e, c),) = d.terms.items()
        return p.shift(tuple(-x for x in e)).scale(Fraction(1) / Fraction(c))
    shift = d.monomial_content()
    if any(shift):
        d = d.shift(tuple(-x for x in shift))
    floor = p.monomial_content()
    lead_d = d.leading_key()
    cd = Fraction(d.terms[lead_d])
    q: dict[tuple[int, ...], Coeff] = {}
    rem = p
    while not rem.is_zero():
        lead_r = rem.leading_key()
        if any(x < f for x, f in zip(lead_r, floor)):
            return None
        mono = tuple(a - b for a, b in zip(lead_r, lead_d))
        coeff = _norm_coeff(Fraction(rem.terms[lead_r]) / cd)
        q[mono] = coeff
        rem = rem - LaurentPoly.monomial(p.nvars, mono, coeff) * d
    if any(shift):
        return LaurentPoly(p.nvars, q).shift(tuple(-x for x in shift))
    return LaurentPoly(p.nvars, q)
