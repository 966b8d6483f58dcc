"""Exact rational functions in the walk variables, without polynomial GCDs.

A RatFunc is a pair of Laurent polynomials.  Normalisation is deliberately
cheap and canonical-enough for deduplication: the denominator's monomial
content is pushed into the numerator, both parts are divided by the
denominator's rational content, and the denominator's graded-lex leading
coefficient is made positive.  Equality is decided by cross-multiplication
(a*d - b*c == 0), never by GCD reduction.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, Coeff


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, normalise: bool = True):
        if den is None:
            den = LaurentPoly.const(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        self._hash = None
        if normalise:
            self._normalise()

    def _normalise(self) -> None:
        den = self.den
        num = self.num
        mc = den.monomial_content()
        if any(mc):
            neg = tuple(-x for x in mc)
            den = den.shift(neg)
            num = num.shift(neg)
        c = den.content()
        if den.leading_coeff() < 0:
            c = -c
        if c != 1:
            inv = 1 / Fraction(c)
            den = den.scale(inv)
            num = num.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p, None, normalise=False)

    @staticmethod
    def const(nvars: int, c: Coeff) -> "RatFunc":
        return RatFunc(LaurentPoly.const(nvars, c), None, normalise=False)

    @staticmethod
    def var(nvars: int, i: int, power: int = 1) -> "RatFunc":
        return RatFunc(LaurentPoly.var(nvars, i, power), None, normalise=False)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_monomial()

    def as_poly(self) -> LaurentPoly:
        """The Laurent polynomial self equals, when the denominator is a monomial."""
        if not self.den.is_monomial():
            raise ValueError("denominator is not a monomial")
        ((e, c),) = self.den.terms.items()
        return self.num.shift(tuple(-x for x in e)).scale(1 / Fraction(c))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, normalise=False)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num.scale(other), self.den, normalise=False)
        if isinstance(other, LaurentPoly):
            return RatFunc(self.num * other, self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inv()

    # -- equality ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = RatFunc.from_poly(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num.is_zero():
            return other.num.is_zero()
        return (self.num * other.den - other.num * self.den).is_zero()

    def structurally_equal(self, other: "RatFunc") -> bool:
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        # Hash of the normalised pair; equal-but-unreduced fractions may
        # hash differently, which only costs an extra exact comparison.
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def eval_mod(self, point: tuple[int, ...], p: int) -> int:
        d = self.den.eval_mod(point, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval_mod(point, p) * pow(d, p - 2, p) % p

    def eval_fractions(self, point: tuple[Fraction, ...]) -> Fraction:
        d = self.den.eval_fractions(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval_fractions(point) / d

    def subs(self, images: list["RatFunc"]) -> "RatFunc":
        """Substitute images[v] for variable v (monomial-by-monomial)."""
        num_out = RatFunc.const(self.nvars, 0)
        den_out = RatFunc.const(self.nvars, 0)
        cache: dict[tuple[int, int], RatFunc] = {}

        def power(v: int, e: int) -> RatFunc:
            key = (v, e)
            if key not in cache:
                base = images[v]
                r = RatFunc.const(self.nvars, 1)
                b = base if e > 0 else base.inv()
                for _ in range(abs(e)):
                    r = r * b
                cache[key] = r
            return cache[key]

        for poly, acc in ((self.num, "num"), (self.den, "den")):
            total = RatFunc.const(self.nvars, 0)
            for e, c in poly.terms.items():
                term = RatFunc.const(self.nvars, c)
                for v, x in enumerate(e):
                    if x:
                        term = term * power(v, x)
                total = total + term
            if acc == "num":
                num_out = total
            else:
                den_out = total
        return num_out / den_out

    def render(self, names: tuple[str, ...] | None = None) -> str:
        if self.den.is_monomial() and self.den.constant_term() == 1:
            return self.num.render(names)
        return f"({self.num.render(names)}) / ({self.den.render(names)})"

    __repr__ = __str__ = lambda self: f"RatFunc({self.render()})"
