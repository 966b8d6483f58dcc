"""Algebraic power series: Newton solving, substitution, series division.

Solves P(Z; t) = 0 for the unique power series Z with a prescribed constant
term, under the simple-root condition dP/dZ(Z0; 0) != 0, by quadratic Newton
iteration with doubling t-adic precision.  Coefficients live in a Laurent
polynomial ring (no variables, or one or two walk variables), so the same
solver produces plain series like T(1-4T^2)=t and parametrised ones like
W(1-(1+y)W)=T^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, Coeff
from .series import TruncatedSeries


class NewtonError(ValueError):
    """Simple-root condition violated or residual check failed."""


def invert_t_unit(s: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series whose constant term is a nonzero rational."""
    c0 = s.coeff(0)
    if not c0.is_monomial() or c0.leading_key() != (0,) * s.nvars:
        raise ValueError("series unit must have a scalar constant term")
    inv0 = Fraction(1) / Fraction(c0.constant_term())
    n = s.order
    out = [LaurentPoly.zero(s.nvars) for _ in range(n + 1)]
    out[0] = LaurentPoly.const(s.nvars, inv0)
    for k in range(1, n + 1):
        acc = LaurentPoly.zero(s.nvars)
        for j in range(1, k + 1):
            acc = acc + s.coeff(j) * out[k - j]
        out[k] = acc.scale(-inv0)
    return TruncatedSeries(s.nvars, n, out, s.bounds)


def divide_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a/b where b = t^v * unit; requires a divisible by t^v."""
    v = b.t_valuation()
    if v is None:
        raise ZeroDivisionError("division by zero series")
    if v:
        b = b.t_shift(-v)
        a = a.t_shift(-v)
    return a.mul(invert_t_unit(b))


def poly_exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials; raises if d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError
    q = LaurentPoly.zero(p.nvars)
    rem = p
    lead_d = d.leading_key()
    cd = Fraction(d.terms[lead_d])
    guard = 0
    while not rem.is_zero():
        guard += 1
        if guard > 10000:
            raise ValueError("division does not terminate (not divisible)")
        lead_r = rem.leading_key()
        mono = tuple(a - b for a, b in zip(lead_r, lead_d))
        coeff = Fraction(rem.terms[lead_r]) / cd
        term = LaurentPoly.monomial(p.nvars, mono, coeff)
        q = q + term
        rem = rem - term * d
        if not rem.is_zero() and (sum(rem.leading_key()), rem.leading_key()) >= (sum(lead_r), lead_r):
            raise ValueError("not divisible")
    return q


def divide_series_by_poly(s: TruncatedSeries, d: LaurentPoly) -> TruncatedSeries:
    return TruncatedSeries(s.nvars, s.order, [poly_exact_divide(c, d) for c in s.coeffs], s.bounds)


@dataclass
class AlgebraicSeries:
    """A series together with the polynomial that pins it down."""

    poly: list[TruncatedSeries]  # coefficient of Z^i, as a series in t
    expansion: TruncatedSeries
    order: int

    def coeff(self, n: int) -> LaurentPoly:
        return self.expansion.coeff(n)


def _poly_eval(poly: list[TruncatedSeries], z: TruncatedSeries, order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(z.nvars, order)
    for c in reversed(poly):
        acc = acc.mul(z).truncate(order) + c.truncate(order)
    return acc


def _poly_derivative(poly: list[TruncatedSeries]) -> list[TruncatedSeries]:
    return [c.scale(i) for i, c in enumerate(poly) if i >= 1]


def solve_algebraic_series(poly, initial: Coeff, n: int) -> AlgebraicSeries:
    """The unique series Z with Z(0) = initial and P(Z; t) = 0 mod t^(n+1).

    `poly` lists the coefficients of Z^0, Z^1, ... as TruncatedSeries (or
    LaurentPolys / scalars, coerced).  Newton: Z <- Z - P(Z)/P'(Z) with
    doubling precision.  The residual is re-checked at full order.
    """
    coerced: list[TruncatedSeries] = []
    nvars = None
    for c in poly:
        if isinstance(c, TruncatedSeries):
            nvars = c.nvars
    if nvars is None:
        nvars = 0
    for c in poly:
        if isinstance(c, TruncatedSeries):
            coerced.append(c.truncate(n) if c.order > n else c)
        elif isinstance(c, LaurentPoly):
            coerced.append(TruncatedSeries.from_poly(c, n))
        else:
            coerced.append(TruncatedSeries.const(nvars, c, n))
    poly = [TruncatedSeries(nvars, c.order, c.coeffs, c.bounds) if c.order == n else
            TruncatedSeries(nvars, n, c.coeffs + [LaurentPoly.zero(nvars)] * (n - c.order), c.bounds)
            for c in coerced]

    z = TruncatedSeries.const(nvars, initial, n)
    p0 = _poly_eval(poly, z, 0)
    if not p0.coeff(0).is_zero():
        raise NewtonError("P(initial; 0) != 0")
    dpoly = _poly_derivative(poly)
    d0 = _poly_eval(dpoly, z, 0).coeff(0)
    if not d0.is_monomial() or d0.leading_key() != (0,) * nvars or d0.constant_term() == 0:
        raise NewtonError("dP/dZ at the initial point is not an invertible scalar")

    prec = 1
    while prec <= n:
        prec = min(2 * prec, n + 1)
        zc = z.truncate(prec - 1) if prec - 1 < z.order else z
        pz = _poly_eval(poly, z, prec - 1)
        dz = _poly_eval(dpoly, z, prec - 1)
        corr = divide_series(pz, dz)
        z = z - TruncatedSeries(nvars, n, corr.coeffs + [LaurentPoly.zero(nvars)] * (n - corr.order), corr.bounds)
    residual = _poly_eval(poly, z, n)
    if any(not c.is_zero() for c in residual.coeffs):
        raise NewtonError("nonzero residual after Newton iteration")
    return AlgebraicSeries(poly, z, n)


def series_sqrt(f: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term +1 (f must have constant term 1)."""
    n = f.order
    one = f.coeff(0)
    if not (one.is_monomial() and one.leading_key() == (0,) * f.nvars and one.constant_term() == 1):
        raise NewtonError("series sqrt requires constant term 1")
    sol = solve_algebraic_series([-f, TruncatedSeries.zero(f.nvars, n), 1], 1, n)
    return sol.expansion


def series_substitute(f: TruncatedSeries, g, n: int | None = None) -> TruncatedSeries:
    """f with its (single) walk variable replaced by the series g.

    f must be polynomial in its variable per t-degree; g must have zero
    constant term so that the composition truncates at finite order.
    """
    if isinstance(g, AlgebraicSeries):
        g = g.expansion
    if f.nvars != 1:
        raise ValueError("substitution source must have exactly one variable")
    if n is None:
        n = min(f.order, g.order)
    if not g.coeff(0).is_zero():
        raise ValueError("substituted series must have zero constant term")
    maxdeg = 0
    for p in f.coeffs[: n + 1]:
        for (e,) in p.terms:
            if e < 0:
                raise ValueError("substitution source must be polynomial in its variable")
            maxdeg = max(maxdeg, e)
    pows: list[TruncatedSeries] = [TruncatedSeries.const(g.nvars, 1, n)]
    for _ in range(maxdeg):
        pows.append(pows[-1].mul(g).truncate(n))
    out = TruncatedSeries.zero(g.nvars, n)
    for d, p in enumerate(f.coeffs[: n + 1]):
        if p.is_zero():
            continue
        part = TruncatedSeries.zero(g.nvars, n)
        for (e,), c in p.terms.items():
            part = part + pows[e].scale(c)
        out = out + part.t_shift(d)
    return out
