from fractions import Fraction

import pytest

from octantwalks.laurent import LaurentPoly
from octantwalks.newton import (
    NewtonError,
    divide_series,
    invert_t_unit,
    poly_exact_divide,
    series_sqrt,
    series_substitute,
    solve_algebraic_series,
)
from octantwalks.series import (
    TruncatedSeries,
    WindowError,
    expand_ratfunc,
    invert_unit,
    positive_part,
)
from octantwalks.verify import solve_s_series, solve_t_series, solve_w_series, solve_z_series


def t_only(parts, order):
    return TruncatedSeries.from_t_poly(0, {k: LaurentPoly.const(0, v) for k, v in parts.items()}, order)


def test_positive_part_basic():
    f = TruncatedSeries.from_poly(LaurentPoly(1, {(-1,): 1, (0,): 1, (1,): 1}), 0)
    p = positive_part(f, 0)
    assert p.coeff(0) == LaurentPoly(1, {(1,): 1})
    assert positive_part(p, 0).coeff(0) == p.coeff(0)
    # complement restores the original
    rest = f - p
    assert (rest + p).coeff(0) == f.coeff(0)


def test_expand_geometric_kernel():
    # 1/(1 - t(x + 1/x)) to order 2
    num = LaurentPoly.const(2, 1)
    den = LaurentPoly(2, {(0, 0): 1, (1, 1): -1, (-1, 1): -1})
    s = expand_ratfunc(num, den, order=(0,), n=2, window=8, t_var=1)
    assert s.coeff(0) == LaurentPoly.const(1, 1)
    assert s.coeff(1) == LaurentPoly(1, {(1,): 1, (-1,): 1})
    assert s.coeff(2) == LaurentPoly(1, {(2,): 1, (0,): 2, (-2,): 1})


def test_expand_one_over_one_plus_x_squared():
    inv = invert_unit(LaurentPoly(1, {(0,): 1, (2,): 1}), (0,), ((-6, 6),))
    assert inv.coeffs[0] == LaurentPoly(1, {(0,): 1, (2,): -1, (4,): 1, (6,): -1})


def test_expand_laurent_polynomial_verbatim():
    poly = LaurentPoly(2, {(1, 0): 3, (-2, 0): Fraction(1, 2)})
    s = expand_ratfunc(poly, None, order=(0,), n=3, window=9, t_var=1)
    assert s.coeff(0) == LaurentPoly(1, {(1,): 3, (-2,): Fraction(1, 2)})
    assert all(s.coeff(k).is_zero() for k in (1, 2, 3))


def test_invert_unit_mixed_tail_product_check():
    # 1/(ybar + y(x + xbar)): mixed sign in x, coupled through y
    den = LaurentPoly(2, {(0, -1): 1, (1, 1): 1, (-1, 1): 1})
    inv = invert_unit(den, (1, 0), ((-8, 8), (-8, 8)))
    check = inv.coeffs[0] * den
    inside = {e: c for e, c in check.terms.items() if all(abs(x) <= 5 for x in e)}
    assert inside == {(0, 0): 1}


def test_window_guarantee_enforced():
    den = LaurentPoly(1, {(0,): 1, (1,): 1})
    inv = invert_unit(den, (0,), ((-3, 3),))
    s = inv.mul(TruncatedSeries.from_poly(LaurentPoly(1, {(-2,): 1}), 0))
    # guarantee narrowed to 3 - 2 = 1; asking beyond raises
    with pytest.raises(WindowError):
        s.term(0, (2,))
    assert s.term(0, (1,)) == -1  # (-1)^3 from the expansion of 1/(1+x), shifted


def test_t_series_inverse_and_division():
    s = t_only({0: 1, 1: -3}, 8)
    inv = invert_t_unit(s)
    prod = s.mul(inv)
    assert prod.coeff(0).constant_term() == 1
    assert all(prod.coeff(k).is_zero() for k in range(1, 9))
    shifted = s.t_shift(2)
    back = divide_series(shifted, t_only({2: 1}, 8))
    assert back.order == 6
    assert back.coeff(0).constant_term() == 1
    assert back.coeff(1).constant_term() == -3


def test_poly_exact_divide():
    x = LaurentPoly.var(1, 0)
    p = LaurentPoly(1, {(2,): 1, (0,): -1})
    assert poly_exact_divide(p, x - LaurentPoly.const(1, 1)) == x + LaurentPoly.const(1, 1)
    with pytest.raises(ValueError):
        poly_exact_divide(LaurentPoly(1, {(2,): 1, (0,): 1}), x - LaurentPoly.const(1, 1))


def test_newton_solver_examples():
    t = solve_t_series(13)
    vals = [t.coeff(k).constant_term() for k in range(8)]
    assert vals == [0, 1, 0, 4, 0, 48, 0, 768]
    z = solve_z_series(8)
    assert [z.coeff(k).constant_term() for k in range(6)] == [0, 0, 1, 0, 9, 0]


def test_newton_residuals_at_60():
    # the four parametrising series all satisfy their equations mod t^61;
    # solve_algebraic_series re-checks the residual internally and raises
    solve_t_series(60)
    solve_s_series(60)
    solve_z_series(60)
    solve_w_series(60)


def test_newton_rejects_bad_initial():
    t1 = t_only({1: 1}, 6)
    with pytest.raises(NewtonError):
        solve_algebraic_series([-t1, 0, 1], 0, 6)  # Z^2 = t has no simple root at 0


def test_series_sqrt_binomial():
    f = t_only({0: 1, 1: 1}, 6)
    r = series_sqrt(f)
    vals = [r.coeff(k).constant_term() for k in range(5)]
    assert vals == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128)]
    assert (r.mul(r)).coeff(1).constant_term() == 1


def test_series_substitute():
    fx = TruncatedSeries.from_t_poly(1, {0: LaurentPoly.const(1, 1), 1: LaurentPoly.var(1, 0)}, 6)
    g = t_only({1: 1}, 6)
    out = series_substitute(fx, g)
    assert out.coeff(0).constant_term() == 1
    assert out.coeff(2).constant_term() == 1
    assert out.coeff(1).is_zero()
    ident = TruncatedSeries.from_t_poly(1, {0: LaurentPoly.var(1, 0)}, 6)
    y = solve_t_series(6)
    assert series_substitute(ident, y).first_discrepancy(y) is None
    with pytest.raises(ValueError):
        series_substitute(fx, t_only({0: 1}, 6))
