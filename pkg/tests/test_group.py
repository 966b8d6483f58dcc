import random

import pytest

from octantwalks.group import (
    DegenerateModelError,
    _apply_symbolic,
    _slices,
    check_extraction,
    explore_group,
    extraction_safe_variable,
    generators,
    orbit_sum,
    orbit_sum_is_zero,
)
from octantwalks.kernels import char_poly, kernel_data
from octantwalks.laurent import LaurentPoly
from octantwalks.models import (
    GESSEL_2D,
    KREWERAS_3D,
    LAURENT_ORBIT_4STEP,
    RATIONAL_ORBIT_5STEP,
    S0,
    S1,
    S1_BAR,
)
from octantwalks.ratfunc import RatFunc
from octantwalks.steps import StepSet, enumerate_models


def test_generator_images_match_worked_example():
    iota = generators(LAURENT_ORBIT_4STEP)[0]
    assert iota.coords[0] == RatFunc.from_poly(
        LaurentPoly(3, {(-1, 1, 0): 1, (-1, -1, 1): 1, (-1, -1, -1): 1})
    )
    tau = generators(RATIONAL_ORBIT_5STEP)[2]
    # zbar (x + xbar) / (ybar + y(x + xbar))
    num = LaurentPoly(3, {(1, 0, -1): 1, (-1, 0, -1): 1})
    den = LaurentPoly(3, {(0, -1, 0): 1, (1, 1, 0): 1, (-1, 1, 0): 1})
    assert tau.coords[2] == RatFunc(num, den)


def test_generators_require_positive_slices():
    with pytest.raises(DegenerateModelError):
        generators(StepSet.of([(1, 1, 1), (1, 0, 0), (0, -1, 0)]))  # no x-negative slice


def test_orders_of_worked_examples():
    assert explore_group(LAURENT_ORBIT_4STEP).order == 8
    assert explore_group(RATIONAL_ORBIT_5STEP).order == 8
    assert explore_group(KREWERAS_3D).order == 24
    assert explore_group(S1_BAR).order == 6
    assert explore_group(S0).order == 6
    assert explore_group(GESSEL_2D).order == 8


def test_collision_resolution_with_tiny_prime():
    # a small field forces fingerprint collisions and degenerate points;
    # the exact closure check and re-randomisation must still converge
    for prime in (1009, 2003):
        res = explore_group(LAURENT_ORBIT_4STEP, prime=prime, seed=1)
        assert res.finite and res.order == 8


def test_exceeds_bound():
    # highly symmetric model with group of order >= 200
    m = StepSet.of([(1, -1, -1), (-1, 1, -1), (-1, -1, 1), (1, 1, 1)])
    res = explore_group(m, bound=200)
    assert not res.finite
    assert res.order is None
    assert res.to_report()["order"] == ">=200"


def test_involutions_and_s_fixing_sample():
    rng = random.Random(3)
    models = list(enumerate_models(4, filters=("dim3",)))
    sample = rng.sample(models, 40)
    for m in sample:
        slices = _slices(m)
        s = char_poly(m)
        idc = tuple(RatFunc.var(3, v) for v in range(3))
        for axis, gen in enumerate(generators(m)):
            # involution: applying the generator to its own coordinates is the identity
            twice = _apply_symbolic_plain(slices, axis, gen.coords)
            assert all(a == b for a, b in zip(twice, idc))
            # the generator fixes the characteristic polynomial
            assert RatFunc.from_poly(s).subs(list(gen.coords)) == RatFunc.from_poly(s)


def _apply_symbolic_plain(slices, axis, coords):
    from octantwalks.group import _FRat, _Pool

    pool = _Pool(len(coords))
    fr = tuple(
        _FRat(c.as_poly(), {}) if c.den.is_monomial() else _FRat(c.num, {c.den: 1})
        for c in coords
    )
    out = _apply_symbolic(slices, axis, fr, pool)
    return tuple(o.to_ratfunc() for o in out)


def test_orbit_sum_worked_example():
    grp = explore_group(LAURENT_ORBIT_4STEP)
    osum = orbit_sum(grp)
    f1 = LaurentPoly(3, {(1, 0, 0): 1, (-1, 1, 0): -1, (-1, -1, 1): -1, (-1, -1, -1): -1})
    f2 = LaurentPoly(3, {(0, 1, 0): 1, (0, -1, 1): -1, (0, -1, -1): -1})
    f3 = LaurentPoly(3, {(0, 0, 1): 1, (0, 0, -1): -1})
    assert osum == RatFunc.from_poly(f1 * f2 * f3)
    assert not orbit_sum_is_zero(grp)


def test_orbit_sum_zero_cases():
    m = StepSet.of([(-1, 0, 0), (1, 1, 1), (1, -1, 0), (1, 0, -1)])
    grp = explore_group(m)
    assert grp.order == 12
    assert orbit_sum_is_zero(grp)
    assert orbit_sum(grp).is_zero()
    assert orbit_sum_is_zero(explore_group(GESSEL_2D))
    assert not orbit_sum_is_zero(explore_group(S1))


def test_orbit_sum_antisymmetric():
    grp = explore_group(LAURENT_ORBIT_4STEP)
    osum = orbit_sum(grp)
    for gen in generators(LAURENT_ORBIT_4STEP):
        image = osum.subs(list(gen.coords))
        assert image == -osum


def test_sign_parity_and_lengths():
    grp = explore_group(LAURENT_ORBIT_4STEP)
    lengths = sorted(el.length for el in grp.elements)
    assert lengths == [0, 1, 1, 1, 2, 2, 2, 3]
    assert sum(el.sign for el in grp.elements) == 0


def test_check_extraction_ring_classification():
    grp = explore_group(LAURENT_ORBIT_4STEP)
    verdicts = [v["verdict"] for v in check_extraction(grp, (0, 1, 2))]
    assert verdicts[0] == "identity"
    assert all(v.startswith("negative-in-") for v in verdicts[1:])
    grp44 = explore_group(RATIONAL_ORBIT_5STEP)
    verdicts44 = [v["verdict"] for v in check_extraction(grp44, (2, 1, 0))]
    assert all(v != "special" for v in verdicts44)


def test_check_extraction_s0_special_support():
    grp = explore_group(S0)
    for order in ((0, 1), (1, 0)):
        verdicts = [v["verdict"] for v in check_extraction(grp, order)]
        assert "special" in verdicts or "nonpositive-degree" in verdicts
    # the flagged element has non-positive total degree in every monomial
    flagged = [v for v in check_extraction(grp, (1, 0)) if v["verdict"] == "nonpositive-degree"]
    assert flagged


def test_extraction_safe_variable():
    grp = explore_group(RATIONAL_ORBIT_5STEP)
    for el in grp.elements:
        if el.length:
            assert extraction_safe_variable(el.coords) is not None


def test_kernel_data_slices_recombine():
    for m in (LAURENT_ORBIT_4STEP, RATIONAL_ORBIT_5STEP, KREWERAS_3D):
        kd = kernel_data(m)  # recombination asserted inside
        assert kd.epsilon == (1 if (-1, -1, -1) in m.steps() else 0)
    kd = kernel_data(LAURENT_ORBIT_4STEP)
    # A- = y + ybar z + ybar zbar, A+ = 1
    assert kd.slices[0][0] == LaurentPoly(3, {(0, 1, 0): 1, (0, -1, 1): 1, (0, -1, -1): 1})
    assert kd.slices[0][2] == LaurentPoly.const(3, 1)


def test_kernel_display_for_rational_example():
    kd = kernel_data(RATIONAL_ORBIT_5STEP)
    expected = LaurentPoly(3, {(-1, 0, -1): 1, (-1, 1, 1): 1, (0, -1, 1): 1, (1, 0, -1): 1, (1, 1, 1): 1})
    assert kd.s_poly == expected
    assert kd.kernel_parts()[1] == -expected
