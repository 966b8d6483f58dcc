import random

import pytest

from octantwalks.models import (
    LAURENT_ORBIT_4STEP,
    RATIONAL_ORBIT_5STEP,
    S0,
    S0_BAR,
    S1,
    S1_BAR,
)
from octantwalks.steps import StepSet, enumerate_models
from octantwalks.verify import (
    q00_display_coefficient,
    q0y_display_coefficient,
    verify_algebraic_results,
    verify_closed_form,
    verify_extraction,
    verify_functional_equation,
    vertex_support_certificate,
)
from octantwalks.group import explore_group


def test_functional_equation_worked_examples():
    assert verify_functional_equation(LAURENT_ORBIT_4STEP, 10).passed
    assert verify_functional_equation(RATIONAL_ORBIT_5STEP, 10).passed
    assert verify_functional_equation(S1_BAR, 10).passed
    assert verify_functional_equation(S0, 10).passed


def test_functional_equation_random_models():
    rng = random.Random(5)
    models = list(enumerate_models(5, filters=("dim2or3",)))
    for m in rng.sample(models, 25):
        assert verify_functional_equation(m, 8).passed, m.render()


def test_functional_equation_negative_control():
    rep = verify_functional_equation(LAURENT_ORBIT_4STEP, 10, perturb=((1, 0, 0), 1, 1))
    assert not rep.passed
    assert rep.first_discrepancy[0] == 1  # fails at t^1, within two terms


def test_extraction_worked_examples():
    assert verify_extraction(LAURENT_ORBIT_4STEP, 12).passed
    assert verify_extraction(RATIONAL_ORBIT_5STEP, 10).passed


def test_extraction_special_models():
    r0 = verify_extraction(S0, 16)
    assert r0.passed
    rbar = verify_extraction(S0_BAR, 16)
    assert rbar.passed
    assert rbar.details["special_elements"] > 0
    assert all(w is not None for _, w in rbar.details["support_certificates"])


def test_extraction_fails_for_doubled_west():
    rep = verify_extraction(S1, 12)
    assert not rep.passed


def test_extraction_preconditions():
    m = StepSet.of([(-1, 0, 0), (1, 1, 1), (1, -1, 0), (1, 0, -1)])  # orbit sum zero
    with pytest.raises(ValueError):
        verify_extraction(m, 8)


def test_vertex_certificate_examples():
    from octantwalks.group import extraction_safe_variable, nonpositive_total_degree

    grp = explore_group(S0_BAR)
    specials = [
        el for el in grp.elements
        if el.length
        and extraction_safe_variable(el.coords) is None
        and not nonpositive_total_degree(el.coords)
    ]
    assert specials  # this model is the one needing the support argument
    for el in specials:
        assert vertex_support_certificate(el.coords) is not None
    # an element that keeps a bare variable has no such certificate
    grp1 = explore_group(S1)
    bad = [el for el in grp1.elements if el.length and vertex_support_certificate(el.coords) is None]
    assert bad


def test_closed_forms():
    assert verify_closed_form("ex43", 16).passed
    assert verify_closed_form("ex44", 16).passed
    assert verify_closed_form("S0", 20).passed
    assert verify_closed_form("S0bar-j0", 20).passed
    with pytest.raises(ValueError):
        verify_closed_form("unknown", 8)


def test_closed_form_negative_control():
    rep = verify_closed_form("ex43", 10, perturb=((0, 0, 0), 8, 1))
    assert not rep.passed
    assert rep.first_discrepancy[0] == 8


def test_q00_display_values():
    assert [q00_display_coefficient(n) for n in range(6)] == [1, 0, 3, 0, 26, 0]
    assert q0y_display_coefficient(0, 0) == 1


def test_algebraic_results_fast_selectors():
    for sel in ("q00-display", "q00-equation", "q00-parametric", "qxy", "q0y-display"):
        assert verify_algebraic_results(sel, 20).passed, sel


def test_algebraic_results_parametric():
    assert verify_algebraic_results("qx0", 16).passed
    assert verify_algebraic_results("q0y", 16).passed


def test_algebraic_results_systems():
    assert verify_algebraic_results("system-doubled-east", 12).passed
    assert verify_algebraic_results("system-doubled-west", 12).passed


def test_algebraic_results_homogeneous():
    assert verify_algebraic_results("homogeneous", 8).passed


def test_algebraic_unknown_selector():
    with pytest.raises(ValueError):
        verify_algebraic_results("nope", 8)
