import random

import pytest

from octantwalks.steps import (
    ModelError,
    StepSet,
    QuadrantModel,
    canonical_code,
    canonical_masks,
    dimension,
    enumerate_models,
    has_unused_step,
    lemma1d_check,
    parse_model,
    project_to_quadrant,
    quadrant_models_multiplicity_free,
    unused_steps,
)
from octantwalks.models import LAURENT_ORBIT_4STEP

from oracles import used_steps_oracle


def test_parse_single_step():
    assert parse_model("+00").steps() == ((1, 0, 0),)


def test_parse_worked_model():
    m = parse_model("---;--+;-+0;+00")
    assert m == LAURENT_ORBIT_4STEP
    assert parse_model(m.render()) == m
    assert parse_model(f"0x{m.mask:07x}") == m


@pytest.mark.parametrize("bad", ["000", "+0", "+00;+00", "x00", "0x4000000"])
def test_parse_errors(bad):
    with pytest.raises(ModelError):
        parse_model(bad)


def test_canonical_code_permutation_invariance():
    a = StepSet.of([(1, 0, 0)])
    b = StepSet.of([(0, 1, 0)])
    assert canonical_code(a) == canonical_code(b)
    m = parse_model("---;--+;-+0;+00")
    codes = {canonical_code(m.permuted(p)) for p in range(6)}
    assert len(codes) == 1
    assert canonical_code(StepSet(canonical_code(m))) == canonical_code(m)


def test_unused_steps_rules():
    assert unused_steps(StepSet.of([(-1, 0, 0), (0, 1, 0)])) == {(-1, 0, 0)}
    assert unused_steps(StepSet.of([(0, 0, 1), (-1, 1, 0), (1, -1, -1)])) == {(-1, 1, 0), (1, -1, -1)}
    assert unused_steps(StepSet.of([(1, 1, 1), (1, 0, 0)])) == frozenset()


def test_unused_steps_fixpoint_needed():
    # after removing (0,-1,1) by rule A_y, the set {(0,0,1)} only loses more
    m = StepSet.of([(0, -1, 1), (0, 0, -1)])
    assert unused_steps(m) == {(0, -1, 1), (0, 0, -1)}


def test_unused_steps_match_reachability_oracle_small():
    masks = [m for m in canonical_masks(4) if m]
    for mask in masks:
        s = StepSet(mask)
        used = used_steps_oracle(s.steps())
        assert set(s.steps()) - used == unused_steps(s), s.render()


def test_dimension_zero_iff_nonnegative():
    assert dimension(StepSet.of([(1, 0, 0), (0, 1, 1)])).dimension == 0
    rng = random.Random(7)
    nonneg = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in (0, 1) if (i, j, k) != (0, 0, 0)]
    for _ in range(20):
        sub = rng.sample(nonneg, rng.randrange(1, 8))
        assert dimension(StepSet.of(sub)).dimension == 0


def test_dimension_example_2d():
    da = dimension(StepSet.of([(0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)]))
    assert da.dimension == 2
    assert da.redundant_axes == {"z"}
    perm, (a, b) = da.alpha_beta
    assert (a, b) == (1, 1)


def test_dimension_3d_with_certificates():
    da = dimension(LAURENT_ORBIT_4STEP)
    assert da.dimension == 3
    assert set(da.certificates) == {"x", "y", "z"}
    steps = LAURENT_ORBIT_4STEP.steps()
    for axis, cert in da.certificates.items():
        sums = [sum(c * s[v] for c, s in zip(cert, steps)) for v in range(3)]
        idx = "xyz".index(axis)
        assert sums[idx] < 0
        assert all(sums[v] >= 0 for v in range(3) if v != idx)


def test_dimension_requires_no_unused():
    with pytest.raises(ValueError):
        dimension(StepSet.of([(-1, 0, 0), (0, 1, 0)]))


def test_lemma1d_examples():
    assert lemma1d_check(StepSet.of([(-1, 1, 1), (1, 1, 1)]), "x")
    assert not lemma1d_check(StepSet.of([(0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)]), "x")
    assert lemma1d_check(StepSet(0), "x")


def test_lemma1d_agrees_with_lp():
    # combinatorial one-axis test == LP dimension <= 1, on all 4-step classes
    for mask in canonical_masks(4):
        if has_unused_step(mask):
            continue
        s = StepSet(mask)
        assert any(lemma1d_check(s, a) for a in range(3)) == (dimension(s).dimension <= 1), s.render()


def test_dimension_monotone():
    # if one inequality suffices, every superset of inequalities does
    for mask in list(canonical_masks(3))[:200]:
        if has_unused_step(mask):
            continue
        da = dimension(StepSet(mask))
        if da.dimension <= 1:
            assert len(da.redundant_axes) >= 2


def test_projection_example():
    m = StepSet.of([(0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)])
    q = project_to_quadrant(m, "z")
    expected = QuadrantModel.of({(0, -1): 1, (-1, 1): 2, (1, 0): 1}).canonical()
    assert q == expected


def test_projection_drops_null_steps():
    # A z-redundant model can contain (0,0,1) but never (0,0,-1): that step
    # alone satisfies the x- and y-inequalities while violating z.
    m = StepSet.of([(0, 0, 1), (0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)])
    da = dimension(m)
    assert "z" in da.redundant_axes
    q = project_to_quadrant(m, "z")
    assert q.dropped_null_steps == 1
    down = StepSet.of([(0, 0, -1), (0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1), (1, 1, 1)])
    assert "z" not in dimension(down).redundant_axes


def test_projection_mirror_symmetry():
    m = StepSet.of([(0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)])
    mirrored = StepSet.of([(s[1], s[0], s[2]) for s in m.steps()])
    assert project_to_quadrant(m, "z") == project_to_quadrant(mirrored, "z")


def test_projection_requires_redundant_axis():
    with pytest.raises(ValueError):
        project_to_quadrant(LAURENT_ORBIT_4STEP, "z")


def test_quadrant_model_render_parse():
    q = QuadrantModel.of({(-1, 1): 2, (0, -1): 1, (1, 0): 1})
    assert QuadrantModel.parse(q.render()) == q


def test_enumerate_models_distinct_canonical():
    seen = set()
    for s in enumerate_models(3):
        assert canonical_code(s) == s.mask
        assert s.mask not in seen
        seen.add(s.mask)
    # canonical classes of cardinality <= 3 (Burnside over all subsets)
    assert len(seen) == 1 + 9 + 73 + 500


def test_enumerate_models_filters():
    no_unused_1 = [s for s in enumerate_models(1, filters=("no_unused",)) if s.cardinality == 1]
    assert len(no_unused_1) == 3  # single nonnegative steps up to permutation
    interesting = list(enumerate_models(4, filters=("dim2or3",)))
    assert len(interesting) == 73 + 979
    d3 = [s for s in enumerate_models(4, filters=("dim3",))]
    assert [sum(1 for s in d3 if s.cardinality == c) for c in (3, 4)] == [1, 220]


def test_alpha_beta_certificates_cover_small_2d_models():
    for s in enumerate_models(4, filters=("dim2",)):
        assert dimension(s).alpha_beta is not None, s.render()


def test_multiplicity_free_quadrant_models():
    qs = quadrant_models_multiplicity_free()
    assert len(qs) == 79
    by_card = [sum(1 for q in qs if q.cardinality == c) for c in range(3, 9)]
    assert by_card == [7, 23, 27, 16, 5, 1]
