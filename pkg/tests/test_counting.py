import os

import pytest

from octantwalks.counting import (
    count_coloured,
    count_halfline,
    count_mixed,
    count_octant,
    count_quadrant,
    count_weighted_quadrant,
    reflection_combine,
)
from octantwalks.laurent import LaurentPoly
from octantwalks.modp import DEFAULT_PRIME
from octantwalks.models import LAURENT_ORBIT_4STEP, RATIONAL_ORBIT_5STEP, S0, S1_BAR
from octantwalks.steps import StepSet, QuadrantModel

from oracles import enumerate_walk_count, used_steps_oracle


def test_empty_walk():
    t = count_octant(LAURENT_ORBIT_4STEP, 0)
    assert t.count((0, 0, 0), 0) == 1


def test_worked_example_excursions():
    t = count_octant(LAURENT_ORBIT_4STEP, 8)
    assert t.count((0, 0, 0), 8) == 28
    assert t.count((0, 0, 0), 8) == enumerate_walk_count(LAURENT_ORBIT_4STEP.steps(), (0, 0, 0), 8)


def test_excursion_support_mod_8():
    t = count_octant(RATIONAL_ORBIT_5STEP, 16)
    assert [n for n in range(17) if t.count((0, 0, 0), n)] == [0, 8, 16]


def test_specialisations_from_full_table():
    t = count_octant(LAURENT_ORBIT_4STEP, 6)
    full = t.specialisation((1, 1, 1))
    boundary = t.specialisation((0, 1, 1))
    for n in range(7):
        poly = t.coefficient_poly(n)
        assert full[n] == sum(poly.terms.values())
        assert boundary[n] == sum(c for e, c in poly.terms.items() if e[0] == 0)


def test_exact_and_modular_agree():
    t = count_octant(LAURENT_ORBIT_4STEP, 24)
    tm = count_octant(LAURENT_ORBIT_4STEP, 24, mode=DEFAULT_PRIME)
    for pt, series in t.series.items():
        assert [v % DEFAULT_PRIME for v in series] == tm.series[pt]


def test_modular_rejects_bad_modulus():
    with pytest.raises(ValueError):
        count_octant(LAURENT_ORBIT_4STEP, 4, mode=2**63)
    with pytest.raises(ValueError):
        count_octant(LAURENT_ORBIT_4STEP, 4, mode=8)


def test_quadrant_hand_counts():
    q = count_quadrant(S0, 4)
    assert q.count((0, 0), 2) == 2
    qb = count_quadrant(S1_BAR, 6)
    assert qb.specialisation((0, 0))[:7] == [1, 0, 3, 0, 26, 0, 323]
    # zero beyond reach
    assert q.count((3, 0), 2) == 0


def test_quadrant_marginal_of_octant():
    m = StepSet.of([(0, -1, -1), (-1, 1, 0), (-1, 1, 1), (1, 0, 1)])
    from octantwalks.steps import project_to_quadrant

    qm = project_to_quadrant(m, "z")
    oc = count_octant(m, 20)
    qc = count_quadrant(qm, 20)
    swap = qm != QuadrantModel.of({(0, -1): 1, (-1, 1): 2, (1, 0): 1})
    for n in range(21):
        for i in range(n + 1):
            for j in range(n + 1):
                marginal = sum(oc.count((i, j, k), n) for k in range(n + 1))
                pr = (j, i) if swap else (i, j)
                assert qc.count(pr, n) == marginal


def test_every_step_used_within_16():
    for m in (LAURENT_ORBIT_4STEP, RATIONAL_ORBIT_5STEP):
        used = used_steps_oracle(m.steps())
        assert used == set(m.steps())


def test_coloured_no_black_steps():
    ct = count_coloured([(1,), (-1,)], [], 1, 4)
    assert ct.count((0,), 2, 0) == 1
    assert all(ct.count((0,), 2, k) == 0 for k in range(1, 5))


def test_coloured_weight_identity():
    # U = {1}, V = {-1, 0, 1} on the half line: summing over k with weight 1
    # recovers plain walk counts over U ∪ V with shared steps doubled
    u = [(1,)]
    v = [(-1,), (0,), (1,)]
    ct = count_coloured(u, v, 1, 6)
    doubled = count_halfline({-1: 1, 0: 1, 1: 2}, 6)
    for n in range(7):
        for e in range(7):
            assert sum(ct.count((e,), n, k) for k in range(n + 1)) == doubled[n][e]


def test_mixed_equals_octant_without_negative_steps():
    m = StepSet.of([(1, 1, 1), (0, -1, 1), (-1, 1, 0), (1, 0, 0)])  # no z-negative step
    mixed = count_mixed(m, 2, 6)
    oc = count_octant(m, 6)
    for n in range(7):
        for i in range(7):
            for j in range(7):
                for k in range(7):
                    assert mixed.count((i, j, k), n) == oc.count((i, j, k), n)


def test_reflection_matches_octant_for_pm1_factor():
    ex11 = StepSet.of([(1, 0, 0), (1, 1, 0), (-1, 0, 1), (-1, 0, -1), (-1, -1, 1), (-1, -1, -1)])
    mixed = count_mixed(ex11, 2, 12)
    refl = reflection_combine(mixed)
    oc = count_octant(ex11, 12)
    for n in range(13):
        for i in range(13):
            for j in range(13):
                for k in range(13):
                    assert refl.count((i, j, k), n) == oc.count((i, j, k), n)


def test_weighted_quadrant_tracks_third_coordinate():
    # lifting a 2D model with a z-Laurent weight on the repeated step
    # reproduces the z-marginal of the 3D count
    m = StepSet.of([(0, -1, 0), (1, 0, 1), (-1, 1, -1), (-1, 1, 0), (-1, 1, 1)])
    oc = count_octant(m, 10)
    zvar = LaurentPoly(1, {(1,): 1})
    weights = {
        (0, -1): LaurentPoly.const(1, 1),
        (1, 0): zvar,
        (-1, 1): LaurentPoly(1, {(-1,): 1, (0,): 1, (1,): 1}),
    }
    tables = count_weighted_quadrant(weights, 10, 1)
    for n in range(11):
        for i in range(n + 1):
            for j in range(n + 1):
                expected = LaurentPoly(1, {
                    (k,): oc.count((i, j, k), n) for k in range(n + 1) if oc.count((i, j, k), n)
                })
                got = tables[n].get((i, j), LaurentPoly.zero(1))
                # the quadrant tracks z through the weight, but z never dips
                # below 0 in this model's octant walks, so supports agree
                assert got == expected, (i, j, n)


def test_export_json_and_binary(tmp_path):
    t = count_octant(LAURENT_ORBIT_4STEP, 6, mode=DEFAULT_PRIME)
    path = tmp_path / "table.json.gz"
    t.export_json(str(path))
    import gzip, json

    with gzip.open(path) as fh:
        payload = json.load(fh)
    assert payload["N"] == 6
    assert payload["series"]["000"][0] == "1"
    bpath = tmp_path / "table.bin"
    t.export_binary(str(bpath))
    data = bpath.read_bytes()
    assert data[:4] == b"OWCT"


def test_coloured_formal_weight_identity():
    # U = {1}, V = {-1, 0, 1} on the half line: the per-k table is the
    # v-expansion of a DP weighted by v on V\U and (1+v) on U∩V
    u = {(1,)}
    v = {(-1,), (0,), (1,)}
    ct = count_coloured(u, v, 1, 8)
    vvar = LaurentPoly(1, {(1,): 1})
    one_plus_v = LaurentPoly(1, {(0,): 1, (1,): 1})
    weights = {}
    for s in u | v:
        if s in u and s in v:
            weights[s[0]] = one_plus_v
        elif s in u:
            weights[s[0]] = LaurentPoly.const(1, 1)
        else:
            weights[s[0]] = vvar
    cur = {0: LaurentPoly.const(1, 1)}
    for n in range(1, 9):
        nxt = {}
        for pos, val in cur.items():
            for step, w in weights.items():
                t = pos + step
                if t < 0:
                    continue
                nxt[t] = nxt.get(t, LaurentPoly.zero(1)) + w * val
        cur = nxt
        for e, poly in cur.items():
            expanded = LaurentPoly(1, {(k,): ct.count((e,), n, k) for k in range(n + 1) if ct.count((e,), n, k)})
            assert expanded == poly, (n, e)


def test_coloured_black_count_forced_by_parity():
    # first block of the (2,1)-Hadamard example: disjoint U and V, so the
    # number of black steps is the number of x-negative steps, forced by i
    ct = count_coloured([(1, 0), (1, 1)], [(-1, 0), (-1, -1)], 2, 10)
    for n in range(11):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    if ct.count((i, j), n, k):
                        assert n - i == 2 * k, (i, j, n, k)
