from octantwalks.counting import count_mixed, count_octant, reflection_combine
from octantwalks.hadamard import detect_hadamard, hadamard_assemble
from octantwalks.models import KREWERAS_3D, KREWERAS_2D, GESSEL_2D, REVERSE_KREWERAS_2D
from octantwalks.steps import StepSet, QuadrantModel

MODEL_51 = StepSet.of(
    [(1, 0, 0)] + [(a, b, c) for a in (-1, 0, 1) for b, c in [(1, 1), (0, -1), (-1, 0)]]
)
EXAMPLE_11 = StepSet.of(
    [(1, 0, 0), (1, 1, 0), (-1, 0, 1), (-1, 0, -1), (-1, -1, 1), (-1, -1, -1)]
)


def test_detect_12_decomposition():
    decs = detect_hadamard(MODEL_51)
    kinds = {d.kind for d in decs}
    assert (1, 2) in kinds
    d12 = next(d for d in decs if d.kind == (1, 2))
    assert d12.u_steps == ((1,),)
    assert d12.v_steps == ((-1,), (0,), (1,))
    assert set(d12.t_steps) == {(1, 1), (0, -1), (-1, 0)}


def test_detect_21_decomposition():
    decs = [d for d in detect_hadamard(EXAMPLE_11) if d.kind == (2, 1)]
    assert decs
    d = decs[0]
    assert set(d.t_steps) == {(1,), (-1,)}
    assert set(d.u_steps) == {(1, 0), (1, 1)}
    assert set(d.v_steps) == {(-1, 0), (-1, -1)}


def test_non_hadamard():
    assert detect_hadamard(KREWERAS_3D) == []


def test_decompositions_reconstruct_model():
    for model in (MODEL_51, EXAMPLE_11):
        for d in detect_hadamard(model):
            rebuilt = set()
            for u in d.u_steps:
                rebuilt.add(u + (0,) * d.kind[1])
            for v in d.v_steps:
                for t in d.t_steps:
                    assert v + t not in rebuilt, "union must be disjoint"
                    rebuilt.add(v + t)
            perm = d.perm
            expected = {tuple(s[perm[i]] for i in range(3)) for s in model.steps()}
            assert rebuilt == expected


def test_assembly_equals_octant():
    for model, n in ((MODEL_51, 10), (EXAMPLE_11, 12)):
        dec = detect_hadamard(model)[0]
        asm = hadamard_assemble(dec, n)
        table = count_octant(model, n)
        for length in range(n + 1):
            for i in range(length + 1):
                for j in range(length + 1):
                    for k in range(length + 1):
                        assert asm.count((i, j, k), length) == table.count((i, j, k), length)


def test_degenerate_empty_v():
    m = StepSet.of([(1, 0, 0), (-1, 0, 0), (1, 1, 0)])
    decs = [d for d in detect_hadamard(m) if not d.v_steps]
    assert decs
    asm = hadamard_assemble(decs[0], 8)
    table = count_octant(m, 8)
    for n in range(9):
        for i in range(9):
            for j in range(9):
                assert asm.count((i, j, 0), n) == table.count((i, j, 0), n)
                assert asm.count((i, j, 1), n) == 0 == table.count((i, j, 1), n)


def test_reflection_consistency_for_21_with_pm1():
    decs = [d for d in detect_hadamard(EXAMPLE_11) if d.kind == (2, 1) and set(d.t_steps) == {(1,), (-1,)}]
    dec = decs[0]
    asm = hadamard_assemble(dec, 10)
    free_axis = dec.perm.index(2) if dec.perm != (0, 1, 2) else 2
    mixed = count_mixed(EXAMPLE_11, 2, 10)
    refl = reflection_combine(mixed)
    for n in range(11):
        for i in range(11):
            for j in range(11):
                for k in range(11):
                    assert asm.count((i, j, k), n) == refl.count((i, j, k), n)


def test_inner_quadrant_sets_of_12_decompositions():
    # the known (1,2) example has the cube-diagonal set as its T part
    d12 = next(d for d in detect_hadamard(MODEL_51) if d.kind == (1, 2))
    t_model = QuadrantModel.of({s: 1 for s in d12.t_steps}).canonical()
    known = {
        KREWERAS_2D.canonical().weights,
        REVERSE_KREWERAS_2D.canonical().weights,
        GESSEL_2D.canonical().weights,
    }
    assert t_model.weights in known
