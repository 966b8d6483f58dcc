"""Hadamard models: counting in three dimensions via lower-dimensional walks.

When the step set splits as (U x {0}) u (V x T), octant counts are a Hadamard
product of coloured-walk counts on the first block and T-walk counts on the
second.  For a one-dimensional second block with steps {+1,-1} the reflection
principle gives the same numbers a third way.
"""

from octantwalks import (
    StepSet,
    count_mixed,
    count_octant,
    detect_hadamard,
    hadamard_assemble,
    reflection_combine,
)

model = StepSet.of([(1, 0, 0), (1, 1, 0), (-1, 0, 1), (-1, 0, -1), (-1, -1, 1), (-1, -1, -1)])
print("model:", model.render())
for dec in detect_hadamard(model):
    print(f"  {dec.kind}-split after permutation {dec.perm}: U={dec.u_steps} V={dec.v_steps} T={dec.t_steps}")

dec = detect_hadamard(model)[0]
assembled = hadamard_assemble(dec, 12)
direct = count_octant(model, 12)
reflected = reflection_combine(count_mixed(model, 2, 12))

agree = all(
    assembled.count((i, j, k), n) == direct.count((i, j, k), n) == reflected.count((i, j, k), n)
    for n in range(13) for i in range(5) for j in range(5) for k in range(5)
)
print("assembly == direct DP == reflection principle:", agree)

kreweras3d = StepSet.of([(-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1)])
print("cube-diagonal model decompositions:", detect_hadamard(kreweras3d) or "none (not Hadamard)")
