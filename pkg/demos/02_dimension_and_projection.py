"""Dimension of a model, redundancy certificates, and quadrant projection.

The endpoint of a walk satisfies three linear inequalities in the step
multiplicities.  A model's dimension is the least number of them that imply
all three; redundancy is decided by exact rational Fourier-Motzkin
elimination, never floating point.  Two-dimensional models project onto a
quadrant multiset.
"""

from octantwalks import StepSet, dimension, parse_model, project_to_quadrant, unused_steps

model = parse_model("0--;-+0;-++;+0+")
print("model:", model.render())
print("unused steps:", sorted(unused_steps(model)) or "none")

analysis = dimension(model)
print("dimension:", analysis.dimension)
print("redundant axes:", sorted(analysis.redundant_axes))
perm, (alpha, beta) = analysis.alpha_beta
print(f"witness: after permuting by {perm}, every step satisfies k >= {alpha}*i + {beta}*j")

quadrant = project_to_quadrant(model, "z")
print("projection onto the quadrant:", quadrant.render(), "(a doubled step appears)")

full3d = parse_model("---;--+;-+0;+00")
analysis3d = dimension(full3d)
print("\nmodel:", full3d.render(), "-> dimension", analysis3d.dimension)
for axis, cert in sorted(analysis3d.certificates.items()):
    print(f"  multiplicities {cert} violate only the {axis}-inequality")
