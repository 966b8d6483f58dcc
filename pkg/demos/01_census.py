"""How many essentially different octant models are there?

Counts step sets in {-1,0,1}^3 by cardinality, up to coordinate permutation,
two independent ways: a brute-force Burnside sweep over all 2^26 masks with
bitwise predicates, and closed-form inclusion-exclusion polynomials.  The two
must agree coefficient by coefficient.
"""

from octantwalks import appendix_polynomials, burnside_census

j, k, i = appendix_polynomials()
print("models with no unused step, by cardinality:")
print(" ", j.to_json())
print("of dimension at most 1:")
print(" ", k.to_json())
print("worth studying (dimension 2 or 3):")
print(" ", i.to_json())
print("total interesting models:", i.total())
print("with at most six steps:  ", i.range_total(3, 6))

print("\nbrute-force cross-check (a few seconds per predicate)...")
for name, predicate, coeffs in (("J", "no-unused-step", j), ("K", "dim<=1", k), ("I", "dim2or3", i)):
    swept = burnside_census(predicate)
    status = "agrees" if swept.coefficients == coeffs.coefficients else "DISAGREES"
    print(f"  {name}: sweep {status} with the closed form")
