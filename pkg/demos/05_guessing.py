"""Guessing a P-recursive recurrence for excursion counts.

Excursions of the doubled-west quadrant model are counted modulo a 62-bit
prime to 200 terms; a linear recurrence with polynomial coefficients is
fitted on the first 100 and must hold on the held-out remainder, and the
guess is repeated modulo a second prime as a stability check.
"""

from octantwalks import QuadrantModel, count_quadrant, guess_precursive, prime_stable
from octantwalks.modp import DEFAULT_PRIME

model = QuadrantModel.parse("--;-0*2;-+;+0;+-")
print("model:", model.render())

series = count_quadrant(model, 200, mode=DEFAULT_PRIME, keep_tables=False).specialisation((0, 0))
print("first excursion counts:", series[:8])

candidates = guess_precursive(series[:100], 8, 8, source="doubled-west excursions")
cand = candidates[0]
print(f"found recurrence of order {cand.order}, coefficient degree {cand.degree}")
holds = all(cand.holds_at(series, n) for n in range(100, 200 - cand.order))
print("holds on the held-out terms 100..200:", holds)
print("lifted leading coefficients:", cand.lifted()[cand.order])

other = 2**61 - 1
series2 = count_quadrant(model, 120, mode=other, keep_tables=False).specialisation((0, 0))
cand2 = guess_precursive(series2[:100], 8, 8, prime=other)[0]
print("same recurrence modulo a second prime:", prime_stable(cand, cand2))
