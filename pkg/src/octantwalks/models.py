"""Named step sets used across the test corpus and worked examples."""

from __future__ import annotations

from .steps import StepSet, QuadrantModel

#: 4-step octant model with Laurent-polynomial orbit: {---, --+, -+0, +00}.
LAURENT_ORBIT_4STEP = StepSet.of([(-1, -1, -1), (-1, -1, 1), (-1, 1, 0), (1, 0, 0)])

#: 5-step octant model with rational orbit: {-0-, -++, 0-+, +0-, +++}.
RATIONAL_ORBIT_5STEP = StepSet.of([(-1, 0, -1), (-1, 1, 1), (0, -1, 1), (1, 0, -1), (1, 1, 1)])

#: The three-dimensional analogue of the cube-diagonal quadrant model.
KREWERAS_3D = StepSet.of([(-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1)])

#: Quadrant multisets with one doubled step (projections of octant models).
S0 = QuadrantModel.of({(-1, -1): 1, (-1, 0): 2, (-1, 1): 1, (1, 0): 1, (1, -1): 1})
S0_BAR = QuadrantModel.of({(1, 1): 1, (1, 0): 2, (1, -1): 1, (-1, 0): 1, (-1, 1): 1})
S1 = QuadrantModel.of({(1, 1): 1, (1, 0): 1, (-1, 1): 1, (-1, 0): 2, (-1, -1): 1})
S1_BAR = QuadrantModel.of({(-1, -1): 1, (-1, 0): 1, (1, -1): 1, (1, 0): 2, (1, 1): 1})

#: Classical quadrant step sets.
KREWERAS_2D = QuadrantModel.of({(1, 1): 1, (0, -1): 1, (-1, 0): 1})
REVERSE_KREWERAS_2D = QuadrantModel.of({(1, 0): 1, (0, 1): 1, (-1, -1): 1})
GESSEL_2D = QuadrantModel.of({(1, 0): 1, (-1, 0): 1, (1, 1): 1, (-1, -1): 1})
DOUBLE_KREWERAS_2D = QuadrantModel.of(
    {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1, (1, 1): 1, (-1, -1): 1}
)

CLOSED_FORM_IDS = ("ex43", "ex44", "S0", "S0bar-j0")

BY_NAME = {
    "ex43": LAURENT_ORBIT_4STEP,
    "ex44": RATIONAL_ORBIT_5STEP,
    "kreweras3d": KREWERAS_3D,
    "S0": S0,
    "S0bar": S0_BAR,
    "S1": S1,
    "S1bar": S1_BAR,
    "kreweras": KREWERAS_2D,
    "reverse-kreweras": REVERSE_KREWERAS_2D,
    "gessel": GESSEL_2D,
    "double-kreweras": DOUBLE_KREWERAS_2D,
}
