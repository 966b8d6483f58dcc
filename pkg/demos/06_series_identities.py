"""Exact series identities for the two doubled-step quadrant models.

The doubled-east model has an algebraic complete generating function: its
excursion series satisfies an explicit degree-6 polynomial and a rational
parametrisation, and the boundary series have closed parametric forms that
must solve the kernel system.  The doubled-west model is handled through the
same system with DP series, and its homogeneous orbit equation admits
polynomial solutions.
"""

from octantwalks import verify_algebraic_results
from octantwalks.verify import q00_display_coefficient

print("excursions of the doubled-east model:", [q00_display_coefficient(n) for n in range(0, 12, 2)])

checks = [
    ("hypergeometric display vs DP (t^60)", "q00-display", 60),
    ("degree-6 algebraic equation (t^60)", "q00-equation", 60),
    ("rational parametrisation (t^60)", "q00-parametric", 60),
    ("complete-series identity (t^30)", "qxy", 30),
    ("parametric Q(x,0) (t^30)", "qx0", 30),
    ("parametric Q(0,y) (t^30)", "q0y", 30),
    ("double-hypergeometric Q(0,y) (t^30)", "q0y-display", 30),
    ("kernel system, doubled east (t^30)", "system-doubled-east", 30),
    ("kernel system, doubled west (t^30)", "system-doubled-west", 30),
    ("polynomial solutions of the homogeneous orbit equation", "homogeneous", 20),
]
for label, selector, order in checks:
    report = verify_algebraic_results(selector, order)
    print(f"{label}: {'ok' if report.passed else 'FAILED'}")
