"""Characteristic polynomial, directional slices and kernel data of a model."""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .steps import StepSet, QuadrantModel


def char_poly(model) -> LaurentPoly:
    """Sum of x^i y^j (z^k) over the steps, multiplicities as coefficients."""
    if isinstance(model, StepSet):
        return LaurentPoly(3, {s: 1 for s in model.steps()})
    if isinstance(model, QuadrantModel):
        return LaurentPoly(2, {s: w for s, w in model.weights})
    raise TypeError("expected StepSet or QuadrantModel")


def _directional(items, nvars: int, axis: int, sign: int) -> LaurentPoly:
    terms: dict = {}
    for step, w in items:
        if (step[axis] > 0) - (step[axis] < 0) != sign:
            continue
        e = tuple(0 if v == axis else step[v] for v in range(nvars))
        terms[e] = terms.get(e, 0) + w
    return LaurentPoly(nvars, terms)


@dataclass(frozen=True)
class KernelData:
    """All slice polynomials of a model plus the kernel K = 1 - t*S.

    Slices are embedded in the full walk-variable ring.  The invariant
    S = xbar*A- + A0 + x*A+ (and likewise per axis) is checked on build.
    """

    s_poly: LaurentPoly
    slices: tuple[tuple[LaurentPoly, LaurentPoly, LaurentPoly], ...]  # (neg, zero, pos) per axis
    corner_neg: tuple[LaurentPoly, ...]  # D-, E-, F- (3D) or the scalar delta (2D)
    epsilon: int

    @property
    def nvars(self) -> int:
        return self.s_poly.nvars

    def kernel_parts(self) -> dict[int, LaurentPoly]:
        """K = 1 - t*S as {t-degree: coefficient}."""
        return {0: LaurentPoly.const(self.nvars, 1), 1: -self.s_poly}


def kernel_data(model) -> KernelData:
    if isinstance(model, StepSet):
        nvars = 3
        items = [(s, 1) for s in model.steps()]
    elif isinstance(model, QuadrantModel):
        nvars = 2
        items = list(model.weights)
    else:
        raise TypeError("expected StepSet or QuadrantModel")
    s_poly = char_poly(model)
    slices = []
    for axis in range(nvars):
        neg = _directional(items, nvars, axis, -1)
        zero = _directional(items, nvars, axis, 0)
        pos = _directional(items, nvars, axis, 1)
        var = LaurentPoly.var(nvars, axis)
        recombined = neg * (var ** (-1)) + zero + pos * var
        assert recombined == s_poly, "slice recombination failed"
        slices.append((neg, zero, pos))
    if nvars == 3:
        corners = []
        for pair, free in (((0, 1), 2), ((0, 2), 1), ((1, 2), 0)):
            terms: dict = {}
            for step, w in items:
                if step[pair[0]] == -1 and step[pair[1]] == -1:
                    e = tuple(step[v] if v == free else 0 for v in range(3))
                    terms[e] = terms.get(e, 0) + w
            corners.append(LaurentPoly(3, terms))
        epsilon = 1 if any(step == (-1, -1, -1) for step, _ in items) else 0
        corner_neg = tuple(corners)  # D-(z), E-(y), F-(x)
    else:
        delta = sum(w for step, w in items if step == (-1, -1))
        corner_neg = (LaurentPoly.const(2, delta),)
        epsilon = 0
    return KernelData(s_poly, tuple(slices), corner_neg, epsilon)
