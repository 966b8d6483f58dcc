"""Dynamic-programming walk counters: octant, quadrant, coloured, mixed.

One slab per length, updated by shifted-slice additions, ping-ponged to keep
memory at two dense arrays.  Exact mode uses int64 while the counts provably
fit (|S|^N < 2^63) and falls back to arbitrary-precision Python integers;
modular mode reduces after every shifted add so residues stay below the
62-bit prime.  Specialisations at x0,y0,z0 in {0,1} are read off the full
slab (one engine, eight series).
"""

from __future__ import annotations

import gzip
import json
import struct
from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly
from .steps import StepSet, QuadrantModel


def _slices_for_shift(shape: tuple[int, ...], step: tuple[int, ...]):
    dst, src = [], []
    for extent, a in zip(shape, step):
        dst.append(slice(max(a, 0), extent + min(a, 0)))
        src.append(slice(max(-a, 0), extent + min(-a, 0)))
    return tuple(dst), tuple(src)


def _mod_reduce(arr: np.ndarray, p: int) -> None:
    np.subtract(arr, p, out=arr, where=arr >= p)


def _mod_sum(arr: np.ndarray, axis: int, p: int) -> np.ndarray:
    """Tree reduction keeping partial sums below 2p (int64-safe)."""
    cur = np.moveaxis(arr, axis, -1)
    while cur.shape[-1] > 1:
        n = cur.shape[-1]
        even = cur[..., 0 : n - n % 2 : 2] + cur[..., 1 : n : 2]
        _mod_reduce(even, p)
        if n % 2:
            even = np.concatenate([even, cur[..., -1:]], axis=-1)
        cur = even
    return cur[..., 0]


@dataclass
class CountTable:
    """Counts c(endpoint; n) for n <= N, plus the eight 0/1 specialisations."""

    model: object
    dims: int
    n_max: int
    mode: object  # "exact" or an odd prime
    series: dict[tuple[int, ...], list[int]]
    tables: list | None = None
    free_axis: int | None = None

    def count(self, endpoint: tuple[int, ...], n: int) -> int:
        if self.tables is None:
            raise ValueError("full tables were not kept for this run")
        if n > self.n_max:
            raise IndexError("length beyond table")
        idx = list(endpoint)
        if self.free_axis is not None:
            idx[self.free_axis] += self.n_max
        elif any(x < 0 for x in endpoint):
            return 0
        if any(x < 0 or x >= s for x, s in zip(idx, self.tables[n].shape)):
            return 0
        return int(self.tables[n][tuple(idx)])

    def specialisation(self, point: tuple[int, ...]) -> list[int]:
        return self.series[point]

    def coefficient_poly(self, n: int) -> LaurentPoly:
        """The length-n slab as a Laurent polynomial in the walk variables."""
        if self.tables is None:
            raise ValueError("full tables were not kept for this run")
        arr = self.tables[n]
        terms = {}
        for idx in np.argwhere(arr):
            e = tuple(int(v) for v in idx)
            if self.free_axis is not None:
                e = tuple(x - self.n_max if v == self.free_axis else x for v, x in enumerate(e))
            terms[e] = int(arr[tuple(idx)])
        return LaurentPoly(self.dims, terms)

    def export_json(self, path: str) -> None:
        payload = {
            "model": _model_name(self.model),
            "N": self.n_max,
            "mode": self.mode if self.mode == "exact" else int(self.mode),
            "series": {
                "".join(map(str, pt)): [str(v) for v in vals]
                for pt, vals in sorted(self.series.items())
            },
        }
        data = json.dumps(payload).encode()
        if path.endswith(".gz"):
            with gzip.open(path, "wb") as fh:
                fh.write(data)
        else:
            with open(path, "wb") as fh:
                fh.write(data)

    def export_binary(self, path: str) -> None:
        """Binary dump: magic 'OWCT', dims, N, then little-endian u64 residues."""
        if self.mode == "exact" or self.tables is None:
            raise ValueError("binary dump is for modular runs with kept tables")
        with open(path, "wb") as fh:
            fh.write(b"OWCT")
            fh.write(struct.pack("<II", self.dims, self.n_max))
            for n in range(self.n_max + 1):
                arr = np.ascontiguousarray(self.tables[n], dtype=np.uint64)
                fh.write(struct.pack("<I", arr.size))
                fh.write(arr.tobytes())


def _model_name(model) -> str:
    if isinstance(model, (StepSet, QuadrantModel)):
        return model.render()
    return str(model)


def _run_dp(
    shape: tuple[int, ...],
    start: tuple[int, ...],
    moves: list[tuple[tuple[int, ...], int]],
    n_max: int,
    mode,
    keep_tables: bool,
    spec_dims: int | None = None,
    free_axis: int | None = None,
):
    """Shared slab engine; moves carry integer weights."""
    total_weight = sum(w for _, w in moves)
    if mode == "exact":
        exact64 = total_weight ** max(n_max, 1) < 2**62
        dtype = np.int64 if exact64 else object
        p = None
    else:
        p = int(mode)
        if p <= 2 or p % 2 == 0:
            raise ValueError("modulus must be an odd prime")
        dtype = np.int64
        if 2 * p >= 2**63:
            raise ValueError("modulus too large for the int64 engine")
    cur = np.zeros(shape, dtype=dtype)
    if dtype is object:
        cur[...] = 0
    cur[start] = 1
    tables = [cur.copy()] if keep_tables else None
    series: dict[tuple[int, ...], list[int]] = {}
    d = spec_dims if spec_dims is not None else len(shape)

    def record(slab):
        reduced = slab
        for pt in np.ndindex(*(2,) * d):
            sl = reduced
            for axis in range(d - 1, -1, -1):
                if pt[axis] == 0:
                    sl = np.take(sl, start[axis], axis=axis)
                else:
                    if p is None:
                        sl = sl.sum(axis=axis)
                    else:
                        sl = _mod_sum(sl, axis, p)
            val = sl if np.isscalar(sl) or sl.ndim == 0 else sl
            series.setdefault(pt, []).append(int(val))

    record(cur)
    grows = free_axis is None
    for n in range(1, n_max + 1):
        nxt = np.zeros(shape, dtype=dtype)
        if dtype is object:
            nxt[...] = 0
        if grows:
            # length-n walks never leave [0, n]^d: update only that corner
            ext = min(n + 1, n_max + 1)
            sub_shape = (ext,) * len(shape)
            view_n, view_c = nxt[tuple(slice(0, ext) for _ in shape)], cur[tuple(slice(0, ext) for _ in shape)]
        else:
            sub_shape, view_n, view_c = shape, nxt, cur
        for step, w in moves:
            dst, src = _slices_for_shift(sub_shape, step)
            if p is None:
                view_n[dst] += view_c[src] if w == 1 else w * view_c[src]
            else:
                # repeated unit adds keep every intermediate below 2p
                for _ in range(w):
                    view_n[dst] += view_c[src]
                    _mod_reduce(view_n, p)
        cur = nxt
        if keep_tables:
            tables.append(cur.copy())
        record(view_n if grows else cur)
    return series, tables


def count_octant(s: StepSet, n_max: int, mode="exact", keep_tables: bool | None = None) -> CountTable:
    """o(i,j,k;n): octant walks by endpoint and length."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if keep_tables is None:
        keep_tables = n_max <= 64
    shape = (n_max + 1,) * 3
    moves = [(st, 1) for st in s.steps()]
    series, tables = _run_dp(shape, (0, 0, 0), moves, n_max, mode, keep_tables)
    return CountTable(s, 3, n_max, mode, series, tables)


def count_quadrant(m: QuadrantModel, n_max: int, mode="exact", keep_tables: bool | None = None) -> CountTable:
    """q(i,j;n): quadrant walks with step multiplicities."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if keep_tables is None:
        keep_tables = n_max <= 128
    shape = (n_max + 1,) * 2
    moves = list(m.weights)
    series, tables = _run_dp(shape, (0, 0), moves, n_max, mode, keep_tables)
    return CountTable(m, 2, n_max, mode, series, tables)


def count_halfline(steps: dict[int, int], n_max: int) -> list[list[int]]:
    """c(k; n) for weighted walks on the half line; exact integers."""
    cur = [0] * (n_max + 1)
    cur[0] = 1
    out = [list(cur)]
    for _ in range(n_max):
        nxt = [0] * (n_max + 1)
        for a, w in steps.items():
            for k in range(n_max + 1):
                src = k - a
                if 0 <= src <= n_max and cur[src]:
                    nxt[k] += w * cur[src]
        cur = nxt
        out.append(list(cur))
    return out


def count_weighted_quadrant(weights: dict[tuple[int, int], LaurentPoly], n_max: int, nvars: int):
    """q(i,j;n) with formal Laurent-polynomial step weights (small n only)."""
    zero = LaurentPoly.zero(nvars)
    cur = {(0, 0): LaurentPoly.const(nvars, 1)}
    out = [dict(cur)]
    for _ in range(n_max):
        nxt: dict[tuple[int, int], LaurentPoly] = {}
        for (i, j), val in cur.items():
            for (a, b), w in weights.items():
                ni, nj = i + a, j + b
                if ni < 0 or nj < 0:
                    continue
                prev = nxt.get((ni, nj), zero)
                nxt[(ni, nj)] = prev + (w * val if isinstance(w, LaurentPoly) else val.scale(w))
        cur = {k: v for k, v in nxt.items() if not v.is_zero()}
        out.append(dict(cur))
    return out


@dataclass
class ColouredCountTable:
    """c(endpoint; n, k): coloured two-set walks, k = number of black steps."""

    u_steps: tuple
    v_steps: tuple
    dims: int
    n_max: int
    tables: list  # tables[n][endpoint + (k,)]

    def count(self, endpoint: tuple[int, ...], n: int, k: int) -> int:
        idx = tuple(endpoint) + (k,)
        arr = self.tables[n]
        if any(x < 0 or x >= s for x, s in zip(idx, arr.shape)):
            return 0
        return int(arr[idx])


def count_coloured(u_steps, v_steps, dims: int, n_max: int) -> ColouredCountTable:
    """Walks in N^dims over U ∪ V with steps coloured white (U) / black (V).

    Steps in U∖V are white, V∖U black, U∩V free choice; k tracks black steps.
    """
    u = {tuple((s,) if isinstance(s, int) else s) for s in u_steps}
    v = {tuple((s,) if isinstance(s, int) else s) for s in v_steps}
    if not u | v:
        raise ValueError("U and V cannot both be empty")
    shape = (n_max + 1,) * dims + (n_max + 1,)
    cur = np.zeros(shape, dtype=object)
    cur[...] = 0
    cur[(0,) * (dims + 1)] = 1
    tables = [cur.copy()]
    for _ in range(n_max):
        nxt = np.zeros(shape, dtype=object)
        nxt[...] = 0
        for step in u | v:
            white = step in u
            black = step in v
            if white:
                dst, src = _slices_for_shift(shape, step + (0,))
                nxt[dst] += cur[src]
            if black:
                dst, src = _slices_for_shift(shape, step + (1,))
                nxt[dst] += cur[src]
        cur = nxt
        tables.append(cur.copy())
    return ColouredCountTable(tuple(sorted(u)), tuple(sorted(v)), dims, n_max, tables)


def count_mixed(s: StepSet, free_axis: int, n_max: int, mode="exact") -> CountTable:
    """Octant in two axes, unconstrained in `free_axis` (tracked on [-N, N])."""
    if free_axis not in (0, 1, 2):
        raise ValueError("free axis must be 0, 1 or 2")
    shape = tuple((2 * n_max + 1) if v == free_axis else (n_max + 1) for v in range(3))
    start = tuple(n_max if v == free_axis else 0 for v in range(3))
    moves = [(st, 1) for st in s.steps()]
    series, tables = _run_dp(shape, start, moves, n_max, mode, True, spec_dims=3, free_axis=free_axis)
    return CountTable(s, 3, n_max, mode, series, tables, free_axis=free_axis)


def reflection_combine(mixed: CountTable) -> "ReflectedTable":
    """Octant counts from the mixed table by the one-dimensional reflection
    o(..., k, ...; n) = q(..., k, ...; n) - q(..., k+2, ...; n).

    Valid when the free-axis factor of the step set is exactly {+1, -1}
    attached to a fixed two-dimensional part; callers check that shape.
    """
    return ReflectedTable(mixed)


@dataclass
class ReflectedTable:
    mixed: CountTable

    def count(self, endpoint: tuple[int, int, int], n: int) -> int:
        if any(x < 0 for x in endpoint):
            return 0
        bumped = tuple(
            x + 2 if v == self.mixed.free_axis else x for v, x in enumerate(endpoint)
        )
        return self.mixed.count(endpoint, n) - self.mixed.count(bumped, n)
