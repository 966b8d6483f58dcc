"""Full classification pipeline with a persistent, resumable record store.

Each model flows through dimension analysis, group exploration, orbit-sum
zero testing, Hadamard detection and series verification; one JSON-Lines
record per canonical code.  The store starts with a schema header; re-runs
skip codes already present, so multi-hour sweeps can be interrupted freely.
Workers compute records in parallel; a single appender serialises writes.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass

from .group import DegenerateModelError, explore_group, orbit_sum_is_zero
from .hadamard import detect_hadamard
from .steps import StepSet, dimension, enumerate_models, project_to_quadrant, quadrant_models_multiplicity_free
from .verify import verify_extraction, verify_functional_equation

SCHEMA_VERSION = 1
SCOPES = ("3d", "2d-projected", "2d-free")
DEFAULT_BOUND = 200
FUNEQ_ORDER = 8


@dataclass
class ClassificationRecord:
    code: str
    cardinality: int
    dimension: int
    redundant_axes: list[str]
    group_order: int | None  # None = bound exceeded
    orbit_sum_zero: bool | None
    hadamard_kinds: list[list[int]]
    extraction: str | None  # "ok" | "fails" | "inconclusive" | None
    verifications: dict

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "cardinality": self.cardinality,
            "dimension": self.dimension,
            "redundant_axes": self.redundant_axes,
            "group_order": self.group_order,
            "orbit_sum_zero": self.orbit_sum_zero,
            "hadamard_kinds": self.hadamard_kinds,
            "extraction": self.extraction,
            "verifications": self.verifications,
        }


def models_for_scope(scope: str, max_card: int):
    """(key, model) pairs for a scope, deterministic order."""
    if scope == "3d":
        for s in enumerate_models(max_card, filters=("dim3",)):
            yield s.code_hex(), s
        return
    if scope == "2d-free":
        for qm in quadrant_models_multiplicity_free():
            if qm.cardinality <= max_card:
                yield qm.render(), qm
        return
    if scope == "2d-projected":
        seen = {}
        for s in enumerate_models(max_card, filters=("dim2or3",)):
            da = dimension(s)
            if da.dimension != 2:
                continue
            for axis in sorted(da.redundant_axes):
                qm = project_to_quadrant(s, axis)
                seen.setdefault(qm.render(), qm)
        for key in sorted(seen, key=lambda k: (seen[k].cardinality, k)):
            yield key, seen[key]
        return
    raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES}")


def classify_one(key: str, model, bound: int = DEFAULT_BOUND, order: int | None = None) -> ClassificationRecord:
    if isinstance(model, StepSet):
        da = dimension(model)
        dim = da.dimension
        axes = sorted(da.redundant_axes)
        card = model.cardinality
        default_order = 12
    else:
        dim = 2
        axes = []
        card = model.cardinality
        default_order = 16
    if order is None:
        order = default_order

    verifications: dict = {}
    grp = explore_group(model, bound=bound)
    hadamard_kinds: list[list[int]] = []
    extraction = None
    os_zero = None
    if grp.finite:
        os_zero = orbit_sum_is_zero(grp)
        if isinstance(model, StepSet):
            hadamard_kinds = [list(k) for k in sorted({d.kind for d in detect_hadamard(model)})]
        if not os_zero and order:
            rep = verify_extraction(model, order, group=grp)
            if rep.passed:
                extraction = "ok"
            elif rep.details.get("inconclusive"):
                extraction = "inconclusive"
            else:
                extraction = "fails"
            verifications["extraction"] = rep.passed
        funeq = verify_functional_equation(model, FUNEQ_ORDER)
        verifications["functional_equation"] = funeq.passed
    return ClassificationRecord(
        code=key,
        cardinality=card,
        dimension=dim,
        redundant_axes=axes,
        group_order=grp.order if grp.finite else None,
        orbit_sum_zero=os_zero,
        hadamard_kinds=hadamard_kinds,
        extraction=extraction,
        verifications=verifications,
    )


class RecordStore:
    """Append-only JSON Lines keyed by canonical code, with a schema header."""

    def __init__(self, path: str, scope: str, bound: int, order: int | None):
        self.path = path
        self.scope = scope
        self.bound = bound
        self.order = order
        self.records: dict[str, dict] = {}
        if os.path.exists(path) and os.path.getsize(path):
            with open(path) as fh:
                header = json.loads(fh.readline())
                if header.get("schema") != SCHEMA_VERSION:
                    raise ValueError(f"store schema {header.get('schema')} != {SCHEMA_VERSION}; refusing to append")
                for field, value in (("scope", scope), ("bound", bound)):
                    if header.get(field) != value:
                        raise ValueError(f"store {field}={header.get(field)!r} does not match requested {value!r}")
                for line in fh:
                    if line.strip():
                        rec = json.loads(line)
                        self.records[rec["code"]] = rec
            self._fh = open(path, "a")
        else:
            self._fh = open(path, "w")
            self._fh.write(json.dumps({
                "schema": SCHEMA_VERSION, "scope": scope, "bound": bound, "order": order,
            }) + "\n")
            self._fh.flush()

    def __contains__(self, code: str) -> bool:
        return code in self.records

    def append(self, rec: ClassificationRecord) -> None:
        payload = rec.to_json()
        self.records[rec.code] = payload
        self._fh.write(json.dumps(payload) + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()


def _worker(args):
    key, model, bound, order = args
    try:
        return key, classify_one(key, model, bound, order).to_json()
    except DegenerateModelError as exc:
        return key, {"code": key, "error": str(exc)}


def run_classify(
    max_card: int,
    scope: str = "3d",
    store_path: str | None = None,
    bound: int = DEFAULT_BOUND,
    order: int | None = None,
    jobs: int | None = None,
    progress=None,
):
    """Classify every model in scope; returns the summary dict.

    With a store path the run is resumable: existing records are kept and
    only missing codes are computed.
    """
    store = RecordStore(store_path, scope, bound, order) if store_path else None
    todo = [(k, m) for k, m in models_for_scope(scope, max_card) if store is None or k not in store]
    results: dict[str, dict] = dict(store.records) if store else {}
    if jobs is None:
        jobs = int(os.environ.get("OCTANTWALKS_JOBS", "1"))
    tasks = [(k, m, bound, order) for k, m in todo]
    if jobs > 1 and len(tasks) > 8:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            for i, (key, payload) in enumerate(pool.imap(_worker, tasks, chunksize=16)):
                results[key] = payload
                if store:
                    store.records[key] = payload
                    store._fh.write(json.dumps(payload) + "\n")
                    if i % 64 == 0:
                        store._fh.flush()
                if progress and i % 500 == 0:
                    progress(i, len(tasks))
        if store:
            store._fh.flush()
    else:
        for i, task in enumerate(tasks):
            key, payload = _worker(task)
            results[key] = payload
            if store:
                store.records[key] = payload
                store._fh.write(json.dumps(payload) + "\n")
                store._fh.flush()
            if progress and i % 500 == 0:
                progress(i, len(tasks))
    if store:
        store.close()
    return summarise(results.values())


def _card_vector(cards: Counter, lo: int = 3, hi: int = 6) -> list[int]:
    return [cards.get(c, 0) for c in range(lo, hi + 1)]


def summarise(records) -> dict:
    """Counts by class and cardinality, in the shape of the survey tables."""
    recs = [r for r in records if "error" not in r]
    total = Counter(r["cardinality"] for r in recs)
    finite = [r for r in recs if r["group_order"] is not None]
    infinite = [r for r in recs if r["group_order"] is None]
    os_nonzero = [r for r in finite if r["orbit_sum_zero"] is False]
    os_zero = [r for r in finite if r["orbit_sum_zero"]]
    hadamard = [r for r in os_zero if r["hadamard_kinds"]]
    non_hadamard = [r for r in os_zero if not r["hadamard_kinds"]]
    extraction_ok = [r for r in os_nonzero if r["extraction"] == "ok"]
    extraction_fails = [r for r in os_nonzero if r["extraction"] in ("fails", "inconclusive")]
    lo, hi = 3, max(total, default=6)
    return {
        "records": len(recs),
        "errors": len([r for r in records if "error" in r]),
        "cardinalities": _card_vector(total, lo, hi),
        "total": sum(total.values()),
        "finite": {
            "total": len(finite),
            "by_card": _card_vector(Counter(r["cardinality"] for r in finite), lo, hi),
            "orders": dict(sorted(Counter(r["group_order"] for r in finite).items())),
        },
        "infinite": {
            "total": len(infinite),
            "by_card": _card_vector(Counter(r["cardinality"] for r in infinite), lo, hi),
        },
        "orbit_sum_nonzero": {
            "total": len(os_nonzero),
            "by_card": _card_vector(Counter(r["cardinality"] for r in os_nonzero), lo, hi),
        },
        "orbit_sum_zero": {
            "total": len(os_zero),
            "by_card": _card_vector(Counter(r["cardinality"] for r in os_zero), lo, hi),
        },
        "hadamard": {
            "total": len(hadamard),
            "by_card": _card_vector(Counter(r["cardinality"] for r in hadamard), lo, hi),
        },
        "non_hadamard": {
            "total": len(non_hadamard),
            "by_card": _card_vector(Counter(r["cardinality"] for r in non_hadamard), lo, hi),
            "orders": dict(sorted(Counter(r["group_order"] for r in non_hadamard).items())),
            "codes": sorted((r["code"], r["group_order"]) for r in non_hadamard),
        },
        "extraction": {
            "ok": len(extraction_ok),
            "fails": sorted(r["code"] for r in extraction_fails),
        },
        "verifications_all_passed": all(
            v for r in recs for v in r.get("verifications", {}).values()
        ),
    }


def load_store(path: str) -> tuple[dict, list[dict]]:
    with open(path) as fh:
        header = json.loads(fh.readline())
        if header.get("schema") != SCHEMA_VERSION:
            raise ValueError("store schema mismatch")
        return header, [json.loads(line) for line in fh if line.strip()]


def render_tables(summary: dict, scope: str) -> str:
    """Aligned-text classification tree in the shape of the survey tables."""
    lines = []
    b = summary
    lines.append(f"{scope} models: {b['total']} = {b['cardinalities']}")
    f = b["finite"]
    lines.append(f"  finite group: {f['total']} = {f['by_card']}, orders {f['orders']}")
    lines.append(f"    orbit sum != 0: {b['orbit_sum_nonzero']['total']} = {b['orbit_sum_nonzero']['by_card']}")
    lines.append(f"      kernel-method verified: {b['extraction']['ok']}")
    if b["extraction"]["fails"]:
        lines.append(f"      extraction fails: {b['extraction']['fails']}")
    lines.append(f"    orbit sum == 0: {b['orbit_sum_zero']['total']} = {b['orbit_sum_zero']['by_card']}")
    if scope == "3d":
        lines.append(f"      Hadamard: {b['hadamard']['total']} = {b['hadamard']['by_card']}")
        nh = b["non_hadamard"]
        lines.append(f"      not Hadamard: {nh['total']} = {nh['by_card']}, orders {nh['orders']}")
        for code, order in nh["codes"]:
            lines.append(f"        {code}  order {order}")
    lines.append(f"  group exceeds bound: {b['infinite']['total']} = {b['infinite']['by_card']}")
    return "\n".join(lines)
