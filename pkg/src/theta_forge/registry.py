"""Check records and the harness that runs them.

Every verified statement lives in the catalog as a CheckRecord: an id, a
citation (location + quote), and either a series builder (both sides of a
q-series identity at a requested precision) or a generator of relation
instances over a bounded parameter domain.  Relations are stored with
denominators cleared, so every comparison is between two exact integers.

Count-side evaluation goes through a shared VectorCache of batched lattice
counts; the single-point enumeration oracles stay separate (counting module)
and are cross-checked against this route in the test suite.
"""

from __future__ import annotations

import os
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .counting import count_N_vector, count_t_prime_vector, count_t_vector
from .series import series_equal

COUNTEREXAMPLE_CAP = 10

# per-record parameter-bound defaults, used when run with param_bound=None
DEFAULT_BOUND_SMALL = 15  # records with at most 3 free form coefficients
DEFAULT_BOUND_WIDE = 9    # 4-variable records


class UnknownCheckError(ValueError):
    """No record with the requested id."""


@dataclass(frozen=True)
class Term:
    """One summand `coef * kind(form; mul*n + off)` of a relation side."""

    coef: int
    kind: str  # 'N' (squares over Z), 't' (triangular over Z), 'tp' (triangular, natural)
    form: tuple[int, ...]
    mul: int = 1
    off: int = 0


@dataclass(frozen=True)
class RelationInstance:
    """A relation lhs = rhs for one parameter tuple, denominators cleared."""

    label: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]
    n_filter: Callable[[int], bool] | None = None
    rhs_extra: Callable[[int], int] | None = None


@dataclass
class RunOutcome:
    counterexamples: list
    total: int
    checked: int
    skipped: int
    extra: dict | None = None


@dataclass(frozen=True)
class CheckRecord:
    id: str
    kind: str  # 'series-identity' | 'count-relation' | 'characterization'
    citation: str
    params: str = ""
    series_builder: Callable[[int], list] | None = None
    instances: Callable[[int], Sequence[RelationInstance]] | None = None
    custom: Callable[["VectorCache", int, int], RunOutcome] | None = None
    n_start: int = 1
    default_param_bound: int | None = None


@dataclass
class CheckReport:
    id: str
    kind: str
    citation: str
    status: str  # 'pass' | 'fail' | 'skipped-hypothesis'
    n_max: int | None
    precision: int | None
    param_bound: int | None
    counterexamples: list
    counterexample_total: int
    checked: int
    skipped: int
    elapsed_ms: float
    extra: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "citation": self.citation,
            "status": self.status,
            "n_max": self.n_max,
            "precision": self.precision,
            "param_bound": self.param_bound,
            "counterexamples": self.counterexamples,
            "counterexample_total": self.counterexample_total,
            "checked": self.checked,
            "skipped": self.skipped,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.extra:
            out.update(self.extra)
        return out


class VectorCache:
    """Shared, thread-safe store for batched count vectors keyed by (kind, form)."""

    _BUILDERS = {
        "N": count_N_vector,
        "t": count_t_vector,
        "tp": count_t_prime_vector,
    }

    def __init__(self):
        self._lock = threading.Lock()
        self._vecs: dict[tuple[str, tuple[int, ...]], np.ndarray] = {}

    def get(self, kind: str, form: tuple[int, ...], m_max: int) -> np.ndarray:
        key = (kind, form)
        with self._lock:
            vec = self._vecs.get(key)
            if vec is None or len(vec) <= m_max:
                vec = self._BUILDERS[kind](form, m_max)
                self._vecs[key] = vec
            return vec


def natural_key(check_id: str):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", check_id)]


def registry() -> list[CheckRecord]:
    """All verifiable records, in catalog order (fixtures excluded)."""
    from . import catalog

    return list(catalog.RECORDS)


def lookup(check_id: str) -> CheckRecord:
    """Find a record by id; fixtures (deliberately false statements) included."""
    from . import catalog

    rec = catalog.BY_ID.get(check_id)
    if rec is None:
        raise UnknownCheckError(f"no check record with id {check_id!r}")
    return rec


def _resolve(record_or_id) -> CheckRecord:
    if isinstance(record_or_id, CheckRecord):
        return record_or_id
    return lookup(record_or_id)


def run_series_check(record_or_id, precision: int) -> CheckReport:
    """Build both sides of a series identity and compare coefficientwise."""
    record = _resolve(record_or_id)
    if record.kind != "series-identity":
        raise UnknownCheckError(f"{record.id} is a {record.kind}, not a series identity")
    if precision < 1:
        raise ValueError("precision must be positive")
    start = time.perf_counter()
    counterexamples = []
    total = 0
    checked = 0
    for label, lhs, rhs in record.series_builder(precision):
        order = min(precision, lhs.precision, rhs.precision)
        checked += 1
        if order < 1:
            continue  # zero-width window: nothing to compare
        match = series_equal(lhs, rhs, order)
        if not match.equal:
            total += 1
            if len(counterexamples) < COUNTEREXAMPLE_CAP:
                counterexamples.append(
                    {"params": label, "n": match.first_mismatch,
                     "lhs": match.lhs, "rhs": match.rhs}
                )
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckReport(
        id=record.id, kind=record.kind, citation=record.citation,
        status="fail" if total else "pass",
        n_max=None, precision=precision, param_bound=None,
        counterexamples=counterexamples, counterexample_total=total,
        checked=checked, skipped=0, elapsed_ms=round(elapsed, 3),
    )


def _run_instances(record: CheckRecord, n_max: int, bound: int, cache: VectorCache) -> RunOutcome:
    counterexamples = []
    total = 0
    checked = 0
    skipped = 0
    for inst in record.instances(bound):
        arrs = [cache.get(t.kind, t.form, t.mul * n_max + t.off) for t in inst.lhs + inst.rhs]
        lhs_pairs = list(zip(inst.lhs, arrs[: len(inst.lhs)]))
        rhs_pairs = list(zip(inst.rhs, arrs[len(inst.lhs):]))
        for n in range(record.n_start, n_max + 1):
            if inst.n_filter is not None and not inst.n_filter(n):
                skipped += 1
                continue
            lv = sum(t.coef * int(arr[t.mul * n + t.off]) for t, arr in lhs_pairs)
            rv = sum(t.coef * int(arr[t.mul * n + t.off]) for t, arr in rhs_pairs)
            if inst.rhs_extra is not None:
                rv += inst.rhs_extra(n)
            checked += 1
            if lv != rv:
                total += 1
                if len(counterexamples) < COUNTEREXAMPLE_CAP:
                    counterexamples.append({"params": inst.label, "n": n, "lhs": lv, "rhs": rv})
    return RunOutcome(counterexamples, total, checked, skipped)


def run_count_check(record_or_id, n_max: int, param_bound: int | None = None,
                    cache: VectorCache | None = None) -> CheckReport:
    """Evaluate a count relation / characterization over its bounded domain."""
    record = _resolve(record_or_id)
    if record.kind == "series-identity":
        raise UnknownCheckError(f"{record.id} is a series identity, not a count check")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    bound = param_bound if param_bound is not None else record.default_param_bound
    if bound is None:
        bound = DEFAULT_BOUND_SMALL
    if bound < 1:
        raise ValueError("param_bound must be positive")
    if cache is None:
        cache = VectorCache()
    start = time.perf_counter()
    if n_max < record.n_start:
        outcome = RunOutcome([], 0, 0, 0)  # empty n domain, nothing to assert
    elif record.custom is not None:
        outcome = record.custom(cache, n_max, bound)
    else:
        outcome = _run_instances(record, n_max, bound, cache)
    elapsed = (time.perf_counter() - start) * 1000.0
    if outcome.total:
        status = "fail"
    elif outcome.checked == 0:
        status = "skipped-hypothesis"
    else:
        status = "pass"
    return CheckReport(
        id=record.id, kind=record.kind, citation=record.citation, status=status,
        n_max=n_max, precision=None, param_bound=bound,
        counterexamples=outcome.counterexamples[:COUNTEREXAMPLE_CAP],
        counterexample_total=outcome.total,
        checked=outcome.checked, skipped=outcome.skipped,
        elapsed_ms=round(elapsed, 3), extra=outcome.extra,
    )


def run_check(record_or_id, precision: int = 500, n_max: int = 200,
              param_bound: int | None = None, cache: VectorCache | None = None) -> CheckReport:
    record = _resolve(record_or_id)
    if record.kind == "series-identity":
        return run_series_check(record, precision)
    return run_count_check(record, n_max, param_bound, cache)


def _thread_cap() -> int:
    raw = os.environ.get("THETA_FORGE_THREADS", "").strip()
    if not raw:
        return min(4, os.cpu_count() or 1)
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(1, cap)


def run_all(precision: int = 500, n_max: int = 200, param_bound: int | None = None,
            threads: int | None = None) -> list[CheckReport]:
    """Run every record; reports come back ordered by id regardless of scheduling."""
    records = sorted(registry(), key=lambda r: natural_key(r.id))
    cache = VectorCache()
    workers = threads if threads is not None else _thread_cap()
    if workers <= 1:
        reports = [run_check(r, precision, n_max, param_bound, cache) for r in records]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_check, r, precision, n_max, param_bound, cache)
                       for r in records]
            reports = [f.result() for f in futures]
    return reports
