"""Exhaustive counterexample search for the seven open conjectures.

A scan never proves anything: a clean report means "no counterexample up to
n_max", nothing stronger.  Counterexamples are first-class results, not
errors; the scan for the quadruple family (C6.5) covers the full printed
list, four entries of which are genuinely false (see the decisions notes in
the repository docs) and show up here as counterexamples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .registry import COUNTEREXAMPLE_CAP, Term, VectorCache


def _N(coef, form, mul=1, off=0):
    return Term(coef, "N", tuple(form), mul, off)


def _t(coef, form, mul=1, off=0):
    return Term(coef, "t", tuple(form), mul, off)


@dataclass(frozen=True)
class Family:
    """One parameter tuple of a conjecture: lhs = rhs, optionally filtered in n."""

    form: tuple[int, ...]
    label: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]
    n_filter: object = None  # Callable[[int], bool] | None


@dataclass
class ConjectureReport:
    id: str
    kind: str
    citation: str
    status: str  # 'pass' (no counterexample in range) | 'fail'
    n_max: int
    families: list
    counterexamples: list
    counterexample_total: int
    verified_count: int
    skipped_count: int
    residue_classes: list | None
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "citation": self.citation,
            "status": self.status,
            "n_max": self.n_max,
            "precision": None,
            "param_bound": None,
            "families": self.families,
            "counterexamples": self.counterexamples,
            "counterexample_total": self.counterexample_total,
            "verified_count": self.verified_count,
            "skipped_count": self.skipped_count,
            "residue_classes": self.residue_classes,
            "elapsed_ms": self.elapsed_ms,
        }


def _ratio_families(forms, lhs_coef, rhs_big, rhs_small, n_filter=None):
    """Families of shape lhs_coef*t(f;n) = rhs_big*N(f;4(8n+s)) + rhs_small*N(f;8n+s)."""
    fams = []
    for f in forms:
        s = sum(f)
        fams.append(Family(
            form=f, label=str(f),
            lhs=(_t(lhs_coef, f),),
            rhs=(_N(rhs_big, f, 32, 4 * s), _N(rhs_small, f, 8, s)),
            n_filter=n_filter,
        ))
    return fams


_C61_TRIPLES = [(1, 1, 7), (1, 1, 15), (1, 7, 7), (1, 7, 15), (1, 9, 15),
                (1, 15, 15), (1, 15, 25)]
_C62_TRIPLES = [(1, 3, 5), (1, 3, 7), (1, 3, 15), (1, 3, 21), (1, 5, 15),
                (1, 7, 21), (3, 5, 9), (3, 5, 15), (3, 7, 21)]
_C63_TRIPLES = [(1, 2, 15), (1, 15, 18), (1, 15, 30)]
C65_QUADRUPLES = [
    (1, 1, 1, 2), (1, 1, 1, 3), (1, 1, 1, 4), (1, 1, 1, 5), (1, 1, 1, 6),
    (1, 1, 2, 2), (1, 1, 2, 3), (1, 1, 2, 4), (1, 1, 3, 3), (1, 1, 3, 9),
    (1, 1, 6, 9), (1, 2, 2, 2), (1, 2, 2, 3), (1, 3, 3, 3), (1, 3, 3, 6),
    (1, 3, 6, 6), (1, 3, 9, 9), (1, 6, 9, 9), (2, 3, 3, 3),
]
C65_CONJECTURED = [(1, 1, 6, 9), (1, 3, 3, 6), (1, 6, 9, 9), (2, 3, 3, 3)]


def _c66_families():
    fams = []
    for f, off1, off2 in [((1, 1, 1, 7), 5, 10), ((1, 7, 7, 7), 11, 22)]:
        fams.append(Family(
            form=f, label=f"{f} first equality",
            lhs=(_t(3, f),), rhs=(_N(1, f, 16, 4 * off1), _N(-1, f, 4, off1)),
        ))
        fams.append(Family(
            form=f, label=f"{f} second equality",
            lhs=(_t(7, f),), rhs=(_N(2, f, 32, 8 * off1), _N(-4, f, 8, off2)),
        ))
    return fams


def _definitions():
    return {
        "C6.1": (
            'Conjecture 6.1: "t(a,b,c;n) = (1/2)(N(a,b,c;4(8n+a+b+c)) - N(a,b,c;8n+a+b+c))"'
            " for the seven listed triples",
            _ratio_families(_C61_TRIPLES, 2, 1, -1),
        ),
        "C6.2": (
            'Conjecture 6.2: "t(a,b,c;n) = (1/2)(3N(a,b,c;8n+a+b+c) - N(a,b,c;4(8n+a+b+c)))"'
            " for the nine listed triples",
            [Family(form=f, label=str(f), lhs=(_t(2, f),),
                    rhs=(_N(3, f, 8, sum(f)), _N(-1, f, 32, 4 * sum(f))))
             for f in _C62_TRIPLES],
        ),
        "C6.3": (
            'Conjecture 6.3: the (1/2)(N(;4(8n+s)) - N(;8n+s)) relation for (1,2,15),'
            ' (1,15,18), (1,15,30) "with 2|n"',
            _ratio_families(_C63_TRIPLES, 2, 1, -1, n_filter=lambda n: n % 2 == 0),
        ),
        "C6.4": (
            'Conjecture 6.4: "t(1,1,27;n) = (1/2)(N(1,1,27;4(8n+29)) - N(1,1,27;8n+29))"'
            ' for "n = 0,2 mod 3"',
            _ratio_families([(1, 1, 27)], 2, 1, -1, n_filter=lambda n: n % 3 in (0, 2)),
        ),
        "C6.5": (
            'Conjecture 6.5 plus its Maple-verified list: "t(a,b,c,d;n) ='
            ' (1/6)(N(a,b,c,d;4(8n+a+b+c+d)) - N(a,b,c,d;8n+a+b+c+d))" over the 19'
            " printed quadruples",
            _ratio_families(C65_QUADRUPLES, 6, 1, -1),
        ),
        "C6.6": (
            'Conjecture 6.6: "t = (1/3)(N(;16n+..) - N(;4n+..)) = (2/7)(N(;32n+..)'
            ' - 2N(;8n+..))" for (1,1,1,7) and (1,7,7,7), each equality scanned'
            " independently",
            _c66_families(),
        ),
        "C6.7": (
            'Conjecture 6.7: "n is represented by x(x-1)/2 + y(y-1)/2 + 6z(z-1)/2 if and'
            ' only if n != 2*3^(2r-1) - 1 mod 3^(2r) for r = 1,2,3,..."',
            None,  # biconditional, handled by _scan_c67
        ),
    }


CONJECTURE_IDS = tuple(_definitions().keys())


def excluded_classes_c67(n_max: int) -> list[tuple[int, int]]:
    """The (modulus, residue) pairs 3^(2r), 2*3^(2r-1)-1 with 3^(2r) <= 8*n_max+8.

    Any class with a larger modulus has smallest member 2*3^(2r-1)-1 > n_max,
    so this set decides membership for every n <= n_max.
    """
    classes = []
    p = 3  # 3^(2r-1)
    while 3 * p <= 8 * n_max + 8:
        classes.append((3 * p, 2 * p - 1))
        p *= 9
    return classes


def _scan_c67(citation, n_max, cache):
    classes = excluded_classes_c67(n_max)
    tvec = cache.get("t", (1, 1, 6), n_max)
    counterexamples = []
    total = verified = 0
    for n in range(1, n_max + 1):
        excluded = any(n % mod == res for mod, res in classes)
        representable = int(tvec[n]) > 0
        if representable == (not excluded):
            verified += 1
            continue
        total += 1
        if len(counterexamples) < COUNTEREXAMPLE_CAP:
            direction = ("excluded class but representable" if excluded
                         else "allowed class but not representable")
            counterexamples.append({"params": direction, "n": n,
                                    "lhs": int(tvec[n]), "rhs": int(not excluded)})
    families = [{"form": [1, 1, 6], "label": "(1,1,6) biconditional",
                 "verified": verified, "skipped": 0, "counterexamples": total}]
    return families, counterexamples, total, verified, 0, [list(c) for c in classes]


def scan(conjecture_id: str, n_max: int, cache: VectorCache | None = None) -> ConjectureReport:
    """Scan one conjecture for counterexamples over 1 <= n <= n_max."""
    defs = _definitions()
    if conjecture_id not in defs:
        raise KeyError(f"unknown conjecture id {conjecture_id!r}; know {list(defs)}")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    citation, families = defs[conjecture_id]
    if cache is None:
        cache = VectorCache()
    start = time.perf_counter()
    if conjecture_id == "C6.7":
        fam_rows, counterexamples, total, verified, skipped, classes = _scan_c67(
            citation, n_max, cache)
    else:
        classes = None
        fam_rows = []
        counterexamples = []
        total = verified = skipped = 0
        for fam in families:
            arrs = [cache.get(t.kind, t.form, t.mul * n_max + t.off)
                    for t in fam.lhs + fam.rhs]
            lhs_pairs = list(zip(fam.lhs, arrs[: len(fam.lhs)]))
            rhs_pairs = list(zip(fam.rhs, arrs[len(fam.lhs):]))
            fam_verified = fam_skipped = fam_bad = 0
            for n in range(1, n_max + 1):
                if fam.n_filter is not None and not fam.n_filter(n):
                    fam_skipped += 1
                    continue
                lv = sum(t.coef * int(arr[t.mul * n + t.off]) for t, arr in lhs_pairs)
                rv = sum(t.coef * int(arr[t.mul * n + t.off]) for t, arr in rhs_pairs)
                if lv == rv:
                    fam_verified += 1
                else:
                    fam_bad += 1
                    if len(counterexamples) < COUNTEREXAMPLE_CAP:
                        counterexamples.append({"params": fam.label, "n": n,
                                                "lhs": lv, "rhs": rv})
            fam_rows.append({"form": list(fam.form), "label": fam.label,
                             "verified": fam_verified, "skipped": fam_skipped,
                             "counterexamples": fam_bad})
            verified += fam_verified
            skipped += fam_skipped
            total += fam_bad
    elapsed = (time.perf_counter() - start) * 1000.0
    return ConjectureReport(
        id=conjecture_id, kind="conjecture", citation=citation,
        status="fail" if total else "pass", n_max=n_max,
        families=fam_rows, counterexamples=counterexamples,
        counterexample_total=total, verified_count=verified, skipped_count=skipped,
        residue_classes=classes, elapsed_ms=round(elapsed, 3),
    )


def scan_all(n_max: int, cache: VectorCache | None = None) -> list[ConjectureReport]:
    if cache is None:
        cache = VectorCache()
    return [scan(cid, n_max, cache) for cid in CONJECTURE_IDS]
