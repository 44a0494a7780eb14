"""Instrumented runs, corpus generation and CSV benchmark reports."""

import csv
import io
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .column_bracket import DEFAULT_PC_BUDGET, straighten_cb, straighten_pc
from .coordinate import DEFAULT_BUDGET, straighten_coord
from .core import is_straight
from .errors import CapacityError, DisagreementError
from .rota import DEFAULT_TABLEAU_BUDGET, straighten_rota
from .stats import RotaCost, StepStats
from .syzygy import MAX_STEPS, straighten_vw, straighten_white
from .textio import serialize_polynomial

ALGORITHMS = ("vw", "white1", "white2", "white3", "white4", "white5", "rota", "cb", "pc", "coord")


def instrumented_straighten(f, alg, budget=None):
    """Run one algorithm; returns ``(normal_form, stats)``.

    ``stats`` is a StepStats for the rewriting algorithms, a RotaCost for
    rota and ``None`` for coord.  ``budget`` caps the number of rewriting
    steps of vw/white, the expansion size of pc/coord and the number of
    standard tableaux for rota.
    """
    if alg == "vw":
        return straighten_vw(f, max_steps=budget or MAX_STEPS)
    if alg.startswith("white") and alg[5:] in {"1", "2", "3", "4", "5"}:
        return straighten_white(f, int(alg[5:]), max_steps=budget or MAX_STEPS)
    if alg == "cb":
        return straighten_cb(f)
    if alg == "pc":
        return straighten_pc(f, budget or DEFAULT_PC_BUDGET)
    if alg == "rota":
        return straighten_rota(f, budget or DEFAULT_TABLEAU_BUDGET)
    if alg == "coord":
        return straighten_coord(f, budget=budget or DEFAULT_BUDGET), None
    raise ValueError(f"unknown algorithm {alg!r}; choose from {', '.join(ALGORITHMS)}")


def generate_corpus(d, n, m, multilinear=True, limit=None):
    """Row-normalized non-straight monic d x n tableaux over symbols 1..m.

    Multilinear tableaux use d*n distinct symbols; otherwise any multiset of
    d rows (each row a set of n symbols) is allowed.  The order is
    deterministic; ``limit`` truncates.
    """
    if limit is not None and limit <= 0:
        return []
    out = []

    def keep(t):
        if not is_straight(t):
            out.append(t)
        return limit is not None and len(out) >= limit

    if multilinear:
        if d * n > m:
            raise ValueError(f"a multilinear {d}x{n} tableau needs {d * n} symbols, have {m}")
        for chosen in combinations(range(1, m + 1), d * n):
            for t in _set_partitions(chosen, n):
                if keep(t):
                    return out
    else:
        rows = list(combinations(range(1, m + 1), n))
        for t in combinations_with_replacement(rows, d):
            if keep(t):
                return out
    return out


def _set_partitions(symbols, n):
    # rows of size n, each row holding the smallest symbol still unused
    if not symbols:
        yield ()
        return
    first, rest = symbols[0], symbols[1:]
    for others in combinations(rest, n - 1):
        remaining = tuple(s for s in rest if s not in others)
        for tail in _set_partitions(remaining, n):
            yield ((first,) + others,) + tail


CSV_FIELDS = ["case", "algorithm", "steps", "max_terms", "total_terms", "rota_cost",
              "normal_form_terms", "seconds", "error"]


@dataclass
class BenchmarkReport:
    rows: list = field(default_factory=list)
    include_time: bool = True

    def to_csv(self):
        buf = io.StringIO()
        fields = CSV_FIELDS if self.include_time else [f for f in CSV_FIELDS if f != "seconds"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for row in self.rows:
            w.writerow(row)
        return buf.getvalue()


def run_benchmark_suite(cases, algorithms, budget=None, include_time=True):
    """Straighten every case with every algorithm and collect statistics.

    ``cases`` maps case ids to bracket polynomials.  Algorithms that hit a
    capacity limit are recorded with an error; other errors propagate.  All successful algorithms
    must agree on each case's normal form, otherwise DisagreementError.
    """
    report = BenchmarkReport(include_time=include_time)
    for name, f in cases.items():
        forms = {}
        for alg in algorithms:
            row = dict.fromkeys(CSV_FIELDS, "")
            row.update(case=name, algorithm=alg)
            start = time.perf_counter()
            try:
                nf, stats = instrumented_straighten(f, alg, budget)
            except CapacityError as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
                report.rows.append(row)
                continue
            row["seconds"] = f"{time.perf_counter() - start:.3f}"
            if isinstance(stats, StepStats):
                row.update(steps=stats.steps, max_terms=stats.max_terms, total_terms=stats.total_terms)
            elif isinstance(stats, RotaCost):
                row["rota_cost"] = stats.total
            row["normal_form_terms"] = len(nf)
            forms[alg] = serialize_polynomial(nf)
            report.rows.append(row)
        if len(set(forms.values())) > 1:
            groups = {}
            for alg, text in forms.items():
                groups.setdefault(text, []).append(alg)
            raise DisagreementError(
                f"case {name}: normal forms differ between {' / '.join(','.join(g) for g in groups.values())}")
    return report

