"""Acceptance criteria 1-10.  Each test carries a ``criterion`` marker; the
conftest prints one PASS/FAIL line per criterion after the run."""

import random
import time
from collections import Counter
from pathlib import Path

import pytest

from bracketstraight.cases import build_turnbull_young, builtin_cases
from bracketstraight.column_bracket import clear_cache, straighten_cb
from bracketstraight.coordinate import expand
from bracketstraight.core import BracketPolynomial, column_sort
from bracketstraight.harness import ALGORITHMS, generate_corpus, instrumented_straighten, run_benchmark_suite
from bracketstraight.rota import build_triangular_system, straightening_coefficients
from bracketstraight.textio import parse_tableau_file, serialize_polynomial
from checks import random_cases

DATA = Path(__file__).parent / "data"


def poly(*pairs):
    return BracketPolynomial.from_terms(pairs)


def report(n, message):
    print(f"criterion {n}: {message}")


CORPUS = generate_corpus(2, 3, 6) + generate_corpus(3, 3, 9) + generate_corpus(2, 3, 5, multilinear=False)


@pytest.fixture(scope="module")
def corpus_forms():
    """Normal form of every corpus tableau under every algorithm."""
    return {alg: [instrumented_straighten(BracketPolynomial({t: 1}), alg)[0] for t in CORPUS]
            for alg in ALGORITHMS}


# 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1)
@pytest.mark.parametrize("alg", ALGORITHMS)
def test_c1_golden_every_algorithm(alg):
    expected = poly((1, [[1, 3, 5], [2, 4, 6]]), (-1, [[1, 2, 5], [3, 4, 6]]), (-1, [[1, 2, 3], [4, 5, 6]]))
    start = time.perf_counter()
    nf, _ = instrumented_straighten(BracketPolynomial.monomial([[1, 4, 6], [2, 3, 5]]), alg)
    elapsed = time.perf_counter() - start
    report(1, f"{alg} {elapsed:.3f}s")
    assert nf == expected
    assert elapsed < 1


# 2 -------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("alg", ALGORITHMS)
def test_c2_five_term_normal_form(alg):
    expected = poly((1, [[1, 3, 5], [2, 4, 6]]), (-1, [[1, 3, 4], [2, 5, 6]]), (-1, [[1, 2, 5], [3, 4, 6]]),
                    (1, [[1, 2, 4], [3, 5, 6]]), (-1, [[1, 2, 3], [4, 5, 6]]))
    nf, _ = instrumented_straighten(BracketPolynomial.monomial([[1, 4, 5], [2, 3, 6]]), alg)
    assert nf == expected
    assert nf.leading_term() == (1, ((1, 3, 5), (2, 4, 6)))


# 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_c3_rota_system():
    system = build_triangular_system(((1, 4, 6), (2, 3, 5)))
    assert system.matrix == [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [1, 0, 0, 0, 1]]
    assert system.rhs == [1, 0, -1, 0, 0]
    assert system.solve() == [1, 0, -1, 0, -1]
    report(3, "matrix, right side and solution reproduced")


# 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_c4_oracle_equivalence():
    corpus = generate_corpus(2, 3, 6) + generate_corpus(3, 3, 9)
    assert len(corpus) >= 5 + 100
    start = time.perf_counter()
    for t in corpus:
        f = BracketPolynomial({t: 1})
        nf, _ = straighten_cb(f)
        assert expand(nf, len(t) * len(t[0])) == expand(f, len(t) * len(t[0])), t
    elapsed = time.perf_counter() - start
    report(4, f"{len(corpus)} tableaux in {elapsed:.1f}s")
    assert elapsed < 60


@pytest.mark.criterion(4)
def test_c4_all_algorithms_expand_correctly(corpus_forms):
    # every distinct normal form produced by any algorithm is checked
    seen = set()
    for alg, forms in corpus_forms.items():
        for t, nf in zip(CORPUS, forms):
            key = (t, serialize_polynomial(nf))
            if key in seen:
                continue
            seen.add(key)
            m = max(s for row in t for s in row)
            assert expand(nf, m) == expand(BracketPolynomial({t: 1}), m), (alg, t)


# 5 -------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_c5_leading_term_is_column_sort(corpus_forms):
    for alg, forms in corpus_forms.items():
        for t, nf in zip(CORPUS, forms):
            assert nf.leading_term() == (1, column_sort(t)), (alg, t)
    report(5, f"{len(CORPUS)} tableaux x {len(ALGORITHMS)} algorithms")


# 6 -------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_c6_corpus_agreement(corpus_forms):
    reference = corpus_forms["coord"]
    for alg, forms in corpus_forms.items():
        for t, a, b in zip(CORPUS, forms, reference):
            assert serialize_polynomial(a) == serialize_polynomial(b), (alg, t)
    report(6, f"corpus: {len(CORPUS)} tableaux, all {len(ALGORITHMS)} algorithms agree")


# Algorithms run on each built-in case.  Omissions are capacity limits:
# rota needs every standard tableau of the content (6006 for 5x3), pc and
# coord expand into (n!)^(d-1) or (n!)^d terms per step, and on 6x3 vw and
# white5 run past 200000 rewriting steps.
EVERYTHING = ALGORITHMS
SCOPE = {
    "3x3": EVERYTHING,
    "4x3": EVERYTHING,
    "5x3": ("vw", "white1", "white2", "white3", "white4", "white5", "cb"),
    "6x3": ("white1", "white2", "white3", "white4", "cb"),
    "turnbull-young": ("vw", "white1", "white2", "white3", "white4", "white5", "cb"),
}


def _scope(name):
    return SCOPE[name if name == "turnbull-young" else name.split("-")[0]]


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", list(builtin_cases()))
def test_c6_benchmark_agreement(name):
    algs = _scope(name)
    rep = run_benchmark_suite({name: builtin_cases()[name]}, algs, include_time=False)
    assert [row["error"] for row in rep.rows] == [""] * len(algs)
    sizes = {row["normal_form_terms"] for row in rep.rows}
    assert len(sizes) == 1
    report(6, f"{name}: {', '.join(algs)} agree on {sizes.pop()} terms")


# 7 -------------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_c7_cb_statistics():
    _, stats = instrumented_straighten(BracketPolynomial.monomial([[1, 8, 9], [2, 6, 7], [3, 4, 5]]), "cb")
    report(7, stats.summary())
    assert stats.per_step_terms == [14, 7, 2]
    assert (stats.steps, stats.max_terms, stats.total_terms) == (3, 14, 23)


# 8 -------------------------------------------------------------------------

def _ty(rows):
    return parse_tableau_file("symbols=10 base=0\n" + " ; ".join(rows))


@pytest.mark.criterion(8)
def test_c8_turnbull_young():
    k, _ = build_turnbull_young()
    assert len(k) == 240
    clear_cache()  # time a cold run
    start = time.perf_counter()
    nf, stats = instrumented_straighten(k, "cb")
    elapsed = time.perf_counter() - start
    report(8, f"cb: {len(nf)} terms, {stats.steps} steps, {elapsed:.1f}s")
    assert len(nf) == 473
    assert elapsed <= 600
    (c1, t1), = _ty(["0 1 2 3", "0 1 2 3", "4 5 6 7", "6 7 8 9", "4 5 8 9"])
    (c2, t2), = _ty(["0 1 2 3", "0 1 2 3", "4 6 8 9", "5 7 8 9", "4 5 6 7"])
    assert nf.coefficient(t1) == -12 * c1
    assert nf.coefficient(t2) == 12 * c2
    # every coefficient of the reference table, not just a few spot checks
    table = parse_tableau_file((DATA / "turnbull_young_normal_form.txt").read_text())
    assert len(table) == 473
    mismatches = [t for t in set(table.tableaux()) | set(nf.tableaux()) if table.coefficient(t) != nf.coefficient(t)]
    assert mismatches == []
    assert Counter(abs(c) for c, _ in nf) == Counter(abs(c) for c, _ in table)


# 9 -------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_c9_xi_recursion_matches_cb():
    rng = random.Random(9)
    sample = generate_corpus(2, 3, 6) + rng.sample(generate_corpus(3, 3, 9), 25)
    for t in sample:
        got = {s: c for s, c in straightening_coefficients(t) if c}
        assert got == straighten_cb(BracketPolynomial({t: 1}))[0].as_dict(), t
    report(9, f"{len(sample)} tableaux")


# 10 ------------------------------------------------------------------------

@pytest.mark.criterion(10)
def test_c10_property_suites():
    cases = random_cases(random.Random(10), 200)
    counts = Counter()
    for name, check, args in cases:
        check(*args)
        counts[name] += 1
    report(10, ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    assert len(counts) == 5
    assert min(counts.values()) >= 200
