"""Benchmark tableaux and the Turnbull-Young polynomial."""

from itertools import permutations

from .core import BracketPolynomial

CASES = {
    "3x3-1": [[1, 8, 9], [2, 6, 7], [3, 4, 5]],
    "3x3-2": [[1, 6, 9], [2, 3, 7], [4, 5, 8]],
    "3x3-3": [[1, 5, 7], [2, 6, 8], [3, 4, 9]],
    "4x3-1": [[1, 11, 12], [2, 9, 10], [3, 7, 8], [4, 5, 6]],
    "4x3-2": [[1, 8, 12], [2, 7, 11], [3, 6, 10], [4, 5, 9]],
    "4x3-3": [[1, 10, 11], [2, 7, 12], [3, 6, 8], [4, 5, 9]],
    "5x3-1": [[1, 14, 15], [2, 12, 13], [3, 10, 11], [4, 8, 9], [5, 6, 7]],
    "5x3-2": [[1, 3, 9], [2, 7, 8], [4, 10, 15], [5, 11, 13], [6, 12, 14]],
    "5x3-3": [[1, 6, 10], [2, 7, 11], [3, 8, 12], [4, 9, 15], [5, 13, 14]],
    "5x3-4": [[1, 6, 11], [2, 7, 12], [3, 8, 13], [4, 9, 15], [5, 10, 14]],
    "5x3-5": [[1, 10, 15], [2, 9, 14], [3, 8, 13], [4, 7, 12], [5, 6, 11]],
    "5x3-6": [[1, 6, 10], [2, 7, 12], [3, 8, 15], [4, 9, 14], [5, 11, 13]],
    "5x3-7": [[1, 6, 13], [2, 7, 15], [3, 8, 12], [4, 9, 14], [5, 10, 11]],
    "6x3-1": [[1, 17, 18], [2, 15, 16], [3, 13, 14], [4, 11, 12], [5, 9, 10], [6, 7, 8]],
}

# zero-based labels a_0..a_9, shifted to indices 1..10
_TY_BASE = [[0, 1, 2, 3], [0, 4, 5, 6], [1, 5, 7, 8], [2, 6, 8, 9], [3, 4, 7, 9]]
_TY_CYCLE = [2, 3, 4, 5, 6]


def _relabel(rows, mapping):
    return [[mapping[s - 1] + 1 for s in row] for row in rows]


def build_turnbull_young():
    """Return ``(K, H)`` with symbols a_0..a_9 stored as 1..10.

    H sums the base product over the cyclic group on a_2..a_6 times all
    permutations of a_7, a_8, a_9; K = (1 - sum_{i<7} (a_i a_7)) H.
    """
    base = [[s + 1 for s in row] for row in _TY_BASE]
    pairs = []
    for k in range(5):
        for p in permutations([7, 8, 9]):
            g = list(range(10))
            for idx, a in enumerate(_TY_CYCLE):
                g[a] = _TY_CYCLE[(idx + k) % 5]
            for a, b in zip([7, 8, 9], p):
                g[a] = b
            pairs.append((1, _relabel(base, g)))
    h = BracketPolynomial.from_terms(pairs)
    k = h
    for i in range(7):
        swap = list(range(10))
        swap[i], swap[7] = 7, i
        k = k - BracketPolynomial.from_terms((c, _relabel(t, swap)) for c, t in h)
    return k, h


def builtin_cases(include_ty=True):
    """``{case id: BracketPolynomial}`` for the benchmark set."""
    out = {name: BracketPolynomial.monomial(rows) for name, rows in CASES.items()}
    if include_ty:
        out["turnbull-young"] = build_turnbull_young()[0]
    return out
