"""Column brackets, the P_c expansion and column-bracket straightening.

A column bracket is a tableau read by columns: each column is turned into
the Hadamard (entrywise) product of its vectors, and the n resulting
vectors are combined by a permanent (even bracket, written <T>) or a
determinant (odd bracket, written {T}).  Column brackets are stored with
every column sorted and the columns in lexicographic order; for an odd
bracket the column reordering contributes its sign.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import permutations, product
from operator import mul

from .core import BracketPolynomial, is_straight, order_key, perm_sign
from .coordinate import CoordPolynomial, check_budget
from .errors import ConsistencyError, ShapeError
from .stats import StepStats

DEFAULT_PC_BUDGET = 10**6


def permanent(matrix):
    """Permanent of a square grid of ring elements (ints, CoordPolynomials...)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ShapeError("permanent needs a square matrix")
    if n == 0:
        return 1
    total = None
    for p in permutations(range(n)):
        term = reduce(mul, (matrix[k][p[k]] for k in range(n)))
        total = term if total is None else total + term
    return total


def hadamard(b, c):
    """Entrywise product of two equally shaped grids."""
    if len(b) != len(c) or any(len(rb) != len(rc) for rb, rc in zip(b, c)):
        raise ShapeError("Hadamard product needs equal shapes")
    return [[x * y for x, y in zip(rb, rc)] for rb, rc in zip(b, c)]


@dataclass(frozen=True)
class ColumnBracket:
    odd: bool
    tableau: tuple

    @property
    def parity(self):
        return "odd" if self.odd else "even"


def canonicalize_column_bracket(odd, raw):
    """Return ``(sign, ColumnBracket)`` or ``None`` if the bracket vanishes."""
    cols = [tuple(sorted(col)) for col in zip(*raw)]
    sign = 1
    if odd:
        sign = perm_sign(cols)
        if sign == 0:
            return None
    cols.sort()
    return sign, ColumnBracket(odd, tuple(zip(*cols)))


class ColumnBracketSum:
    """Integer combination of canonical column brackets."""

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def add(self, odd, raw, coeff):
        norm = canonicalize_column_bracket(odd, raw)
        if norm is None or coeff == 0:
            return
        s, cb = norm
        v = self.terms.get(cb, 0) + s * coeff
        if v:
            self.terms[cb] = v
        else:
            self.terms.pop(cb, None)

    def __add__(self, other):
        out = ColumnBracketSum(self.terms)
        for k, c in other.terms.items():
            v = out.terms.get(k, 0) + c
            if v:
                out.terms[k] = v
            else:
                out.terms.pop(k, None)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return ColumnBracketSum({cb: k * c for cb, c in self.terms.items()})

    def leading_term(self):
        if not self.terms:
            return None
        cb = min(self.terms, key=lambda b: order_key(b.tableau))
        return self.terms[cb], cb

    def straight_part(self):
        """Straight terms read back as a bracket polynomial."""
        return BracketPolynomial({cb.tableau: c for cb, c in self.terms.items()
                                  if is_straight(cb.tableau)})

    def evaluate(self, m, n=None):
        """Coordinate expansion; ``n`` fixes the ring of an empty sum."""
        if n is None:
            n = len(next(iter(self.terms)).tableau[0]) if self.terms else 1
        acc = CoordPolynomial(m, n)
        for cb, c in self.terms.items():
            acc = acc + evaluate_column_bracket(cb, m) * c
        return acc

    def __eq__(self, other):
        return isinstance(other, ColumnBracketSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        parts = []
        for cb, c in sorted(self.terms.items(), key=lambda kv: order_key(kv[0].tableau)):
            l, r = ("{", "}") if cb.odd else ("<", ">")
            rows = "|".join(" ".join(map(str, row)) for row in cb.tableau)
            parts.append(f"{c:+d}{l}{rows}{r}")
        return "ColumnBracketSum(" + " ".join(parts) + ")"


def evaluate_column_bracket(cb, m, budget=10**7):
    """Coordinate polynomial of a column bracket (permanent or determinant)."""
    t = cb.tableau
    n = len(t[0])
    check_budget(n, 1, budget, "column bracket evaluation")
    cols = list(zip(*t))
    acc = {}
    for p in permutations(range(n)):
        s = perm_sign(p) if cb.odd else 1
        key = tuple(sorted(p[j] * m + (i - 1) for j in range(n) for i in cols[j]))
        acc[key] = acc.get(key, 0) + s
    return CoordPolynomial(m, n, {k: c for k, c in acc.items() if c})


def multiply_column_brackets(a, b):
    """Product of two column brackets as a sum of taller column brackets."""
    ta, tb = a.tableau, b.tableau
    n = len(ta[0])
    if len(tb[0]) != n:
        raise ShapeError(f"width mismatch: {n} vs {len(tb[0])}")
    if a.odd and not b.odd:
        a, b = b, a
        ta, tb = tb, ta
    out_odd = a.odd != b.odd
    signed = b.odd
    out = ColumnBracketSum()
    for p in permutations(range(n)):
        s = perm_sign(p) if signed else 1
        rows = ta + tuple(tuple(row[p[j]] for j in range(n)) for row in tb)
        out.add(out_odd, rows, s)
    return out


def expand_Pc(tableau, budget=DEFAULT_PC_BUDGET):
    """Expansion of a bracket monomial into signed column brackets."""
    d, n = len(tableau), len(tableau[0])
    check_budget(n, d - 1, budget, "P_c expansion")
    odd = d % 2 == 1
    signed = [(perm_sign(p), p) for p in permutations(range(n))]
    out = ColumnBracketSum()
    first = tableau[0]
    for choice in product(signed, repeat=d - 1):
        s = 1
        rows = [first]
        for (ps, p), row in zip(choice, tableau[1:]):
            s *= ps
            rows.append(tuple(row[p[j]] for j in range(n)))
        out.add(odd, rows, s)
    return out


def _row_key(rows):
    return tuple(sorted(rows))


def enumerate_first_columns(tableau):
    """Signed first-column choices for the straight part of P_c.

    One entry is taken from every row.  The entry at position ``w`` of its
    row (counting from 0) contributes ``(-1)**w``.  A sorted column ``c`` is
    kept only if a straight tableau with this content can start with it:
    ``c[0]`` is the smallest symbol; the entries below ``c[s]`` fit into
    ``s`` rows (at most ``s * width`` of them, no symbol repeated more than
    ``s`` times); at least ``width - 1`` distinct symbols and at least
    ``(d - s) * (width - 1)`` entries are above it.
    Choices giving the same column and the same remaining rows are merged.

    Returns a list of ``(sign, column, residual)`` with the residual rows
    sorted; choices whose signs cancel are dropped.
    """
    d = len(tableau)
    w = len(tableau[0])
    flat = sorted(s for row in tableau for s in row)
    lo = flat[0]
    below = {}
    above = {}
    # largest multiplicity among symbols strictly below each symbol
    crowd = {}
    total = len(flat)
    top = 0
    run = 0
    for idx, s in enumerate(flat):
        if s not in below:
            below[s] = idx
            crowd[s] = top
            run = 0
        run += 1
        top = max(top, run)
        above[s] = total - idx - 1
    distinct = sorted(below)
    rank_above = {s: len(distinct) - k - 1 for k, s in enumerate(distinct)}
    options = [list(enumerate(row)) for row in tableau]
    merged = {}
    for pick in product(*options):
        c = sorted(s for _, s in pick)
        if c[0] != lo:
            continue
        ok = True
        for s_idx in range(1, d):
            x = c[s_idx]
            if (below[x] > s_idx * w or crowd[x] > s_idx or rank_above[x] < w - 1
                    or above[x] < (d - s_idx) * (w - 1)):
                ok = False
                break
        if not ok:
            continue
        sign = 1
        residual = []
        for (pos, _), row in zip(pick, tableau):
            if pos & 1:
                sign = -sign
            residual.append(row[:pos] + row[pos + 1:])
        key = (tuple(c), _row_key(residual))
        merged[key] = merged.get(key, 0) + sign
    return [(s, c, r) for (c, r), s in merged.items() if s]


@lru_cache(maxsize=None)
def _straight_part(rows):
    """Straight terms of P_c for row-sorted ``rows``, grouped by first column.

    Returns a tuple of ``(first_column, ((tableau, coeff), ...))`` groups.
    """
    w = len(rows[0])
    if w == 1:
        col = tuple(sorted(r[0] for r in rows))
        return ((col, ((tuple((s,) for s in col), 1),)),)
    acc = defaultdict(int)
    for sign, c, residual in enumerate_first_columns(rows):
        for first, group in _straight_part(residual):
            if any(a >= b for a, b in zip(c, first)):
                continue
            for sub, mu in group:
                t = tuple((c[i],) + sub[i] for i in range(len(c)))
                acc[t] += sign * mu
    groups = defaultdict(list)
    for t, v in acc.items():
        if v:
            groups[tuple(r[0] for r in t)].append((t, v))
    return tuple((k, tuple(g)) for k, g in groups.items())


def compute_C_terms(tableau):
    """``{straight tableau: coeff}`` for the straight part of P_c(tableau)."""
    out = {}
    for _, group in _straight_part(_row_key(tableau)):
        for t, v in group:
            out[t] = v
    return out


def compute_C(f):
    """C of a tableau, or of a bracket polynomial by linearity."""
    if isinstance(f, BracketPolynomial):
        acc = defaultdict(int)
        for coeff, t in f:
            for s, v in compute_C_terms(t).items():
                acc[s] += coeff * v
        return BracketPolynomial(acc)
    return BracketPolynomial(compute_C_terms(tuple(tuple(r) for r in f)))


def clear_cache():
    _straight_part.cache_clear()


def straighten_cb(poly, stats=None):
    """Normal form by repeated subtraction of C of the leading straight term.

    Each step records the number of terms in play: the combined residual
    plus the terms of C(leading term) about to be subtracted.  Returns
    ``(normal_form, stats)``.
    """
    stats = stats if stats is not None else StepStats()
    if poly.is_straight():
        return poly, stats
    residual = defaultdict(int)
    for coeff, t in poly:
        for s, v in compute_C_terms(t).items():
            residual[s] += coeff * v
    residual = {t: v for t, v in residual.items() if v}
    result = {}
    while residual:
        lead = min(residual, key=order_key)
        lam = residual[lead]
        result[lead] = lam
        sub = compute_C_terms(lead)
        stats.record(len(residual) + len(sub))
        for s, v in sub.items():
            nv = residual.get(s, 0) - lam * v
            if nv:
                residual[s] = nv
            else:
                residual.pop(s, None)
        if lead in residual:
            raise ConsistencyError(f"C({lead}) does not lead with {lead}")
    return BracketPolynomial(result), stats


def straighten_pc(poly, budget=DEFAULT_PC_BUDGET, stats=None):
    """Normal form by subtracting full P_c expansions."""
    stats = stats if stats is not None else StepStats()
    if poly.is_straight():
        return poly, stats
    residual = ColumnBracketSum()
    for coeff, t in poly:
        residual = residual + expand_Pc(t, budget).scale(coeff)
    result = {}
    while residual:
        lam, cb = residual.leading_term()
        if not is_straight(cb.tableau):
            raise ConsistencyError(f"leading column bracket {cb.tableau} is not straight")
        result[cb.tableau] = lam
        sub = expand_Pc(cb.tableau, budget)
        stats.record(len(residual) + len(sub))
        residual = residual - sub.scale(lam)
    return BracketPolynomial(result), stats
