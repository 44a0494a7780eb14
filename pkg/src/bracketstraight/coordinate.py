"""Expansion of bracket polynomials into coordinates, and straightening by
leading coordinate monomials.

Each symbol ``a_i`` is the column vector ``(x_i1, ..., x_in)``.  A monomial
of the coordinate ring is stored as the ascending tuple of its variable
ranks, with repeats for exponents.  Variable ``x_ij`` has rank
``(j - 1) * m + (i - 1)``, so rank 0 (``x_11``) is the largest variable,
followed by ``x_21, ..., x_m1, x_12, ...``.  Under this ranking the
lexicographic leading monomial of ``f^c`` for straight ``f`` is the
product of the diagonals of its brackets, and comparing leading monomials
agrees with the negative column order on straight tableaux.
"""

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .core import BracketPolynomial, is_straight, perm_sign
from .errors import CapacityError, ConsistencyError, ShapeError

DEFAULT_BUDGET = 10**7


def _signed_perms(n):
    return [(perm_sign(p), p) for p in permutations(range(n))]


@dataclass
class CoordPolynomial:
    """Integer polynomial in the ``x_ij``, keyed by sorted rank tuples."""

    m: int
    n: int
    terms: dict = field(default_factory=dict)

    def var(self, i, j):
        return (j - 1) * self.m + (i - 1)

    def unrank(self, r):
        """Rank back to ``(i, j)``."""
        j, i = divmod(r, self.m)
        return i + 1, j + 1

    def exponents(self, mono):
        """Monomial as a ``{(i, j): exponent}`` map."""
        out = {}
        for r in mono:
            key = self.unrank(r)
            out[key] = out.get(key, 0) + 1
        return out

    def _compatible(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ShapeError(f"coordinate rings differ: {(self.m, self.n)} vs {(other.m, other.n)}")

    def __add__(self, other):
        self._compatible(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return CoordPolynomial(self.m, self.n, acc)

    def __neg__(self):
        return CoordPolynomial(self.m, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return CoordPolynomial(self.m, self.n)
            return CoordPolynomial(self.m, self.n, {k: other * c for k, c in self.terms.items()})
        self._compatible(other)
        return CoordPolynomial(self.m, self.n, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CoordPolynomial):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)


def _mul_terms(a, b):
    acc = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(sorted(ka + kb))
            v = acc.get(k, 0) + ca * cb
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return acc


def _bracket_terms(row, m, n, perms):
    out = {}
    for s, p in perms:
        k = tuple(sorted((p[c]) * m + (row[c] - 1) for c in range(n)))
        out[k] = out.get(k, 0) + s
    return {k: c for k, c in out.items() if c}


def check_budget(n, d, budget, what="coordinate expansion"):
    needed = factorial(n) ** d
    if needed > budget:
        raise CapacityError(what, needed, budget)
    return needed


def expand_bracket_monomial(tableau, coeff=1, m=None, budget=DEFAULT_BUDGET):
    """Expand ``coeff * [row_1][row_2]...`` into the coordinate ring."""
    n = len(tableau[0])
    if m is None:
        m = max(s for row in tableau for s in row)
    check_budget(n, len(tableau), budget)
    perms = _signed_perms(n)
    acc = {(): coeff}
    for row in tableau:
        acc = _mul_terms(acc, _bracket_terms(row, m, n, perms))
    return CoordPolynomial(m, n, acc)


def expand(poly, m=None, budget=DEFAULT_BUDGET):
    """Coordinate expansion of a whole bracket polynomial."""
    n = poly.width
    if m is None:
        m = max((s for _, t in poly for row in t for s in row), default=1)
    acc = CoordPolynomial(m, n or 1)
    for c, t in poly:
        acc = acc + expand_bracket_monomial(t, c, m, budget)
    return acc


def leading_coord_monomial(p):
    """Return ``(coefficient, monomial)`` of the leading term of ``p``.

    All expansions are homogeneous, but total degree is compared first anyway.
    """
    if not p.terms:
        raise ValueError("leading monomial of the zero polynomial")
    mono = min(p.terms, key=lambda k: (-len(k), k))
    return p.terms[mono], mono


def tableau_from_leading(mono, m, n):
    """Rebuild the straight tableau whose expansion leads with ``mono``."""
    by_coord = [[] for _ in range(n)]
    for r in mono:
        j, i = divmod(r, m)
        by_coord[j].append(i + 1)
    d = len(by_coord[0])
    if any(len(col) != d for col in by_coord) or d == 0:
        raise ShapeError("monomial does not use every coordinate equally often")
    cols = [sorted(col) for col in by_coord]
    rows = tuple(tuple(col[k] for col in cols) for k in range(d))
    for row in rows:
        if any(row[c] >= row[c + 1] for c in range(n - 1)):
            raise ShapeError(f"monomial is not of tableau form (row {row})")
    return rows


def straighten_coord(poly, m=None, budget=DEFAULT_BUDGET):
    """Normal form by repeatedly peeling off leading coordinate monomials."""
    if not poly:
        return BracketPolynomial()
    n = poly.width
    if m is None:
        m = max(s for _, t in poly for row in t for s in row)
    residual = expand(poly, m, budget)
    result = {}
    while residual:
        lam, mono = leading_coord_monomial(residual)
        try:
            t = tableau_from_leading(mono, m, n)
        except ShapeError as exc:
            raise ConsistencyError(f"leading monomial has no straight preimage: {exc}") from exc
        fc = expand_bracket_monomial(t, 1, m, budget)
        lead_c, lead_m = leading_coord_monomial(fc)
        if lead_m != mono or lead_c != 1 or not is_straight(t):
            raise ConsistencyError(f"reconstructed tableau {t} does not lead with the residual's monomial")
        result[t] = result.get(t, 0) + lam
        residual = residual - fc * lam
    return BracketPolynomial(result)
