"""Symbols, tableaux, the negative column order and bracket polynomials.

A symbol ``a_i`` is represented by its positive integer index ``i``; the
order a_1 < a_2 < ... is the integer order.  A tableau is a tuple of rows,
each row a tuple of symbols, and stands for the product of the brackets
given by its rows.  Because brackets commute, a monomial is stored in a
canonical form: every row sorted ascending (tracking the determinant sign)
and the rows sorted lexicographically.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import ShapeError, SymbolRangeError

Symbol = int
Tableau = tuple  # tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SymbolContext:
    """Number of available symbols ``m``; validates indices."""

    m: int

    def check(self, tableau):
        for row in tableau:
            for s in row:
                if not 1 <= s <= self.m:
                    raise SymbolRangeError(f"symbol index {s} outside 1..{self.m}")
        return tableau


def as_tableau(rows):
    """Convert nested sequences to a rectangular tuple-of-tuples tableau."""
    t = tuple(tuple(int(s) for s in row) for row in rows)
    if not t:
        raise ShapeError("a tableau needs at least one row")
    width = len(t[0])
    if any(len(row) != width for row in t):
        raise ShapeError(f"rows of unequal length: {[len(r) for r in t]}")
    return t


def width(tableau):
    return len(tableau[0]) if tableau else 0


def perm_sign(seq):
    """Sign of the permutation that sorts ``seq``; 0 if it has repeats."""
    sign = 1
    k = len(seq)
    for i in range(k):
        a = seq[i]
        for j in range(i + 1, k):
            b = seq[j]
            if a > b:
                sign = -sign
            elif a == b:
                return 0
    return sign


def normalize_row(row):
    """Return ``(sign, sorted_row)``; sign is 0 for a repeated symbol."""
    s = perm_sign(row)
    if s == 0:
        return 0, None
    return s, tuple(sorted(row))


def normalize_monomial(raw, coeff=1):
    """Canonicalize a raw bracket monomial.

    Returns ``(coefficient, tableau)`` or ``None`` when the monomial vanishes
    (a row with a repeated symbol, or a zero coefficient).
    """
    raw = as_tableau(raw)
    return _normalize(raw, coeff)


def _normalize(raw, coeff):
    # hot path: callers guarantee rectangularity
    if coeff == 0:
        return None
    rows = []
    for row in raw:
        s = perm_sign(row)
        if s == 0:
            return None
        if s < 0:
            coeff = -coeff
        rows.append(tuple(sorted(row)))
    rows.sort()
    return coeff, tuple(rows)


def vec(tableau):
    """Column-major reading of a tableau."""
    return tuple(row[j] for j in range(width(tableau)) for row in tableau)


def order_key(tableau):
    """Sort key: ``f`` is larger than ``g`` in the negative column order
    exactly when ``order_key(f) < order_key(g)``."""
    return (-len(tableau), vec(tableau))


def compare_negative_column(f, g):
    """Return 1 if f > g, 0 if equal, -1 if f < g in the negative column order."""
    if width(f) != width(g):
        raise ShapeError(f"width mismatch: {width(f)} vs {width(g)}")
    kf, kg = order_key(f), order_key(g)
    if kf == kg:
        return 0
    return 1 if kf < kg else -1


def is_straight(tableau):
    for row in tableau:
        for j in range(len(row) - 1):
            if row[j] >= row[j + 1]:
                return False
    for i in range(len(tableau) - 1):
        upper, lower = tableau[i], tableau[i + 1]
        for j in range(len(upper)):
            if upper[j] > lower[j]:
                return False
    return True


def column_sort(tableau):
    """Sort every column ascending (the leading term of the normal form)."""
    cols = [sorted(col) for col in zip(*tableau)]
    return tuple(zip(*cols))


def content(tableau):
    """Multiplicity of every symbol."""
    return Counter(s for row in tableau for s in row)


class BracketPolynomial:
    """Integer combination of canonical bracket monomials.

    Terms iterate in descending negative column order.  Instances are
    treated as immutable; arithmetic returns new polynomials.
    """

    __slots__ = ("_terms", "_order")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for t, c in terms.items():
                if c:
                    clean[t] = c
        widths = {len(t[0]) for t in clean}
        if len(widths) > 1:
            raise ShapeError(f"mixed bracket widths {sorted(widths)}")
        self._terms = clean
        self._order = None

    @classmethod
    def _trusted(cls, terms):
        # terms already canonical and free of zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._order = None
        return p

    @classmethod
    def monomial(cls, raw, coeff=1):
        norm = normalize_monomial(raw, coeff)
        if norm is None:
            return cls()
        c, t = norm
        return cls._trusted({t: c})

    @classmethod
    def from_terms(cls, pairs):
        """Sum raw ``(coeff, rows)`` pairs, normalizing each."""
        acc = {}
        for coeff, raw in pairs:
            norm = normalize_monomial(raw, coeff)
            if norm is None:
                continue
            c, t = norm
            acc[t] = acc.get(t, 0) + c
        return cls(acc)

    @property
    def width(self):
        for t in self._terms:
            return len(t[0])
        return None

    def as_dict(self):
        return dict(self._terms)

    def coefficient(self, tableau):
        return self._terms.get(tableau, 0)

    def tableaux(self):
        if self._order is None:
            self._order = sorted(self._terms, key=order_key)
        return self._order

    def terms(self):
        """``(coefficient, tableau)`` pairs, largest first."""
        return [(self._terms[t], t) for t in self.tableaux()]

    def leading_term(self):
        if not self._terms:
            return None
        t = min(self._terms, key=order_key)
        return self._terms[t], t

    def is_straight(self):
        return all(is_straight(t) for t in self._terms)

    def _check_width(self, other):
        w1, w2 = self.width, other.width
        if w1 is not None and w2 is not None and w1 != w2:
            raise ShapeError(f"width mismatch: {w1} vs {w2}")

    def __add__(self, other):
        self._check_width(other)
        acc = dict(self._terms)
        for t, c in other._terms.items():
            v = acc.get(t, 0) + c
            if v:
                acc[t] = v
            else:
                acc.pop(t, None)
        return BracketPolynomial._trusted(acc)

    def __neg__(self):
        return BracketPolynomial._trusted({t: -c for t, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        if k == 0:
            return BracketPolynomial()
        return BracketPolynomial._trusted({t: k * c for t, c in self._terms.items()})

    def __mul__(self, k):
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BracketPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.terms())

    def __repr__(self):
        if not self._terms:
            return "BracketPolynomial(0)"
        parts = []
        for c, t in self.terms():
            rows = "][".join(" ".join(str(s) for s in row) for row in t)
            parts.append(f"{c:+d}[{rows}]")
        return "BracketPolynomial(" + " ".join(parts) + ")"
