"""Syzygy-based straightening: van der Waerden rewriting with the first-first
strategy, the multiple syzygy, and White's five implementation strategies.

All rewriting loops work on a dict ``{tableau: coeff}`` of canonical
tableaux.  At every step the non-straight term that is largest in row
reading order (the canonical tableau compared as a tuple of rows) is
replaced by an equivalent combination, and like terms are combined.
Every rule only creates non-straight terms below the one it rewrites, which
the loop checks, so rewriting terminates.
"""

import heapq
from dataclasses import dataclass
from itertools import combinations

from .core import BracketPolynomial, _normalize, is_straight, perm_sign
from .errors import CapacityError, ConsistencyError, ShapeError
from .stats import StepStats

MAX_STEPS = 10**6


@dataclass(frozen=True)
class ViolationSite:
    row_pair: int  # index of the upper row, 0-based
    column: int  # first violating column in that pair, 0-based


def find_violation(tableau):
    """First-first violation site, or ``None`` if the tableau is straight.

    Rows are assumed strictly increasing (row-normalized input).
    """
    for i in range(len(tableau) - 1):
        upper, lower = tableau[i], tableau[i + 1]
        for j in range(len(upper)):
            if upper[j] > lower[j]:
                return ViolationSite(i, j)
    return None


def _violations(upper, lower):
    return [u > v for u, v in zip(upper, lower)]


def _accumulate(out, rows, coeff):
    norm = _normalize(rows, coeff)
    if norm is not None:
        c, t = norm
        v = out.get(t, 0) + c
        if v:
            out[t] = v
        else:
            out.pop(t, None)


def vdw_syzygy(upper_prefix, merged, lower_suffix):
    """The van der Waerden relation as a bracket polynomial equal to zero.

    With ``b = upper_prefix`` (length r-1), ``c = merged`` (length n+1) and
    ``d = lower_suffix`` (length n-r), returns the sum over all ways of
    splitting ``c`` into r entries for the lower bracket and n+1-r for the
    upper one, signed by the shuffle:
    ``sum sign(s) [b, c_upper][c_lower, d]``.
    """
    b, c, d = tuple(upper_prefix), tuple(merged), tuple(lower_suffix)
    r = len(b) + 1
    n = len(c) - 1
    if len(d) != n - r or n < 1:
        raise ShapeError(f"vdW arity mismatch: |b|={len(b)}, |c|={len(c)}, |d|={len(d)}")
    out = {}
    for low in combinations(range(n + 1), r):
        up = [k for k in range(n + 1) if k not in low]
        s = perm_sign(list(low) + up)
        _accumulate(out, (b + tuple(c[k] for k in up), tuple(c[k] for k in low) + d), s)
    return BracketPolynomial._trusted(out)


def _vdw_rewrite(tableau, i, j):
    """``tableau`` as a combination of other monomials, via vdW at (i, j)."""
    upper, lower = tableau[i], tableau[i + 1]
    n = len(upper)
    r = j + 1
    b, c, d = upper[:r - 1], lower[:r] + upper[r - 1:], lower[r:]
    out = {}
    rows = list(tableau)
    for low in combinations(range(n + 1), r):
        if low == tuple(range(r)):
            continue  # the term that reproduces the tableau itself
        up = [k for k in range(n + 1) if k not in low]
        s = perm_sign(list(low) + up)
        rows[i] = b + tuple(c[k] for k in up)
        rows[i + 1] = tuple(c[k] for k in low) + d
        _accumulate(out, rows, -s)
    return out


def _multiple_terms(b, c, r):
    # yields (sign, new_b_row, new_c_row)
    n = len(b)
    for picked in combinations(range(n), n - r):
        new_c = list(c)
        pos = list(range(n))
        for k, ik in enumerate(picked):
            new_c[ik] = b[r + k]
            pos[ik] = n + k
        s = perm_sign(pos + list(picked)) * (-1) ** (n - r)
        yield s, tuple(b[:r]) + tuple(c[k] for k in picked), tuple(new_c)


def multiple_syzygy(b, c, r):
    """Right-hand side of the multiple syzygy for ``[b][c]``.

    Keeps ``b_1..b_r`` and substitutes ``b_{r+1}..b_n`` in order into every
    choice of ``n - r`` positions of ``c``; the displaced ``c`` entries fill
    the upper bracket.  The result equals ``[b][c]`` in the bracket ring.
    """
    b, c = tuple(b), tuple(c)
    n = len(b)
    if len(c) != n:
        raise ShapeError(f"multiple syzygy needs equal rows, got {n} and {len(c)}")
    if not 0 <= r <= n:
        raise ShapeError(f"r={r} outside 0..{n}")
    out = {}
    for s, top, bottom in _multiple_terms(b, c, r):
        _accumulate(out, (top, bottom), s)
    return BracketPolynomial._trusted(out)


def _multiple_rewrite(tableau, i, k, r):
    """Rewrite rows ``i`` (the b row) and ``k`` (the c row) of ``tableau``."""
    out = {}
    rows = list(tableau)
    for s, top, bottom in _multiple_terms(tableau[i], tableau[k], r):
        rows[i], rows[k] = top, bottom
        _accumulate(out, rows, s)
    return out


def _rule_vw(t):
    site = find_violation(t)
    return _vdw_rewrite(t, site.row_pair, site.column)


def _rule_white1(t):
    site = find_violation(t)
    i = site.row_pair
    n = len(t[0])
    viol = _violations(t[i], t[i + 1])
    if viol[-1]:
        if n > 1 and viol[1] or n == 2:
            return _multiple_rewrite(t, i, i + 1, 1)
        return _multiple_rewrite(t, i, i + 1, n - 1)
    return _vdw_rewrite(t, i, site.column)


def _two_of_last_three(viol):
    return sum(viol[-3:]) >= 2


def _rule_white2(t):
    site = find_violation(t)
    i = site.row_pair
    viol = _violations(t[i], t[i + 1])
    if viol[-1] or _two_of_last_three(viol):
        return _multiple_rewrite(t, i, i + 1, site.column)
    return _vdw_rewrite(t, i, site.column)


def _last_column_partner(t, i):
    """Row below the pair ``(i, i+1)`` holding the least last-column entry
    smaller than row ``i``'s, or ``i + 1`` if no lower row qualifies."""
    best = i + 1
    for k in range(i + 2, len(t)):
        if t[k][-1] < t[i][-1] and t[k][-1] < t[best][-1]:
            best = k
    return best


def _rule_white3(t, use_two_of_three=True):
    site = find_violation(t)
    i = site.row_pair
    viol = _violations(t[i], t[i + 1])
    if viol[-1]:
        k = _last_column_partner(t, i)
        if k != i + 1:
            out = _multiple_rewrite(t, i, k, site.column)
            # keep the pairing only if it cannot delay termination
            if all(u < t or is_straight(u) for u in out):
                return out
        return _multiple_rewrite(t, i, i + 1, site.column)
    if use_two_of_three and _two_of_last_three(viol):
        return _multiple_rewrite(t, i, i + 1, site.column)
    return _vdw_rewrite(t, i, site.column)


def _rule_white4(t):
    return _rule_white3(t, use_two_of_three=False)


def _rule_white5(t):
    site = find_violation(t)
    i = site.row_pair
    viol = _violations(t[i], t[i + 1])
    last = max(j for j, v in enumerate(viol) if v)
    return _vdw_rewrite(t, i, last)


RULES = {
    "vw": _rule_vw,
    1: _rule_white1,
    2: _rule_white2,
    3: _rule_white3,
    4: _rule_white4,
    5: _rule_white5,
}


class _Desc:
    """Heap entry ordering tableaux from the largest down."""

    __slots__ = ("t",)

    def __init__(self, t):
        self.t = t

    def __lt__(self, other):
        return self.t > other.t


def _rewrite_loop(poly, rule, stats, max_steps=MAX_STEPS):
    work = dict(poly.as_dict())
    heap = [_Desc(t) for t in work if not is_straight(t)]
    heapq.heapify(heap)
    while heap:
        t = heapq.heappop(heap).t
        if t not in work:
            continue  # cancelled since it was queued
        if stats.steps >= max_steps:
            raise CapacityError("syzygy rewriting", f"more than {max_steps}", max_steps, "steps")
        coeff = work.pop(t)
        for u, v in rule(t).items():
            straight = is_straight(u)
            if not straight and u >= t:
                raise ConsistencyError(f"rewriting {t} produced the larger term {u}")
            old = work.get(u, 0)
            nv = old + coeff * v
            if nv:
                work[u] = nv
                if not old and not straight:
                    heapq.heappush(heap, _Desc(u))
            else:
                work.pop(u, None)
        stats.record(len(work))
    return BracketPolynomial._trusted(work)


def straighten_vw(f, stats=None, max_steps=MAX_STEPS):
    """Classical straightening with the first-first strategy.

    Returns ``(normal_form, stats)``; stats hold the number of terms after
    combination at every step.
    """
    stats = stats if stats is not None else StepStats()
    return _rewrite_loop(f, RULES["vw"], stats, max_steps), stats


def straighten_white(f, strategy=2, stats=None, max_steps=MAX_STEPS):
    """Straightening by one of White's strategies 1..5.

    Readings used for the terse rules:

    1. last column violated: multiple syzygy keeping the first upper entry
       if column 2 is also violated (or n = 2), else keeping all but the
       last; otherwise vdW at the first violation.
    2. first violating column s: multiple syzygy substituting the last
       n-s+1 upper entries when the last column or two of the last three
       are violated; otherwise vdW.
    3. as 2, but a last-column violation pairs the upper row with the row
       at or below the lower row whose last entry is least (and smaller
       than the upper row's last entry); if that pairing would create a
       non-straight term not below the rewritten one, the adjacent row is
       used instead.
    4. as 3 without the two-of-the-last-three multiple syzygy.
    5. vdW at the last violated column of the first violating row pair.
    """
    if strategy not in (1, 2, 3, 4, 5):
        raise ValueError(f"White strategy must be 1..5, got {strategy}")
    stats = stats if stats is not None else StepStats()
    return _rewrite_loop(f, RULES[strategy], stats, max_steps), stats
