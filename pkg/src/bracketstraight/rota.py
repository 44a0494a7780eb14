"""Rota's straightening by Capelli operators, and straightening coefficients
through the counting function xi.

Polarizations act on monomials over a mixed alphabet: the auxiliary
symbols b_1..b_n get the integer indices ``AUX_BASE + q``, so they sort
after every ordinary symbol.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .core import BracketPolynomial, _normalize, content, order_key, perm_sign
from .errors import CapacityError, ConsistencyError, ShapeError
from .stats import RotaCost

AUX_BASE = 10**6
DEFAULT_TABLEAU_BUDGET = 2000


def aux(q):
    """Index of the auxiliary symbol b_q (q counted from 1)."""
    return AUX_BASE + q


@dataclass(frozen=True)
class PolarizationSpec:
    l: int
    target: int  # q of b_q
    source: int  # i of a_i

    def __post_init__(self):
        if self.l < 1 or self.target < 1:
            raise ValueError(f"bad polarization {self}")


def _polarize_terms(terms, spec):
    b = aux(spec.target)
    out = {}
    for t, c in terms.items():
        spots = [(r, k) for r, row in enumerate(t) for k, s in enumerate(row) if s == spec.source]
        for chosen in combinations(spots, spec.l):
            rows = [list(row) for row in t]
            for r, k in chosen:
                rows[r][k] = b
            norm = _normalize(rows, c)
            if norm is None:
                continue
            v, u = norm
            nv = out.get(u, 0) + v
            if nv:
                out[u] = nv
            else:
                out.pop(u, None)
    return out


def polarize(f, spec):
    """Set polarization D^l(b_q, a_i): sum over every way of turning l
    copies of a_i into b_q.  Monomials with fewer copies vanish."""
    return BracketPolynomial._trusted(_polarize_terms(f.as_dict(), spec))


def capelli_specs(f):
    """The polarizations making up the Capelli operator of tableau ``f``."""
    specs = []
    for q, col in enumerate(zip(*f), start=1):
        for i, eta in sorted(Counter(col).items()):
            specs.append(PolarizationSpec(eta, q, i))
    return specs


def capelli_coefficient(f, g):
    """Integer c with C_f(g) = c [b_1..b_n]^d."""
    f, g = tuple(map(tuple, f)), tuple(map(tuple, g))
    if len(f) != len(g) or len(f[0]) != len(g[0]):
        raise ShapeError("Capelli coefficient needs equal shapes")
    if content(f) != content(g):
        raise ValueError("Capelli coefficient needs equal contents")
    norm = _normalize(g, 1)
    if norm is None:
        return 0
    terms = {norm[1]: norm[0]}
    for spec in capelli_specs(f):
        terms = _polarize_terms(terms, spec)
        if not terms:
            return 0
    n = len(f[0])
    target = tuple(tuple(aux(q) for q in range(1, n + 1)) for _ in f)
    if set(terms) - {target}:
        raise ConsistencyError(f"Capelli operator left ordinary symbols: {terms}")
    return terms.get(target, 0)


def enumerate_standard_tableaux(cont, d, n):
    """All straight d x n tableaux of the given content, largest first."""
    cont = Counter(cont)
    if sum(cont.values()) != d * n:
        raise ShapeError(f"content of size {sum(cont.values())} does not fill {d}x{n}")
    symbols = sorted(cont)
    grid = [[0] * n for _ in range(d)]
    left = dict(cont)
    found = []

    def fill(pos):
        if pos == d * n:
            found.append(tuple(map(tuple, grid)))
            return
        r, k = divmod(pos, n)
        lo_row = grid[r][k - 1] + 1 if k else 0
        lo_col = grid[r - 1][k] if r else 0
        lo = max(lo_row, lo_col)
        for s in symbols:
            if s < lo or not left[s]:
                continue
            # the rest of the row needs n-k-1 larger distinct symbols
            if sum(1 for x in symbols if x > s and left[x]) < n - k - 1:
                break
            grid[r][k] = s
            left[s] -= 1
            fill(pos + 1)
            left[s] += 1
        grid[r][k] = 0

    fill(0)
    found.sort(key=order_key)
    return found


@dataclass
class TriangularSystem:
    order: list
    matrix: list = field(default_factory=list)
    rhs: list = field(default_factory=list)

    @property
    def nonzero_entries(self):
        return sum(1 for row in self.matrix for v in row if v)

    def solve(self):
        """Exact forward substitution; returns the list of lambdas."""
        lam = []
        for i, row in enumerate(self.matrix):
            acc = self.rhs[i] - sum(row[j] * lam[j] for j in range(i))
            q, rem = divmod(acc, row[i])
            if rem:
                raise ConsistencyError(f"inexact division {acc}/{row[i]} in row {i}")
            lam.append(q)
        return lam


@lru_cache(maxsize=64)
def _capelli_matrix(cont_items, d, n, budget):
    # depends only on content and shape, so tableaux of equal content share it
    order = enumerate_standard_tableaux(dict(cont_items), d, n)
    if len(order) > budget:
        raise CapacityError("Rota triangular system", len(order), budget, "standard tableaux")
    matrix = []
    for i, fi in enumerate(order):
        row = [capelli_coefficient(fi, fj) for fj in order]
        if any(row[j] for j in range(i + 1, len(order))):
            raise ConsistencyError(f"Capelli matrix not lower triangular in row {i}")
        if not row[i]:
            raise ConsistencyError(f"zero diagonal Capelli coefficient in row {i}")
        matrix.append(tuple(row))
    return tuple(order), tuple(matrix)


def build_triangular_system(f, budget=DEFAULT_TABLEAU_BUDGET):
    """Matrix C_{f_i}(f_j) and right side C_{f_i}(f) over the standard list."""
    f = tuple(map(tuple, f))
    cont = tuple(sorted(content(f).items()))
    order, matrix = _capelli_matrix(cont, len(f), len(f[0]), budget)
    rhs = [capelli_coefficient(fi, f) for fi in order]
    return TriangularSystem(list(order), [list(r) for r in matrix], rhs)


def straighten_rota(f, budget=DEFAULT_TABLEAU_BUDGET, cost=None):
    """Normal form of a bracket polynomial by Rota's triangular solve.

    Each monomial is solved separately.  Returns ``(normal_form, cost)``.
    """
    cost = cost if cost is not None else RotaCost()
    result = BracketPolynomial()
    for coeff, t in f:
        system = build_triangular_system(t, budget)
        cost.nonzero_matrix_entries += system.nonzero_entries
        cost.tableau_enumeration_cost += len(system.order)
        lam = system.solve()
        result = result + BracketPolynomial(dict(zip(system.order, lam))).scale(coeff)
    return result, cost


def xi(t1, t2):
    """Sum of row signs over grids whose rows rearrange t1's rows and whose
    columns rearrange t2's columns."""
    t1, t2 = tuple(map(tuple, t1)), tuple(map(tuple, t2))
    if len(t1) != len(t2) or len(t1[0]) != len(t2[0]):
        raise ShapeError("xi needs tableaux of equal shape")
    if content(t1) != content(t2):
        return 0
    n = len(t1[0])
    cols = [Counter(col) for col in zip(*t2)]
    row_perms = list(permutations(range(n)))

    def walk(r):
        if r == len(t1):
            return 1
        row = t1[r]
        total = 0
        for p in row_perms:
            placed = [row[p[k]] for k in range(n)]
            if all(cols[k][placed[k]] for k in range(n)):
                for k in range(n):
                    cols[k][placed[k]] -= 1
                total += perm_sign(p) * walk(r + 1)
                for k in range(n):
                    cols[k][placed[k]] += 1
        return total

    return walk(0)


def straightening_coefficients(t):
    """``[(T_i, lambda_i)]`` over the descending straight tableaux of the
    content of ``t``, from the recursion
    lambda_i = xi(t, T_i) - sum_{j<i} lambda_j xi(T_j, T_i)."""
    t = tuple(map(tuple, t))
    order = enumerate_standard_tableaux(content(t), len(t), len(t[0]))
    lam = []
    for i, ti in enumerate(order):
        v = xi(t, ti) - sum(lam[j] * xi(order[j], ti) for j in range(i) if lam[j])
        lam.append(v)
    return list(zip(order, lam))
