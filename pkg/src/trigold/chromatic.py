"""Exact chromatic polynomials: deletion-contraction engine and brute oracles.

The engine applies cheap sound reductions before every branch (component
split, simplicial-vertex stripping, direct formulas for edgeless/tree/cycle/
complete graphs) and memoizes on a degree-refined relabeled edge list. Two
independent brute-force oracles back it for small graphs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import InvalidParameter, ResourceLimit, TooLarge
from .exactmath import IntPoly, falling_factorial_poly
from .graphs import Graph

DEFAULT_NODE_BUDGET = 10_000_000

_Q = IntPoly((0, 1))
_QM1 = IntPoly((-1, 1))


def cycle_poly(l: int) -> IntPoly:
    """(q-1)^l + (-1)^l (q-1)."""
    if l < 3:
        raise InvalidParameter("cycle needs l >= 3")
    return _QM1 ** l + IntPoly(((-1) ** l,)) * _QM1


def complete_poly(p: int) -> IntPoly:
    """prod_{s=0}^{p-1} (q-s)."""
    if p < 0:
        raise InvalidParameter("complete graph size must be nonnegative")
    return falling_factorial_poly(p)


def tree_poly(n: int) -> IntPoly:
    return _Q * _QM1 ** (n - 1)


class MemoCache:
    """Table from canonical edge-list keys to chromatic polynomials.

    Any cached entry equals the value recomputed without the cache; sharing a
    cache across computations only trades memory for speed.
    """

    def __init__(self):
        self._table = {}

    def __len__(self):
        return len(self._table)

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value: IntPoly):
        self._table[key] = value

    def items(self):
        return self._table.items()


class _Budget:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimit(
                f"deletion-contraction exceeded {self.limit} recursion nodes"
            )


def _canonical_key(n: int, adj: list) -> tuple:
    """Relabel by iterated degree refinement and emit the sorted edge list.

    Distinct keys may still be isomorphic (refinement is not a full canonical
    form), but equal keys are always isomorphic, so cache hits are sound.
    """
    colors = [len(adj[v]) for v in range(n)]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    order = sorted(range(n), key=lambda v: (colors[v], v))
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    for v in range(n):
        pv = pos[v]
        for w in adj[v]:
            pw = pos[w]
            if pv < pw:
                edges.append((pv, pw))
    edges.sort()
    return (n, tuple(edges))


def _components(n: int, adj: list) -> list:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _subgraph_adj(adj: list, verts: list) -> list:
    idx = {v: i for i, v in enumerate(verts)}
    return [set(idx[w] for w in adj[v] if w in idx) for v in verts]


def _strip_simplicial(n: int, adj: list) -> tuple:
    """Remove vertices whose neighborhood is a clique, cheapest degree first.

    Returns (remaining vertex count, remaining adjacency, factor polynomial).
    Degree-0 and degree-1 vertices are the trivial cases (factors q and q-1).
    """
    factor = IntPoly((1,))
    alive = set(range(n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive, key=lambda v: len(adj[v])):
            nb = adj[v]
            if all(y in adj[x] for x, y in combinations(nb, 2)):
                factor = factor * IntPoly([-len(nb), 1])
                for w in nb:
                    adj[w].discard(v)
                adj[v] = set()
                alive.discard(v)
                changed = True
                break
    verts = sorted(alive)
    return len(verts), _subgraph_adj(adj, verts), factor


def _best_branch_edge(n: int, adj: list) -> tuple:
    """Edge with the most common neighbors, to reach dense base cases fast."""
    best, best_score = None, -1
    for v in range(n):
        for w in adj[v]:
            if v < w:
                score = len(adj[v] & adj[w])
                if score > best_score:
                    best, best_score = (v, w), score
    return best


def _delete(adj: list, u: int, v: int) -> list:
    out = [set(s) for s in adj]
    out[u].discard(v)
    out[v].discard(u)
    return out


def _contract(n: int, adj: list, u: int, v: int) -> list:
    # merge v into u, then relabel to keep vertices contiguous
    merged = [set(s) for s in adj]
    merged[u] |= merged[v]
    merged[u].discard(u)
    merged[u].discard(v)
    for w in merged[v]:
        if w != u:
            merged[w].discard(v)
            merged[w].add(u)
    merged[v] = set()
    verts = [x for x in range(n) if x != v]
    return _subgraph_adj(merged, verts)


def _compute(n: int, adj: list, cache: MemoCache, budget: _Budget) -> IntPoly:
    budget.tick()

    e = sum(len(s) for s in adj) // 2
    if e == 0:
        return IntPoly.monomial(n)

    comps = _components(n, adj)
    if len(comps) > 1:
        result = IntPoly((1,))
        for comp in comps:
            result = result * _compute(
                len(comp), _subgraph_adj(adj, comp), cache, budget
            )
        return result

    n2, adj2, factor = _strip_simplicial(n, [set(s) for s in adj])
    if n2 != n:
        if n2 == 0:
            return factor
        return factor * _compute(n2, adj2, cache, budget)

    # connected, no simplicial vertices left
    if e == n - 1:
        return tree_poly(n)
    if all(len(s) == 2 for s in adj):
        return cycle_poly(n)
    if e == n * (n - 1) // 2:
        return complete_poly(n)

    key = _canonical_key(n, adj)
    hit = cache.get(key)
    if hit is not None:
        return hit

    u, v = _best_branch_edge(n, adj)
    deleted = _compute(n, _delete(adj, u, v), cache, budget)
    contracted = _compute(n - 1, _contract(n, adj, u, v), cache, budget)
    result = deleted - contracted
    cache.put(key, result)
    return result


def chromatic_poly(
    g: Graph,
    cache: Optional[MemoCache] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> IntPoly:
    """Exact chromatic polynomial by deletion-contraction with memoization.

    Raises ResourceLimit if the recursion exceeds ``node_budget`` nodes;
    the budget aborts the run, it never changes the answer.
    """
    if g.n < 1:
        raise InvalidParameter("graph needs at least one vertex")
    if cache is None:
        cache = MemoCache()
    return _compute(g.n, g.adjacency(), cache, _Budget(node_budget))


# -- brute-force oracles ---------------------------------------------------------


def _brute_subgraph_expansion(g: Graph) -> IntPoly:
    """Sum over all 2^e edge subsets of (-1)^|E'| q^{k(E')}.

    Every subset is enumerated (include/exclude DFS over edges); the
    component count is maintained incrementally with an undoable
    union-by-size forest.
    """
    n = g.n
    edges = g.sorted_edges()
    e = len(edges)
    acc = [0] * (n + 1)
    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, k: int, sign: int):
        if i == e:
            acc[k] += sign
            return
        rec(i + 1, k, sign)  # edge i excluded
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec(i + 1, k, -sign)
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            rec(i + 1, k - 1, -sign)
            size[ru] -= size[rv]
            parent[rv] = rv

    rec(0, n, 1)
    return IntPoly(acc)


def _count_colorings(g: Graph, q: int) -> int:
    """Exact number of proper colorings with a palette of q colors.

    Counts partitions of the vertices into independent color classes
    (introducing classes in canonical order), then weights each partition
    with j classes by q(q-1)...(q-j+1).
    """
    n = g.n
    adj = g.adjacency()
    if q <= 0:
        return 0 if n else 1

    total = 0

    def weight(j: int) -> int:
        w = 1
        for s in range(j):
            w *= q - s
        return w

    classes: list = []

    def extend(v: int):
        nonlocal total
        if v == n:
            total += weight(len(classes))
            return
        for cls in classes:
            if not (adj[v] & cls):
                cls.add(v)
                extend(v + 1)
                cls.discard(v)
        if len(classes) < q:
            classes.append({v})
            extend(v + 1)
            classes.pop()

    extend(0)
    return total


def _brute_interpolation(g: Graph) -> IntPoly:
    """Lagrange interpolation through exact coloring counts at q = 0..n."""
    n = g.n
    xs = list(range(n + 1))
    ys = [_count_colorings(g, q) for q in xs]
    # Lagrange over rationals
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        # basis polynomial prod_{j != i} (q - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated chromatic polynomial not integral")
    return IntPoly(int(c) for c in coeffs)


def chromatic_brute(g: Graph, variant: str = "subgraph") -> IntPoly:
    """Independent brute-force chromatic polynomial, for n <= 10.

    variant="subgraph": subgraph expansion over all edge subsets.
    variant="interpolation": exact coloring counts at q=0..n + Lagrange.
    """
    if g.n > 10:
        raise TooLarge(f"brute oracle limited to n <= 10, got n = {g.n}")
    if g.n < 1:
        raise InvalidParameter("graph needs at least one vertex")
    if variant == "subgraph":
        return _brute_subgraph_expansion(g)
    if variant == "interpolation":
        return _brute_interpolation(g)
    raise InvalidParameter(f"unknown oracle variant {variant!r}")


def chromatic_glue(pg: IntPoly, ph: IntPoly, p: int) -> IntPoly:
    """Clique-intersection composition: pg*ph / P(K_p,q), exactly.

    DivisionNotExact signals that the inputs were not chromatic polynomials
    of graphs sharing a K_p.
    """
    if p < 1:
        raise InvalidParameter("clique size must be positive")
    return (pg * ph).div_exact(complete_poly(p))
