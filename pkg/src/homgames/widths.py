"""Decomposition certificates and exact small-scale width computation.

Pathwidth is computed by a boundary DP over vertex subsets (the vertex
separation formulation), treewidth by an elimination-order DP, treedepth
by recursive root enumeration.  Every exact value comes with a certificate
that passes the matching checker.  ``min_vertex_separation`` deliberately
uses a different search (pruned enumeration of orders) so it can serve as
an independent cross-check of pathwidth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, graph, subdivide, induced_subgraph, connected_components

DEFAULT_VERTEX_CAP = 12


class InstanceTooLarge(ValueError):
    pass


def _check_cap(g, cap):
    if g.n > cap:
        raise InstanceTooLarge(f"graph has {g.n} vertices, cap is {cap}")


# ---------------------------------------------------------------------------
# certificate types and checkers


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple  # tuple of frozensets

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple
    tree: frozenset  # edges over bag indices

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class EliminationForest:
    parent: tuple  # parent vertex or None, index = vertex
    height: int


@dataclass(frozen=True)
class VertexOrder:
    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("order must be a permutation of 0..n-1")


def path_decomposition(bags):
    return PathDecomposition(tuple(frozenset(b) for b in bags))


def check_path_decomposition(g, d):
    """All three path decomposition invariants for g."""
    first, last = {}, {}
    for i, bag in enumerate(d.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return False
            first.setdefault(v, i)
            last[v] = i
    if set(first) != set(range(g.n)):
        return False
    for v in range(g.n):
        for i in range(first[v], last[v] + 1):
            if v not in d.bags[i]:  # occurrences must be contiguous
                return False
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            return False
    return True


def check_tree_decomposition(g, d):
    m = len(d.bags)
    for i, j in d.tree:
        if not (0 <= i < m and 0 <= j < m):
            return False
    # tree must be connected and acyclic
    if m > 0 and len(d.tree) != m - 1:
        return False
    nbrs = [set() for _ in range(m)]
    for i, j in d.tree:
        nbrs[i].add(j)
        nbrs[j].add(i)
    if m > 0:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != m:
            return False
    occ = [set() for _ in range(g.n)]
    for i, bag in enumerate(d.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return False
            occ[v].add(i)
    for v in range(g.n):
        if not occ[v]:
            return False
        # bag set of v must induce a connected subtree
        start = next(iter(occ[v]))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in occ[v] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != occ[v]:
            return False
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            return False
    return True


def check_elimination_forest(g, f):
    n = len(f.parent)
    if n != g.n:
        return False
    depth = [None] * n

    def depth_of(v, trail):
        if depth[v] is not None:
            return depth[v]
        if v in trail:
            return None  # cycle
        p = f.parent[v]
        if p is None:
            depth[v] = 1
        else:
            d = depth_of(p, trail | {v})
            if d is None:
                return None
            depth[v] = d + 1
        return depth[v]

    for v in range(n):
        if depth_of(v, set()) is None:
            return False

    def ancestors(v):
        anc = set()
        p = f.parent[v]
        while p is not None:
            anc.add(p)
            p = f.parent[p]
        return anc

    for u, v in g.edges:
        if u not in ancestors(v) and v not in ancestors(u):
            return False
    return max(depth, default=0) == f.height if n else f.height == 0


# ---------------------------------------------------------------------------
# pathwidth via boundary DP over subsets


def _boundary_count(g, mask):
    cnt = 0
    for v in range(g.n):
        if mask >> v & 1 and any(not (mask >> w & 1) for w in g.adj[v]):
            cnt += 1
    return cnt


def pathwidth(g, cap=DEFAULT_VERTEX_CAP):
    """Exact pathwidth with an optimal PathDecomposition certificate."""
    _check_cap(g, cap)
    if g.n == 0:
        return -1, path_decomposition([frozenset()])
    full = (1 << g.n) - 1
    cost = [0] * (full + 1)
    best = [0] * (full + 1)
    choice = [0] * (full + 1)
    masks_by_size = [[] for _ in range(g.n + 1)]
    for mask in range(full + 1):
        masks_by_size[bin(mask).count("1")].append(mask)
    for size in range(1, g.n + 1):
        for mask in masks_by_size[size]:
            c = _boundary_count(g, mask)
            cost[mask] = c
            bval, bv = None, None
            m = mask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                val = max(best[mask ^ (1 << v)], c)
                if bval is None or val < bval:
                    bval, bv = val, v
            best[mask] = bval
            choice[mask] = bv
    # reconstruct an optimal order (last vertex first)
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return best[full], _order_to_path_decomposition(g, order)


def _order_to_path_decomposition(g, order):
    """Bag i = v_i plus earlier vertices with a neighbour at position >= i."""
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for i, v in enumerate(order):
        bag = {v}
        for u in order[:i]:
            if any(pos[w] >= i for w in g.adj[u]):
                bag.add(u)
        bags.append(frozenset(bag))
    return PathDecomposition(tuple(bags))


def vertex_separation(g, o):
    """Max over prefixes of the order of the number of boundary vertices."""
    order = o.order if isinstance(o, VertexOrder) else tuple(o)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    prefix = set()
    worst = 0
    for v in order:
        prefix.add(v)
        worst = max(worst, sum(1 for u in prefix if g.adj[u] - prefix))
    return worst


def min_vertex_separation(g, cap=DEFAULT_VERTEX_CAP):
    """Minimum vertex separation over all orders, by pruned enumeration.

    Independent of the pathwidth DP on purpose: the two agree by [Ki92] and
    the test suite cross-checks them.
    """
    _check_cap(g, cap)
    if g.n == 0:
        return 0, VertexOrder(())
    best = [g.n, tuple(range(g.n))]  # n is a strict upper bound on any order

    def rec(order, prefix, remaining, worst):
        if worst >= best[0]:
            return
        if not remaining:
            best[0] = worst
            best[1] = tuple(order)
            return
        for v in sorted(remaining):
            order.append(v)
            prefix.add(v)
            remaining.discard(v)
            b = sum(1 for u in prefix if g.adj[u] - prefix)
            rec(order, prefix, remaining, max(worst, b))
            order.pop()
            prefix.discard(v)
            remaining.add(v)

    rec([], set(), set(range(g.n)), 0)
    return best[0], VertexOrder(best[1])


# ---------------------------------------------------------------------------
# treewidth via elimination-order DP


def _reach(g, v, eliminated_mask):
    """Non-eliminated vertices reachable from v through eliminated ones."""
    seen = 1 << v
    stack = [v]
    out = set()
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if seen >> w & 1:
                continue
            seen |= 1 << w
            if eliminated_mask >> w & 1:
                stack.append(w)
            else:
                out.add(w)
    return out


def treewidth(g, cap=DEFAULT_VERTEX_CAP):
    """Exact treewidth with an optimal TreeDecomposition certificate."""
    _check_cap(g, cap)
    if g.n == 0:
        return -1, TreeDecomposition((frozenset(),), frozenset())
    full = (1 << g.n) - 1
    best = [0] * (full + 1)
    choice = [0] * (full + 1)
    masks_by_size = [[] for _ in range(g.n + 1)]
    for mask in range(full + 1):
        masks_by_size[bin(mask).count("1")].append(mask)
    for size in range(1, g.n + 1):
        for mask in masks_by_size[size]:
            bval, bv = None, None
            m = mask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                prev = mask ^ (1 << v)
                val = max(best[prev], len(_reach(g, v, prev)))
                if bval is None or val < bval:
                    bval, bv = val, v
            best[mask] = bval
            choice[mask] = bv
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return best[full], _order_to_tree_decomposition(g, order)


def _order_to_tree_decomposition(g, order):
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    reaches = []
    mask = 0
    for v in order:
        r = _reach(g, v, mask)
        reaches.append(r)
        bags.append(frozenset({v} | r))
        mask |= 1 << v
    edges = set()
    for i, r in enumerate(reaches):
        if r:
            k = min(pos[u] for u in r)
            edges.add((i, k) if i < k else (k, i))
        elif i + 1 < len(bags):
            edges.add((i, i + 1))  # keep the tree connected
    return TreeDecomposition(tuple(bags), frozenset(edges))


# ---------------------------------------------------------------------------
# treedepth by root enumeration


def treedepth(g, cap=DEFAULT_VERTEX_CAP):
    """Exact treedepth with an EliminationForest certificate."""
    _check_cap(g, cap)
    memo = {}

    def solve(vertices):
        # returns (height, {vertex: parent-or-None}) for the induced subgraph
        key = frozenset(vertices)
        if key in memo:
            return memo[key]
        if not vertices:
            memo[key] = (0, {})
            return memo[key]
        sub = induced_subgraph(g, sorted(vertices))
        back = dict(enumerate(sorted(vertices)))
        comps = connected_components(sub)
        if len(comps) > 1:
            height = 0
            parent = {}
            for comp in comps:
                h, p = solve({back[i] for i in comp})
                height = max(height, h)
                parent.update(p)
            memo[key] = (height, parent)
            return memo[key]
        best = None
        for root in sorted(vertices):
            h, p = solve(set(vertices) - {root})
            cand = h + 1
            if best is None or cand < best[0]:
                parent = dict(p)
                for v in p:
                    if p[v] is None:
                        parent[v] = root
                parent[root] = None
                best = (cand, parent)
        memo[key] = best
        return best

    height, parent = solve(set(range(g.n)))
    par = tuple(parent.get(v) for v in range(g.n))
    return height, EliminationForest(par, height)


# ---------------------------------------------------------------------------
# primal graph of a CNF prefix formula


def primal_graph(f):
    """Variables as vertices (in prefix order), a clique per clause."""
    vars_in_order = [v for _, v in f.prefix.entries]
    idx = {v: i for i, v in enumerate(vars_in_order)}
    edges = set()
    for clause in f.clauses:
        vs = sorted({idx[lit[0]] for lit in clause})
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                edges.add((a, b))
    return graph(len(vars_in_order), edges)


# ---------------------------------------------------------------------------
# constructive decomposition lifts


def lift_decomposition_subdivision(g, d, k):
    """Path decomposition of subdivide(g, k) of width <= width(d) + 2.

    The first bag covering each edge is replaced (in series, per edge) by a
    run of bags carrying consecutive subdivision vertices.
    """
    if k < 1:
        raise ValueError("subdivision count must be positive")
    if not check_path_decomposition(g, d):
        raise ValueError("input decomposition is not valid for g")
    # fresh vertex ids mirror subdivide()'s edge-sorted allocation
    path_of = {}
    nxt = g.n
    for u, v in g.sorted_edges:
        path_of[(u, v)] = list(range(nxt, nxt + k))
        nxt += k
    first_bag = {}
    for e in g.sorted_edges:
        u, v = e
        for i, bag in enumerate(d.bags):
            if u in bag and v in bag:
                first_bag[e] = i
                break
    out = []
    for i, bag in enumerate(d.bags):
        out.append(bag)
        for e in g.sorted_edges:
            if first_bag[e] != i:
                continue
            u, v = e
            ps = [u] + path_of[e] + [v]
            if k == 1:
                out.append(bag | {ps[1]})
            else:
                for j in range(1, k):
                    out.append(bag | {ps[j], ps[j + 1]})
    return PathDecomposition(tuple(out))


def lift_decomposition_phi2(f, d):
    """Lift a primal-graph path decomposition of a CNF prefix formula to a
    decomposition of the triangle-gadget graph the QBF->QNAE->QCSP pipeline
    produces, of width at most 9w+2.
    """
    from . import reductions

    pg = primal_graph(f)
    if not check_path_decomposition(pg, d):
        raise ValueError("input decomposition is not valid for the primal graph")
    qr = reductions.reduce_qbf_to_qnae(f)
    img = reductions.reduce_qnae_to_qcsp(qr.instance)

    vars_in_order = [v for _, v in f.prefix.entries]
    # clause -> first bag containing all its variables (as primal indices)
    idx = {v: i for i, v in enumerate(vars_in_order)}
    assoc = []
    for clause in f.clauses:
        vs = {idx[lit[0]] for lit in clause}
        for i, bag in enumerate(d.bags):
            if vs <= bag:
                assoc.append(i)
                break
        else:
            raise ValueError("clause variables never share a bag")
    # duplicate bags so each copy carries at most one clause
    expanded = []  # (bag, clause-index-or-None)
    for i, bag in enumerate(d.bags):
        here = [c for c, b in enumerate(assoc) if b == i]
        if not here:
            expanded.append((bag, None))
        else:
            for c in here:
                expanded.append((bag, c))
    out = []
    hub = {img.w, img.f}
    for bag, c in expanded:
        lifted = set(hub)
        for i in bag:
            lifted.update(img.var_vertices[vars_in_order[i]])
        if c is not None:
            for q in qr.clause_fresh_vars[c]:
                lifted.update(img.var_vertices[q])
            for t in qr.clause_triples[c]:
                lifted.update(img.triple_triangles[t])
        out.append(frozenset(lifted))
    return PathDecomposition(tuple(out))
