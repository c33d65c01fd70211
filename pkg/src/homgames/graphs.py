"""Immutable simple graphs, generators and subgraph machinery.

Vertices are dense integers 0..n-1.  All transforms return new graphs;
fresh vertices introduced by a transform are appended after the existing
ones in a deterministic (edge-sorted) order so that outputs are
reproducible bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with optional per-vertex colour lists.

    ``lists``, when present, maps every vertex to a non-empty subset of
    {1, 2, 3} (the unary relations of the list-colouring variants).
    """

    n: int
    edges: frozenset
    lists: tuple | None = None  # tuple of frozensets, index = vertex

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalised")
        if self.lists is not None:
            if len(self.lists) != self.n:
                raise ValueError("lists must cover every vertex")
            for v, lst in enumerate(self.lists):
                if not lst or not lst <= {1, 2, 3}:
                    raise ValueError(f"list of vertex {v} must be a non-empty subset of {{1,2,3}}")

    @cached_property
    def adj(self):
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v):
        return len(self.adj[v])

    @cached_property
    def sorted_edges(self):
        return tuple(sorted(self.edges))

    def has_edge(self, u, v):
        return _norm_edge(u, v) in self.edges

    def vertex_list(self, v):
        if self.lists is None:
            return frozenset({1, 2, 3})
        return self.lists[v]


def graph(n, edges=(), lists=None):
    """Build a Graph from an edge iterable, normalising edge order."""
    es = frozenset(_norm_edge(u, v) for u, v in edges)
    if lists is not None and not isinstance(lists, tuple):
        lists = tuple(frozenset(lists[v]) for v in range(n))
    return Graph(n, es, lists)


def with_lists(g, lists):
    """Return a copy of ``g`` carrying the given colour lists."""
    return graph(g.n, g.edges, lists={v: lists[v] for v in range(g.n)})


# ---------------------------------------------------------------------------
# named generators


def path_graph(n):
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n):
    if n < 1:
        raise ValueError("clique size must be positive")
    return graph(n, combinations(range(n), 2))


def claw():
    return graph(4, [(0, 1), (0, 2), (0, 3)])


def star(leaves):
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivided_claw(a, b, c):
    """Claw with its three legs subdivided to lengths a, b, c (>= 1 edges)."""
    if min(a, b, c) < 1:
        raise ValueError("leg lengths must be at least 1")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return graph(nxt, edges)


def make_named(kind, *params):
    """Named generator: path, cycle, clique, claw or subdivided_claw."""
    if kind == "path":
        return path_graph(*params)
    if kind == "cycle":
        return cycle_graph(*params)
    if kind == "clique":
        return clique(*params)
    if kind == "claw":
        return claw()
    if kind == "subdivided_claw":
        return subdivided_claw(*params)
    raise ValueError(f"unknown graph kind {kind!r}")


def disjoint_union(g1, g2):
    edges = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    lists = None
    if g1.lists is not None or g2.lists is not None:
        lists = {v: g1.vertex_list(v) for v in range(g1.n)}
        lists.update({v + g1.n: g2.vertex_list(v) for v in range(g2.n)})
    return graph(g1.n + g2.n, edges, lists)


# ---------------------------------------------------------------------------
# transforms


def subdivide(g, k):
    """The k-subdivision: every edge replaced by a path with k inner vertices.

    Original vertices keep their ids and lists; fresh vertices are appended
    in edge-sorted order and carry no list.
    """
    if k < 0:
        raise ValueError("subdivision count must be non-negative")
    if k == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.sorted_edges:
        prev = u
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    lists = None
    if g.lists is not None:
        lists = {v: g.lists[v] for v in range(g.n)}
        lists.update({v: frozenset({1, 2, 3}) for v in range(g.n, nxt)})
    return graph(nxt, edges, lists)


def max_degree(g):
    return max((g.degree(v) for v in range(g.n)), default=0)


def is_subcubic(g):
    return max_degree(g) <= 3


def connected_components(g):
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g):
    return len(connected_components(g)) <= 1


def induced_subgraph(g, vertices):
    """Subgraph induced on the given vertices, relabelled densely in order."""
    idx = {v: i for i, v in enumerate(vertices)}
    edges = [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx]
    lists = None
    if g.lists is not None:
        lists = {idx[v]: g.lists[v] for v in vertices}
    return graph(len(vertices), edges, lists)


# ---------------------------------------------------------------------------
# subgraph containment / isomorphism (brute force, small h only)


def contains_subgraph(g, h):
    """True iff h is isomorphic to a (not necessarily induced) subgraph of g.

    Backtracking over injective vertex maps with degree pruning; intended
    for small pattern graphs (|V(h)| <= ~10).
    """
    if h.n > g.n or len(h.edges) > len(g.edges):
        return False
    # order h's vertices so each one after the first is adjacent to an
    # earlier one where possible (improves pruning)
    order = []
    placed = set()
    verts = sorted(range(h.n), key=lambda v: -h.degree(v))
    for root in verts:
        if root in placed:
            continue
        stack = [root]
        placed.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(h.adj[v], key=lambda x: -h.degree(x)):
                if w not in placed:
                    placed.add(w)
                    stack.append(w)

    gdeg = [g.degree(v) for v in range(g.n)]
    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        hv = order[i]
        mapped_nbrs = [mapping[w] for w in h.adj[hv] if w in mapping]
        if mapped_nbrs:
            candidates = set(g.adj[mapped_nbrs[0]])
            for m in mapped_nbrs[1:]:
                candidates &= g.adj[m]
        else:
            candidates = set(range(g.n))
        for gv in sorted(candidates):
            if gv in used or gdeg[gv] < h.degree(hv):
                continue
            mapping[hv] = gv
            used.add(gv)
            if extend(i + 1):
                return True
            del mapping[hv]
            used.discard(gv)
        return False

    return extend(0)


def are_isomorphic(g, h):
    """Brute-force isomorphism check for small graphs (<= ~10 vertices)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    if g.n > 10:
        # containment both ways with equal sizes is isomorphism
        return contains_subgraph(g, h)
    for perm in permutations(range(g.n)):
        if all(_norm_edge(perm[u], perm[v]) in h.edges for u, v in g.edges):
            return True
    return False


# ---------------------------------------------------------------------------
# the class S and the dichotomy predicate


def _is_tree(g, comp):
    sub = induced_subgraph(g, comp)
    return len(sub.edges) == sub.n - 1 and is_connected(sub)


def in_class_S(h):
    """True iff every component is a path or a subdivided claw.

    Equivalently: each component is a tree with maximum degree <= 3 and at
    most one vertex of degree 3.
    """
    for comp in connected_components(h):
        if not _is_tree(h, comp):
            return False
        degs = [h.degree(v) for v in comp]
        if max(degs, default=0) > 3:
            return False
        if sum(1 for d in degs if d == 3) > 1:
            return False
    return True


EFFICIENTLY_SOLVABLE = "EfficientlySolvable"
COMPUTATIONALLY_HARD = "ComputationallyHard"


@dataclass(frozen=True)
class DichotomyVerdict:
    verdict: str
    witness: int | None = None  # index into the classified set

    def __post_init__(self):
        if (self.verdict == EFFICIENTLY_SOLVABLE) != (self.witness is not None):
            raise ValueError("witness present iff efficiently solvable")


def theorem1_classify(hs):
    """Dichotomy verdict for the family of forbidden subgraphs ``hs``.

    Efficiently solvable iff some member of the family lies in the class of
    disjoint unions of paths and subdivided claws.
    """
    hs = list(hs)
    if not hs:
        raise ValueError("the forbidden set must be non-empty")
    for i, h in enumerate(hs):
        if in_class_S(h):
            return DichotomyVerdict(EFFICIENTLY_SOLVABLE, i)
    return DichotomyVerdict(COMPUTATIONALLY_HARD)


# ---------------------------------------------------------------------------
# triangle augmentation


def every_edge_in_triangle(g):
    return all(g.adj[u] & g.adj[v] for u, v in g.edges)


def triangle_augment(g):
    """Add a fresh apex vertex to every edge not already in a triangle."""
    edges = list(g.edges)
    nxt = g.n
    for u, v in g.sorted_edges:
        if not (g.adj[u] & g.adj[v]):
            edges.append((u, nxt))
            edges.append((v, nxt))
            nxt += 1
    lists = None
    if g.lists is not None:
        lists = {v: g.lists[v] for v in range(g.n)}
        lists.update({v: frozenset({1, 2, 3}) for v in range(g.n, nxt)})
    return graph(nxt, edges, lists)
