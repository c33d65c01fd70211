"""Exact edge-disjoint paths solvers at desk scale.

Paths are simple: any walk contains a simple path on a subset of its
edges, so edge-disjointness is preserved by restricting to simple paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, path_graph, contains_subgraph

DEFAULT_EDGE_CAP = 64


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class EdpInstance:
    graph: Graph
    pairs: tuple  # of (s, t) vertex pairs
    min_length: int = 0  # 0 = classic EDP

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("at least one terminal pair is required")
        for s, t in self.pairs:
            if not (0 <= s < self.graph.n and 0 <= t < self.graph.n):
                raise ValueError(f"terminal pair ({s},{t}) out of range")
        if self.min_length < 0:
            raise ValueError("minimum length must be non-negative")


def validate_paths(i, paths):
    """Connectivity per pair, pairwise edge-disjointness, length bound."""
    if paths is None or len(paths) != len(i.pairs):
        return False
    used = set()
    for (s, t), path in zip(i.pairs, paths):
        if not path or path[0] != s or path[-1] != t:
            return False
        if len(path) - 1 < i.min_length:
            return False
        for a, b in zip(path, path[1:]):
            if not i.graph.has_edge(a, b):
                return False
            e = (a, b) if a < b else (b, a)
            if e in used:
                return False
            used.add(e)
    return True


def _search(i, max_path_len, cap):
    if len(i.graph.edges) > cap:
        raise InstanceTooLarge(
            f"{len(i.graph.edges)} edges exceeds the search cap {cap}")
    g = i.graph
    solution = []

    def paths_from(s, t, used):
        """Yield simple paths s..t avoiding used edges, depth-first."""
        path = [s]
        onpath = {s}

        def rec():
            v = path[-1]
            if v == t and len(path) - 1 >= i.min_length:
                yield list(path)
            if len(path) - 1 >= max_path_len:
                return
            for w in sorted(g.adj[v]):
                e = (v, w) if v < w else (w, v)
                if e in used or w in onpath:
                    continue
                path.append(w)
                onpath.add(w)
                used.add(e)
                yield from rec()
                used.discard(e)
                onpath.discard(w)
                path.pop()

        if s == t:
            if i.min_length == 0:
                yield [s]
            return
        yield from rec()

    used = set()

    def assign(idx):
        if idx == len(i.pairs):
            return True
        s, t = i.pairs[idx]
        # the generator keeps its path edges marked in `used` while paused
        for path in paths_from(s, t, used):
            solution.append(path)
            if assign(idx + 1):
                return True
            solution.pop()
        return False

    if assign(0):
        return [tuple(p) for p in solution]
    return None


def edp_solve(i, cap=DEFAULT_EDGE_CAP):
    """Pairwise edge-disjoint simple paths for every terminal pair, each of
    length >= the instance minimum, or None."""
    sol = _search(i, max_path_len=len(i.graph.edges), cap=cap)
    if sol is not None:
        assert validate_paths(i, sol)
    return sol


def edp_solve_bounded_depth(i, m, cap=DEFAULT_EDGE_CAP):
    """Same contract as edp_solve but restricted to P_m-subgraph-free hosts,
    where only paths shorter than m vertices can exist."""
    if contains_subgraph(i.graph, path_graph(m)):
        raise ValueError(f"graph contains a {m}-vertex path")
    if i.min_length >= m:
        return None  # no path that long exists in a P_m-free graph
    sol = _search(i, max_path_len=m - 2, cap=cap)
    if sol is not None:
        assert validate_paths(i, sol)
    return sol
