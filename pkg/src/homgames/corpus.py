"""Deterministic instance corpora: exhaustive small-graph and formula
streams plus seeded random streams.

Graph enumeration up to isomorphism leans on the networkx atlas (complete
for up to seven vertices); formula corpora are enumerated directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product, permutations

from .graphs import graph, is_connected
from .quantified import EXISTS, FORALL, Prefix, QbfInstance, QcspInstance, QnaeInstance

ATLAS_MAX = 7


def _atlas_graphs():
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        relabel = {v: i for i, v in enumerate(sorted(G.nodes()))}
        out.append(graph(n, [(relabel[u], relabel[v]) for u, v in G.edges()]))
    return out


_ATLAS_CACHE = None


def all_graphs(n, connected=False):
    """All graphs on exactly n vertices, up to isomorphism (n <= 7)."""
    global _ATLAS_CACHE
    if n > ATLAS_MAX:
        raise ValueError(f"exhaustive enumeration capped at {ATLAS_MAX} vertices")
    if _ATLAS_CACHE is None:
        _ATLAS_CACHE = _atlas_graphs()
    out = [g for g in _ATLAS_CACHE if g.n == n]
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def all_graphs_upto(n, connected=False, min_n=1):
    out = []
    for m in range(min_n, n + 1):
        out.extend(all_graphs(m, connected=connected))
    return out


def all_prefixes(n):
    """Every quantifier pattern over every ordering of n variables."""
    out = []
    for perm in permutations(range(n)):
        for pattern in product((FORALL, EXISTS), repeat=n):
            out.append(Prefix(tuple(zip(pattern, perm))))
    return out


def quantifier_patterns(n):
    """Quantifier patterns over the fixed variable order 0..n-1."""
    return [Prefix(tuple(zip(pattern, range(n))))
            for pattern in product((FORALL, EXISTS), repeat=n)]


def all_qbf_instances(max_vars, max_clauses, max_width):
    """Exhaustive QBF corpus: every quantifier pattern over 1..max_vars
    variables (fixed variable order) with every set of distinct clauses of
    width <= max_width."""
    for n in range(1, max_vars + 1):
        literals = [(v, s) for v in range(n) for s in (True, False)]
        clauses = []
        for width in range(1, max_width + 1):
            clauses.extend(frozenset(c) for c in combinations(literals, width))
        clause_sets = [()]
        for m in range(1, max_clauses + 1):
            clause_sets.extend(combinations(clauses, m))
        for pfx in quantifier_patterns(n):
            for cs in clause_sets:
                yield QbfInstance(pfx, tuple(cs))


def all_positive_qnae_instances(max_vars, max_triples):
    """Exhaustive positive-triple NAE corpus over 1..max_vars variables."""
    for n in range(1, max_vars + 1):
        triples = [tuple((v, True) for v in t)
                   for t in combinations_with_replacement(range(n), 3)]
        triple_sets = []
        for m in range(1, max_triples + 1):
            triple_sets.extend(combinations(triples, m))
        for pfx in quantifier_patterns(n):
            for ts in triple_sets:
                yield QnaeInstance(pfx, tuple(ts))


def all_edp_instances(max_n, max_pairs):
    """Classic EDP corpus: atlas graphs with every multiset of terminal
    pairs of distinct endpoints."""
    from .edp import EdpInstance

    for g in all_graphs_upto(max_n):
        if g.n < 2:
            continue
        pairs = list(combinations(range(g.n), 2))
        for m in range(1, max_pairs + 1):
            for ps in combinations_with_replacement(pairs, m):
                yield EdpInstance(g, tuple(ps), 0)


# ---------------------------------------------------------------------------
# seeded random streams


@dataclass(frozen=True)
class Corpus:
    kind: str
    size: int
    count: int
    seed: int = 0


def random_graph(rng, n, p=0.5, lists=False):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    lsts = None
    if lists:
        choices = [frozenset({1, 2}), frozenset({1, 3}), frozenset({1, 2, 3})]
        lsts = {v: rng.choice(choices) for v in range(n)}
    return graph(n, edges, lsts)


def random_qcsp(rng, n, atom_p=0.4, list_p=0.3):
    entries = tuple((rng.choice((FORALL, EXISTS)), v) for v in range(n))
    atoms = tuple((u, v) for u, v in combinations(range(n), 2)
                  if rng.random() < atom_p)
    list_atoms = tuple((v, rng.choice((frozenset({1, 2}), frozenset({1, 3}))))
                       for v in range(n) if rng.random() < list_p)
    return QcspInstance(Prefix(entries), atoms, list_atoms)


def generate_corpus(c):
    """Deterministic instance stream for the given corpus description."""
    if c.kind == "graphs":
        return all_graphs_upto(c.size)[: c.count or None]
    if c.kind == "connected-graphs":
        return all_graphs(c.size, connected=True)[: c.count or None]
    if c.kind == "qbf":
        out = list(all_qbf_instances(c.size, 2, 3))
        return out[: c.count or None]
    if c.kind == "random-graphs":
        rng = random.Random(c.seed)
        return [random_graph(rng, c.size) for _ in range(c.count)]
    if c.kind == "random-qcsp":
        rng = random.Random(c.seed)
        return [random_qcsp(rng, c.size) for _ in range(c.count)]
    raise ValueError(f"unknown corpus kind {c.kind!r}")
