"""Plain and locally constrained homomorphism decision procedures.

The plain variant uses bitmask domains with forward checking and an MRV
pick, which keeps the large oracle suites (subdivided graphs mapping into
long cycles) fast.  The locally constrained variants use backtracking with
incremental neighbourhood bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import connected_components, max_degree
from .widths import check_path_decomposition

PLAIN = "Plain"
LOCALLY_INJECTIVE = "LocallyInjective"
LOCALLY_BIJECTIVE = "LocallyBijective"
LOCALLY_SURJECTIVE = "LocallySurjective"

MODES = (PLAIN, LOCALLY_INJECTIVE, LOCALLY_BIJECTIVE, LOCALLY_SURJECTIVE)


@dataclass(frozen=True)
class HomWitness:
    mapping: tuple  # image vertex per source vertex


def _initial_domains(g, h):
    """Bitmask candidate sets; g's colour lists apply when h is K3-like."""
    full = (1 << h.n) - 1
    domains = [full] * g.n
    if g.lists is not None and h.n == 3:
        for v in range(g.n):
            domains[v] = sum(1 << (c - 1) for c in g.lists[v])
    return domains


def validate_hom(g, h, mapping, mode=PLAIN):
    """Independent witness validator: edge preservation plus the per-vertex
    local constraint of the mode."""
    if len(mapping) != g.n:
        return False
    if any(not 0 <= mapping[v] < h.n for v in range(g.n)):
        return False
    if g.lists is not None and h.n == 3:
        if any(mapping[v] + 1 not in g.lists[v] for v in range(g.n)):
            return False
    for u, v in g.edges:
        if not h.has_edge(mapping[u], mapping[v]):
            return False
    if mode == PLAIN:
        return True
    for u in range(g.n):
        images = [mapping[w] for w in g.adj[u]]
        target = h.adj[mapping[u]]
        if mode == LOCALLY_INJECTIVE:
            if len(images) != len(set(images)):
                return False
        elif mode == LOCALLY_SURJECTIVE:
            if not set(images) >= target:
                return False
        elif mode == LOCALLY_BIJECTIVE:
            if len(images) != len(set(images)) or set(images) != set(target):
                return False
    return True


def _degree_ok(mode, dg, dh):
    if mode == LOCALLY_INJECTIVE:
        return dg <= dh
    if mode == LOCALLY_SURJECTIVE:
        return dg >= dh
    if mode == LOCALLY_BIJECTIVE:
        return dg == dh
    return True


def _bfs_order(g, comp):
    order = []
    placed = set()
    for root in sorted(comp, key=lambda v: -g.degree(v)):
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.adj[v]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def _solve_plain(g, h, comp):
    """MRV search with arc consistency for an edge-preserving map of one
    component.  AC is what lets the search see through long subdivision
    paths instead of enumerating walk prefixes."""
    hmask = [0] * h.n
    for a in range(h.n):
        for b in h.adj[a]:
            hmask[a] |= 1 << b
    domains = _initial_domains(g, h)
    assignment = {}

    def enforce_ac(domains, seeds):
        """Bitmask AC-3: a value survives iff every neighbour supports it."""
        queue = list(seeds)
        while queue:
            w = queue.pop()
            supported = 0
            d = domains[w]
            while d:
                b = (d & -d).bit_length() - 1
                d &= d - 1
                supported |= hmask[b]
            for u in g.adj[w]:
                newdom = domains[u] & supported
                if newdom != domains[u]:
                    if not newdom:
                        return False
                    domains[u] = newdom
                    queue.append(u)
        return True

    def search(domains):
        unassigned = [v for v in comp if v not in assignment]
        if not unassigned:
            return True
        v = min(unassigned, key=lambda x: bin(domains[x]).count("1"))
        d = domains[v]
        while d:
            a = (d & -d).bit_length() - 1
            d &= d - 1
            new = list(domains)
            new[v] = 1 << a
            if not enforce_ac(new, [v]):
                continue
            assignment[v] = a
            if search(new):
                return True
            del assignment[v]
        return False

    if not enforce_ac(domains, comp):
        return None
    if search(domains):
        return dict(assignment)
    return None


def _solve_local(g, h, comp, mode):
    """Backtracking with incremental local-constraint bookkeeping."""
    order = _bfs_order(g, comp)
    mapping = {}
    remaining_nbrs = {v: len(g.adj[v]) for v in comp}  # unassigned neighbours

    def local_ok_partial(u):
        """Checks at u that are sound on a partial assignment."""
        images = [mapping[w] for w in g.adj[u] if w in mapping]
        if mode in (LOCALLY_INJECTIVE, LOCALLY_BIJECTIVE):
            if len(images) != len(set(images)):
                return False
        if remaining_nbrs[u] == 0:
            target = h.adj[mapping[u]]
            if mode in (LOCALLY_SURJECTIVE, LOCALLY_BIJECTIVE):
                if not set(images) >= set(target):
                    return False
        return True

    def search(i):
        if i == len(order):
            return True
        v = order[i]
        anchors = [w for w in g.adj[v] if w in mapping]
        if anchors:
            candidates = set(h.adj[mapping[anchors[0]]])
            for w in anchors[1:]:
                candidates &= h.adj[mapping[w]]
        else:
            candidates = set(range(h.n))
        for a in sorted(candidates):
            if not _degree_ok(mode, g.degree(v), h.degree(a)):
                continue
            mapping[v] = a
            for w in g.adj[v]:
                remaining_nbrs[w] -= 1
            ok = local_ok_partial(v)
            if ok:
                for w in anchors:
                    if not local_ok_partial(w):
                        ok = False
                        break
            if ok and search(i + 1):
                return True
            for w in g.adj[v]:
                remaining_nbrs[w] += 1
            del mapping[v]
        return False

    if search(0):
        return dict(mapping)
    return None


def hom_exists(g, h, mode=PLAIN):
    """Return a HomWitness if a homomorphism of the given mode exists.

    Handles disconnected g component-wise; every returned witness passes
    validate_hom.
    """
    if h.n == 0:
        raise ValueError("target graph must be non-empty")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    full = {}
    for comp in connected_components(g):
        if mode == PLAIN:
            sol = _solve_plain(g, h, comp)
        else:
            sol = _solve_local(g, h, comp, mode)
        if sol is None:
            return None
        full.update(sol)
    witness = HomWitness(tuple(full[v] for v in range(g.n)))
    assert validate_hom(g, h, witness.mapping, mode)
    return witness


def hom_exists_exhaustive(g, h, mode=PLAIN):
    """Oracle: enumerate all |V(h)|^|V(g)| maps.  Tiny inputs only."""
    from itertools import product

    for mapping in product(range(h.n), repeat=g.n):
        if validate_hom(g, h, mapping, mode):
            return True
    return g.n == 0


def degree_bounded_check(g, h, d):
    """Instance admissibility for the degree-d locally constrained problems:
    at least one side has maximum degree <= d."""
    return max_degree(g) <= d or max_degree(h) <= d


# ---------------------------------------------------------------------------
# dynamic programming over a path decomposition (plain homomorphism)


def _niceify(bags):
    """Introduce/forget steps between consecutive bags."""
    steps = []  # ("intro"|"forget", vertex)
    current = set()
    for bag in list(bags) + [frozenset()]:
        for v in sorted(current - bag):
            steps.append(("forget", v))
            current.discard(v)
        for v in sorted(bag - current):
            steps.append(("intro", v))
            current.add(v)
    return steps


def hom_exists_pw(g, h, d):
    """Plain homomorphism existence by DP over a path decomposition of g.

    Table rows are list-consistent partial maps of the current bag;
    agrees with hom_exists(g, h, PLAIN) by construction.
    """
    if h.n == 0:
        raise ValueError("target graph must be non-empty")
    if not check_path_decomposition(g, d):
        raise ValueError("decomposition is not valid for g")
    domains = _initial_domains(g, h)
    steps = _niceify(d.bags)
    bag = []  # current bag vertices, in step order
    table = {()}
    for kind, v in steps:
        new = set()
        if kind == "intro":
            for row in table:
                partial = dict(zip(bag, row))
                dv = domains[v]
                for a in range(h.n):
                    if not dv >> a & 1:
                        continue
                    if all(h.has_edge(a, partial[w])
                           for w in g.adj[v] if w in partial):
                        new.add(row + (a,))
            bag.append(v)
        else:
            i = bag.index(v)
            for row in table:
                new.add(row[:i] + row[i + 1:])
            bag.pop(i)
        table = new
        if not table:
            return False
    return bool(table)
