"""Instance transformations, each paired with an oracle-backed checker.

Fresh vertices and fresh variables are always allocated in input order, so
reduction images are byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import corpus as corpus_mod
from .graphs import (Graph, graph, clique, cycle_graph, subdivide, is_subcubic,
                     is_connected, every_edge_in_triangle, triangle_augment)
from .quantified import (CONST_FALSE, EXISTS, FORALL, Prefix, QbfInstance,
                         QcspInstance, QnaeInstance, qbf_eval, qnae_eval,
                         qcsp_eval, alternation_blocks)
from .widths import VertexOrder


@dataclass(frozen=True)
class ReductionReport:
    kind: str
    input_summary: str
    output_summary: str
    size_stats: dict
    equivalence_checked: bool
    agrees: bool


# ---------------------------------------------------------------------------
# QBF -> QNAE3SAT


@dataclass(frozen=True)
class QnaeReduction:
    instance: QnaeInstance
    clause_fresh_vars: tuple  # per input clause, tuple of fresh variable ids
    clause_triples: tuple     # per input clause, tuple of triple indices


def reduce_qbf_to_qnae(i):
    """Chain encoding of wide clauses into NAE triples.

    A clause of width k >= 3 becomes k-1 triples over k-2 fresh existential
    variables appended to the prefix; widths 1 and 2 pad with the constant
    False.
    """
    if any(not c for c in i.clauses):
        raise ValueError("empty clauses are not reducible")
    vars_used = set(i.prefix.variables())
    nxt = max((v for v in vars_used if isinstance(v, int)), default=-1) + 1
    entries = list(i.prefix.entries)
    triples = []
    fresh_per_clause = []
    triples_per_clause = []
    for clause in i.clauses:
        lits = sorted(clause)
        k = len(lits)
        start = len(triples)
        fresh = []
        if k == 1:
            triples.append((lits[0], CONST_FALSE, CONST_FALSE))
        elif k == 2:
            triples.append((lits[0], lits[1], CONST_FALSE))
        else:
            fresh = list(range(nxt, nxt + k - 2))
            nxt += k - 2
            for q in fresh:
                entries.append((EXISTS, q))
            triples.append((lits[0], lits[1], (fresh[0], True)))
            for j in range(1, k - 2):
                triples.append(((fresh[j - 1], False), lits[j + 1], (fresh[j], True)))
            triples.append(((fresh[-1], False), lits[k - 1], CONST_FALSE))
        fresh_per_clause.append(tuple(fresh))
        triples_per_clause.append(tuple(range(start, len(triples))))
    inst = QnaeInstance(Prefix(tuple(entries)), tuple(triples))
    return QnaeReduction(inst, tuple(fresh_per_clause), tuple(triples_per_clause))


# ---------------------------------------------------------------------------
# QNAE3SAT -> QCSP(K3), the triangle-gadget graph


@dataclass(frozen=True)
class Phi2Image:
    instance: QcspInstance
    graph: Graph
    order: VertexOrder
    w: int
    f: int
    var_vertices: dict    # variable -> (x, y, z) vertex ids
    triple_triangles: tuple  # per triple, (a, b, c) vertex ids
    universal_vertices: frozenset


def reduce_qnae_to_qcsp(i):
    """Build the triangle-gadget graph: a W-F hub, an x-y-z path per
    variable, and a triangle per NAE triple whose corners attach to x
    (positive), y (negated) or F (constant)."""
    variables = list(i.prefix.variables())
    quant = {v: q for q, v in i.prefix.entries}
    w, f = 0, 1
    edges = [(w, f)]
    nxt = 2
    var_vertices = {}
    for v in variables:
        x, y, z = nxt, nxt + 1, nxt + 2
        nxt += 3
        var_vertices[v] = (x, y, z)
        edges += [(x, y), (y, z), (w, x), (w, y)]
    triangles = []
    for t in i.triples:
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        triangles.append((a, b, c))
        edges += [(a, b), (b, c), (a, c)]
        for corner, term in zip((a, b, c), t):
            if term == CONST_FALSE:
                edges.append((corner, f))
            else:
                var, positive = term
                x, y, _z = var_vertices[var]
                edges.append((corner, x if positive else y))
    g = graph(nxt, edges)
    # playing order: W, F, then per variable z_i (with x_i, y_i interleaved
    # when the variable is existential), then everything else.  An
    # existential variable's value lives in x_i, so x_i must be committed at
    # the variable's own prefix position; leaving it in the tail would let
    # Existential defer the choice past later universals.  A universal
    # variable's x_i may stay in the tail: colouring z_i with 1 or 2 forces
    # it, and colouring z_i with 3 only cedes the choice to Existential.
    # Interleaving only at existential positions keeps the quantifier block
    # structure of the input prefix.
    seq = [w, f]
    entries = [(EXISTS, w), (EXISTS, f)]
    for v in variables:
        x, y, z = var_vertices[v]
        entries.append((quant[v], z))
        seq.append(z)
        if quant[v] == EXISTS:
            entries += [(EXISTS, x), (EXISTS, y)]
            seq += [x, y]
    rest = [u for u in range(nxt) if u not in set(seq)]
    seq += rest
    entries += [(EXISTS, u) for u in rest]
    order = VertexOrder(tuple(seq))
    inst = QcspInstance(Prefix(tuple(entries)), tuple(sorted(g.edges)))
    universal = frozenset(var_vertices[v][2] for v in variables if quant[v] == FORALL)
    return Phi2Image(inst, g, order, w, f, var_vertices, tuple(triangles), universal)


# ---------------------------------------------------------------------------
# 3-colouring under subdivision


def reduce_3col_by_subdivision(g, r, auto_augment=True):
    """(G, K3) -> (G^(5^r - 1), C_(3 * 5^r)); needs G connected with every
    edge in a triangle, which auto_augment establishes when missing."""
    if r < 1:
        raise ValueError("r must be positive")
    if not is_connected(g):
        raise ValueError("the source graph must be connected")
    if not every_edge_in_triangle(g):
        if not auto_augment:
            raise ValueError("every edge must lie in a triangle")
        g = triangle_augment(g)
    k = 5 ** r
    return subdivide(g, k - 1), cycle_graph(3 * k)


# ---------------------------------------------------------------------------
# subcubic C5 chain gadget


def c5_chain_reduce(g):
    """Replace each vertex by a chain of pentagon gadgets, one per tripled
    edge slot, and join gadget tops along the (tripled) original edges.

    Consecutive gadgets share an edge with reversed orientation so that in
    any pentagon-colouring all tops of a chain receive the same value; the
    output is always subcubic.
    """
    # slot assignment: edges incident to v in sorted order, three slots each
    slot_of = {}  # (v, edge, copy) -> slot index on v's chain
    incident = {v: [] for v in range(g.n)}
    for e in g.sorted_edges:
        u, v = e
        incident[u].append(e)
        incident[v].append(e)
    for v in range(g.n):
        s = 0
        for e in incident[v]:
            for t in range(3):
                slot_of[(v, e, t)] = s
                s += 1
    edges = []
    nxt = 0
    tops = {}  # (v, slot) -> top vertex id
    for v in range(g.n):
        nslots = 3 * len(incident[v])
        if nslots == 0:
            nxt += 1  # isolated vertex kept as-is, no gadget
            continue
        # first pentagon: a0..a4, cycle a0-a1-a2-a3-a4-a0, top a2
        a = list(range(nxt, nxt + 5))
        nxt += 5
        edges += [(a[0], a[1]), (a[1], a[2]), (a[2], a[3]), (a[3], a[4]), (a[4], a[0])]
        tops[(v, 0)] = a[2]
        prev = a
        for s in range(1, nslots):
            # identify the new gadget's first edge with the previous one's
            # fourth edge, orientation reversed: b0 = prev a4, b1 = prev a3
            b = [prev[4], prev[3]] + list(range(nxt, nxt + 3))
            nxt += 3
            edges += [(b[1], b[2]), (b[2], b[3]), (b[3], b[4]), (b[4], b[0])]
            tops[(v, s)] = b[2]
            prev = b
    for e in g.sorted_edges:
        u, v = e
        for t in range(3):
            edges.append((tops[(u, slot_of[(u, e, t)])],
                          tops[(v, slot_of[(v, e, t)])]))
    return graph(nxt, edges)


# ---------------------------------------------------------------------------
# locally constrained homomorphism under subdivision


def local_hom_subdivision_pair(g, r):
    """(G, K4) -> (G^r, K4^r) for the locally constrained variants."""
    if r < 1:
        raise ValueError("r must be positive")
    if not is_subcubic(g):
        raise ValueError("the source graph must be subcubic")
    return subdivide(g, r), subdivide(clique(4), r)


# ---------------------------------------------------------------------------
# positive QNAE -> list-QCSP(K3, {1,2}, {1,3}) clause gadget


L12 = frozenset({1, 2})
L13 = frozenset({1, 3})
L123 = frozenset({1, 2, 3})


@dataclass(frozen=True)
class ListQcspImage:
    instance: QcspInstance
    graph: Graph
    order: VertexOrder
    var_z: dict  # variable -> z vertex
    var_x: dict  # variable -> x vertex (first copy)
    universal_vertices: frozenset


def reduce_pik_qnae_to_list_qcsp(i, p):
    """The clause-gadget construction for positive NAE triples.

    Per variable: z (free list) joined to x (list {1,2}) by an odd path of
    {1,2} inner vertices.  Per triple: three gadget vertices and six odd
    connecting paths, inner lists {1,2} except the path between the two
    free-list gadget vertices, which uses {1,3}.  Variables appearing in
    more than two clause slots are split into copies joined by even {1,2}
    paths.  The output graph is subcubic.
    """
    if p < 1:
        raise ValueError("p must be at least 1 (direct edges are excluded)")
    for t in i.triples:
        for term in t:
            if term == CONST_FALSE:
                raise ValueError("constant terms are not supported here")
            if not term[1]:
                raise ValueError("triples must reference variables positively")

    variables = list(i.prefix.variables())
    quant = {v: q for q, v in i.prefix.entries}
    lists = {}
    edges = []
    nxt = 0

    def fresh(lst):
        nonlocal nxt
        v = nxt
        nxt += 1
        lists[v] = lst
        return v

    def add_path(a, b, length, inner_list):
        prev = a
        for _ in range(length - 1):
            w = fresh(inner_list)
            edges.append((prev, w))
            prev = w
        edges.append((prev, b))

    var_z, var_x = {}, {}
    for v in variables:
        z = fresh(L123)
        x = fresh(L12)
        var_z[v] = z
        var_x[v] = x
        add_path(z, x, 2 * p + 1, L12)

    # clause-slot appearances per variable, in input order
    appearances = {v: [] for v in variables}
    for ci, t in enumerate(i.triples):
        for slot, term in enumerate(t):
            appearances[term[0]].append((ci, slot))

    # attachment point per (clause, slot); split into copies when a
    # variable occupies more than two slots overall
    attach = {}
    for v in variables:
        apps = appearances[v]
        if len(apps) <= 2:
            for a in apps:
                attach[a] = var_x[v]
        else:
            prev = var_x[v]
            for a in apps:
                copy = fresh(L12)
                add_path(prev, copy, 2 * p + 2, L12)  # even: copy == original
                attach[a] = copy
                prev = copy

    for ci, t in enumerate(i.triples):
        c0 = fresh(L12)
        c1 = fresh(L123)
        c2 = fresh(L123)
        add_path(attach[(ci, 0)], c0, 2 * p + 1, L12)
        add_path(attach[(ci, 1)], c1, 2 * p + 1, L12)
        add_path(attach[(ci, 2)], c2, 2 * p + 1, L12)
        add_path(c0, c1, 2 * p + 1, L12)
        add_path(c0, c2, 2 * p + 1, L12)
        add_path(c1, c2, 2 * p + 1, L13)

    g = graph(nxt, edges, lists={v: lists[v] for v in range(nxt)})
    # z vertices in prefix order, with x_i interleaved when the variable is
    # existential so its value is committed at the variable's own position;
    # a universal variable's x_i is forced by z_i (or freely choosable when
    # z_i is coloured 3, which only helps Existential) and may stay in the
    # tail.  This keeps the quantifier block structure of the input prefix.
    seq = []
    entries = []
    for v in variables:
        seq.append(var_z[v])
        entries.append((quant[v], var_z[v]))
        if quant[v] == EXISTS:
            seq.append(var_x[v])
            entries.append((EXISTS, var_x[v]))
    rest = [u for u in range(nxt) if u not in set(seq)]
    seq += rest
    order = VertexOrder(tuple(seq))
    entries += [(EXISTS, u) for u in rest]
    list_atoms = tuple((v, lists[v]) for v in range(nxt) if lists[v] != L123)
    inst = QcspInstance(Prefix(tuple(entries)), tuple(sorted(g.edges)), list_atoms)
    universal = frozenset(var_z[v] for v in variables if quant[v] == FORALL)
    return ListQcspImage(inst, g, order, var_z, var_x, universal)


def odd_path_gadget_check(p, inner_list):
    """Feasible endpoint colour pairs of a path of length 2p+1 whose inner
    vertices carry the given list, by exhaustive enumeration."""
    from itertools import product

    inner_list = tuple(sorted(inner_list))
    inner = 2 * p
    pairs = set()
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for inner_cols in product(inner_list, repeat=inner):
                seq = (a,) + inner_cols + (b,)
                if all(seq[i] != seq[i + 1] for i in range(len(seq) - 1)):
                    pairs.add((a, b))
                    break
    return frozenset(pairs)


# ---------------------------------------------------------------------------
# EDP -> Long EDP


def reduce_edp_to_long_edp(i):
    """k-subdivide the graph (k = number of terminal pairs) and require
    paths of length at least k; terminals keep their original ids."""
    from .edp import EdpInstance

    if i.min_length != 0:
        raise ValueError("the source must be a classic EDP instance")
    k = len(i.pairs)
    return EdpInstance(subdivide(i.graph, k), i.pairs, k)


# ---------------------------------------------------------------------------
# corpus-level verification


def _report(kind, insum, outsum, stats, agrees):
    return ReductionReport(kind, insum, outsum, stats, True, agrees)


def verify_reduction(kind, **params):
    """Run a reduction over a generated corpus and compare independent
    oracles on source and image."""
    if kind == "qbf-to-qcsp":
        return _verify_qbf_chain(**params)
    if kind == "3col-subdivision":
        return _verify_3col(**params)
    if kind == "c5-chain":
        return _verify_c5(**params)
    if kind == "local-subdivision":
        return _verify_local(**params)
    if kind == "pik-list-qcsp":
        return _verify_pik(**params)
    if kind == "edp-to-long-edp":
        return _verify_edp(**params)
    raise ValueError(f"unknown reduction kind {kind!r}")


def _verify_qbf_chain(max_vars=3, max_clauses=2, max_width=3):
    total = 0
    agrees = True
    for inst in corpus_mod.all_qbf_instances(max_vars, max_clauses, max_width):
        total += 1
        a = qbf_eval(inst)
        qr = reduce_qbf_to_qnae(inst)
        b = qnae_eval(qr.instance)
        img = reduce_qnae_to_qcsp(qr.instance)
        c = qcsp_eval(img.instance)
        if not a == b == c:
            agrees = False
            break
    return _report("qbf-to-qcsp", f"all QBF <= {max_vars} vars, <= {max_clauses} clauses",
                   "triangle-gadget QCSP images", {"instances": total}, agrees)


def _verify_3col(max_n=6, r=1):
    from .homs import hom_exists

    k3 = clique(3)
    total = 0
    agrees = True
    for g in corpus_mod.all_graphs_upto(max_n, connected=True):
        ga = triangle_augment(g)
        left, right = reduce_3col_by_subdivision(ga, r)
        total += 1
        a = hom_exists(ga, k3) is not None
        b = hom_exists(left, right) is not None
        if a != b:
            agrees = False
            break
    return _report("3col-subdivision", f"connected triangle-augmented, n <= {max_n}",
                   f"{5 ** r - 1}-subdivisions vs C_{3 * 5 ** r}",
                   {"instances": total, "r": r}, agrees)


def _verify_c5(max_n=5):
    from .homs import hom_exists

    c5 = cycle_graph(5)
    total = 0
    agrees = True
    for g in corpus_mod.all_graphs_upto(max_n):
        out = c5_chain_reduce(g)
        total += 1
        if not is_subcubic(out):
            agrees = False
            break
        a = hom_exists(g, c5) is not None
        b = hom_exists(out, c5) is not None
        if a != b:
            agrees = False
            break
    return _report("c5-chain", f"all graphs n <= {max_n}", "pentagon chain gadgets",
                   {"instances": total}, agrees)


def _verify_local(max_n=6, rs=(1, 2), modes=None):
    from .homs import (LOCALLY_BIJECTIVE, LOCALLY_INJECTIVE,
                       LOCALLY_SURJECTIVE, hom_exists)

    modes = modes or (LOCALLY_BIJECTIVE, LOCALLY_SURJECTIVE, LOCALLY_INJECTIVE)
    k4 = clique(4)
    total = 0
    agrees = True
    for g in corpus_mod.all_graphs_upto(max_n, connected=True):
        if not is_subcubic(g):
            continue
        for r in rs:
            gr, k4r = local_hom_subdivision_pair(g, r)
            for mode in modes:
                total += 1
                a = hom_exists(g, k4, mode) is not None
                b = hom_exists(gr, k4r, mode) is not None
                if a != b:
                    return _report("local-subdivision", f"subcubic connected n <= {max_n}",
                                   "uniform subdivisions vs K4^r",
                                   {"instances": total}, False)
    return _report("local-subdivision", f"subcubic connected n <= {max_n}",
                   "uniform subdivisions vs K4^r", {"instances": total}, agrees)


def _verify_pik(max_vars=3, max_triples=2, ps=(1, 2)):
    total = 0
    for inst in corpus_mod.all_positive_qnae_instances(max_vars, max_triples):
        a = qnae_eval(inst)
        for p in ps:
            img = reduce_pik_qnae_to_list_qcsp(inst, p)
            total += 1
            if not is_subcubic(img.graph):
                return _report("pik-list-qcsp", "positive NAE corpus",
                               "clause gadget images", {"instances": total}, False)
            if qcsp_eval(img.instance, cap=120) != a:
                return _report("pik-list-qcsp", "positive NAE corpus",
                               "clause gadget images", {"instances": total}, False)
    return _report("pik-list-qcsp", f"positive NAE, <= {max_vars} vars",
                   "clause gadget images", {"instances": total}, True)


def _verify_edp(max_n=5, max_pairs=2):
    from .edp import edp_solve

    total = 0
    for inst in corpus_mod.all_edp_instances(max_n, max_pairs):
        total += 1
        a = edp_solve(inst) is not None
        long_inst = reduce_edp_to_long_edp(inst)
        b = edp_solve(long_inst) is not None
        if a != b:
            return _report("edp-to-long-edp", f"graphs n <= {max_n}",
                           "k-subdivided long instances", {"instances": total}, False)
    return _report("edp-to-long-edp", f"graphs n <= {max_n}",
                   "k-subdivided long instances", {"instances": total}, True)
