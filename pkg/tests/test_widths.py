"""Width measures: known closed-form values, certificate validity, and the
two decomposition-lifting constructions."""

import pytest

from homgames import corpus
from homgames.graphs import (claw, clique, cycle_graph, disjoint_union, graph,
                             path_graph, star, subdivide)
from homgames.quantified import Prefix, qbf
from homgames.widths import (InstanceTooLarge, PathDecomposition,
                             check_elimination_forest,
                             check_path_decomposition,
                             check_tree_decomposition,
                             lift_decomposition_phi2,
                             lift_decomposition_subdivision,
                             min_vertex_separation, path_decomposition,
                             pathwidth, primal_graph, treedepth, treewidth,
                             vertex_separation, VertexOrder)


class TestKnownValues:
    def test_paths(self):
        for n in range(2, 7):
            assert pathwidth(path_graph(n))[0] == 1
            assert treewidth(path_graph(n))[0] == 1

    def test_cycles(self):
        for n in range(3, 8):
            assert pathwidth(cycle_graph(n))[0] == 2
            assert treewidth(cycle_graph(n))[0] == 2

    def test_cliques(self):
        for n in range(2, 7):
            assert pathwidth(clique(n))[0] == n - 1
            assert treewidth(clique(n))[0] == n - 1
            assert treedepth(clique(n))[0] == n

    def test_trees(self):
        assert treewidth(claw())[0] == 1
        assert treedepth(path_graph(3))[0] == 2
        assert treedepth(path_graph(7))[0] == 3  # ceil(log2(n+1))

    def test_star_pathwidth(self):
        assert pathwidth(star(5))[0] == 1

    def test_empty_and_singleton(self):
        assert pathwidth(graph(0))[0] == -1
        assert treewidth(graph(0))[0] == -1
        assert pathwidth(graph(1))[0] == 0
        assert treedepth(graph(1))[0] == 1

    def test_disconnected(self):
        g = disjoint_union(clique(3), path_graph(4))
        assert pathwidth(g)[0] == 2
        assert treewidth(g)[0] == 2


class TestCertificates:
    def test_certificates_validate(self):
        for g in corpus.all_graphs_upto(5):
            pw, pd = pathwidth(g)
            assert check_path_decomposition(g, pd) and pd.width == pw
            tw, td_ = treewidth(g)
            assert check_tree_decomposition(g, td_) and td_.width == tw
            dd, ef = treedepth(g)
            assert check_elimination_forest(g, ef) and ef.height == dd

    def test_checkers_reject_bad_certificates(self):
        g = cycle_graph(4)
        # missing edge coverage
        bad = path_decomposition([{0, 1}, {1, 2}, {2, 3}])
        assert not check_path_decomposition(g, bad)
        # broken contiguity
        bad = path_decomposition([{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}])
        assert not check_path_decomposition(g, bad)

    def test_vertex_separation_formula(self):
        g = cycle_graph(5)
        o = VertexOrder(tuple(range(5)))
        assert vertex_separation(g, o) == 2

    def test_cap_enforced(self):
        with pytest.raises(InstanceTooLarge):
            pathwidth(path_graph(13))


class TestDualRoute:
    def test_min_vertex_separation_equals_pathwidth(self):
        # the enumeration and the subset DP are independent algorithms
        for g in corpus.all_graphs_upto(6):
            mvs, order = min_vertex_separation(g)
            pw, _ = pathwidth(g)
            assert mvs == pw
            if g.n:
                assert vertex_separation(g, order) == mvs

    def test_treewidth_at_most_pathwidth(self):
        for g in corpus.all_graphs_upto(6):
            assert treewidth(g)[0] <= pathwidth(g)[0]

    def test_treewidth_less_than_treedepth(self):
        for g in corpus.all_graphs(5):
            if g.n and g.edges:
                assert treewidth(g)[0] <= treedepth(g)[0] - 1


class TestSubdivisionLift:
    def test_lifted_decomposition_valid_and_tight(self):
        for g in corpus.all_graphs(5, connected=True):
            pw, d = pathwidth(g)
            for k in (1, 2, 3):
                lifted = lift_decomposition_subdivision(g, d, k)
                gk = subdivide(g, k)
                assert check_path_decomposition(gk, lifted)
                assert lifted.width <= pw + 2

    def test_subdivision_cannot_shrink_below_true_width(self):
        g = cycle_graph(4)
        _, d = pathwidth(g)
        lifted = lift_decomposition_subdivision(g, d, 1)
        assert lifted.width >= pathwidth(subdivide(g, 1))[0]


class TestPrimalAndPhi2Lift:
    def _sample_formula(self):
        return qbf(Prefix((("A", 0), ("E", 1), ("A", 2))),
                   [[(0, True), (1, False), (2, True)],
                    [(1, True), (2, False)]])

    def test_primal_graph_cliques(self):
        f = self._sample_formula()
        pg = primal_graph(f)
        assert pg.n == 3
        assert pg.has_edge(0, 1) and pg.has_edge(1, 2) and pg.has_edge(0, 2)

    def test_phi2_lift_valid_and_bounded(self):
        from homgames.reductions import reduce_qbf_to_qnae, reduce_qnae_to_qcsp

        for f in corpus.all_qbf_instances(3, 2, 3):
            if not f.clauses or not f.prefix.entries:
                continue
            pg = primal_graph(f)
            if not pg.edges:
                # with only single-literal clauses the stated bound degenerates
                # below the image's trivial triangle lower bound
                continue
            if any(len(c) > len({v for v, _ in c}) for c in f.clauses):
                # tautological clauses (x and not-x together) have more
                # literals than primal-clique vertices, breaking the bound's
                # clause-width-versus-bag-size inequality
                continue
            w, d = pathwidth(pg)
            lifted = lift_decomposition_phi2(f, d)
            img = reduce_qnae_to_qcsp(reduce_qbf_to_qnae(f).instance)
            assert check_path_decomposition(img.graph, lifted)
            assert lifted.width <= 9 * w + 2

    def test_phi2_bag_arithmetic(self):
        # a lifted variable bag has size 3|b| + 2 (three gadget vertices per
        # variable plus the two hub vertices); a clause's triangles add 6k-9
        # vertices for a width-k clause
        from homgames.reductions import reduce_qbf_to_qnae

        f = self._sample_formula()
        b = frozenset({0, 1, 2})
        assert 3 * len(b) + 2 == 11
        qr = reduce_qbf_to_qnae(f)
        k = 3  # first clause width
        assert len(qr.clause_triples[0]) == k - 1
        assert len(qr.clause_fresh_vars[0]) == k - 2
        # k-1 triangles of 3 vertices plus k-2 fresh variable paths of 3
        assert 3 * (k - 1) + 3 * (k - 2) == 6 * k - 9
