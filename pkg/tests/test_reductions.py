"""Reduction constructions: structural postconditions per image plus
instance-level equivalence on small corpora (the full exhaustive sweeps run
in the acceptance suite)."""

import pytest

from homgames import corpus
from homgames.graphs import (clique, cycle_graph, graph, is_subcubic,
                             max_degree, path_graph, star, subdivide)
from homgames.homs import (LOCALLY_BIJECTIVE, PLAIN, hom_exists,
                           hom_exists_exhaustive)
from homgames.quantified import (EXISTS, FORALL, Prefix, QnaeInstance,
                                 alternation_blocks, prefix, qbf, qbf_eval,
                                 qcsp_eval, qnae_eval)
from homgames.reductions import (L12, L13, c5_chain_reduce,
                                 local_hom_subdivision_pair,
                                 odd_path_gadget_check,
                                 reduce_3col_by_subdivision,
                                 reduce_edp_to_long_edp,
                                 reduce_pik_qnae_to_list_qcsp,
                                 reduce_qbf_to_qnae, reduce_qnae_to_qcsp,
                                 verify_reduction)


class TestQbfToQnae:
    def test_wide_clause_chain_counts(self):
        f = qbf(prefix((EXISTS, 0), (EXISTS, 1), (EXISTS, 2), (EXISTS, 3)),
                [[(0, True), (1, True), (2, True), (3, True)]])
        r = reduce_qbf_to_qnae(f)
        assert len(r.clause_triples[0]) == 3  # k-1
        assert len(r.clause_fresh_vars[0]) == 2  # k-2

    def test_fresh_variables_are_existential(self):
        f = qbf(prefix((FORALL, 0), (FORALL, 1), (FORALL, 2)),
                [[(0, True), (1, True), (2, True)]])
        r = reduce_qbf_to_qnae(f)
        quant = dict((v, q) for q, v in r.instance.prefix.entries)
        for fresh in r.clause_fresh_vars[0]:
            assert quant[fresh] == EXISTS

    def test_equivalence_small(self):
        for f in corpus.all_qbf_instances(2, 2, 2):
            assert qbf_eval(f) == qnae_eval(reduce_qbf_to_qnae(f).instance)


class TestQnaeToQcsp:
    def _image(self, f):
        return reduce_qnae_to_qcsp(reduce_qbf_to_qnae(f).instance)

    def test_vertex_count(self):
        f = qbf(prefix((FORALL, 0), (EXISTS, 1)),
                [[(0, True), (1, False)], [(0, False), (1, True)]])
        img = self._image(f)
        q = reduce_qbf_to_qnae(f).instance
        n, m = len(q.prefix), len(q.triples)
        assert img.graph.n == 2 + 3 * n + 3 * m

    def test_block_structure_preserved(self):
        f = qbf(prefix((FORALL, 0), (FORALL, 1), (EXISTS, 2)),
                [[(0, True), (1, True), (2, True)]])
        img = self._image(f)
        blocks = [q for q, _ in alternation_blocks(img.instance.prefix)]
        # leading hub existentials, then the source pattern, then a tail
        assert blocks == [EXISTS, FORALL, EXISTS]

    def test_equivalence_small(self):
        for f in corpus.all_qbf_instances(2, 2, 2):
            assert qbf_eval(f) == qcsp_eval(self._image(f).instance)

    def test_deferral_counterexample_stays_false(self):
        # an existential before a universal must commit its value at its own
        # position; this instance is the regression witness for that
        f = qbf(prefix((EXISTS, 0), (FORALL, 1)),
                [[(0, True), (1, True)], [(0, False), (1, False)]])
        assert not qbf_eval(f)
        assert not qcsp_eval(self._image(f).instance)


class TestThreeColouringSubdivision:
    def test_shape(self):
        src, tgt = reduce_3col_by_subdivision(clique(3), 1)
        assert tgt == cycle_graph(15)
        assert src.n == 3 + 4 * 3  # 5^1 - 1 inner vertices per edge

    def test_augments_when_needed(self):
        src, _ = reduce_3col_by_subdivision(path_graph(2), 1)
        # P2 lacks a triangle; augmentation adds one before subdividing
        assert src.n == 3 + 4 * 3

    def test_agreement_examples(self):
        for g in (clique(3), clique(4), cycle_graph(5), clique(6)):
            src, tgt = reduce_3col_by_subdivision(g, 1)
            a = hom_exists(g, clique(3)) is not None
            b = hom_exists(src, tgt) is not None
            assert a == b

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            reduce_3col_by_subdivision(graph(2), 1)


class TestC5Chain:
    def test_output_subcubic(self):
        for g in corpus.all_graphs(4):
            assert is_subcubic(c5_chain_reduce(g))

    def test_agreement_examples(self):
        for g in (clique(3), clique(4), cycle_graph(5), star(4)):
            a = hom_exists(g, cycle_graph(5)) is not None
            b = hom_exists(c5_chain_reduce(g), cycle_graph(5)) is not None
            assert a == b


class TestLocalSubdivision:
    def test_pair_shape(self):
        src, tgt = local_hom_subdivision_pair(cycle_graph(3), 2)
        assert src == subdivide(cycle_graph(3), 2)
        assert tgt == subdivide(clique(4), 2)

    def test_rejects_high_degree(self):
        with pytest.raises(ValueError):
            local_hom_subdivision_pair(star(4), 1)

    def test_agreement_example(self):
        g = clique(4)
        src, tgt = local_hom_subdivision_pair(g, 1)
        a = hom_exists(g, clique(4), LOCALLY_BIJECTIVE) is not None
        b = hom_exists(src, tgt, LOCALLY_BIJECTIVE) is not None
        assert a == b


class TestOddPathGadget:
    @pytest.mark.parametrize("p", [0, 1, 2, 3])
    def test_inner_12(self, p):
        pairs = odd_path_gadget_check(p, L12)
        # endpoints in {1,2} cannot share a colour; 3 is unconstrained
        for a in (1, 2):
            assert (a, a) not in pairs
        assert (1, 2) in pairs and (2, 1) in pairs
        assert all((3, b) in pairs for b in (1, 2))

    @pytest.mark.parametrize("p", [0, 1, 2, 3])
    def test_inner_13(self, p):
        pairs = odd_path_gadget_check(p, L13)
        for a in (1, 3):
            assert (a, a) not in pairs
        assert (1, 3) in pairs and (3, 1) in pairs
        assert all((2, b) in pairs for b in (1, 3))


class TestPikGadget:
    def _sample(self):
        return QnaeInstance(prefix((FORALL, 0), (EXISTS, 1)),
                            (((0, True), (1, True), (1, True)),))

    def test_image_subcubic_with_valid_lists(self):
        img = reduce_pik_qnae_to_list_qcsp(self._sample(), 1)
        assert is_subcubic(img.graph)
        for v in range(img.graph.n):
            assert img.graph.vertex_list(v) in (L12, L13, frozenset({1, 2, 3}))

    def test_block_structure_preserved(self):
        i = QnaeInstance(prefix((FORALL, 0), (FORALL, 1), (EXISTS, 2)),
                         (((0, True), (1, True), (2, True)),))
        img = reduce_pik_qnae_to_list_qcsp(i, 1)
        blocks = [q for q, _ in alternation_blocks(img.instance.prefix)]
        assert blocks == [FORALL, EXISTS]

    def test_copy_splitting_bounds_degree(self):
        i = QnaeInstance(prefix((EXISTS, 0), (EXISTS, 1)),
                         (((0, True), (0, True), (1, True)),
                          ((0, True), (1, True), (1, True)),
                          ((0, True), (1, True), (1, True))))
        img = reduce_pik_qnae_to_list_qcsp(i, 1)
        assert max_degree(img.graph) <= 3

    def test_equivalence_small(self):
        for i in corpus.all_positive_qnae_instances(2, 1):
            img = reduce_pik_qnae_to_list_qcsp(i, 1)
            assert qcsp_eval(img.instance, cap=120) == qnae_eval(i)

    def test_rejects_negative_literals_and_p0(self):
        bad = QnaeInstance(prefix((EXISTS, 0)),
                           (((0, False), (0, True), (0, True)),))
        with pytest.raises(ValueError):
            reduce_pik_qnae_to_list_qcsp(bad, 1)
        with pytest.raises(ValueError):
            reduce_pik_qnae_to_list_qcsp(self._sample(), 0)


class TestVerifySuites:
    def test_reports_well_formed(self):
        r = verify_reduction("3col-subdivision", max_n=4)
        assert r.agrees and r.equivalence_checked
        assert r.size_stats["instances"] > 0

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            verify_reduction("nope")

    def test_edp_suite_small(self):
        r = verify_reduction("edp-to-long-edp", max_n=4, max_pairs=2)
        assert r.agrees


class TestEdpReduction:
    def test_shape(self):
        from homgames.edp import EdpInstance

        i = EdpInstance(cycle_graph(4), ((0, 2), (1, 3)))
        long_i = reduce_edp_to_long_edp(i)
        assert long_i.min_length == 2
        assert long_i.graph.n == 4 + 2 * 4
        assert long_i.pairs == i.pairs
