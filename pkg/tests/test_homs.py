"""Homomorphism engine: all four modes against the exhaustive-map oracle,
witness validation, and the decomposition-based solver."""

import pytest

from homgames import corpus
from homgames.graphs import (claw, clique, cycle_graph, disjoint_union, graph,
                             path_graph, subdivide, with_lists)
from homgames.homs import (LOCALLY_BIJECTIVE, LOCALLY_INJECTIVE,
                           LOCALLY_SURJECTIVE, MODES, PLAIN,
                           degree_bounded_check, hom_exists,
                           hom_exists_exhaustive, hom_exists_pw, validate_hom)
from homgames.widths import pathwidth


class TestKnownMaps:
    def test_odd_cycles(self):
        assert hom_exists(cycle_graph(5), cycle_graph(3)) is not None
        assert hom_exists(cycle_graph(5), cycle_graph(5)) is not None
        assert hom_exists(cycle_graph(3), cycle_graph(5)) is None
        # a longer odd cycle winds onto a shorter one
        assert hom_exists(cycle_graph(7), cycle_graph(5)) is not None

    def test_bipartite_targets(self):
        assert hom_exists(path_graph(5), clique(2)) is not None
        assert hom_exists(cycle_graph(5), clique(2)) is None

    def test_cover_of_triangle(self):
        # C6 is a 2-fold cover of C3
        assert hom_exists(cycle_graph(6), cycle_graph(3),
                          LOCALLY_BIJECTIVE) is not None
        assert hom_exists(cycle_graph(5), cycle_graph(3),
                          LOCALLY_BIJECTIVE) is None

    def test_locally_injective_into_bigger(self):
        assert hom_exists(path_graph(3), clique(3),
                          LOCALLY_INJECTIVE) is not None
        assert hom_exists(claw(), cycle_graph(3), LOCALLY_INJECTIVE) is None

    def test_locally_surjective_needs_degree(self):
        assert hom_exists(claw(), clique(2), LOCALLY_SURJECTIVE) is not None
        assert hom_exists(path_graph(2), clique(3), LOCALLY_SURJECTIVE) is None

    def test_empty_target_rejected(self):
        with pytest.raises(ValueError):
            hom_exists(path_graph(2), graph(0))


class TestOracleAgreement:
    TARGETS = [clique(2), cycle_graph(3), claw(), cycle_graph(4)]

    @pytest.mark.parametrize("mode", MODES)
    def test_all_modes_match_exhaustive(self, mode):
        for g in corpus.all_graphs_upto(4):
            for h in self.TARGETS:
                got = hom_exists(g, h, mode) is not None
                assert got == hom_exists_exhaustive(g, h, mode), (g, h, mode)

    def test_witnesses_validate(self):
        for g in corpus.all_graphs(4):
            for h in self.TARGETS:
                for mode in MODES:
                    w = hom_exists(g, h, mode)
                    if w is not None:
                        assert validate_hom(g, h, w.mapping, mode)

    def test_disconnected_sources(self):
        g = disjoint_union(cycle_graph(3), cycle_graph(5))
        assert hom_exists(g, cycle_graph(3)) is not None
        assert hom_exists(g, cycle_graph(5)) is None


class TestLists:
    def test_lists_restrict_triangle_images(self):
        g = with_lists(path_graph(2), {0: {1}, 1: {1}})
        assert hom_exists(g, cycle_graph(3)) is None
        g = with_lists(path_graph(2), {0: {1}, 1: {2}})
        w = hom_exists(g, cycle_graph(3))
        assert w is not None and w.mapping == (0, 1)

    def test_lists_ignored_for_non_triangle_targets(self):
        g = with_lists(path_graph(2), {0: {1}, 1: {1}})
        assert hom_exists(g, clique(4)) is not None


class TestSubdivisionInstances:
    def test_long_subdivisions_are_fast(self):
        # these are the instance shapes the arc-consistent search must handle
        assert hom_exists(subdivide(clique(3), 4), cycle_graph(15)) is not None
        assert hom_exists(subdivide(clique(4), 4), cycle_graph(15)) is None


class TestDegreeBoundedCheck:
    def test_admissibility(self):
        assert degree_bounded_check(claw(), clique(3), 3)
        assert degree_bounded_check(clique(5), path_graph(4), 3)
        assert not degree_bounded_check(clique(5), clique(5), 3)


class TestDecompositionSolver:
    def test_agrees_with_search(self):
        targets = [clique(2), cycle_graph(3), cycle_graph(5)]
        for g in corpus.all_graphs_upto(5):
            _, d = pathwidth(g)
            for h in targets:
                assert hom_exists_pw(g, h, d) == (hom_exists(g, h) is not None)

    def test_respects_lists(self):
        g = with_lists(path_graph(2), {0: {1}, 1: {1}})
        _, d = pathwidth(g)
        assert hom_exists_pw(g, cycle_graph(3), d) is False

    def test_rejects_foreign_decomposition(self):
        _, d = pathwidth(path_graph(3))
        with pytest.raises(ValueError):
            hom_exists_pw(cycle_graph(4), clique(3), d)
