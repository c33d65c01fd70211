"""Serializer round-trips (property-tested over generated corpora) and
diagnostics for malformed input."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homgames import corpus
from homgames.edp import EdpInstance
from homgames.formats import (FormatError, from_json, parse_graph,
                              serialize_graph, to_json)
from homgames.graphs import cycle_graph, graph, path_graph, with_lists
from homgames.quantified import (EXISTS, FORALL, Prefix, QbfInstance,
                                 QnaeInstance, prefix)
from homgames.widths import (VertexOrder, pathwidth, treedepth, treewidth)


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    lists = None
    if n and draw(st.booleans()):
        lists = {v: draw(st.sampled_from([frozenset({1, 2}), frozenset({1, 3}),
                                          frozenset({1, 2, 3})]))
                 for v in range(n)}
    return graph(n, edges, lists)


class TestGraphFormat:
    @given(graphs())
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g

    def test_stable_bytes(self):
        g = with_lists(cycle_graph(3), {0: {1, 2}, 1: {1, 2, 3}, 2: {1, 3}})
        expected = "n 3\ne 0 1\ne 0 2\ne 1 2\nl 0 1,2\nl 1 1,2,3\nl 2 1,3\n"
        assert serialize_graph(g) == expected

    def test_comments_and_blank_lines_ignored(self):
        text = "# a triangle\n\nn 3\ne 0 1\ne 1 2\ne 0 2\n"
        assert parse_graph(text) == cycle_graph(3)

    def test_diagnostics_name_the_line(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_graph("n 2\ne 0 x\n")
        with pytest.raises(FormatError, match="missing n"):
            parse_graph("e 0 1\n")
        with pytest.raises(FormatError, match="unrecognised"):
            parse_graph("n 1\nz 0\n")
        with pytest.raises(FormatError, match="missing"):
            parse_graph("n 2\nl 0 1,2\n")


class TestJsonFormats:
    def test_formula_round_trips_over_corpus(self):
        for f in corpus.all_qbf_instances(2, 2, 2):
            assert from_json(to_json(f)) == f

    def test_qnae_round_trips(self):
        for i in corpus.all_positive_qnae_instances(2, 2):
            assert from_json(to_json(i)) == i
        i = QnaeInstance(prefix((EXISTS, 0)), (((0, True), "F", "F"),))
        assert from_json(to_json(i)) == i

    def test_qcsp_round_trips_randomised(self):
        rng = random.Random(3)
        for _ in range(100):
            i = corpus.random_qcsp(rng, rng.randint(1, 6))
            assert from_json(to_json(i)) == i

    def test_certificates_round_trip(self):
        for g in corpus.all_graphs(4):
            for measure in (pathwidth, treewidth, treedepth):
                _, cert = measure(g)
                assert from_json(to_json(cert)) == cert

    def test_order_and_edp_round_trip(self):
        vo = VertexOrder((3, 1, 0, 2))
        assert from_json(to_json(vo)) == vo
        i = EdpInstance(cycle_graph(4), ((0, 2), (1, 3)), 2)
        assert from_json(to_json(i)) == i

    def test_bad_json_diagnostics(self):
        with pytest.raises(FormatError, match="invalid JSON"):
            from_json("{nope")
        with pytest.raises(FormatError, match="type tag"):
            from_json('{"foo": 1}')
        with pytest.raises(FormatError, match="unknown type"):
            from_json('{"type": "widget"}')
        with pytest.raises(FormatError, match="malformed"):
            from_json('{"type": "qbf", "prefix": 3}')
