import json
from itertools import product

import pytest

from edgeclosure.closure import is_integrally_closed
from edgeclosure.errors import GraphFormatError
from edgeclosure.graphs import (
    PatternKind,
    WeightedGraph,
    cycle_graph,
    edge_ideal,
    forbidden_pattern_scan,
    graph_from_jsonable,
    graph_to_jsonable,
    induced_subgraph,
    path_graph,
    pattern_witness,
    star_graph,
)
from edgeclosure.ideals import member, power
from edgeclosure.packing import fractional_packing


class TestEdgeIdeal:
    def test_weighted_path(self):
        ideal = edge_ideal(path_graph((2, 3)))
        assert set(ideal.generators) == {(2, 2, 0), (0, 3, 3)}

    def test_single_edge(self):
        ideal = edge_ideal(WeightedGraph(2, ((1, 2, 1),)))
        assert ideal.generators == ((1, 1),)

    def test_heavy_triangle(self):
        ideal = edge_ideal(cycle_graph((2, 2, 2)))
        assert set(ideal.generators) == {(2, 2, 0), (0, 2, 2), (2, 0, 2)}

    def test_edgeless_graph_gives_zero_ideal(self):
        assert edge_ideal(WeightedGraph(3, ())).is_zero

    def test_isolated_vertices_become_unused_variables(self):
        ideal = edge_ideal(WeightedGraph(4, ((2, 3, 5),)))
        assert ideal.generators == ((0, 5, 5, 0),)


class TestInducedSubgraph:
    def test_prefix_of_cycle(self):
        c6 = cycle_graph((2, 1, 2, 1, 2, 1))
        sub, labels = induced_subgraph(c6, {1, 2, 3})
        assert sub == path_graph((2, 1))
        assert labels == (1, 2, 3)

    def test_whole_vertex_set_is_identity(self):
        g = cycle_graph((2, 1, 3))
        sub, labels = induced_subgraph(g, range(1, 4))
        assert sub == g
        assert labels == (1, 2, 3)

    def test_triangle_to_single_edge(self):
        g = cycle_graph((2, 2, 1))
        sub, labels = induced_subgraph(g, (1, 2))
        assert sub == WeightedGraph(2, ((1, 2, 2),))
        assert labels == (1, 2)

    def test_relabeling_is_order_preserving(self):
        g = WeightedGraph(5, ((2, 4, 3),))
        sub, labels = induced_subgraph(g, (4, 2, 5))
        assert labels == (2, 4, 5)
        assert sub.edges == ((1, 2, 3),)

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(cycle_graph((1, 1, 1)), (1, 7))


class TestScan:
    def test_heavy_path(self):
        w = forbidden_pattern_scan(path_graph((2, 2)))
        assert w.kind is PatternKind.HEAVY_P3
        assert w.vertices == (1, 2, 3)
        assert w.weights == (2, 2)

    def test_alternating_heavy_hexagon_is_clean(self):
        assert forbidden_pattern_scan(cycle_graph((2, 1, 2, 1, 2, 1))) is None

    def test_triangle_with_one_trivial_edge_is_clean(self):
        g = cycle_graph((2, 2, 1))
        assert forbidden_pattern_scan(g) is None
        # cross-check with the closure engine
        assert is_integrally_closed(edge_ideal(g), 1).closed

    def test_heavy_disjoint_pair(self):
        g = WeightedGraph(4, ((1, 2, 2), (3, 4, 2)))
        w = forbidden_pattern_scan(g)
        assert w.kind is PatternKind.HEAVY_2K2
        assert w.vertices == (1, 2, 3, 4)

    def test_heavy_triangle(self):
        w = forbidden_pattern_scan(cycle_graph((2, 3, 4)))
        assert w.kind is PatternKind.HEAVY_TRIANGLE
        assert w.vertices == (1, 2, 3)
        assert w.weights == (2, 3, 4)

    def test_kind_priority_and_lex_tiebreak(self):
        # vertices 5-6 heavy-disjoint from 2-3; 1-2-3 forms a heavy path
        g = WeightedGraph(
            6, ((1, 2, 2), (2, 3, 2), (5, 6, 2), (3, 4, 1))
        )
        w = forbidden_pattern_scan(g)
        assert w.kind is PatternKind.HEAVY_P3
        assert w.vertices == (1, 2, 3)

    def test_lex_smallest_among_same_kind(self):
        g = WeightedGraph(5, ((1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 5, 2)))
        w = forbidden_pattern_scan(g)
        assert w.kind is PatternKind.HEAVY_P3
        assert w.vertices == (1, 2, 3)

    def test_at_most_one_heavy_edge_is_always_clean(self):
        # every pattern needs two heavy edges
        for n in range(2, 6):
            pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
            for heavy_at in range(len(pairs)):
                edges = tuple(
                    (u, v, 4 if i == heavy_at else 1)
                    for i, (u, v) in enumerate(pairs)
                )
                assert forbidden_pattern_scan(WeightedGraph(n, edges)) is None

    def test_kinds_filter_hook(self):
        g = cycle_graph((2, 2, 2))
        assert forbidden_pattern_scan(g) is not None
        assert (
            forbidden_pattern_scan(
                g, kinds=(PatternKind.HEAVY_P3, PatternKind.HEAVY_2K2)
            )
            is None
        )


class TestPatternWitness:
    def test_heavy_path_formula(self):
        graph, w = pattern_witness(PatternKind.HEAVY_P3, (2, 2))
        assert graph == path_graph((2, 2))
        assert w == (1, 4, 1)
        assert pattern_witness(PatternKind.HEAVY_P3, (2, 3))[1] == (1, 5, 2)

    def test_disjoint_pair_formula(self):
        graph, w = pattern_witness(PatternKind.HEAVY_2K2, (2, 2))
        assert graph == WeightedGraph(4, ((1, 2, 2), (3, 4, 2)))
        assert w == (1, 1, 1, 1)
        assert pattern_witness(PatternKind.HEAVY_2K2, (3, 3))[1] == (2, 2, 2, 2)

    def test_triangle_branches(self):
        _, w = pattern_witness(PatternKind.HEAVY_TRIANGLE, (2, 2, 2))
        assert w == (1, 1, 4)  # first branch: 2 > 2 - 1
        _, w = pattern_witness(PatternKind.HEAVY_TRIANGLE, (2, 3, 2))
        assert w == (4, 1, 1)  # second branch: 2 > 3 - 1 fails

    def test_trivial_weights_rejected(self):
        for kind, ws in (
            (PatternKind.HEAVY_P3, (1, 2)),
            (PatternKind.HEAVY_2K2, (2, 1)),
            (PatternKind.HEAVY_TRIANGLE, (2, 2, 1)),
        ):
            with pytest.raises(ValueError):
                pattern_witness(kind, ws)

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            pattern_witness(PatternKind.HEAVY_P3, (2, 2, 2))

    @pytest.mark.parametrize("kind", list(PatternKind))
    def test_witness_validity_sample(self, kind):
        arity = 3 if kind is PatternKind.HEAVY_TRIANGLE else 2
        for ws in product((2, 3, 4), repeat=arity):
            graph, w = pattern_witness(kind, ws)
            ideal = edge_ideal(graph)
            assert not member(ideal, w)
            assert fractional_packing(ideal, w).value >= 1
            doubled = tuple(2 * v for v in w)
            assert member(power(ideal, 2), doubled)


class TestGraphValidation:
    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError):
            WeightedGraph(3, ((1, 2, 1), (1, 2, 2)))

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            WeightedGraph(3, ((2, 2, 1),))

    def test_zero_weight_rejected(self):
        with pytest.raises(ValueError):
            WeightedGraph(3, ((1, 2, 0),))

    def test_edges_sorted_deterministically(self):
        g = WeightedGraph(3, ((2, 3, 1), (1, 2, 2)))
        assert g.edges == ((1, 2, 2), (2, 3, 1))


class TestJson:
    def test_round_trip(self):
        g = cycle_graph((2, 1, 3, 1, 4, 1))
        data = json.loads(json.dumps(graph_to_jsonable(g)))
        assert graph_from_jsonable(data) == g

    def test_reversed_edge_rejected_with_position(self):
        data = {"n": 3, "edges": [{"u": 1, "v": 2, "w": 1}, {"u": 3, "v": 2, "w": 1}]}
        with pytest.raises(GraphFormatError, match=r"edges\[1\].*reversed"):
            graph_from_jsonable(data)

    def test_duplicate_edge_rejected_with_both_positions(self):
        data = {
            "n": 3,
            "edges": [
                {"u": 1, "v": 2, "w": 1},
                {"u": 2, "v": 3, "w": 1},
                {"u": 1, "v": 2, "w": 3},
            ],
        }
        with pytest.raises(GraphFormatError, match=r"edges\[2\].*edges\[0\]"):
            graph_from_jsonable(data)

    def test_missing_field_rejected(self):
        with pytest.raises(GraphFormatError, match=r"edges\[0\].*'w'"):
            graph_from_jsonable({"n": 2, "edges": [{"u": 1, "v": 2}]})

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphFormatError, match=r"edges\[0\]"):
            graph_from_jsonable({"n": 2, "edges": [{"u": 1, "v": 5, "w": 1}]})

    def test_bad_top_level(self):
        with pytest.raises(GraphFormatError):
            graph_from_jsonable([1, 2, 3])
        with pytest.raises(GraphFormatError):
            graph_from_jsonable({"edges": []})


def test_star_constructor_centers_last_vertex():
    g = star_graph((2, 1, 1))
    assert g.n == 4
    assert g.edges == ((1, 4, 2), (2, 4, 1), (3, 4, 1))
