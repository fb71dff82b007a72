import pytest

from cpplanar.generators import fixture
from cpplanar.graph import (GeoGraph, GraphError, UnknownVertex,
                            check_coexistence, check_collinear_closure,
                            check_redundancy, components, crossing_pairs,
                            is_connected, is_plane, is_rcg, two_hop)
from oracles import crossing_pairs_oracle


def square_with_diagonals():
    return GeoGraph([(0, (0, 0)), (1, (4, 0)), (2, (4, 4)), (3, (0, 4))],
                    [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            GeoGraph([(0, (0, 0))], [(0, 0)])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(GraphError):
            GeoGraph([(0, (0, 0))], [(0, 1)])

    def test_rejects_duplicate_ids(self):
        with pytest.raises(GraphError):
            GeoGraph([(0, (0, 0)), (0, (1, 1))], [])

    def test_duplicate_positions_warn_but_load(self):
        g = GeoGraph([(0, (0, 0)), (1, (0, 0))], [])
        assert g.validate()


class TestRedundancy:
    @pytest.mark.parametrize("name", ["fig1a_1", "fig1a_2", "fig1a_3", "fig1a_4"])
    def test_redundancy_figures_hold(self, name):
        g = fixture(name)
        assert len(crossing_pairs(g)) == 1
        assert check_redundancy(g).holds

    def test_removing_a_redundancy_edge_is_witnessed(self):
        g = fixture("fig1a_1")
        stripped = GeoGraph([(v, tuple(g.pos(v))) for v in g.vertex_ids],
                            [e for e in g.edges if e != (0, 2)])  # drop uw
        rpt = check_redundancy(stripped)
        assert not rpt.holds
        assert rpt.violations == [(0, 1, 2, 3)]

    def test_empty_graph_vacuous(self):
        assert check_redundancy(GeoGraph([], [])).holds


class TestCoexistence:
    def test_coexistence_figure_holds(self):
        assert check_coexistence(fixture("fig1b")).holds

    def test_missing_one_interior_edge_fails_strong_holds_weak(self):
        g = fixture("fig1b")
        stripped = GeoGraph([(v, tuple(g.pos(v))) for v in g.vertex_ids],
                            [e for e in g.edges if e != (0, 3)])  # drop ux
        assert not check_coexistence(stripped).holds
        assert check_coexistence(stripped, weak=True).holds
        witness = check_coexistence(stripped).violations[0]
        assert witness[3] == 3  # the interior vertex

    def test_triangle_without_interior_vertex_vacuous(self):
        g = GeoGraph([(0, (0, 0)), (1, (4, 0)), (2, (2, 3))],
                     [(0, 1), (1, 2), (2, 0)])
        assert check_coexistence(g).holds


class TestIsRcg:
    def test_fig3_is_rcg(self):
        assert is_rcg(fixture("fig3"))

    def test_fig8_weak_only(self):
        g = fixture("fig8_counterexample")
        assert not is_rcg(g)
        assert check_redundancy(g).holds
        assert check_coexistence(g, weak=True).holds

    def test_single_edge(self):
        assert is_rcg(GeoGraph([(0, (0, 0)), (1, (1, 0))], [(0, 1)]))


class TestCrossingPairs:
    def test_fig1a_crossing(self):
        assert crossing_pairs(fixture("fig1a_1")) == [((0, 1), (2, 3))]

    def test_plane_path(self):
        g = GeoGraph([(0, (0, 0)), (1, (2, 1)), (2, (4, 0))], [(0, 1), (1, 2)])
        assert crossing_pairs(g) == [] and is_plane(g)

    def test_square_diagonals(self):
        assert crossing_pairs(square_with_diagonals()) == [((0, 2), (1, 3))]

    def test_against_oracle_on_fixtures(self):
        for name in ("fig2", "fig3", "fig8_counterexample", "cycle4"):
            g = fixture(name)
            assert crossing_pairs(g) == crossing_pairs_oracle(g)


class TestComponents:
    def test_edgeless(self):
        g = GeoGraph([(0, (0, 0)), (1, (1, 0)), (2, (2, 0))], [])
        assert components(g) == [[0], [1], [2]]

    def test_two_triangles(self):
        g = GeoGraph([(i, (i, i * i)) for i in range(6)],
                     [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert components(g) == [[0, 1, 2], [3, 4, 5]]
        assert not is_connected(g)

    def test_fixture_connected(self):
        assert is_connected(fixture("fig3"))


class TestTwoHop:
    def test_path(self):
        g = GeoGraph([(0, (0, 0)), (1, (1, 0)), (2, (2, 0)), (3, (3, 0))],
                     [(0, 1), (1, 2), (2, 3)])
        assert two_hop(g, 0) == {1, 2}

    def test_star_center_sees_leaves(self):
        g = GeoGraph([(0, (0, 0)), (1, (1, 0)), (2, (0, 1)), (3, (-1, 0))],
                     [(0, 1), (0, 2), (0, 3)])
        assert two_hop(g, 0) == {1, 2, 3}
        assert two_hop(g, 1) == {0, 2, 3}

    def test_fig2_every_vertex_visible(self):
        g = fixture("fig2")
        for u in g.vertex_ids:
            assert two_hop(g, u) == set(g.vertex_ids) - {u}

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            two_hop(fixture("fig2"), 99)


class TestCollinearClosure:
    def test_closed_collinear_triple(self):
        g = GeoGraph([(0, (0, 0)), (1, (2, 0)), (2, (4, 0))],
                     [(0, 2), (0, 1), (1, 2)])
        assert check_collinear_closure(g).holds

    def test_open_collinear_triple_witnessed(self):
        # the in-between vertex carries an edge, so the graph also fails
        # redundancy (its edge's endpoint sits on the long edge)
        g = GeoGraph([(0, (0, 0)), (1, (4, 0)), (2, (2, 0)), (3, (2, 2))],
                     [(0, 1), (2, 3)])
        rpt = check_collinear_closure(g)
        assert not rpt.holds and rpt.violations == [(0, 1, 2)]
        assert not is_rcg(g)

    def test_no_collinear_triples_vacuous(self):
        assert check_collinear_closure(fixture("fig1b")).holds

    def test_holds_on_sampled_rcgs(self):
        from cpplanar.generators import sample_rcg
        found = 0
        for seed in range(30):
            g = sample_rcg(8, 500, 700, seed, max_attempts=30)
            if g is None:
                continue
            found += 1
            assert check_collinear_closure(g).holds
        assert found >= 3
