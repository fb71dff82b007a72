import itertools

import pytest

from cpplanar.generators import FIXTURE_LABELS, fixture, sample_rcg
from cpplanar.graph import GeoGraph, components, is_connected, is_plane
from cpplanar.planarize import (BadPartition, CpTrace, InvalidOrder,
                                UnknownEdge, cp_condition, cp_global,
                                deleting, kept_subgraph, lex_order,
                                seeded_order, verify_kept_contract,
                                verify_lemma1, verify_lemma2,
                                verify_theorem1)

FIG3A_KEPT = frozenset({(0, 1), (0, 2), (1, 2), (1, 4), (0, 3), (3, 4)})
FIG3B_KEPT = frozenset({(2, 3), (0, 2), (1, 2), (2, 4), (1, 4), (0, 3), (3, 4)})


class TestCpGlobal:
    def test_fig3_lex_order_keeps_the_first_drawing(self):
        # lexicographic order processes the long horizontal edge first
        trace = cp_global(fixture("fig3"))
        assert trace.kept == FIG3A_KEPT
        assert trace.removed_from_w[(2, 3)] == ("kept-crossing", (0, 1))
        assert trace.removed_from_w[(2, 4)] == ("kept-crossing", (0, 1))

    def test_fig3_crossing_first_order_keeps_the_second_drawing(self):
        g = fixture("fig3")
        order = [(2, 3)] + [e for e in g.edges if e != (2, 3)]
        trace = cp_global(g, order)
        assert trace.kept == FIG3B_KEPT

    def test_single_edge_graph(self):
        g = GeoGraph([(0, (0, 0)), (1, (3, 1))], [(0, 1)])
        assert cp_global(g).kept == {(0, 1)}

    def test_empty_graph(self):
        assert cp_global(GeoGraph([], [])).kept == frozenset()

    def test_invalid_order_rejected(self):
        g = fixture("fig3")
        with pytest.raises(InvalidOrder):
            cp_global(g, g.edges[:-1])
        with pytest.raises(InvalidOrder):
            cp_global(g, g.edges + [g.edges[0]])

    def test_deterministic_trace(self):
        g = fixture("fig8_counterexample")
        t1 = cp_global(g, seeded_order(g, 11))
        t2 = cp_global(g, seeded_order(g, 11))
        assert t1.to_text() == t2.to_text()

    def test_every_edge_processed_or_removed(self):
        g = fixture("fig2")
        trace = cp_global(g)
        processed = set(trace.order) | set(trace.removed_from_w)
        assert processed == set(g.edges)

    def test_termination_on_dense_graph(self):
        g = sample_rcg(12, 600, 800, seed=4, max_attempts=50)
        assert g is not None
        trace = cp_global(g)
        assert trace.kept <= frozenset(g.edges)


class TestCpCondition:
    def test_fig2_long_edge_fails(self):
        g = fixture("fig2")
        ok, bad = cp_condition(g, (0, 1))
        assert not ok and set(bad) == {(2, 3), (2, 4)}

    def test_fig2_all_other_edges_pass(self):
        g = fixture("fig2")
        for e in g.edges:
            if e != (0, 1):
                assert cp_condition(g, e) == (True, [])

    def test_vacuous_for_uncrossed_edge(self):
        g = fixture("fig1b")
        assert cp_condition(g, (0, 1)) == (True, [])

    def test_unknown_edge(self):
        with pytest.raises(UnknownEdge):
            cp_condition(fixture("fig2"), (0, 99))


class TestDeleting:
    def test_fig3b_final_state(self):
        g = fixture("fig3")
        # u=0 v=1 w=2 x=3: the kept crossing edge deletes the dropped one
        assert deleting(g, FIG3B_KEPT, 0, 1, 2, 3)
        assert not deleting(g, FIG3B_KEPT, 2, 3, 0, 1)

    def test_non_intersecting_pair(self):
        g = fixture("fig3")
        assert not deleting(g, FIG3B_KEPT, 0, 2, 1, 4)

    def test_orientation_requires_redundancy_pair(self):
        g = fixture("fig9_cycle3")
        lab = FIXTURE_LABELS["fig9_cycle3"]
        assert deleting(g, frozenset(), lab["u1"], lab["y"], lab["u2"], lab["v2"])
        assert not deleting(g, frozenset(), lab["u1"], lab["y"], lab["v2"], lab["u2"])

    def test_consistency_with_traces_on_small_graphs(self):
        # the 4-ary relation on final states respects its defining clauses,
        # exhaustively over all vertex 4-tuples
        for name in ("fig2", "fig3", "fig8_counterexample"):
            g = fixture(name)
            trace = cp_global(g)
            kept = trace.kept
            for u, v, w, x in itertools.product(g.vertex_ids, repeat=4):
                if not deleting(g, kept, u, v, w, x):
                    continue
                assert g.has_edge(u, v) and g.has_edge(w, x)
                assert g.has_edge(u, w) and g.has_edge(v, w)
                assert g.segments_cross((u, v), (w, x))
                assert (u, v) not in kept and (v, u) not in kept
                if g.has_edge(u, x) or g.has_edge(v, x):
                    assert tuple(sorted((w, x))) in kept


class TestLemma1:
    def test_fig3_both_orders(self):
        g = fixture("fig3")
        assert verify_lemma1(g, cp_global(g)).holds
        order = [(2, 3)] + [e for e in g.edges if e != (2, 3)]
        assert verify_lemma1(g, cp_global(g, order)).holds

    def test_fig8_isolating_run_still_covered(self):
        # every removal in this graph is caused by a kept crossing edge, so
        # the coverage property survives even the isolating run
        g = fixture("fig8_counterexample")
        trace = cp_global(g, seeded_order(g, 6))
        sub = kept_subgraph(g, trace)
        assert not sub.neighbors(0)  # the central vertex lost all edges
        assert verify_lemma1(g, trace).holds

    def test_violation_without_redundancy(self):
        # a bare crossing with no redundancy edges: both edges fail the keep
        # condition, nothing is kept, so neither dropped edge is covered
        g = GeoGraph([(0, (0, 0)), (1, (4, 0)), (2, (2, 2)), (3, (2, -2))],
                     [(0, 1), (2, 3)])
        trace = cp_global(g)
        assert trace.kept == frozenset()
        rpt = verify_lemma1(g, trace)
        assert not rpt.holds and set(rpt.violations) == {(0, 1), (2, 3)}


class TestLemma2:
    def fig6a(self):
        verts = [(0, (-300, 0)), (1, (300, 0)), (2, (-98, 296)),
                 (3, (-54, 98)), (4, (24, 136)), (5, (0, 300)),
                 (6, (20, 24)), (7, (-152, -66))]
        edges = [(0, 1), (2, 3), (3, 5), (3, 4), (4, 6), (0, 2),
                 (1, 2), (1, 3), (1, 4), (2, 7)]
        return GeoGraph(verts, edges)

    def test_reference_configuration_witness(self):
        g = self.fig6a()
        trace = CpTrace(kept=frozenset({(3, 5), (4, 6), (2, 7)}))
        part = {0, 2, 3, 4, 5, 6, 7}
        assert verify_lemma2(g, trace, part) == (4, 1)

    def test_bad_partition_whole_vertex_set(self):
        g = self.fig6a()
        trace = CpTrace(kept=frozenset())
        with pytest.raises(BadPartition):
            verify_lemma2(g, trace, set(g.vertex_ids))

    def test_bad_partition_splitting_a_component(self):
        g = self.fig6a()
        trace = CpTrace(kept=frozenset({(3, 5)}))
        with pytest.raises(BadPartition):
            verify_lemma2(g, trace, {3})  # its kept component also has 5

    def test_witness_on_random_runs_with_split_components(self):
        found = 0
        for seed in range(40):
            g = sample_rcg(10, 420, 800, seed=seed, max_attempts=20)
            if g is None:
                continue
            trace = cp_global(g)
            comps = components(kept_subgraph(g, trace))
            if len(comps) < 2:
                continue  # valid runs stay connected; need synthetic splits
            found += 1
        # connected inputs stay connected, so genuine splits never appear;
        # build one artificially instead
        g = self.fig6a()
        trace = CpTrace(kept=frozenset({(3, 5), (4, 6), (2, 7)}))
        for comp in components(kept_subgraph(g, trace)):
            part = set(comp)
            if part == set(g.vertex_ids) or 1 in part:
                continue
            witness = verify_lemma2(g, trace, part)
            assert witness is None or witness[0] in part


class TestTheorem1:
    def test_fig3_runs(self):
        g = fixture("fig3")
        for order in (None, [(2, 3)] + [e for e in g.edges if e != (2, 3)]):
            trace = cp_global(g, order)
            assert verify_theorem1(g, trace).holds
            assert is_plane(kept_subgraph(g, trace))
            assert is_connected(kept_subgraph(g, trace))

    def test_fig8_isolating_run_plane_but_disconnected(self):
        g = fixture("fig8_counterexample")
        trace = cp_global(g, seeded_order(g, 6))
        rpt = verify_theorem1(g, trace)
        sub = kept_subgraph(g, trace)
        assert is_plane(sub)
        assert not is_connected(sub)
        # not an RCG, so the connectivity conjunct is out of scope
        assert rpt.holds

    def test_kept_contract_on_fixture_runs(self):
        for name in ("fig2", "fig3", "fig8_counterexample", "cycle4"):
            g = fixture(name)
            trace = cp_global(g)
            assert verify_kept_contract(g, trace).holds


def test_seeded_order_is_a_permutation():
    g = fixture("fig8_counterexample")
    order = seeded_order(g, 123)
    assert sorted(order) == g.edges
    assert seeded_order(g, 123) == order
    assert seeded_order(g, 124) != order


def test_lex_order_matches_edge_listing():
    g = fixture("fig3")
    assert lex_order(g) == g.edges
