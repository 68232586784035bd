import random

import pytest

import helpers
from capforest import (
    CapacityMap,
    Certificate,
    ColoredGraph,
    Forest,
    Found,
    Impossible,
    InternalSolverError,
    OracleLimitError,
    PeelState,
    PreconditionError,
    crossing_edges,
    evaluate_condition,
    extract_certificate,
    maximize_forest,
    oracle_condition,
    oracle_forest_search,
    solve,
)
from capforest.sweeps import oracle_agreement_holds, sample_solver_instance


def path_aa():
    return ColoredGraph(3, [(0, 1, "a"), (1, 2, "a")])


def triangle():
    return ColoredGraph(3, [(0, 1, "a"), (1, 2, "b"), (2, 0, "c")])


def square_aabb():
    return ColoredGraph(4, [(0, 1, "a"), (1, 2, "a"), (2, 3, "b"), (3, 0, "b")])


class TestCrossingEdges:
    def test_spanning_tree_has_none(self):
        g = triangle()
        assert crossing_edges(g, Forest(g, (0, 1))) == []

    def test_empty_forest_crosses_everything(self):
        g = triangle()
        assert crossing_edges(g, Forest.empty(g)) == [0, 1, 2]

    def test_partial_forest(self):
        g = path_aa()
        assert crossing_edges(g, Forest(g, (0,))) == [1]

    def test_host_mismatch(self):
        with pytest.raises(PreconditionError):
            crossing_edges(triangle(), Forest.empty(path_aa()))


class TestExtractCertificate:
    def test_two_step_peel_on_one_color_path(self):
        g = path_aa()
        caps = CapacityMap({"a": 1})
        cert = extract_certificate(g, caps, 1, maximize_forest(g, caps))
        assert cert.violating == {"a"}
        assert cert.omega_measured == 3 and cert.bound == 2

    def test_square_peels_both_colors(self):
        g = square_aabb()
        caps = CapacityMap.uniform(1)
        cert = extract_certificate(g, caps, 1, maximize_forest(g, caps))
        assert cert.violating == {"a", "b"}
        assert cert.omega_measured == 4 and cert.bound == 3
        # brute force: {a, b} is the only violating subset on this instance
        violators = [
            set(subset)
            for subset in helpers.all_color_subsets(g.palette)
            if helpers.components_without_colors(g, subset)
            > 1 + sum(caps.cap(c) for c in subset)
        ]
        assert violators == [{"a", "b"}]

    def test_disconnected_graph_yields_empty_color_set(self):
        g = ColoredGraph(3, [(0, 1, "a")])
        caps = CapacityMap({"a": 1})
        cert = extract_certificate(g, caps, 1, maximize_forest(g, caps))
        assert cert.violating == frozenset()
        assert cert.omega_measured == 2 and cert.bound == 1

    def test_rejects_non_maximum_forest(self):
        g = square_aabb()
        caps = CapacityMap({"a": 1, "b": 1})
        with pytest.raises(PreconditionError):
            extract_certificate(g, caps, 1, Forest.empty(g))

    def test_rejects_forest_that_already_reaches_target(self):
        g = triangle()
        caps = CapacityMap.uniform(1)
        with pytest.raises(PreconditionError):
            extract_certificate(g, caps, 1, maximize_forest(g, caps))


class TestPeelState:
    def test_invariants_accept_consistent_state(self):
        g = path_aa()
        forest = Forest(g, (0,))
        PeelState(forest, frozenset(), frozenset({"a"})).verify()

    def test_overlap_rejected(self):
        g = path_aa()
        state = PeelState(Forest(g, (0,)), frozenset({"a"}), frozenset({"a"}))
        with pytest.raises(InternalSolverError):
            state.verify()

    def test_forbidden_color_in_forest_rejected(self):
        g = path_aa()
        state = PeelState(Forest(g, (0,)), frozenset({"a"}), frozenset())
        with pytest.raises(InternalSolverError):
            state.verify()


class TestCertificate:
    def test_non_violating_pair_rejected(self):
        with pytest.raises(InternalSolverError):
            Certificate(frozenset({"a"}), 2, 2)

    def test_sorted_colors(self):
        cert = Certificate(frozenset({"b", "a"}), 5, 1)
        assert cert.sorted_colors() == ["a", "b"]


class TestOracleCondition:
    def test_triangle_holds_everywhere(self):
        assert oracle_condition(triangle(), CapacityMap.uniform(1), 1) is None

    def test_one_color_path_violates(self):
        cert = oracle_condition(path_aa(), CapacityMap({"a": 1}), 1)
        assert cert is not None and cert.violating == {"a"}

    def test_disconnected_graph_violates_with_empty_set(self):
        g = ColoredGraph(3, [(0, 1, "a")])
        cert = oracle_condition(g, CapacityMap({"a": 1}), 1)
        assert cert is not None and cert.violating == frozenset()

    def test_returns_lexicographically_first_violator(self):
        # two single-color paths, each too long for its budget; "a" < "b"
        g = ColoredGraph(
            6,
            [(0, 1, "b"), (1, 2, "b"), (3, 4, "a"), (4, 5, "a")],
        )
        caps = CapacityMap({"a": 0, "b": 0})
        cert = oracle_condition(g, caps, 2)
        assert cert is not None and cert.violating == {"a"}

    def test_palette_limit(self):
        g = ColoredGraph(2, [(0, 1, "a")], palette=frozenset(f"x{i}" for i in range(20)))
        with pytest.raises(OracleLimitError):
            oracle_condition(g, CapacityMap.uniform(1), 1)


class TestOracleForestSearch:
    def test_triangle_finds_tree(self):
        forest = oracle_forest_search(triangle(), CapacityMap.uniform(1), 1)
        assert forest is not None and forest.size == 2

    def test_one_color_path_finds_nothing(self):
        assert oracle_forest_search(path_aa(), CapacityMap({"a": 1}), 1) is None

    def test_square_uneven_budgets(self):
        g = square_aabb()
        forest = oracle_forest_search(g, CapacityMap({"a": 1, "b": 2}), 1)
        assert forest is not None
        # first qualifying tree in index order: edges 0, 2, 3 (one a, two b)
        assert forest.members == (0, 2, 3)
        assert forest.color_counts() == {"a": 1, "b": 2}

    def test_edge_limit(self):
        g = ColoredGraph(8, [(u, v, "a") for u in range(8) for v in range(u + 1, 8)])
        with pytest.raises(OracleLimitError):
            oracle_forest_search(g, CapacityMap.uniform(9), 1)


class TestEvaluateCondition:
    def test_matches_independent_count(self):
        g = square_aabb()
        caps = CapacityMap.uniform(1)
        for subset in helpers.all_color_subsets(g.palette):
            remaining, budget = evaluate_condition(g, caps, 1, subset)
            assert remaining == helpers.components_without_colors(g, subset)
            assert budget == 1 + sum(caps.cap(c) for c in subset)


class TestAgreementSweep:
    def test_three_routes_agree_on_random_instances(self):
        for index in range(120):
            rng = random.Random(f"agree:{index}")
            g, caps = sample_solver_instance(rng)
            for m in range(1, g.n + 1):
                assert oracle_agreement_holds(g, caps, m), f"agree:{index} m={m}"

    def test_every_certificate_reverified_independently(self):
        seen = 0
        for index in range(120):
            rng = random.Random(f"certs:{index}")
            g, caps = sample_solver_instance(rng)
            for m in range(1, g.n + 1):
                verdict = solve(g, caps, m)
                if isinstance(verdict, Impossible):
                    seen += 1
                    cert = verdict.certificate
                    remaining = helpers.components_without_colors(g, cert.violating)
                    budget = m + sum(caps.cap(c) for c in cert.violating)
                    assert remaining == cert.omega_measured
                    assert budget == cert.bound
                    assert remaining >= budget + 1
        assert seen > 50

    def test_found_forests_never_contradict_the_inequality(self):
        # when a forest exists, every color set must satisfy the bound
        for index in range(40):
            rng = random.Random(f"necessity:{index}")
            g, caps = sample_solver_instance(rng)
            for m in range(1, g.n + 1):
                if not isinstance(solve(g, caps, m), Found):
                    continue
                for _ in range(100):
                    subset = {
                        c for c in g.palette if rng.random() < 0.5
                    }
                    remaining, budget = evaluate_condition(g, caps, m, subset)
                    assert remaining <= budget, f"necessity:{index} m={m}"
