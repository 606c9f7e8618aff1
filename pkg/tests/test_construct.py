import pytest

from conftest import complete_graph, cycle_graph, dumbbell, paths_union, short_dumbbell
from orient2._basecase_table import TABLE
from orient2.construct import (
    BaseCaseStep,
    PadStep,
    ReduceStep,
    TripleStep,
    _contract_reduction,
    base_case_orient,
    expand_reduction,
    normalize_to_threshold,
    orient_diameter_two,
    replay_trace,
    threshold_size,
)
from orient2.graphs import Graph, Orientation, complement, diameter
from orient2.structure import find_reduction


def disjoint_union(*parts: Graph) -> Graph:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((offset + u, offset + v) for u, v in part.edges())
        offset += part.n
    return Graph.from_edges(offset, edges)


def singletons(k: int) -> list[Graph]:
    return [Graph.from_edges(1, [])] * k


class TestNormalize:
    def test_identity_at_threshold(self):
        g = complete_graph(5)
        assert g.m == threshold_size(5)
        trimmed, deleted = normalize_to_threshold(g)
        assert trimmed == g and deleted == ()

    def test_k6_deletes_first_edge(self):
        trimmed, deleted = normalize_to_threshold(complete_graph(6))
        assert deleted == ((0, 1),)
        assert trimmed.m == threshold_size(6)

    def test_k8_deletes_three(self):
        _, deleted = normalize_to_threshold(complete_graph(8))
        assert deleted == ((0, 1), (0, 2), (0, 3))

    def test_below_threshold_rejected(self):
        g = complete_graph(6).without_edge(0, 1).without_edge(0, 2)
        with pytest.raises(ValueError):
            normalize_to_threshold(g)


class TestBaseCases:
    def test_table_keys_present(self):
        assert set(TABLE) == {(5, 0, 0, 0), (4, 1, 0, 0), (3, 2, 0, 0), (4, 0, 1, 0), (4, 0, 0, 1)}

    @pytest.mark.parametrize(
        "sizes",
        [[1, 1, 1, 1, 1], [2, 1, 1, 1, 1], [2, 2, 1, 1, 1], [3, 1, 1, 1, 1], [4, 1, 1, 1, 1]],
    )
    def test_table_families(self, sizes):
        blue = paths_union(sizes)
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2
        assert o.base == complement(blue)

    def test_table_serves_relabeled_instances(self):
        blue = paths_union([3, 1, 1, 1, 1])
        perm = [3, 6, 0, 5, 2, 4, 1]
        shuffled = blue.relabel(perm)
        o = base_case_orient(shuffled)
        assert o is not None and diameter(o.dir) <= 2 and o.base == complement(shuffled)

    @pytest.mark.parametrize(
        "sizes",
        [[3, 2, 1, 1, 1], [2, 2, 2, 1, 1], [4, 2, 1, 1, 1], [3, 3, 1, 1, 1], [3, 2, 2, 1, 1],
         [2, 2, 2, 2, 1], [4, 3, 1, 1, 1], [4, 2, 2, 1, 1], [3, 3, 2, 1, 1], [2, 2, 2, 2, 2],
         [4, 4, 1, 1, 1], [4, 3, 2, 1, 1], [3, 3, 2, 2, 1], [4, 4, 4, 4, 4]],
    )
    def test_partition_families(self, sizes):
        blue = paths_union(sizes)
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2

    @pytest.mark.parametrize("core", ["K4", "D42", "D41"])
    def test_core_plus_seven_singletons(self, core):
        q = {"K4": complete_graph(4), "D42": dumbbell(2, 4), "D41": dumbbell(1, 4)}[core]
        blue = disjoint_union(q, *singletons(7))
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2

    def test_d34_plus_eight_singletons(self):
        blue = disjoint_union(dumbbell(3, 4), *singletons(8))
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2

    @pytest.mark.parametrize("core", ["D33", "S33"])
    @pytest.mark.parametrize("tail", ["6P1", "P2+5P1"])
    def test_medium_cores(self, core, tail):
        q = dumbbell(3, 3) if core == "D33" else short_dumbbell(3, 3)
        rest = singletons(6) if tail == "6P1" else [paths_union([2])] + singletons(5)
        blue = disjoint_union(q, *rest)
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2

    @pytest.mark.parametrize("core", ["D32", "C5", "D31", "K3"])
    @pytest.mark.parametrize("twos", [0, 2, 5])
    def test_small_cores_with_short_paths(self, core, twos):
        q = {
            "D32": dumbbell(2, 3),
            "C5": cycle_graph(5),
            "D31": dumbbell(1, 3),
            "K3": complete_graph(3),
        }[core]
        rest = [paths_union([2])] * twos + singletons(5 - twos)
        blue = disjoint_union(q, *rest)
        o = base_case_orient(blue)
        assert o is not None and diameter(o.dir) <= 2

    def test_non_family_absent(self):
        assert base_case_orient(disjoint_union(complete_graph(5), *singletons(5))) is None
        assert base_case_orient(paths_union([5, 1, 1, 1, 1])) is None
        assert base_case_orient(paths_union([1, 1, 1, 1])) is None


class TestExpansion:
    def _reduction_setup(self):
        blue = disjoint_union(dumbbell(3, 3), paths_union([3]), *singletons(5))
        red = complement(blue)
        assert red.m == threshold_size(red.n)
        plan = find_reduction(blue)
        assert plan is not None
        frame, contracted = _contract_reduction(red, plan.w, plan.cert, plan.recipe)
        return red, frame, contracted

    def test_contracted_instance_stays_above_threshold(self):
        _, frame, contracted = self._reduction_setup()
        assert contracted.m >= threshold_size(contracted.n)

    def test_expansion_preserves_outside_arcs(self):
        red, frame, contracted = self._reduction_setup()
        o_star, _ = orient_diameter_two(contracted)
        expanded = expand_reduction(o_star, frame)
        assert diameter(expanded.dir) <= 2
        k = len(frame.kept)
        for a, b in o_star.dir.arcs():
            if a < k and b < k:
                assert expanded.dir.has_arc(frame.kept[a], frame.kept[b])

    def test_rejects_bad_inner_orientation(self):
        red, frame, contracted = self._reduction_setup()
        # point every edge at vertex 0 toward 0: out-degree 0 makes it infinite
        arcs = [(v, u) if u == 0 else (u, v) for u, v in contracted.edges()]
        bad = Orientation.from_arcs(contracted, arcs)
        assert diameter(bad.dir) > 2
        with pytest.raises(ValueError):
            expand_reduction(bad, frame)


class TestDriver:
    @pytest.mark.parametrize("n", range(5, 12))
    def test_complete_graphs(self, n):
        o, trace = orient_diameter_two(complete_graph(n))
        assert diameter(o.dir) <= 2

    def test_precondition_small(self):
        with pytest.raises(ValueError):
            orient_diameter_two(complete_graph(4))

    def test_precondition_sparse(self):
        g = complete_graph(6).without_edge(0, 1).without_edge(2, 3)
        with pytest.raises(ValueError):
            orient_diameter_two(g)

    def test_base_case_instance(self):
        blue = disjoint_union(complete_graph(4), *singletons(7))
        o, trace = orient_diameter_two(complement(blue))
        assert diameter(o.dir) <= 2
        assert any(isinstance(s, BaseCaseStep) for s in trace.steps)

    def test_triple_contraction_instance(self):
        blue = disjoint_union(cycle_graph(4), *singletons(5))
        red = complement(blue)
        o, trace = orient_diameter_two(red)
        assert diameter(o.dir) <= 2
        assert any(isinstance(s, TripleStep) for s in trace.steps)

    def test_reduction_instance(self):
        blue = disjoint_union(complete_graph(3), paths_union([3]), *singletons(4))
        red = complement(blue)
        o, trace = orient_diameter_two(red)
        assert diameter(o.dir) <= 2
        assert any(isinstance(s, ReduceStep) for s in trace.steps)

    def test_padding_recorded(self):
        o, trace = orient_diameter_two(complete_graph(8))
        assert isinstance(trace.steps[0], PadStep)
        assert trace.steps[0].deleted == ((0, 1), (0, 2), (0, 3))

    def test_no_fallbacks_on_these(self):
        cases = [
            complete_graph(9),
            complement(disjoint_union(cycle_graph(4), *singletons(5))),
            complement(paths_union([4, 1, 1, 1, 1])),
        ]
        for g in cases:
            _, trace = orient_diameter_two(g)
            assert trace.fallback_count() == 0

    def test_deterministic(self):
        blue = disjoint_union(cycle_graph(4), paths_union([2]), *singletons(5))
        red = complement(blue)
        o1, t1 = orient_diameter_two(red)
        o2, t2 = orient_diameter_two(red)
        assert o1 == o2 and t1 == t2

    @pytest.mark.parametrize("n", range(6, 11))
    def test_extremal_plus_one_edge(self, n):
        # one edge above the extremal graph sits exactly at the threshold;
        # the complement is a star, which exercises repeated contraction
        from orient2.oracle import extremal_graph

        g = extremal_graph(n).with_edge(3, n - 1)
        assert g.m == threshold_size(n)
        o, trace = orient_diameter_two(g)
        assert diameter(o.dir) <= 2
        assert trace.fallback_count() == 0

    def test_triple_expansion_keeps_all_present_edges_directed(self):
        # every vertex outside the triple keeps either all or none of its
        # three edges; when all are present they copy one direction
        blue = disjoint_union(cycle_graph(4), *singletons(5))
        red = complement(blue)
        o, trace = orient_diameter_two(red)
        step = next(s for s in trace.steps if isinstance(s, TripleStep))
        triple = {step.x1, step.x2, step.x3}
        for u in range(red.n):
            if u in triple:
                continue
            present = [x for x in triple if red.has_edge(u, x)]
            if len(present) == 3:
                outs = sum(1 for x in present if o.dir.has_arc(u, x))
                assert outs in (0, 3)


class TestReplay:
    @pytest.mark.parametrize(
        "blue_builder",
        [
            lambda: paths_union([1, 1, 1, 1, 1]),
            lambda: disjoint_union(cycle_graph(4), *singletons(5)),
            lambda: disjoint_union(complete_graph(3), paths_union([3]), *singletons(4)),
            lambda: disjoint_union(dumbbell(3, 3), paths_union([3]), *singletons(5)),
        ],
    )
    def test_replay_reproduces_output(self, blue_builder):
        red = complement(blue_builder())
        o, trace = orient_diameter_two(red)
        assert replay_trace(red, trace) == o

    def test_replay_with_padding(self):
        g = complete_graph(9)
        o, trace = orient_diameter_two(g)
        assert replay_trace(g, trace) == o
