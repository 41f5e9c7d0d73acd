"""Core quiver types: construction, mutation, colors, sequences, verdicts."""

from __future__ import annotations

import random

import pytest

from conftest import random_ice_quiver
from greenseq.quiver import (
    Color,
    ConsecutiveRepeatAfterRestrictionError,
    ConsecutiveRepeatError,
    DuplicateVertexError,
    FrozenVertexMutationError,
    IceQuiver,
    LoopArrowError,
    MutationSequence,
    NotGreenAtStepError,
    NotSignCoherentError,
    Policy,
    Quiver,
    TwoCycleError,
    UnknownEndpointError,
    UnknownVertexError,
    ZeroRowError,
    apply_sequence,
    coframe,
    color,
    colors,
    frame,
    full_subquiver,
    is_green_sequence,
    is_maximal_green_sequence,
    make_quiver,
    mutate,
    restrict_sequence,
)


def a2() -> Quiver:
    return make_quiver(["1", "2"], [("2", "1")])


class TestMakeQuiver:
    def test_direct_construction(self):
        q = make_quiver([1, 2], [(2, 1, 1)])
        assert q.b("2", "1") == 1
        assert q.b("1", "2") == -1
        assert q.arrows() == [("2", "1", 1)]

    def test_loop_rejected(self):
        with pytest.raises(LoopArrowError):
            make_quiver([1], [(1, 1, 1)])

    def test_two_cycle_rejected(self):
        with pytest.raises(TwoCycleError):
            make_quiver([1, 2], [(1, 2, 1), (2, 1, 1)])

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(DuplicateVertexError):
            make_quiver([1, 1], [])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(UnknownEndpointError):
            make_quiver([1, 2], [(1, 3)])

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(Exception):
            make_quiver([1, 2], [(1, 2, 0)])

    def test_vertices_sorted_lexicographically(self):
        q = make_quiver(["b", "a", "10", "2"], [])
        assert q.vertices == ("10", "2", "a", "b")


class TestFraming:
    def test_frame_single_vertex(self):
        iq = frame(make_quiver(["1"], []))
        assert iq.frozen == {"1'"}
        assert iq.quiver.arrows() == [("1", "1'", 1)]
        assert color(iq, "1") is Color.GREEN

    def test_frame_a2(self):
        iq = frame(a2())
        assert sorted(iq.quiver.arrows()) == [
            ("1", "1'", 1),
            ("2", "1", 1),
            ("2", "2'", 1),
        ]
        assert all(c is Color.GREEN for c in colors(iq).values())

    def test_coframe_single_vertex(self):
        iq = coframe(make_quiver(["1"], []))
        assert iq.quiver.arrows() == [("1'", "1", 1)]
        assert color(iq, "1") is Color.RED

    def test_coframe_a2(self):
        iq = coframe(a2())
        assert iq.quiver.arrows() == [
            ("1'", "1", 1),
            ("2", "1", 1),
            ("2'", "2", 1),
        ]
        assert all(c is Color.RED for c in colors(iq).values())

    def test_frozen_frozen_arrows_rejected(self):
        q = make_quiver(["1", "2", "3"], [("1", "2")])
        with pytest.raises(Exception):
            IceQuiver(q, frozenset(["1", "2"]))

    def test_all_frozen_rejected(self):
        q = make_quiver(["1", "2"], [])
        with pytest.raises(Exception):
            IceQuiver(q, frozenset(["1", "2"]))


class TestMutate:
    def test_sink_reversal(self):
        iq = IceQuiver(a2(), frozenset())
        assert mutate(iq, "1").quiver.arrows() == [("1", "2", 1)]

    def test_oriented_triangle_becomes_path(self):
        # the composite arrow cancels the opposite existing one
        tri = make_quiver([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
        out = mutate(IceQuiver(tri, frozenset()), "1")
        assert out.quiver.arrows() == [("1", "3", 1), ("2", "1", 1)]

    def test_frozen_vertex_rejected(self):
        iq = frame(a2())
        with pytest.raises(FrozenVertexMutationError):
            mutate(iq, "1'")

    def test_mutated_vertex_turns_red(self):
        iq = mutate(frame(a2()), "2")
        assert color(iq, "2") is Color.RED
        assert color(iq, "1") is Color.GREEN

    def test_two_chain_window_mutation_state(self):
        # two chains x1<-x2<-x3<-x4 and y1<-y2, zigzag x1->y1->x3; mutating
        # the framed quiver at x1 reverses its arrows and adds exactly the
        # two composites through x1.
        q = make_quiver(
            ["x1", "x2", "x3", "x4", "y1", "y2"],
            [
                ("x2", "x1"),
                ("x3", "x2"),
                ("x4", "x3"),
                ("y2", "y1"),
                ("x1", "y1"),
                ("y1", "x3"),
            ],
        )
        after = mutate(frame(q), "x1")
        expected = sorted(
            [
                ("x1", "x2", 1),
                ("x3", "x2", 1),
                ("x4", "x3", 1),
                ("y2", "y1", 1),
                ("x2", "y1", 1),
                ("y1", "x1", 1),
                ("y1", "x3", 1),
                ("x1'", "x1", 1),
                ("x2", "x1'", 1),
                ("x2", "x2'", 1),
                ("x3", "x3'", 1),
                ("x4", "x4'", 1),
                ("y1", "y1'", 1),
                ("y2", "y2'", 1),
            ]
        )
        assert after.quiver.arrows() == expected
        assert color(after, "x1") is Color.RED
        assert all(
            color(after, v) is Color.GREEN for v in after.mutable if v != "x1"
        )

    def test_involution_on_random_quivers(self):
        rng = random.Random(20240)
        for _ in range(500):
            n = rng.randint(2, 7)
            iq = random_ice_quiver(rng, n, rng.randint(0, min(2, n - 1)))
            k = rng.choice(iq.mutable)
            assert mutate(mutate(iq, k), k) == iq

    def test_oversized_multiplicities_refused(self):
        # doubly-exponential growth must hit a hard error, not wrap around
        q = make_quiver(["1", "2", "3"], [("1", "2", 2**31), ("2", "3", 3)])
        with pytest.raises(Exception, match="safe mutation range"):
            mutate(IceQuiver(q, frozenset()), "2")

    def test_skew_symmetry_and_frozen_block_preserved(self):
        rng = random.Random(7)
        iq = random_ice_quiver(rng, 6, 2)
        for _ in range(30):
            k = rng.choice(iq.mutable)
            iq = mutate(iq, k)
            m = iq.quiver.matrix
            assert (m == -m.T).all()
            idx = [iq.quiver.index(f) for f in sorted(iq.frozen)]
            assert not m[idx][:, idx].any()


class TestColor:
    def test_zero_row_raises(self):
        q = make_quiver(["1", "2", "f"], [("2", "1")])
        iq = IceQuiver(q, frozenset(["f"]))
        with pytest.raises(ZeroRowError):
            color(iq, "1")

    def test_mixed_signs_raise(self):
        q = make_quiver(["1", "f", "g"], [("1", "f"), ("g", "1")])
        iq = IceQuiver(q, frozenset(["f", "g"]))
        with pytest.raises(NotSignCoherentError):
            color(iq, "1")

    def test_sign_coherent_along_random_green_runs(self):
        # every state reachable by green mutations classifies cleanly
        rng = random.Random(99)
        for _ in range(50):
            from conftest import random_quiver

            q = random_quiver(rng, rng.randint(2, 5), max_mult=1)
            iq = frame(q)
            for _ in range(12):
                greens = [v for v, c in colors(iq).items() if c is Color.GREEN]
                if not greens:
                    break
                iq = mutate(iq, rng.choice(greens))
                colors(iq)  # raises on a sign-coherence failure


class TestSequences:
    def test_consecutive_repeat_rejected(self):
        with pytest.raises(ConsecutiveRepeatError):
            MutationSequence(("1", "1"))

    def test_composition_order_reversed(self):
        seq = MutationSequence.from_composition(("1", "2", "1"))
        assert seq.steps == ("1", "2", "1")
        assert MutationSequence.from_composition(("3", "2", "1")).steps == ("1", "2", "3")

    def test_empty_sequence_trace(self):
        iq = frame(a2())
        trace = apply_sequence(iq, MutationSequence(()))
        assert trace.records == ()
        assert trace.final == iq

    def test_require_green_on_a2(self):
        trace = apply_sequence(frame(a2()), ["2", "1"], Policy.REQUIRE_GREEN)
        assert all(c is Color.RED for c in trace.final_colors().values())
        assert [r.color_before for r in trace.records] == [Color.GREEN, Color.GREEN]

    def test_require_green_halts(self):
        with pytest.raises(NotGreenAtStepError) as err:
            apply_sequence(frame(a2()), ["2", "1", "2"], Policy.REQUIRE_GREEN)
        assert err.value.index == 2
        assert err.value.vertex == "2"

    def test_unchecked_executes_anyway(self):
        trace = apply_sequence(frame(a2()), ["2", "1", "2"], Policy.UNCHECKED)
        assert len(trace.records) == 3


class TestVerdicts:
    def test_green_single_step(self):
        assert is_green_sequence(a2(), ["1"])

    def test_malformed_folds_to_false(self):
        verdict = is_green_sequence(a2(), ["1", "1"])
        assert not verdict
        assert "malformed" in verdict.reason

    def test_a2_maximal_sequences(self):
        assert is_maximal_green_sequence(a2(), ["1", "2", "1"])
        assert is_maximal_green_sequence(a2(), ["2", "1"])

    def test_prefix_is_green_but_not_maximal(self):
        verdict = is_maximal_green_sequence(a2(), ["1"])
        assert not verdict
        assert verdict.vertex == "2"
        assert is_green_sequence(a2(), ["1"])

    def test_non_green_step_reported(self):
        verdict = is_maximal_green_sequence(a2(), ["2", "1", "2"])
        assert not verdict
        assert verdict.step_index == 2

    def test_reference_eleven_step_is_green(self):
        from greenseq.fixtures import fig8_quiver

        steps = ["2", "1", "3", "5", "7", "4", "2", "3", "5", "6", "3"]
        assert is_green_sequence(fig8_quiver(), steps)


class TestSubquiverAndRestriction:
    def test_full_subquiver_identity(self):
        q = make_quiver([1, 2, 3], [(2, 1), (3, 2)])
        assert full_subquiver(q, q.vertices) == q

    def test_full_subquiver_chain(self):
        q = make_quiver([1, 2, 3], [(2, 1), (3, 2), (1, 3)])
        sub = full_subquiver(q, ["1", "2"])
        assert sub.arrows() == [("2", "1", 1)]

    def test_full_subquiver_unknown_vertex(self):
        q = make_quiver([1, 2], [(2, 1)])
        with pytest.raises(UnknownVertexError):
            full_subquiver(q, ["3"])

    def test_ice_subquiver_intersects_frozen(self):
        iq = frame(a2())
        sub = full_subquiver(iq, ["1", "1'", "2"])
        assert sub.frozen == {"1'"}

    def test_restrict_identity_and_empty(self):
        seq = MutationSequence(("1", "2", "1"))
        assert restrict_sequence(seq, ["1", "2"]) == seq
        assert restrict_sequence(seq, []).steps == ()

    def test_restrict_repeat_detected(self):
        seq = MutationSequence(("1", "2", "1"))
        with pytest.raises(ConsecutiveRepeatAfterRestrictionError):
            restrict_sequence(seq, ["1"])
