"""Cycle enumeration and oriented-cycle-glued decompositions."""

from __future__ import annotations

import pytest

from greenseq.cycles import (
    CycleBudgetExceededError,
    all_cycles_oriented_decompose,
    enumerate_simple_cycles,
    is_irreducible,
)
from greenseq.decomposition import (
    check_step_shapes,
    construct_mgs,
    expected_mgs_length,
    underlying_quiver,
)
from greenseq.fixtures import fig7_quiver, fig8_quiver, oriented_cycles_example
from greenseq.quiver import is_maximal_green_sequence, make_quiver


def triangle():
    return make_quiver([1, 2, 3], [(1, 2), (2, 3), (3, 1)])


class TestEnumeration:
    def test_tree_has_no_cycles(self):
        q = make_quiver([1, 2, 3], [(2, 1), (3, 2)])
        assert enumerate_simple_cycles(q) == []

    def test_oriented_triangle(self):
        cycles = enumerate_simple_cycles(triangle())
        assert len(cycles) == 1
        assert cycles[0].oriented
        assert cycles[0].vertices == ("1", "2", "3")
        assert cycles[0].arrows() == [("1", "2"), ("2", "3"), ("3", "1")]

    def test_non_oriented_cycle_tagged(self):
        q = make_quiver([1, 2, 3], [(1, 2), (3, 2), (3, 1)])
        cycles = enumerate_simple_cycles(q)
        assert len(cycles) == 1
        assert not cycles[0].oriented

    def test_chained_triangles_have_three_cycles(self):
        cycles = enumerate_simple_cycles(fig8_quiver())
        assert [len(c) for c in cycles] == [3, 3, 3]
        assert all(c.oriented for c in cycles)

    def test_budget(self):
        with pytest.raises(CycleBudgetExceededError):
            enumerate_simple_cycles(fig8_quiver(), max_cycles=2)


class TestIrreducible:
    def test_triangle_irreducible(self):
        assert is_irreducible(triangle())

    def test_pendant_arrow_not_irreducible(self):
        q = make_quiver([1, 2, 3, 4], [(1, 2), (2, 3), (3, 1), (3, 4)])
        assert not is_irreducible(q)


class TestDecompose:
    def test_single_triangle(self):
        dec = all_cycles_oriented_decompose(triangle())
        assert sorted(dec.chain_lengths) == [1, 2]
        assert is_maximal_green_sequence(triangle(), construct_mgs(dec))

    def test_tree_of_cycles_reference(self):
        q = fig7_quiver()
        dec = all_cycles_oriented_decompose(q)
        assert dec is not None
        assert dec.n_chains == 6
        assert sorted(dec.chain_lengths) == [1, 2, 3, 3, 4, 4]
        seq = construct_mgs(dec)
        assert len(seq) == expected_mgs_length(dec) == 36
        assert is_maximal_green_sequence(q, seq)
        assert check_step_shapes(dec, seq) == []

    def test_reference_chain_presentation_round_trips(self):
        from greenseq.decomposition import decompose_with_chains
        from greenseq.fixtures import FIG7_CHAINS

        q = fig7_quiver()
        dec = decompose_with_chains(q, FIG7_CHAINS)
        assert underlying_quiver(dec) == q
        assert expected_mgs_length(dec) == 36
        assert is_maximal_green_sequence(q, construct_mgs(dec))

    def test_several_cycles_at_one_vertex(self):
        q = oriented_cycles_example()
        dec = all_cycles_oriented_decompose(q)
        assert dec is not None
        assert underlying_quiver(dec) == q
        assert is_maximal_green_sequence(q, construct_mgs(dec))

    def test_non_oriented_cycle_returns_none(self):
        q = make_quiver([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3), (4, 1)])
        assert all_cycles_oriented_decompose(q) is None

    def test_tree_quiver_returns_none(self):
        q = make_quiver([1, 2, 3], [(2, 1), (3, 2)])
        assert all_cycles_oriented_decompose(q) is None

    def test_disconnected_returns_none(self):
        q = make_quiver([1, 2, 3, 4, 5, 6], [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
        assert all_cycles_oriented_decompose(q) is None
