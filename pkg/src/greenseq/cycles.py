"""Simple-cycle enumeration and decomposition of oriented-cycle-glued quivers.

Cycles are enumerated on the underlying undirected graph and tagged oriented
when the arrows run coherently around the cycle.  A connected quiver in which
every arrow lies on an oriented cycle and every simple cycle is oriented
decomposes into chains by peeling cycles: the first cycle contributes a path
chain plus a singleton, every later cycle shares exactly one already-placed
vertex and contributes its remaining path as a fresh chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .decomposition import ChainDecomposition, decompose_with_chains
from .quiver import Label, Quiver, QuiverError


class CycleBudgetExceededError(QuiverError):
    pass


@dataclass(frozen=True)
class Cycle:
    """A simple cycle of the underlying graph.

    ``vertices`` lists the cycle in arrow direction when oriented (each
    vertex has an arrow to its successor, cyclically), otherwise in a
    canonical undirected order.  Rotated so the smallest label comes first.
    """

    vertices: tuple[Label, ...]
    oriented: bool

    def __len__(self) -> int:
        return len(self.vertices)

    def arrows(self) -> list[tuple[Label, Label]]:
        if not self.oriented:
            raise QuiverError("arrow list of a non-oriented cycle")
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _canonical(vertices: list[Label], oriented_forward: bool, oriented_backward: bool) -> Cycle:
    if oriented_backward and not oriented_forward:
        vertices = [vertices[0]] + list(reversed(vertices[1:]))
        oriented_forward = True
    start = vertices.index(min(vertices))
    rotated = tuple(vertices[start:] + vertices[:start])
    if not oriented_forward:
        # undirected canonical direction: smaller second element
        if len(rotated) > 2 and rotated[-1] < rotated[1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return Cycle(rotated, oriented_forward)


def enumerate_simple_cycles(q: Quiver, max_cycles: int = 10000) -> list[Cycle]:
    """All simple cycles of the underlying graph, each tagged oriented or not.

    Raises CycleBudgetExceededError beyond ``max_cycles`` candidates; the
    result is sorted by (length, vertices) for determinism.
    """
    graph = nx.Graph()
    graph.add_nodes_from(q.vertices)
    graph.add_edges_from((u, v) for u, v, _ in q.arrows())
    cycles = []
    for raw in itertools.islice(nx.simple_cycles(graph), max_cycles + 1):
        if len(cycles) >= max_cycles:
            raise CycleBudgetExceededError(f"more than {max_cycles} simple cycles")
        forward = all(
            q.b(raw[i], raw[(i + 1) % len(raw)]) > 0 for i in range(len(raw))
        )
        backward = all(
            q.b(raw[(i + 1) % len(raw)], raw[i]) > 0 for i in range(len(raw))
        )
        cycles.append(_canonical(list(raw), forward, backward))
    return sorted(cycles, key=lambda c: (len(c), c.vertices))


def is_irreducible(q: Quiver, max_cycles: int = 10000) -> bool:
    """True when every arrow lies on some oriented cycle."""
    on_cycle: set[tuple[Label, Label]] = set()
    for cycle in enumerate_simple_cycles(q, max_cycles):
        if cycle.oriented:
            on_cycle.update(cycle.arrows())
    return all((u, v) in on_cycle for u, v, _ in q.arrows())


def all_cycles_oriented_decompose(
    q: Quiver, max_cycles: int = 10000
) -> ChainDecomposition | None:
    """Chain decomposition by cycle peeling, or None when preconditions fail.

    Preconditions: connected, every simple cycle oriented, every arrow on
    some cycle.  Covers trees of oriented cycles and, more generally, any
    number of oriented cycles meeting pairwise in at most one vertex.
    """
    if not q.is_connected() or len(q.vertices) == 0:
        return None
    if any(m != 1 for _, _, m in q.arrows()):
        return None
    cycles = enumerate_simple_cycles(q, max_cycles)
    if any(not c.oriented for c in cycles):
        return None
    covered = {arrow for c in cycles for arrow in c.arrows()}
    if any((u, v) not in covered for u, v, _ in q.arrows()):
        return None
    if not cycles:
        # no arrows at all: a single vertex is the only connected case
        return decompose_with_chains(q, [[v] for v in q.vertices])

    chains: list[list[Label]] = []
    placed: set[Label] = set()

    def path_chain(path: list[Label]) -> None:
        # a directed path u1 -> ... -> um becomes a chain with um at position 1
        chains.append(list(reversed(path)))
        placed.update(path)

    remaining = list(cycles)
    first = remaining.pop(0)
    solo = min(first.vertices)
    idx = first.vertices.index(solo)
    around = first.vertices[idx + 1 :] + first.vertices[:idx]
    path_chain(list(around))
    chains.append([solo])
    placed.add(solo)

    while remaining:
        pick = next(
            (c for c in remaining if placed.intersection(c.vertices)), None
        )
        if pick is None:
            return None
        remaining.remove(pick)
        shared = placed.intersection(pick.vertices)
        if len(shared) != 1:
            return None
        (v,) = shared
        idx = pick.vertices.index(v)
        around = pick.vertices[idx + 1 :] + pick.vertices[:idx]
        path_chain(list(around))

    stray = [v for v in q.vertices if v not in placed]
    if stray:
        return None
    return decompose_with_chains(q, chains)
