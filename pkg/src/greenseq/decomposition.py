"""Chain decompositions of quivers and their maximal green sequences.

A chain decomposition presents a connected quiver as N vertical chains
(linearly oriented type-A runs ``v1 <- v2 <- ... <- vk``, position 1 at the
sink end) plus oblique arrows between chains.  The obliques joining any two
chains must form a single directed zigzag path that alternates between the
chains with strictly increasing positions on each, and the chain-adjacency
graph must be a tree.

On such a quiver a partial order on vertices is generated by

* within each chain, position 1 is greatest, and
* for each connected chain pair, interleaving relations read off the zigzag
  (two variants, depending on whether the zigzag's last arrow enters the
  chain it started from or the other one).

Listing vertices in any descending linear extension and concatenating each
vertex's associated down-chain run yields a maximal green sequence of the
underlying quiver; :func:`construct_mgs` builds it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .quiver import (
    Label,
    MutationSequence,
    Quiver,
    QuiverError,
    frame,
    make_quiver,
    mutate,
)


class DecompositionError(QuiverError):
    pass


class ObliqueWithinChainError(DecompositionError):
    pass


class NonAlternatingPathError(DecompositionError):
    pass


class NonIncreasingPositionsError(DecompositionError):
    pass


class MultiplePathsBetweenChainsError(DecompositionError):
    pass


class ChainGraphCycleError(DecompositionError):
    pass


class DisconnectedError(DecompositionError):
    pass


class OrderCycleDetectedError(DecompositionError):
    pass


class NotTwoChainsError(DecompositionError):
    pass


class ValidationFailedError(DecompositionError):
    def __init__(self, violations: Sequence["Violation"]):
        super().__init__("; ".join(v.message for v in violations))
        self.violations = tuple(violations)


_ERROR_BY_CODE = {
    "oblique-within-chain": ObliqueWithinChainError,
    "non-alternating-path": NonAlternatingPathError,
    "non-increasing-positions": NonIncreasingPositionsError,
    "multiple-paths-between-chains": MultiplePathsBetweenChainsError,
    "chain-graph-cycle": ChainGraphCycleError,
    "disconnected": DisconnectedError,
}


@dataclass(frozen=True, order=True)
class ChainVertex:
    """Position of a vertex inside a decomposition: chain and position, 1-based."""

    chain: int
    position: int


@dataclass(frozen=True)
class Violation:
    code: str
    clause: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"code": self.code, "clause": self.clause, "message": self.message}


Oblique = tuple[ChainVertex, ChainVertex]


def _as_chain_tuples(chains: Iterable[Iterable[Label]]) -> tuple[tuple[Label, ...], ...]:
    return tuple(tuple(str(v) for v in chain) for chain in chains)


class ChainDecomposition:
    """Validated chains-plus-obliques presentation of a quiver.

    ``chains[i]`` lists chain i+1 from position 1 (sink end) upward.  The
    underlying quiver and the vertex partial order are computed once at
    construction and cached; instances are immutable by convention.
    """

    def __init__(
        self,
        chains: Iterable[Iterable[Label]],
        obliques: Iterable[Oblique],
        _validated: bool = False,
    ):
        self.chains = _as_chain_tuples(chains)
        self.obliques = tuple(sorted(obliques))
        if not _validated:
            violations = validate_chains(self.chains, self.obliques)
            if violations:
                first = violations[0]
                if first.code not in _ERROR_BY_CODE:
                    raise ValidationFailedError(violations)
                error = _ERROR_BY_CODE[first.code](first.message)
                error.violations = tuple(violations)
                raise error
        self._label_of = {
            ChainVertex(i + 1, l + 1): v
            for i, chain in enumerate(self.chains)
            for l, v in enumerate(chain)
        }
        self._cv_of = {v: cv for cv, v in self._label_of.items()}
        self._quiver = self._build_quiver()
        self._order: OrderRelation | None = None

    @property
    def chain_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)

    @property
    def n_chains(self) -> int:
        return len(self.chains)

    def vertices(self) -> tuple[Label, ...]:
        return self._quiver.vertices

    def label_of(self, cv: ChainVertex) -> Label:
        return self._label_of[cv]

    def chain_vertex_of(self, label: Label) -> ChainVertex:
        return self._cv_of[str(label)]

    def _build_quiver(self) -> Quiver:
        arrows = []
        for chain in self.chains:
            for low, high in zip(chain, chain[1:]):
                arrows.append((high, low, 1))
        for src, dst in self.obliques:
            arrows.append((self._label_of[src], self._label_of[dst], 1))
        return make_quiver(self._label_of.values(), arrows)

    def order(self) -> "OrderRelation":
        if self._order is None:
            self._order = cover_relations(self)
        return self._order

    def __repr__(self) -> str:
        return f"ChainDecomposition(lengths={self.chain_lengths})"


def build_decomposition(
    chains: Iterable[Iterable[Label]],
    obliques: Iterable[tuple] = (),
) -> ChainDecomposition:
    """Build and validate a decomposition.

    ``obliques`` may use vertex labels or ChainVertex pairs; all structural
    rules are checked and the first violation is raised as a typed error.
    """
    chains = _as_chain_tuples(chains)
    cv_of = {
        v: ChainVertex(i + 1, l + 1)
        for i, chain in enumerate(chains)
        for l, v in enumerate(chain)
    }
    def resolve(end) -> ChainVertex:
        if isinstance(end, ChainVertex):
            return end
        cv = cv_of.get(str(end))
        if cv is None:
            raise QuiverError(f"oblique endpoint not in any chain: {end!r}")
        return cv

    resolved = [(resolve(src), resolve(dst)) for src, dst in obliques]
    return ChainDecomposition(chains, resolved)


def validate_chains(
    chains: Iterable[Iterable[Label]],
    obliques: Iterable[Oblique],
) -> list[Violation]:
    """Check all decomposition rules; empty result means valid.

    Violations name the broken rule: oblique arrows staying inside a chain,
    pair obliques not forming a single alternating path, positions not
    strictly increasing, several paths between one chain pair, a cycle in
    the chain-adjacency graph, or a disconnected quiver.
    """
    chains = _as_chain_tuples(chains)
    obliques = tuple(obliques)
    out: list[Violation] = []

    labels = [v for chain in chains for v in chain]
    if len(set(labels)) != len(labels):
        return [
            Violation(
                "duplicate-vertex", "vertex-map", "chains repeat a vertex label"
            )
        ]
    if not labels:
        return [Violation("disconnected", "connected", "no vertices")]
    for src, dst in obliques:
        for cv in (src, dst):
            if not (
                1 <= cv.chain <= len(chains)
                and 1 <= cv.position <= len(chains[cv.chain - 1])
            ):
                return [
                    Violation(
                        "unknown-vertex", "vertex-map", f"no such chain vertex {cv}"
                    )
                ]
        if src.chain == dst.chain:
            out.append(
                Violation(
                    "oblique-within-chain",
                    "oblique-zigzag",
                    f"oblique {src} -> {dst} stays inside chain {src.chain}",
                )
            )

    by_pair: dict[tuple[int, int], list[Oblique]] = {}
    for src, dst in obliques:
        if src.chain != dst.chain:
            key = (min(src.chain, dst.chain), max(src.chain, dst.chain))
            by_pair.setdefault(key, []).append((src, dst))
    for pair, arrows in sorted(by_pair.items()):
        violation = _zigzag_violation(pair, arrows)
        if violation is not None:
            out.append(violation)

    # Chain-adjacency graph must be a forest; with connectivity, a tree.
    edges = set(by_pair)
    parent = {i + 1: i + 1 for i in range(len(chains))}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in sorted(edges):
        rx, ry = find(x), find(y)
        if rx == ry:
            out.append(
                Violation(
                    "chain-graph-cycle",
                    "chain-tree",
                    f"chains {x} and {y} close a cycle in the chain-adjacency graph",
                )
            )
        else:
            parent[rx] = ry
    roots = {find(i + 1) for i in range(len(chains))}
    if len(roots) > 1:
        out.append(
            Violation(
                "disconnected",
                "connected",
                f"chain-adjacency graph has {len(roots)} components",
            )
        )
    return out


def _zigzag_violation(pair: tuple[int, int], arrows: list[Oblique]) -> Violation | None:
    """Check that one chain pair's obliques form a single increasing zigzag."""
    outgoing: dict[ChainVertex, ChainVertex] = {}
    indegree: dict[ChainVertex, int] = {}
    nodes: set[ChainVertex] = set()
    for src, dst in arrows:
        nodes.update((src, dst))
        if src in outgoing:
            return Violation(
                "non-alternating-path",
                "oblique-zigzag",
                f"chains {pair}: two obliques leave {src}",
            )
        outgoing[src] = dst
        indegree[dst] = indegree.get(dst, 0) + 1
        if indegree[dst] > 1:
            return Violation(
                "non-alternating-path",
                "oblique-zigzag",
                f"chains {pair}: two obliques enter {dst}",
            )
    sources = [v for v in nodes if indegree.get(v, 0) == 0]
    if len(sources) != 1:
        return Violation(
            "multiple-paths-between-chains",
            "oblique-zigzag",
            f"chains {pair}: obliques split into several paths",
        )
    path = [sources[0]]
    while path[-1] in outgoing:
        nxt = outgoing[path[-1]]
        if nxt in path:
            return Violation(
                "non-alternating-path",
                "oblique-zigzag",
                f"chains {pair}: obliques close a cycle",
            )
        path.append(nxt)
    if len(path) != len(nodes):
        return Violation(
            "multiple-paths-between-chains",
            "oblique-zigzag",
            f"chains {pair}: obliques split into several paths",
        )
    last_pos = {pair[0]: 0, pair[1]: 0}
    for cv in path:
        if cv.position <= last_pos[cv.chain]:
            return Violation(
                "non-increasing-positions",
                "oblique-zigzag",
                f"chains {pair}: zigzag positions not strictly increasing at {cv}",
            )
        last_pos[cv.chain] = cv.position
    return None


def underlying_quiver(dec: ChainDecomposition) -> Quiver:
    """The quiver presented by the decomposition (all multiplicities 1)."""
    return dec._quiver


def decompose_with_chains(
    q: Quiver, chains: Iterable[Iterable[Label]]
) -> ChainDecomposition:
    """Present an existing quiver with the given chains; obliques are inferred.

    Checks that the chains partition the vertex set, that every consecutive
    chain pair is joined by exactly one arrow in the downward direction, and
    that the leftover arrows satisfy all decomposition rules.
    """
    chains = _as_chain_tuples(chains)
    labels = [v for chain in chains for v in chain]
    if sorted(labels) != list(q.vertices):
        raise ValidationFailedError(
            [Violation("vertex-map", "vertex-map", "chains do not partition the vertex set")]
        )
    if any(m != 1 for _, _, m in q.arrows()):
        raise ValidationFailedError(
            [Violation("multiplicity", "vertical-chains", "arrow multiplicity above 1")]
        )
    vertical = set()
    for chain in chains:
        for low, high in zip(chain, chain[1:]):
            if q.b(high, low) != 1:
                raise ValidationFailedError(
                    [
                        Violation(
                            "missing-vertical",
                            "vertical-chains",
                            f"no arrow {high!r} -> {low!r} inside a chain",
                        )
                    ]
                )
            vertical.add((high, low))
    cv_of = {
        v: ChainVertex(i + 1, l + 1)
        for i, chain in enumerate(chains)
        for l, v in enumerate(chain)
    }
    obliques = [
        (cv_of[u], cv_of[v])
        for u, v, _ in q.arrows()
        if (u, v) not in vertical
    ]
    violations = validate_chains(chains, obliques)
    if violations:
        raise ValidationFailedError(violations)
    return ChainDecomposition(chains, obliques, _validated=True)


class OrderRelation:
    """Cover pairs over chain vertices with a cached transitive closure."""

    def __init__(self, vertices: Sequence[ChainVertex], covers: Iterable[tuple[ChainVertex, ChainVertex]]):
        self.vertices = tuple(sorted(vertices))
        self.covers = tuple(sorted(set(covers)))
        index = {cv: i for i, cv in enumerate(self.vertices)}
        n = len(self.vertices)
        reach = np.zeros((n, n), dtype=bool)
        for hi, lo in self.covers:
            reach[index[hi], index[lo]] = True
        for k in range(n):
            reach |= np.outer(reach[:, k], reach[k, :])
        for i in range(n):
            for j in range(i + 1, n):
                if reach[i, j] and reach[j, i]:
                    raise OrderCycleDetectedError(
                        f"order cycle between {self.vertices[i]} and {self.vertices[j]}"
                    )
        if np.any(np.diagonal(reach)):
            raise OrderCycleDetectedError("order relates a vertex to itself")
        self._index = index
        self._closure = reach

    def greater(self, u: ChainVertex, v: ChainVertex) -> bool:
        return bool(self._closure[self._index[u], self._index[v]])


def _pair_order_lines(
    dec: ChainDecomposition, pair_arrows: list[Oblique]
) -> list[list[ChainVertex]]:
    """Descending runs of vertices read off one chain pair's zigzag.

    The zigzag starts by leaving chain i.  When its last arrow enters the
    other chain j, the tail of chain i below the zigzag precedes the tail
    of chain j; when it re-enters chain i, the roles of the tails swap.
    Consecutive entries of every returned run are cover relations.
    """
    outgoing = {src: dst for src, dst in pair_arrows}
    indegree = {dst for _, dst in pair_arrows}
    start = next(src for src, _ in pair_arrows if src not in indegree)
    path = [start]
    while path[-1] in outgoing:
        path.append(outgoing[path[-1]])

    ci = start.chain
    cj = path[1].chain
    a = [cv.position for cv in path if cv.chain == ci]
    b = [cv.position for cv in path if cv.chain == cj]
    k_i = len(dec.chains[ci - 1])
    k_j = len(dec.chains[cj - 1])

    def vi(pos: int) -> ChainVertex:
        return ChainVertex(ci, pos)

    def vj(pos: int) -> ChainVertex:
        return ChainVertex(cj, pos)

    lines: list[list[ChainVertex]] = []
    if path[-1].chain == cj:
        n = len(b)
        for l in range(1, n + 1):
            prev_b = b[l - 2] if l >= 2 else 0
            lines.append([vi(a[l - 1])] + [vj(p) for p in range(prev_b + 1, b[l - 1] + 1)])
        for l in range(1, n):
            lines.append([vj(b[l - 1])] + [vi(p) for p in range(a[l - 1] + 1, a[l] + 1)])
        lines.append(
            [vj(b[n - 1])]
            + [vi(p) for p in range(a[n - 1] + 1, k_i + 1)]
            + [vj(p) for p in range(b[n - 1] + 1, k_j + 1)]
        )
    else:
        m = len(b)
        for l in range(1, m + 1):
            prev_b = b[l - 2] if l >= 2 else 0
            lines.append([vi(a[l - 1])] + [vj(p) for p in range(prev_b + 1, b[l - 1] + 1)])
            lines.append([vj(b[l - 1])] + [vi(p) for p in range(a[l - 1] + 1, a[l] + 1)])
        lines.append(
            [vi(a[m])]
            + [vj(p) for p in range(b[m - 1] + 1, k_j + 1)]
            + [vi(p) for p in range(a[m] + 1, k_i + 1)]
        )
    return lines


def cover_relations(dec: ChainDecomposition) -> OrderRelation:
    """The vertex partial order: within-chain covers plus per-pair zigzag covers."""
    covers: list[tuple[ChainVertex, ChainVertex]] = []
    for i, chain in enumerate(dec.chains):
        for l in range(1, len(chain)):
            covers.append((ChainVertex(i + 1, l), ChainVertex(i + 1, l + 1)))
    by_pair: dict[tuple[int, int], list[Oblique]] = {}
    for src, dst in dec.obliques:
        key = (min(src.chain, dst.chain), max(src.chain, dst.chain))
        by_pair.setdefault(key, []).append((src, dst))
    for _, arrows in sorted(by_pair.items()):
        for line in _pair_order_lines(dec, arrows):
            covers.extend(zip(line, line[1:]))
    vertices = [
        ChainVertex(i + 1, l + 1)
        for i, chain in enumerate(dec.chains)
        for l in range(len(chain))
    ]
    return OrderRelation(vertices, covers)


def is_greater(dec: ChainDecomposition, u, v) -> bool:
    """Transitive-closure comparison; accepts labels or chain vertices."""
    if not isinstance(u, ChainVertex):
        u = dec.chain_vertex_of(u)
    if not isinstance(v, ChainVertex):
        v = dec.chain_vertex_of(v)
    return dec.order().greater(u, v)


def descending_order(dec: ChainDecomposition) -> list[ChainVertex]:
    """A deterministic descending linear extension of the vertex order.

    Each listed element is maximal among those not yet listed; ties break by
    smallest chain index, then smallest position.
    """
    order = dec.order()
    above: dict[ChainVertex, int] = {cv: 0 for cv in order.vertices}
    below: dict[ChainVertex, list[ChainVertex]] = {cv: [] for cv in order.vertices}
    for hi, lo in order.covers:
        above[lo] += 1
        below[hi].append(lo)
    ready = sorted(cv for cv, cnt in above.items() if cnt == 0)
    out: list[ChainVertex] = []
    while ready:
        cv = ready.pop(0)
        out.append(cv)
        changed = False
        for lo in below[cv]:
            above[lo] -= 1
            if above[lo] == 0:
                ready.append(lo)
                changed = True
        if changed:
            ready.sort()
    if len(out) != len(order.vertices):
        raise OrderCycleDetectedError("order has no linear extension")
    return out


def associated_sequence(dec: ChainDecomposition, cv: ChainVertex) -> MutationSequence:
    """The down-chain run for one vertex: positions 1 .. k - position + 1."""
    chain = dec.chains[cv.chain - 1]
    count = len(chain) - cv.position + 1
    return MutationSequence(tuple(chain[:count]))


def expected_mgs_length(dec: ChainDecomposition) -> int:
    """Total length of the constructed sequence: sum of k(k+1)/2 over chains."""
    return sum(k * (k + 1) // 2 for k in dec.chain_lengths)


def construct_mgs(dec: ChainDecomposition) -> MutationSequence:
    """Concatenate associated sequences along a descending linear extension.

    The result is a maximal green sequence of the underlying quiver, of
    length :func:`expected_mgs_length`.
    """
    steps: list[Label] = []
    for cv in descending_order(dec):
        steps.extend(associated_sequence(dec, cv))
    return MutationSequence(tuple(steps))


def two_chain_mgs(dec: ChainDecomposition) -> MutationSequence:
    """Explicit two-chain construction, expanded block by block.

    Equals :func:`construct_mgs` on every valid two-chain decomposition,
    where the vertex order is total; kept as an independent route for
    cross-checking.
    """
    if dec.n_chains != 2:
        raise NotTwoChainsError(f"need exactly 2 chains, got {dec.n_chains}")
    arrows = list(dec.obliques)
    outgoing = {src: dst for src, dst in arrows}
    indegree = {dst for _, dst in arrows}
    start = next(src for src, _ in arrows if src not in indegree)
    path = [start]
    while path[-1] in outgoing:
        path.append(outgoing[path[-1]])
    ci, cj = start.chain, path[1].chain
    a = [cv.position for cv in path if cv.chain == ci]
    b = [cv.position for cv in path if cv.chain == cj]
    k_i = len(dec.chains[ci - 1])
    k_j = len(dec.chains[cj - 1])

    blocks: list[ChainVertex] = []

    def block(chain: int, lo: int, hi: int) -> None:
        blocks.extend(ChainVertex(chain, p) for p in range(lo, hi + 1))

    if path[-1].chain == cj:
        n = len(b)
        prev_a, prev_b = 0, 0
        for l in range(n):
            block(ci, prev_a + 1, a[l])
            block(cj, prev_b + 1, b[l])
            prev_a, prev_b = a[l], b[l]
        block(ci, prev_a + 1, k_i)
        block(cj, prev_b + 1, k_j)
    else:
        m = len(b)
        prev_a, prev_b = 0, 0
        for l in range(m):
            block(ci, prev_a + 1, a[l])
            block(cj, prev_b + 1, b[l])
            prev_a, prev_b = a[l], b[l]
        block(ci, prev_a + 1, a[m])
        block(cj, prev_b + 1, k_j)
        block(ci, a[m] + 1, k_i)

    steps: list[Label] = []
    for cv in blocks:
        steps.extend(associated_sequence(dec, cv))
    return MutationSequence(tuple(steps))


def check_step_shapes(dec: ChainDecomposition, seq: MutationSequence | None = None) -> list[str]:
    """Verify the local arrow shape at every step of a constructed sequence.

    Before each mutation the vertex about to be mutated must have
    (1) every arrow to a mutable vertex of its own chain pointing toward it,
    (2) every arrow to a mutable vertex of another chain pointing away, and
    (3) every arrow to a frozen vertex pointing away.
    Returns a list of human-readable violations (empty when all steps pass).
    """
    if seq is None:
        seq = construct_mgs(dec)
    chain_of = {v: dec.chain_vertex_of(v).chain for v in dec.vertices()}
    state = frame(underlying_quiver(dec))
    problems: list[str] = []
    for idx, v in enumerate(seq):
        q = state.quiver
        for w in q.vertices:
            if w == v:
                continue
            entry = q.b(v, w)
            if entry == 0:
                continue
            if w in state.frozen:
                if entry < 0:
                    problems.append(f"step {idx}: frozen arrow into {v!r} from {w!r}")
            elif chain_of[w] == chain_of[v]:
                if entry > 0:
                    problems.append(f"step {idx}: same-chain arrow out of {v!r} to {w!r}")
            else:
                if entry < 0:
                    problems.append(f"step {idx}: cross-chain arrow into {v!r} from {w!r}")
        state = mutate(state, v)
    return problems


def decomposition_to_dict(dec: ChainDecomposition) -> dict:
    return {
        "chains": [list(chain) for chain in dec.chains],
        "oblique": [
            {"from": dec.label_of(src), "to": dec.label_of(dst)}
            for src, dst in dec.obliques
        ],
    }


def decomposition_from_dict(data: dict) -> ChainDecomposition:
    obliques = [(o["from"], o["to"]) for o in data.get("oblique", [])]
    return build_decomposition(data.get("chains", []), obliques)


def random_decomposition(
    seed: int, n_chains: int, max_vertices: int
) -> ChainDecomposition:
    """Seeded random valid decomposition: random chain lengths on a random
    chain tree with random zigzags.  Deterministic for a given seed."""
    if n_chains < 1 or max_vertices < n_chains:
        raise QuiverError("need max_vertices >= n_chains >= 1")
    rng = random.Random(seed)
    lengths = [1] * n_chains
    for _ in range(max_vertices - n_chains):
        if rng.random() < 0.8:
            lengths[rng.randrange(n_chains)] += 1
    chains = [
        [f"c{i + 1}p{l + 1}" for l in range(lengths[i])] for i in range(n_chains)
    ]
    obliques: list[tuple[str, str]] = []
    for y in range(2, n_chains + 1):
        x = rng.randint(1, y - 1)
        first = rng.choice((x, y))
        second = y if first == x else x
        high_water = {x: 0, y: 0}
        cur_chain = first
        cur_pos = rng.randint(1, lengths[first - 1])
        high_water[first] = cur_pos
        while True:
            nxt_chain = second if cur_chain == first else first
            lo = high_water[nxt_chain] + 1
            hi = lengths[nxt_chain - 1]
            if lo > hi:
                break
            nxt_pos = rng.randint(lo, hi)
            obliques.append(
                (chains[cur_chain - 1][cur_pos - 1], chains[nxt_chain - 1][nxt_pos - 1])
            )
            high_water[nxt_chain] = nxt_pos
            cur_chain, cur_pos = nxt_chain, nxt_pos
            if rng.random() < 0.45:
                break
    return build_decomposition(chains, obliques)
