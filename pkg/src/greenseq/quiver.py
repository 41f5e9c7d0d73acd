"""Quivers, ice quivers, Fomin-Zelevinsky mutation, and green-sequence checks.

A quiver is a finite directed graph without loops or 2-cycles.  It is stored
as a skew-symmetric integer matrix over a lexicographically sorted vertex
list: ``b[u][v]`` equals the number of arrows u -> v minus the number of
arrows v -> u, so between any ordered pair at most one direction carries
arrows.  An ice quiver additionally distinguishes a frozen vertex subset with
no arrows between frozen vertices.

All values here are immutable; every operation returns a new value, which
makes them safe to share across threads or executors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Label = str


class QuiverError(Exception):
    """Base class for quiver construction and mutation errors."""


class LoopArrowError(QuiverError):
    pass


class TwoCycleError(QuiverError):
    pass


class DuplicateVertexError(QuiverError):
    pass


class UnknownEndpointError(QuiverError):
    pass


class UnknownVertexError(QuiverError):
    pass


class FrozenVertexMutationError(QuiverError):
    pass


class NotSignCoherentError(QuiverError):
    """A mutable vertex has arrows both to and from frozen vertices."""


class ZeroRowError(QuiverError):
    """A mutable vertex has no arrows to or from any frozen vertex."""


class ConsecutiveRepeatError(QuiverError):
    pass


class ConsecutiveRepeatAfterRestrictionError(ConsecutiveRepeatError):
    pass


class NotGreenAtStepError(QuiverError):
    def __init__(self, index: int, vertex: Label, reason: str = "vertex is not green"):
        super().__init__(f"step {index}: {reason}: {vertex!r}")
        self.index = index
        self.vertex = vertex


class Color(enum.Enum):
    GREEN = "green"
    RED = "red"


class Policy(enum.Enum):
    UNCHECKED = "unchecked"
    REQUIRE_GREEN = "require_green"


def _freeze(matrix: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(matrix, dtype=np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Quiver:
    """Finite quiver without loops or 2-cycles, in exchange-matrix form.

    ``vertices`` is sorted lexicographically and fixes all iteration order.
    Equality is labeled equality: same vertex labels, same matrix.
    """

    vertices: tuple[Label, ...]
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _freeze(self.matrix))
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise DuplicateVertexError("duplicate vertex labels")
        if list(self.vertices) != sorted(self.vertices):
            raise QuiverError("vertices must be sorted lexicographically")
        if self.matrix.shape != (n, n):
            raise QuiverError("matrix shape does not match vertex count")
        if np.any(np.diagonal(self.matrix) != 0):
            raise LoopArrowError("nonzero diagonal entry")
        if np.any(self.matrix != -self.matrix.T):
            raise QuiverError("matrix is not skew-symmetric")
        object.__setattr__(
            self, "_index", {v: i for i, v in enumerate(self.vertices)}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and np.array_equal(
            self.matrix, other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.matrix.tobytes()))

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows())} arrows)"

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: Label) -> bool:
        return v in self._index

    def b(self, u: Label, v: Label) -> int:
        return int(self.matrix[self.index(u), self.index(v)])

    def arrows(self) -> list[tuple[Label, Label, int]]:
        """All arrows as (source, target, multiplicity), sorted."""
        out = []
        for i, u in enumerate(self.vertices):
            row = self.matrix[i]
            for j in np.nonzero(row > 0)[0]:
                out.append((u, self.vertices[j], int(row[j])))
        return sorted(out)

    def out_neighbors(self, v: Label) -> list[Label]:
        i = self.index(v)
        return [self.vertices[j] for j in np.nonzero(self.matrix[i] > 0)[0]]

    def in_neighbors(self, v: Label) -> list[Label]:
        i = self.index(v)
        return [self.vertices[j] for j in np.nonzero(self.matrix[i] < 0)[0]]

    def neighbors(self, v: Label) -> list[Label]:
        i = self.index(v)
        return [self.vertices[j] for j in np.nonzero(self.matrix[i] != 0)[0]]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True, eq=False)
class IceQuiver:
    """A quiver together with a frozen vertex subset.

    Frozen vertices carry no arrows among themselves and are never mutated.
    The mutable set must be non-empty.
    """

    quiver: Quiver
    frozen: frozenset[Label]

    def __post_init__(self):
        object.__setattr__(self, "frozen", frozenset(self.frozen))
        for f in self.frozen:
            if not self.quiver.has_vertex(f):
                raise UnknownVertexError(f"frozen vertex {f!r} not in quiver")
        idx = [self.quiver.index(f) for f in sorted(self.frozen)]
        if idx and np.any(self.quiver.matrix[np.ix_(idx, idx)] != 0):
            raise QuiverError("arrows between frozen vertices")
        if len(self.frozen) == len(self.quiver.vertices):
            raise QuiverError("ice quiver has no mutable vertices")

    @property
    def mutable(self) -> tuple[Label, ...]:
        return tuple(v for v in self.quiver.vertices if v not in self.frozen)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IceQuiver):
            return NotImplemented
        return self.quiver == other.quiver and self.frozen == other.frozen

    def __hash__(self) -> int:
        return hash((self.quiver, self.frozen))

    def __repr__(self) -> str:
        return (
            f"IceQuiver({len(self.mutable)} mutable, {len(self.frozen)} frozen)"
        )

    def state_key(self) -> bytes:
        """Canonical byte key of the exchange matrix (for search memoization)."""
        return self.quiver.matrix.tobytes()


def make_quiver(
    vertices: Iterable[Label],
    arrows: Iterable[tuple] = (),
) -> Quiver:
    """Build a quiver from vertex labels and (source, target[, multiplicity]) arrows.

    Rejects loops, duplicate vertices, unknown endpoints, and pairs of
    arrows in both directions (2-cycles).
    """
    labels = [str(v) for v in vertices]
    if len(set(labels)) != len(labels):
        raise DuplicateVertexError("duplicate vertex labels")
    order = tuple(sorted(labels))
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    b = np.zeros((n, n), dtype=np.int64)
    for arrow in arrows:
        if len(arrow) == 2:
            u, v, mult = str(arrow[0]), str(arrow[1]), 1
        else:
            u, v, mult = str(arrow[0]), str(arrow[1]), int(arrow[2])
        if mult < 1:
            raise QuiverError(f"arrow multiplicity must be >= 1, got {mult}")
        if u == v:
            raise LoopArrowError(f"loop arrow at {u!r}")
        if u not in index or v not in index:
            raise UnknownEndpointError(f"arrow endpoint not a vertex: {u!r}->{v!r}")
        i, j = index[u], index[v]
        if b[j, i] > 0:
            raise TwoCycleError(f"arrows in both directions between {u!r} and {v!r}")
        b[i, j] += mult
        b[j, i] -= mult
    return Quiver(order, b)


def frame(q: Quiver) -> IceQuiver:
    """Add one frozen copy v' per vertex with an arrow v -> v'."""
    return _frame_like(q, outward=True)


def coframe(q: Quiver) -> IceQuiver:
    """Add one frozen copy v' per vertex with an arrow v' -> v."""
    return _frame_like(q, outward=False)


def _frame_like(q: Quiver, outward: bool) -> IceQuiver:
    frozen = {v: v + "'" for v in q.vertices}
    for f in frozen.values():
        if q.has_vertex(f):
            raise DuplicateVertexError(f"frozen label {f!r} collides with a vertex")
    labels = list(q.vertices) + list(frozen.values())
    order = tuple(sorted(labels))
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    b = np.zeros((n, n), dtype=np.int64)
    for i, u in enumerate(q.vertices):
        for j, v in enumerate(q.vertices):
            b[index[u], index[v]] = q.matrix[i, j]
    for v, f in frozen.items():
        sign = 1 if outward else -1
        b[index[v], index[f]] = sign
        b[index[f], index[v]] = -sign
    return IceQuiver(Quiver(order, b), frozenset(frozen.values()))


# multiplicities can grow doubly exponentially under mutation; refusing
# beyond this bound keeps every int64 intermediate product exact
MAX_SAFE_ENTRY = 2**31


def mutate(iq: IceQuiver, k: Label) -> IceQuiver:
    """Fomin-Zelevinsky mutation at a mutable vertex, in matrix form.

    b'[u][v] = -b[u][v] when u = k or v = k, and otherwise
    b[u][v] + sign(b[u][k]) * max(b[u][k] * b[k][v], 0); entries between two
    frozen vertices are forced back to zero.  Mutation is an involution.
    """
    q = iq.quiver
    ki = q.index(k)
    if k in iq.frozen:
        raise FrozenVertexMutationError(f"cannot mutate frozen vertex {k!r}")
    b = q.matrix
    if np.abs(b).max(initial=0) >= MAX_SAFE_ENTRY:
        raise QuiverError("arrow multiplicities exceed the safe mutation range")
    col = b[:, ki]
    row = b[ki, :]
    delta = np.outer(np.maximum(col, 0), np.maximum(row, 0)) - np.outer(
        np.maximum(-col, 0), np.maximum(-row, 0)
    )
    new = b + delta
    new[ki, :] = -b[ki, :]
    new[:, ki] = -b[:, ki]
    if iq.frozen:
        fidx = [q.index(f) for f in sorted(iq.frozen)]
        new[np.ix_(fidx, fidx)] = 0
    return IceQuiver(Quiver(q.vertices, new), iq.frozen)


def color(iq: IceQuiver, v: Label) -> Color:
    """Classify a mutable vertex by the signs of its arrows to frozen vertices.

    Green: every frozen entry >= 0 (no arrows from frozen into v).
    Red: every frozen entry <= 0 with at least one arrow.  A mixed-sign row
    raises NotSignCoherentError (impossible along green sequences from a
    framed quiver); an all-zero row raises ZeroRowError.
    """
    if v in iq.frozen:
        raise QuiverError(f"color is defined for mutable vertices only: {v!r}")
    q = iq.quiver
    i = q.index(v)
    entries = [int(q.matrix[i, q.index(f)]) for f in iq.frozen]
    if not entries or all(e == 0 for e in entries):
        raise ZeroRowError(f"vertex {v!r} has no arrows to frozen vertices")
    has_pos = any(e > 0 for e in entries)
    has_neg = any(e < 0 for e in entries)
    if has_pos and has_neg:
        raise NotSignCoherentError(f"vertex {v!r} has mixed frozen arrow signs")
    return Color.GREEN if has_pos else Color.RED


def colors(iq: IceQuiver) -> dict[Label, Color]:
    return {v: color(iq, v) for v in iq.mutable}


@dataclass(frozen=True)
class MutationSequence:
    """Ordered list of vertices to mutate; index 0 is executed first.

    Stored in execution order.  Use ``from_composition`` for sequences
    written as function composition (rightmost factor applied first).
    Two consecutive equal steps are rejected.
    """

    steps: tuple[Label, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(str(s) for s in self.steps))
        for a, b in zip(self.steps, self.steps[1:]):
            if a == b:
                raise ConsecutiveRepeatError(f"consecutive repeat at {a!r}")

    @classmethod
    def from_execution(cls, steps: Iterable[Label]) -> "MutationSequence":
        return cls(tuple(steps))

    @classmethod
    def from_composition(cls, steps: Iterable[Label]) -> "MutationSequence":
        return cls(tuple(reversed(tuple(steps))))

    def to_composition(self) -> tuple[Label, ...]:
        return tuple(reversed(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.steps)

    def __add__(self, other: "MutationSequence") -> "MutationSequence":
        return MutationSequence(self.steps + other.steps)


Steps = Union[MutationSequence, Sequence[Label]]


def as_sequence(steps: Steps) -> MutationSequence:
    if isinstance(steps, MutationSequence):
        return steps
    return MutationSequence(tuple(steps))


@dataclass(frozen=True)
class TraceStep:
    vertex: Label
    color_before: Color | None
    state_after: IceQuiver


@dataclass(frozen=True)
class Trace:
    initial: IceQuiver
    records: tuple[TraceStep, ...]

    @property
    def final(self) -> IceQuiver:
        return self.records[-1].state_after if self.records else self.initial

    def final_colors(self) -> dict[Label, Color]:
        return colors(self.final)


def apply_sequence(
    iq: IceQuiver, seq: Steps, policy: Policy = Policy.UNCHECKED
) -> Trace:
    """Execute a mutation sequence, recording each intermediate state.

    Under REQUIRE_GREEN the run halts with NotGreenAtStepError at the first
    step whose vertex is not currently green.
    """
    seq = as_sequence(seq)
    state = iq
    records = []
    for idx, v in enumerate(seq):
        if v in state.frozen:
            raise FrozenVertexMutationError(f"step {idx} mutates frozen vertex {v!r}")
        try:
            before: Color | None = color(state, v)
        except (NotSignCoherentError, ZeroRowError):
            before = None
        if policy is Policy.REQUIRE_GREEN and before is not Color.GREEN:
            raise NotGreenAtStepError(idx, v)
        state = mutate(state, v)
        records.append(TraceStep(v, before, state))
    return Trace(iq, tuple(records))


@dataclass(frozen=True)
class Verdict:
    """Boolean verdict with the first violation, if any."""

    ok: bool
    reason: str | None = None
    step_index: int | None = None
    vertex: Label | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_green_sequence(q: Quiver, seq: Steps) -> Verdict:
    """True iff the sequence mutates only green vertices, starting framed."""
    try:
        sequence = as_sequence(seq)
    except ConsecutiveRepeatError as err:
        return Verdict(False, f"malformed sequence: {err}")
    try:
        apply_sequence(frame(q), sequence, Policy.REQUIRE_GREEN)
    except NotGreenAtStepError as err:
        return Verdict(False, "vertex not green", err.index, err.vertex)
    except QuiverError as err:
        return Verdict(False, str(err))
    return Verdict(True)


def is_maximal_green_sequence(q: Quiver, seq: Steps) -> Verdict:
    """True iff green sequence and every mutable vertex is red afterwards."""
    try:
        sequence = as_sequence(seq)
    except ConsecutiveRepeatError as err:
        return Verdict(False, f"malformed sequence: {err}")
    try:
        trace = apply_sequence(frame(q), sequence, Policy.REQUIRE_GREEN)
    except NotGreenAtStepError as err:
        return Verdict(False, "vertex not green", err.index, err.vertex)
    except QuiverError as err:
        return Verdict(False, str(err))
    for v, c in trace.final_colors().items():
        if c is not Color.RED:
            return Verdict(False, "vertex still green", None, v)
    return Verdict(True)


def full_subquiver(q: Union[Quiver, IceQuiver], keep: Iterable[Label]):
    """Induced subquiver on a vertex subset.

    For an ice quiver the frozen set is intersected with ``keep``.
    """
    kept = sorted({str(v) for v in keep})
    if isinstance(q, IceQuiver):
        return IceQuiver(full_subquiver(q.quiver, kept), q.frozen & set(kept))
    idx = [q.index(v) for v in kept]
    return Quiver(tuple(kept), q.matrix[np.ix_(idx, idx)])


def restrict_sequence(seq: Steps, keep: Iterable[Label]) -> MutationSequence:
    """Subsequence of steps whose vertex lies in ``keep``.

    Raises ConsecutiveRepeatAfterRestrictionError when deleting the other
    vertices leaves two equal steps adjacent.
    """
    kept = {str(v) for v in keep}
    steps = tuple(v for v in as_sequence(seq) if v in kept)
    try:
        return MutationSequence(steps)
    except ConsecutiveRepeatError as err:
        raise ConsecutiveRepeatAfterRestrictionError(str(err)) from None
