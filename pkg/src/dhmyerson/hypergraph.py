"""Directed hypergraphs and their connectivity.

Players are numbered ``1..n``; coalitions are int bitmasks with bit ``i - 1``
set for player ``i``. A path enters each hyperedge through a tail player and
leaves through a head player, so all reachability questions are answered on
the arc expansion ``{(a, b) : a in tail(e), b in head(e)}``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels


class Semantics(str, enum.Enum):
    """How connectivity is read off a hypergraph.

    ``STRONG`` is mutual reachability along directed paths. ``WEAK`` ignores
    direction and lets every hyperedge link all of its players.
    """

    STRONG = "strong"
    WEAK = "weak"


def mask_of(players: Iterable[int]) -> int:
    mask = 0
    for p in players:
        mask |= 1 << (p - 1)
    return mask


def players_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class DirectedHyperedge:
    tail: int
    head: int
    label: str = ""

    @property
    def players(self) -> int:
        return self.tail | self.head


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering ``ground``, ordered by lowest member."""

    blocks: tuple[int, ...]
    ground: int

    def __post_init__(self):
        union = 0
        for b in self.blocks:
            assert b and not (union & b), "blocks must be non-empty and disjoint"
            union |= b
        assert union == self.ground, "blocks must cover the ground set"

    def refines(self, other: "Partition") -> bool:
        """True when every block lies inside some block of ``other``."""
        return all(any(b & ~o == 0 for o in other.blocks) for b in self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [players_of(b) for b in self.blocks]

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class DirectedHypergraph:
    """``n`` players and an ordered multiset of directed hyperedges.

    ``ground`` is the active player set; it is everyone unless the hypergraph
    came from :func:`induced_subgraph`. Edge labels default to ``e1, e2, ...``
    and survive edge deletion.
    """

    n: int
    edges: tuple[DirectedHyperedge, ...] = ()
    ground: int = field(default=-1)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("player count must be non-negative")
        everyone = full_mask(self.n)
        if self.ground == -1:
            object.__setattr__(self, "ground", everyone)
        elif self.ground & ~everyone:
            raise ValueError("ground set contains players outside 1..n")
        edges = []
        for k, e in enumerate(self.edges):
            if not e.tail or not e.head:
                raise ValueError(f"edge {k + 1}: tail and head must be non-empty")
            if (e.tail | e.head) & ~everyone:
                raise ValueError(f"edge {k + 1}: players must lie in 1..{self.n}")
            edges.append(e if e.label else DirectedHyperedge(e.tail, e.head, f"e{k + 1}"))
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_lists(cls, n: int, edges: Sequence[tuple[Iterable[int], Iterable[int]]]):
        """Build from ``[(tail_players, head_players), ...]``."""
        return cls(n, tuple(DirectedHyperedge(mask_of(t), mask_of(h)) for t, h in edges))

    @property
    def tails(self) -> list[int]:
        return [e.tail for e in self.edges]

    @property
    def heads(self) -> list[int]:
        return [e.head for e in self.edges]

    def without_edge(self, index: int) -> "DirectedHypergraph":
        """Drop the edge at position ``index`` (0-based); other labels are kept."""
        self.check_edge(index)
        rest = self.edges[:index] + self.edges[index + 1 :]
        return DirectedHypergraph(self.n, rest, self.ground)

    def check_player(self, p: int) -> None:
        if not 1 <= p <= self.n:
            raise ValueError(f"player {p} outside 1..{self.n}")

    def check_edge(self, index: int) -> None:
        if not 0 <= index < len(self.edges):
            raise IndexError(f"edge index {index} outside 0..{len(self.edges) - 1}")


def arc_expansion(h: DirectedHypergraph) -> set[tuple[int, int]]:
    """All ordered pairs ``(a, b)`` with ``a`` in some tail and ``b`` in its head.

    Self-arcs are dropped; they never change reachability.
    """
    arcs = set()
    for e in h.edges:
        for a in players_of(e.tail):
            for b in players_of(e.head):
                if a != b:
                    arcs.add((a, b))
    return arcs


def _successors(h: DirectedHypergraph, removed: int = 0) -> list[int]:
    succ = [0] * h.n
    for e in h.edges:
        for a in players_of(e.tail & ~removed):
            succ[a - 1] |= e.head & ~removed
    return succ


def _reach(succ: list[int], start: int) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for p in players_of(frontier):
            nxt |= succ[p - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def reachable_set(h: DirectedHypergraph, s: int) -> int:
    """Players reachable from ``s`` by directed paths, including ``s`` itself."""
    h.check_player(s)
    bit = 1 << (s - 1)
    return _reach(_successors(h), bit)


def exists_path(h: DirectedHypergraph, s: int, t: int) -> bool:
    h.check_player(s)
    h.check_player(t)
    return bool(reachable_set(h, s) >> (t - 1) & 1)


def critical_players(h: DirectedHypergraph, s: int, t: int) -> int | None:
    """Players lying on every path from ``s`` to ``t``.

    Returns ``None`` when no path exists, since criticality is then vacuous.
    """
    if not exists_path(h, s, t):
        return None
    sbit, tbit = 1 << (s - 1), 1 << (t - 1)
    critical = sbit | tbit
    for i in range(1, h.n + 1):
        ibit = 1 << (i - 1)
        if ibit & critical:
            continue
        if not _reach(_successors(h, removed=ibit), sbit) & tbit:
            critical |= ibit
    return critical


def _partition(h: DirectedHypergraph, ground: int, sem: Semantics) -> Partition:
    blocks = kernels.components(
        h.n, h.tails, h.heads, ground, Semantics(sem) is Semantics.WEAK
    )
    return Partition(tuple(blocks), ground)


def strong_components(h: DirectedHypergraph, sem: Semantics = Semantics.STRONG) -> Partition:
    """Partition of the active players into components.

    Players are trivially connected to themselves, so isolated players are
    singleton blocks.
    """
    return _partition(h, h.ground, sem)


def induced_subgraph(h: DirectedHypergraph, coalition: int) -> DirectedHypergraph:
    if coalition & ~full_mask(h.n):
        raise ValueError("coalition contains players outside 1..n")
    kept = tuple(e for e in h.edges if not e.players & ~coalition)
    return DirectedHypergraph(h.n, kept, coalition)


def components_of_subset(
    h: DirectedHypergraph, coalition: int, sem: Semantics = Semantics.STRONG
) -> Partition:
    if coalition & ~full_mask(h.n):
        raise ValueError("coalition contains players outside 1..n")
    # Edges leaving the coalition are skipped by the kernel itself.
    return _partition(h, coalition, sem)


def is_bridge(h: DirectedHypergraph, index: int, sem: Semantics = Semantics.STRONG) -> bool:
    """Whether deleting edge ``index`` strictly refines the component partition."""
    before = strong_components(h, sem)
    after = strong_components(h.without_edge(index), sem)
    return len(after) > len(before)
