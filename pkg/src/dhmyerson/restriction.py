"""The hypergraph-restricted game.

The restricted worth of ``S`` is the sum of base worths over the components
of ``S``, where only hyperedges lying entirely inside ``S`` count.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import kernels
from .game import MAX_DENSE_PLAYERS, LimitExceeded, TUGame
from .hypergraph import (
    DirectedHypergraph,
    Semantics,
    components_of_subset,
    full_mask,
    strong_components,
)


@dataclass(frozen=True, eq=False)
class RestrictedGame(TUGame):
    """``base`` restricted by ``graph``; behaves as a TU game itself.

    ``cache`` is ``(W, d)``: an integral table over all coalitions with
    ``W[S] / d`` the restricted worth of ``S``. Build it with :func:`build_cache`.
    """

    base: TUGame
    graph: DirectedHypergraph
    sem: Semantics = Semantics.STRONG
    cache: tuple[np.ndarray, int] | None = None

    def __post_init__(self):
        if self.base.n != self.graph.n:
            raise ValueError("game and hypergraph disagree on the player count")
        object.__setattr__(self, "sem", Semantics(self.sem))

    @property
    def n(self) -> int:
        return self.base.n

    def _value(self, mask):
        if self.cache is not None:
            w, d = self.cache
            return Fraction(int(w[mask]), d)
        return direct_worth(self, mask)

    @property
    def scaled(self):
        if self.cache is None:
            return build_cache(self).cache
        return self.cache


def direct_worth(r: RestrictedGame, mask: int) -> Fraction:
    """Restricted worth computed from scratch, ignoring any cache."""
    if mask == 0:
        return Fraction(0)
    part = components_of_subset(r.graph, mask, r.sem)
    return sum((r.base.worth(b) for b in part.blocks), Fraction(0))


def restricted_worth(r: RestrictedGame, mask: int) -> Fraction:
    return r.worth(mask)


def build_cache(r: RestrictedGame) -> RestrictedGame:
    """Tabulate the restricted worth of every coalition.

    The partition of each coalition comes from the bitmask kernel; worths are
    summed in the base game's common-denominator integer scale.
    """
    n = r.n
    if n > MAX_DENSE_PLAYERS:
        raise LimitExceeded(f"restricted cache is limited to {MAX_DENSE_PLAYERS} players, got {n}")
    if r.cache is not None:
        return r
    blocks = kernels.partition_table(n, r.graph.tails, r.graph.heads, r.sem is Semantics.WEAK)
    base, denom = r.base.scaled
    if base.dtype == object:
        table = base[blocks.astype(np.int64)].sum(axis=1)
    else:
        # Rows sum at most n entries of the base table, far inside int64 range.
        table = base[blocks].sum(axis=1)
        if not kernels.fits_int64(int(np.abs(table).max(initial=0)), n):
            table = kernels.int_table([int(x) for x in table], n)
    return replace(r, cache=(table, denom))


def decomposition_check(r: RestrictedGame):
    """Does ``v^E(S) == sum_i v^E(S & T_i)`` hold for every ``S``?

    ``T_i`` are the components of the full player set. Returns
    ``(True, None)`` or ``(False, (S, lhs, rhs))`` for the first failing mask.
    """
    r = build_cache(r)
    w, d = r.cache
    parts = strong_components(r.graph, r.sem).blocks
    for s in range(1, 1 << r.n):
        rhs = sum(int(w[s & t]) for t in parts)
        if int(w[s]) != rhs:
            return False, (s, Fraction(int(w[s]), d), Fraction(rhs, d))
    return True, None


def restrict(
    graph: DirectedHypergraph, base: TUGame, sem: Semantics = Semantics.STRONG, cached: bool = True
) -> RestrictedGame:
    r = RestrictedGame(base, graph, Semantics(sem))
    return build_cache(r) if cached else r


def grand_worth(r: RestrictedGame) -> Fraction:
    return r.worth(full_mask(r.n))
