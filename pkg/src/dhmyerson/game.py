"""TU games with exact rational worths, generators and property checkers."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

import numpy as np

from . import kernels
from .hypergraph import full_mask, mask_of

MAX_DENSE_PLAYERS = 16
SUPERADDITIVE_LIMIT = 12
CONVEX_LIMIT = 10


class LimitExceeded(ValueError):
    """Raised when an exhaustive computation is asked for too many players."""


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise LimitExceeded(f"{what} is limited to {limit} players, got {n}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class TUGame:
    """Base class: a characteristic function on coalitions of ``n`` players.

    Subclasses implement ``_value(mask)``; ``worth`` adds range checking.
    """

    n: int

    def worth(self, mask: int) -> Fraction:
        if not 0 <= mask <= full_mask(self.n):
            raise ValueError(f"coalition mask {mask} out of range for {self.n} players")
        if mask == 0:
            return Fraction(0)
        return self._value(mask)

    def _value(self, mask: int) -> Fraction:
        raise NotImplementedError

    @cached_property
    def table(self) -> tuple[Fraction, ...]:
        _check_limit(self.n, MAX_DENSE_PLAYERS, "dense worth table")
        return tuple(self.worth(m) for m in range(1 << self.n))

    @cached_property
    def scaled(self) -> tuple[np.ndarray, int]:
        """``(W, d)`` with ``W[S] / d == v(S)``, ``W`` integral (int64 or object)."""
        return scale_table(self.table, self.n)

    def float_table(self) -> np.ndarray:
        return np.array([float(x) for x in self.table], dtype=np.float64)

    def __add__(self, other: "TUGame") -> "TableGame":
        return combine(self, other)


def scale_table(values: Sequence[Fraction], n: int) -> tuple[np.ndarray, int]:
    denom = 1
    for v in values:
        denom = lcm(denom, v.denominator)
    ints = [v.numerator * (denom // v.denominator) for v in values]
    return kernels.int_table(ints, n), denom


@dataclass(frozen=True, eq=False)
class TableGame(TUGame):
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        _check_limit(self.n, MAX_DENSE_PLAYERS, "dense worth table")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"table needs {1 << self.n} entries, got {len(self.values)}")
        values = tuple(Fraction(v) for v in self.values)
        if values[0] != 0:
            raise ValueError("worth of the empty coalition must be 0")
        object.__setattr__(self, "values", values)

    def _value(self, mask):
        return self.values[mask]

    @cached_property
    def table(self):
        return self.values


@dataclass(frozen=True, eq=False)
class CardinalityPowerGame(TUGame):
    """``v(S) = |S|**k``."""

    n: int
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("exponent k must be a positive integer")

    def _value(self, mask):
        return Fraction(popcount(mask) ** self.k)


@dataclass(frozen=True, eq=False)
class AdditiveGame(TUGame):
    """``v(S) = sum of w_i over S``."""

    n: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.n:
            raise ValueError(f"need {self.n} weights, got {len(self.weights)}")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    def _value(self, mask):
        total = Fraction(0)
        i = 0
        while mask:
            if mask & 1:
                total += self.weights[i]
            mask >>= 1
            i += 1
        return total


@dataclass(frozen=True, eq=False)
class UnanimityGame(TUGame):
    """``v(S) = 1`` if the carrier ``T`` is inside ``S``, else 0."""

    n: int
    carrier: int

    def __post_init__(self):
        if not self.carrier or self.carrier & ~full_mask(self.n):
            raise ValueError("carrier must be a non-empty subset of the players")

    def _value(self, mask):
        return Fraction(1 if self.carrier & ~mask == 0 else 0)


@dataclass(frozen=True, eq=False)
class RandomSupermodularGame(TUGame):
    """Non-negative combination of unanimity games plus ``eps * |S|**2``.

    ``terms`` holds ``(carrier_mask, coefficient)`` pairs. ``seed`` and
    ``num_terms`` record how the instance was drawn so it can be serialized.
    """

    n: int
    terms: tuple[tuple[int, Fraction], ...]
    eps: Fraction
    seed: int
    num_terms: int

    def _value(self, mask):
        total = self.eps * popcount(mask) ** 2
        for carrier, coef in self.terms:
            if carrier & ~mask == 0:
                total += coef
        return total


def random_supermodular_game(
    n: int, terms: int, seed: int, strictness_eps: Fraction | int = 0
) -> RandomSupermodularGame:
    """Draw a convex game deterministically from ``seed`` (stdlib Mersenne Twister).

    Each term picks a carrier of size 2..n uniformly and a coefficient
    ``a/b`` with ``a`` in 1..9 and ``b`` in 1..4.
    """
    _check_limit(n, SUPERADDITIVE_LIMIT, "random supermodular generation")
    eps = Fraction(strictness_eps)
    if eps < 0:
        raise ValueError("strictness_eps must be non-negative")
    if terms and n < 2:
        raise ValueError("unanimity terms need at least two players")
    rng = random.Random(seed)
    drawn = []
    for _ in range(terms):
        size = rng.randint(2, n)
        carrier = mask_of(rng.sample(range(1, n + 1), size))
        coef = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        drawn.append((carrier, coef))
    return RandomSupermodularGame(n, tuple(drawn), eps, seed, terms)


def random_table_game(n: int, seed: int, low: int = -5, high: int = 10, denominators=(1, 2, 3)) -> TableGame:
    """Arbitrary (generally non-convex) game with small rational worths."""
    rng = random.Random(seed)
    values = [Fraction(0)] + [
        Fraction(rng.randint(low, high), rng.choice(denominators)) for _ in range((1 << n) - 1)
    ]
    return TableGame(n, tuple(values))


def random_superadditive_game(n: int, seed: int) -> TableGame:
    """Additive part plus a proper weighted-majority bonus.

    The quota exceeds half the total weight, so no two disjoint coalitions
    both win; this keeps the game superadditive while generally breaking
    convexity.
    """
    rng = random.Random(seed)
    weights = [Fraction(rng.randint(-2, 5), rng.randint(1, 2)) for _ in range(n)]
    votes = [rng.randint(1, 4) for _ in range(n)]
    quota = Fraction(sum(votes), 2)
    bonus = Fraction(rng.randint(1, 6))
    values = []
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        worth = sum((weights[i] for i in members), Fraction(0))
        if sum(votes[i] for i in members) > quota:
            worth += bonus
        values.append(worth)
    return TableGame(n, tuple(values))


def combine(a: TUGame, b: TUGame, ca: Fraction | int = 1, cb: Fraction | int = 1) -> TableGame:
    """Dense table of ``ca * a + cb * b``."""
    if a.n != b.n:
        raise ValueError("games must have the same player count")
    ca, cb = Fraction(ca), Fraction(cb)
    return TableGame(a.n, tuple(ca * x + cb * y for x, y in zip(a.table, b.table)))


@dataclass(frozen=True)
class CheckResult:
    """Verdict of a property checker; falsy when the property fails.

    ``witness`` is the first violating ``(S, T)`` pair of masks in
    lexicographic order, or ``None``.
    """

    holds: bool
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.holds


def is_superadditive(g: TUGame, strict: bool = False, limit: int = SUPERADDITIVE_LIMIT) -> CheckResult:
    """Check ``v(S | T) >= v(S) + v(T)`` over disjoint non-empty ``S, T``."""
    _check_limit(g.n, limit, "superadditivity check")
    w, _ = g.scaled
    masks = np.arange(1 << g.n, dtype=np.int64)
    for s in range(1, 1 << g.n):
        t = masks[((masks & s) == 0) & (masks > 0)]
        if not len(t):
            continue
        gain = w[s | t] - w[s] - w[t]
        bad = gain <= 0 if strict else gain < 0
        hit = np.flatnonzero(bad)
        if len(hit):
            return CheckResult(False, (s, int(t[hit[0]])))
    return CheckResult(True)


def is_convex(g: TUGame, strict: bool = False, limit: int = CONVEX_LIMIT) -> CheckResult:
    """Check ``v(S | T) + v(S & T) >= v(S) + v(T)`` over all pairs.

    In strict mode the inequality must be strict for every pair where neither
    set contains the other; comparable pairs are always equalities.
    """
    _check_limit(g.n, limit, "convexity check")
    w, _ = g.scaled
    t = np.arange(1 << g.n, dtype=np.int64)
    for s in range(1 << g.n):
        gain = w[s | t] + w[s & t] - w[s] - w[t]
        if strict:
            incomparable = ((s & ~t) != 0) & ((t & ~s) != 0)
            bad = (gain <= 0) & incomparable
        else:
            bad = gain < 0
        hit = np.flatnonzero(bad)
        if len(hit):
            return CheckResult(False, (s, int(hit[0])))
    return CheckResult(True)
