"""Shapley and Myerson values: exact, brute-force oracle and Monte Carlo."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from . import kernels
from .game import MAX_DENSE_PLAYERS, LimitExceeded, TUGame
from .hypergraph import DirectedHypergraph, Semantics
from .restriction import restrict

PERMUTATION_ORACLE_LIMIT = 8
_MC_BATCH = 1 << 15


@dataclass(frozen=True)
class Allocation:
    """Exact payoff per player; ``payoff[i - 1]`` belongs to player ``i``."""

    payoff: tuple[Fraction, ...]

    def __getitem__(self, i):
        return self.payoff[i]

    def __iter__(self):
        return iter(self.payoff)

    def __len__(self):
        return len(self.payoff)

    def total(self, mask: int | None = None) -> Fraction:
        return sum(
            (p for i, p in enumerate(self.payoff) if mask is None or mask >> i & 1),
            Fraction(0),
        )

    def __sub__(self, other: "Allocation") -> "Allocation":
        return Allocation(tuple(a - b for a, b in zip(self.payoff, other.payoff)))


@dataclass(frozen=True)
class McEstimate:
    payoff: tuple[float, ...]
    samples: int
    seed: int


def shapley_exact(g: TUGame) -> Allocation:
    """Shapley value from the subset formula with exact factorial weights.

    Marginal contributions are first summed per coalition size in the
    game's integer scale, then each size class gets its weight
    ``s! (n-s-1)! / n!``.
    """
    n = g.n
    if n > MAX_DENSE_PLAYERS:
        raise LimitExceeded(f"exact Shapley is limited to {MAX_DENSE_PLAYERS} players, got {n}")
    if n == 0:
        return Allocation(())
    table, denom = g.scaled
    sums = kernels.size_marginal_sums(table, n)
    weight = [factorial(s) * factorial(n - s - 1) for s in range(n)]
    scale = factorial(n) * denom
    payoff = tuple(
        Fraction(sum(int(sums[i, s]) * weight[s] for s in range(n)), scale) for i in range(n)
    )
    return Allocation(payoff)


def shapley_permutation_oracle(g: TUGame) -> Allocation:
    """Average marginal contribution over all ``n!`` join orders."""
    n = g.n
    if n > PERMUTATION_ORACLE_LIMIT:
        raise LimitExceeded(f"permutation oracle is limited to {PERMUTATION_ORACLE_LIMIT} players")
    worth = [g.worth(m) for m in range(1 << n)]
    totals = [Fraction(0)] * n
    for order in itertools.permutations(range(n)):
        mask = 0
        for p in order:
            totals[p] += worth[mask | 1 << p] - worth[mask]
            mask |= 1 << p
    count = factorial(n)
    return Allocation(tuple(t / count for t in totals))


def myerson(h: DirectedHypergraph, g: TUGame, sem: Semantics = Semantics.STRONG) -> Allocation:
    """Shapley value of the restricted game."""
    return shapley_exact(restrict(h, g, sem))


def permutation_batches(n: int, samples: int, seed: int, batch: int = _MC_BATCH):
    """Uniform random join orders, ``batch`` rows at a time.

    Each order is the argsort (stable) of ``n`` uniform doubles drawn from
    ``numpy.random.Generator(PCG64(seed))``. Rows are consumed from a single
    stream, so the orders do not depend on ``batch``.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    done = 0
    while done < samples:
        b = min(batch, samples - done)
        keys = rng.random((b, n))
        yield np.argsort(keys, axis=1, kind="stable")
        done += b


def _estimate(n, samples, seed, values_of) -> McEstimate:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    sums = np.zeros(n, dtype=np.float64)
    for perms in permutation_batches(n, samples, seed):
        masks = np.bitwise_or.accumulate(np.left_shift(1, perms, dtype=np.int64), axis=1)
        uniq, inverse = np.unique(masks, return_inverse=True)
        vals = values_of(uniq)[inverse.reshape(masks.shape)]
        marg = np.diff(vals, axis=1, prepend=0.0)
        sums += np.bincount(perms.ravel(), weights=marg.ravel(), minlength=n)
    return McEstimate(tuple(float(x) for x in sums / samples), samples, seed)


def _memo_values(fn):
    memo: dict[int, float] = {}

    def values_of(masks):
        out = np.empty(len(masks), dtype=np.float64)
        for k, m in enumerate(masks):
            m = int(m)
            if m not in memo:
                memo[m] = fn(m)
            out[k] = memo[m]
        return out

    return values_of


def shapley_monte_carlo(g: TUGame, samples: int, seed: int) -> McEstimate:
    """Mean marginal contribution over sampled join orders."""
    n = g.n
    if n <= MAX_DENSE_PLAYERS:
        table = g.float_table()
        values_of = table.__getitem__
    else:
        values_of = _memo_values(lambda m: float(g.worth(m)))
    return _estimate(n, samples, seed, values_of)


def myerson_monte_carlo(
    h: DirectedHypergraph, g: TUGame, sem: Semantics, samples: int, seed: int
) -> McEstimate:
    """Monte Carlo Myerson value; components are found per sampled coalition."""
    n = g.n
    weak = Semantics(sem) is Semantics.WEAK
    tails, heads = h.tails, h.heads
    if n <= MAX_DENSE_PLAYERS:
        base = g.float_table()

        def values_of(masks):
            return kernels.restricted_values(n, tails, heads, weak, base, masks)
    else:
        def restricted(m):
            blocks = kernels.components(n, tails, heads, m, weak)
            return sum(float(g.worth(b)) for b in blocks)

        values_of = _memo_values(restricted)
    return _estimate(n, samples, seed, values_of)
