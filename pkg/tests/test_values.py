import random
from fractions import Fraction

import pytest

from dhmyerson.analysis import random_hypergraph
from dhmyerson.game import (
    AdditiveGame,
    CardinalityPowerGame,
    LimitExceeded,
    TableGame,
    UnanimityGame,
    combine,
    random_table_game,
)
from dhmyerson.hypergraph import DirectedHypergraph, Semantics, full_mask, mask_of
from dhmyerson.restriction import restrict
from dhmyerson.values import (
    myerson,
    myerson_monte_carlo,
    permutation_batches,
    shapley_exact,
    shapley_monte_carlo,
    shapley_permutation_oracle,
)
from oracles import myerson_oracle


def test_shapley_examples():
    w = (Fraction(3), Fraction(-1, 2), Fraction(0), Fraction(7, 3))
    assert shapley_exact(AdditiveGame(4, w)).payoff == w
    assert shapley_exact(UnanimityGame(2, 0b11)).payoff == (Fraction(1, 2), Fraction(1, 2))
    assert shapley_exact(CardinalityPowerGame(3, 2)).payoff == (3, 3, 3)
    assert shapley_permutation_oracle(CardinalityPowerGame(3, 2)).payoff == (3, 3, 3)


def test_oracle_examples():
    assert shapley_permutation_oracle(TableGame(1, (0, Fraction(5, 2)))).payoff == (Fraction(5, 2),)
    third = Fraction(1, 3)
    assert shapley_permutation_oracle(UnanimityGame(3, 0b111)).payoff == (third, third, third)
    g = random_table_game(4, 17)
    assert shapley_permutation_oracle(g) == shapley_exact(g)


def test_limits():
    with pytest.raises(LimitExceeded):
        shapley_permutation_oracle(CardinalityPowerGame(9))
    with pytest.raises(LimitExceeded):
        shapley_exact(CardinalityPowerGame(17))


def test_myerson_complete_graph_is_shapley():
    pairs = [([a], [b]) for a in range(1, 5) for b in range(1, 5) if a != b]
    h = DirectedHypergraph.from_lists(4, pairs)
    g = random_table_game(4, 3)
    assert myerson(h, g) == shapley_exact(g)


def test_myerson_without_edges():
    g = random_table_game(4, 8)
    assert myerson(DirectedHypergraph(4), g).payoff == tuple(g.worth(1 << i) for i in range(4))


def test_myerson_example(example, card1, card2):
    mu = myerson(example, card1)
    assert mu.payoff == (1, 1, 1, 1, 1)
    assert mu.payoff == myerson_oracle(example, card1)
    mu2 = myerson(example, card2)
    # frozen from the networkx + permutation oracle
    assert mu2.payoff == tuple(Fraction(x, 5) for x in (14, 14, 9, 9, 9))
    assert mu2.payoff == myerson_oracle(example, card2)
    assert mu2.total() == restrict(example, card2).worth(full_mask(5)) == 11


@pytest.mark.parametrize("seed", range(30))
def test_myerson_matches_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    h = random_hypergraph(n, rng.randint(0, 6), 3, 3, seed)
    g = random_table_game(n, seed)
    for sem in Semantics:
        assert myerson(h, g, sem).payoff == myerson_oracle(h, g, sem is Semantics.WEAK)


def test_additivity():
    for seed in range(30):
        n = 1 + seed % 6
        v, w = random_table_game(n, seed), random_table_game(n, seed + 500)
        total = shapley_exact(combine(v, w))
        assert total.payoff == tuple(a + b for a, b in zip(shapley_exact(v), shapley_exact(w)))


def test_symmetry_and_null_player():
    # players 1 and 2 symmetric, player 4 null
    def value(mask):
        core = mask & 0b0111
        return Fraction(bin(core & 0b011).count("1") ** 2 + 3 * (core >> 2 & 1))

    g = TableGame(4, tuple(value(m) for m in range(16)))
    sh = shapley_exact(g)
    assert sh[0] == sh[1]
    assert sh[3] == 0
    assert sh.total() == g.worth(15)


def test_mc_additive_is_exact():
    g = AdditiveGame(3, (2, -1, 5))
    est = shapley_monte_carlo(g, 1000, 3)
    assert est.payoff == (2.0, -1.0, 5.0)
    est = myerson_monte_carlo(DirectedHypergraph(3), g, Semantics.STRONG, 500, 9)
    assert est.payoff == (2.0, -1.0, 5.0)


def test_mc_unanimity_converges():
    est = shapley_monte_carlo(UnanimityGame(2, 0b11), 100_000, 1)
    assert all(abs(x - 0.5) <= 0.01 for x in est.payoff)


def test_mc_single_sample_is_one_order():
    g = random_table_game(4, 6)
    est = shapley_monte_carlo(g, 1, 42)
    (order,) = next(permutation_batches(4, 1, 42))
    expected = [0.0] * 4
    mask = 0
    for p in order:
        expected[p] = float(g.worth(mask | 1 << p) - g.worth(mask))
        mask |= 1 << int(p)
    assert est.payoff == pytest.approx(expected, abs=1e-12)


def test_mc_rejects_zero_samples():
    with pytest.raises(ValueError):
        myerson_monte_carlo(DirectedHypergraph(2), CardinalityPowerGame(2), Semantics.STRONG, 0, 1)


def test_mc_example_close_to_exact(example, card2):
    exact = myerson(example, card2)
    est = myerson_monte_carlo(example, card2, Semantics.STRONG, 200_000, 1)
    assert max(abs(a - float(b)) for a, b in zip(est.payoff, exact)) <= 0.02


def test_mc_deterministic(example, card2):
    a = myerson_monte_carlo(example, card2, Semantics.STRONG, 5000, 4)
    b = myerson_monte_carlo(example, card2, Semantics.STRONG, 5000, 4)
    assert a == b


def test_batches_independent_of_batch_size():
    a = [row.tolist() for batch in permutation_batches(5, 1000, 3, batch=7) for row in batch]
    b = [row.tolist() for batch in permutation_batches(5, 1000, 3) for row in batch]
    assert a == b


def test_large_n_monte_carlo_paths():
    # beyond the dense limit the estimators fall back to on-demand worths
    n = 18
    g = CardinalityPowerGame(n, 1)
    h = DirectedHypergraph.from_lists(n, [([1], [2]), ([2], [1])])
    assert shapley_monte_carlo(g, 50, 1).payoff == (1.0,) * n
    assert myerson_monte_carlo(h, g, Semantics.STRONG, 50, 1).payoff == (1.0,) * n
