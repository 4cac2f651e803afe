import random

import numpy as np
import pytest

from dhmyerson import _pykernels, kernels
from dhmyerson.analysis import random_hypergraph

compiled = pytest.importorskip("dhmyerson._kernels")


def instances(count=40):
    rng = random.Random(1)
    for k in range(count):
        n = rng.randint(1, 9)
        yield n, random_hypergraph(n, rng.randint(0, 10), 4, 4, k)


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("weak", [False, True])
def test_partition_tables_agree(weak):
    for n, h in instances():
        a = _pykernels.partition_table(n, h.tails, h.heads, weak)
        b = compiled.partition_table(n, h.tails, h.heads, weak)
        assert a.dtype == b.dtype and np.array_equal(a, b)


def test_components_agree():
    rng = random.Random(2)
    for n, h in instances():
        for _ in range(10):
            s = rng.randrange(1 << n)
            for weak in (False, True):
                assert _pykernels.components(n, h.tails, h.heads, s, weak) == compiled.components(
                    n, h.tails, h.heads, s, weak
                )


def test_restricted_values_agree():
    rng = np.random.default_rng(0)
    for n, h in instances():
        base = rng.normal(size=1 << n)
        base[0] = 0.0
        masks = rng.integers(0, 1 << n, size=50)
        for weak in (False, True):
            a = _pykernels.restricted_values(n, h.tails, h.heads, weak, base, masks)
            b = compiled.restricted_values(n, h.tails, h.heads, weak, base, masks)
            assert np.array_equal(a, b)


def test_marginal_sums_agree():
    rng = np.random.default_rng(1)
    for n in range(1, 11):
        table = rng.integers(-1000, 1000, size=1 << n).astype(np.int64)
        table[0] = 0
        assert np.array_equal(_pykernels.size_marginal_sums(table, n), compiled.size_marginal_sums(table, n))
        obj = np.empty(1 << n, dtype=object)
        obj[:] = [int(x) for x in table]
        assert (_pykernels.size_marginal_sums(obj, n) == compiled.size_marginal_sums(table, n)).all()


def test_empty_edge_lists():
    assert compiled.components(3, [], [], 0b101) == [0b001, 0b100]
    assert compiled.partition_table(2, [], [], False).tolist() == [[0, 0], [1, 0], [2, 0], [1, 2]]
