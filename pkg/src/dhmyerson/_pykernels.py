"""Pure-Python bitmask kernels.

These are the reference implementations of the hot loops. The compiled
``_kernels`` extension mirrors every function here with the same signature
and must produce identical output.

Hypergraph edges are passed as two parallel integer sequences ``tails`` and
``heads`` of player bitmasks (bit ``i - 1`` is player ``i``).
"""
import numpy as np


def _closure(start, adj):
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~reach
        reach |= nxt
    return reach


def _adjacency(n, tails, heads, ground, weak):
    succ = [0] * n
    pred = [0] * n
    outside = ~ground
    for tail, head in zip(tails, heads):
        tail = int(tail)
        head = int(head)
        if (tail | head) & outside:
            continue
        if weak:
            both = tail | head
            m = both
            while m:
                low = m & -m
                succ[low.bit_length() - 1] |= both
                m ^= low
            continue
        m = tail
        while m:
            low = m & -m
            succ[low.bit_length() - 1] |= head
            m ^= low
        m = head
        while m:
            low = m & -m
            pred[low.bit_length() - 1] |= tail
            m ^= low
    return succ, pred


def components(n, tails, heads, ground, weak=False):
    """Blocks of ``ground`` under the edges contained in ``ground``.

    Returns a list of block masks ordered by lowest member.
    """
    succ, pred = _adjacency(n, tails, heads, ground, weak)
    blocks = []
    remaining = ground
    while remaining:
        low = remaining & -remaining
        fwd = _closure(low, succ)
        block = fwd if weak else fwd & _closure(low, pred)
        block &= ground
        blocks.append(block)
        remaining &= ~block
    return blocks


def partition_table(n, tails, heads, weak=False):
    """Component blocks for every coalition mask.

    Returns a ``(2**n, n)`` uint32 array; row ``S`` holds the blocks of ``S``
    in ascending order of lowest member, zero-padded.
    """
    out = np.zeros((1 << n, max(n, 1)), dtype=np.uint32)
    tails = [int(t) for t in tails]
    heads = [int(h) for h in heads]
    for mask in range(1, 1 << n):
        for k, block in enumerate(components(n, tails, heads, mask, weak)):
            out[mask, k] = block
    return out


def restricted_values(n, tails, heads, weak, base, masks):
    """Restricted worth (float) of each coalition in ``masks``.

    ``base`` is a float table of the underlying game over all ``2**n`` masks.
    """
    tails = [int(t) for t in tails]
    heads = [int(h) for h in heads]
    out = np.empty(len(masks), dtype=np.float64)
    for k, mask in enumerate(masks):
        total = 0.0
        for block in components(n, tails, heads, int(mask), weak):
            total += base[block]
        out[k] = total
    return out


def size_marginal_sums(table, n):
    """``D[i, s]`` = sum over ``|S| = s``, ``i not in S`` of ``W[S+i] - W[S]``.

    Works for int64 and object (Python int) tables.
    """
    table = np.asarray(table)
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        sizes += (masks >> i) & 1
    out = np.zeros((n, max(n, 1)), dtype=table.dtype)
    for i in range(n):
        bit = 1 << i
        without = masks[(masks & bit) == 0]
        diff = table[without | bit] - table[without]
        size = sizes[without]
        for s in range(n):
            out[i, s] = diff[size == s].sum()
    return out
