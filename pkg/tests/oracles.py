"""Independent brute-force oracles.

Nothing here goes through the bitmask kernels: paths are enumerated
literally, components come from networkx, Shapley values from permutations.
"""
import itertools
from fractions import Fraction
from math import factorial

import networkx as nx

from dhmyerson.hypergraph import players_of


def simple_paths(h, s, t):
    """Vertex sequences of all simple paths s -> t.

    Each step leaves the current player through a hyperedge having it in the
    tail and arrives at a head player of that hyperedge.
    """
    out = []

    def walk(path):
        v = path[-1]
        for e in h.edges:
            if not e.tail >> (v - 1) & 1:
                continue
            for w in players_of(e.head):
                if w in path:
                    continue
                if w == t:
                    out.append(path + [w])
                else:
                    walk(path + [w])

    if s != t:
        walk([s])
    return out


def nx_components(h, coalition, weak=False):
    members = players_of(coalition)
    inside = [e for e in h.edges if not e.players & ~coalition]
    if weak:
        g = nx.Graph()
        g.add_nodes_from(members)
        for e in inside:
            ps = players_of(e.players)
            g.add_edges_from(itertools.combinations(ps, 2))
        comps = nx.connected_components(g)
    else:
        g = nx.DiGraph()
        g.add_nodes_from(members)
        for e in inside:
            g.add_edges_from((a, b) for a in players_of(e.tail) for b in players_of(e.head) if a != b)
        comps = nx.strongly_connected_components(g)
    return sorted(sorted(c) for c in comps)


def restricted_table(h, game, weak=False):
    table = []
    for mask in range(1 << h.n):
        total = Fraction(0)
        for comp in nx_components(h, mask, weak):
            total += game.worth(sum(1 << (p - 1) for p in comp))
        table.append(total)
    return table


def shapley_by_permutations(n, table):
    totals = [Fraction(0)] * n
    for order in itertools.permutations(range(n)):
        mask = 0
        for p in order:
            totals[p] += table[mask | 1 << p] - table[mask]
            mask |= 1 << p
    return tuple(x / factorial(n) for x in totals)


def myerson_oracle(h, game, weak=False):
    return shapley_by_permutations(h.n, restricted_table(h, game, weak))
