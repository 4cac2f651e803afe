"""Axiom and theorem checks for Myerson values on directed hypergraph games.

Every check returns a :class:`PropertyReport`. A ``fails`` verdict always
carries witnesses, and :func:`reverify` recomputes any witness from scratch
to confirm it genuinely violates the property it was reported under.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .game import TUGame, is_convex
from .hypergraph import (
    DirectedHyperedge,
    DirectedHypergraph,
    Semantics,
    full_mask,
    is_bridge,
    mask_of,
    players_of,
    strong_components,
)
from .restriction import decomposition_check, restrict
from .values import Allocation, myerson

HOLDS = "holds"
FAILS = "fails"


class NotConvexError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        s, t = witness
        super().__init__(
            f"game is not convex: S={players_of(s)}, T={players_of(t)} violate "
            "v(S|T) + v(S&T) >= v(S) + v(T)"
        )


@dataclass
class PropertyReport:
    property: str
    verdict: str
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    fingerprint: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS


def _report(name, witnesses, h, g, sem, details=None) -> PropertyReport:
    from .serialize import instance_fingerprint

    return PropertyReport(
        name,
        FAILS if witnesses else HOLDS,
        witnesses,
        instance_fingerprint(h, g, sem),
        details or {},
    )


def _edge_tag(h: DirectedHypergraph, k: int) -> dict[str, Any]:
    return {"edge": h.edges[k].label, "edge_index": k}


def check_component_efficiency(h, g, sem=Semantics.STRONG, mu: Allocation | None = None) -> PropertyReport:
    """Compare each component's total payoff with its base worth."""
    mu = myerson(h, g, sem) if mu is None else mu
    witnesses = []
    for block in strong_components(h, sem).blocks:
        lhs, rhs = mu.total(block), g.worth(block)
        if lhs != rhs:
            witnesses.append({"component": players_of(block), "lhs": lhs, "rhs": rhs})
    return _report("component_efficiency", witnesses, h, g, sem)


def _edge_values(h, g, sem, workers=1) -> list[Allocation]:
    def one(k):
        return myerson(h.without_edge(k), g, sem)

    indices = range(len(h.edges))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, indices))
    return [one(k) for k in indices]


def check_fairness(h, g, sem=Semantics.STRONG, workers=1) -> PropertyReport:
    """Deleting an edge must move every tail and head player's payoff equally."""
    mu = myerson(h, g, sem)
    witnesses = []
    for k, without in enumerate(_edge_values(h, g, sem, workers)):
        e = h.edges[k]
        delta = mu - without
        for i in players_of(e.tail):
            for j in players_of(e.head):
                if delta[i - 1] != delta[j - 1]:
                    witnesses.append(
                        {**_edge_tag(h, k), "tail_player": i, "head_player": j,
                         "lhs": delta[i - 1], "rhs": delta[j - 1]}
                    )
    return _report("fairness", witnesses, h, g, sem)


def _gain_witnesses(h, k, mu, without, players):
    out = []
    for p in players:
        if mu[p - 1] < without[p - 1]:
            out.append({**_edge_tag(h, k), "player": p, "lhs": mu[p - 1], "rhs": without[p - 1]})
    return out


def check_stability(h, g, sem, edge_index) -> PropertyReport:
    """No player of the edge gains when it is deleted."""
    h.check_edge(edge_index)
    mu = myerson(h, g, sem)
    without = myerson(h.without_edge(edge_index), g, sem)
    players = players_of(h.edges[edge_index].players)
    return _report("stability", _gain_witnesses(h, edge_index, mu, without, players), h, g, sem,
                   {"edge": h.edges[edge_index].label})


def check_safety(h, g, sem, edge_index) -> PropertyReport:
    """No player at all gains when the edge is deleted."""
    h.check_edge(edge_index)
    mu = myerson(h, g, sem)
    without = myerson(h.without_edge(edge_index), g, sem)
    players = range(1, h.n + 1)
    return _report("safety", _gain_witnesses(h, edge_index, mu, without, players), h, g, sem,
                   {"edge": h.edges[edge_index].label})


def check_decomposition(h, g, sem=Semantics.STRONG) -> PropertyReport:
    ok, witness = decomposition_check(restrict(h, g, sem))
    witnesses = []
    if not ok:
        s, lhs, rhs = witness
        witnesses.append({"coalition": players_of(s), "lhs": lhs, "rhs": rhs})
    return _report("decomposition", witnesses, h, g, sem)


def verify_bridge_safety_theorem(h, g, sem=Semantics.STRONG, workers=1) -> PropertyReport:
    """Compare ``is_bridge`` with safety for every edge of a convex game.

    Raises :class:`NotConvexError` for games outside the theorem's hypothesis.
    """
    convex = is_convex(g)
    if not convex:
        raise NotConvexError(convex.witness)
    strict = bool(is_convex(g, strict=True))
    mu = myerson(h, g, sem)
    before = strong_components(h, sem)
    rows, witnesses = [], []
    for k, without in enumerate(_edge_values(h, g, sem, workers)):
        after = strong_components(h.without_edge(k), sem)
        bridge = len(after) > len(before)
        gains = _gain_witnesses(h, k, mu, without, range(1, h.n + 1))
        safe = not gains
        rows.append({"edge": h.edges[k].label, "bridge": bridge, "safe": safe, "agree": bridge == safe})
        if bridge == safe:
            continue
        witness = {**_edge_tag(h, k), "bridge": bridge, "safe": safe,
                   "components_before": before.as_lists(), "components_after": after.as_lists()}
        if bridge:
            first = gains[0]
            witness.update(player=first["player"], lhs=first["lhs"], rhs=first["rhs"])
        else:
            witness["min_loss"] = min(a - b for a, b in zip(mu, without))
        witnesses.append(witness)
    agreed = sum(r["agree"] for r in rows)
    details = {"strictly_convex": strict, "rows": rows, "agreement": f"{agreed}/{len(rows)}"}
    return _report("bridge_safety_theorem", witnesses, h, g, sem, details)


def audit_reported_values(h, g, sem, reported: Sequence[dict[str, Any]]) -> PropertyReport:
    """Check externally reported Myerson vectors against efficiency and the engine.

    Each entry has ``payoff`` (list of rationals) and ``deleted_edge`` (an
    edge label or ``None``). A vector is flagged when its sum differs from the
    restricted grand-coalition worth or when it differs from the exact value.
    """
    witnesses = []
    labels = [e.label for e in h.edges]
    for entry in reported:
        label = entry.get("deleted_edge")
        graph = h if label is None else h.without_edge(labels.index(label))
        payoff = [Fraction(x) for x in entry["payoff"]]
        engine = myerson(graph, g, sem)
        grand = restrict(graph, g, sem).worth(full_mask(h.n))
        total = sum(payoff, Fraction(0))
        if total != grand or tuple(payoff) != engine.payoff:
            witnesses.append({
                "deleted_edge": label,
                "reported": payoff,
                "reported_sum": total,
                "grand_worth": grand,
                "efficient": total == grand,
                "engine": list(engine.payoff),
            })
    return _report("reported_values", witnesses, h, g, sem)


def reverify(name: str, witness: dict[str, Any], h, g, sem) -> bool:
    """Recompute ``witness`` for property ``name``; True if it is a real violation."""
    sem = Semantics(sem)
    if name == "component_efficiency":
        block = mask_of(witness["component"])
        if block not in strong_components(h, sem).blocks:
            return False
        lhs, rhs = myerson(h, g, sem).total(block), g.worth(block)
        return lhs == witness["lhs"] and rhs == witness["rhs"] and lhs != rhs
    if name == "decomposition":
        s = mask_of(witness["coalition"])
        r = restrict(h, g, sem)
        rhs = sum((r.worth(s & t) for t in strong_components(h, sem).blocks), Fraction(0))
        lhs = r.worth(s)
        return lhs == witness["lhs"] and rhs == witness["rhs"] and lhs != rhs
    if name == "reported_values":
        label = witness["deleted_edge"]
        graph = h if label is None else h.without_edge([e.label for e in h.edges].index(label))
        engine = myerson(graph, g, sem)
        grand = restrict(graph, g, sem).worth(full_mask(h.n))
        reported = [Fraction(x) for x in witness["reported"]]
        return list(engine.payoff) == witness["engine"] and (
            sum(reported, Fraction(0)) != grand or tuple(reported) != engine.payoff
        )
    k = witness["edge_index"]
    if h.edges[k].label != witness["edge"]:
        return False
    mu = myerson(h, g, sem)
    without = myerson(h.without_edge(k), g, sem)
    if name == "fairness":
        i, j = witness["tail_player"], witness["head_player"]
        e = h.edges[k]
        if not (e.tail >> (i - 1) & 1 and e.head >> (j - 1) & 1):
            return False
        di, dj = mu[i - 1] - without[i - 1], mu[j - 1] - without[j - 1]
        return di == witness["lhs"] and dj == witness["rhs"] and di != dj
    if name in ("stability", "safety", "bridge_safety_theorem") and "player" in witness:
        p = witness["player"]
        if name == "stability" and not h.edges[k].players >> (p - 1) & 1:
            return False
        if name == "bridge_safety_theorem" and not is_bridge(h, k, sem):
            return False
        return (mu[p - 1], without[p - 1]) == (witness["lhs"], witness["rhs"]) and mu[p - 1] < without[p - 1]
    if name == "bridge_safety_theorem":
        # safe but not a bridge
        losses = [a - b for a, b in zip(mu, without)]
        return not is_bridge(h, k, sem) and min(losses) >= 0 and min(losses) == witness["min_loss"]
    raise ValueError(f"unknown property {name!r}")


def random_hypergraph(n: int, edge_count: int, tail_max: int, head_max: int, seed: int) -> DirectedHypergraph:
    """Edges with tail and head sizes uniform in ``1..max`` (capped at ``n``)."""
    if n < 1 or edge_count < 0 or tail_max < 1 or head_max < 1:
        raise ValueError("need n >= 1, edge_count >= 0 and positive side bounds")
    rng = random.Random(seed)
    edges = []
    for _ in range(edge_count):
        tail = rng.sample(range(1, n + 1), rng.randint(1, min(tail_max, n)))
        head = rng.sample(range(1, n + 1), rng.randint(1, min(head_max, n)))
        edges.append(DirectedHyperedge(mask_of(tail), mask_of(head)))
    return DirectedHypergraph(n, tuple(edges))


def verify_axioms(h, g, sem=Semantics.STRONG) -> list[PropertyReport]:
    return [check_component_efficiency(h, g, sem), check_fairness(h, g, sem)]
