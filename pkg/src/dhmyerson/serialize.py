"""JSON instance documents and canonical report output.

Instance document::

    {
      "players": 3,
      "edges": [{"tail": [1], "head": [2, 3]}],
      "game": {"type": "table", "values": [0, 1, 1, "5/2", 1, 2, 2, 4]},
      "semantics": "strong"
    }

Table entry ``m`` is the worth of the coalition whose members are the set
bits of ``m`` (bit ``i - 1`` is player ``i``), so entry 3 above is ``{1, 2}``.
Rationals are written as ``"p/q"`` strings.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any

from .analysis import PropertyReport
from .game import (
    AdditiveGame,
    CardinalityPowerGame,
    RandomSupermodularGame,
    TableGame,
    TUGame,
    UnanimityGame,
    random_supermodular_game,
)
from .hypergraph import DirectedHyperedge, DirectedHypergraph, Semantics, mask_of, players_of
from .values import Allocation, McEstimate

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class InstanceError(ValueError):
    """Invalid instance document; the message starts with a JSON path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _rational(value, path) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InstanceError(path, "expected an integer or a 'p/q' string")
    if isinstance(value, str):
        if not _RATIONAL.match(value.strip()):
            raise InstanceError(path, f"malformed rational {value!r}")
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise InstanceError(path, "zero denominator") from None
    return Fraction(value)


def _int(value, path) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceError(path, "expected an integer")
    return value


def _players(value, n, path) -> list[int]:
    if not isinstance(value, list):
        raise InstanceError(path, "expected a list of player indices")
    if not value:
        raise InstanceError(path, "must be non-empty")
    out = []
    for k, p in enumerate(value):
        p = _int(p, f"{path}[{k}]")
        if not 1 <= p <= n:
            raise InstanceError(f"{path}[{k}]", f"player {p} outside 1..{n}")
        out.append(p)
    return out


def _parse_game(doc, n, path) -> TUGame:
    if not isinstance(doc, dict):
        raise InstanceError(path, "expected an object")
    kind = doc.get("type")
    if kind == "table":
        values = doc.get("values")
        if not isinstance(values, list):
            raise InstanceError(f"{path}.values", "expected a list")
        if len(values) != 1 << n:
            raise InstanceError(f"{path}.values", f"needs exactly {1 << n} entries, got {len(values)}")
        parsed = tuple(_rational(v, f"{path}.values[{k}]") for k, v in enumerate(values))
        if parsed and parsed[0] != 0:
            raise InstanceError(f"{path}.values[0]", "worth of the empty coalition must be 0")
        return TableGame(n, parsed)
    if kind == "cardinality_power":
        k = _int(doc.get("k", 1), f"{path}.k")
        if k < 1:
            raise InstanceError(f"{path}.k", "must be a positive integer")
        return CardinalityPowerGame(n, k)
    if kind == "additive":
        weights = doc.get("weights")
        if not isinstance(weights, list) or len(weights) != n:
            raise InstanceError(f"{path}.weights", f"expected a list of {n} rationals")
        return AdditiveGame(n, tuple(_rational(w, f"{path}.weights[{k}]") for k, w in enumerate(weights)))
    if kind == "unanimity":
        return UnanimityGame(n, mask_of(_players(doc.get("carrier"), n, f"{path}.carrier")))
    if kind == "random_supermodular":
        terms = _int(doc.get("terms", 0), f"{path}.terms")
        seed = _int(doc.get("seed", 0), f"{path}.seed")
        eps = _rational(doc.get("eps", 0), f"{path}.eps")
        if terms < 0 or eps < 0:
            raise InstanceError(path, "terms and eps must be non-negative")
        try:
            return random_supermodular_game(n, terms, seed, eps)
        except ValueError as exc:
            raise InstanceError(path, str(exc)) from None
    raise InstanceError(f"{path}.type", f"unknown game type {kind!r}")


def instance_from_document(doc: Any):
    """Validate a decoded document; returns ``(hypergraph, game, semantics)``."""
    if not isinstance(doc, dict):
        raise InstanceError("$", "expected an object")
    n = _int(doc.get("players"), "$.players")
    if n < 1:
        raise InstanceError("$.players", "must be at least 1")
    if n > 16 and doc.get("game", {}).get("type") == "table":
        raise InstanceError("$.players", "table games are limited to 16 players")
    edges_doc = doc.get("edges", [])
    if not isinstance(edges_doc, list):
        raise InstanceError("$.edges", "expected a list")
    edges = []
    for k, e in enumerate(edges_doc):
        path = f"$.edges[{k}]"
        if not isinstance(e, dict):
            raise InstanceError(path, "expected an object with tail and head")
        tail = _players(e.get("tail"), n, f"{path}.tail")
        head = _players(e.get("head"), n, f"{path}.head")
        label = e.get("label", f"e{k + 1}")
        if not isinstance(label, str) or not label:
            raise InstanceError(f"{path}.label", "expected a non-empty string")
        edges.append(DirectedHyperedge(mask_of(tail), mask_of(head), label))
    if "game" not in doc:
        raise InstanceError("$.game", "missing")
    game = _parse_game(doc["game"], n, "$.game")
    sem = doc.get("semantics", "strong")
    try:
        sem = Semantics(sem)
    except ValueError:
        raise InstanceError("$.semantics", f"expected 'strong' or 'weak', got {sem!r}") from None
    return DirectedHypergraph(n, tuple(edges)), game, sem


def parse_instance(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError("$", f"malformed JSON ({exc})") from None
    return instance_from_document(doc)


def game_document(g: TUGame) -> dict[str, Any]:
    if isinstance(g, TableGame):
        return {"type": "table", "values": [rational_str(v) for v in g.values]}
    if isinstance(g, CardinalityPowerGame):
        return {"type": "cardinality_power", "k": g.k}
    if isinstance(g, AdditiveGame):
        return {"type": "additive", "weights": [rational_str(w) for w in g.weights]}
    if isinstance(g, UnanimityGame):
        return {"type": "unanimity", "carrier": players_of(g.carrier)}
    if isinstance(g, RandomSupermodularGame):
        return {"type": "random_supermodular", "terms": g.num_terms, "seed": g.seed,
                "eps": rational_str(g.eps)}
    # Anything else is written out as its dense table.
    return {"type": "table", "values": [rational_str(v) for v in g.table]}


def instance_document(h: DirectedHypergraph, g: TUGame, sem=Semantics.STRONG) -> dict[str, Any]:
    edges = []
    for k, e in enumerate(h.edges):
        entry = {"tail": players_of(e.tail), "head": players_of(e.head)}
        if e.label != f"e{k + 1}":
            entry["label"] = e.label
        edges.append(entry)
    return {"players": h.n, "edges": edges, "game": game_document(g),
            "semantics": Semantics(sem).value}


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def emit_instance(h, g, sem=Semantics.STRONG) -> str:
    return _dumps(instance_document(h, g, sem))


def instance_fingerprint(h, g, sem=Semantics.STRONG) -> str:
    text = json.dumps(instance_document(h, g, sem), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def plain(obj):
    """Recursively convert Fractions to ``"p/q"`` strings and tuples to lists."""
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, PropertyReport):
        return {"property": obj.property, "verdict": obj.verdict,
                "witnesses": plain(obj.witnesses), "fingerprint": obj.fingerprint,
                "details": plain(obj.details)}
    if isinstance(obj, Allocation):
        return {"kind": "allocation", "payoffs": plain(obj.payoff)}
    if isinstance(obj, McEstimate):
        return {"kind": "estimate", "payoffs": list(obj.payoff), "samples": obj.samples,
                "seed": obj.seed}
    return obj


def emit_report(report) -> str:
    """Canonical JSON text: sorted keys, two-space indent, rationals as strings."""
    return _dumps(plain(report))


def render_table(report) -> str:
    """Human-readable text for allocations, estimates and property reports."""
    lines = []
    if isinstance(report, (Allocation, McEstimate)):
        lines.append(f"{'player':>6}  payoff")
        for i, p in enumerate(report.payoff, start=1):
            if isinstance(p, Fraction):
                lines.append(f"{i:>6}  {rational_str(p)}  ({float(p):.6g})")
            else:
                lines.append(f"{i:>6}  {p:.6f}")
        if isinstance(report, McEstimate):
            lines.append(f"samples={report.samples} seed={report.seed}")
        return "\n".join(lines) + "\n"
    if isinstance(report, PropertyReport):
        lines.append(f"{report.property}: {report.verdict}")
        rows = report.details.get("rows")
        if rows:
            lines.append(f"{'edge':>6}  bridge  safe   agree")
            for r in rows:
                lines.append(f"{r['edge']:>6}  {str(r['bridge']):<6}  {str(r['safe']):<5}  {r['agree']}")
        for w in report.witnesses:
            lines.append("  witness: " + json.dumps(plain(w), sort_keys=True))
        return "\n".join(lines) + "\n"
    if isinstance(report, list):
        return "".join(render_table(r) for r in report)
    return _dumps(plain(report))
