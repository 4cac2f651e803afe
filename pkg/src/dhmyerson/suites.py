"""Seeded instance suites and the reports the harness commits as golden files."""
from __future__ import annotations

import contextlib
import io
import json
import os
import random
from fractions import Fraction

from . import analysis
from .game import (
    AdditiveGame,
    CardinalityPowerGame,
    UnanimityGame,
    random_superadditive_game,
    random_supermodular_game,
    random_table_game,
)
from .hypergraph import Semantics, mask_of
from .cli import main
from .serialize import instance_fingerprint, plain

STRICT_EPS = Fraction(1, 4)


def mixed_instance(seed: int, max_players: int = 7):
    """A random (hypergraph, game) pair with a game family chosen by ``seed``."""
    rng = random.Random(seed)
    n = rng.randint(2, max_players)
    h = analysis.random_hypergraph(n, rng.randint(0, n + 2), 3, 3, seed)
    family = seed % 5
    if family == 0:
        g = random_table_game(n, seed)
    elif family == 1:
        g = random_supermodular_game(n, rng.randint(0, 4), seed, Fraction(rng.randint(0, 2), 2))
    elif family == 2:
        g = CardinalityPowerGame(n, rng.randint(1, 3))
    elif family == 3:
        g = AdditiveGame(n, tuple(Fraction(rng.randint(-4, 6), rng.randint(1, 3)) for _ in range(n)))
    else:
        g = UnanimityGame(n, mask_of(rng.sample(range(1, n + 1), rng.randint(1, n))))
    return h, g


def strict_supermodular_instance(seed: int, max_players: int = 6, eps=STRICT_EPS):
    """Convex instance; strictly convex whenever ``eps > 0``."""
    rng = random.Random(seed)
    n = rng.randint(3, max_players)
    h = analysis.random_hypergraph(n, rng.randint(1, n + 1), 2, 2, seed)
    return h, random_supermodular_game(n, rng.randint(1, 4), seed, eps)


def superadditive_instance(seed: int, max_players: int = 6):
    """Alternates convex and merely superadditive games."""
    rng = random.Random(seed)
    n = rng.randint(2, max_players)
    h = analysis.random_hypergraph(n, rng.randint(1, n + 1), 2, 2, seed)
    if seed % 2:
        return h, random_supermodular_game(n, rng.randint(1, 4), seed, 0)
    return h, random_superadditive_game(n, seed)


def theorem_suite(count: int = 50, sem=Semantics.STRONG, workers: int = 1, eps=STRICT_EPS) -> dict:
    """Per-instance bridge/safety agreement tables; ``eps=0`` gives merely convex games."""
    rows = []
    for seed in range(count):
        h, g = strict_supermodular_instance(seed, eps=eps)
        report = analysis.verify_bridge_safety_theorem(h, g, sem, workers=workers)
        rows.append({"seed": seed, "players": h.n, "report": plain(report)})
    violations = sum(
        1 for r in rows for w in r["report"]["witnesses"] if w["bridge"] and not w["safe"]
    )
    converse = sum(
        1 for r in rows for w in r["report"]["witnesses"] if w["safe"] and not w["bridge"]
    )
    edges = sum(len(r["report"]["details"]["rows"]) for r in rows)
    agreed = sum(
        sum(x["agree"] for x in r["report"]["details"]["rows"]) for r in rows
    )
    return {
        "suite": "bridge_safety_strict" if eps else "bridge_safety_convex",
        "semantics": Semantics(sem).value,
        "instances": rows,
        "summary": {
            "edges": edges,
            "agreeing_edges": agreed,
            "bridge_but_unsafe": violations,
            "safe_but_not_bridge": converse,
        },
    }


def stability_suite(count: int = 100, sem=Semantics.STRONG) -> dict:
    """Stability verdicts for every edge of seeded superadditive instances."""
    rows = []
    failing = 0
    for seed in range(count):
        h, g = superadditive_instance(seed)
        for k, e in enumerate(h.edges):
            report = analysis.check_stability(h, g, sem, k)
            failing += not report.holds
            rows.append({"seed": seed, "edge": e.label, "verdict": report.verdict,
                         "witnesses": plain(report.witnesses),
                         "fingerprint": instance_fingerprint(h, g, sem)})
    return {"suite": "stability_superadditive", "semantics": Semantics(sem).value,
            "rows": rows, "summary": {"edges": len(rows), "unstable_edges": failing}}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# (command args relative to the golden directory, output file)
GOLDEN_COMMANDS = [
    (["components", "--input", "example.json"], "outputs/example.components.json"),
    (["components", "--input", "example.json", "--semantics", "weak"], "outputs/example.components-weak.json"),
    (["bridges", "--input", "example.json"], "outputs/example.bridges.json"),
    (["critical", "--from", "5", "--to", "2", "--input", "example.json"], "outputs/example.critical-5-2.json"),
    (["critical", "--from", "3", "--to", "1", "--input", "example.json"], "outputs/example.critical-3-1.json"),
    (["critical", "--from", "1", "--to", "5", "--input", "example.json"], "outputs/example.critical-1-5.json"),
    (["myerson", "--input", "example.json"], "outputs/example.myerson.json"),
    (["myerson", "--input", "example-k2.json"], "outputs/example-k2.myerson.json"),
    (["decomposition", "--input", "example.json"], "outputs/example.decomposition.json"),
    (["decomposition", "--input", "example-k2.json"], "outputs/example-k2.decomposition.json"),
    (["verify-axioms", "--input", "example.json"], "outputs/example.verify-axioms.json"),
    (["verify-axioms", "--input", "example-k2.json"], "outputs/example-k2.verify-axioms.json"),
    (["verify-theorem", "--input", "example.json"], "outputs/example.verify-theorem.json"),
    (["verify-theorem", "--input", "example-k2.json"], "outputs/example-k2.verify-theorem.json"),
    (["safety", "--edge", "e2", "--input", "example.json"], "outputs/example.safety-e2.json"),
    (["safety", "--edge", "e2", "--input", "example-k2.json"], "outputs/example-k2.safety-e2.json"),
    (["stability", "--edge", "e4", "--input", "example-k2.json"], "outputs/example-k2.stability-e4.json"),
    (["audit", "--reported", "example.paper-values.json", "--input", "example.json"], "outputs/example.audit.json"),
    (["audit", "--reported", "example.paper-values.json", "--input", "example-k2.json"], "outputs/example-k2.audit.json"),
    (["myerson", "--input", "empty-edges.json"], "outputs/empty-edges.myerson.json"),
    (["verify-axioms", "--input", "corpus/weak-01.json"], "outputs/weak-01.verify-axioms.json"),
    (["verify-axioms", "--input", "corpus/weak-02.json"], "outputs/weak-02.verify-axioms.json"),
    (["verify-axioms", "--input", "corpus/weak-03.json"], "outputs/weak-03.verify-axioms.json"),
    (["estimate", "--samples", "20000", "--seed", "1", "--input", "example-k2.json"], "outputs/example-k2.estimate.json"),
]


def golden_outputs(golden_dir) -> dict[str, tuple[str, int]]:
    """Run every golden command; maps output path to ``(stdout, exit code)``."""
    out = {}
    cwd = os.getcwd()
    os.chdir(golden_dir)
    try:
        for args, target in GOLDEN_COMMANDS:
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = main(args)
            out[target] = (buf.getvalue(), code)
    finally:
        os.chdir(cwd)
    out["theorem-strict.json"] = (_dump(theorem_suite()), 0)
    out["theorem-convex.json"] = (_dump(theorem_suite(eps=0)), 0)
    out["stability-superadditive.json"] = (_dump(stability_suite()), 0)
    return out
