"""Property-verification harness over graph corpora.

Each property is an implication; a graph that fails the hypothesis is
counted ``inapplicable``, never as a pass.  Violations carry re-checkable
payloads in the original graph's labels.  Since every property checked
here is a theorem, any violation on any corpus is an implementation bug;
the harness is a differential test of the whole stack.

Corpora come in three modes: exhaustive (all labeled graphs on n <= 7
vertices, in increasing order of the upper-triangle edge code), random
(independent G(n, p) draws from the SplitMix64 stream, one draw per
vertex pair in sorted order), and external (a graph6 file, one graph per
line).
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Iterable, Iterator, Optional

from . import __version__
from .connectivity import is_k_connected, vertex_connectivity
from .extendibility import (
    hall_surplus_check,
    is_k_extendible,
    extendibility_number,
    peel,
)
from .graphs import (
    Bipartition,
    Graph,
    GraphParseError,
    bipartition,
    from_edges,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .jsonio import (
    certificate_json,
    cut_witness_json,
    deficiency_json,
    hall_violator_json,
    matching_json,
)
from .matching import (
    Matching,
    has_perfect_matching,
    koenig_ore_deficiency,
    matching_number,
)
from .oracles import brute_force_deficiency
from .rng import SplitMix64

HOLDS = "holds"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"

PROPERTY_IDS = ("P21", "P22", "P23", "T31", "T32", "KO", "MONO-EXT")

PROPERTY_DESCRIPTIONS = {
    "P21": "k-extendible implies (k-1)-extendible",
    "P22": "1-extendible implies 2-connected",
    "P23": "peeling an edge from a k-extendible graph (k >= 2) leaves a "
           "(k-1)-extendible graph",
    "T31": "k-extendible implies (k+1)-connected",
    "T32": "definitional and Hall-surplus verdicts agree on balanced "
           "bipartite graphs",
    "KO": "matching number equals |X| minus the maximum deficiency, with "
          "attaining witness",
    "MONO-EXT": "levels passing the extendibility check form a prefix "
                "ending at the extendibility number, within (n-2)/2",
}

ZERO_EXTENDIBLE_NOTE = ("0-extendible is taken to mean: at least 2 vertices, "
                        "connected, and a perfect matching exists")

EXHAUSTIVE_MAX_N = 7


@dataclass(frozen=True)
class CorpusSpec:
    mode: str  # exhaustive | random | external
    n: int = 0
    count: int = 0
    seed: int = 0
    edge_probability: float = 0.5
    source: Optional[str] = None
    strict: bool = True


@dataclass(frozen=True)
class PropertyOutcome:
    property_id: str
    graph_index: int
    graph6: Optional[str]
    status: str
    detail: Optional[dict[str, Any]] = None


@dataclass(frozen=True)
class Report:
    corpus: dict[str, Any]
    kmax: int
    graphs_processed: int
    properties: dict[str, dict[str, int]]
    violations: tuple[dict[str, Any], ...]
    notes: tuple[str, ...]
    version: str
    wall_time_ms: float


def validate_corpus_spec(spec: CorpusSpec) -> None:
    if spec.mode == "exhaustive":
        if not 0 <= spec.n <= EXHAUSTIVE_MAX_N:
            raise ValueError(
                f"exhaustive mode supports 0 <= n <= {EXHAUSTIVE_MAX_N}")
    elif spec.mode == "random":
        if spec.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if spec.count < 1:
            raise ValueError("random mode needs count >= 1")
        if not 0.0 <= spec.edge_probability <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
    elif spec.mode == "external":
        if not spec.source:
            raise ValueError("external mode needs a source path")
    else:
        raise ValueError(f"unknown corpus mode {spec.mode!r}")


def random_graph(n: int, rng: SplitMix64, p: float = 0.5) -> Graph:
    """One G(n, p) draw, consuming one rng value per vertex pair in sorted
    order."""
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if rng.next_float() < p]
    return from_edges(n, edges)


def generate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    validate_corpus_spec(spec)
    if spec.mode == "exhaustive":
        pairs = list(combinations(range(spec.n), 2))
        for code in range(1 << len(pairs)):
            yield from_edges(spec.n, (pairs[j] for j in range(len(pairs))
                                      if code >> j & 1))
    elif spec.mode == "random":
        rng = SplitMix64(spec.seed)
        for _ in range(spec.count):
            yield random_graph(spec.n, rng, spec.edge_probability)
    else:
        assert spec.source is not None
        with open(spec.source, "r", encoding="ascii") as handle:
            for lineno, line in enumerate(handle, start=1):
                stripped = line.strip()
                if not stripped:
                    continue
                try:
                    yield parse_graph6(stripped)
                except GraphParseError as exc:
                    if spec.strict:
                        raise GraphParseError(
                            f"{spec.source}:{lineno}: {exc}",
                            line=lineno) from exc
                    continue


def _echo(g: Graph) -> Optional[str]:
    return to_graph6(g) if g.n <= 62 else None


def _outcome(pid: str, g: Graph, status: str,
             detail: Optional[dict[str, Any]] = None) -> PropertyOutcome:
    return PropertyOutcome(pid, -1, _echo(g), status, detail)


def verify_monotonicity(g: Graph, kmax: int) -> PropertyOutcome:
    """P21: whenever the graph is k-extendible for some 1 <= k <= kmax, it
    must be (k-1)-extendible too."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    applicable = False
    for k in range(1, kmax + 1):
        cert = is_k_extendible(g, k)
        if not cert.verdict:
            continue
        applicable = True
        prev = is_k_extendible(g, k - 1)
        if not prev.verdict:
            return _outcome("P21", g, VIOLATED, {
                "k": k,
                "certificate": certificate_json(cert),
                "lower_certificate": certificate_json(prev),
            })
    if not applicable:
        return _outcome("P21", g, INAPPLICABLE,
                        {"reason": f"not k-extendible for any k in 1..{kmax}"})
    return _outcome("P21", g, HOLDS)


def verify_one_ext_two_conn(g: Graph) -> PropertyOutcome:
    """P22: a 1-extendible graph must be 2-connected."""
    cert = is_k_extendible(g, 1)
    if not cert.verdict:
        return _outcome("P22", g, INAPPLICABLE,
                        {"reason": "not 1-extendible"})
    if is_k_connected(g, 2):
        return _outcome("P22", g, HOLDS)
    kappa, witness = vertex_connectivity(g)
    return _outcome("P22", g, VIOLATED, {
        "connectivity": kappa,
        "cut_witness": cut_witness_json(witness),
    })


def verify_peeling(g: Graph, k: int) -> PropertyOutcome:
    """P23 at one level: if the graph is k-extendible (k >= 2), removing
    both endpoints of any edge leaves a (k-1)-extendible graph."""
    if k < 2:
        raise ValueError("peeling property needs k >= 2")
    cert = is_k_extendible(g, k)
    if not cert.verdict:
        return _outcome("P23", g, INAPPLICABLE,
                        {"reason": f"not {k}-extendible"})
    for edge in g.edges():
        peeled, relabel = peel(g, edge)
        sub = is_k_extendible(peeled, k - 1)
        if not sub.verdict:
            back = {new: old for old, new in relabel.items()}
            witness = None
            if sub.witness is not None:
                witness = matching_json(Matching.of(
                    (back[u], back[v]) for u, v in sub.witness.edges))
            return _outcome("P23", g, VIOLATED, {
                "k": k,
                "edge": list(edge),
                "peeled_reason": sub.reason,
                "peeled_witness_original_labels": witness,
            })
    return _outcome("P23", g, HOLDS)


def verify_connectivity_bound(g: Graph, kmax: int) -> PropertyOutcome:
    """T31: a k-extendible graph must be (k+1)-connected, 1 <= k <= kmax."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    applicable = False
    for k in range(1, kmax + 1):
        if not is_k_extendible(g, k).verdict:
            continue
        applicable = True
        if not is_k_connected(g, k + 1):
            kappa, witness = vertex_connectivity(g)
            return _outcome("T31", g, VIOLATED, {
                "k": k,
                "connectivity": kappa,
                "cut_witness": cut_witness_json(witness),
            })
    if not applicable:
        return _outcome("T31", g, INAPPLICABLE,
                        {"reason": f"not k-extendible for any k in 1..{kmax}"})
    return _outcome("T31", g, HOLDS)


def verify_bipartite_characterization(g: Graph, kmax: int) -> PropertyOutcome:
    """T32: on connected balanced bipartite graphs with a perfect matching,
    the definitional verdict equals the Hall-surplus verdict at every level
    k <= kmax admitted by the size hypothesis."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    if not is_connected(g):
        return _outcome("T32", g, INAPPLICABLE, {"reason": "not connected"})
    bp = bipartition(g)
    if not isinstance(bp, Bipartition):
        return _outcome("T32", g, INAPPLICABLE, {"reason": "not bipartite"})
    if len(bp.x) != len(bp.y):
        return _outcome("T32", g, INAPPLICABLE,
                        {"reason": "bipartition is unbalanced"})
    if not has_perfect_matching(g):
        return _outcome("T32", g, INAPPLICABLE,
                        {"reason": "no perfect matching"})
    applicable = False
    for k in range(1, kmax + 1):
        if g.n < 2 * k + 2:
            continue
        applicable = True
        cert = is_k_extendible(g, k)
        violator = hall_surplus_check(g, bp, k)
        if cert.verdict != (violator is None):
            return _outcome("T32", g, VIOLATED, {
                "k": k,
                "definitional": certificate_json(cert),
                "hall_violator": hall_violator_json(violator)
                if violator else None,
            })
    if not applicable:
        return _outcome("T32", g, INAPPLICABLE,
                        {"reason": f"fewer than 2k+2 vertices for every "
                                   f"k in 1..{kmax}"})
    return _outcome("T32", g, HOLDS)


def verify_koenig_ore(g: Graph) -> PropertyOutcome:
    """KO: the matching number equals |X| minus the maximum deficiency over
    subsets of X, and the polynomial witness attains that maximum."""
    bp = bipartition(g)
    if not isinstance(bp, Bipartition):
        return _outcome("KO", g, INAPPLICABLE, {"reason": "not bipartite"})
    oracle_value = brute_force_deficiency(g, bp)
    witness = koenig_ore_deficiency(g, bp)
    alpha = matching_number(g)
    attained = witness_deficiency(g, witness.witness)
    if (alpha != len(bp.x) - oracle_value or witness.value != oracle_value
            or attained != witness.value):
        return _outcome("KO", g, VIOLATED, {
            "matching_number": alpha,
            "x_size": len(bp.x),
            "oracle_max_deficiency": oracle_value,
            "witness": deficiency_json(witness),
            "witness_attains": attained,
        })
    return _outcome("KO", g, HOLDS)


def witness_deficiency(g: Graph, s: tuple[int, ...]) -> int:
    nbhd = 0
    for v in s:
        nbhd |= g.adj[v]
    return len(s) - nbhd.bit_count()


def verify_extendibility_profile(g: Graph) -> PropertyOutcome:
    """MONO-EXT: the passing levels form the prefix 0..ext within the size
    bound (n-2)/2."""
    ext = extendibility_number(g)
    if ext is None:
        return _outcome("MONO-EXT", g, INAPPLICABLE,
                        {"reason": "not 0-extendible"})
    bound = (g.n - 2) // 2
    if ext > bound:
        return _outcome("MONO-EXT", g, VIOLATED,
                        {"extendibility_number": ext, "size_bound": bound})
    for k in range(bound + 1):
        if is_k_extendible(g, k).verdict != (k <= ext):
            return _outcome("MONO-EXT", g, VIOLATED, {
                "extendibility_number": ext,
                "k": k,
                "certificate": certificate_json(is_k_extendible(g, k)),
            })
    return _outcome("MONO-EXT", g, HOLDS)


def _verify_graph(g: Graph, properties: tuple[str, ...],
                  kmax: int) -> list[PropertyOutcome]:
    out: list[PropertyOutcome] = []
    for pid in properties:
        if pid == "P21":
            out.append(verify_monotonicity(g, kmax))
        elif pid == "P22":
            out.append(verify_one_ext_two_conn(g))
        elif pid == "P23":
            out.append(_peeling_over_levels(g, kmax))
        elif pid == "T31":
            out.append(verify_connectivity_bound(g, kmax))
        elif pid == "T32":
            out.append(verify_bipartite_characterization(g, kmax))
        elif pid == "KO":
            out.append(verify_koenig_ore(g))
        elif pid == "MONO-EXT":
            out.append(verify_extendibility_profile(g))
        else:
            raise ValueError(f"unknown property id {pid!r}")
    return out


def _peeling_over_levels(g: Graph, kmax: int) -> PropertyOutcome:
    """Fold verify_peeling over k in 2..kmax into one outcome: violated if
    any level is, holds if any level applied cleanly, else inapplicable."""
    if kmax < 2:
        return _outcome("P23", g, INAPPLICABLE,
                        {"reason": "kmax below 2"})
    held = False
    for k in range(2, kmax + 1):
        outcome = verify_peeling(g, k)
        if outcome.status == VIOLATED:
            return outcome
        if outcome.status == HOLDS:
            held = True
    if held:
        return _outcome("P23", g, HOLDS)
    return _outcome("P23", g, INAPPLICABLE,
                    {"reason": f"not k-extendible for any k in 2..{kmax}"})


def _task(args: tuple[int, Graph, tuple[str, ...], int]
          ) -> tuple[int, list[PropertyOutcome]]:
    index, g, properties, kmax = args
    outcomes = _verify_graph(g, properties, kmax)
    return index, [dataclasses.replace(o, graph_index=index) for o in outcomes]


def run_corpus(spec: CorpusSpec, properties: Iterable[str], kmax: int = 3,
               workers: int = 1) -> Report:
    """Run the selected properties over every corpus graph and aggregate.
    Output is independent of the worker count: results are folded in graph
    order, properties in canonical order."""
    selected = tuple(p for p in PROPERTY_IDS if p in set(properties))
    unknown = set(properties) - set(PROPERTY_IDS)
    if unknown:
        raise ValueError(f"unknown property ids: {sorted(unknown)}")
    if not selected:
        raise ValueError("property set must not be empty")
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    validate_corpus_spec(spec)
    start = time.perf_counter()
    tallies = {pid: {HOLDS: 0, VIOLATED: 0, INAPPLICABLE: 0}
               for pid in selected}
    violations: list[dict[str, Any]] = []
    processed = 0
    tasks = ((i, g, selected, kmax)
             for i, g in enumerate(generate_corpus(spec)))
    if workers > 1:
        with Pool(workers) as pool:
            results: Iterable = pool.imap(_task, tasks, chunksize=64)
            processed = _fold(results, tallies, violations)
    else:
        processed = _fold(map(_task, tasks), tallies, violations)
    notes = ()
    if {"P21", "MONO-EXT"} & set(selected):
        notes = (ZERO_EXTENDIBLE_NOTE,)
    wall = (time.perf_counter() - start) * 1000.0
    return Report(
        corpus=_spec_echo(spec),
        kmax=kmax,
        graphs_processed=processed,
        properties=tallies,
        violations=tuple(violations),
        notes=notes,
        version=__version__,
        wall_time_ms=wall,
    )


def _fold(results: Iterable[tuple[int, list[PropertyOutcome]]],
          tallies: dict[str, dict[str, int]],
          violations: list[dict[str, Any]]) -> int:
    processed = 0
    for _, outcomes in results:
        processed += 1
        for o in outcomes:
            tallies[o.property_id][o.status] += 1
            if o.status == VIOLATED:
                violations.append({
                    "property": o.property_id,
                    "graph_index": o.graph_index,
                    "graph6": o.graph6,
                    "payload": o.detail,
                })
    return processed


def _spec_echo(spec: CorpusSpec) -> dict[str, Any]:
    if spec.mode == "exhaustive":
        return {"mode": spec.mode, "n": spec.n}
    if spec.mode == "random":
        return {"mode": spec.mode, "n": spec.n, "count": spec.count,
                "seed": spec.seed, "edge_probability": spec.edge_probability}
    return {"mode": spec.mode, "source": spec.source, "strict": spec.strict}


def report_json(report: Report, include_timing: bool = False) -> dict[str, Any]:
    """JSON view of a report.  Timing is opted into because byte-identical
    output across runs and worker counts is part of the contract."""
    return {
        "tool": "kextend",
        "version": report.version,
        "corpus": report.corpus,
        "kmax": report.kmax,
        "graphs_processed": report.graphs_processed,
        "properties": {pid: dict(t) for pid, t in report.properties.items()},
        "violations": list(report.violations),
        "notes": list(report.notes),
        "wall_time_ms": report.wall_time_ms if include_timing else None,
    }
