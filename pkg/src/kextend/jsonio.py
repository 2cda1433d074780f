"""JSON views of graphs, certificates, and witnesses.

Every witness is serialized in the labels of the original graph, as
explicit sorted lists, so outputs diff cleanly and re-verify without
context.
"""

from __future__ import annotations

from typing import Any, Optional

from .connectivity import CutWitness
from .extendibility import ExtendibilityCertificate, HallViolator
from .graphs import Bipartition, OddCycle
from .matching import DeficiencyWitness, Matching


def matching_json(m: Matching) -> list[list[int]]:
    return [[u, v] for u, v in m.edges]


def certificate_json(cert: ExtendibilityCertificate) -> dict[str, Any]:
    return {
        "k": cert.k,
        "verdict": "yes" if cert.verdict else "no",
        "reason": cert.reason,
        "witness": matching_json(cert.witness) if cert.witness else None,
        "exhibit": [
            {"matching": matching_json(m), "extension": matching_json(ext)}
            for m, ext in cert.exhibit
        ] or None,
    }


def hall_violator_json(v: HallViolator) -> dict[str, Any]:
    return {"a": list(v.a), "neighborhood_size": v.neighborhood_size}


def cut_witness_json(w: Optional[CutWitness]) -> Optional[dict[str, Any]]:
    if w is None:
        return None
    return {"cut": list(w.cut), "separated": list(w.separated)}


def deficiency_json(w: DeficiencyWitness) -> dict[str, Any]:
    return {"value": w.value, "witness": list(w.witness)}


def bipartition_json(bp: Bipartition) -> dict[str, Any]:
    return {"x": list(bp.x), "y": list(bp.y)}


def odd_cycle_json(c: OddCycle) -> dict[str, Any]:
    return {"vertices": list(c.vertices)}
