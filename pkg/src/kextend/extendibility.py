"""k-extendibility certificates.

A graph is k-extendible when it has at least 2k+2 vertices, is connected,
has a perfect matching, and every matching of size k extends to a perfect
matching.  The definitional checker tests those four conditions in that
fixed order and reports the first failure, so reason codes are
deterministic; the 0-extendible case reduces to the first three conditions
because the only size-0 matching is empty.

For balanced bipartite graphs the same verdict follows from a surplus
condition on one side: |N(A)| >= |A| + k for every nonempty A within X of
size at most |X| - k.  The subset scan here is intentionally exponential;
it is the independent second route that the definitional checker is
differentially tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .graphs import (
    Bipartition,
    Edge,
    Graph,
    VertexSet,
    bits,
    check_bipartition,
    delete_vertices,
    is_connected,
    neighborhood,
    vertex_mask,
)
from .matching import (
    Matching,
    enumerate_matchings,
    extends_to_perfect,
    has_perfect_matching,
)

SIZE_TOO_SMALL = "SizeTooSmall"
DISCONNECTED = "Disconnected"
NO_PERFECT_MATCHING = "NoPerfectMatching"
BLOCKED_MATCHING = "BlockedMatching"

# yes-certificates carry at most this many (matching, extension) pairs
EXHIBIT_LIMIT = 2

HALL_SCAN_MAX_SIDE = 20


@dataclass(frozen=True)
class ExtendibilityCertificate:
    """Re-checkable verdict for one extendibility level.

    No-verdicts name the first failed condition; a BlockedMatching failure
    carries the lexicographically least size-k matching with no perfect
    extension.  Yes-verdicts carry a bounded sample of tested matchings
    with one extension each."""

    verdict: bool
    k: int
    reason: Optional[str] = None
    witness: Optional[Matching] = None
    exhibit: tuple[tuple[Matching, Matching], ...] = ()


@dataclass(frozen=True)
class HallViolator:
    """Subset of X with too small a neighborhood for level k."""

    a: VertexSet
    neighborhood_size: int


def is_k_extendible(g: Graph, k: int) -> ExtendibilityCertificate:
    if k < 0:
        raise ValueError("extendibility level must be nonnegative")
    return _certificate(g, k)


@lru_cache(maxsize=1 << 15)
def _certificate(g: Graph, k: int) -> ExtendibilityCertificate:
    if g.n < 2 * k + 2:
        return ExtendibilityCertificate(False, k, reason=SIZE_TOO_SMALL)
    if not is_connected(g):
        return ExtendibilityCertificate(False, k, reason=DISCONNECTED)
    if not has_perfect_matching(g):
        return ExtendibilityCertificate(False, k, reason=NO_PERFECT_MATCHING)
    exhibit: list[tuple[Matching, Matching]] = []
    for m in enumerate_matchings(g, k):
        extension = extends_to_perfect(g, m)
        if extension is None:
            return ExtendibilityCertificate(False, k, reason=BLOCKED_MATCHING,
                                            witness=m)
        if len(exhibit) < EXHIBIT_LIMIT:
            exhibit.append((m, extension))
    return ExtendibilityCertificate(True, k, exhibit=tuple(exhibit))


def extendibility_number(g: Graph) -> Optional[int]:
    """Largest k for which the graph is k-extendible, or None when it is
    not even 0-extendible.  Every level up to the size bound (n-2)/2 is
    checked outright; levels beyond it fail on size alone, so monotonicity
    is never assumed."""
    passing = [k for k in range((g.n - 2) // 2 + 1)
               if _certificate(g, k).verdict]
    return max(passing) if passing else None


def hall_surplus_check(g: Graph, bp: Bipartition,
                       k: int) -> Optional[HallViolator]:
    """Exhaustive surplus scan: None when |N(A)| >= |A| + k for every
    A within X, 1 <= |A| <= |X| - k; otherwise the lexicographically least
    violator of minimum size.  Vacuously None when |X| - k < 1."""
    _check_balanced(g, bp)
    if k < 1:
        raise ValueError("surplus level must be at least 1")
    if len(bp.x) > HALL_SCAN_MAX_SIDE:
        raise ValueError(f"subset scan limited to |X| <= {HALL_SCAN_MAX_SIDE}")
    for size in range(1, len(bp.x) - k + 1):
        for subset in combinations(bp.x, size):
            nbhd = 0
            for v in subset:
                nbhd |= g.adj[v]
            if nbhd.bit_count() < size + k:
                return HallViolator(subset, nbhd.bit_count())
    return None


def is_k_extendible_bipartite(g: Graph, bp: Bipartition,
                              k: int) -> ExtendibilityCertificate:
    """Decide k-extendibility of a balanced bipartite graph through the
    surplus condition instead of matching enumeration.  Agrees with
    is_k_extendible on every input; hypothesis failures reuse the
    definitional reason codes."""
    _check_balanced(g, bp)
    if k < 1:
        raise ValueError("extendibility level must be at least 1 here")
    if g.n < 2 * k + 2:
        return ExtendibilityCertificate(False, k, reason=SIZE_TOO_SMALL)
    if not is_connected(g):
        return ExtendibilityCertificate(False, k, reason=DISCONNECTED)
    if not has_perfect_matching(g):
        return ExtendibilityCertificate(False, k, reason=NO_PERFECT_MATCHING)
    violator = hall_surplus_check(g, bp, k)
    if violator is None:
        return ExtendibilityCertificate(True, k)
    witness = _blocked_matching_for(g, bp, k, violator)
    return ExtendibilityCertificate(False, k, reason=BLOCKED_MATCHING,
                                    witness=witness)


def _check_balanced(g: Graph, bp: Bipartition) -> None:
    check_bipartition(g, bp)
    if len(bp.x) != len(bp.y):
        raise ValueError("sides must be balanced; unbalanced graphs have no "
                         "perfect matching")


def _blocked_matching_for(g: Graph, bp: Bipartition, k: int,
                          violator: HallViolator) -> Matching:
    """Turn a surplus violator A into a size-k matching with no perfect
    extension: greedily match vertices of N(A) to X minus A, which strands
    A, then pad with edges avoiding A.  The candidate is re-checked; if the
    construction falls short, fall back to the lexicographically least
    failing matching."""
    a_mask = vertex_mask(violator.a)
    x_free = vertex_mask(bp.x) & ~a_mask
    picked: list[Edge] = []
    used = 0
    for y in neighborhood(g, violator.a):
        if used >> y & 1:
            continue
        partners = g.adj[y] & x_free & ~used
        if partners:
            x = next(bits(partners))
            picked.append((x, y) if x < y else (y, x))
            used |= 1 << x | 1 << y
        if len(picked) == k:
            break
    if len(picked) < k:
        for u, v in g.edges():
            pair = 1 << u | 1 << v
            if pair & (used | a_mask):
                continue
            picked.append((u, v))
            used |= pair
            if len(picked) == k:
                break
    if len(picked) == k:
        candidate = Matching.of(picked)
        if extends_to_perfect(g, candidate) is None:
            return candidate
    for candidate in enumerate_matchings(g, k):
        if extends_to_perfect(g, candidate) is None:
            return candidate
    raise RuntimeError("surplus violator exists but every size-k matching "
                       "extends; checkers disagree")


def peel(g: Graph, e: tuple[int, int]) -> tuple[Graph, dict[int, int]]:
    """Remove both endpoints of an edge.  Returns the reduced graph and the
    old-to-new relabeling map of the survivors."""
    u, v = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return delete_vertices(g, (u, v))
