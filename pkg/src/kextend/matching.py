"""Matchings: augmenting-path search with blossom contraction, matching
enumeration, perfect-matching extension, and the bipartite deficiency
witness.

The search engine follows the classic contracted-blossom scheme: grow an
alternating forest from the exposed vertices, contract odd cycles into
their base via a ``base[]`` array, and recover an explicit augmenting
path from the parent links.  All scans run in ascending vertex order so
results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graphs import (
    Bipartition,
    Edge,
    Graph,
    VertexSet,
    bits,
    check_bipartition,
    vertex_mask,
)


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges in canonical sorted order."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        used = 0
        for u, v in self.edges:
            if not 0 <= u < v:
                raise ValueError(f"edge ({u}, {v}) not in canonical u < v form")
            pair = 1 << u | 1 << v
            if used & pair:
                raise ValueError(f"edge ({u}, {v}) shares a vertex")
            used |= pair
        if tuple(sorted(self.edges)) != self.edges:
            raise ValueError("edges must be sorted")

    @staticmethod
    def of(edges: Iterable[tuple[int, int]]) -> "Matching":
        canon = sorted((u, v) if u < v else (v, u) for (u, v) in edges)
        return Matching(tuple(canon))

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> VertexSet:
        """V(M): every endpoint of a matched edge, sorted."""
        return tuple(bits(self.covered_mask()))

    def covered_mask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return mask


@dataclass(frozen=True)
class AlternatingPath:
    """Augmenting path: endpoints exposed, edges alternating unmatched and
    matched, odd number of edges."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class DeficiencyWitness:
    value: int
    witness: VertexSet


def validate_matching(g: Graph, m: Matching) -> None:
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")


def _match_array(g: Graph, m: Matching) -> list[int]:
    match = [-1] * g.n
    for u, v in m.edges:
        match[u] = v
        match[v] = u
    return match


def _matching_of_array(match: list[int]) -> Matching:
    return Matching(tuple((v, w) for v, w in enumerate(match) if -1 < v < w))


def _augmenting_path_from(adj: tuple[int, ...], n: int, mask: int,
                          match: list[int], root: int) -> list[int] | None:
    """Alternating-forest search from one exposed root, contracting
    blossoms through ``base``.  Returns an explicit augmenting path
    (root last) or None when the tree is Hungarian."""
    parent = [-1] * n
    base = list(range(n))
    queued = bytearray(n)
    queued[root] = 1
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in bits(adj[v] & mask):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                stem = _lowest_common_base(base, match, parent, v, to)
                in_blossom = bytearray(n)
                _mark_blossom(base, match, parent, in_blossom, v, stem, to)
                _mark_blossom(base, match, parent, in_blossom, to, stem, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stem
                        if not queued[i]:
                            queued[i] = 1
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return _recover_path(parent, match, to)
                queued[match[to]] = 1
                queue.append(match[to])
    return None


def _lowest_common_base(base: list[int], match: list[int], parent: list[int],
                        a: int, b: int) -> int:
    seen = set()
    v = base[a]
    while True:
        seen.add(v)
        if match[v] == -1:
            break
        v = base[parent[match[v]]]
    v = base[b]
    while v not in seen:
        v = base[parent[match[v]]]
    return v


def _mark_blossom(base: list[int], match: list[int], parent: list[int],
                  flags: bytearray, v: int, stem: int, child: int) -> None:
    while base[v] != stem:
        flags[base[v]] = 1
        flags[base[match[v]]] = 1
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _recover_path(parent: list[int], match: list[int], leaf: int) -> list[int]:
    path = [leaf]
    v = parent[leaf]
    while True:
        path.append(v)
        if match[v] == -1:
            break
        path.append(match[v])
        v = parent[match[v]]
    return path


def _grow_maximum(adj: tuple[int, ...], n: int, mask: int,
                  match: list[int]) -> None:
    """Augment ``match`` to maximum inside ``mask``, scanning exposed roots
    ascending.  A root with no augmenting path now never gains one."""
    for root in bits(mask):
        if match[root] != -1 or not adj[root] & mask:
            continue
        path = _augmenting_path_from(adj, n, mask, match, root)
        if path:
            _flip(match, path)


def _greedy_seed(adj: tuple[int, ...], mask: int, match: list[int]) -> None:
    for u in bits(mask):
        if match[u] == -1:
            for v in bits(adj[u] & mask):
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break


def _flip(match: list[int], path: list[int]) -> None:
    for i in range(0, len(path) - 1, 2):
        a, b = path[i], path[i + 1]
        match[a] = b
        match[b] = a


def _mask_maximum_matching(adj: tuple[int, ...], n: int, mask: int) -> list[int]:
    match = [-1] * n
    _greedy_seed(adj, mask, match)
    _grow_maximum(adj, n, mask, match)
    return match


def find_augmenting_path(g: Graph, m: Matching) -> Optional[AlternatingPath]:
    """An augmenting path for ``m``, or None exactly when ``m`` is maximum.
    Roots are tried in ascending order; the path is oriented so its first
    endpoint is the smaller one."""
    validate_matching(g, m)
    match = _match_array(g, m)
    mask = (1 << g.n) - 1
    for root in range(g.n):
        if match[root] != -1 or not g.adj[root]:
            continue
        path = _augmenting_path_from(g.adj, g.n, mask, match, root)
        if path:
            if path[0] > path[-1]:
                path.reverse()
            return AlternatingPath(tuple(path))
    return None


def _check_augmenting(g: Graph, m: Matching, p: AlternatingPath) -> None:
    vs = p.vertices
    if len(vs) < 2 or len(vs) % 2:
        raise ValueError("augmenting path needs an odd number of edges")
    if len(set(vs)) != len(vs):
        raise ValueError("path revisits a vertex")
    matched = set(m.edges)
    covered = m.covered_mask()
    if covered >> vs[0] & 1 or covered >> vs[-1] & 1:
        raise ValueError("path endpoints must be uncovered")
    for i in range(len(vs) - 1):
        u, v = vs[i], vs[i + 1]
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        edge = (u, v) if u < v else (v, u)
        if (edge in matched) != (i % 2 == 1):
            raise ValueError("path edges do not alternate with the matching")


def augment(g: Graph, m: Matching, p: AlternatingPath) -> Matching:
    """Symmetric difference of the matching with the path's edge set; grows
    the matching by exactly one edge and covers both path endpoints."""
    validate_matching(g, m)
    _check_augmenting(g, m, p)
    vs = p.vertices
    path_edges = {tuple(sorted((vs[i], vs[i + 1]))) for i in range(len(vs) - 1)}
    kept = [e for e in m.edges if e not in path_edges]
    gained = sorted(path_edges - set(m.edges))
    return Matching.of(kept + gained)


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching, deterministic for a fixed graph: greedy seed in
    ascending order, then augmenting-path growth."""
    return _matching_of_array(_mask_maximum_matching(g.adj, g.n, (1 << g.n) - 1))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return matching_number(g) * 2 == g.n


def extends_to_perfect(g: Graph, m: Matching) -> Optional[Matching]:
    """A perfect matching of g containing m, if one exists.  Equivalent to
    a perfect matching of the graph minus V(m), reported in the original
    labels."""
    validate_matching(g, m)
    mask = ((1 << g.n) - 1) & ~m.covered_mask()
    want = mask.bit_count()
    if want % 2:
        return None
    for v in bits(mask):
        if not g.adj[v] & mask:
            return None
    match = _mask_maximum_matching(g.adj, g.n, mask)
    if sum(1 for v in bits(mask) if match[v] != -1) != want:
        return None
    rest = [(v, w) for v, w in enumerate(match) if -1 < v < w]
    return Matching.of(list(m.edges) + rest)


def enumerate_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """All matchings of size exactly k, each once, in lexicographic order
    of their canonical edge lists.  k=0 yields only the empty matching."""
    if k < 0:
        raise ValueError("matching size must be nonnegative")
    edges = list(g.edges())

    def extend(start: int, used: int,
               chosen: list[Edge]) -> Iterator[Matching]:
        if len(chosen) == k:
            yield Matching(tuple(chosen))
            return
        room = k - len(chosen)
        for i in range(start, len(edges) - room + 1):
            u, v = edges[i]
            pair = 1 << u | 1 << v
            if used & pair:
                continue
            chosen.append(edges[i])
            yield from extend(i + 1, used | pair, chosen)
            chosen.pop()

    yield from extend(0, 0, [])


def koenig_ore_deficiency(g: Graph, bp: Bipartition) -> DeficiencyWitness:
    """Deficiency of X with a witness set attaining it.

    Runs in polynomial time: take a maximum matching, then collect the
    X-vertices reachable from the uncovered ones by alternating paths
    (unmatched towards Y, matched back towards X).  That set S satisfies
    |S| - |N(S)| = |X| - max-matching-size, the maximum possible.  When
    the deficiency is 0 the witness is the empty set."""
    check_bipartition(g, bp)
    match = _mask_maximum_matching(g.adj, g.n, (1 << g.n) - 1)
    x_mask = vertex_mask(bp.x)
    uncovered = 0
    for v in bits(x_mask):
        if match[v] == -1:
            uncovered |= 1 << v
    reach_x = uncovered
    reach_y = 0
    frontier = uncovered
    while frontier:
        ny = 0
        for v in bits(frontier):
            ny |= g.adj[v]
        ny &= ~reach_y
        reach_y |= ny
        nx = 0
        for y in bits(ny):
            if match[y] != -1:
                nx |= 1 << match[y]
        frontier = nx & ~reach_x
        reach_x |= frontier
    witness = tuple(bits(reach_x))
    return DeficiencyWitness(reach_x.bit_count() - reach_y.bit_count(), witness)
