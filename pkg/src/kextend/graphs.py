"""Immutable simple graphs on dense vertex ids 0..n-1.

Adjacency is stored as one neighbor bitmask per vertex, which keeps every
downstream algorithm array-indexed and makes graphs hashable and safe to
share between workers.  All "mutations" (vertex deletion, induced
subgraphs) copy; deletions return a relabeling map so witnesses can be
reported in the original graph's labels.

Two text formats are supported:

* graph6, short form only (n <= 62): one printable line per graph.  The
  header byte is chr(n + 63); the upper-triangle adjacency bits follow in
  column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into
  6-bit groups, zero-padded, each group emitted as chr(value + 63).
* plain edge lists: first token is n, then one "u v" pair per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

GRAPH6_MAX_N = 62

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Malformed graph text.  ``offset`` is a byte offset for graph6 input,
    ``line`` a 1-based line number for edge-list input."""

    def __init__(self, message: str, *, offset: int | None = None,
                 line: int | None = None):
        super().__init__(message)
        self.offset = offset
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u, v in combinations(range(self.n), 2):
            if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return tuple(bits(self.adj[v]))

    def edges(self) -> Iterator[Edge]:
        """Canonical edge stream: u < v, sorted lexicographically."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def as_vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonical form: sorted and duplicate-free."""
    return tuple(sorted(set(vertices)))


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    out = as_vertex_set(s)
    for v in out:
        g._check_vertex(v)
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable; duplicates collapse, orientation
    is normalized.  Self-loops are rejected."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides {0..a-1} and {a..a+b-1}."""
    return from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


# graph6 encoding


def parse_graph6(text: str) -> Graph:
    """Decode one canonical short-form graph6 line."""
    s = text.rstrip("\n")
    if not s:
        raise GraphParseError("empty graph6 string", offset=0)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphParseError("non-ascii byte in graph6 string",
                              offset=exc.start) from None
    head = data[0]
    if head == 126:
        raise GraphParseError(
            "long-form graph6 header (n > 62) is not supported", offset=0)
    if not 63 <= head <= 126:
        raise GraphParseError(f"header byte {head} outside 63..126", offset=0)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphParseError(
            f"truncated graph6 body: expected {nbytes} bytes, got {len(body)}",
            offset=len(data))
    if len(body) > nbytes:
        raise GraphParseError("trailing garbage after graph6 body",
                              offset=1 + nbytes)
    bitstream = []
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"body byte {byte} outside 63..126",
                                  offset=1 + i)
        group = byte - 63
        bitstream.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    for j in range(nbits, len(bitstream)):
        if bitstream[j]:
            raise GraphParseError("nonzero padding bits", offset=1 + j // 6)
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode as one canonical short-form graph6 line (n <= 62)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, "
                         f"got n={g.n}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for v in range(1, g.n):
        for u in range(v):
            group = group << 1 | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# edge-list text


def parse_edge_list(text: str) -> Graph:
    """Parse "n" followed by "u v" lines.  Blank lines are skipped."""
    lines = text.splitlines()
    n: Optional[int] = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError(
                    f"line {lineno}: header must be a single vertex count",
                    line=lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphParseError(
                    f"line {lineno}: vertex count {tokens[0]!r} is not an "
                    f"integer", line=lineno) from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count",
                                      line=lineno)
            header_line = lineno
            continue
        if len(tokens) != 2:
            raise GraphParseError(
                f"line {lineno}: expected 'u v', got {raw!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(
                f"line {lineno}: non-integer endpoint in {raw!r}",
                line=lineno) from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at {u}",
                                  line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(
                f"line {lineno}: endpoint out of range 0..{n - 1}",
                line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing vertex-count header", line=header_line)
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


# neighborhoods, degrees, deletion, components


def neighborhood(g: Graph, s: Iterable[int],
                 within: Iterable[int] | None = None) -> VertexSet:
    """Vertices adjacent to at least one member of ``s``; may intersect
    ``s``.  With ``within``, both the sources and the reported neighbors are
    restricted to the induced subgraph on ``within``."""
    src = check_vertex_set(g, s)
    if within is None:
        scope = (1 << g.n) - 1
    else:
        scope = vertex_mask(check_vertex_set(g, within))
    out = 0
    for v in src:
        if scope >> v & 1:
            out |= g.adj[v] & scope
    return tuple(bits(out))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(m.bit_count() for m in g.adj)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus s, relabeled densely.  Returns the graph
    and the old-to-new relabeling map for the surviving vertices."""
    drop = vertex_mask(check_vertex_set(g, s))
    keep = [v for v in range(g.n) if not drop >> v & 1]
    relabel = {old: new for new, old in enumerate(keep)}
    adj = [0] * len(keep)
    for old in keep:
        new = relabel[old]
        for w in bits(g.adj[old] & ~drop):
            adj[new] |= 1 << relabel[w]
    return Graph(len(keep), tuple(adj)), relabel


def components(g: Graph) -> list[VertexSet]:
    """Maximal connected pieces, each sorted, ordered by minimum member."""
    seen = 0
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# bipartition


@dataclass(frozen=True)
class Bipartition:
    """Ordered sides (X, Y): disjoint, covering, both independent."""

    x: VertexSet
    y: VertexSet


@dataclass(frozen=True)
class OddCycle:
    """Closed odd walk witnessing non-bipartiteness; ``vertices`` lists the
    cycle once, consecutive entries adjacent, last adjacent to first."""

    vertices: tuple[int, ...]


def check_bipartition(g: Graph, bp: Bipartition) -> None:
    x = check_vertex_set(g, bp.x)
    y = check_vertex_set(g, bp.y)
    if x != bp.x or y != bp.y:
        raise ValueError("bipartition sides must be sorted and duplicate-free")
    xm, ym = vertex_mask(x), vertex_mask(y)
    if xm & ym:
        raise ValueError("bipartition sides intersect")
    if (xm | ym) != (1 << g.n) - 1:
        raise ValueError("bipartition does not cover all vertices")
    for v in x:
        if g.adj[v] & xm:
            raise ValueError(f"edge inside X at vertex {v}")
    for v in y:
        if g.adj[v] & ym:
            raise ValueError(f"edge inside Y at vertex {v}")


def bipartition(g: Graph) -> Bipartition | OddCycle:
    """Two-color the graph.  Per component, the side holding its minimum
    vertex goes to X.  Returns an OddCycle witness when no 2-coloring
    exists."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt: list[int] = []
            for v in queue:
                for w in bits(g.adj[v]):
                    if color[w] == -1:
                        color[w] = color[v] ^ 1
                        parent[w] = v
                        nxt.append(w)
                    elif color[w] == color[v]:
                        return OddCycle(_odd_cycle(parent, v, w))
            queue = nxt
    xs = tuple(v for v in range(g.n) if color[v] == 0)
    ys = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(xs, ys)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    """Cycle through the conflicting edge (u, v) and the BFS-tree paths to
    their lowest common ancestor."""
    up, vp = [u], [v]
    seen = {u: 0}
    w = u
    while parent[w] != -1:
        w = parent[w]
        seen[w] = len(up)
        up.append(w)
    w = v
    while w not in seen:
        w = parent[w]
        vp.append(w)
    lca = w
    cycle = up[:seen[lca] + 1] + vp[-2::-1]
    return tuple(cycle)


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)
