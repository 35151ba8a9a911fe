"""Finite simple connected graphs with a canonical edge order.

Vertices are labelled ``1..n`` and edges are stored as sorted pairs
``(a, b)`` with ``a < b`` in lexicographic order.  The position of an edge
in that list is its *edge index*; variable indexing of the cut ideal is
built on top of it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

from .errors import GraphError, GuardExceeded

MAX_CYCLE_EDGES = 12
MAX_CATALOG_VERTICES = 6

Edge = tuple[int, int]


def _is_connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class Graph:
    """Labelled simple connected graph on vertices ``1..n``.

    The only edgeless graph accepted is the single vertex (``n == 1``),
    which the catalog needs; everything else must have at least one edge.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise GraphError(f"need at least one vertex, got n={self.n}")
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if a > b:
                raise GraphError(f"edge ({a},{b}) is not written as a<b")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise GraphError(f"edge ({a},{b}) has a label outside 1..{self.n}")
        for e, f in zip(edges, edges[1:]):
            if e == f:
                raise GraphError(f"duplicate edge {e}")
            if e > f:
                raise GraphError("edge list is not sorted")
        if not edges and self.n > 1:
            raise GraphError("graph has no edges")
        if not _is_connected(self.n, edges):
            raise GraphError("graph is disconnected")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """Build a graph from unordered pairs; normalises and sorts them.

        Duplicates are rejected rather than merged.
        """
        norm = []
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            norm.append((min(a, b), max(a, b)))
        if len(set(norm)) != len(norm):
            dup = next(e for e in norm if norm.count(e) > 1)
            raise GraphError(f"duplicate edge {dup}")
        return cls(n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def edge_index(self, a: int, b: int) -> int:
        key = (min(a, b), max(a, b))
        try:
            return self.edges.index(key)
        except ValueError:
            raise GraphError(f"{key} is not an edge") from None

    def to_text(self) -> str:
        return "; ".join([str(self.n)] + [f"{a} {b}" for a, b in self.edges])

    def __str__(self) -> str:
        return self.to_text()


class Deletion(NamedTuple):
    """Result of deleting one edge.

    ``vertex_map`` sends old labels to new labels (the removed free vertex,
    if any, is absent); ``edge_map[k]`` is the parent index of the new
    graph's ``k``-th edge; ``removed_vertex`` is the old label of the free
    vertex dropped along with a whisker, else ``None``.
    """

    graph: Graph
    vertex_map: dict[int, int]
    edge_map: tuple[int, ...]
    removed_vertex: int | None


_LABELLED = re.compile(r"^\s*([TPC])\s*_?\s*(\d+)\s*$", re.IGNORECASE)


def parse_graph(text: str) -> Graph:
    """Parse ``"<n>; <a> <b>; <a> <b>; ..."`` into a canonical graph.

    Separators may be ``;`` or newlines and whitespace is ignored.
    The shorthands ``T<r>``/``P<r>`` (path with r edges) and ``C<r>``
    are accepted as well.
    """
    short = _LABELLED.match(text)
    if short:
        kind, r = short.group(1).upper(), int(short.group(2))
        return cycle_graph(r) if kind == "C" else path_graph(r)
    chunks = [c.strip() for c in re.split(r"[;\n]", text)]
    chunks = [c for c in chunks if c and not c.startswith("#")]
    if not chunks:
        raise GraphError("empty graph description")
    try:
        n = int(chunks[0])
    except ValueError:
        raise GraphError(f"expected vertex count, got {chunks[0]!r}") from None
    edges = []
    for c in chunks[1:]:
        parts = c.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge {c!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"malformed edge {c!r}") from None
        edges.append((a, b))
    if not edges:
        raise GraphError("graph has no edges")
    for a, b in edges:
        for v in (a, b):
            if not 1 <= v <= n:
                raise GraphError(f"vertex label {v} outside 1..{n}")
    return Graph.from_edges(n, edges)


def path_graph(r: int) -> Graph:
    """The path ``T_r`` with ``r`` edges on vertices ``1..r+1``."""
    if r < 1:
        raise GraphError(f"path needs r >= 1 edges, got {r}")
    return Graph(r + 1, tuple((i, i + 1) for i in range(1, r + 1)))


def cycle_graph(r: int) -> Graph:
    """The cycle ``C_r`` with edges ``{i, i+1}`` and ``{1, r}``."""
    if r < 3:
        raise GraphError(f"cycle needs r >= 3, got {r}")
    return Graph.from_edges(r, [(i, i + 1) for i in range(1, r)] + [(1, r)])


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


def is_cycle(g: Graph) -> bool:
    return g.m > 0 and all(d == 2 for d in g.degrees().values())


def is_whisker(g: Graph, e: int) -> bool:
    """True iff at least one endpoint of edge ``e`` has degree 1."""
    a, b = g.edges[e]
    deg = g.degrees()
    return deg[a] == 1 or deg[b] == 1


def delete_edge(g: Graph, e: int) -> Deletion:
    """Delete edge ``e``; a whisker also loses its free vertex.

    When both endpoints have degree 1 (the single-edge graph) the result is
    edgeless and rejected.  Otherwise exactly one endpoint is free and the
    remaining labels are compacted in order.
    """
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range for {g.m} edges")
    if g.m == 1:
        raise GraphError("deleting the only edge leaves an edgeless graph")
    a, b = g.edges[e]
    deg = g.degrees()
    free = b if deg[b] == 1 else a if deg[a] == 1 else None
    keep = [k for k in range(g.m) if k != e]
    if free is None:
        vmap = {v: v for v in g.vertices}
        n = g.n
    else:
        vmap = {}
        for v in g.vertices:
            if v != free:
                vmap[v] = len(vmap) + 1
        n = g.n - 1
    pairs = []
    for k in keep:
        x, y = g.edges[k]
        pairs.append(((vmap[x], vmap[y]), k))
    pairs.sort()
    if not _is_connected(n, [p for p, _ in pairs]):
        raise GraphError(f"deleting edge {g.edges[e]} disconnects the graph")
    h = Graph(n, tuple(p for p, _ in pairs))
    return Deletion(h, vmap, tuple(k for _, k in pairs), free)


class CycleSubgraph(NamedTuple):
    """A simple cycle inside a parent graph, kept in parent labels.

    ``vertices`` is sorted, ``edges`` sorted, ``edge_indices[k]`` is the
    parent index of ``edges[k]``.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def as_graph(self) -> Graph:
        """The cycle relabelled order-preservingly onto ``1..length``."""
        rel = {v: i + 1 for i, v in enumerate(self.vertices)}
        return Graph.from_edges(len(self.vertices), [(rel[a], rel[b]) for a, b in self.edges])


def enumerate_cycles(g: Graph) -> list[CycleSubgraph]:
    """All simple cycles of ``g``, each once, sorted by (length, edges).

    Backtracking from the smallest vertex of each cycle; the two traversal
    directions are collapsed by requiring the second vertex to be smaller
    than the last.
    """
    if g.m > MAX_CYCLE_EDGES:
        raise GuardExceeded(f"cycle enumeration is capped at {MAX_CYCLE_EDGES} edges, got {g.m}")
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    index = {e: k for k, e in enumerate(g.edges)}
    found = []

    def extend(path: list[int], on_path: set[int]):
        root, last = path[0], path[-1]
        for w in adj[last]:
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                cyc = path + [root]
                edges = sorted((min(x, y), max(x, y)) for x, y in zip(cyc, cyc[1:]))
                found.append(CycleSubgraph(
                    tuple(sorted(path)), tuple(edges), tuple(index[e] for e in edges)))
            elif w > root and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for root in g.vertices:
        extend([root], {root})
    found.sort(key=lambda c: (c.length, c.edges))
    return found


def connected_graph_catalog(n_max: int) -> Iterator[Graph]:
    """Every labelled connected simple graph on exactly ``n`` vertices, n <= n_max.

    Graphs come out grouped by ``n`` and, within a group, by the bitmask of
    present pairs (pairs taken in lexicographic order) ascending.
    """
    if not 1 <= n_max <= MAX_CATALOG_VERTICES:
        raise GuardExceeded(f"catalog supports 1 <= n_max <= {MAX_CATALOG_VERTICES}, got {n_max}")
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
            if (edges or n == 1) and _is_connected(n, edges):
                yield Graph(n, tuple(edges))
