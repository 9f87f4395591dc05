"""Simple undirected graphs on [n]: construction, named families, edge-list
parsing, connectivity, and exhaustive enumeration of connected graphs with a
given edge count up to isomorphism (brute-force canonical labeling, n <= 8).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import kernel
from .errors import InputError, ResourceGuardError

ENUMERATION_GUARD = 7  # max edge count without force=True
CANONICAL_MAX_VERTICES = 8

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex 1..n."""
        degs = [0] * self.n
        for a, b in self.edges:
            degs[a - 1] += 1
            degs[b - 1] += 1
        return tuple(degs)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in set(self.edges)

    def without_edge(self, a: int, b: int) -> "Graph":
        e = (min(a, b), max(a, b))
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def without_vertex(self, v: int) -> "Graph":
        """Drop all edges at v; the grid keeps its size (v becomes isolated)."""
        return Graph(self.n, tuple(e for e in self.edges if v not in e))

    def render(self) -> str:
        body = ",".join(f"{{{a},{b}}}" for a, b in self.edges)
        return f"n={self.n} edges=[{body}]"


def from_edges(n: int, pairs) -> Graph:
    """Validated graph; loops, duplicates and out-of-range endpoints are
    distinct input errors."""
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    seen = set()
    edges = []
    for a, b in pairs:
        if a == b:
            raise InputError(f"loop edge ({a},{a}) is not allowed in a simple graph")
        if not (1 <= a <= n and 1 <= b <= n):
            raise InputError(f"edge ({a},{b}) has an endpoint outside 1..{n}")
        e = (min(a, b), max(a, b))
        if e in seen:
            raise InputError(f"duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(sorted(edges)))


def family(kind: str, size: int) -> Graph:
    """Named families: path m (m+1 vertices), cycle m (m >= 3), star m
    (center 1, m leaves), complete k (k >= 2)."""
    if kind == "path":
        if size < 1:
            raise InputError("path needs at least 1 edge")
        return from_edges(size + 1, [(i, i + 1) for i in range(1, size + 1)])
    if kind == "cycle":
        if size < 3:
            raise InputError("cycle needs at least 3 edges")
        edges = [(i, i + 1) for i in range(1, size)] + [(1, size)]
        return from_edges(size, edges)
    if kind == "star":
        if size < 1:
            raise InputError("star needs at least 1 edge")
        return from_edges(size + 1, [(1, k) for k in range(2, size + 2)])
    if kind == "complete":
        if size < 2:
            raise InputError("complete graph needs at least 2 vertices")
        return from_edges(size, list(itertools.combinations(range(1, size + 1), 2)))
    raise InputError(f"unknown graph family {kind!r}")


def parse_family(spec: str) -> Graph:
    """Parse 'path:4', 'cycle:5', 'star:6' or 'complete:4'."""
    kind, sep, num = spec.partition(":")
    if not sep:
        raise InputError(f"bad family spec {spec!r}, expected e.g. path:4")
    try:
        size = int(num)
    except ValueError:
        raise InputError(f"bad family size in {spec!r}") from None
    return family(kind, size)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: optional header 'n <int>', lines 'i j', '#' comments."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate header")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise InputError(f"line {lineno}: bad header {line!r}")
            n = int(tokens[1])
            continue
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        pairs.append((a, b))
    if n is None:
        n = max((max(e) for e in pairs), default=0)
    try:
        return from_edges(n, pairs)
    except InputError as exc:
        raise InputError(f"edge list: {exc}") from None


def load_graph(source: str) -> Graph:
    """A graph source is a family spec (contains ':') or an edge-list file path."""
    if ":" in source:
        return parse_family(source)
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {source!r}: {exc}") from None
    return parse_edge_list(text)


def is_connected(g: Graph) -> bool:
    """Connectivity over all of 1..n; isolated vertices count against it."""
    if g.n <= 1:
        return True
    adj = {v: set() for v in range(1, g.n + 1)}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def relabel(g: Graph, perm: dict[int, int]) -> Graph:
    """Apply a vertex permutation {old: new}."""
    return from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def standard_relabelings(g: Graph) -> list[Graph]:
    """Two fixed non-identity relabelings (reversal and a rotation), deduplicated."""
    rev = {v: g.n + 1 - v for v in range(1, g.n + 1)}
    rot = {v: v % g.n + 1 for v in range(1, g.n + 1)}
    out = []
    for perm in (rev, rot):
        h = relabel(g, perm)
        if h.edges != g.edges and all(h.edges != o.edges for o in out):
            out.append(h)
    return out


def adjacency_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.n
    for a, b in g.edges:
        masks[a - 1] |= 1 << (b - 1)
        masks[b - 1] |= 1 << (a - 1)
    return tuple(masks)


def canonical_form(g: Graph) -> int:
    """Minimal adjacency bit-string over relabelings of the same vertex set."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ResourceGuardError(
            f"canonical labeling is brute force, limited to {CANONICAL_MAX_VERTICES} vertices"
        )
    return kernel.canonical_bits(g.n, adjacency_masks(g))


def iso_key(g: Graph) -> tuple[int, int]:
    """Full isomorphism invariant; bit-strings alone collide across vertex counts."""
    return (g.n, canonical_form(g))


def graph_from_bits(n: int, bits: int) -> Graph:
    """Inverse of the colex bit layout used by canonical_form."""
    total = n * (n - 1) // 2
    edges = []
    pos = 0
    for t in range(1, n):
        for a in range(t):
            if bits >> (total - 1 - pos) & 1:
                edges.append((a + 1, t + 1))
            pos += 1
    return from_edges(n, edges)


def _spans_connected(nv: int, combo: tuple[Edge, ...]) -> bool:
    parent = list(range(nv + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for a, b in combo:
        touched.add(a)
        touched.add(b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    if len(touched) != nv:
        return False
    root = find(1)
    return all(find(v) == root for v in range(2, nv + 1))


@functools.lru_cache(maxsize=None)
def enumerate_connected(m: int, max_vertices: int | None = None, force: bool = False) -> tuple[Graph, ...]:
    """All connected graphs with exactly m edges, one per isomorphism class.

    Representatives are canonically labeled and sorted by (vertex count,
    canonical form), so the output is deterministic.
    """
    if m < 1:
        raise InputError(f"edge count must be positive, got {m}")
    if m > ENUMERATION_GUARD and not force:
        raise ResourceGuardError(
            f"enumeration above {ENUMERATION_GUARD} edges is guarded; pass force to override"
        )
    if max_vertices is None:
        max_vertices = m + 1
    if max_vertices > CANONICAL_MAX_VERTICES:
        raise InputError(
            f"canonical labeling is limited to {CANONICAL_MAX_VERTICES} vertices"
        )
    out = []
    for nv in range(2, min(max_vertices, m + 1) + 1):
        if m > nv * (nv - 1) // 2:
            continue
        all_pairs = list(itertools.combinations(range(1, nv + 1), 2))
        seen: set[int] = set()
        for combo in itertools.combinations(all_pairs, m):
            if not _spans_connected(nv, combo):
                continue
            masks = [0] * nv
            for a, b in combo:
                masks[a - 1] |= 1 << (b - 1)
                masks[b - 1] |= 1 << (a - 1)
            seen.add(kernel.canonical_bits(nv, tuple(masks)))
        out.extend(graph_from_bits(nv, bits) for bits in sorted(seen))
    return tuple(out)
