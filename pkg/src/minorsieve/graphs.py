"""Immutable simple graphs and the minor operations on them.

Vertices are the integers 0..order-1.  Edges are unordered pairs, stored
normalized as (u, v) with u < v.  No loops, no parallel edges.

Two representations coexist:

* ``Graph`` is the public value type (hashable, comparable, cached).
* adjacency bitmask rows, a tuple of ints where bit w of row v is set iff
  vw is an edge.  The search-heavy modules work on rows directly and only
  wrap results back into ``Graph`` at API boundaries.

Contraction, deletion and the three unions keep labels contiguous: the
result of an order-k operation is always a graph on 0..k-1.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Edge = tuple[int, int]
Rows = tuple[int, ...]


# ---------------------------------------------------------------------------
# bitmask row helpers (hot-path building blocks)
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rows_from_edges(order: int, edges: Iterable[Edge]) -> Rows:
    rows = [0] * order
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def edges_from_rows(rows: Rows) -> list[Edge]:
    n = len(rows)
    return [(u, v) for u in range(n) for v in bits(rows[u] >> (u + 1) << (u + 1))]


def rows_size(rows: Rows) -> int:
    return sum(r.bit_count() for r in rows) // 2


def rows_delete_vertex(rows: Rows, v: int) -> Rows:
    """Remove vertex v and shift labels above v down by one."""
    low = (1 << v) - 1
    out = []
    for u, r in enumerate(rows):
        if u == v:
            continue
        out.append((r & low) | ((r >> (v + 1)) << v))
    return tuple(out)


def rows_delete_edge(rows: Rows, u: int, v: int) -> Rows:
    out = list(rows)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return tuple(out)


def rows_add_edge(rows: Rows, u: int, v: int) -> Rows:
    out = list(rows)
    out[u] |= 1 << v
    out[v] |= 1 << u
    return tuple(out)


def rows_contract_edge(rows: Rows, u: int, v: int) -> Rows:
    """Identify the endpoints of edge uv, dropping the loop and any parallels.

    The merged vertex keeps the smaller label; the larger one is removed and
    labels above it shift down.
    """
    if u > v:
        u, v = v, u
    merged = list(rows)
    keep = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
    merged[u] = keep
    for w in bits(keep):
        merged[w] |= 1 << u
    # v's old edges that u lacked are now duplicated in column v; deleting v
    # removes them.
    return rows_delete_vertex(tuple(merged), v)


def rows_subdivide_edge(rows: Rows, u: int, v: int) -> Rows:
    n = len(rows)
    out = list(rows_delete_edge(rows, u, v))
    out.append((1 << u) | (1 << v))
    out[u] |= 1 << n
    out[v] |= 1 << n
    return tuple(out)


def rows_component_masks(rows: Rows) -> list[int]:
    """Vertex-set bitmasks of the connected components, by least vertex."""
    comps = []
    seen = 0
    for v in range(len(rows)):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in bits(frontier):
                grown |= rows[u]
            frontier = grown & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def rows_connected(rows: Rows) -> bool:
    n = len(rows)
    if n <= 1:
        return True
    comp = 1
    frontier = 1
    while frontier:
        grown = 0
        for u in bits(frontier):
            grown |= rows[u]
        frontier = grown & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


# ---------------------------------------------------------------------------
# the Graph value type
# ---------------------------------------------------------------------------

class Graph:
    """An immutable simple graph on vertices 0..order-1.

    Equality and hashing are label-sensitive; use canonical keys from the
    canon module for isomorphism-level identity.
    """

    __slots__ = ("order", "edges", "_rows", "_hash", "_canon", "_planar")

    def __init__(self, order: int, edges: Iterable[Edge] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u},{v}) out of range for order {order}")
            norm.add((u, v) if u < v else (v, u))
        self.order: int = order
        self.edges: frozenset[Edge] = frozenset(norm)
        self._rows: Rows | None = None
        self._hash: int | None = None
        self._canon = None
        self._planar: bool | None = None

    @classmethod
    def from_rows(cls, rows: Rows) -> "Graph":
        g = cls.__new__(cls)
        g.order = len(rows)
        g.edges = frozenset(edges_from_rows(rows))
        g._rows = tuple(rows)
        g._hash = None
        g._canon = None
        g._planar = None
        return g

    # -- construction helpers ------------------------------------------------

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, [(u, a + v) for u in range(a) for v in range(b)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs order >= 3")
        return cls(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(v, v + 1) for v in range(n - 1)])

    # -- basic queries --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.edges)

    def rows(self) -> Rows:
        if self._rows is None:
            self._rows = rows_from_edges(self.order, self.edges)
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows()[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(bits(self.rows()[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows()[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows())

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        """Nonadjacent unordered pairs, lexicographically sorted."""
        rows = self.rows()
        return [
            (u, v)
            for u in range(self.order)
            for v in range(u + 1, self.order)
            if not (rows[u] >> v) & 1
        ]

    def is_complete(self) -> bool:
        return self.size == self.order * (self.order - 1) // 2

    # -- minor operations ------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        return Graph.from_rows(rows_add_edge(self.rows(), u, v))

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._require_edge(u, v)
        return Graph.from_rows(rows_delete_edge(self.rows(), u, v))

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return Graph.from_rows(rows_delete_vertex(self.rows(), v))

    def contract_edge(self, u: int, v: int) -> "Graph":
        self._require_edge(u, v)
        return Graph.from_rows(rows_contract_edge(self.rows(), u, v))

    def subdivide_edge(self, u: int, v: int) -> "Graph":
        self._require_edge(u, v)
        return Graph.from_rows(rows_subdivide_edge(self.rows(), u, v))

    def relabel(self, mapping: dict[int, int] | list[int]) -> "Graph":
        """Return the graph with vertex v renamed to mapping[v] (a bijection)."""
        if isinstance(mapping, dict):
            table = [mapping[v] for v in range(self.order)]
        else:
            table = list(mapping)
        if sorted(table) != list(range(self.order)):
            raise ValueError("mapping is not a bijection on the vertex set")
        return Graph(self.order, [(table[u], table[v]) for u, v in self.edges])

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = self.rows()
        return Graph(
            len(keep),
            [
                (index[u], index[v])
                for u in keep
                for v in keep
                if u < v and (rows[u] >> v) & 1
            ],
        )

    # -- connectivity -----------------------------------------------------------

    def is_connected(self) -> bool:
        return rows_connected(self.rows())

    def components(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(bits(mask)) for mask in rows_component_masks(self.rows())
        )

    def vertex_connectivity(self) -> int:
        """Largest k such that order > k and no cutset smaller than k exists.

        Complete graphs give order-1, disconnected graphs (and K1) give 0.
        """
        n = self.order
        if n <= 1:
            return 0
        if self.is_complete():
            return n - 1
        if not self.is_connected():
            return 0
        rows = self.rows()
        best = n - 1
        for u in range(n):
            for v in range(u + 1, n):
                if not (rows[u] >> v) & 1:
                    best = min(best, _local_connectivity(rows, u, v, best))
        return best

    # -- plumbing ---------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.order):
            raise ValueError(f"vertex {v} out of range for order {self.order}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"pair ({u},{v}) is a loop")

    def _require_edge(self, u: int, v: int) -> None:
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


# ---------------------------------------------------------------------------
# unions
# ---------------------------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g and h side by side, h's labels shifted up by g.order."""
    k = g.order
    edges = list(g.edges) + [(u + k, v + k) for u, v in h.edges]
    return Graph(g.order + h.order, edges)


def one_vertex_union(g: Graph, a: int, h: Graph, b: int) -> Graph:
    """Glue h onto g by identifying h's vertex b with g's vertex a."""
    g._check_vertex(a)
    h._check_vertex(b)
    k = g.order

    def shift(w: int) -> int:
        if w == b:
            return a
        return k + w - (1 if w > b else 0)

    edges = list(g.edges) + [(shift(u), shift(v)) for u, v in h.edges]
    return Graph(g.order + h.order - 1, edges)


def two_vertex_union(g: Graph, pair_g: Edge, h: Graph, pair_h: Edge) -> Graph:
    """Glue h onto g by identifying pair_h with pair_g, in order.

    No edge between the glued pair is added; whatever either summand has
    between its designated pair survives the union.
    """
    a1, b1 = pair_g
    a2, b2 = pair_h
    g._check_pair(a1, b1)
    h._check_pair(a2, b2)
    k = g.order
    skip = sorted((a2, b2))

    def shift(w: int) -> int:
        if w == a2:
            return a1
        if w == b2:
            return b1
        return k + w - (1 if w > skip[0] else 0) - (1 if w > skip[1] else 0)

    edges = set(g.edges)
    for u, v in h.edges:
        x, y = shift(u), shift(v)
        edges.add((x, y) if x < y else (y, x))
    return Graph(g.order + h.order - 2, edges)


# ---------------------------------------------------------------------------
# local vertex connectivity (Menger via unit-capacity max flow)
# ---------------------------------------------------------------------------

def _local_connectivity(rows: Rows, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths, for nonadjacent s, t.

    Stops early once the count reaches ``cap``.  Standard node splitting:
    every vertex except s and t becomes an arc of capacity one.
    """
    n = len(rows)
    # node ids: v_in = v, v_out = v + n; s and t participate as s_out = s + n
    # (source) and t_in = t (sink).
    succ: list[set[int]] = [set() for _ in range(2 * n)]
    for v in range(n):
        if v not in (s, t):
            succ[v].add(v + n)
        for w in bits(rows[v]):
            succ[v + n].add(w)
    source, sink = s + n, t
    flow = 0
    while flow < cap:
        # BFS for an augmenting path in the residual digraph
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for x in queue:
                for y in succ[x]:
                    if y not in prev:
                        prev[y] = x
                        nxt.append(y)
            queue = nxt
        if sink not in prev:
            break
        y = sink
        while y != source:
            x = prev[y]
            succ[x].discard(y)
            succ[y].add(x)
            y = x
        flow += 1
    return flow
