"""Canonical labeling of small simple graphs.

The canonical key of a graph is a byte string such that two graphs have
equal keys iff they are isomorphic.  Keys are produced by an ordered
partition refinement (1-dimensional Weisfeiler-Leman) followed by a
backtracking search over individualizations that maximizes the relabeled
adjacency code.  Three prunings keep the search small on the symmetric
graphs this package cares about (complete graphs, complete bipartite
graphs, disjoint unions of those, strongly regular examples):

* incremental code comparison against the best leaf found so far,
* interchangeable cells (identical neighborhoods outside the cell, and
  complete or empty inside) are fixed in one arbitrary order without
  branching, which collapses the factorial blowup of K_n in one step,
* automorphisms discovered at equal leaves merge branch orbits, so at a
  branch point only one representative per known orbit is explored.

Everything here is label-level: functions take (order, rows) with rows
the adjacency bitmasks, and the Graph-facing wrappers live at the bottom.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graphs import Graph, Rows

# hard cap on leaves visited by one canonical search; hit only by graphs far
# outside this package's order range, and hitting it is an error, not a
# truncation
LEAF_CAP = 250_000


# ---------------------------------------------------------------------------
# refinement
# ---------------------------------------------------------------------------

def _refine(rows: Rows, cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.

    Every cell is split by the count of neighbors in every cell until
    stable.  Split pieces replace their cell in place, ordered by
    decreasing count, so the resulting cell order depends only on
    isomorphism-invariant data.
    """
    queue = list(range(len(cells)))
    qi = 0
    while qi < len(queue):
        idx = queue[qi]
        qi += 1
        if idx >= len(cells):
            continue
        splitter = 0
        for v in cells[idx]:
            splitter |= 1 << v
        ci = 0
        while ci < len(cells):
            cell = cells[ci]
            if len(cell) > 1:
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault((rows[v] & splitter).bit_count(), []).append(v)
                if len(buckets) > 1:
                    pieces = [buckets[k] for k in sorted(buckets, reverse=True)]
                    cells[ci : ci + 1] = pieces
                    # indices shifted; restart the queue over all cells.  At
                    # these graph orders the simplicity beats bookkeeping.
                    queue = list(range(len(cells)))
                    qi = 0
                    ci += len(pieces) - 1
            ci += 1
    return cells


def _interchangeable(rows: Rows, cell: list[int]) -> bool:
    """True if every transposition inside the cell is a graph automorphism.

    Holds when all cell vertices have the same neighbors outside the cell
    and the induced subgraph on the cell is complete or empty.
    """
    mask = 0
    for v in cell:
        mask |= 1 << v
    outside = rows[cell[0]] & ~mask
    inside = rows[cell[0]] & mask
    full = (inside == mask & ~(1 << cell[0]))
    empty = (inside == 0)
    if not (full or empty):
        return False
    for v in cell[1:]:
        if rows[v] & ~mask != outside:
            return False
        ins = rows[v] & mask
        if full and ins != mask & ~(1 << v):
            return False
        if empty and ins != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# backtracking search
# ---------------------------------------------------------------------------

class _Search:
    __slots__ = ("rows", "n", "best_codes", "best_perm", "gens", "leaves")

    def __init__(self, rows: Rows):
        self.rows = rows
        self.n = len(rows)
        self.best_codes: list[int] | None = None
        self.best_perm: list[int] | None = None
        self.gens: list[tuple[int, ...]] = []
        self.leaves = 0

    def run(self) -> None:
        cells = _refine(self.rows, [list(range(self.n))])
        self._node(cells, [], [], True)

    def _node(self, cells: list[list[int]], perm: list[int], codes: list[int],
              tied: bool) -> None:
        rows = self.rows
        lead = 0
        while lead < len(cells) and len(cells[lead]) == 1:
            lead += 1
        # place the leading singletons not placed yet (positions align with
        # cells: position k is cells[k] while k < lead), extending the code
        # and comparing against the best leaf while still tied
        while len(perm) < lead:
            v = cells[len(perm)][0]
            code = 0
            rv = rows[v]
            for i, u in enumerate(perm):
                code |= ((rv >> u) & 1) << i
            perm.append(v)
            codes.append(code)
            if tied and self.best_codes is not None:
                b = self.best_codes[len(codes) - 1]
                if code < b:
                    return  # prune: cannot reach the best leaf's code
                if code > b:
                    tied = False  # strictly better; stop comparing
        if lead == len(cells):
            self._leaf(perm, codes, tied)
            return
        target = cells[lead]
        if _interchangeable(rows, target):
            # any internal order completes to the same canonical code, and
            # fixing one cannot split the other cells either
            fixed = cells[:lead] + [[v] for v in target] + cells[lead + 1 :]
            self._node(fixed, perm, codes, tied)
            return
        # branch: individualize one representative per known orbit
        seen_orbits = set()
        for v in target:
            rep = self._orbit_rep(v, perm)
            if rep in seen_orbits:
                continue
            seen_orbits.add(rep)
            rest = [u for u in target if u != v]
            child = [c[:] for c in cells[:lead]] + [[v], rest] + [
                c[:] for c in cells[lead + 1 :]
            ]
            child = _refine(rows, child)
            self._node(child, perm[:], codes[:], tied)

    def _leaf(self, perm: list[int], codes: list[int], tied: bool) -> None:
        self.leaves += 1
        if self.leaves > LEAF_CAP:
            raise ResourceLimitError(
                f"canonical search exceeded {LEAF_CAP} leaves at order {self.n}"
            )
        if self.best_codes is None or not tied:
            if self.best_codes is None or codes > self.best_codes:
                self.best_codes = codes[:]
                self.best_perm = perm[:]
            return
        # tied all the way down: perm and best_perm label the same code, so
        # best_perm[i] -> perm[i] is an automorphism
        bp = self.best_perm
        gen = [0] * self.n
        for i in range(self.n):
            gen[bp[i]] = perm[i]
        if any(gen[i] != i for i in range(self.n)):
            self.gens.append(tuple(gen))

    def _orbit_rep(self, v: int, prefix: list[int]) -> int:
        """Smallest vertex reachable from v under generators fixing prefix."""
        useful = [g for g in self.gens if all(g[p] == p for p in prefix)]
        if not useful:
            return v
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in useful:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return min(orbit)


# ---------------------------------------------------------------------------
# public, rows-level
# ---------------------------------------------------------------------------

def canonical_perm(rows: Rows) -> tuple[int, ...]:
    """Permutation as a tuple p with p[position] = original vertex."""
    n = len(rows)
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    s = _Search(rows)
    s.run()
    return tuple(s.best_perm)


def canonical_key_rows(rows: Rows) -> bytes:
    n = len(rows)
    if n > 255:
        raise ResourceLimitError("canonical keys support order <= 255")
    if n == 0:
        return bytes([0])
    if n == 1:
        return bytes([1])
    s = _Search(rows)
    s.run()
    return _pack(n, s.best_codes)


def canonical_data(rows: Rows) -> tuple[bytes, tuple[int, ...], list[tuple[int, ...]]]:
    """(key, perm, discovered automorphism generators) in one search.

    The generator list is not a full generating set of the automorphism
    group in general; callers may only use it for sound positive tests
    (an element listed in an orbit really is in that orbit).
    """
    n = len(rows)
    if n > 255:
        raise ResourceLimitError("canonical keys support order <= 255")
    if n == 0:
        return bytes([0]), (), []
    if n == 1:
        return bytes([1]), (0,), []
    s = _Search(rows)
    s.run()
    return _pack(n, s.best_codes), tuple(s.best_perm), s.gens


def _pack(n: int, codes: list[int]) -> bytes:
    acc = 0
    shift = 0
    for j, code in enumerate(codes, start=1):
        acc |= code << shift
        shift += j
    nbytes = (shift + 7) // 8
    return bytes([n]) + acc.to_bytes(nbytes, "big")


def relabel_rows(rows: Rows, perm: tuple[int, ...]) -> Rows:
    """Rows permuted so that position i holds original vertex perm[i]."""
    n = len(rows)
    inv = [0] * n
    for pos, v in enumerate(perm):
        inv[v] = pos
    out = [0] * n
    for v in range(n):
        r = rows[v]
        nr = 0
        while r:
            low = r & -r
            nr |= 1 << inv[low.bit_length() - 1]
            r ^= low
        out[inv[v]] = nr
    return tuple(out)


def canonical_rows(rows: Rows) -> Rows:
    """The graph relabeled into its canonical order."""
    return relabel_rows(rows, canonical_perm(rows))


# ---------------------------------------------------------------------------
# public, Graph-level
# ---------------------------------------------------------------------------

def canonical_key(g: Graph) -> bytes:
    if g._canon is None:
        g._canon = canonical_key_rows(g.rows())
    return g._canon


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_rows(canonical_rows(g.rows()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
