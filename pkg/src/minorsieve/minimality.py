"""Minor-minimality deciders.

A graph is minor-minimal for a property when it has the property and no
proper minor does.  Three deciders cover the eight properties:

* ``is_minor_minimal_upclosed`` handles NA, IA, IE and IC, whose
  negations are minor-closed: there, the property propagates upward
  along the minor order, so checking the one-step minors suffices.

* ``is_mmne`` and ``is_mmnc`` handle NE and NC, which lack that closure
  (deleting an edge can make a graph NE that was not, and dually).  They
  walk a pruned closure instead.  For NE: test every single edge
  deletion, then walk the contraction closure of the graph itself,
  discarding planar graphs and canonical repeats; the graph is minimal
  iff no walked member and no deletion is NE.  Completeness rests on
  two facts.  Any minor normalizes to contractions followed by edge
  deletions, with vertex deletions traded for edge deletions that leave
  isolated husks (harmless to NE and NC, which ignore isolated
  vertices).  And "planar or has a planarizing edge deletion" is closed
  under edge deletion, so if any (g/C) - D is NE then g/C itself is NE,
  already a walked member when C is nonempty; when C is empty the same
  fact applied below a single deletion shows some g - e is NE.  The NC
  sieve mirrors this exactly: test single contractions, walk the
  deletion closure, using closure of "planar or has a planarizing
  contraction" under contraction.  The one case the normal form cannot
  reach, a minor obtained only by dropping an isolated vertex, is
  handled up front: a graph with an isolated vertex is never minimal.

* ``is_minor_minimal_exhaustive`` is the slow oracle: the full closure
  under vertex deletion, edge deletion and edge contraction, with no
  shortcuts beyond discarding planar subtrees when the property implies
  nonplanarity.  It exists to gate the fast deciders in tests and to
  serve AN and CAN, which sit inside planarity and get no closure help.

All walks deduplicate by canonical key and count distinct members
against a cap; hitting the cap raises instead of truncating.
"""

from __future__ import annotations

from .canon import canonical_data, canonical_key, canonical_key_rows, \
    relabel_rows
from .errors import ResourceLimitError
from .graphs import Graph, Rows, rows_contract_edge, rows_delete_edge, \
    rows_delete_vertex
from .planarity import is_planar_rows
from .properties import Property, UPWARD_CLOSED, _sorted_edges, check, \
    first_planar_vertex_deletion, is_nc_rows, is_ne_rows

#: distinct members a sieve may visit before giving up loudly
SIEVE_MEMBER_CAP = 1_000_000

#: order bound for the exhaustive oracle; the closure is the full minor
#: lattice below the graph, which grows far too fast beyond this
EXHAUSTIVE_ORDER_CAP = 10

_NONPLANAR_PROPS = frozenset({
    Property.NA, Property.NE, Property.NC,
    Property.IA, Property.IE, Property.IC,
})


# ---------------------------------------------------------------------------
# one-step minors
# ---------------------------------------------------------------------------

def one_step_minor_rows(rows: Rows) -> list[Rows]:
    """Canonical representatives of all single-operation minors.

    Vertex deletions are included alongside the two edge operations:
    graphs with isolated vertices (disconnected minimal examples have
    them below) are unreachable by edge operations alone.  Results are
    deduplicated by canonical key and sorted by it.
    """
    children = [rows_delete_vertex(rows, v) for v in range(len(rows))]
    for u, v in _sorted_edges(rows):
        children.append(rows_delete_edge(rows, u, v))
        children.append(rows_contract_edge(rows, u, v))
    out: dict[bytes, Rows] = {}
    for child in children:
        key, perm, _ = canonical_data(child)
        if key not in out:
            out[key] = relabel_rows(child, perm)
    return [out[k] for k in sorted(out)]


def one_step_minors(g: Graph) -> list[Graph]:
    return [Graph.from_rows(r) for r in one_step_minor_rows(g.rows())]


# ---------------------------------------------------------------------------
# fast deciders
# ---------------------------------------------------------------------------

def is_minor_minimal_upclosed(g: Graph, prop: Property) -> bool:
    """One-step minimality test; sound only for the upward-closed four."""
    if prop not in UPWARD_CLOSED:
        raise ValueError(f"{prop} is not upward-closed; use the sieve or oracle")
    if not check(g, prop):
        return False
    return not any(check(m, prop) for m in one_step_minors(g))


def _closure_walk(rows: Rows, step, prop_rows, max_members: int,
                  label: str) -> bool:
    """True iff some proper member of the walk satisfies prop_rows.

    ``step(cur, u, v)`` produces the child for edge (u, v).  Planar
    children are dropped without expansion: both walks move along minor
    operations, so everything below a planar member is planar and NE
    and NC are out of reach there.
    """
    visited = {canonical_key_rows(rows)}
    frontier = [rows]
    while frontier:
        grown = []
        for cur in frontier:
            for u, v in _sorted_edges(cur):
                child = step(cur, u, v)
                if is_planar_rows(child):
                    continue
                key = canonical_key_rows(child)
                if key in visited:
                    continue
                visited.add(key)
                if len(visited) > max_members:
                    raise ResourceLimitError(
                        f"{label} sieve exceeded {max_members} members"
                    )
                if prop_rows(child):
                    return True
                grown.append(child)
        frontier = grown
    return False


def is_mmne(g: Graph, max_members: int = SIEVE_MEMBER_CAP) -> bool:
    """Minor-minimal NE: deletion seeds plus the contraction closure."""
    rows = g.rows()
    if not is_ne_rows(rows):
        return False
    if any(r == 0 for r in rows):
        return False  # dropping the isolated vertex leaves a proper NE minor
    for u, v in _sorted_edges(rows):
        if is_ne_rows(rows_delete_edge(rows, u, v)):
            return False
    return not _closure_walk(rows, rows_contract_edge, is_ne_rows,
                             max_members, "NE")


def is_mmnc(g: Graph, max_members: int = SIEVE_MEMBER_CAP) -> bool:
    """Minor-minimal NC: contraction seeds plus the deletion closure."""
    rows = g.rows()
    if not is_nc_rows(rows):
        return False
    if any(r == 0 for r in rows):
        return False
    for u, v in _sorted_edges(rows):
        if is_nc_rows(rows_contract_edge(rows, u, v)):
            return False
    return not _closure_walk(rows, rows_delete_edge, is_nc_rows,
                             max_members, "NC")


# ---------------------------------------------------------------------------
# exhaustive oracle
# ---------------------------------------------------------------------------

def is_minor_minimal_exhaustive(g: Graph, prop: Property,
                                max_order: int = EXHAUSTIVE_ORDER_CAP,
                                max_members: int = SIEVE_MEMBER_CAP) -> bool:
    """Ground-truth minimality: walk every proper minor and test each one.

    Planar subtrees are skipped only when the property implies
    nonplanarity; for AN and CAN everything is visited.
    """
    if g.order > max_order:
        raise ResourceLimitError(
            f"exhaustive minimality capped at order {max_order}"
        )
    if not check(g, prop):
        return False
    prune_planar = prop in _NONPLANAR_PROPS
    visited = {canonical_key(g)}
    frontier = [g.rows()]
    while frontier:
        grown = []
        for cur in frontier:
            for child in one_step_minor_rows(cur):
                key = canonical_key_rows(child)
                if key in visited:
                    continue
                visited.add(key)
                if len(visited) > max_members:
                    raise ResourceLimitError(
                        f"exhaustive minimality exceeded {max_members} members"
                    )
                if prune_planar and is_planar_rows(child):
                    continue
                if check(Graph.from_rows(child), prop):
                    return False
                grown.append(child)
        frontier = grown
    return True


def is_minor_minimal(g: Graph, prop: Property) -> bool:
    """Route to the right decider for the property."""
    if prop in UPWARD_CLOSED:
        return is_minor_minimal_upclosed(g, prop)
    if prop is Property.NE:
        return is_mmne(g)
    if prop is Property.NC:
        return is_mmnc(g)
    return is_minor_minimal_exhaustive(g, prop)


def mmne_structure_violations(g: Graph) -> list[str]:
    """Structural facts every minor-minimal NE graph satisfies.

    Returns human-readable descriptions of any violated fact (empty for
    a conforming graph): minimum degree at least two; the neighbors of
    every degree-two vertex adjacent to each other; vertex connectivity
    at most five; and the graph either has an apex vertex or is itself
    minor-minimal NA.  Useful as a sweep over search output: a violation
    means a bug somewhere, never a new graph.
    """
    out = []
    if g.min_degree() < 2:
        out.append("minimum degree below 2")
    for v in range(g.order):
        nbrs = g.neighbors(v)
        if len(nbrs) == 2:
            x, y = sorted(nbrs)
            if not g.has_edge(x, y):
                out.append(f"degree-2 vertex {v} with nonadjacent neighbors")
    if g.vertex_connectivity() > 5:
        out.append("vertex connectivity above 5")
    if first_planar_vertex_deletion(g.rows()) is None \
            and not is_minor_minimal_upclosed(g, Property.NA):
        out.append("neither apex nor minor-minimal NA")
    return out
