"""The eight planarity-adjacent properties and their witnesses.

Naming scheme: two-letter ids combine a quantifier with a single minor
operation applied to the graph.

* AN  planar, and adding some missing edge breaks planarity
* CAN planar, not complete, and adding any missing edge breaks planarity
* NA  nonplanar, and deleting any one vertex leaves it nonplanar
* NE  nonplanar, and deleting any one edge leaves it nonplanar
* NC  nonplanar, and contracting any one edge leaves it nonplanar
* IA  deleting some vertex leaves a nonplanar graph
* IE  deleting some edge leaves a nonplanar graph
* IC  contracting some edge leaves a nonplanar graph

The three existential forms imply nonplanarity on their own (the result
of the operation is a minor), so they carry no explicit conjunct.  The
negations of NA, IA, IE and IC are closed under taking minors; NE and NC
do not have that luxury, which is what the sieve in the minimality
module exists for.

Vertex and edge scans run in ascending label order, so every "find" and
every witness is the least one, making results reproducible across runs
and processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import Edge, Graph, Rows, rows_add_edge, rows_contract_edge, \
    rows_delete_edge, rows_delete_vertex
from .planarity import is_planar, is_planar_rows


class Property(Enum):
    AN = "AN"
    CAN = "CAN"
    NA = "NA"
    NE = "NE"
    NC = "NC"
    IA = "IA"
    IE = "IE"
    IC = "IC"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


#: properties whose complement is minor-closed, so one-step minimality
#: testing is sound for them
UPWARD_CLOSED = frozenset({Property.NA, Property.IA, Property.IE, Property.IC})


@dataclass(frozen=True)
class Witness:
    """A vertex, edge or vertex pair that decides a property instance."""

    kind: str  # "vertex" | "edge" | "vertex-pair"
    value: tuple[int, ...]


# ---------------------------------------------------------------------------
# rows-level scans (shared with the sieves)
# ---------------------------------------------------------------------------

def _sorted_edges(rows: Rows) -> list[Edge]:
    out = []
    for u in range(len(rows)):
        r = rows[u] >> (u + 1)
        base = u + 1
        while r:
            low = r & -r
            out.append((u, base + low.bit_length() - 1))
            r ^= low
    return out


def first_planar_vertex_deletion(rows: Rows) -> int | None:
    for v in range(len(rows)):
        if is_planar_rows(rows_delete_vertex(rows, v)):
            return v
    return None


def first_planar_edge_deletion(rows: Rows) -> Edge | None:
    for u, v in _sorted_edges(rows):
        if is_planar_rows(rows_delete_edge(rows, u, v)):
            return (u, v)
    return None


def first_planar_contraction(rows: Rows) -> Edge | None:
    for u, v in _sorted_edges(rows):
        if is_planar_rows(rows_contract_edge(rows, u, v)):
            return (u, v)
    return None


def is_ne_rows(rows: Rows) -> bool:
    """Nonplanar with no planarizing single edge deletion."""
    if is_planar_rows(rows):
        return False
    return first_planar_edge_deletion(rows) is None


def is_nc_rows(rows: Rows) -> bool:
    """Nonplanar with no planarizing single edge contraction."""
    if is_planar_rows(rows):
        return False
    return first_planar_contraction(rows) is None


def is_na_rows(rows: Rows) -> bool:
    if is_planar_rows(rows):
        return False
    return first_planar_vertex_deletion(rows) is None


# ---------------------------------------------------------------------------
# apex finders
# ---------------------------------------------------------------------------

def find_apex_vertex(g: Graph) -> int | None:
    """Least vertex whose deletion planarizes g, or None.

    Planar graphs return vertex 0 when they have one (every deletion
    works); the empty graph has no vertex to return.
    """
    return first_planar_vertex_deletion(g.rows())


def find_apex_edge(g: Graph) -> Edge | None:
    """Least edge whose deletion planarizes g, or None."""
    return first_planar_edge_deletion(g.rows())


def find_contraction_apex(g: Graph) -> Edge | None:
    """Least edge whose contraction planarizes g, or None."""
    return first_planar_contraction(g.rows())


# ---------------------------------------------------------------------------
# property checks
# ---------------------------------------------------------------------------

def check(g: Graph, prop: Property) -> bool:
    return check_with_witness(g, prop)[0]


def check_with_witness(g: Graph, prop: Property) -> tuple[bool, Witness | None]:
    """Decide the property and return the deciding object when one exists.

    A true existential returns its least witness; a false universal
    returns its least counterexample; the other outcomes return None.
    """
    rows = g.rows()

    if prop is Property.AN:
        if not is_planar(g):
            return False, None
        for u, v in g.non_edges():
            if not is_planar_rows(rows_add_edge(rows, u, v)):
                return True, Witness("vertex-pair", (u, v))
        return False, None

    if prop is Property.CAN:
        if not is_planar(g) or g.is_complete():
            return False, None
        for u, v in g.non_edges():
            if is_planar_rows(rows_add_edge(rows, u, v)):
                return False, Witness("vertex-pair", (u, v))
        return True, None

    if prop is Property.NA:
        if is_planar(g):
            return False, None
        v = first_planar_vertex_deletion(rows)
        if v is None:
            return True, None
        return False, Witness("vertex", (v,))

    if prop is Property.NE:
        if is_planar(g):
            return False, None
        e = first_planar_edge_deletion(rows)
        if e is None:
            return True, None
        return False, Witness("edge", e)

    if prop is Property.NC:
        if is_planar(g):
            return False, None
        e = first_planar_contraction(rows)
        if e is None:
            return True, None
        return False, Witness("edge", e)

    if prop is Property.IA:
        for v in range(g.order):
            if not is_planar_rows(rows_delete_vertex(rows, v)):
                return True, Witness("vertex", (v,))
        return False, None

    if prop is Property.IE:
        for u, v in g.sorted_edges():
            if not is_planar_rows(rows_delete_edge(rows, u, v)):
                return True, Witness("edge", (u, v))
        return False, None

    if prop is Property.IC:
        for u, v in g.sorted_edges():
            if not is_planar_rows(rows_contract_edge(rows, u, v)):
                return True, Witness("edge", (u, v))
        return False, None

    raise ValueError(f"unknown property {prop!r}")
