"""Self-validating library of named graphs and known minimal examples.

Every entry pairs a graph with machine-checkable claims ("MM-NE",
"planar", ...) that the deciders in the properties and minimality
modules can re-derive from scratch; ``verify_catalog`` does exactly
that, plus a battery of structural cross-checks, and reports pass/fail
per claim rather than trusting the stored data.

The graphs come from four kinds of construction:

* named one-offs (Kuratowski graphs, their one-edge perturbations, the
  single-edge subdivisions, complete and complete bipartite relatives);
* unions: disjoint (``|``), sharing one vertex (``.``), and sharing two
  nonadjacent vertices with no edge added between them (``:``);
* five families of two-cut compositions whose members are enumerated
  from block recipes, deduplicated up to isomorphism, filtered by an
  actual minimality test, and counted against the expected family size
  (a mismatch fails the build loudly -- the recipes are only trusted as
  far as they re-verify);
* two embedded edge-list collections decoded from catalog_data.

Also here: the two non-closure witnesses showing that NE and NC do not
propagate to minors the way the vertex-apex property does; each returns
a graph with a distinguished edge whose deletion/contraction behavior
``verify_catalog`` confirms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from multiprocessing import get_context
import time
from typing import Callable, Iterable

from .canon import canonical_graph, canonical_key
from .catalog_data import A1_EDGE_LISTS, A2_EDGE_LISTS
from .errors import CatalogError, ResourceLimitError
from .formats import parse_edge_list
from .graphs import Edge, Graph, disjoint_union, one_vertex_union, \
    two_vertex_union
from .minimality import is_minor_minimal, is_minor_minimal_upclosed
from .planarity import is_planar
from .properties import Property, check


@dataclass(frozen=True)
class CatalogEntry:
    """A graph, the claims made about it, and how it was built.

    ``claims`` hold property ids ("NE"), "MM-" prefixed minimality ids
    ("MM-NE"), or "planar"/"nonplanar"; all are re-derivable by
    ``check_claim``.  ``construction`` is a human-readable recipe note.
    """

    id: str
    graph: Graph
    claims: frozenset[str]
    construction: str


# ---------------------------------------------------------------------------
# labeled-edge assembly
# ---------------------------------------------------------------------------

def _graph_from_labeled(edges: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from string-labeled edges; labels index by first use."""
    index: dict[str, int] = {}
    pairs = []
    for u, v in edges:
        iu = index.setdefault(u, len(index))
        iv = index.setdefault(v, len(index))
        pairs.append((iu, iv))
    return Graph(len(index), pairs)


def _block_edges(kind: str, a: str, b: str, tag: str) -> list[tuple[str, str]]:
    """Edges of a standard block attached at the labels ``a`` and ``b``.

    Fresh interior vertices are prefixed with ``tag`` so two blocks can
    be unioned without collisions.  Kinds:

    * ``K5``     complete on five, a and b adjacent
    * ``K5-e``   K5 with the ab edge removed
    * ``K33x``   complete bipartite 3+3, a and b in different parts
    * ``K33x-e`` K33x with the ab edge removed
    * ``K33s``   complete bipartite 3+3, a and b in the same part
    """
    f = [f"{tag}{i}" for i in range(4)]
    if kind == "K5":
        vs = [a, b, f[0], f[1], f[2]]
        return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    if kind == "K5-e":
        return [e for e in _block_edges("K5", a, b, tag) if set(e) != {a, b}]
    if kind == "K33x":
        return [(u, v) for u in (a, f[0], f[1]) for v in (b, f[2], f[3])]
    if kind == "K33x-e":
        return [e for e in _block_edges("K33x", a, b, tag) if set(e) != {a, b}]
    if kind == "K33s":
        return [(u, v) for u in (a, b, f[0]) for v in (f[1], f[2], f[3])]
    raise ValueError(f"unknown block kind {kind!r}")


def _kuratowski_parts() -> list[tuple[list[str], list[tuple[str, str]]]]:
    """The two Kuratowski graphs on fresh g-labels, with vertex lists."""
    k5 = [f"g{i}" for i in range(5)]
    k5_edges = [(u, v) for i, u in enumerate(k5) for v in k5[i + 1:]]
    k33 = [f"g{i}" for i in range(6)]
    k33_edges = [(u, v) for u in k33[:3] for v in k33[3:]]
    return [(k5, k5_edges), (k33, k33_edges)]


# ---------------------------------------------------------------------------
# two-cut family recipes
# ---------------------------------------------------------------------------
#
# Every family fixes a cut pair {a, b} (never adjacent except where the
# recipe says so), drops in blocks from the table above, and wires the
# attachment edges.  All placements are enumerated, collapsed up to
# isomorphism, and each class representative must pass the real
# minimality test; the survivor count is checked against the family
# size, so a wrong recipe cannot ship quietly.

def _abedge9_candidates() -> list[Graph]:
    # Three cut vertices a, b, c pairwise forming two-cuts; ab is always
    # an edge (inside its block), ac and bc vary.  A pair that is an
    # edge takes K5 or the cross-pair K33; a non-edge pair takes the
    # same-part K33.
    out = []
    for ac_edge in (False, True):
        for bc_edge in (False, True):
            ab_kinds = ("K5", "K33x")
            ac_kinds = ("K5", "K33x") if ac_edge else ("K33s",)
            bc_kinds = ("K5", "K33x") if bc_edge else ("K33s",)
            for ka in ab_kinds:
                for kb in ac_kinds:
                    for kc in bc_kinds:
                        out.append(_graph_from_labeled(
                            _block_edges(ka, "a", "b", "p")
                            + _block_edges(kb, "a", "c", "q")
                            + _block_edges(kc, "b", "c", "r")
                        ))
    return out


def _bowtie3_candidates() -> list[Graph]:
    # Two missing-edge blocks on {a,b} and {d,e} joined through a center
    # vertex c: in the middle component a and b have degree two with c
    # their only common neighbor, and c sees all of a, b, d, e.
    joins = [("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"),
             ("a", "d"), ("b", "e")]
    out = []
    for k1 in ("K5-e", "K33x-e"):
        for k2 in ("K5-e", "K33x-e"):
            out.append(_graph_from_labeled(
                _block_edges(k1, "a", "b", "p")
                + _block_edges(k2, "d", "e", "q")
                + joins
            ))
    return out


def _t220_candidates() -> list[Graph]:
    # Missing-edge block on {a,b}; the other side of the cut is a whole
    # Kuratowski graph to which a and b attach by two edges each, all
    # four attachment vertices distinct.
    out = []
    for k1 in ("K5-e", "K33x-e"):
        for vs, g_edges in _kuratowski_parts():
            for pair_a in combinations(vs, 2):
                rest = [w for w in vs if w not in pair_a]
                for pair_b in combinations(rest, 2):
                    out.append(_graph_from_labeled(
                        _block_edges(k1, "a", "b", "p") + g_edges
                        + [("a", pair_a[0]), ("a", pair_a[1]),
                           ("b", pair_b[0]), ("b", pair_b[1])]
                    ))
    return out


def _t221_candidates() -> list[Graph]:
    # As t220 but a and b share exactly one attachment vertex c, so
    # together they reach three distinct vertices of the Kuratowski side.
    out = []
    for k1 in ("K5-e", "K33x-e"):
        for vs, g_edges in _kuratowski_parts():
            for c in vs:
                others = [w for w in vs if w != c]
                for x, y in combinations(others, 2):
                    out.append(_graph_from_labeled(
                        _block_edges(k1, "a", "b", "p") + g_edges
                        + [("a", c), ("a", x), ("b", c), ("b", y)]
                    ))
    return out


def _t222_candidates() -> list[Graph]:
    # Two non-edge-pair blocks on {a,b} and {c,d} wired by all four
    # cross edges; a and b both see exactly c and d.  The double-K33
    # placement is enumerated too and must be rejected by the
    # minimality filter (it has a disconnected proper minor with the
    # property).
    joins = [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    kinds = ("K5-e", "K33x-e", "K33s")
    out = []
    for k1 in kinds:
        for k2 in kinds:
            out.append(_graph_from_labeled(
                _block_edges(k1, "a", "b", "p")
                + _block_edges(k2, "c", "d", "q")
                + joins
            ))
    return out


_FAMILY_CANDIDATES: dict[str, Callable[[], list[Graph]]] = {
    "abEdge9": _abedge9_candidates,
    "bowtie3": _bowtie3_candidates,
    "t220": _t220_candidates,
    "t221": _t221_candidates,
    "t222": _t222_candidates,
}

_FAMILY_COUNTS = {"abEdge9": 9, "bowtie3": 3, "t220": 8, "t221": 8, "t222": 5}

MMNA_FAMILIES = tuple(_FAMILY_COUNTS)


@cache
def build_mmna_family(family: str) -> tuple[Graph, ...]:
    """Enumerate, deduplicate and verify one two-cut family.

    Returns canonically labeled members sorted by canonical key.
    Raises CatalogError when the verified member count disagrees with
    the expected family size, reporting how many distinct candidate
    classes the recipe produced.
    """
    if family not in _FAMILY_CANDIDATES:
        raise ValueError(
            f"unknown family {family!r}; expected one of {MMNA_FAMILIES}"
        )
    classes: dict[bytes, Graph] = {}
    for g in _FAMILY_CANDIDATES[family]():
        classes.setdefault(canonical_key(g), canonical_graph(g))
    kept = [
        classes[key] for key in sorted(classes)
        if is_minor_minimal_upclosed(classes[key], Property.NA)
    ]
    want = _FAMILY_COUNTS[family]
    if len(kept) != want:
        raise CatalogError(
            f"family {family}: expected {want} verified members, got "
            f"{len(kept)} from {len(classes)} distinct candidates"
        )
    return tuple(kept)


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------

def _k5() -> Graph:
    return Graph.complete(5)


def _k33() -> Graph:
    return Graph.complete_bipartite(3, 3)


def _k5_minus_e() -> Graph:
    return _k5().delete_edge(0, 1)


def _k33_minus_e() -> Graph:
    return _k33().delete_edge(0, 3)


def _k33_same_pair() -> Graph:
    # plain K33; vertices 0 and 1 are the same-part nonadjacent pair
    return _k33()


def _k33_plus_e() -> Graph:
    return _k33().add_edge(0, 1)


def _k33_plus_2e() -> Graph:
    # one added edge inside each part; equivalently the split of a K5
    # vertex into two vertices of degree three
    return _k33().add_edge(0, 1).add_edge(3, 4)


def _bar(g: Graph) -> Graph:
    u, v = min(g.sorted_edges())
    return g.subdivide_edge(u, v)


def _k1() -> Graph:
    return Graph(1)


def _k2() -> Graph:
    return Graph.complete(2)


def _rooks9() -> Graph:
    # 3x3 rook moves: two triangles' worth of coordinates, adjacent when
    # either coordinate agrees
    cells = [(r, c) for r in range(3) for c in range(3)]
    idx = {cell: i for i, cell in enumerate(cells)}
    edges = [
        (idx[p], idx[q])
        for i, p in enumerate(cells)
        for q in cells[i + 1:]
        if p[0] == q[0] or p[1] == q[1]
    ]
    return Graph(9, edges)


_GLUE_BLOCKS: dict[str, tuple[Callable[[], Graph], Edge]] = {
    "K5-e": (_k5_minus_e, (0, 1)),
    "K33-e": (_k33_minus_e, (0, 3)),
    "K33": (_k33_same_pair, (0, 1)),
}


def _glued(kind1: str, kind2: str) -> Graph:
    """Two blocks sharing a nonadjacent vertex pair, no edge added."""
    build1, pair1 = _GLUE_BLOCKS[kind1]
    build2, pair2 = _GLUE_BLOCKS[kind2]
    return two_vertex_union(build1(), pair1, build2(), pair2)


def _dot(g: Graph, h: Graph) -> Graph:
    return one_vertex_union(g, 0, h, 0)


def _triangled_k33() -> Graph:
    """K33 with every edge given its own triangle apex (order 15, size 27)."""
    g = _k33()
    edges = list(g.edges)
    apex = g.order
    out = list(edges)
    for u, v in sorted(edges):
        out.extend([(u, apex), (v, apex)])
        apex += 1
    return Graph(apex, out)


# (builder, claims, construction note); claims stick to what is actually
# established for each graph, no extrapolation
_NAMED: dict[str, tuple[Callable[[], Graph], frozenset[str], str]] = {
    "K5": (_k5, frozenset({"nonplanar"}), "complete graph on five vertices"),
    "K33": (_k33, frozenset({"nonplanar"}), "complete bipartite 3+3"),
    "K6": (lambda: Graph.complete(6),
           frozenset({"nonplanar", "MM-NA", "MM-NC"}),
           "complete graph on six vertices"),
    "K6-e": (lambda: Graph.complete(6).delete_edge(0, 1),
             frozenset({"nonplanar", "MM-NE"}),
             "K6 with one edge removed"),
    "K43": (lambda: Graph.complete_bipartite(4, 3),
            frozenset({"nonplanar", "MM-NE", "MM-NC"}),
            "complete bipartite 4+3"),
    "rooks9": (_rooks9, frozenset({"nonplanar", "MM-NE", "MM-NC"}),
               "rook's graph on a 3x3 board"),
    "K5-e": (_k5_minus_e, frozenset({"planar", "AN", "CAN",
                                     "MM-AN", "MM-CAN"}),
             "K5 with one edge removed"),
    "K33-e": (_k33_minus_e, frozenset({"planar", "AN", "MM-AN"}),
              "K33 with one edge removed"),
    "K33+e": (_k33_plus_e, frozenset({"nonplanar", "MM-IE"}),
              "K33 plus one edge inside a part"),
    "K33+2e": (_k33_plus_2e, frozenset({"nonplanar", "MM-IC"}),
               "K33 plus one edge inside each part"),
    "barK5": (lambda: _bar(_k5()), frozenset({"nonplanar", "MM-IC"}),
              "K5 with one edge subdivided"),
    "barK33": (lambda: _bar(_k33()), frozenset({"nonplanar", "MM-IC"}),
               "K33 with one edge subdivided"),
    "K1|K5": (lambda: disjoint_union(_k1(), _k5()),
              frozenset({"nonplanar", "MM-IA"}), "K1 disjoint from K5"),
    "K1|K33": (lambda: disjoint_union(_k1(), _k33()),
               frozenset({"nonplanar", "MM-IA"}), "K1 disjoint from K33"),
    "K2|K5": (lambda: disjoint_union(_k2(), _k5()),
              frozenset({"nonplanar", "MM-IE", "MM-IC"}),
              "K2 disjoint from K5"),
    "K2|K33": (lambda: disjoint_union(_k2(), _k33()),
               frozenset({"nonplanar", "MM-IE", "MM-IC"}),
               "K2 disjoint from K33"),
    "K2.K5": (lambda: _dot(_k2(), _k5()),
              frozenset({"nonplanar", "MM-IE", "MM-IC"}),
              "K2 and K5 sharing one vertex"),
    "K2.K33": (lambda: _dot(_k2(), _k33()),
               frozenset({"nonplanar", "MM-IE", "MM-IC"}),
               "K2 and K33 sharing one vertex"),
    "K5|K5": (lambda: disjoint_union(_k5(), _k5()),
              frozenset({"nonplanar", "MM-NA", "MM-NE", "MM-NC"}),
              "two disjoint copies of K5"),
    "K5|K33": (lambda: disjoint_union(_k5(), _k33()),
               frozenset({"nonplanar", "MM-NA", "MM-NE", "MM-NC"}),
               "K5 disjoint from K33"),
    "K33|K33": (lambda: disjoint_union(_k33(), _k33()),
                frozenset({"nonplanar", "MM-NA", "MM-NE", "MM-NC"}),
                "two disjoint copies of K33"),
    "K5.K5": (lambda: _dot(_k5(), _k5()),
              frozenset({"nonplanar", "MM-NE", "MM-NC"}),
              "two copies of K5 sharing one vertex"),
    "K5.K33": (lambda: _dot(_k5(), _k33()),
               frozenset({"nonplanar", "MM-NE", "MM-NC"}),
               "K5 and K33 sharing one vertex"),
    "K33.K33": (lambda: _dot(_k33(), _k33()),
                frozenset({"nonplanar", "MM-NE", "MM-NC"}),
                "two copies of K33 sharing one vertex"),
}

_GLUED_PAIRS = (
    ("K5-e", "K5-e"),
    ("K5-e", "K33-e"),
    ("K33-e", "K33-e"),
    ("K5-e", "K33"),
    ("K33-e", "K33"),
    ("K33", "K33"),
)

for _k1_, _k2_ in _GLUED_PAIRS:
    _NAMED[f"{_k1_}:{_k2_}"] = (
        (lambda a=_k1_, b=_k2_: _glued(a, b)),
        frozenset({"nonplanar", "MM-NE", "MM-NC"}),
        f"{_k1_} and {_k2_} sharing a nonadjacent vertex pair, no edge added",
    )

#: connective aliases accepted by build_named alongside the ASCII ids
_ID_REWRITES = (
    ("−", "-"),        # minus sign
    ("⊍", "."),        # multiset-dot union
    ("∪̇", "."),  # union with combining dot above
    ("⊔", "|"),        # square cup
    ("⋈", ":"),        # bowtie
    ("3,3", "33"),
    (" ", ""),
)


def _normalize_id(name: str) -> str:
    for old, new in _ID_REWRITES:
        name = name.replace(old, new)
    return name


def named_ids() -> tuple[str, ...]:
    return tuple(_NAMED)


def build_named(name: str) -> Graph:
    """Construct a named graph, canonically labeled.

    Accepts the ASCII ids of ``named_ids()`` plus the typeset spellings
    (true minus, square-cup, dotted-union and bowtie connectives).
    """
    key = _normalize_id(name)
    if key not in _NAMED:
        raise ValueError(f"unknown graph name {name!r}")
    return canonical_graph(_NAMED[key][0]())


# ---------------------------------------------------------------------------
# appendix collections
# ---------------------------------------------------------------------------

_APPENDIX = {"A1_MMNE_15": A1_EDGE_LISTS, "A2_MMNC_22": A2_EDGE_LISTS}


def appendix_graphs(which: str) -> tuple[Graph, ...]:
    """Decode one embedded collection ("A1_MMNE_15" or "A2_MMNC_22")."""
    if which not in _APPENDIX:
        raise ValueError(
            f"unknown collection {which!r}; expected one of {tuple(_APPENDIX)}"
        )
    return tuple(parse_edge_list(text) for text in _APPENDIX[which])


# ---------------------------------------------------------------------------
# non-closure witnesses
# ---------------------------------------------------------------------------

def _ne_witness() -> tuple[Graph, Edge]:
    """Edge-apex graph whose contraction at the unique apex edge is NE.

    K33 with eight of its nine edges triangled; the ninth is subdivided,
    one half triangled and the other half left bare as the apex edge.
    Contracting that edge re-triangles the ninth edge, giving the fully
    triangled K33.
    """
    k33_edges = sorted(_k33().edges)
    skip = (0, 3)
    edges: list[Edge] = []
    apex = 7  # 0..5 the K33, 6 the subdivision vertex
    for u, v in k33_edges:
        if (u, v) == skip:
            continue
        edges.extend([(u, v), (u, apex), (v, apex)])
        apex += 1
    # subdivide the skipped edge through vertex 6, then triangle the
    # (0,6) half; (3,6) stays bare
    edges.extend([(0, 6), (3, 6), (0, apex), (6, apex)])
    return Graph(apex + 1, edges), (3, 6)


def _nc_witness() -> tuple[Graph, Edge]:
    """Contraction-apex graph whose deletion at the unique apex is NC.

    Two copies of K5 sharing an edge; contracting the shared edge gives
    two K4s joined at a vertex (planar), while deleting it leaves a
    graph no single contraction can planarize.
    """
    five = list(combinations(range(5), 2))
    other = [(u if u < 2 else u + 3, v if v < 2 else v + 3) for u, v in five]
    return Graph(8, five + other), (0, 1)


_COUNTEREXAMPLES = {"NE_not_closed": _ne_witness, "NC_not_closed": _nc_witness}


def counterexample(name: str) -> tuple[Graph, Edge]:
    """Return a non-closure witness and its distinguished edge."""
    if name not in _COUNTEREXAMPLES:
        raise ValueError(
            f"unknown counterexample {name!r}; expected one of "
            f"{tuple(_COUNTEREXAMPLES)}"
        )
    return _COUNTEREXAMPLES[name]()


# ---------------------------------------------------------------------------
# the assembled catalog
# ---------------------------------------------------------------------------

@cache
def all_entries() -> tuple[CatalogEntry, ...]:
    entries = [
        CatalogEntry(name, canonical_graph(build()), claims, note)
        for name, (build, claims, note) in _NAMED.items()
    ]
    for family in MMNA_FAMILIES:
        note = f"two-cut composition, {family} recipe"
        for i, g in enumerate(build_mmna_family(family), start=1):
            entries.append(CatalogEntry(
                f"{family}.{i}", g, frozenset({"nonplanar", "MM-NA"}), note
            ))
    for prefix, claim, lists in (
        ("A1", "MM-NE", A1_EDGE_LISTS),
        ("A2", "MM-NC", A2_EDGE_LISTS),
    ):
        for i, text in enumerate(lists, start=1):
            entries.append(CatalogEntry(
                f"{prefix}.{i}", parse_edge_list(text),
                frozenset({"nonplanar", claim}),
                f"embedded edge list {prefix}, entry {i}",
            ))
    for name in _COUNTEREXAMPLES:
        g, _ = counterexample(name)
        entries.append(CatalogEntry(
            name, g, frozenset({"nonplanar"}),
            "non-closure witness with a distinguished edge",
        ))
    return tuple(entries)


def entry(entry_id: str) -> CatalogEntry:
    for e in all_entries():
        if e.id == entry_id:
            return e
    raise ValueError(f"no catalog entry {entry_id!r}")


_MM_LISTS: dict[Property, tuple[str, ...]] = {
    Property.AN: ("K5-e", "K33-e"),
    Property.CAN: ("K5-e",),
    Property.IA: ("K1|K5", "K1|K33"),
    Property.IE: ("K33+e", "K2|K5", "K2|K33", "K2.K5", "K2.K33"),
    Property.IC: ("K33+2e", "barK5", "barK33",
                  "K2|K5", "K2|K33", "K2.K5", "K2.K33"),
    Property.NA: ("K5|K5", "K5|K33", "K33|K33")
    + tuple(f"abEdge9.{i}" for i in range(1, 10))
    + tuple(f"bowtie3.{i}" for i in range(1, 4))
    + tuple(f"t220.{i}" for i in range(1, 9))
    + tuple(f"t221.{i}" for i in range(1, 9))
    + tuple(f"t222.{i}" for i in range(1, 6)),
    Property.NE: ("K5|K5", "K5|K33", "K33|K33", "K5.K5", "K5.K33", "K33.K33")
    + tuple(f"{a}:{b}" for a, b in _GLUED_PAIRS)
    + tuple(f"A1.{i}" for i in range(1, 16)),
    Property.NC: ("K5|K5", "K5|K33", "K33|K33", "K5.K5", "K5.K33", "K33.K33")
    + tuple(f"{a}:{b}" for a, b in _GLUED_PAIRS)
    + tuple(f"A2.{i}" for i in range(1, 23)),
}


def mm_catalog(prop: Property | str) -> tuple[CatalogEntry, ...]:
    """All embedded minor-minimal examples for one property.

    AN, CAN, IA, IE and IC are complete sets; NA, NE and NC are the
    explicitly constructed members (36, 27 and 34), known lower bounds.
    """
    if isinstance(prop, str):
        prop = Property(prop)
    return tuple(entry(i) for i in _MM_LISTS[prop])


# ---------------------------------------------------------------------------
# claim checking and full verification
# ---------------------------------------------------------------------------

def check_claim(g: Graph, claim: str) -> bool:
    """Re-derive one claim from scratch with the real deciders."""
    if claim == "planar":
        return is_planar(g)
    if claim == "nonplanar":
        return not is_planar(g)
    if claim.startswith("MM-"):
        return is_minor_minimal(g, Property(claim[3:]))
    return check(g, Property(claim))


def _claim_task(task: tuple[str, str, int, tuple[Edge, ...]]):
    entry_id, claim, order, edges = task
    try:
        ok = check_claim(Graph(order, edges), claim)
        return entry_id, claim, ok, ""
    except ResourceLimitError as exc:
        return entry_id, claim, False, str(exc)


def verify_entries(entries: Iterable[CatalogEntry],
                   jobs: int = 1) -> list[dict]:
    """Re-derive every claim of every entry; one result dict per entry."""
    entries = list(entries)
    tasks = [
        (e.id, claim, e.graph.order, tuple(sorted(e.graph.edges)))
        for e in entries
        for claim in sorted(e.claims)
    ]
    # heaviest first so parallel workers drain evenly
    tasks.sort(key=lambda t: (not t[1].startswith("MM-"), -(t[2] + len(t[3]))))
    if jobs > 1 and len(tasks) > 1:
        with get_context("fork").Pool(jobs) as pool:
            raw = pool.map(_claim_task, tasks, chunksize=1)
    else:
        raw = [_claim_task(t) for t in tasks]
    by_entry: dict[str, dict[str, dict]] = {}
    for entry_id, claim, ok, detail in raw:
        record = {"ok": ok}
        if detail:
            record["detail"] = detail
        by_entry.setdefault(entry_id, {})[claim] = record
    out = []
    for e in entries:
        claims = {c: by_entry[e.id][c] for c in sorted(e.claims)}
        out.append({
            "id": e.id,
            "order": e.graph.order,
            "size": e.graph.size,
            "claims": claims,
            "ok": all(r["ok"] for r in claims.values()),
        })
    return out


def _keyset(entries: Iterable[CatalogEntry]) -> set[bytes]:
    return {canonical_key(e.graph) for e in entries}


def _structural_checks() -> list[dict]:
    checks: list[dict] = []

    def add(name: str, ok: bool, detail: str) -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    expected_sizes = {Property.AN: 2, Property.CAN: 1, Property.IA: 2,
                      Property.IE: 5, Property.IC: 7, Property.NA: 36,
                      Property.NE: 27, Property.NC: 34}
    got = {p: len(mm_catalog(p)) for p in expected_sizes}
    add("mm-counts", got == expected_sizes,
        ", ".join(f"{p.value}:{n}" for p, n in got.items()))

    for p in expected_sizes:
        members = mm_catalog(p)
        add(f"mm-distinct-{p.value}", len(_keyset(members)) == len(members),
            f"{len(members)} members pairwise non-isomorphic")

    na = [e.graph for e in mm_catalog(Property.NA)]
    add("mmna-min-degree", all(g.min_degree() >= 3 for g in na),
        "every member has minimum degree at least 3")
    kappas = [g.vertex_connectivity() if g.is_connected() else 0 for g in na]
    add("mmna-connectivity",
        all(k == 0 or 2 <= k <= 5 for k in kappas) and 1 not in kappas,
        f"connectivities seen: {sorted(set(kappas))}")

    def split(p: Property, keep) -> set[bytes]:
        return {canonical_key(e.graph) for e in mm_catalog(p)
                if keep(e.graph)}

    disc = {p: split(p, lambda g: not g.is_connected())
            for p in (Property.NA, Property.NE, Property.NC)}
    add("disconnected-coincidence",
        disc[Property.NA] == disc[Property.NE] == disc[Property.NC]
        and len(disc[Property.NA]) == 3,
        "the three disconnected members agree across NA, NE and NC")

    def is_cut1(g: Graph) -> bool:
        return g.is_connected() and g.vertex_connectivity() == 1

    cut1_ne = split(Property.NE, is_cut1)
    cut1_nc = split(Property.NC, is_cut1)
    add("cut-vertex-coincidence",
        cut1_ne == cut1_nc and len(cut1_ne) == 3,
        "the three one-cut members agree across NE and NC")

    a1 = _keyset(e for e in all_entries() if e.id.startswith("A1."))
    a2 = _keyset(e for e in all_entries() if e.id.startswith("A2."))
    wanted_a1 = {canonical_key(build_named(n)) for n in
                 ("K43", "K6-e", "rooks9")}
    wanted_a2 = {canonical_key(build_named(n)) for n in
                 ("K43", "K6", "rooks9")}
    add("embedded-identifications",
        wanted_a1 <= a1 and wanted_a2 <= a2,
        "K43, K6-e and the rook's graph appear in A1; K43, K6 and the "
        "rook's graph in A2")

    g, e = counterexample("NE_not_closed")
    apexes = [f for f in g.sorted_edges()
              if is_planar(g.delete_edge(*f))]
    contracted = g.contract_edge(*e)
    add("NE-not-closed",
        apexes == [e]
        and check(contracted, Property.NE)
        and canonical_key(contracted) == canonical_key(_triangled_k33()),
        "unique planarizing deletion; contracting it leaves an NE graph "
        "(the fully triangled K33)")

    g, e = counterexample("NC_not_closed")
    capexes = [f for f in g.sorted_edges()
               if is_planar(g.contract_edge(*f))]
    k4k4 = _dot(Graph.complete(4), Graph.complete(4))
    add("NC-not-closed",
        (g.order, g.size) == (8, 19)
        and capexes == [e]
        and canonical_key(g.contract_edge(*e)) == canonical_key(k4k4)
        and check(g.delete_edge(*e), Property.NC),
        "unique planarizing contraction onto two K4s sharing a vertex; "
        "deleting it leaves an NC graph")

    return checks


def verify_catalog(jobs: int = 1) -> dict:
    """Re-derive every claim and every cross-check; never raises on failure.

    The report carries one record per entry, one per structural check,
    and a failure count the caller can turn into an exit code.
    """
    start = time.monotonic()
    entry_reports = verify_entries(all_entries(), jobs=jobs)
    checks = _structural_checks()
    failures = sum(not r["ok"] for r in entry_reports)
    failures += sum(not c["ok"] for c in checks)
    return {
        "entries": entry_reports,
        "checks": checks,
        "entry_count": len(entry_reports),
        "claim_count": sum(len(r["claims"]) for r in entry_reports),
        "failures": failures,
        "ok": failures == 0,
        "elapsed_seconds": round(time.monotonic() - start, 3),
    }
