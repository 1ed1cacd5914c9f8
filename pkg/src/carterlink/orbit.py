"""Dual reflections, linkage systems, loctets and projections.

The dual reflection at vertex t sends v to v - v_t * (column t of B): the
t coordinate flips sign and every neighbor coordinate gains +v_t across a
solid edge and -v_t across a dotted one.  The linkage vectors of a diagram
are closed under these reflections; the resulting graph is the linkage
system.  Every node with a nonzero label on the pattern alphas a1, a2, a3
falls into exactly one 8-element loctet; the remaining nodes have zero
labels on all pattern alphas.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import diagram as dg
from .cartan import PartialCartan, build_partial_cartan, simply_extendable
from .linkage import Linkage, enumerate_linkages, form_value

LOCTET_TYPES = ("L12", "L13", "L23")


class VerificationError(RuntimeError):
    """An exact structural claim failed; the message names the witness."""


class UnsupportedDiagram(ValueError):
    """Linkage-system structure needs a 4-cycle or branch-point diagram
    (D4(a1)/D_l(a_k), D_l, E6, E7, E8), not a bare chain."""


def dual_reflect(pc: PartialCartan, t, v: Sequence[int]) -> Linkage:
    """Apply the dual reflection at vertex t to an integer label vector."""
    i = pc.diagram.index_of(t)
    if len(v) != len(pc):
        raise ValueError(f"vector of length {len(v)} for rank {len(pc)}")
    vi = v[i]
    if vi == 0:
        return tuple(v)
    b = pc.b_int()
    return tuple(x - vi * b[j][i] for j, x in enumerate(v))


@dataclass(frozen=True)
class Loctet:
    """An 8-element spindle orbit.

    ``members`` is ordered gamma(1..8) for the generated kinds L12/L13/L23;
    for the bare-square diagram D4(a1) each whole component is a single
    loctet of kind 'D4' in sorted order."""

    kind: str
    members: tuple[Linkage, ...]

    @property
    def gamma8(self) -> Linkage:
        return self.members[7]

    def member_set(self) -> frozenset:
        return frozenset(self.members)


@dataclass(frozen=True)
class LinkageSystem:
    """The orbit graph of all linkage vectors under the dual reflections."""

    pc: PartialCartan
    nodes: tuple[Linkage, ...]
    edges: tuple[tuple[int, int, str], ...]
    components: tuple[tuple[int, ...], ...]
    component_p: tuple[Fraction, ...]
    loctets: tuple[Loctet, ...]
    unicolored: tuple[Linkage, ...]

    def node_index(self, v: Linkage) -> int:
        return self.nodes.index(tuple(v))

    def component_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.components)


def _pattern_indices(pc: PartialCartan) -> tuple[int, int, int, int]:
    pat = pc.diagram.pattern
    if pat is None:
        raise UnsupportedDiagram(
            f"{pc.diagram.name}: no D5(a1)/D4 pattern subdiagram")
    idx = tuple(pc.diagram.index_of(v) for v in pat)
    b = pc.b_int()
    for a in idx[:3]:
        if b[a][idx[3]] != dg.SOLID:
            raise UnsupportedDiagram(
                f"{pc.diagram.name}: pattern edge {pc.diagram.vertices[a]}-"
                f"{pc.diagram.vertices[idx[3]]} is not solid")
    return idx


def _is_bare_square(d: dg.CarterDiagram) -> bool:
    return (
        len(d.vertices) == 4
        and len(d.edges) == 4
        and all(len(d.neighbors(v)) == 2 for v in d.vertices)
    )


def gamma8_candidates(pc: PartialCartan, kind: str,
                      nodes: Optional[tuple[Linkage, ...]] = None) -> tuple[Linkage, ...]:
    """All eighth linkage diagrams of loctets of the given kind.

    For kind L_ij the candidates carry 0 at pattern alphas a_i and a_j, 1 at
    the remaining a_k, 0 at the center b1, and anything admissible elsewhere.
    """
    if kind not in LOCTET_TYPES:
        raise ValueError(f"loctet kind must be one of {LOCTET_TYPES}, got {kind!r}")
    ai, aj = (int(c) - 1 for c in kind[1:])
    ak = ({0, 1, 2} - {ai, aj}).pop()
    p = _pattern_indices(pc)
    if nodes is None:
        nodes = enumerate_linkages(pc)
    return tuple(
        v for v in nodes
        if v[p[ai]] == 0 and v[p[aj]] == 0 and v[p[ak]] == 1 and v[p[3]] == 0
    )


def loctet_from_gamma8(pc: PartialCartan, g8: Sequence[int], kind: str) -> Loctet:
    """Grow the full loctet from its eighth member by dual reflections.

    gamma(7) = s*_{a_k} gamma(8); gamma(6) = s*_{b1} gamma(7);
    gamma(4) = s*_{a_i} gamma(6); gamma(5) = s*_{a_j} gamma(6);
    gamma(1..3) are the negatives of gamma(8..6).
    """
    if kind not in LOCTET_TYPES:
        raise ValueError(f"loctet kind must be one of {LOCTET_TYPES}, got {kind!r}")
    ai, aj = (int(c) - 1 for c in kind[1:])
    ak = ({0, 1, 2} - {ai, aj}).pop()
    p = _pattern_indices(pc)
    verts = pc.diagram.vertices
    g8 = tuple(g8)
    g7 = dual_reflect(pc, verts[p[ak]], g8)
    g6 = dual_reflect(pc, verts[p[3]], g7)
    g4 = dual_reflect(pc, verts[p[ai]], g6)
    g5 = dual_reflect(pc, verts[p[aj]], g6)
    neg = lambda v: tuple(-x for x in v)
    members = (neg(g8), neg(g7), neg(g6), g4, g5, g6, g7, g8)
    if len(set(members)) != 8:
        raise VerificationError(f"loctet from {g8} ({kind}): members not distinct")
    for m in members:
        if form_value(pc, m) >= 2:
            raise VerificationError(f"loctet from {g8} ({kind}): {m} is not a linkage vector")
    return Loctet(kind, members)


def build_system(pc: PartialCartan) -> LinkageSystem:
    """Enumerate nodes, close them under the generators, find components,

    collect loctets, and verify the loctet partition.  The empty system (E8)
    is legal."""
    d = pc.diagram
    nodes = enumerate_linkages(pc)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = set()
    for v in nodes:
        for t in d.vertices:
            w = dual_reflect(pc, t, v)
            if w == v:
                continue
            j = index.get(w)
            if j is None:
                raise VerificationError(
                    f"{d.name}: reflection at {t} leaves the linkage set: {v} -> {w}")
            i = index[v]
            edges.add((min(i, j), max(i, j), t.id))
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

    comp_map: dict[int, list[int]] = {}
    for i in range(n):
        comp_map.setdefault(find(i), []).append(i)
    components = tuple(sorted((tuple(sorted(c)) for c in comp_map.values())))
    component_p = []
    for comp in components:
        values = {form_value(pc, nodes[i]) for i in comp}
        if len(values) != 1:
            raise VerificationError(f"{d.name}: inverse form not constant on a component")
        component_p.append(values.pop())

    if d.pattern is not None:
        loctets = _generated_loctets(pc, nodes)
        pat = _pattern_indices(pc)
        membership: dict[Linkage, int] = {}
        for li, loc in enumerate(loctets):
            for m in loc.members:
                if m in membership:
                    raise VerificationError(f"{d.name}: {m} lies in two distinct loctets")
                membership[m] = li
        for v in nodes:
            has_alpha = any(v[i] != 0 for i in pat[:3])
            if has_alpha and v not in membership:
                raise VerificationError(f"{d.name}: {v} has a pattern alpha label but no loctet")
            if not has_alpha and v in membership:
                raise VerificationError(f"{d.name}: {v} is pattern-alpha free yet in a loctet")
        unicolored = tuple(v for v in nodes if v not in membership)
    elif _is_bare_square(d) and nodes:
        sizes = {len(c) for c in components}
        if sizes != {8}:
            raise VerificationError(f"{d.name}: bare-square components of sizes {sizes}")
        loctets = tuple(
            Loctet("D4", tuple(nodes[i] for i in comp)) for comp in components
        )
        unicolored = ()
    elif not nodes:
        loctets = ()
        unicolored = ()
    else:
        raise UnsupportedDiagram(
            f"{d.name}: no D5(a1)/D4 pattern subdiagram")

    return LinkageSystem(
        pc=pc,
        nodes=nodes,
        edges=tuple(sorted(edges)),
        components=components,
        component_p=tuple(component_p),
        loctets=loctets,
        unicolored=unicolored,
    )


def _generated_loctets(pc: PartialCartan, nodes: tuple[Linkage, ...]) -> tuple[Loctet, ...]:
    out: list[Loctet] = []
    seen: set = set()
    for kind in LOCTET_TYPES:
        for g8 in gamma8_candidates(pc, kind, nodes):
            loc = loctet_from_gamma8(pc, g8, kind)
            key = loc.member_set()
            if key not in seen:
                seen.add(key)
                out.append(loc)
    return tuple(out)


# -- projection ----------------------------------------------------------------


@dataclass(frozen=True)
class ProjectionReport:
    """Outcome of projecting an extended system onto its base."""

    dropped: dg.VertexId
    attach: dg.VertexId
    base_system: LinkageSystem
    kernel: tuple[Linkage, ...]
    image_count: int
    distinct_images: int
    loctet_pairs: tuple[tuple[int, int], ...]

    def fibers(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for ext_i, base_i in self.loctet_pairs:
            out.setdefault(base_i, []).append(ext_i)
        return {k: tuple(v) for k, v in sorted(out.items())}


def project_system(ext: LinkageSystem, dropped, base: PartialCartan) -> ProjectionReport:
    """Drop one coordinate of every node of ``ext`` and verify the images.

    Preconditions: the extended diagram must be the base plus one leaf at a
    simply extendable vertex, ``dropped`` being the leaf.  Every nonzero
    image must be a base linkage vector; the kernel must be exactly the two
    unit vectors at the dropped coordinate; loctets must map onto loctets.
    """
    d_ext = ext.pc.diagram
    di = d_ext.index_of(dropped)
    dropped = d_ext.vertices[di]
    keep = [i for i in range(len(d_ext)) if i != di]
    b_ext = ext.pc.b_int()
    sub = tuple(tuple(b_ext[r][c] for c in keep) for r in keep)
    if sub != base.b_int():
        raise dg.DiagramError(
            f"{d_ext.name} minus {dropped} does not match {base.diagram.name} "
            "(vertex order included)")
    column = [(r, b_ext[r][di]) for r in keep if b_ext[r][di] != 0]
    if len(column) != 1 or column[0][1] != dg.SOLID:
        raise dg.DiagramError(f"{dropped} is not a simple-extension leaf")
    attach = base.diagram.vertices[keep.index(column[0][0])]
    if not simply_extendable(base, attach):
        raise dg.DiagramError(
            f"{base.diagram.name} is not simply extendable at {attach}")

    base_sys = build_system(base)
    base_nodes = set(base_sys.nodes)

    def project(v: Linkage) -> Linkage:
        return tuple(x for i, x in enumerate(v) if i != di)

    kernel = []
    images = set()
    for v in ext.nodes:
        img = project(v)
        if all(x == 0 for x in img):
            kernel.append(v)
            continue
        if img not in base_nodes:
            raise VerificationError(
                f"projection of {v} gives {img}, not a linkage vector of "
                f"{base.diagram.name}")
        images.add(img)

    unit = tuple(1 if i == di else 0 for i in range(len(d_ext)))
    neg = tuple(-x for x in unit)
    if sorted(kernel) != sorted([neg, unit]):
        raise VerificationError(
            f"kernel is {sorted(kernel)}, expected the two unit vectors at {dropped}")

    base_sets = {loc.member_set(): i for i, loc in enumerate(base_sys.loctets)}
    pairs = []
    for ei, loc in enumerate(ext.loctets):
        img_set = frozenset(project(m) for m in loc.members)
        bi = base_sets.get(img_set)
        if bi is None:
            raise VerificationError(
                f"loctet {ei} ({loc.kind}) of {d_ext.name} does not project onto "
                f"a loctet of {base.diagram.name}")
        pairs.append((ei, bi))

    return ProjectionReport(
        dropped=dropped,
        attach=attach,
        base_system=base_sys,
        kernel=tuple(sorted(kernel)),
        image_count=len(ext.nodes) - len(kernel),
        distinct_images=len(images),
        loctet_pairs=tuple(pairs),
    )


# -- export --------------------------------------------------------------------


def label_of(v: Linkage) -> str:
    return ",".join(str(x) for x in v)


def to_dot(sys: LinkageSystem) -> str:
    """Graphviz rendering: loctets as clusters, edges labeled by generator."""
    lines = [f'graph "{sys.pc.diagram.name}" {{', "  node [shape=box];"]
    in_loctet = set()
    for li, loc in enumerate(sys.loctets):
        lines.append(f"  subgraph cluster_{li} {{")
        lines.append(f'    label="{loc.kind}";')
        for m in loc.members:
            i = sys.node_index(m)
            in_loctet.add(i)
            lines.append(f'    n{i} [label="{label_of(m)}"];')
        lines.append("  }")
    for i, v in enumerate(sys.nodes):
        if i not in in_loctet:
            lines.append(f'  n{i} [label="{label_of(v)}"];')
    for i, j, gen in sys.edges:
        lines.append(f'  n{i} -- n{j} [label="{gen}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(sys: LinkageSystem, indent: Optional[int] = None) -> str:
    doc = {
        "diagram": json.loads(dg.to_json(sys.pc.diagram)),
        "nodes": [list(v) for v in sys.nodes],
        "edges": [[i, j, gen] for i, j, gen in sys.edges],
        "components": [list(c) for c in sys.components],
        "component_p": [str(p) for p in sys.component_p],
        "loctets": [{"kind": loc.kind, "members": [sys.node_index(m) for m in loc.members]}
                    for loc in sys.loctets],
        "unicolored": [sys.node_index(v) for v in sys.unicolored],
    }
    return json.dumps(doc, indent=indent)


_SYSTEM_KEYS = {"diagram", "nodes", "edges", "components", "component_p",
                "loctets", "unicolored"}


def from_json(text: str) -> LinkageSystem:
    """Parse a serialized system back; validates keys and node indices."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise dg.DiagramError("system JSON must be an object")
    for key in doc:
        if key not in _SYSTEM_KEYS:
            raise dg.DiagramError(f"system JSON: unknown key {key!r}")
    for key in _SYSTEM_KEYS:
        if key not in doc:
            raise dg.DiagramError(f"system JSON is missing {key!r}")
    d = dg.from_json(json.dumps(doc["diagram"]))
    pc = build_partial_cartan(d)
    nodes = tuple(tuple(int(x) for x in v) for v in doc["nodes"])
    loctets = tuple(
        Loctet(str(item["kind"]), tuple(nodes[i] for i in item["members"]))
        for item in doc["loctets"]
    )
    return LinkageSystem(
        pc=pc,
        nodes=nodes,
        edges=tuple((int(i), int(j), str(g)) for i, j, g in doc["edges"]),
        components=tuple(tuple(int(i) for i in c) for c in doc["components"]),
        component_p=tuple(Fraction(p) for p in doc["component_p"]),
        loctets=loctets,
        unicolored=tuple(nodes[i] for i in doc["unicolored"]),
    )
