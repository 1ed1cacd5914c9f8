"""Carter and Dynkin diagrams: bicolored vertices, solid/dotted edges.

A diagram is a connected signed bipartite graph.  Vertices split into an
alpha set and a beta set (mutually orthogonal root families); every edge
joins the two colors.  A solid edge records inner product -1 (obtuse pair),
a dotted edge +1 (acute pair).

The catalog reproduces the canonical vertex orders of the standard tables
for the 4-cycle diagrams D4(a1) .. D7(a2) and the Dynkin diagrams, so the
Gram matrix of a cataloged diagram is reproducible bit for bit.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

ALPHA = "alpha"
BETA = "beta"

SOLID = -1
DOTTED = 1

SIGN_NAMES = {SOLID: "solid", DOTTED: "dotted"}
SIGN_VALUES = {"solid": SOLID, "dotted": DOTTED}

MAX_RANK = 12


class DiagramError(ValueError):
    """Unknown name, malformed construction, or bad JSON."""


@dataclass(frozen=True, order=True)
class VertexId:
    """A diagram vertex: kind letter, index, and color.

    Kinds 'a'/'b' are the alpha/beta families of the canonical tables;
    kinds 't'/'f' are the two chains of the parametric D_l(a_k) family,
    whose colors alternate along the chain.
    """

    kind: str
    index: int
    color: str

    @property
    def id(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.id


def _va(i: int) -> VertexId:
    return VertexId("a", i, ALPHA)


def _vb(i: int) -> VertexId:
    return VertexId("b", i, BETA)


def _chain(kind: str, length: int) -> list[VertexId]:
    # chains attach to a beta vertex, so they start alpha and alternate
    return [VertexId(kind, i + 1, ALPHA if i % 2 == 0 else BETA) for i in range(length)]


Edge = tuple[VertexId, VertexId, int]


@dataclass(frozen=True)
class CarterDiagram:
    """A named diagram with an ordered vertex tuple and signed edges.

    ``pattern`` marks the predefined D5(a1)/D4 subdiagram (a1, a2, a3, b1
    roles) used by the loctet machinery; it is None when the diagram has no
    such subdiagram (the bare 4-cycle, the A_l chains).
    """

    name: str
    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]
    pattern: Optional[tuple[VertexId, VertexId, VertexId, VertexId]] = field(default=None)

    def __post_init__(self) -> None:
        pos = {v: i for i, v in enumerate(self.vertices)}
        if len(pos) != len(self.vertices):
            raise DiagramError(f"{self.name}: duplicate vertices")
        norm = []
        seen = set()
        for u, v, s in self.edges:
            if u not in pos or v not in pos:
                raise DiagramError(f"{self.name}: edge endpoint not a vertex")
            if u == v:
                raise DiagramError(f"{self.name}: self loop at {u}")
            if s not in (SOLID, DOTTED):
                raise DiagramError(f"{self.name}: bad edge sign {s}")
            key = (min(pos[u], pos[v]), max(pos[u], pos[v]))
            if key in seen:
                raise DiagramError(f"{self.name}: duplicate edge {u}-{v}")
            seen.add(key)
            if pos[u] > pos[v]:
                u, v = v, u
            norm.append((u, v, s))
        norm.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        object.__setattr__(self, "edges", tuple(norm))

    # -- lookups ------------------------------------------------------------

    def index_of(self, v) -> int:
        v = self.vertex(v)
        for i, u in enumerate(self.vertices):
            if u == v:
                return i
        raise DiagramError(f"{self.name}: unknown vertex {v}")

    def vertex(self, v) -> VertexId:
        if isinstance(v, VertexId):
            if v not in self.vertices:
                raise DiagramError(f"{self.name}: unknown vertex {v}")
            return v
        for u in self.vertices:
            if u.id == str(v):
                return u
        raise DiagramError(f"{self.name}: unknown vertex {v!r}")

    def __len__(self) -> int:
        return len(self.vertices)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Integer Gram matrix: 2 on the diagonal, edge signs off it."""
        n = len(self.vertices)
        pos = {v: i for i, v in enumerate(self.vertices)}
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
        for u, v, s in self.edges:
            g[pos[u]][pos[v]] = s
            g[pos[v]][pos[u]] = s
        return tuple(tuple(r) for r in g)

    def neighbors(self, v) -> list[tuple[VertexId, int]]:
        v = self.vertex(v)
        out = []
        for a, b, s in self.edges:
            if a == v:
                out.append((b, s))
            elif b == v:
                out.append((a, s))
        return out

    def alpha_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v.color == ALPHA)

    def beta_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v.color == BETA)

    def is_dynkin(self) -> bool:
        return all(s == SOLID for _, _, s in self.edges)


# -- validation --------------------------------------------------------------


def validate(d: CarterDiagram) -> list[str]:
    """Return a list of violations; empty means the diagram is well formed."""
    problems: list[str] = []
    for u, v, s in d.edges:
        if u.color == v.color:
            problems.append(f"edge {u}-{v} joins two {u.color} vertices")
    if d.vertices:
        seen = {d.vertices[0]}
        frontier = [d.vertices[0]]
        adj: dict[VertexId, list[VertexId]] = {v: [] for v in d.vertices}
        for u, v, _ in d.edges:
            adj[u].append(v)
            adj[v].append(u)
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        if len(seen) != len(d.vertices):
            problems.append("diagram is disconnected")
    ids = [v.id for v in d.vertices]
    if len(set(ids)) != len(ids):
        problems.append("duplicate vertex ids")
    return problems


# -- catalog -----------------------------------------------------------------

# Edge lists in the canonical table order.  's' solid, 'd' dotted.
_C4_TABLE: dict[str, tuple[int, int, list[tuple[str, str, str]]]] = {
    "D4(a1)": (2, 2, [("a1", "b1", "s"), ("a1", "b2", "s"), ("a2", "b1", "d"), ("a2", "b2", "s")]),
    "D5(a1)": (3, 2, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s")]),
    "E6(a1)": (3, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a3", "b3", "s")]),
    "E6(a2)": (3, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a1", "b3", "d"), ("a3", "b3", "s")]),
    "D6(a1)": (3, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a1", "b3", "s")]),
    "D6(a2)": (4, 2, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a4", "b2", "s")]),
    "E7(a1)": (3, 4, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a3", "b3", "s"), ("a1", "b4", "s")]),
    "E7(a2)": (3, 4, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a3", "b3", "s"), ("a2", "b4", "s")]),
    "E7(a3)": (3, 4, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a1", "b3", "d"), ("a3", "b3", "s"),
                      ("a2", "b4", "s")]),
    "E7(a4)": (3, 4, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a1", "b3", "s"), ("a3", "b3", "d"),
                      ("a1", "b4", "d"), ("a2", "b4", "s")]),
    "D7(a1)": (4, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a1", "b3", "s"), ("a4", "b3", "s")]),
    "D7(a2)": (4, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                      ("a2", "b2", "d"), ("a3", "b2", "s"), ("a4", "b2", "s"), ("a1", "b3", "s")]),
}

# Dynkin diagrams in the same table convention: b1 is the branch point with
# alpha neighbors a1, a2, a3; the tail continues from a2 (and from a1 for the
# E family second branch).
_DYNKIN_TABLE: dict[str, tuple[int, int, list[tuple[str, str, str]]]] = {
    "D4": (3, 1, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s")]),
    "D5": (3, 2, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"), ("a2", "b2", "s")]),
    "D6": (4, 2, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                  ("a2", "b2", "s"), ("a4", "b2", "s")]),
    "D7": (4, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                  ("a2", "b2", "s"), ("a4", "b2", "s"), ("a4", "b3", "s")]),
    "E6": (3, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                  ("a1", "b2", "s"), ("a2", "b3", "s")]),
    "E7": (4, 3, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                  ("a1", "b2", "s"), ("a2", "b3", "s"), ("a4", "b3", "s")]),
    "E8": (4, 4, [("a1", "b1", "s"), ("a2", "b1", "s"), ("a3", "b1", "s"),
                  ("a1", "b2", "s"), ("a2", "b3", "s"), ("a4", "b3", "s"), ("a4", "b4", "s")]),
}


def _from_table(name: str, na: int, nb: int, edges: list[tuple[str, str, str]],
                pattern: bool) -> CarterDiagram:
    verts = [_va(i + 1) for i in range(na)] + [_vb(i + 1) for i in range(nb)]
    byid = {v.id: v for v in verts}
    es = [(byid[u], byid[v], SOLID if s == "s" else DOTTED) for u, v, s in edges]
    pat = (byid["a1"], byid["a2"], byid["a3"], byid["b1"]) if pattern else None
    return CarterDiagram(name, tuple(verts), tuple(es), pat)


_NAME_RE = re.compile(r"^([ADE])_?(\d+)(?:\(\s*a_?(\d+)\s*\)|a(\d+))?$", re.IGNORECASE)


def parse_name(name: str) -> tuple[str, int, Optional[int]]:
    """Parse 'E6(a1)', 'E6a1', 'D_10(a_3)', 'A5' into (family, l, k | None)."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise DiagramError(f"unknown diagram name {name!r}")
    family = m.group(1).upper()
    l = int(m.group(2))
    k = m.group(3) or m.group(4)
    return family, l, int(k) if k is not None else None


def canonical_name(family: str, l: int, k: Optional[int]) -> str:
    return f"{family}{l}(a{k})" if k is not None else f"{family}{l}"


def catalog_names() -> list[str]:
    """The cataloged names with explicit table data."""
    return list(_C4_TABLE) + list(_DYNKIN_TABLE)


def catalog(name: str) -> CarterDiagram:
    """Build a diagram by name.

    Tabled names ('D4(a1)' .. 'D7(a2)', Dynkin 'D4' .. 'E8') come out in the
    canonical table vertex order.  'A_l' chains and the parametric families
    'D_l' / 'D_l(a_k)' are accepted up to rank 12.
    """
    family, l, k = parse_name(name)
    cname = canonical_name(family, l, k)
    if cname in _C4_TABLE:
        return _from_table(cname, *_C4_TABLE[cname], pattern=cname != "D4(a1)")
    if cname in _DYNKIN_TABLE:
        return _from_table(cname, *_DYNKIN_TABLE[cname], pattern=True)
    if l > MAX_RANK:
        raise DiagramError(f"{cname}: rank {l} exceeds the supported bound {MAX_RANK}")
    if family == "A" and k is None:
        return dynkin_A(l)
    if family == "D" and k is None:
        return dynkin_D(l)
    if family == "D" and k is not None:
        return carter_D_ak(l, k)
    raise DiagramError(f"unknown diagram name {name!r}")


def dynkin_A(l: int) -> CarterDiagram:
    """The A_l chain, alternately colored, all edges solid."""
    if not 1 <= l <= MAX_RANK:
        raise DiagramError(f"A_l needs 1 <= l <= {MAX_RANK}, got {l}")
    path = [(_va if i % 2 == 0 else _vb)(i // 2 + 1) for i in range(l)]
    verts = sorted(path, key=lambda v: (v.color != ALPHA, v.index))
    edges = [(path[i], path[i + 1], SOLID) for i in range(l - 1)]
    return CarterDiagram(f"A{l}", tuple(verts), tuple(edges), None)


def dynkin_D(l: int) -> CarterDiagram:
    """The D_l Dynkin diagram: branch point b1, tail growing from a2."""
    if not 4 <= l <= MAX_RANK:
        raise DiagramError(f"D_l needs 4 <= l <= {MAX_RANK}, got {l}")
    if f"D{l}" in _DYNKIN_TABLE:
        return catalog(f"D{l}")
    # tail vertices beyond the branch: b2, a4, b3, a5, ...
    tail = [_vb(i // 2 + 2) if i % 2 == 0 else _va(i // 2 + 4) for i in range(l - 4)]
    path = [_va(2)] + tail
    verts = sorted([_va(1), _va(2), _va(3), _vb(1)] + tail,
                   key=lambda v: (v.color != ALPHA, v.index))
    edges = [(_va(1), _vb(1), SOLID), (_va(2), _vb(1), SOLID), (_va(3), _vb(1), SOLID)]
    edges += [(path[i], path[i + 1], SOLID) for i in range(len(path) - 1)]
    return CarterDiagram(f"D{l}", tuple(verts), tuple(edges),
                         (_va(1), _va(2), _va(3), _vb(1)))


def carter_D_ak(l: int, k: int) -> CarterDiagram:
    """The 4-cycle family D_l(a_k).

    Central square a2-b1-a3-b2 with the single dotted edge (a2, b2); a chain
    of l-k'-3 vertices f1.. grows from b1 and a chain of k'-1 vertices t1..
    from b2, where k' = min(k, l-k-2) (the two parameters give the same
    diagram).  All chain edges are solid and chains alternate colors starting
    alpha.  Vertex order: a2, a3, b1, b2, t1.., f1.. .
    """
    if l < 4 or k < 1 or k > l - 3:
        raise DiagramError(f"D_l(a_k) needs l >= 4 and 1 <= k <= l-3, got l={l}, k={k}")
    if l > MAX_RANK:
        raise DiagramError(f"D{l}(a{k}): rank {l} exceeds the supported bound {MAX_RANK}")
    keff = min(k, l - k - 2)
    t_chain = _chain("t", keff - 1)
    f_chain = _chain("f", l - keff - 3)
    a2, a3, b1, b2 = _va(2), _va(3), _vb(1), _vb(2)
    verts = (a2, a3, b1, b2, *t_chain, *f_chain)
    edges = [(a2, b1, SOLID), (a3, b1, SOLID), (a3, b2, SOLID), (a2, b2, DOTTED)]
    prev = b2
    for v in t_chain:
        edges.append((prev, v, SOLID))
        prev = v
    prev = b1
    for v in f_chain:
        edges.append((prev, v, SOLID))
        prev = v
    pattern = (f_chain[0], a2, a3, b1) if f_chain else None
    return CarterDiagram(f"D{l}(a{k})", verts, tuple(edges), pattern)


# -- extension ----------------------------------------------------------------


def extend(d: CarterDiagram, at) -> CarterDiagram:
    """Append one vertex of the opposite color, solid-joined to ``at``."""
    at = d.vertex(at)
    color = BETA if at.color == ALPHA else ALPHA
    kind = "b" if color == BETA else "a"
    used = {v.index for v in d.vertices if v.kind == kind}
    new = VertexId(kind, max(used, default=0) + 1, color)
    return CarterDiagram(f"{d.name}+{at.id}", d.vertices + (new,),
                         d.edges + ((at, new, SOLID),), d.pattern)


# -- pattern detection ---------------------------------------------------------


def detect_pattern(d: CarterDiagram) -> Optional[tuple[VertexId, VertexId, VertexId, VertexId]]:
    """Locate the predefined D5(a1)/D4 subdiagram (a1, a2, a3, b1 roles).

    The center is the first beta vertex (in canonical order) with exactly
    three alpha neighbors, all solid.  In the 4-cycle case the two square
    members take the a2 (dotted to the opposite beta) and a3 roles.
    """
    for center in d.vertices:
        if center.color != BETA:
            continue
        nbrs = d.neighbors(center)
        alphas = [(v, s) for v, s in nbrs if v.color == ALPHA]
        if len(alphas) != 3 or any(s != SOLID for _, s in alphas):
            continue
        legs = [v for v, _ in alphas]
        legs.sort(key=d.index_of)
        for other in d.vertices:
            if other.color != BETA or other == center:
                continue
            touching = {v: s for v, s in d.neighbors(other) if v in legs}
            if len(touching) == 2:
                dotted = sorted((v for v, s in touching.items() if s == DOTTED), key=d.index_of)
                solid = sorted((v for v, s in touching.items() if s == SOLID), key=d.index_of)
                outside = next(v for v in legs if v not in touching)
                if len(dotted) == 1 and len(solid) == 1:
                    return (outside, dotted[0], solid[0], center)
        return (legs[0], legs[1], legs[2], center)
    return None


# -- isomorphism ---------------------------------------------------------------


def isomorphic(d1: CarterDiagram, d2: CarterDiagram, allow_switching: bool = True) -> bool:
    """Exact signed-graph isomorphism search.

    With ``allow_switching`` the comparison treats diagrams related by vertex
    sign flips (replacing a root by its negative, which toggles all its edge
    signs) as equal; that is the equivalence under which D_l(a_k) and
    D_l(a_{l-k-2}) coincide.  Without it the edge signs must match exactly.
    """
    return find_isomorphism(d1, d2, allow_switching) is not None


def find_isomorphism(d1: CarterDiagram, d2: CarterDiagram,
                     allow_switching: bool = True) -> Optional[dict]:
    """First vertex bijection d1 -> d2 realizing the isomorphism, or None.

    Useful as the documented permutation between a parametric diagram and
    its tabled counterpart, e.g. carter_D_ak(6, 2) onto catalog('D6(a2)').
    """
    n = len(d1.vertices)
    if n != len(d2.vertices) or len(d1.edges) != len(d2.edges):
        return None
    g1, g2 = d1.gram(), d2.gram()

    def degs(g):
        return sorted(sorted(abs(x) for x in row if x not in (0, 2)) for row in g)

    if degs(g1) != degs(g2):
        return None

    def deg(g, i):
        return sum(1 for x in g[i] if x not in (0, 2))

    used = [False] * n
    perm = [-1] * n

    def ok(i: int, j: int) -> bool:
        for i2 in range(n):
            if perm[i2] >= 0:
                if allow_switching:
                    if abs(g1[i][i2]) != abs(g2[j][perm[i2]]):
                        return False
                elif g1[i][i2] != g2[j][perm[i2]]:
                    return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return not allow_switching or _switching_consistent(g1, g2, perm)
        for j in range(n):
            if not used[j] and deg(g1, i) == deg(g2, j) and ok(i, j):
                used[j] = True
                perm[i] = j
                if rec(i + 1):
                    return True
                used[j] = False
                perm[i] = -1
        return False

    if not rec(0):
        return None
    return {d1.vertices[i]: d2.vertices[perm[i]] for i in range(n)}


def _switching_consistent(g1, g2, perm) -> bool:
    """Check a sign assignment exists: g2[pi(u)][pi(v)] = e_u e_v g1[u][v]."""
    n = len(g1)
    eps = [0] * n
    for start in range(n):
        if eps[start]:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v in range(n):
                if u == v or g1[u][v] == 0:
                    continue
                want = g2[perm[u]][perm[v]] * g1[u][v]  # = e_u * e_v, each edge +-1
                if eps[v] == 0:
                    eps[v] = eps[u] * want
                    stack.append(v)
                elif eps[u] * eps[v] != want:
                    return False
    return True


# -- JSON ----------------------------------------------------------------------


def to_json(d: CarterDiagram, indent: Optional[int] = None) -> str:
    doc = {
        "name": d.name,
        "vertices": [{"id": v.id, "color": v.color} for v in d.vertices],
        "edges": [{"u": u.id, "v": v.id, "sign": SIGN_NAMES[s]} for u, v, s in d.edges],
    }
    return json.dumps(doc, indent=indent)


def from_json(text: str) -> CarterDiagram:
    """Parse the canonical diagram JSON; unknown keys are rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise DiagramError("diagram JSON must be an object")
    _check_keys(doc, {"name", "vertices", "edges"}, "diagram")
    for key in ("name", "vertices", "edges"):
        if key not in doc:
            raise DiagramError(f"diagram JSON is missing {key!r}")
    verts = []
    for i, v in enumerate(doc["vertices"]):
        _check_keys(v, {"id", "color"}, f"vertices[{i}]")
        vid, color = v.get("id"), v.get("color")
        if color not in (ALPHA, BETA):
            raise DiagramError(f"vertices[{i}]: color must be 'alpha' or 'beta', got {color!r}")
        m = re.match(r"^([abtf])(\d+)$", str(vid))
        if not m:
            raise DiagramError(f"vertices[{i}]: bad id {vid!r} (want a<k>, b<k>, t<k> or f<k>)")
        kind, idx = m.group(1), int(m.group(2))
        if kind == "a" and color != ALPHA or kind == "b" and color != BETA:
            raise DiagramError(f"vertices[{i}]: id {vid!r} conflicts with color {color!r}")
        verts.append(VertexId(kind, idx, color))
    byid = {v.id: v for v in verts}
    edges = []
    for i, e in enumerate(doc["edges"]):
        _check_keys(e, {"u", "v", "sign"}, f"edges[{i}]")
        for end in ("u", "v"):
            if e.get(end) not in byid:
                raise DiagramError(f"edges[{i}]: unknown vertex {e.get(end)!r}")
        if e.get("sign") not in SIGN_VALUES:
            raise DiagramError(f"edges[{i}]: sign must be 'solid' or 'dotted', got {e.get('sign')!r}")
        edges.append((byid[e["u"]], byid[e["v"]], SIGN_VALUES[e["sign"]]))
    d = CarterDiagram(str(doc["name"]), tuple(verts), tuple(edges), None)
    pat = detect_pattern(d)
    if pat is not None:
        d = CarterDiagram(d.name, d.vertices, d.edges, pat)
    return d


def _check_keys(obj, allowed: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise DiagramError(f"{where}: expected an object")
    for key in obj:
        if key not in allowed:
            raise DiagramError(f"{where}: unknown key {key!r} (allowed: {sorted(allowed)})")
