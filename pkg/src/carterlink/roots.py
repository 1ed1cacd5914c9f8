"""Brute-force root-system oracles.

Everything here is independent of the enumeration path: explicit root sets
with exact rational coordinates, backtracking search for diagram embeddings
constrained by the Gram matrix, and direct computation of linkage labels as
inner products.  The E8 coordinates are half-integers, so all coordinates
are doubled to plain integers for the numpy scans; inner products of roots
are integers and the doubling cancels exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import diagram as dg
from .cartan import PartialCartan
from .linalg import quad_form
from .linalg import rank as exact_rank
from .linkage import Linkage
from .orbit import VerificationError, dual_reflect

Root = tuple[Fraction, ...]

HALF = Fraction(1, 2)


class RootSystemError(ValueError):
    """Unsupported root-system name or rank."""


def _dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


class RootSystem:
    """An explicit simply-laced root system with deterministic root order."""

    def __init__(self, name: str, rank: int, dim: int, roots: Iterable[Root]) -> None:
        self.name = name
        self.rank = rank
        self.dim = dim
        self.roots = tuple(sorted(roots))
        self.root_set = frozenset(self.roots)
        if len(self.root_set) != len(self.roots):
            raise RootSystemError(f"{name}: duplicate roots")
        arr = np.array([[int(2 * x) for x in r] for r in self.roots], dtype=np.int64)
        self._doubled = arr
        self._ip: Optional[np.ndarray] = None
        for r in self.roots:
            if _dot(r, r) != 2:
                raise RootSystemError(f"{name}: root {r} has squared norm != 2")
            if tuple(-x for x in r) not in self.root_set:
                raise RootSystemError(f"{name}: set not closed under negation")

    def __len__(self) -> int:
        return len(self.roots)

    def doubled(self) -> np.ndarray:
        return self._doubled

    def ip_matrix(self) -> np.ndarray:
        """Pairwise inner products as int64 (cached)."""
        if self._ip is None:
            prod = self._doubled @ self._doubled.T
            if (prod % 4).any():
                raise RootSystemError(f"{self.name}: non-integral inner products")
            self._ip = prod // 4
        return self._ip

    def in_root_lattice(self, x: Sequence[Fraction]) -> bool:
        """Membership in the root lattice (a norm-2 lattice vector is a root)."""
        total = sum(x, Fraction(0))
        if self.name.startswith("A"):
            return all(c.denominator == 1 for c in x) and total == 0
        if self.name.startswith("D"):
            return all(c.denominator == 1 for c in x) and total % 2 == 0
        # E6/E7/E8 share the E8 lattice intersected with their span; x is
        # assumed to lie in the span already.
        integral = all(c.denominator == 1 for c in x)
        half_odd = all(c.denominator == 2 for c in x)
        if not (integral or half_odd):
            return False
        return total.denominator == 1 and total % 2 == 0

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, {len(self.roots)} roots)"


_EXPECTED_COUNTS = {"E6": 72, "E7": 126, "E8": 240}


def build_root_system(name: str) -> RootSystem:
    """Build A_n, D_n (ranks up to 12) or E6/E7/E8.

    D_n is {+-e_i +- e_j}; A_n is {e_i - e_j} in n+1 coordinates; E8 adds the
    128 half-integer vectors with an even number of minus signs to D8.  E7 is
    the subset of E8 orthogonal to e7+e8; E6 additionally orthogonal to
    e6+e7.
    """
    family, n, k = dg.parse_name(name)
    if k is not None:
        raise RootSystemError(f"{name!r} is not a root-system name")
    if family == "A":
        if not 1 <= n <= dg.MAX_RANK:
            raise RootSystemError(f"A_n supports 1 <= n <= {dg.MAX_RANK}, got {n}")
        roots = [_unit(i, n + 1, -1, j) for i in range(n + 1) for j in range(n + 1) if i != j]
        rs = RootSystem(f"A{n}", n, n + 1, roots)
        assert len(rs) == n * (n + 1)
        return rs
    if family == "D":
        if not 2 <= n <= dg.MAX_RANK:
            raise RootSystemError(f"D_n supports 2 <= n <= {dg.MAX_RANK}, got {n}")
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [Fraction(0)] * n
                        v[i], v[j] = Fraction(si), Fraction(sj)
                        roots.append(tuple(v))
        rs = RootSystem(f"D{n}", n, n, roots)
        assert len(rs) == 2 * n * (n - 1)
        return rs
    if family == "E" and n in (6, 7, 8):
        e8 = _e8_roots()
        if n == 8:
            roots = e8
        else:
            theta1 = _unit(6, 8, 1, 7)  # e7 + e8
            roots = [r for r in e8 if _dot(r, theta1) == 0]
            if n == 6:
                theta2 = _unit(5, 8, 1, 6)  # e6 + e7
                roots = [r for r in roots if _dot(r, theta2) == 0]
        rs = RootSystem(f"E{n}", n, 8, roots)
        assert len(rs) == _EXPECTED_COUNTS[f"E{n}"]
        return rs
    raise RootSystemError(f"unsupported root system {name!r}")


def _unit(i: int, dim: int, sign_j: int, j: int) -> Root:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    v[j] = Fraction(sign_j)
    return tuple(v)


def _e8_roots() -> list[Root]:
    roots: list[Root] = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Fraction(0)] * 8
                    v[i], v[j] = Fraction(si), Fraction(sj)
                    roots.append(tuple(v))
    for signs in range(256):
        bits = [(signs >> b) & 1 for b in range(8)]
        if sum(bits) % 2 == 0:
            roots.append(tuple(HALF if b == 0 else -HALF for b in bits))
    return roots


# -- embeddings ----------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Diagram vertices realized as ambient roots, in canonical vertex order."""

    diagram: dg.CarterDiagram
    ambient: RootSystem
    roots: tuple[Root, ...]

    def __post_init__(self) -> None:
        g = self.diagram.gram()
        n = len(self.roots)
        for i in range(n):
            for j in range(i, n):
                if _dot(self.roots[i], self.roots[j]) != g[i][j]:
                    raise VerificationError(
                        f"embedding Gram mismatch at ({self.diagram.vertices[i]}, "
                        f"{self.diagram.vertices[j]})")
        if exact_rank(self.roots) != n:
            raise VerificationError("embedding roots are linearly dependent")

    def doubled(self) -> np.ndarray:
        return np.array([[int(2 * x) for x in r] for r in self.roots], dtype=np.int64)


def _assignment_order(d: dg.CarterDiagram) -> list[int]:
    """Deterministic connectivity-first order: most-constrained vertex next."""
    n = len(d.vertices)
    pos = {v: i for i, v in enumerate(d.vertices)}
    adj = [[] for _ in range(n)]
    for u, v, _ in d.edges:
        adj[pos[u]].append(pos[v])
        adj[pos[v]].append(pos[u])
    order: list[int] = []
    placed = [False] * n
    for _ in range(n):
        best = None
        for i in range(n):
            if placed[i]:
                continue
            key = (sum(placed[j] for j in adj[i]), len(adj[i]), -i)
            if best is None or key > best[0]:
                best = (key, i)
        order.append(best[1])
        placed[best[1]] = True
    return order


def find_embeddings(
    d: dg.CarterDiagram,
    ambient: RootSystem,
    limit: int = 1,
    fix_first_root: bool = True,
) -> list[Embedding]:
    """Backtracking search for root subsets whose Gram matrix is the diagram's.

    Vertices are assigned in a deterministic connectivity-first order with
    forward checking against the precomputed inner-product table, candidate
    roots in lexicographic order; the returned embeddings are the first
    ``limit`` solutions of that fixed search.  With ``fix_first_root`` the
    first vertex is pinned to the lexicographically smallest root, which is
    sound for existence because the Weyl group acts transitively on roots.
    """
    l = len(d.vertices)
    if l > ambient.rank:
        return []
    order = _assignment_order(d)
    g = d.gram()
    target = [[g[order[p]][order[q]] for q in range(l)] for p in range(l)]
    ip = ambient.ip_matrix()
    nroots = len(ambient.roots)
    results: list[Embedding] = []
    chosen = [0] * l

    def dfs(pos: int, masks: list) -> bool:
        idxs = np.flatnonzero(masks[pos])
        if pos == 0 and fix_first_root:
            idxs = idxs[:1]
        for r in idxs:
            chosen[pos] = int(r)
            if pos + 1 == l:
                roots = [None] * l
                for p, v in enumerate(order):
                    roots[v] = ambient.roots[chosen[p]]
                if exact_rank(roots) == l:
                    results.append(Embedding(d, ambient, tuple(roots)))
                    if len(results) >= limit:
                        return True
                continue
            row = ip[r]
            new_masks = masks[: pos + 1]
            dead = False
            for q in range(pos + 1, l):
                nm = masks[q] & (row == target[q][pos])
                if not nm.any():
                    dead = True
                    break
                new_masks = new_masks + [nm]
            if not dead and dfs(pos + 1, new_masks):
                return True
        return False

    base = np.ones(nroots, dtype=bool)
    dfs(0, [base.copy() for _ in range(l)])
    return results


def find_embedding(d: dg.CarterDiagram, ambient: RootSystem) -> Optional[Embedding]:
    """First embedding in the fixed deterministic search order, or None."""
    found = find_embeddings(d, ambient, limit=1)
    return found[0] if found else None


# -- direct labels -------------------------------------------------------------


@dataclass(frozen=True)
class RealizedLinkage:
    """One ambient root, independent of the embedding, with its label data."""

    gamma: Root
    labels: Linkage
    gamma_L: Root
    mu: Root
    mu_norm_sq: Fraction
    p: Fraction


@dataclass(frozen=True)
class DirectLabels:
    """All realized linkages of an embedding plus the distinct label set."""

    embedding: Embedding
    realized: tuple[RealizedLinkage, ...]
    labels: tuple[Linkage, ...]


def direct_linkage_labels(e: Embedding) -> DirectLabels:
    """Labels of every ambient root that genuinely extends the embedding.

    The label vector is the inner products with the embedded roots; the
    projection gamma_L is the combination of embedded roots with coefficients
    B^-1 * labels, and mu = gamma - gamma_L is orthogonal to all of them.
    Roots with mu = 0 lie in the span and are skipped; so are roots with an
    all-zero label vector (they are orthogonal to the whole subset and attach
    no bonds, and the zero vector is not a linkage by definition).
    """
    from .cartan import build_partial_cartan

    pc = build_partial_cartan(e.diagram)
    amb = e.ambient
    lab = amb.doubled() @ e.doubled().T
    if (lab % 4).any():
        raise VerificationError("non-integral inner products in label scan")
    lab //= 4
    l = len(e.roots)
    dim = amb.dim
    realized = []
    labels_seen = set()
    for idx, gamma in enumerate(amb.roots):
        labels = tuple(int(x) for x in lab[idx])
        if all(x == 0 for x in labels):
            continue
        coeff = pc.B_inv.mat_vec(labels)
        gamma_l = tuple(
            sum((coeff[i] * e.roots[i][c] for i in range(l)), Fraction(0))
            for c in range(dim)
        )
        mu = tuple(gamma[c] - gamma_l[c] for c in range(dim))
        if all(x == 0 for x in mu):
            continue
        if any(abs(x) > 1 for x in labels):
            raise VerificationError(f"independent root {gamma} has label outside -1..1")
        mu2 = _dot(mu, mu)
        p = quad_form(pc.B_inv, labels)
        realized.append(RealizedLinkage(gamma, labels, gamma_l, mu, mu2, p))
        labels_seen.add(labels)
    return DirectLabels(e, tuple(realized), tuple(sorted(labels_seen)))


# -- verification laws -----------------------------------------------------------


def _reflect_root(x: Root, v: Root) -> Root:
    # norm-2 reflection: x - (x, v) v
    c = _dot(x, v)
    if c == 0:
        return x
    return tuple(xi - c * vi for xi, vi in zip(x, v))


def _extension_orbit(e: Embedding, seed: Root) -> frozenset:
    """Orbit of ``seed`` under the reflections in the embedded roots and in

    seed itself.  This is the orbit of the one added root; the orbit of the
    whole extended subset is strictly larger and mixes p-classes (images of
    the embedded roots can carry mu-components of twice the length)."""
    gens = list(e.roots) + [seed]
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for v in gens:
                y = _reflect_root(x, v)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class LawsReport:
    """Projection-law verification summary."""

    p_classes: tuple[tuple[Fraction, int], ...]
    orbit_count: int
    orbits: tuple[tuple[Fraction, Fraction, int], ...]  # (p, mu_norm_sq, size)
    mirror_roots: int


def check_projection_laws(dl: DirectLabels, e: Embedding) -> LawsReport:
    """Verify the exact laws tying labels, projections and mu together.

    Per realized root: p = form of labels = squared length of gamma_L (both
    under B restricted and under the ambient dot product) and p + |mu|^2 = 2.
    The mirror gamma_L - mu has norm 2, so it is a root exactly when it lies
    in the root lattice; that equivalence is verified (the mirror can leave
    the lattice: 2 gamma_L need not have integral root coefficients).  Per
    extension orbit (closure of the embedded roots and one realized root
    under their reflections): mu is constant up to sign, and realized roots
    sharing one label vector are exactly {gamma_L + mu, gamma_L - mu}.  Per
    p-class: |mu|^2 is constant.
    """
    from .cartan import build_partial_cartan

    pc = build_partial_cartan(e.diagram)
    b = pc.B
    by_p: dict[Fraction, list[RealizedLinkage]] = {}
    mirrors = 0
    for r in dl.realized:
        coeff = pc.B_inv.mat_vec(r.labels)
        bl_val = quad_form(b, coeff)
        if bl_val != r.p:
            raise VerificationError(f"form mismatch on labels of {r.gamma}")
        if _dot(r.gamma_L, r.gamma_L) != r.p:
            raise VerificationError(f"restricted form differs from ambient on {r.gamma}")
        if r.p + r.mu_norm_sq != 2:
            raise VerificationError(f"p + |mu|^2 != 2 for {r.gamma}")
        bar = tuple(gl - m for gl, m in zip(r.gamma_L, r.mu))
        if _dot(bar, bar) != 2:
            raise VerificationError(f"gamma_L - mu has norm != 2 for {r.gamma}")
        is_root = bar in e.ambient.root_set
        if is_root != e.ambient.in_root_lattice(bar):
            raise VerificationError(
                f"norm-2 lattice test disagrees with root membership for {r.gamma}")
        mirrors += is_root
        by_p.setdefault(r.p, []).append(r)

    for p, group in by_p.items():
        if len({r.mu_norm_sq for r in group}) != 1:
            raise VerificationError(f"|mu|^2 not constant on the p = {p} class")

    by_gamma = {r.gamma: r for r in dl.realized}
    unassigned = set(by_gamma)
    orbit_count = 0
    orbits = []
    for r in dl.realized:
        if r.gamma not in unassigned:
            continue
        orbit = _extension_orbit(e, r.gamma)
        members = [by_gamma[g] for g in orbit if g in by_gamma]
        for m in members:
            unassigned.discard(m.gamma)
        orbit_count += 1
        # One orbit can mix extension types (the reflections of the extended
        # subset may generate a group transitive on all ambient roots), so mu
        # constancy is asserted per p-slice of the orbit.
        slices: dict[Fraction, list[RealizedLinkage]] = {}
        for m in members:
            slices.setdefault(m.p, []).append(m)
        for p, group in sorted(slices.items()):
            mu0 = group[0].mu
            neg = tuple(-x for x in mu0)
            if not {m.mu for m in group} <= {mu0, neg}:
                raise VerificationError(
                    f"mu not constant up to sign on the p = {p} slice of the "
                    f"extension orbit of {r.gamma}")
            by_labels: dict = {}
            for m in group:
                by_labels.setdefault(m.labels, []).append(m)
            twice = tuple(2 * x for x in mu0)
            neg_twice = tuple(-2 * x for x in mu0)
            for labs, same in by_labels.items():
                if len(same) > 2:
                    raise VerificationError(
                        f"{len(same)} orbit roots share the label vector {labs}")
                if len(same) == 2:
                    diff = tuple(a - c for a, c in zip(same[0].gamma, same[1].gamma))
                    if diff not in (twice, neg_twice):
                        raise VerificationError(
                            f"orbit roots sharing labels {labs} do not differ by 2 mu")
            orbits.append((p, group[0].mu_norm_sq, len(group)))

    p_classes = tuple((p, len(group)) for p, group in sorted(by_p.items()))
    return LawsReport(p_classes, orbit_count, tuple(sorted(orbits)), mirrors)


def expected_square_diagonal(g_u: int, g_w: int, b_u: int, b_w: int) -> int:
    """Diagonal label forced by the four sides of a square configuration.

    Sides are the inner products (gamma, u), (gamma, w), (center, u),
    (center, w), all nonzero.  An odd number of dotted (+1) sides forces no
    diagonal; an even number forces (gamma, center) = (gamma, u)(center, u).
    """
    if g_u * g_w * b_u * b_w < 0:
        return 0
    return g_u * b_u


@dataclass(frozen=True)
class SquareAudit:
    """Count of square configurations checked, by forced diagonal value."""

    checked: int
    with_diagonal: int
    without_diagonal: int


def square_diagonal_audit(dl: DirectLabels, e: Embedding) -> SquareAudit:
    """Audit every square {u, center, w, gamma} over all realized linkages.

    u and w run over same-color vertex pairs (hence orthogonal), the center
    over opposite-color vertices joined to both; gamma must be joined to u
    and w.  The label at the center must match expected_square_diagonal.
    """
    d = e.diagram
    g = d.gram()
    n = len(d.vertices)
    checked = with_d = without_d = 0
    pairs = []
    for u in range(n):
        for w in range(u + 1, n):
            if d.vertices[u].color != d.vertices[w].color:
                continue
            centers = [m for m in range(n) if g[u][m] != 0 and g[w][m] != 0 and m not in (u, w)]
            if centers:
                pairs.append((u, w, centers))
    for r in dl.realized:
        for u, w, centers in pairs:
            if r.labels[u] == 0 or r.labels[w] == 0:
                continue
            for m in centers:
                expect = expected_square_diagonal(r.labels[u], r.labels[w], g[u][m], g[w][m])
                if r.labels[m] != expect:
                    raise VerificationError(
                        f"square ({d.vertices[u]}, {d.vertices[m]}, {d.vertices[w]}, "
                        f"{r.gamma}): diagonal {r.labels[m]}, expected {expect}")
                checked += 1
                if expect:
                    with_d += 1
                else:
                    without_d += 1
    return SquareAudit(checked, with_d, without_d)


@dataclass(frozen=True)
class IndependenceReport:
    """Distinct embeddings tried and the shared distinct-label set."""

    embeddings: int
    labels: tuple[Linkage, ...]


def embedding_independence(d: dg.CarterDiagram, ambient: RootSystem,
                           trials: int) -> IndependenceReport:
    """Check the distinct-label set is the same across several embeddings."""
    embs = find_embeddings(d, ambient, limit=trials, fix_first_root=False)
    if not embs:
        raise VerificationError(f"{d.name} does not embed into {ambient.name}")
    reference: Optional[tuple[Linkage, ...]] = None
    for e in embs:
        labels = direct_linkage_labels(e).labels
        if reference is None:
            reference = labels
        elif labels != reference:
            raise VerificationError(
                f"distinct label sets differ between embeddings of {d.name} "
                f"in {ambient.name}")
    return IndependenceReport(len(embs), reference or ())


# -- weight orbits ---------------------------------------------------------------


def weight_orbit(pc: PartialCartan, v) -> tuple[tuple[int, ...], ...]:
    """Orbit of the unit label vector at v under the dual reflections.

    Defined for Dynkin diagrams only (no dotted edges), where the dual
    reflections generate the honest Weyl group action on weights.
    """
    d = pc.diagram
    if not d.is_dynkin():
        raise dg.DiagramError(f"{d.name}: weight orbits need a Dynkin diagram (no dotted edges)")
    i = d.index_of(v)
    start = tuple(1 if j == i else 0 for j in range(len(pc)))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for t in d.vertices:
                y = dual_reflect(pc, t, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))
