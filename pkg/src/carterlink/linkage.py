"""Enumeration of linkage label vectors by the inverse quadratic form test.

A vector v over {-1,0,1}, indexed by the diagram vertices, is a linkage
label vector exactly when the quadratic form of B^-1 takes a value < 2 on
it.  The scan over the whole grid runs on exact integers through the
kernels module; results are returned in lexicographic order (-1 < 0 < 1)
so every downstream structure is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from . import diagram as dg
from .cartan import PartialCartan
from .linalg import quad_form

Linkage = tuple[int, ...]


@dataclass(frozen=True)
class ExtensionSet:
    """All linkage vectors sharing one value p of the inverse form."""

    p: Fraction
    members: tuple[Linkage, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BetaUnicolored:
    """Linkage vectors whose alpha labels all vanish."""

    members: tuple[Linkage, ...]
    center: Optional[dg.VertexId]
    center_label_always_zero: Optional[bool]


def enumerate_linkages(pc: PartialCartan) -> tuple[Linkage, ...]:
    """All nonzero v in {-1,0,1}^l with quad_form(B^-1, v) < 2, sorted."""
    l = len(pc)
    den, scaled = pc.b_inv_scaled()
    n_mat = np.array(scaled, dtype=np.int64)
    mask = _kernels.linkage_mask(n_mat, 2 * den, l)
    grid = _kernels.ternary_grid(l)
    hits = grid[mask & grid.any(axis=1)]
    return tuple(tuple(int(x) for x in row) for row in hits)


def form_value(pc: PartialCartan, v: Sequence[int]) -> Fraction:
    """The inverse quadratic form evaluated exactly on v."""
    return quad_form(pc.B_inv, list(v))


def group_by_p(pc: PartialCartan, vectors: Iterable[Linkage]) -> list[ExtensionSet]:
    """Partition by the exact value of the inverse form, ascending in p."""
    buckets: dict[Fraction, list[Linkage]] = {}
    for v in vectors:
        buckets.setdefault(form_value(pc, v), []).append(v)
    return [
        ExtensionSet(p, tuple(sorted(buckets[p]))) for p in sorted(buckets)
    ]


def beta_unicolored(d: dg.CarterDiagram, vectors: Iterable[Linkage]) -> BetaUnicolored:
    """Select vectors with all alpha coordinates zero.

    Also reports whether the label at the pattern center b1 vanishes on all
    of them (it does for every cataloged diagram except the bare 4-cycle
    D4(a1), which has no pattern).
    """
    alpha_pos = [i for i, v in enumerate(d.vertices) if v.color == dg.ALPHA]
    members = tuple(sorted(v for v in vectors if all(v[i] == 0 for i in alpha_pos)))
    center: Optional[dg.VertexId] = None
    if d.pattern is not None:
        center = d.pattern[3]
    else:
        center = next((v for v in d.vertices if v.id == "b1"), None)
    always_zero: Optional[bool] = None
    if center is not None:
        ci = d.index_of(center)
        always_zero = all(v[ci] == 0 for v in members)
    return BetaUnicolored(members, center, always_zero)
