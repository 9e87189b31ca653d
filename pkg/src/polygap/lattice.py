"""Face lattices of combinatorial polytopes.

The lattice is the closure of the facet family under intersection, plus
the empty face and the whole polytope.  Ranks come from the longest chain
above the empty face, and the kernel reports whether every cover relation
raises rank by one, which catches most non-polytopal incidence input.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from . import _kernel_py
from ._kernel_py import LatticeSizeError
from .polytope import CombinatorialPolytope, InvalidPolytope, members

try:
    from . import _kernel_c
except ImportError:  # extension not built
    _kernel_c = None

__all__ = [
    "FaceLattice",
    "LatticeSizeError",
    "NotGraded",
    "MAX_FACES",
    "STATS",
    "kernel_name",
    "enumerate_lattice",
    "graph_of",
    "degree_sequence",
    "excess_of",
    "is_simple",
    "is_simplicial",
    "shephard_condition",
]

MAX_FACES = 5_000_000

# enumerations performed and Euler checks passed in this process
STATS: Counter = Counter()


class NotGraded(InvalidPolytope):
    """The intersection closure of the facets is not a graded lattice."""


def _use_compiled(nverts: int) -> bool:
    return _kernel_c is not None and nverts <= 64 and not os.environ.get("POLYGAP_PURE")


def kernel_name(nverts: int = 0) -> str:
    return "cython" if _use_compiled(nverts) else "python"


@dataclass(frozen=True)
class FaceLattice:
    """All faces of a d-polytope, bucketed by rank (dimension + 1)."""

    dim: int
    nverts: int
    ranks: tuple[tuple[int, ...], ...]  # ranks[r] = masks of faces of dimension r-1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.ranks[m + 1]) for m in range(self.dim))

    def faces(self, m: int) -> list[frozenset[int]]:
        """Faces of dimension m as vertex sets."""
        return [frozenset(members(x)) for x in self.ranks[m + 1]]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self.dim < 1:
            return ()
        return tuple(sorted(members(x) for x in self.ranks[2]))

    @property
    def facets(self) -> tuple[int, ...]:
        return self.ranks[self.dim]

    @property
    def ridges(self) -> tuple[int, ...]:
        return self.ranks[self.dim - 1]

    def euler_ok(self) -> bool:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector)) == 1 - (-1) ** self.dim


def enumerate_lattice(P: CombinatorialPolytope, *, limit: int = MAX_FACES) -> FaceLattice:
    kernel = _kernel_c.lattice_kernel if _use_compiled(P.nverts) else _kernel_py.lattice_kernel
    faces, ranks, graded = kernel(P.facet_masks, P.nverts, limit)
    if not graded:
        raise NotGraded("face lattice is not graded; input is not polytopal")
    top = ranks[-1]
    if faces[-1] != P.full_mask or top != P.dim + 1:
        raise NotGraded(f"longest chain has length {top + 1}, expected {P.dim + 2}")
    buckets: list[list[int]] = [[] for _ in range(P.dim + 2)]
    for mask, r in zip(faces, ranks):
        buckets[r].append(mask)
    if P.dim >= 1 and len(buckets[1]) != P.nverts:
        raise NotGraded(f"{len(buckets[1])} vertices in the lattice, expected {P.nverts}")
    if sorted(buckets[P.dim]) != sorted(P.facet_masks):
        raise NotGraded("lattice coatoms differ from the given facets")
    L = FaceLattice(P.dim, P.nverts, tuple(tuple(sorted(b)) for b in buckets))
    STATS["lattices"] += 1
    if not L.euler_ok():
        raise NotGraded(f"f-vector {L.f_vector} violates the Euler relation")
    STATS["euler_ok"] += 1
    return L


def _lattice(P_or_L) -> FaceLattice:
    if isinstance(P_or_L, FaceLattice):
        return P_or_L
    return enumerate_lattice(P_or_L)


def graph_of(P) -> tuple[tuple[int, int], ...]:
    return _lattice(P).edges


def degree_sequence(P) -> tuple[int, ...]:
    """Vertex degrees, indexed by vertex."""
    L = _lattice(P)
    deg = [0] * L.nverts
    for a, b in L.edges:
        deg[a] += 1
        deg[b] += 1
    return tuple(deg)


def excess_of(P) -> int:
    """2e - dv, cross-checked against the sum of (deg - d)."""
    L = _lattice(P)
    by_count = 2 * len(L.edges) - L.dim * L.nverts
    by_degree = sum(x - L.dim for x in degree_sequence(L))
    assert by_count == by_degree, (by_count, by_degree)
    return by_count


def is_simple(P) -> bool:
    L = _lattice(P)
    return all(x == L.dim for x in degree_sequence(L))


def is_simplicial(P) -> bool:
    if isinstance(P, CombinatorialPolytope):
        return all(len(f) == P.dim for f in P.facets)
    return all(bin(f).count("1") == P.dim for f in P.facets)


def shephard_condition(P) -> bool:
    """Some facet has every vertex on exactly one edge leaving it, and at
    least two vertices lie outside it.  Sufficient for decomposability."""
    L = _lattice(P)
    full = (1 << L.nverts) - 1
    for F in L.facets:
        if bin(full & ~F).count("1") < 2:
            continue
        out = Counter()
        for a, b in L.edges:
            ina, inb = F >> a & 1, F >> b & 1
            if ina and not inb:
                out[a] += 1
            elif inb and not ina:
                out[b] += 1
        if all(out[v] == 1 for v in members(F)):
            return True
    return False


def sub_polytope(L: FaceLattice, facet_mask: int) -> CombinatorialPolytope:
    """The facet ``facet_mask`` as a (d-1)-polytope on relabelled vertices;
    its facets are the ridges it contains."""
    verts = members(facet_mask)
    relabel = {v: i for i, v in enumerate(verts)}
    ridges = [r for r in L.ridges if r & facet_mask == r]
    return CombinatorialPolytope(L.dim - 1, len(verts),
                                 ([relabel[v] for v in members(r)] for r in ridges))


def facet_polytopes(P) -> list[CombinatorialPolytope]:
    L = _lattice(P)
    return [sub_polytope(L, F) for F in L.facets]
