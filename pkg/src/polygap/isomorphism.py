"""Canonical labelling of vertex-facet incidence structures.

Individualisation-refinement in the style of nauty, kept small: colour
refinement on the bipartite vertex/facet incidence graph, branching on the
first smallest non-singleton vertex cell, and pruning with automorphisms
discovered at the leaves.  The certificate of a leaf is the sorted tuple
of relabelled facet masks; the canonical form is the least certificate.
"""
from __future__ import annotations

from collections import defaultdict

from .lattice import _lattice, sub_polytope
from .polytope import CombinatorialPolytope

__all__ = ["MAX_ISO_VERTS", "IsomorphismSizeError", "canonical_form", "are_isomorphic",
           "facet_census", "find_isomorphism"]

MAX_ISO_VERTS = 24


class IsomorphismSizeError(RuntimeError):
    pass


def _refine(colors: list[int], vfacets: list[list[int]], facets: list[list[int]]) -> list[int]:
    """Coarsest equitable refinement of a vertex colouring.  Colour ids are
    ranks of sorted signatures, so the result is label-invariant."""
    ncolors = len(set(colors))
    while True:
        fsig = [tuple(sorted(colors[v] for v in f)) for f in facets]
        fkeys = {s: i for i, s in enumerate(sorted(set(fsig)))}
        fcol = [fkeys[s] for s in fsig]
        vsig = [(colors[v], tuple(sorted(fcol[i] for i in vfacets[v]))) for v in range(len(colors))]
        vkeys = {s: i for i, s in enumerate(sorted(set(vsig)))}
        new = [vkeys[s] for s in vsig]
        if len(vkeys) == ncolors:
            return new
        colors, ncolors = new, len(vkeys)


def _individualize(colors: list[int], v: int) -> list[int]:
    sig = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    keys = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [keys[s] for s in sig]


class _Search:
    def __init__(self, P: CombinatorialPolytope):
        self.n = P.nverts
        self.facets = [list(f) for f in P.facets]
        self.vfacets = [[] for _ in range(self.n)]
        for i, f in enumerate(self.facets):
            for v in f:
                self.vfacets[v].append(i)
        self.first = None  # (cert, labelling, path)
        self.best = None
        self.autos: list[tuple[int, ...]] = []

    def certificate(self, colors):
        fm = []
        for f in self.facets:
            m = 0
            for v in f:
                m |= 1 << colors[v]
            fm.append(m)
        return tuple(sorted(fm))

    def run(self):
        start = _refine([0] * self.n, self.vfacets, self.facets)
        self._node(start, ())
        return self.best

    def _automorphism(self, a, b) -> tuple[int, ...]:
        # a, b are leaf labellings with equal certificates; map a-vertex to b-vertex
        inv_b = [0] * self.n
        for v, c in enumerate(b):
            inv_b[c] = v
        return tuple(inv_b[a[v]] for v in range(self.n))

    def _leaf(self, colors, path):
        cert = self.certificate(colors)
        if self.first is None:
            self.first = self.best = (cert, colors, path)
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                self.autos.append(self._automorphism(ref[1], colors))
                return _common_prefix(path, ref[2])
        if cert < self.best[0]:
            self.best = (cert, colors, path)
        return None

    def _node(self, colors, path):
        cells = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        nontrivial = [cells[c] for c in sorted(cells) if len(cells[c]) > 1]
        if not nontrivial:
            return self._leaf(colors, path)
        size = min(len(c) for c in nontrivial)
        target = next(c for c in nontrivial if len(c) == size)
        depth = len(path)
        done: list[int] = []
        for v in target:
            if done and self._same_orbit(v, done, path):
                continue
            done.append(v)
            child = _refine(_individualize(colors, v), self.vfacets, self.facets)
            jump = self._node(child, path + (v,))
            if jump is not None and jump < depth:
                return jump
        return None

    def _same_orbit(self, v, done, path) -> bool:
        gens = [g for g in self.autos if all(g[p] == p for p in path)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in done)


def _common_prefix(a, b) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def canonical_form(P: CombinatorialPolytope, *, max_verts: int = MAX_ISO_VERTS):
    """Label-invariant certificate ``(dim, nverts, facet masks)``."""
    if P.nverts > max_verts:
        raise IsomorphismSizeError(f"{P.nverts} vertices exceeds the isomorphism limit {max_verts}")
    cert, _, _ = _Search(P).run()
    return (P.dim, P.nverts, cert)


def canonical_labelling(P: CombinatorialPolytope, *, max_verts: int = MAX_ISO_VERTS) -> tuple[int, ...]:
    """Vertex map ``v -> canonical label``."""
    if P.nverts > max_verts:
        raise IsomorphismSizeError(f"{P.nverts} vertices exceeds the isomorphism limit {max_verts}")
    _, labels, _ = _Search(P).run()
    return tuple(labels)


def are_isomorphic(P: CombinatorialPolytope, Q: CombinatorialPolytope, *,
                   max_verts: int = MAX_ISO_VERTS) -> bool:
    if (P.dim, P.nverts, len(P.facets)) != (Q.dim, Q.nverts, len(Q.facets)):
        return False
    if sorted(map(len, P.facets)) != sorted(map(len, Q.facets)):
        return False
    return canonical_form(P, max_verts=max_verts) == canonical_form(Q, max_verts=max_verts)


def find_isomorphism(P, Q, *, max_verts: int = MAX_ISO_VERTS):
    """A vertex map P -> Q carrying facets onto facets, or None."""
    if not are_isomorphic(P, Q, max_verts=max_verts):
        return None
    lp = canonical_labelling(P, max_verts=max_verts)
    lq = canonical_labelling(Q, max_verts=max_verts)
    inv_q = [0] * Q.nverts
    for v, c in enumerate(lq):
        inv_q[c] = v
    return tuple(inv_q[lp[v]] for v in range(P.nverts))


def facet_census(P) -> list[tuple[CombinatorialPolytope, int]]:
    """Facets grouped into isomorphism classes, as ``(representative, count)``.

    Ordered by decreasing count, then by canonical certificate.
    """
    L = _lattice(P)
    groups: dict = {}
    for F in L.facets:
        sub = sub_polytope(L, F)
        key = canonical_form(sub)
        if key in groups:
            groups[key][1] += 1
        else:
            groups[key] = [sub, 1]
    ordered = sorted(groups.items(), key=lambda kv: (-kv[1][1], kv[0]))
    return [(rep, n) for _, (rep, n) in ordered]
