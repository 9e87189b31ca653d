"""Exact-rational convex hulls by brute force.

Small point sets only: every affinely independent d-subset spans a
candidate hyperplane, and a hyperplane is a facet when all points lie on
one closed side.  No tolerances anywhere; coordinates are ``Fraction``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .constructions import FamilyTag, construct, stack_on
from .isomorphism import are_isomorphic, find_isomorphism
from .lattice import enumerate_lattice
from .polytope import CombinatorialPolytope, InvalidPolytope

__all__ = [
    "RationalPoint", "PointConfiguration", "OracleError", "hull_facets", "realize",
    "cross_check", "truncate_vertex", "read_points", "write_points", "max_points",
    "affine_rank", "hull_vertices", "minkowski_sum",
]

DEFAULT_MAX_POINTS = 16
MAX_DIM = 6


class OracleError(ValueError):
    pass


def max_points() -> int:
    return int(os.environ.get("POLYGAP_MAX_POINTS", DEFAULT_MAX_POINTS))


RationalPoint = tuple  # tuple[Fraction, ...]


def _point(coords) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __init__(self, points: Sequence[Sequence], labels: Sequence[str] = ()):
        pts = tuple(_point(p) for p in points)
        if not pts:
            raise OracleError("empty point configuration")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise OracleError("points have different lengths")
        if len(set(pts)) != len(pts):
            raise OracleError("repeated point")
        if labels and len(labels) != len(pts):
            raise OracleError("label count differs from point count")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def ambient_dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                factor = m[i][col] / p
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull."""
    base = points[0]
    return _rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def _hyperplane(points) -> tuple[tuple[Fraction, ...], Fraction] | None:
    """(a, b) with a.x = b through d affinely independent points in R^d."""
    d = len(points[0])
    rows = [list(p) + [Fraction(-1)] for p in points]  # a.p - b = 0
    # reduced row echelon form, then read off the one-dimensional kernel
    m = [r[:] for r in rows]
    pivots = []
    r = 0
    for col in range(d + 1):
        piv = next((i for i in range(r, d) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(d):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == d:
            break
    if r < d:
        return None
    free = next(c for c in range(d + 1) if c not in pivots)
    sol = [Fraction(0)] * (d + 1)
    sol[free] = Fraction(1)
    for i, col in enumerate(pivots):
        sol[col] = -m[i][free]
    a = tuple(sol[:d])
    if all(x == 0 for x in a):
        return None
    return a, sol[d]


def _supporting_sets(pts, d) -> list[tuple[int, ...]]:
    """Index sets cut out by supporting hyperplanes through d points."""
    n = len(pts)
    found: set[tuple[int, ...]] = set()
    for sub in combinations(range(n), d):
        if any(set(sub) <= set(f) for f in found):
            continue
        h = _hyperplane([pts[i] for i in sub])
        if h is None:
            continue
        a, b = h
        vals = [sum(x * y for x, y in zip(a, p)) - b for p in pts]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            found.add(tuple(i for i, v in enumerate(vals) if v == 0))
    return sorted(found)


def _check_size(cfg: PointConfiguration, limit: int | None) -> None:
    limit = max_points() if limit is None else limit
    if len(cfg) > limit:
        raise OracleError(f"{len(cfg)} points exceeds the oracle limit {limit} (POLYGAP_MAX_POINTS)")
    if cfg.ambient_dim > MAX_DIM:
        raise OracleError(f"dimension {cfg.ambient_dim} exceeds the oracle limit {MAX_DIM}")
    if affine_rank(cfg.points) != cfg.ambient_dim:
        raise OracleError("not full-dimensional")


def _vertex_flags(facets, n: int) -> list[bool]:
    flags = []
    for i in range(n):
        on = [set(f) for f in facets if i in f]
        flags.append(bool(on) and set.intersection(*on) == {i})
    return flags


def hull_vertices(cfg: PointConfiguration, *, limit: int | None = None) -> list[int]:
    """Indices of the points that are vertices of the hull."""
    _check_size(cfg, limit)
    facets = _supporting_sets(cfg.points, cfg.ambient_dim)
    return [i for i, ok in enumerate(_vertex_flags(facets, len(cfg))) if ok]


def hull_facets(cfg: PointConfiguration, *, limit: int | None = None) -> CombinatorialPolytope:
    """Facets of conv(points) as sets of point indices.  Every point must be
    a vertex."""
    _check_size(cfg, limit)
    pts, d = cfg.points, cfg.ambient_dim
    facets = _supporting_sets(pts, d)
    for i, ok in enumerate(_vertex_flags(facets, len(pts))):
        if not ok:
            raise OracleError(f"point {i} not a vertex of the hull")
    for f in facets:
        if affine_rank([pts[i] for i in f]) != d - 1:
            raise OracleError(f"facet {f} is not (d-1)-dimensional")
    try:
        return CombinatorialPolytope(d, len(pts), facets)
    except InvalidPolytope as exc:
        raise OracleError(str(exc)) from None


def minkowski_sum(A: PointConfiguration, B: PointConfiguration, *,
                  limit: int | None = None) -> PointConfiguration:
    """Vertices of conv(A) + conv(B), in lexicographic order."""
    if A.ambient_dim != B.ambient_dim:
        raise OracleError("summands live in different dimensions")
    sums = sorted({tuple(x + y for x, y in zip(a, b)) for a in A.points for b in B.points})
    cfg = PointConfiguration(sums)
    return PointConfiguration([sums[i] for i in hull_vertices(cfg, limit=limit)])


def _e(d: int, *idx: int, scale: int = 1) -> tuple[int, ...]:
    x = [0] * d
    for i in idx:
        x[i] += scale
    return tuple(x)


def realize(tag: FamilyTag) -> PointConfiguration:
    """Coordinates whose hull is combinatorially ``construct(tag)``."""
    p = tag.params
    match tag.name:
        case "Simplex":
            (d,) = p
            return PointConfiguration([_e(d)] + [_e(d, i) for i in range(d)])
        case "Prism":
            return realize(FamilyTag("Triplex", (p[0], 0)))
        case "Triplex":
            k, j = p
            d = k + j
            pts = []
            if k == 1:
                pts = [_e(d), _e(d, 0)]
            else:
                base = [_e(d)] + [_e(d, i) for i in range(k - 1)]
                pts = base + [tuple(a + b for a, b in zip(q, _e(d, k - 1))) for q in base]
            pts += [_e(d, i) for i in range(k, d)]
            return PointConfiguration(pts)
        case "Pentasm":
            (d,) = p
            if d < 3:
                raise OracleError("pentasm needs d >= 3")
            pts = [_e(d)] + [_e(d, i) for i in range(d)] + [_e(d, 0, 1, i) for i in range(d)]
            return PointConfiguration(pts)
        case "DeltaSum":
            r, s = p
            d = r + s
            A = [_e(d)] + [_e(d, i) for i in range(r)]
            B = [_e(d)] + [_e(d, r + j) for j in range(s)]
            return PointConfiguration([tuple(x + y for x, y in zip(a, b)) for a in A for b in B])
        case "Sigma3":
            return PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0),
                                       (1, 0, 1), (0, 1, 1), (1, 1, 2)])
        case "Cyclic":
            d, v = p
            return PointConfiguration([tuple(t ** i for i in range(1, d + 1)) for t in range(v)])
        case "Pyramid":
            base = realize(tag.base)
            pts = list(base.points)
            for _ in range(p[0]):
                d = len(pts[0])
                pts = [q + (Fraction(0),) for q in pts] + [_e(d + 1, d)]
            return PointConfiguration(pts)
        case "Stacked":
            if tag.base is None:
                d, v = p
                return _stack_points(FamilyTag("Simplex", (d,)), v - d - 1)
            return _stack_points(tag.base, p[0])
    raise OracleError(f"no realisation for {tag}")


def _stack_points(base: FamilyTag, times: int) -> PointConfiguration:
    """Follow ``stack_on`` geometrically: push a point just beyond the
    centroid of the same simplex facet, shrinking the push until only that
    facet is visible."""
    P = construct(base)
    cfg = realize(base)
    lab = find_isomorphism(P, hull_facets(cfg))
    if lab is None:
        raise OracleError(f"realisation of {base} is not combinatorially correct")
    lab = list(lab)
    for _ in range(times):
        F = next((f for f in P.facets if len(f) == P.dim), None)
        if F is None:
            raise OracleError("no simplex facet to stack on")
        nxt = stack_on(P, 1)
        pts = cfg.points
        n, d = len(pts), cfg.ambient_dim
        c = [sum(pts[lab[x]][i] for x in F) / len(F) for i in range(d)]
        g = [sum(q[i] for q in pts) / n for i in range(d)]
        eps = Fraction(1, 4)
        while True:
            new = tuple(ci + eps * (ci - gi) for ci, gi in zip(c, g))
            trial = PointConfiguration(list(pts) + [new])
            try:
                H = hull_facets(trial)
            except OracleError:
                H = None
            want = {tuple(sorted(lab[x] if x < n else n for x in f)) for f in nxt.facets}
            if H is not None and set(H.facets) == want:
                break
            eps /= 2
            if eps < Fraction(1, 1 << 20):
                raise OracleError("stacking point not found")
        cfg, P = trial, nxt
        lab.append(n)
    return cfg


def truncate_vertex(cfg: PointConfiguration, index: int, depth: Fraction = Fraction(1, 2)) -> PointConfiguration:
    """Cut off vertex ``index``: replace it by the points at ``depth`` along
    each incident edge."""
    P = hull_facets(cfg)
    edges = enumerate_lattice(P).edges
    p = cfg.points[index]
    nbrs = sorted(b if a == index else a for a, b in edges if index in (a, b))
    new = [tuple(x + depth * (y - x) for x, y in zip(p, cfg.points[q])) for q in nbrs]
    kept = [q for i, q in enumerate(cfg.points) if i != index]
    return PointConfiguration(kept + new)


def cross_check(tag: FamilyTag) -> bool:
    return are_isomorphic(hull_facets(realize(tag)), construct(tag))


def _frac(s: str) -> Fraction:
    return Fraction(s)


def read_points(text: str) -> PointConfiguration:
    """Parse ``d n`` followed by n lines of ``p/q`` coordinates."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise OracleError("first line must be 'd n'")
    d, n = int(lines[0][0]), int(lines[0][1])
    rows = lines[1:]
    if len(rows) != n:
        raise OracleError(f"header promises {n} points, found {len(rows)}")
    pts = []
    for k, row in enumerate(rows):
        if len(row) != d:
            raise OracleError(f"point {k} has {len(row)} coordinates, expected {d}")
        pts.append([_frac(c) for c in row])
    return PointConfiguration(pts)


def write_points(cfg: PointConfiguration) -> str:
    def fmt(x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    out = [f"{cfg.ambient_dim} {len(cfg)}"]
    out.extend(" ".join(fmt(x) for x in p) for p in cfg.points)
    return "\n".join(out) + "\n"
