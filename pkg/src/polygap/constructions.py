"""Named polytope families as vertex-facet incidences.

Every constructor returns a :class:`CombinatorialPolytope`.  ``FamilyTag``
names an instance so it can be rebuilt, serialised, realised with
coordinates, or cited as a witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .combinatorics import binom
from .polytope import CombinatorialPolytope

__all__ = [
    "FamilyTag", "construct", "simplex", "prism", "pyramid", "pyramid_t_fold",
    "triplex", "pentasm", "delta_sum", "sigma3", "cyclic", "stacked", "stack_on",
    "catalogue", "FAMILIES", "parse_tag", "edge_count_formula",
]

FAMILIES = ("Simplex", "Prism", "Triplex", "Pentasm", "DeltaSum", "Sigma3",
            "Pyramid", "Cyclic", "Stacked")


@dataclass(frozen=True)
class FamilyTag:
    """A named instance: ``FamilyTag("Triplex", (2, 1))``.

    ``Pyramid`` takes ``(t,)`` and a ``base`` tag.  ``Stacked`` takes either
    ``(d, v)`` (stacked polytope grown from a simplex) or ``(s,)`` with a
    ``base`` tag, meaning s stackings onto simplex facets of the base.
    """

    name: str
    params: tuple[int, ...] = ()
    base: Optional["FamilyTag"] = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.name == "Pyramid" and (self.base is None or len(self.params) != 1):
            raise ValueError("Pyramid needs params (t,) and a base tag")
        if self.name == "Stacked" and self.base is not None and len(self.params) != 1:
            raise ValueError("Stacked over a base needs params (s,)")

    def __str__(self) -> str:
        inner = ",".join(map(str, self.params))
        if self.base is not None:
            inner = f"{inner};{self.base}"
        return f"{self.name}({inner})"

    def to_dict(self) -> dict:
        out = {"name": self.name, "params": list(self.params)}
        if self.base is not None:
            out["base"] = self.base.to_dict()
        return out

    @property
    def dim(self) -> int:
        return construct(self).dim


def parse_tag(text: str) -> FamilyTag:
    """Inverse of ``str(tag)``: ``"Pyramid(1;Pentasm(3))"``.  Family names
    are matched case-insensitively; a bare name means no parameters."""
    text = text.strip()
    names = {n.lower(): n for n in FAMILIES}
    head, sep, rest = text.partition("(")
    name = names.get(head.strip().lower().replace("-", "").replace("_", ""))
    if name is None:
        raise ValueError(f"unknown family {head.strip()!r}; expected one of {', '.join(FAMILIES)}")
    if not sep:
        return FamilyTag(name)
    if not rest.endswith(")"):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    inner = rest[:-1]
    params, semi, base = inner.partition(";")
    try:
        nums = tuple(int(x) for x in params.split(",") if x.strip())
    except ValueError:
        raise ValueError(f"parameters must be integers in {text!r}") from None
    return FamilyTag(name, nums, parse_tag(base) if semi else None)


def simplex(d: int) -> CombinatorialPolytope:
    if d < 1:
        raise ValueError(f"simplex needs d >= 1, got {d}")
    return CombinatorialPolytope(d, d + 1, combinations(range(d + 1), d))


def prism(d: int) -> CombinatorialPolytope:
    """Prism over a (d-1)-simplex; vertex (i, eps) is numbered i + eps*d."""
    if d < 2:
        raise ValueError(f"prism needs d >= 2, got {d}")
    facets = [range(d), range(d, 2 * d)]
    for i in range(d):
        facets.append([v for v in range(2 * d) if v % d != i])
    return CombinatorialPolytope(d, 2 * d, facets)


def pyramid(P: CombinatorialPolytope) -> CombinatorialPolytope:
    """Pyramid with apex numbered ``P.nverts``."""
    apex = P.nverts
    facets = [f + (apex,) for f in P.facets]
    facets.append(range(P.nverts))
    return CombinatorialPolytope(P.dim + 1, P.nverts + 1, facets)


def pyramid_t_fold(P: CombinatorialPolytope, t: int) -> CombinatorialPolytope:
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    for _ in range(t):
        P = pyramid(P)
    return P


def triplex(k: int, j: int) -> CombinatorialPolytope:
    """M_{k,j}: j-fold pyramid over the k-dimensional prism (d = k + j)."""
    if k < 1 or j < 0:
        raise ValueError(f"triplex needs k >= 1 and j >= 0, got k={k}, j={j}")
    base = simplex(1) if k == 1 else prism(k)
    return pyramid_t_fold(base, j)


def pentasm(d: int) -> CombinatorialPolytope:
    """The d-pentasm on u_1..u_d (0..d-1) and v_0..v_d (d..2d)."""
    if d < 3:
        raise ValueError(f"pentasm needs d >= 3, got {d}")
    u = {i: i - 1 for i in range(1, d + 1)}
    v = {i: d + i for i in range(d + 1)}
    everything = set(range(2 * d + 1))
    facets = [everything - {u[i], v[i]} for i in range(3, d + 1)]
    facets.append(everything - {u[1], v[1], v[0]})
    facets.append(everything - {u[2], v[2], v[0]})
    facets.append(set(u.values()))
    facets.append({v[i] for i in range(d + 1) if i != 1})
    facets.append({v[i] for i in range(d + 1) if i != 2})
    return CombinatorialPolytope(d, 2 * d + 1, facets)


def delta_sum(r: int, s: int) -> CombinatorialPolytope:
    """Delta_{r,s}, sum of an r-simplex and an s-simplex in complementary
    subspaces; vertex (i, j) is numbered i*(s+1) + j."""
    if r < 1 or s < 1:
        raise ValueError(f"delta_sum needs r, s >= 1, got r={r}, s={s}")
    idx = lambda i, j: i * (s + 1) + j  # noqa: E731
    facets = []
    for i in range(r + 1):
        facets.append([idx(a, b) for a in range(r + 1) for b in range(s + 1) if a != i])
    for j in range(s + 1):
        facets.append([idx(a, b) for a in range(r + 1) for b in range(s + 1) if b != j])
    return CombinatorialPolytope(r + s, (r + 1) * (s + 1), facets)


# hull of 0, e1, e2, e1+e2, e1+e3, e2+e3, e1+e2+2e3 (vertices in that order),
# computed once by geometry.hull_facets
_SIGMA3_FACETS = ((0, 1, 2, 3), (0, 1, 4), (0, 2, 5), (0, 4, 5, 6), (1, 3, 4, 6), (2, 3, 5, 6))


def sigma3() -> CombinatorialPolytope:
    return CombinatorialPolytope(3, 7, _SIGMA3_FACETS)


def cyclic(d: int, v: int) -> CombinatorialPolytope:
    """Cyclic polytope C(v, d), facets by Gale's evenness condition."""
    if d < 2 or v < d + 1:
        raise ValueError(f"cyclic needs d >= 2 and v >= d+1, got d={d}, v={v}")
    facets = []
    for S in combinations(range(v), d):
        inside = set(S)
        ok = True
        outside = [x for x in range(v) if x not in inside]
        for a, b in zip(outside, outside[1:]):
            if (b - a - 1) % 2:
                ok = False
                break
        if ok:
            facets.append(S)
    return CombinatorialPolytope(d, v, facets)


def stack_on(P: CombinatorialPolytope, times: int = 1) -> CombinatorialPolytope:
    """Stack a new vertex beyond the lexicographically first simplex facet,
    ``times`` times.  Each step adds one vertex and d edges (d >= 3)."""
    if times and P.dim < 3:
        raise ValueError(f"stacking needs d >= 3, got {P.dim}")
    for _ in range(times):
        F = next((f for f in P.facets if len(f) == P.dim), None)
        if F is None:
            raise ValueError("no simplex facet to stack on")
        w = P.nverts
        facets = [f for f in P.facets if f != F]
        facets.extend(tuple(x for x in F if x != drop) + (w,) for drop in F)
        P = CombinatorialPolytope(P.dim, P.nverts + 1, facets)
    return P


def stacked(d: int, v: int) -> CombinatorialPolytope:
    if d < 3:
        raise ValueError(f"stacked needs d >= 3, got {d}")
    if v < d + 1:
        raise ValueError(f"stacked needs v >= d+1, got v={v}, d={d}")
    return stack_on(simplex(d), v - d - 1)


def construct(tag: FamilyTag) -> CombinatorialPolytope:
    p = tag.params
    match tag.name:
        case "Simplex":
            return simplex(*p)
        case "Prism":
            return prism(*p)
        case "Triplex":
            return triplex(*p)
        case "Pentasm":
            return pentasm(*p)
        case "DeltaSum":
            return delta_sum(*p)
        case "Sigma3":
            if p:
                raise ValueError("Sigma3 takes no parameters")
            return sigma3()
        case "Cyclic":
            return cyclic(*p)
        case "Pyramid":
            return pyramid_t_fold(construct(tag.base), p[0])
        case "Stacked":
            if tag.base is not None:
                return stack_on(construct(tag.base), p[0])
            return stacked(*p)
    raise ValueError(f"unknown family {tag.name!r}")


def catalogue(max_dim: int = 7, max_verts: int = 12):
    """Family instances of dimension 2..max_dim for catalogue-wide checks.

    Pentasms and triplices are always included up to ``max_dim``; families
    with a free vertex count stop at ``max_verts``.
    """
    T = FamilyTag
    out: list[FamilyTag] = []
    for d in range(2, max_dim + 1):
        out.append(T("Simplex", (d,)))
        out.append(T("Prism", (d,)))
        out.extend(T("Triplex", (k, d - k)) for k in range(1, d + 1))
        if d >= 3:
            out.append(T("Pentasm", (d,)))
            out.extend(T("Stacked", (d, v)) for v in range(d + 2, max_verts + 1))
            out.append(T("Stacked", (1,), T("Triplex", (2, d - 2))))
        out.extend(T("DeltaSum", (r, d - r)) for r in range(1, d // 2 + 1)
                   if (r + 1) * (d - r + 1) <= max(max_verts, 2 * d))
        out.extend(T("Cyclic", (d, v)) for v in range(d + 2, max_verts + 1))
        if d >= 4:
            out.append(T("Pyramid", (1,), T("Pentasm", (d - 1,))))
            out.append(T("Pyramid", (d - 3,), T("Sigma3")))
            for r in range(2, (d - 1) // 2 + 1):
                out.append(T("Pyramid", (1,), T("DeltaSum", (r, d - 1 - r))))
    out.insert(1, T("Sigma3"))
    return out


def edge_count_formula(tag: FamilyTag) -> tuple[int, int, int]:
    """``(d, v, e)`` from closed forms, without building the lattice."""
    p = tag.params
    match tag.name:
        case "Simplex":
            d = p[0]
            return d, d + 1, binom(d + 1, 2)
        case "Prism":
            d = p[0]
            return d, 2 * d, d * d
        case "Triplex":
            from .combinatorics import phi
            k, j = p
            d = k + j
            return d, d + k, (1 if d == 1 else phi(1, d + k, d))
        case "Pentasm":
            d = p[0]
            return d, 2 * d + 1, d * d + d - 1
        case "DeltaSum":
            r, s = p
            n = (r + 1) * (s + 1)
            return r + s, n, n * (r + s) // 2
        case "Sigma3":
            return 3, 7, 11
        case "Cyclic":
            d, v = p
            if d == 2:
                return 2, v, v
            if d == 3:
                return 3, v, 3 * v - 6
            return d, v, binom(v, 2)
        case "Pyramid":
            d, v, e = edge_count_formula(tag.base)
            t = p[0]
            return d + t, v + t, e + t * v + binom(t, 2)
        case "Stacked":
            if tag.base is None:
                d, v = p
                return d, v, d * v - binom(d + 1, 2)
            d, v, e = edge_count_formula(tag.base)
            return d, v + p[0], e + p[0] * d
    raise ValueError(f"unknown family {tag.name!r}")
