"""Edge and face-count bounds with explicit epistemic status.

Every answer says how it is known.  Results established by the minimality
and gap theorems are ``ProvedHere``; results announced elsewhere are
``CitedUnproved``; believed values are ``Conjectured``.  Only proved bounds
(and the trivial degree bound) may make a feasibility query Infeasible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .combinatorics import binom, phi, meets_062, meets_06_small
from .constructions import FamilyTag, edge_count_formula

__all__ = [
    "Status", "Verdict", "Reachability", "BoundResult", "Band", "VertexCase",
    "FeasibilityVerdict", "MaxDimResult", "ExcessBounds",
    "min_edges", "max_edges", "proven_edge_floor", "forbidden_band", "edges_feasible",
    "max_dimension_for_edges", "excess_bounds", "simple_vertex_reachable",
    "dplus2_decompositions", "min_facets", "min_ridges_2dplus1", "fm_lower_bound",
    "witness_candidates", "find_witness", "gaps_in_dimension", "square_gap_interval",
    "second_gap_interval", "min_edges_table",
]

T = FamilyTag


class Status(str, Enum):
    PROVED_HERE = "ProvedHere"
    CITED_UNPROVED = "CitedUnproved"
    CONJECTURED = "Conjectured"
    LOWER_BOUND_ONLY = "LowerBoundOnly"
    UPPER_BOUND_ONLY = "UpperBoundOnly"

    def __str__(self) -> str:
        return self.value


class Verdict(str, Enum):
    INFEASIBLE = "Infeasible"
    FEASIBLE = "Feasible"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


class Reachability(str, Enum):
    REACHABLE = "Reachable"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


# citation strings: theorem name plus the statement it licenses
C_TRIPLEX_MIN = "triplex minimality: min E(v,d) = phi(v,d) for d < v <= 2d, unique minimiser M_{v-d,2d-v}"
C_PENTASM_MIN = "pentasm theorem: min E(2d+1,d) = d^2+d-1 for d != 4, pentasm unique for d >= 5"
C_PENTASM_D4 = "pentasm theorem, d = 4: min E(9,4) = 18 attained only by Delta_{2,2}"
C_2D2_BELIEF = "believed: min E(2d+2,d) = (d+3)(d-1) for d >= 6 (announced, unproved)"
C_2D2_KNOWN = "known for d = 3, 4: min E(2d+2,d) = (d+3)(d-1) (cited)"
C_SIMPLE = "simple polytope bound: a simple polytope with v vertices exists (vertex/edge cuts of a simplex or Delta_{r,s}), so min E = dv/2"
C_DEGREE = "every vertex has degree >= d: e >= dv/2"
C_POLYGON = "polygons: E(v,2) = {v}"
C_STEINITZ = "Steinitz: max E(v,3) = 3v-6"
C_CYCLIC = "cyclic polytopes: max E(v,d) = C(v,2) for d >= 4"
C_NONTRIPLEX_GAP = "non-triplex gap theorem: a non-triplex with d+k vertices, 4 <= k <= d, has >= phi+k-3 edges"
C_DPLUS4 = "d+4 theorem: no d-polytope with d+4 vertices has phi(d+4,d)+1 edges"
C_STEINITZ_INTERVAL = "Steinitz: E(v,3) is the full interval [ceil(3v/2), 3v-6]"
C_DPLUS2_INTERVAL = "Grunbaum: E(d+2,d) is the complete interval [phi(d+2,d), C(d+2,2)]"
C_DPLUS3_INTERVAL = "d+3 interval lemma: E(d+3,d) = [phi(d+3,d), C(d+3,2)] for d >= 4"
C_E84 = "Grunbaum: E(8,4) = {16} U [18,28]"
C_FACETS_TRIPLEX = "facet minimum for v <= 2d: min F_{d-1}(d+k,d) = d+2, attained by M_{k,d-k} (McMullen)"
C_FACETS_DPLUS2 = "d+2 facets iff v-d-1 = rs with r+s <= d (t-fold pyramid over Delta_{r,s})"
C_FACETS_PRIME = "2d+1 vertices, d prime: no d+2 facets, min is d+3 (pentasm)"
C_FACETS_MCMULLEN = "McMullen: min F_{d-1}(v,d) = d+3 when no d+2 facet polytope exists, v <= d^2/4+2d"
C_RIDGES = "ridge minimum at 2d+1 vertices (announced, proof elsewhere)"
C_FM_HIGH = "high-m theorem: triplex uniquely minimises f_m for m >= 0.62d (or m >= 0.6(d-1), d <= 15)"
C_FM_EDGES = "triplex minimality for edges"
C_FM_SMALL_D = "Grunbaum's conjecture holds for d <= 5 (Euler argument closes d = 5, m = 2)"
C_FM_VERTS = "f_0 = v"
C_FM_GRUNBAUM = "Grunbaum: min F_m(v,d) = phi_m(v,d) for v <= d+4"
C_FM_OPEN = "Grunbaum's conjecture (open here): phi_m(v,d) is only conjectured minimal"


@dataclass(frozen=True)
class BoundResult:
    value: int
    status: Status
    citation: str
    witness: Optional[FamilyTag] = None
    unique: Optional[bool] = None

    def to_dict(self) -> dict:
        out = {"value": self.value, "status": str(self.status), "citation": self.citation,
               "witness": str(self.witness) if self.witness else None}
        if self.unique is not None:
            out["unique"] = self.unique
        return out


def _check_vd(v: int, d: int, min_d: int = 2) -> None:
    if d < min_d:
        raise ValueError(f"need d >= {min_d}, got d={d}")
    if v <= d:
        raise ValueError(f"need v >= d+1, got v={v}, d={d}")


# --- simple polytopes and the coin problem -------------------------------

def _semigroup_contains(n: int, a: int, b: int) -> bool:
    """n = x*a + y*b for some x, y >= 0."""
    if n < 0:
        return False
    if n == 0:
        return True
    if b <= 0:
        return a > 0 and n % a == 0
    for y in range(n // b + 1):
        rest = n - y * b
        if (a > 0 and rest % a == 0) or rest == 0:
            return True
    return False


def _simple_bases(d: int) -> list[tuple[int, FamilyTag]]:
    bases = [(d + 1, T("Simplex", (d,))), (2 * d, T("Prism", (d,)))]
    for r in range(2, d // 2 + 1):
        bases.append(((r + 1) * (d - r + 1), T("DeltaSum", (r, d - r))))
    return bases


def simple_vertex_reachable(v: int, d: int) -> Reachability:
    """Whether a simple d-polytope with v vertices is known to exist.

    Cutting a vertex of a simple polytope adds d-1 vertices, cutting an edge
    adds 2d-4; start from the simplex, the prism or any Delta_{r,s}.
    Unknown is not a proof of non-existence.
    """
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    for base, _ in _simple_bases(d):
        if _semigroup_contains(v - base, d - 1, 2 * d - 4):
            return Reachability.REACHABLE
    return Reachability.UNKNOWN


def simple_witness(v: int, d: int) -> Optional[FamilyTag]:
    """A simple polytope family instance with exactly v vertices, if one of
    the implemented families has one."""
    for base, tag in _simple_bases(d):
        if base == v:
            return tag
    return None


# --- edges ---------------------------------------------------------------

def min_edges(v: int, d: int) -> BoundResult:
    _check_vd(v, d)
    if d == 2:
        return BoundResult(v, Status.PROVED_HERE, C_POLYGON, T("Cyclic", (2, v)))
    k = v - d
    if k <= d:
        return BoundResult(phi(1, v, d), Status.PROVED_HERE, C_TRIPLEX_MIN, T("Triplex", (k, d - k)))
    if v == 2 * d + 1:
        if d == 4:
            return BoundResult(18, Status.PROVED_HERE, C_PENTASM_D4, T("DeltaSum", (2, 2)), unique=True)
        return BoundResult(d * d + d - 1, Status.PROVED_HERE, C_PENTASM_MIN, T("Pentasm", (d,)),
                           unique=d != 3)
    if simple_vertex_reachable(v, d) is Reachability.REACHABLE:
        return BoundResult(d * v // 2, Status.PROVED_HERE, C_SIMPLE, simple_witness(v, d))
    if v == 2 * d + 2:
        value = (d + 3) * (d - 1)
        if d in (3, 4):
            return BoundResult(value, Status.CITED_UNPROVED, C_2D2_KNOWN)
        return BoundResult(value, Status.CONJECTURED, C_2D2_BELIEF)
    return BoundResult(-(-d * v // 2), Status.LOWER_BOUND_ONLY, C_DEGREE)


def proven_edge_floor(v: int, d: int) -> tuple[int, str]:
    """A lower bound on edges that may be used to exclude counts."""
    r = min_edges(v, d)
    if r.status in (Status.PROVED_HERE, Status.LOWER_BOUND_ONLY):
        return r.value, r.citation
    return -(-d * v // 2), C_DEGREE


def max_edges(v: int, d: int) -> BoundResult:
    _check_vd(v, d)
    if d == 2:
        return BoundResult(v, Status.PROVED_HERE, C_POLYGON, T("Cyclic", (2, v)))
    if d == 3:
        return BoundResult(3 * v - 6, Status.PROVED_HERE, C_STEINITZ, T("Stacked", (3, v)))
    return BoundResult(binom(v, 2), Status.PROVED_HERE, C_CYCLIC, T("Cyclic", (d, v)))


@dataclass(frozen=True)
class Band:
    """Closed integer interval [lo, hi]; empty when lo > hi."""

    lo: int
    hi: int
    citation: str = ""

    def __contains__(self, e: int) -> bool:
        return self.lo <= e <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __bool__(self) -> bool:
        return self.lo <= self.hi

    def __str__(self) -> str:
        if not self:
            return "{}"
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        return f"[{self.lo},{self.hi}]"


def forbidden_band(v: int, d: int) -> Band:
    """Edge counts that no d-polytope with v vertices has, d < v <= 2d."""
    if d < 2 or not d < v <= 2 * d:
        raise ValueError(f"forbidden band needs d < v <= 2d, got v={v}, d={d}")
    k = v - d
    f = phi(1, v, d)
    if k <= 3:
        return Band(f + 1, f, "")
    if k == 4:
        return Band(f + 1, f + 1, C_DPLUS4)
    return Band(f + 1, f + k - 4, C_NONTRIPLEX_GAP)


# --- witnesses -----------------------------------------------------------

def _has_simplex_facet(tag: FamilyTag) -> bool:
    match tag.name:
        case "Simplex" | "Prism" | "Triplex" | "Pentasm" | "Sigma3" | "Cyclic" | "Stacked":
            return True
        case "DeltaSum":
            return min(tag.params) == 1
        case "Pyramid":
            return tag.base.name == "Simplex" or _has_simplex_facet(tag.base)
    return False


def _bases(p: int, n: int) -> Iterator[FamilyTag]:
    """Non-pyramidal family instances of dimension p with n vertices."""
    if p >= 3 and n == 2 * p + 1:
        yield T("Pentasm", (p,))
    if p == 3 and n == 7:
        yield T("Sigma3")
    for r in range(2, p // 2 + 1):
        if (r + 1) * (p - r + 1) == n:
            yield T("DeltaSum", (r, p - r))
    if p >= 3 and n >= p + 2:
        yield T("Stacked", (p, n))


def witness_candidates(d: int, v: int) -> Iterator[FamilyTag]:
    """Implemented constructions with dimension d and v vertices."""
    if v <= d:
        return
    if v <= 2 * d:
        yield T("Triplex", (v - d, 2 * d - v))
    yield T("Cyclic", (d, v))
    for t in range(0, d - 1):
        for b in _bases(d - t, v - t):
            yield b if t == 0 else T("Pyramid", (t,), b)
    # stacking onto simplex facets of a smaller-vertex base
    for s in range(1, v - d if d >= 3 else 0):
        n = v - s
        pool = []
        if n <= 2 * d:
            pool.append(T("Triplex", (n - d, 2 * d - n)))
        for t in range(0, d - 1):
            for b in _bases(d - t, n - t):
                if b.name == "Stacked":
                    continue
                pool.append(b if t == 0 else T("Pyramid", (t,), b))
        for b in pool:
            if _has_simplex_facet(b):
                yield T("Stacked", (s,), b)


def find_witness(d: int, v: int, e: int) -> Optional[FamilyTag]:
    for tag in witness_candidates(d, v):
        if edge_count_formula(tag) == (d, v, e):
            return tag
    return None


def _cited_interval(v: int, d: int, e: int) -> Optional[str]:
    if d == 3 and -(-3 * v // 2) <= e <= 3 * v - 6:
        return C_STEINITZ_INTERVAL
    if v == d + 2 and d >= 3 and phi(1, v, d) <= e <= binom(v, 2):
        return C_DPLUS2_INTERVAL
    if v == d + 3 and d >= 4 and phi(1, v, d) <= e <= binom(v, 2):
        return C_DPLUS3_INTERVAL
    if (v, d) == (8, 4) and (e == 16 or 18 <= e <= 28):
        return C_E84
    return None


@dataclass(frozen=True)
class VertexCase:
    v: int
    verdict: Verdict
    kind: str  # "min", "max", "band", "witness", "cited", "open"
    bound: Optional[int | Band]
    reason: str
    witness: Optional[FamilyTag] = None


@dataclass(frozen=True)
class FeasibilityVerdict:
    d: int
    e: int
    verdict: Verdict
    reason: str
    witness: Optional[FamilyTag] = None
    cases: tuple[VertexCase, ...] = field(default=(), repr=False)

    def summary(self) -> str:
        return f"{self.verdict} ({self.reason})"

    def to_dict(self) -> dict:
        return {
            "query": {"d": self.d, "e": self.e},
            "verdict": str(self.verdict),
            "citation": self.reason,
            "witness": str(self.witness) if self.witness else None,
            "cases": [
                {"v": c.v, "verdict": str(c.verdict), "kind": c.kind,
                 "bound": str(c.bound) if c.bound is not None else None,
                 "citation": c.reason, "witness": str(c.witness) if c.witness else None}
                for c in self.cases
            ],
        }


def _vertex_case(d: int, v: int, e: int) -> VertexCase:
    lo, lo_cite = proven_edge_floor(v, d)
    if e < lo:
        return VertexCase(v, Verdict.INFEASIBLE, "min", lo, lo_cite)
    hi = max_edges(v, d)
    if e > hi.value:
        return VertexCase(v, Verdict.INFEASIBLE, "max", hi.value, hi.citation)
    if d < v <= 2 * d:
        band = forbidden_band(v, d)
        if e in band:
            return VertexCase(v, Verdict.INFEASIBLE, "band", band, band.citation)
    w = find_witness(d, v, e)
    if w is not None:
        return VertexCase(v, Verdict.FEASIBLE, "witness", None, "construction", w)
    cite = _cited_interval(v, d, e)
    if cite is not None:
        return VertexCase(v, Verdict.FEASIBLE, "cited", None, cite)
    return VertexCase(v, Verdict.UNKNOWN, "open", None, "not decided by the implemented theorems")


def _vertex_range(d: int, e: int) -> range:
    # beyond 2d+2 every floor is ceil(dv/2), so v > 2e/d is excluded
    top = max(2 * d + 2, (2 * e) // d + 1)
    return range(d + 1, top + 1)


def _segments(cases: list[VertexCase], d: int, vmax: int) -> str:
    parts_band, parts_max, parts_min = [], [], []
    i = 0
    while i < len(cases):
        j = i
        while j + 1 < len(cases) and cases[j + 1].kind == cases[i].kind and cases[i].kind in ("max", "min"):
            j += 1
        a, b = cases[i], cases[j]
        if a.kind == "band":
            parts_band.append(f"v={a.v} band {a.bound}")
        elif a.kind == "max":
            lead = f"v≤{b.v}" if a.v == d + 1 else (f"v={a.v}" if a.v == b.v else f"v={a.v}..{b.v}")
            parts_max.append(f"{lead} max {b.bound}")
        elif a.kind == "min":
            lead = f"v≥{a.v}" if b.v == vmax else (f"v={a.v}" if a.v == b.v else f"v={a.v}..{b.v}")
            parts_min.append(f"{lead} min {a.bound}")
        i = j + 1
    return "; ".join(parts_band + parts_max + parts_min)


def edges_feasible(d: int, e: int) -> FeasibilityVerdict:
    """Is there a d-polytope with exactly e edges?

    Infeasible only when every vertex count is excluded by a proved bound or
    gap; Feasible when some construction or cited complete interval has e.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    vs = _vertex_range(d, e)
    cases = [_vertex_case(d, v, e) for v in vs]
    feas = [c for c in cases if c.verdict is Verdict.FEASIBLE]
    if feas:
        best = next((c for c in feas if c.witness is not None), feas[0])
        return FeasibilityVerdict(d, e, Verdict.FEASIBLE,
                                  f"v={best.v}: {best.witness or best.reason}", best.witness, tuple(cases))
    if all(c.verdict is Verdict.INFEASIBLE for c in cases):
        return FeasibilityVerdict(d, e, Verdict.INFEASIBLE, _segments(cases, d, vs[-1]), None, tuple(cases))
    open_vs = [c.v for c in cases if c.verdict is Verdict.UNKNOWN]
    return FeasibilityVerdict(d, e, Verdict.UNKNOWN, f"undecided for v in {open_vs}", None, tuple(cases))


@dataclass(frozen=True)
class MaxDimResult:
    e: int
    dimension: int
    certificates: dict

    def to_dict(self) -> dict:
        return {"edges": self.e, "max_dimension": self.dimension,
                "certificates": {str(d): v.to_dict() for d, v in sorted(self.certificates.items())}}


def max_dimension_for_edges(e: int) -> MaxDimResult:
    """Largest d for which e edges are not ruled out, with per-d verdicts
    from the first impossible dimension down."""
    if e < 3:
        raise ValueError(f"need e >= 3, got e={e}")
    d = 2
    while binom(d + 1, 2) <= e:
        d += 1
    certs = {}
    while d >= 2:
        verdict = edges_feasible(d, e)
        certs[d] = verdict
        if verdict.verdict is not Verdict.INFEASIBLE:
            return MaxDimResult(e, d, certs)
        d -= 1
    raise AssertionError("every polygon edge count is feasible")


def gaps_in_dimension(d: int, e_max: Optional[int] = None) -> list[FeasibilityVerdict]:
    """Infeasible edge counts from C(d+1,2) up to e_max (default C(2d,2))."""
    e_max = binom(2 * d, 2) if e_max is None else e_max
    out = []
    for e in range(binom(d + 1, 2), e_max + 1):
        r = edges_feasible(d, e)
        if r.verdict is Verdict.INFEASIBLE:
            out.append(r)
    return out


def square_gap_interval(n: int, j: int) -> tuple[int, int, int]:
    """(d, lo, hi): in dimension d = n^2 + j no polytope has lo..hi edges."""
    d = n * n + j
    c = binom(d + n, 2)
    return d, c + 1, c + j - 1


def second_gap_interval(n: int, d: int) -> Optional[tuple[int, int]]:
    """Edge interval excluded in dimension d by the second gap family, n >= 4."""
    if n < 4:
        return None
    f = phi(1, d + n + 1, d) if d + n + 1 <= 2 * d + 1 else None
    if f is None:
        return None
    if d >= n * n:
        return f + 1, f + n - 3
    j = n * n - d
    if 1 <= j <= n - 4:
        return f + j + 1, f + n - 3
    return None


# --- excess ----------------------------------------------------------------

@dataclass(frozen=True)
class ExcessBounds:
    lower: Optional[int]   # (k-1)(d-k); None when k > d
    upper: int             # (k-1)(d+k), or 3(k-1) for d = 3
    simplicial_lower: int  # (k-1)d, when every 2-face is a triangle

    @property
    def lower_applicable(self) -> bool:
        return self.lower is not None


def excess_bounds(v: int, d: int) -> ExcessBounds:
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    k = v - d
    if k < 1:
        raise ValueError(f"need v >= d+1, got v={v}, d={d}")
    upper = 3 * (k - 1) if d == 3 else (k - 1) * (d + k)
    lower = (k - 1) * (d - k) if k <= d else None
    return ExcessBounds(lower, upper, (k - 1) * d)


# --- facets and higher faces -----------------------------------------------

def dplus2_decompositions(k: int, d: int) -> list[tuple[int, int, int]]:
    """(r, s, t), r <= s, with rs = k-1 and t = d-r-s >= 0: the t-fold
    pyramids over Delta_{r,s} with d+k vertices and d+2 facets."""
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    out = []
    for r in range(1, k):
        if r * r > k - 1:
            break
        if (k - 1) % r:
            continue
        s = (k - 1) // r
        t = d - r - s
        if t >= 0:
            out.append((r, s, t))
    return out


def _dplus2_tag(r: int, s: int, t: int) -> FamilyTag:
    if r == 1:
        return T("Triplex", (s + 1, t))
    base = T("DeltaSum", (r, s))
    return base if t == 0 else T("Pyramid", (t,), base)


def min_facets(v: int, d: int) -> BoundResult:
    _check_vd(v, d, min_d=3)
    k = v - d
    if k == 1:
        return BoundResult(d + 1, Status.PROVED_HERE, "simplex", T("Simplex", (d,)), unique=True)
    decs = dplus2_decompositions(k, d)
    if decs:
        cite = C_FACETS_TRIPLEX if k <= d else C_FACETS_DPLUS2
        return BoundResult(d + 2, Status.PROVED_HERE, cite, _dplus2_tag(*decs[0]), unique=len(decs) == 1)
    if v == 2 * d + 1:
        return BoundResult(d + 3, Status.PROVED_HERE, C_FACETS_PRIME, T("Pentasm", (d,)), unique=False)
    if 4 * v <= d * d + 8 * d:
        return BoundResult(d + 3, Status.CITED_UNPROVED, C_FACETS_MCMULLEN)
    raise ValueError(f"facet minimum not encoded for v={v} > d^2/4 + 2d")


def min_ridges_2dplus1(d: int) -> BoundResult:
    if d < 3:
        raise ValueError(f"need d >= 3, got d={d}")
    decs = dplus2_decompositions(d + 1, d)
    if not decs:
        return BoundResult((d * d + 5 * d - 2) // 2, Status.CITED_UNPROVED, C_RIDGES,
                           T("Pentasm", (d,)), unique=True)
    return BoundResult((d * d + 3 * d + 2) // 2, Status.CITED_UNPROVED, C_RIDGES,
                       _dplus2_tag(*decs[0]), unique=len(decs) == 1)


def fm_lower_bound(v: int, d: int, m: int) -> BoundResult:
    if not d < v <= 2 * d:
        raise ValueError(f"need d < v <= 2d, got v={v}, d={d}")
    value = phi(m, v, d)
    k = v - d
    witness = T("Triplex", (k, d - k))
    if m == 0:
        return BoundResult(value, Status.PROVED_HERE, C_FM_VERTS, witness)
    if m == 1:
        return BoundResult(value, Status.PROVED_HERE, C_FM_EDGES, witness)
    if meets_062(m, d) or meets_06_small(m, d):
        return BoundResult(value, Status.PROVED_HERE, C_FM_HIGH, witness)
    if d <= 5:
        return BoundResult(value, Status.PROVED_HERE, C_FM_SMALL_D, witness)
    if k <= 4:
        return BoundResult(value, Status.CITED_UNPROVED, C_FM_GRUNBAUM, witness)
    return BoundResult(value, Status.LOWER_BOUND_ONLY, C_FM_OPEN, witness)


def min_edges_table(max_dim: int, min_dim: int = 2) -> list[dict]:
    rows = []
    for d in range(min_dim, max_dim + 1):
        for v in range(d + 1, 2 * d + 3):
            r = min_edges(v, d)
            rows.append({"v": v, "d": d, "min_edges": r.value, "status": str(r.status),
                         "witness": str(r.witness) if r.witness else ""})
    return rows
