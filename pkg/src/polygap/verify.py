"""The acceptance suite: ten numbered checks with pinned time budgets.

Shared by ``polygap verify`` and ``tests/test_acceptance.py``.  Each check
returns a :class:`CheckResult`; a check fails on a wrong value or on
exceeding its budget.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from . import combinatorics as cb
from .bounds import (Verdict, dplus2_decompositions, edges_feasible, max_dimension_for_edges,
                     min_facets, min_ridges_2dplus1, square_gap_interval, witness_candidates)
from .constructions import FamilyTag, catalogue, construct, pentasm, prism, sigma3, simplex, triplex
from .geometry import cross_check, hull_facets, realize, truncate_vertex
from .isomorphism import are_isomorphic, facet_census
from .lattice import STATS, degree_sequence, enumerate_lattice

__all__ = ["CheckResult", "CHECKS", "run_check", "run_all"]

T = FamilyTag


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.name} ({self.seconds:.2f}s) {self.detail}"


def _identities():
    bad = []
    for d in range(1, 51):
        for k in range(1, d + 1):
            if cb.phi_edges_surplus_form(d, k) != cb.phi_formula(1, d + k, d):
                bad.append(("surplus", d, k))
            for n in range(1, k + 1):
                if cb.vertex_removal_identity_residual(d, k, n) != 0:
                    bad.append(("telescoping", d, k, n))
    return not bad, f"{len(bad)} failures" if bad else "all residuals 0 for 1<=n<=k<=d<=50", 5.0


def _triplex_fvectors():
    bad = []
    for d in range(1, 8):
        for k in range(1, d + 1):
            f = enumerate_lattice(triplex(k, d - k)).f_vector
            want = tuple(cb.phi(m, d + k, d) for m in range(d))
            if f != want:
                bad.append((k, d, f, want))
    return not bad, f"mismatches {bad}" if bad else "28 triplices match phi_m", 30.0


def _pentasm():
    bad = []
    for d in range(3, 8):
        P = pentasm(d)
        f = enumerate_lattice(P).f_vector
        if list(f) != cb.pentasm_fvector(d) or f[1] != d * d + d - 1:
            bad.append(("fvector", d, f))
        if d >= 4:
            census = facet_census(P)
            want = {("pentasm", d - 2), ("prism", 2), ("simplex", 3)}
            got = set()
            for rep, n in census:
                for name, Q in (("pentasm", pentasm(d - 1)), ("prism", prism(d - 1)), ("simplex", simplex(d - 1))):
                    if are_isomorphic(rep, Q):
                        got.add((name, n))
            if got != want or len(census) != 3:
                bad.append(("census", d, [(r.nverts, n) for r, n in census]))
    return not bad, f"{bad}" if bad else "f-vectors d=3..7 and censuses d=4..7 match", None


def _oracle():
    tags = [T("Pentasm", (d,)) for d in (3, 4, 5)]
    tags += [T("Sigma3"), T("DeltaSum", (2, 2)), T("DeltaSum", (2, 3))]
    tags += [T("Triplex", (k, j)) for k in range(1, 6) for j in range(0, 6 - k) if k + j >= 2]
    tags += [T("Prism", (d,)) for d in (3, 4, 5)]
    bad = [str(t) for t in tags if not cross_check(t)]
    for d in (3, 4):
        cfg = realize(T("Triplex", (2, d - 2)))
        P = hull_facets(cfg)
        deg = degree_sequence(P)
        simple_vertex = next(i for i, x in enumerate(deg) if x == d)
        if not are_isomorphic(hull_facets(truncate_vertex(cfg, simple_vertex)), pentasm(d)):
            bad.append(f"truncation d={d}")
    return not bad, f"failed {bad}" if bad else f"{len(tags)} cross-checks and 2 truncations", 120.0


def _gaps():
    parts, ok = [], True
    expect = [((4, 17), Verdict.INFEASIBLE), ((4, 16), Verdict.FEASIBLE), ((4, 18), Verdict.FEASIBLE),
              ((10, 80), Verdict.INFEASIBLE)]
    for (d, e), want in expect:
        got = edges_feasible(d, e)
        good = got.verdict is want
        ok &= good
        parts.append(f"E({d},{e})={got.verdict}" + ("" if good else f" [expected {want}: {got.reason}]"))
    r = max_dimension_for_edges(407)
    good = (r.dimension == 23
            and all(r.certificates[d].verdict is Verdict.INFEASIBLE for d in range(24, 29))
            and r.certificates[23].verdict is not Verdict.INFEASIBLE)
    ok &= good
    parts.append(f"maxdim(407)={r.dimension}")
    return ok, "; ".join(parts), 10.0


def _square_gaps():
    bad, count = [], 0
    for n in (2, 3, 4):
        j = 2
        while n * n + j <= 30:
            d, lo, hi = square_gap_interval(n, j)
            for e in range(lo, hi + 1):
                count += 1
                if edges_feasible(d, e).verdict is not Verdict.INFEASIBLE:
                    bad.append((d, e))
            j += 1
    return not bad, f"not Infeasible: {bad}" if bad else f"{count} edge counts Infeasible", None


def _euler():
    bad = []
    for tag in catalogue(7, 12):
        enumerate_lattice(construct(tag))  # raises on an Euler failure
    for tag in witness_candidates(5, 10):
        f = enumerate_lattice(construct(tag)).f_vector
        e, t, r, fa = f[1], f[2], f[3], f[4]
        if t != (e - 8) + (r - fa):
            bad.append(str(tag))
    detail = f"{STATS['euler_ok']}/{STATS['lattices']} lattices satisfy Euler"
    ok = not bad and STATS["euler_ok"] == STATS["lattices"]
    return ok, detail + (f"; d=5,v=10 failures {bad}" if bad else "; d=5,v=10 relation holds"), None


def _uniqueness():
    bad = []
    P, S = pentasm(3), sigma3()
    if are_isomorphic(P, S):
        bad.append("pentasm(3) ~ sigma3")
    for Q in (P, S):
        if enumerate_lattice(Q).f_vector != (7, 11, 6):
            bad.append(f"f-vector {enumerate_lattice(Q).f_vector}")
    for d in range(2, 7):
        tags = set(catalogue(6, 12)) | set(witness_candidates(d, 2 * d))
        for tag in tags:
            Q = construct(tag)
            if Q.dim == d and Q.nverts == 2 * d and len(enumerate_lattice(Q).edges) == d * d:
                if not are_isomorphic(Q, prism(d)):
                    bad.append(str(tag))
    return not bad, f"{bad}" if bad else "pentasm(3) != sigma3; prism unique at (2d, d^2), d<=6", None


def _facets():
    bad = []
    if min_facets(11, 5).value != 8:
        bad.append("min_facets(11,5)")
    if min_facets(12, 5).value != 7:
        bad.append("min_facets(12,5)")
    for d in (3, 5, 7):
        ridges = enumerate_lattice(pentasm(d)).f_vector[d - 2]
        if min_ridges_2dplus1(d).value != ridges:
            bad.append(f"ridges d={d}")
    for k in range(2, 21):
        for d in range(k, 21):
            unique = len(dplus2_decompositions(k, d)) == 1
            if unique != (k == 2 or cb.is_prime(k - 1)):
                bad.append(f"uniqueness k={k} d={d}")
    return not bad, f"{bad}" if bad else "facet/ridge minima and decomposition uniqueness", None


def _binomial_positivity():
    bad, count = [], 0
    for d in range(3, 31):
        for m in range(2, d + 1):
            if cb.binomial_excess_2(d, m) != cb.binomial_excess_2_factored(d, m):
                bad.append(("identity 2", d, m))
            if m >= 3 and cb.binomial_excess_3(d, m) != cb.binomial_excess_3_factored(d, m):
                bad.append(("identity 3", d, m))
            if m == d:
                continue  # both sides vanish at m = d
            if cb.above_alpha(m, d) or (d <= 15 and 5 * m >= 3 * (d - 1)):
                count += 1
                if not cb.binomial_excess_2(d, m) > 0:
                    bad.append(("positive 2", d, m))
            if m >= 3 and (cb.above_beta(m, d) or (d <= 17 and 2 * m >= d)):
                count += 1
                if not cb.binomial_excess_3(d, m) > 0:
                    bad.append(("positive 3", d, m))
    return not bad, f"{bad[:5]}" if bad else f"identities exact, {count} positivity cases", None


CHECKS = [
    (1, "identity sweep", _identities),
    (2, "triplex f-vectors", _triplex_fvectors),
    (3, "pentasm f-vectors and facet census", _pentasm),
    (4, "oracle equivalence", _oracle),
    (5, "gap reproduction", _gaps),
    (6, "square-dimension gap sweep", _square_gaps),
    (7, "Euler relation", _euler),
    (8, "uniqueness catalogue", _uniqueness),
    (9, "facet and ridge minima", _facets),
    (10, "binomial positivity lemma", _binomial_positivity),
]


def run_check(number: int) -> CheckResult:
    _, name, fn = CHECKS[number - 1]
    t0 = time.perf_counter()
    ok, detail, budget = fn()
    dt = time.perf_counter() - t0
    if budget is not None and dt >= budget:
        ok = False
        detail += f" [over budget {budget:.0f}s]"
    return CheckResult(number, name, ok, detail, dt)


def run_all() -> list[CheckResult]:
    return [run_check(n) for n, _, _ in CHECKS]
