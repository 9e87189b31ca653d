"""Exact integer combinatorics for face-count bounds.

Every function here works on Python ints, so nothing overflows and every
identity can be checked with ``==``.  Binomials outside Pascal's triangle
are taken to be zero, which is what makes ``phi`` total in ``v``.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "binom",
    "phi",
    "phi_formula",
    "phi_edges_surplus_form",
    "excess",
    "vertex_removal_identity_residual",
    "pascal_telescope_residual",
    "gap_identity_residual",
    "triplex_fvector",
    "pentasm_fvector",
    "dplus2_face_count",
    "binomial_excess_2",
    "binomial_excess_2_factored",
    "binomial_excess_3",
    "binomial_excess_3_factored",
    "binomial_excess_3_cubic",
    "above_alpha",
    "above_beta",
    "meets_062",
    "meets_06_small",
    "meets_055",
    "meets_05_small",
    "euler_characteristic",
    "is_prime",
]


def binom(a: int, b: int) -> int:
    """C(a, b), and 0 whenever b < 0, b > a or a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def phi(m: int, v: int, d: int) -> int:
    """Grünbaum's function phi_m(v, d).

    C(d+1, m+1) + C(d, m+1) - C(2d+1-v, m+1).  With m = 1 this is the
    conjectured (and, for d < v <= 2d, proven) minimum edge count.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got d={d}")
    if v < d + 1:
        raise ValueError(f"need v >= d+1, got v={v}, d={d}")
    if not 0 <= m <= d - 1:
        raise ValueError(f"face dimension must satisfy 0 <= m <= d-1, got m={m}, d={d}")
    return binom(d + 1, m + 1) + binom(d, m + 1) - binom(2 * d + 1 - v, m + 1)


def phi_edges_surplus_form(d: int, k: int) -> int:
    """phi(d+k, d) written as d(d+k)/2 + (k-1)(d-k)/2."""
    if not 1 <= k <= d:
        raise ValueError(f"surplus k must lie in [1, d], got k={k}, d={d}")
    twice = d * (d + k) + (k - 1) * (d - k)
    return twice // 2


def excess(e: int, v: int, d: int) -> int:
    """Excess degree 2e - dv.  Nonnegative for every actual d-polytope."""
    return 2 * e - d * v


def vertex_removal_identity_residual(d: int, k: int, n: int) -> int:
    """LHS - RHS of phi(d+k-n, d-1) + nd - C(n,2) = phi(d+k, d) + (k-n)(n-2).

    Zero for 1 <= n <= k <= d.  ``phi`` is evaluated from the binomial
    definition, so the check is a real identity rather than a tautology.
    """
    lhs = phi_formula(1, d + k - n, d - 1) + n * d - binom(n, 2)
    rhs = phi_formula(1, d + k, d) + (k - n) * (n - 2)
    return lhs - rhs


def phi_formula(m: int, v: int, d: int) -> int:
    """``phi`` without domain checks, for identities evaluated at the edge
    of the domain (d = 1, or v past 2d+1)."""
    return binom(d + 1, m + 1) + binom(d, m + 1) - binom(2 * d + 1 - v, m + 1)


def pascal_telescope_residual(d: int, p: int, n: int) -> int:
    """sum_{j=1..p} C(d-j, n) - (C(d, n+1) - C(d-p, n+1))."""
    total = sum(binom(d - j, n) for j in range(1, p + 1))
    return total - (binom(d, n + 1) - binom(d - p, n + 1))


def gap_identity_residual(d: int, n: int) -> int:
    """phi(d+n+1, d) - (C(d+n, 2) + d - n^2), zero whenever d+n+1 <= 2d+1."""
    return phi_formula(1, d + n + 1, d) - (binom(d + n, 2) + d - n * n)


def triplex_fvector(d: int, k: int) -> list[int]:
    """f-vector of M_{k,d-k}, the (d-k)-fold pyramid over the k-prism."""
    if not 1 <= k <= d:
        raise ValueError(f"surplus k must lie in [1, d], got k={k}, d={d}")
    return [phi(m, d + k, d) for m in range(d)]


def pentasm_fvector(d: int) -> list[int]:
    if d < 3:
        raise ValueError(f"pentasm needs d >= 3, got d={d}")
    f = [2 * d + 1]
    f.extend(binom(d + 1, m + 1) + binom(d, m + 1) + binom(d - 1, m) for m in range(1, d))
    return f


def dplus2_face_count(r: int, s: int, t: int, m: int) -> int:
    """Number of m-faces of the t-fold pyramid over Delta_{r,s} (d = r+s+t).

    These are exactly the d-polytopes with d+2 facets.
    """
    if r < 1 or s < 1:
        raise ValueError(f"need r, s >= 1, got r={r}, s={s}")
    if t < 0:
        raise ValueError(f"need t >= 0, got t={t}")
    d = r + s + t
    return (binom(d + 2, m + 2) - binom(s + t + 1, m + 2)
            - binom(r + t + 1, m + 2) + binom(t + 1, m + 2))


def binomial_excess_2(d: int, m: int) -> int:
    if not d >= m >= 2:
        raise ValueError(f"need d >= m >= 2, got d={d}, m={m}")
    return binom(d, m) - binom(d, m + 1) - binom(d - 2, m - 2)


def binomial_excess_2_factored(d: int, m: int) -> Fraction:
    """Factored form (m^2 + dm - (d-1)^2) / ((m+1)m) * C(d-2, m-1)."""
    if not d >= m >= 2:
        raise ValueError(f"need d >= m >= 2, got d={d}, m={m}")
    return Fraction(m * m + d * m - (d - 1) ** 2, (m + 1) * m) * binom(d - 2, m - 1)


def binomial_excess_3_cubic(m: int, d: int) -> int:
    """p(m, d) = m^3 + (d-2)m^2 + (d^2-2d-1)m - (d^3-4d^2+5d-2)."""
    return m ** 3 + (d - 2) * m ** 2 + (d * d - 2 * d - 1) * m - (d ** 3 - 4 * d * d + 5 * d - 2)


def binomial_excess_3(d: int, m: int) -> int:
    if not d >= m >= 3:
        raise ValueError(f"need d >= m >= 3, got d={d}, m={m}")
    return binom(d, m) - binom(d, m + 1) - binom(d - 3, m - 3)


def binomial_excess_3_factored(d: int, m: int) -> Fraction:
    if not d >= m >= 3:
        raise ValueError(f"need d >= m >= 3, got d={d}, m={m}")
    return Fraction(binomial_excess_3_cubic(m, d), (m + 1) * m * (m - 1)) * binom(d - 3, m - 2)


# alpha = (sqrt5 - 1)/2 solves x^2 + x = 1, beta solves x^3 + x^2 + x = 1;
# m >= alpha*d and m >= beta*d reduce to the integer tests below.

def above_alpha(m: int, d: int) -> bool:
    return m * m + m * d >= d * d


def above_beta(m: int, d: int) -> bool:
    return m ** 3 + m * m * d + m * d * d >= d ** 3


def meets_062(m: int, d: int) -> bool:
    """Decimal threshold m >= 0.62 d."""
    return 100 * m >= 62 * d


def meets_06_small(m: int, d: int) -> bool:
    """m >= 0.6 (d-1) with d <= 15."""
    return d <= 15 and 5 * m >= 3 * (d - 1)


def meets_055(m: int, d: int) -> bool:
    return 100 * m >= 55 * d


def meets_05_small(m: int, d: int) -> bool:
    """m >= d/2 with d <= 17."""
    return d <= 17 and 2 * m >= d


def euler_characteristic(fvector) -> int:
    """Alternating sum f_0 - f_1 + ...; equals 1 - (-1)^d for a d-polytope."""
    return sum((-1) ** i * f for i, f in enumerate(fvector))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True
