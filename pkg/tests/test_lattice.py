import pytest
from hypothesis import given, strategies as st

from polygap import _kernel_py, lattice
from polygap.combinatorics import binom, euler_characteristic, phi
from polygap.constructions import FamilyTag as T, catalogue, construct, cyclic, delta_sum, prism, simplex, stacked, triplex
from polygap.lattice import (LatticeSizeError, NotGraded, degree_sequence, enumerate_lattice, excess_of, is_simple,
                             is_simplicial, shephard_condition)
from polygap.polytope import CombinatorialPolytope

TAGS = catalogue(7, 12)
compiled = pytest.mark.skipif(lattice._kernel_c is None, reason="compiled kernel not built")


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_euler_relation(tag):
    L = enumerate_lattice(construct(tag))
    assert euler_characteristic(L.f_vector) == 1 - (-1) ** L.dim
    assert L.euler_ok()


@compiled
@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_kernels_agree(tag):
    P = construct(tag)
    a = lattice._kernel_c.lattice_kernel(P.facet_masks, P.nverts, lattice.MAX_FACES)
    b = _kernel_py.lattice_kernel(P.facet_masks, P.nverts, lattice.MAX_FACES)
    assert (list(a[0]), list(a[1]), a[2]) == (list(b[0]), list(b[1]), b[2])


def test_pure_python_fallback(monkeypatch):
    monkeypatch.setenv("POLYGAP_PURE", "1")
    assert lattice.kernel_name() == "python"
    assert enumerate_lattice(prism(4)).f_vector == (8, 16, 14, 6)


def test_wide_polytopes_use_python_kernel():
    assert lattice.kernel_name(65) == "python"


@pytest.mark.parametrize("d", range(1, 8))
def test_triplex_fvectors(d):
    for k in range(1, d + 1):
        f = enumerate_lattice(triplex(k, d - k)).f_vector
        assert f == tuple(phi(m, d + k, d) for m in range(d))


@pytest.mark.parametrize("d", range(4, 12))
def test_cyclic_is_neighbourly(d):
    for v in range(d + 1, 13):
        assert len(enumerate_lattice(cyclic(d, v)).edges) == binom(v, 2)


@pytest.mark.parametrize("d", range(3, 7))
def test_stacked_edges(d):
    for v in range(d + 1, 13):
        assert len(enumerate_lattice(stacked(d, v)).edges) == d * v - binom(d + 1, 2)


@pytest.mark.parametrize("facets, n", [
    ([(0, 1, 3), (0, 2, 5), (0, 4), (1, 2, 3, 4), (1, 2, 5), (2, 3, 4, 5)], 6),   # not graded
    ([(0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)], 5),              # chain too long
    ([(0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3), (1, 2, 3, 4)], 5),                 # vertex lost
    ([(0, 1, 4), (0, 2, 3), (0, 2, 4), (1, 2, 3), (1, 3, 4)], 5),               # Euler fails
])
def test_non_polytopal_incidences_rejected(facets, n):
    with pytest.raises(NotGraded):
        enumerate_lattice(CombinatorialPolytope(3, n, facets))


def test_size_limit():
    with pytest.raises(LatticeSizeError):
        enumerate_lattice(cyclic(6, 12), limit=50)


def test_python_kernel_size_limit():
    P = cyclic(5, 10)
    with pytest.raises(LatticeSizeError):
        _kernel_py.lattice_kernel(P.facet_masks, P.nverts, 20)


def test_segment_and_polygon():
    assert enumerate_lattice(triplex(1, 0)).f_vector == (2,)
    assert enumerate_lattice(cyclic(2, 7)).f_vector == (7, 7)


def test_degrees_and_excess():
    P = triplex(2, 2)  # two apices over a square
    assert sorted(degree_sequence(P)) == [4, 4, 4, 4, 5, 5]
    assert excess_of(P) == 2


def test_simple_and_simplicial():
    assert is_simple(prism(5)) and is_simple(delta_sum(2, 3))
    assert not is_simple(cyclic(4, 7))
    assert is_simplicial(cyclic(4, 7)) and is_simplicial(enumerate_lattice(stacked(4, 8)))
    assert not is_simplicial(prism(3))


def test_shephard_condition():
    assert shephard_condition(prism(4))
    assert shephard_condition(delta_sum(2, 2))
    assert not shephard_condition(simplex(4))
    assert not shephard_condition(cyclic(4, 8))


@given(st.sampled_from(TAGS))
def test_facets_of_facets_are_ridges(tag):
    L = enumerate_lattice(construct(tag))
    if L.dim < 2:
        return
    for F in L.facets:
        sub = lattice.sub_polytope(L, F)
        assert sub.dim == L.dim - 1
        enumerate_lattice(sub)
    # each ridge lies in exactly two facets
    for R in L.ridges:
        assert sum(1 for F in L.facets if R & F == R) == 2


def test_faces_accessor():
    L = enumerate_lattice(simplex(3))
    assert len(L.faces(1)) == 6
    assert frozenset({0, 1}) in L.faces(1)
    assert L.edges[0] == (0, 1)
