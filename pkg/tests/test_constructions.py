import pytest
from hypothesis import given, strategies as st

from polygap.bounds import witness_candidates
from polygap.combinatorics import binom, dplus2_face_count, pentasm_fvector, triplex_fvector
from polygap.constructions import (FAMILIES, FamilyTag as T, catalogue, construct, cyclic, delta_sum,
                                   edge_count_formula, parse_tag, pentasm, prism, pyramid, sigma3, simplex,
                                   stack_on, stacked, triplex)
from polygap.isomorphism import are_isomorphic, facet_census
from polygap.lattice import enumerate_lattice, is_simple

TAGS = catalogue(7, 12)


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_formula_matches_lattice(tag):
    P = construct(tag)
    d, v, e = edge_count_formula(tag)
    assert (P.dim, P.nverts) == (d, v)
    assert len(enumerate_lattice(P).edges) == e


@pytest.mark.parametrize("d", range(2, 7))
def test_witness_candidate_formulas(d):
    for v in range(d + 1, 2 * d + 4):
        for tag in witness_candidates(d, v):
            P = construct(tag)
            assert (P.dim, P.nverts, len(enumerate_lattice(P).edges)) == edge_count_formula(tag), tag


@pytest.mark.parametrize("tag", TAGS, ids=str)
def test_tag_string_round_trip(tag):
    assert parse_tag(str(tag)) == tag


def test_tag_parsing_is_forgiving_about_case():
    assert parse_tag("deltasum(2,3)") == T("DeltaSum", (2, 3))
    assert parse_tag("delta-sum(2,3)") == T("DeltaSum", (2, 3))
    assert parse_tag(" sigma3 ") == T("Sigma3")


@pytest.mark.parametrize("text", ["Hypercube(3)", "Prism(3", "Prism(a)", "Pyramid(1)"])
def test_tag_parsing_errors(text):
    with pytest.raises(ValueError):
        parse_tag(text)


def test_tag_serialisation():
    tag = T("Pyramid", (2,), T("Pentasm", (3,)))
    assert tag.to_dict() == {"name": "Pyramid", "params": [2], "base": {"name": "Pentasm", "params": [3]}}
    assert tag.dim == 5
    assert str(tag) == "Pyramid(2;Pentasm(3))"


@pytest.mark.parametrize("d", range(3, 8))
def test_pentasm(d):
    P = pentasm(d)
    L = enumerate_lattice(P)
    assert list(L.f_vector) == pentasm_fvector(d)
    assert len(L.edges) == d * d + d - 1


@pytest.mark.parametrize("d", range(4, 8))
def test_pentasm_facet_types(d):
    census = {rep.nverts: (rep, n) for rep, n in facet_census(pentasm(d))}
    assert set(census) == {d, 2 * d - 2, 2 * d - 1}
    assert census[2 * d - 1][1] == d - 2 and are_isomorphic(census[2 * d - 1][0], pentasm(d - 1))
    assert census[2 * d - 2][1] == 2 and are_isomorphic(census[2 * d - 2][0], prism(d - 1))
    assert census[d][1] == 3 and are_isomorphic(census[d][0], simplex(d - 1))


def test_sigma3():
    P = sigma3()
    assert enumerate_lattice(P).f_vector == (7, 11, 6)
    sizes = sorted(map(len, P.facets))
    assert sizes == [3, 3, 4, 4, 4, 4]
    assert not are_isomorphic(P, pentasm(3))


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2))
def test_dplus2_polytopes(r, s, t):
    P = pyramid_fold(delta_sum(r, s), t)
    f = enumerate_lattice(P).f_vector
    assert list(f) == [dplus2_face_count(r, s, t, m) for m in range(r + s + t)]
    assert len(P.facets) == r + s + t + 2


def pyramid_fold(P, t):
    for _ in range(t):
        P = pyramid(P)
    return P


@given(st.integers(1, 5), st.integers(1, 5))
def test_delta_sum_is_simple(r, s):
    assert is_simple(delta_sum(r, s))


@pytest.mark.parametrize("d", range(2, 8))
def test_triplex_closed_form(d):
    for k in range(1, d + 1):
        assert list(enumerate_lattice(triplex(k, d - k)).f_vector) == triplex_fvector(d, k)


def test_prism_is_triplex_and_delta_sum():
    for d in range(2, 7):
        assert are_isomorphic(prism(d), triplex(d, 0))
        assert are_isomorphic(prism(d), delta_sum(1, d - 1))


def test_cyclic_gale_evenness_facet_count():
    # even d: C(v - d/2, d/2) * v / (v - d/2)
    for d in (4, 6):
        for v in range(d + 2, 13):
            h = d // 2
            assert len(cyclic(d, v).facets) == binom(v - h, h) * v // (v - h)


def test_stack_on_needs_simplex_facet_and_dimension():
    with pytest.raises(ValueError, match="simplex facet"):
        stack_on(delta_sum(2, 2))
    with pytest.raises(ValueError, match="d >= 3"):
        stack_on(simplex(2))


def test_stacking_adds_d_edges():
    P = triplex(2, 2)
    Q = stack_on(P, 1)
    assert len(enumerate_lattice(Q).edges) == len(enumerate_lattice(P).edges) + 4


@pytest.mark.parametrize("bad", [lambda: simplex(0), lambda: prism(1), lambda: triplex(0, 2),
                                 lambda: pentasm(2), lambda: delta_sum(0, 2), lambda: cyclic(3, 3),
                                 lambda: stacked(2, 5), lambda: T("Cube", (3,)), lambda: T("Pyramid", (1,)),
                                 lambda: construct(T("Sigma3", (1,)))])
def test_constructor_errors(bad):
    with pytest.raises(ValueError):
        bad()


def test_catalogue_contents():
    names = {t.name for t in TAGS}
    assert names == set(FAMILIES)
    assert all(construct(t).dim <= 7 for t in TAGS)
