import pytest
from hypothesis import given, strategies as st

from polygap.constructions import FamilyTag as T, catalogue, construct, cyclic, delta_sum, pentasm, prism, sigma3, simplex, stacked
from polygap.isomorphism import (IsomorphismSizeError, are_isomorphic, canonical_form, facet_census,
                                 find_isomorphism)

TAGS = catalogue(6, 11)


@given(st.sampled_from(TAGS), st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(tag, rnd):
    P = construct(tag)
    perm = list(range(P.nverts))
    rnd.shuffle(perm)
    assert canonical_form(P.relabel(perm)) == canonical_form(P)


@given(st.sampled_from(TAGS), st.randoms(use_true_random=False))
def test_find_isomorphism_maps_facets(tag, rnd):
    P = construct(tag)
    perm = list(range(P.nverts))
    rnd.shuffle(perm)
    Q = P.relabel(perm)
    iso = find_isomorphism(P, Q)
    assert iso is not None
    assert P.relabel(iso) == Q


def test_equal_forms_have_equal_invariants():
    seen = {}
    for tag in TAGS:
        P = construct(tag)
        key = canonical_form(P)
        inv = (P.dim, P.nverts, sorted(map(len, P.facets)))
        assert seen.setdefault(key, inv) == inv


@pytest.mark.parametrize("a, b", [
    (pentasm(3), sigma3()),
    (cyclic(4, 8), stacked(4, 8)),
    (prism(4), delta_sum(2, 2)),
    (pentasm(4), delta_sum(2, 2)),
])
def test_non_isomorphic(a, b):
    assert not are_isomorphic(a, b)
    assert find_isomorphism(a, b) is None


@pytest.mark.parametrize("a, b", [
    (prism(5), delta_sum(1, 4)),
    (construct(T("Triplex", (1, 4))), simplex(5)),
    (cyclic(4, 5), simplex(4)),
])
def test_isomorphic(a, b):
    assert are_isomorphic(a, b)


def test_size_limit():
    with pytest.raises(IsomorphismSizeError):
        canonical_form(cyclic(4, 30))


def test_pentasm_census():
    census = facet_census(pentasm(5))
    counts = sorted((rep.nverts, n) for rep, n in census)
    assert counts == [(5, 3), (8, 2), (9, 3)]
    reps = {rep.nverts: rep for rep, _ in census}
    assert are_isomorphic(reps[9], pentasm(4))
    assert are_isomorphic(reps[8], prism(4))


def test_symmetric_polytopes_are_fast():
    import time
    t = time.perf_counter()
    P = simplex(8)
    Q = P.relabel(list(reversed(range(9))))
    assert are_isomorphic(P, Q)
    assert are_isomorphic(delta_sum(3, 3), delta_sum(3, 3).relabel(list(range(15, -1, -1))))
    assert time.perf_counter() - t < 5
