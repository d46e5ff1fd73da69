from itertools import combinations

import pytest
from hypothesis import given, settings

from macq.complexes import (
    SimplicialComplex,
    boundary_simplex,
    cone,
    dumps,
    embed,
    full_subcomplex,
    intersection,
    is_face,
    l_family,
    link,
    loads,
    relabel,
    rest,
    simplex,
    skeleton,
    star,
    union,
)
from macq.errors import InvalidParameter

from conftest import complex_and_vertex, complexes

SQUARE_DIAGONAL = SimplicialComplex(4, [[1, 2], [2, 4], [3, 4], [1, 3], [1, 4]])


def facets(K):
    return {frozenset(f) for f in K.facets}


def face_set(K):
    return set(K.faces())


def brute_faces(K):
    """Faces by testing every subset of [m] against the facets."""
    out = set()
    for r in range(K.ambient + 1):
        for f in combinations(range(1, K.ambient + 1), r):
            if any(set(f) <= set(g) for g in K.facets) or not f:
                out.add(f)
    return out


# ------------------------------------------------------------------ skeleta


def test_skeleton_examples():
    assert facets(skeleton(3, 1)) == {frozenset(s) for s in ({1, 2}, {1, 3}, {2, 3})}
    assert facets(skeleton(4, 3)) == {frozenset({1, 2, 3, 4})}
    assert facets(skeleton(4, 0)) == {frozenset({v}) for v in range(1, 5)}


def test_skeleton_minus_one_is_empty_face_only():
    K = skeleton(3, -1)
    assert K.facets == frozenset()
    assert list(K.faces()) == [()]
    assert K.ghosts == (1, 2, 3)


@pytest.mark.parametrize("m,k", [(3, -2), (3, 3), (0, 0), (2, 5)])
def test_skeleton_range(m, k):
    with pytest.raises(InvalidParameter):
        skeleton(m, k)


def test_non_maximal_facets_dropped():
    K = SimplicialComplex(3, [[1], [1, 2], [2], [1, 2, 3], [3]])
    assert facets(K) == {frozenset({1, 2, 3})}


def test_facet_out_of_range():
    with pytest.raises(InvalidParameter):
        SimplicialComplex(3, [[1, 4]])
    with pytest.raises(InvalidParameter):
        SimplicialComplex(3, [[0, 1]])


def test_immutable():
    K = skeleton(3, 1)
    with pytest.raises(AttributeError):
        K.ambient = 5


# ------------------------------------------------------------------ is_face


def test_is_face_examples():
    assert is_face(skeleton(3, 1), {1, 2})
    assert not is_face(skeleton(3, 1), {1, 2, 3})
    assert is_face(SimplicialComplex(3, []), ())
    assert is_face(SQUARE_DIAGONAL, [])
    assert (1, 2) in SQUARE_DIAGONAL


def test_is_face_range():
    with pytest.raises(InvalidParameter):
        is_face(skeleton(3, 1), {4})


# ------------------------------------------------------- link / star / rest


def test_link_examples():
    assert relabel(link(skeleton(4, 1), 1), [2, 3, 4]) == skeleton(3, 0)
    assert facets(link(SQUARE_DIAGONAL, 2)) == {frozenset({1}), frozenset({4})}
    isolated = SimplicialComplex(3, [[1, 2], [3]])
    assert link(isolated, 3).facets == frozenset()


def test_link_keeps_ambient_and_makes_ghost():
    L = link(SQUARE_DIAGONAL, 2)
    assert L.ambient == 4
    assert 2 in L.ghosts


def test_star_rest_examples():
    assert facets(star(skeleton(4, 1), 1)) == {frozenset({1, v}) for v in (2, 3, 4)}
    assert relabel(rest(skeleton(4, 1), 1), [2, 3, 4]) == skeleton(3, 1)


def test_star_of_ghost_is_empty_face():
    K = SimplicialComplex(3, [[1, 2]])
    assert star(K, 3).facets == frozenset()


def test_link_range():
    with pytest.raises(InvalidParameter):
        link(skeleton(3, 1), 0)
    with pytest.raises(InvalidParameter):
        rest(skeleton(3, 1), 4)


@settings(max_examples=150, deadline=None)
@given(complex_and_vertex())
def test_star_rest_pushout(Kv):
    K, v = Kv
    S, R, L = star(K, v), rest(K, v), link(K, v)
    assert face_set(union(S, R)) == face_set(K)
    assert face_set(intersection(S, R)) == face_set(L)


@settings(max_examples=150, deadline=None)
@given(complex_and_vertex())
def test_link_matches_definition(Kv):
    K, v = Kv
    expected = {f for f in face_set(K) if v not in f and tuple(sorted(f + (v,))) in face_set(K)}
    # for a ghost v the set above is empty; complexes always contain ∅
    assert face_set(link(K, v)) == (expected or {()})


# ------------------------------------------------------- full subcomplexes


def test_full_subcomplex_examples():
    K = full_subcomplex(skeleton(4, 1), {1, 2, 3})
    assert relabel(K, [1, 2, 3]) == skeleton(3, 1)
    assert full_subcomplex(SQUARE_DIAGONAL, ()).facets == frozenset()


def test_full_subcomplex_of_lfamily():
    # dropping vertex 1 from L(1,4,k) leaves L(1,3,k) on {2,3,4}
    for k in (0, 1):
        K = full_subcomplex(l_family(1, 4, k), {2, 3, 4})
        assert relabel(K, [2, 3, 4]) == l_family(1, 3, k)


# ------------------------------------------------- union / cone / boundary


def test_union_intersection_examples():
    assert union(skeleton(4, 1), simplex([1, 2, 3], 4)) == l_family(1, 4, 1)
    assert intersection(simplex([1, 2, 3], 4), simplex([1, 2, 4], 4)) == simplex([1, 2], 4)
    assert facets(boundary_simplex({1, 2, 3})) == facets(skeleton(3, 1))


def test_union_needs_same_ambient():
    with pytest.raises(InvalidParameter):
        union(skeleton(3, 1), skeleton(4, 1))
    with pytest.raises(InvalidParameter):
        intersection(skeleton(3, 1), skeleton(4, 1))


def test_cone():
    K = embed(skeleton(3, 0), 4)
    C = cone(K, 4)
    assert facets(C) == {frozenset({v, 4}) for v in (1, 2, 3)}
    assert cone(SimplicialComplex(2, []), 2) == simplex([2], 2)
    with pytest.raises(InvalidParameter):
        cone(skeleton(3, 0), 1)


def test_boundary_simplex_edge_cases():
    assert boundary_simplex({1}).facets == frozenset()
    assert boundary_simplex({2, 5}, ambient=6) == SimplicialComplex(6, [[2], [5]])


# ------------------------------------------------------------------ relabel


def test_relabel_default_drops_ghosts():
    K = SimplicialComplex(5, [[2, 4], [4, 5]])
    assert relabel(K) == SimplicialComplex(3, [[1, 2], [2, 3]])


def test_relabel_rejects_used_vertex():
    with pytest.raises(InvalidParameter):
        relabel(SimplicialComplex(3, [[1, 2]]), [1, 3])


# ----------------------------------------------------------------- L-family


def test_lfamily_examples():
    assert l_family(0, 5, 2) == skeleton(5, 2)
    assert facets(l_family(2, 4, 0)) == {frozenset({1, 2, 3}), frozenset({1, 2, 4})}
    assert facets(l_family(3, 4, 1)) == {frozenset(s) for s in ({1, 2, 3}, {1, 2, 4}, {1, 3, 4})}


@pytest.mark.parametrize("j,m,k", [(-1, 4, 1), (4, 4, 1), (1, 3, 2), (0, 1, 0)])
def test_lfamily_range(j, m, k):
    with pytest.raises(InvalidParameter):
        l_family(j, m, k)


def lfamily_params(max_m=7):
    for m in range(2, max_m + 1):
        for k in range(0, m - 1):
            for j in range(0, k + 3):
                yield j, m, k


def test_lfamily_link_rest_at_last_vertex():
    for j, m, k in lfamily_params():
        if not 1 <= j <= k + 1:
            continue
        L = l_family(j, m, k)
        assert relabel(rest(L, m), range(1, m)) == skeleton(m - 1, m - 2)
        if k >= 1:
            assert relabel(link(L, m), range(1, m)) == l_family(j - 1, m - 1, k - 1)


def test_lfamily_link_rest_at_first_vertex():
    for j, m, k in lfamily_params():
        if not 1 <= j <= k + 1:
            continue
        L = l_family(j, m, k)
        if k >= 1:
            assert relabel(link(L, 1), range(2, m + 1)) == l_family(j, m - 1, k - 1)
        if k + 2 <= m - 1:
            assert relabel(rest(L, 1), range(2, m + 1)) == l_family(j, m - 1, k)


def test_lfamily_monotone():
    for j, m, k in lfamily_params():
        if j >= 1:
            assert face_set(l_family(j - 1, m, k)) <= face_set(l_family(j, m, k))


# ------------------------------------------------------ structural invariants


def is_antichain(K):
    fs = list(K.facets)
    return all(not (set(a) < set(b)) for a in fs for b in fs) and () not in K.facets


@settings(max_examples=150, deadline=None)
@given(complex_and_vertex())
def test_operations_keep_antichain_and_closure(Kv):
    K, v = Kv
    W = [u for u in range(1, K.ambient + 1) if u % 2 == v % 2]
    results = [link(K, v), star(K, v), rest(K, v), full_subcomplex(K, W), union(K, star(K, v))]
    results.append(intersection(K, rest(K, v)))
    for R in results:
        assert is_antichain(R)
        assert face_set(R) == brute_faces(R)


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_faces_enumeration_unique_and_closed(K):
    fs = list(K.faces())
    assert len(fs) == len(set(fs))
    assert set(fs) == brute_faces(K)


@settings(max_examples=100, deadline=None)
@given(complexes(min_m=0))
def test_json_round_trip(K):
    assert loads(dumps(K)) == K
    assert SimplicialComplex.from_dict(K.to_dict()) == K


@pytest.mark.parametrize(
    "text",
    ["not json", "[1,2]", '{"facets": []}', '{"ambient": "3", "facets": []}', '{"ambient": 3, "facets": [["a"]]}'],
)
def test_loads_rejects_malformed(text):
    with pytest.raises(InvalidParameter):
        loads(text)
