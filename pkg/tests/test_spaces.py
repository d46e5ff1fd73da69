import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macq.errors import InvalidParameter, UnsupportedForm
from macq.spaces import (
    CP,
    Copies,
    Join,
    LeftHalfSmash,
    Point,
    PoincarePolynomial,
    Product,
    RightHalfSmash,
    Smash,
    Sphere,
    Suspension,
    Torus,
    Wedge,
    ZSkeleton,
    cofibre_type,
    disjoint_points_quotient,
    from_json,
    l_quotient_type,
    l_type,
    link_empty_quotient,
    normalize,
    quotient_type,
    reduced_poincare,
    render,
    skeleton_wedge,
    to_json,
    wedge_normal_form,
)

P = PoincarePolynomial
S = Sphere


def nf(X):
    return render(wedge_normal_form(X))


# --------------------------------------------------------- Poincaré algebra


def test_poincare_examples():
    assert reduced_poincare(Join(S(1), S(1))) == P({3: 1})
    pre = Wedge([Join(S(1), S(1)), LeftHalfSmash(S(1), S(5)), RightHalfSmash(S(5), S(1))])
    assert reduced_poincare(pre) == P({3: 1, 5: 2, 6: 2})
    assert reduced_poincare(Torus(3)) == P({1: 3, 2: 3, 3: 1})


def test_poincare_leaves():
    assert reduced_poincare(Point()) == P()
    assert reduced_poincare(CP(3)) == P({2: 1, 4: 1, 6: 1})
    assert reduced_poincare(Torus(0)) == P()
    assert reduced_poincare(Copies(0, S(4))) == P()
    assert reduced_poincare(Wedge([])) == P()
    assert reduced_poincare(Product(S(2), S(3))) == P({2: 1, 3: 1, 5: 1})
    assert reduced_poincare(Suspension(CP(2))) == P({3: 1, 5: 1})
    assert reduced_poincare(Smash(S(2), CP(2))) == P({4: 1, 6: 1})


def test_poincare_polynomial_validation():
    with pytest.raises(InvalidParameter):
        P({0: 1})
    with pytest.raises(InvalidParameter):
        P({2: -1})
    assert P({3: 0}) == P()
    assert P.from_betti({0: 1, 2: 1}) == P({2: 1})
    assert P({2: 1, 5: 3}).betti() == {0: 1, 2: 1, 5: 3}
    assert repr(P({2: 1, 5: 3})) == "t^2 + 3t^5"


@pytest.mark.parametrize("bad", [lambda: S(0), lambda: CP(0), lambda: Torus(-1), lambda: Copies(-1, S(1))])
def test_constructor_ranges(bad):
    with pytest.raises(InvalidParameter):
        bad()


# -------------------------------------------------------------- skeleton wedge


def test_skeleton_wedge_examples():
    assert render(skeleton_wedge(3, 0)) == "3S^3 v 2S^4"
    assert render(skeleton_wedge(4, 1)) == "4S^5 v 3S^6"
    for m in range(2, 9):
        assert skeleton_wedge(m, m - 2) == S(2 * m - 1)


def test_skeleton_wedge_base_cases():
    assert skeleton_wedge(4, -1) == Torus(4)
    assert skeleton_wedge(4, 3) == Point()
    with pytest.raises(InvalidParameter):
        skeleton_wedge(4, 4)
    with pytest.raises(InvalidParameter):
        skeleton_wedge(3, -2)


def test_zskeleton_expands():
    assert reduced_poincare(ZSkeleton(4, 1)) == reduced_poincare(skeleton_wedge(4, 1))


# ---------------------------------------------------------- quotient formulas


def test_quotient_type_examples():
    for m in range(2, 9):
        assert wedge_normal_form(quotient_type(m, m - 2)) == CP(m - 1)
    assert nf(quotient_type(4, 1)) == "CP^2 v 3S^5"
    assert reduced_poincare(quotient_type(4, 0)) == P({2: 1, 3: 5, 4: 3})


def test_quotient_type_range():
    for m, k in [(3, 2), (3, -1), (1, 0)]:
        with pytest.raises(InvalidParameter):
            quotient_type(m, k)


def test_shifted_torus_variant_overshoots_dimension():
    for m in range(3, 9):
        for k in range(0, m - 2):
            assert reduced_poincare(quotient_type(m, k, shifted_torus=True)).degree == m + k + 1


def test_cofibre_examples():
    # (S^1 * Z(2,0)) v (S^3 * T^1): two 5-spheres next to CP^2
    assert nf(cofibre_type(0, 3)) == "CP^2 v 2S^5"
    with pytest.raises(InvalidParameter):
        cofibre_type(-2, 3)
    with pytest.raises(InvalidParameter):
        cofibre_type(2, 3)


def test_cofibre_matches_lfamily_quotient():
    for m in range(2, 7):
        for k in range(0, m - 1):
            assert reduced_poincare(cofibre_type(k, m)) == reduced_poincare(l_quotient_type(1, m + 1, k + 1))


def test_quotient_recursion():
    for m in range(3, 7):
        for k in range(1, m - 1):
            rhs = reduced_poincare(ZSkeleton(m - 1, k)) + reduced_poincare(cofibre_type(k - 1, m - 1))
            assert reduced_poincare(quotient_type(m, k)) == rhs


def test_l_type_examples():
    assert l_type(1, 4, 1) == Join(S(1), ZSkeleton(3, 0))
    assert nf(l_type(1, 4, 1)) == "3S^5 v 2S^6"
    for m in range(2, 7):
        for k in range(0, m - 1):
            assert l_type(k + 2, m, k) == S(2 * k + 3)
            assert l_quotient_type(k + 2, m, k) == CP(k + 1)
    assert l_quotient_type(3, 4, 1) == CP(2)
    with pytest.raises(InvalidParameter):
        l_type(0, 4, 1)
    with pytest.raises(InvalidParameter):
        l_quotient_type(4, 4, 1)


def test_disjoint_points_quotient():
    assert reduced_poincare(disjoint_points_quotient(3)) == P({2: 1, 3: 2})
    for m in range(2, 8):
        assert reduced_poincare(disjoint_points_quotient(m)) == reduced_poincare(quotient_type(m, 0))
    assert wedge_normal_form(disjoint_points_quotient(2)) == S(2)
    with pytest.raises(InvalidParameter):
        disjoint_points_quotient(1)


def test_link_empty_quotient():
    for m in range(2, 7):
        assert link_empty_quotient(ZSkeleton(m - 1, 0), m) == disjoint_points_quotient(m)
    assert wedge_normal_form(link_empty_quotient(Point(), 2)) == S(2)


def test_degree_bounds():
    for m in range(2, 8):
        for k in range(0, m - 1):
            assert reduced_poincare(quotient_type(m, k)).degree == m + k
            assert reduced_poincare(skeleton_wedge(m, k)).degree == m + k + 1


# ------------------------------------------------------------- normal form


def test_wedge_normal_form_examples():
    assert nf(Join(S(1), Torus(2))) == "2S^3 v S^4"
    for n in (1, 2, 7):
        assert wedge_normal_form(S(n)) == S(n)


def test_wedge_normal_form_keeps_cp():
    assert wedge_normal_form(Wedge([CP(1), CP(3)])) == Wedge([CP(1), CP(3)])
    assert nf(Suspension(CP(1))) == "S^3"
    # ΣCP^2 is not a wedge of spheres (Sq^2 acts), T^2 is not either
    for X in (Suspension(CP(2)), Join(S(1), CP(2)), Torus(2)):
        with pytest.raises(UnsupportedForm):
            wedge_normal_form(X)


def test_wedge_normal_form_rejects_products():
    for X in (Product(S(1), S(2)), LeftHalfSmash(S(1), S(5)), Wedge([S(2), RightHalfSmash(S(1), S(1))])):
        with pytest.raises(UnsupportedForm):
            wedge_normal_form(X)


def test_normalize_identities():
    assert normalize(Torus(1)) == S(1)
    assert normalize(Torus(0)) == Point()
    assert normalize(Copies(0, S(3))) == Point()
    assert normalize(Wedge([])) == Point()
    assert normalize(Join(S(3), Point())) == Point()
    assert normalize(ZSkeleton(3, 2)) == Point()


# ----------------------------------------------------- random expression trees

leaves = st.one_of(
    st.just(Point()),
    st.builds(Sphere, st.integers(1, 5)),
    st.builds(CP, st.integers(1, 3)),
    st.builds(Torus, st.integers(0, 3)),
    st.builds(lambda mk: ZSkeleton(*mk), st.sampled_from([(2, 0), (3, 0), (3, 1), (4, 1), (3, -1)])),
)


def supported(children):
    return st.one_of(
        st.builds(lambda xs: Wedge(xs), st.lists(children, max_size=3)),
        st.builds(Join, children, children),
        st.builds(Smash, children, children),
        st.builds(Suspension, children),
        st.builds(Copies, st.integers(0, 3), children),
    )


supported_exprs = st.recursive(leaves, supported, max_leaves=6)


def anything(children):
    return st.one_of(
        supported(children),
        st.builds(Product, children, children),
        st.builds(LeftHalfSmash, children, children),
        st.builds(RightHalfSmash, children, children),
    )


all_exprs = st.recursive(leaves, anything, max_leaves=6)


def check_atoms(N):
    atoms = N.parts if isinstance(N, Wedge) else (N,)
    for a in atoms:
        inner = a.inner if isinstance(a, Copies) else a
        assert isinstance(inner, (Sphere, CP, Point))


def has_unsplittable_leaf(X):
    if isinstance(X, Torus):
        return X.b >= 2
    if isinstance(X, CP):
        return X.n >= 2
    if isinstance(X, ZSkeleton):
        return X.k == -1 and X.m >= 2
    kids = [getattr(X, f) for f in ("left", "right", "inner") if hasattr(X, f)]
    kids += list(getattr(X, "parts", ()))
    return any(has_unsplittable_leaf(c) for c in kids)


@settings(max_examples=300, deadline=None)
@given(supported_exprs)
def test_normal_form_preserves_poincare(X):
    try:
        N = wedge_normal_form(X)
    except UnsupportedForm:
        # only an unsuspended torus or a suspended CP^n (n >= 2) can block splitting
        assert has_unsplittable_leaf(X)
        return
    assert reduced_poincare(N) == reduced_poincare(X)
    check_atoms(N)


sphere_leaves = st.one_of(
    st.builds(Sphere, st.integers(1, 5)),
    st.builds(lambda mk: ZSkeleton(*mk), st.sampled_from([(2, 0), (3, 0), (4, 1), (4, 2)])),
    st.builds(lambda a, b: Join(Sphere(a), Torus(b)), st.integers(1, 4), st.integers(0, 4)),
    st.builds(lambda b: Suspension(Torus(b)), st.integers(0, 4)),
)


@settings(max_examples=300, deadline=None)
@given(st.recursive(sphere_leaves, supported, max_leaves=6), st.lists(st.builds(CP, st.integers(1, 4)), max_size=2))
def test_sphere_built_expressions_always_split(X, cps):
    X = Wedge([X, *cps])
    N = wedge_normal_form(X)
    assert reduced_poincare(N) == reduced_poincare(X)
    check_atoms(N)


@settings(max_examples=300, deadline=None)
@given(all_exprs)
def test_normalize_preserves_poincare(X):
    assert reduced_poincare(normalize(X)) == reduced_poincare(X)


@settings(max_examples=200, deadline=None)
@given(leaves, leaves)
def test_half_smash_suspension_identity(X, Y):
    lhs = reduced_poincare(Suspension(LeftHalfSmash(X, Y)))
    rhs = reduced_poincare(Wedge([Suspension(Y), Suspension(Smash(X, Y))]))
    assert lhs == rhs
    assert reduced_poincare(RightHalfSmash(X, Y)) == reduced_poincare(LeftHalfSmash(Y, X))


@settings(max_examples=200, deadline=None)
@given(all_exprs)
def test_json_round_trip(X):
    assert from_json(to_json(X)) == X


def test_render_symbols():
    assert render(Product(S(1), S(2))) == "S^1 x S^2"
    assert render(LeftHalfSmash(S(1), S(5))) == "S^1 |x S^5"
    assert render(RightHalfSmash(S(5), S(1))) == "S^5 x| S^1"
    assert render(Smash(S(1), Torus(2))) == "S^1 ^ T^2"
    assert render(ZSkeleton(3, 0)) == "Z(3,0)"
    assert render(Point()) == "pt"
