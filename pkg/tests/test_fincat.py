import itertools

import pytest
from hypothesis import given, settings, strategies as st

from catalan_sset.fincat import (
    FinCategory,
    FinFunctor,
    FinNatTrans,
    ShapeError,
    associator,
    associator_inv,
    check_category,
    check_functor,
    check_nattrans,
    compose_functors,
    enumerate_functors,
    enumerate_nattrans,
    hcompose,
    identity_functor,
    identity_nattrans,
    left_unitor,
    left_unitor_inv,
    make_category,
    nattrans_equal,
    pairing,
    product,
    product_functor,
    product_nattrans,
    projection_left,
    projection_right,
    right_unitor,
    right_unitor_inv,
    terminal_category,
    vcompose,
    whisker_left,
    whisker_right,
)
from catalan_sset.fixtures import arrow_with_retraction, chain_category, skew_fixture_categories, walking_idempotent


def all_functors(B, C):
    out = []
    for obj in itertools.product(range(C.n_objects), repeat=B.n_objects):
        for mor in enumerate_functors(B, C, obj):
            out.append(FinFunctor(B, C, obj, mor))
    return out


def all_cells(F, G):
    return [FinNatTrans(F, G, comps) for comps in enumerate_nattrans(F, G)]


def brute_nattrans(F, G):
    C, D = F.source, F.target
    out = []
    for comps in itertools.product(*(D.hom(F.obj[x], G.obj[x]) for x in range(C.n_objects))):
        if not check_nattrans(FinNatTrans(F, G, comps)):
            out.append(comps)
    return out


@pytest.mark.parametrize("name", sorted(skew_fixture_categories()))
def test_fixture_categories_valid(name):
    assert check_category(skew_fixture_categories()[name]) == []


def test_terminal_and_identity_cells():
    T = terminal_category()
    assert check_category(T) == []
    C = arrow_with_retraction()
    for F in all_functors(C, C):
        assert check_nattrans(identity_nattrans(F)) == []


def test_broken_composition_reported():
    C = chain_category(3)
    comp = dict(C._comp)
    f01, f12 = C.arrow("0≤1"), C.arrow("1≤2")
    comp[(f12, f01)] = C.arrow("0≤1")
    bad = FinCategory("bad", C.objects, C.arrows, C.dom, C.cod, C.ident, comp)
    reports = check_category(bad)
    assert reports and "1≤2" in reports[0] and "0≤1" in reports[0]


def test_broken_associativity_reported():
    # monoid {1, a, b} with a∘a = b, a∘b = a, b∘a = b, b∘b = b: (a a) a ≠ a (a a)
    arrows = ["1", "a", "b"]
    comp = {(1, 1): 2, (1, 2): 1, (2, 1): 2, (2, 2): 2}
    bad = make_category("M", ["•"], arrows, [0, 0, 0], [0, 0, 0], [0], comp)
    reports = check_category(bad)
    assert any("associativity" in r for r in reports)


def test_product_sizes_and_projections():
    C, D = chain_category(3), walking_idempotent()
    P = product(C, D)
    assert P.n_objects == 3 and P.n_arrows == C.n_arrows * D.n_arrows
    assert check_category(P) == []
    pl, pr = projection_left(C, D), projection_right(C, D)
    assert check_functor(pl) == [] and check_functor(pr) == []


def test_pairing_universal_property():
    X, C, D = chain_category(2), chain_category(3), walking_idempotent()
    for F in all_functors(X, C)[:4]:
        for G in all_functors(X, D):
            H = pairing(F, G)
            assert check_functor(H) == []
            assert compose_functors(projection_left(C, D), H) == F
            assert compose_functors(projection_right(C, D), H) == G


def test_unitors_are_inverse_isomorphisms():
    C = arrow_with_retraction()
    one = terminal_category()
    assert left_unitor(C).source == product(one, C)
    assert left_unitor(C).source != C
    assert compose_functors(left_unitor(C), left_unitor_inv(C)) == identity_functor(C)
    assert compose_functors(left_unitor_inv(C), left_unitor(C)) == identity_functor(product(one, C))
    assert compose_functors(right_unitor(C), right_unitor_inv(C)) == identity_functor(C)
    assert compose_functors(right_unitor_inv(C), right_unitor(C)) == identity_functor(product(C, one))


def test_associator_inverse():
    A, B, C = chain_category(2), walking_idempotent(), arrow_with_retraction()
    a, ai = associator(A, B, C), associator_inv(A, B, C)
    assert check_functor(a) == [] and check_functor(ai) == []
    assert compose_functors(ai, a) == identity_functor(a.source)
    assert compose_functors(a, ai) == identity_functor(a.target)


@pytest.mark.parametrize("name", ["chain2", "idem", "retract", "iso", "vee"])
def test_enumerate_nattrans_matches_brute_force(name):
    C = skew_fixture_categories()[name]
    D = arrow_with_retraction()
    Fs = all_functors(C, D)
    for F, G in itertools.product(Fs[:6], Fs[:6]):
        assert list(enumerate_nattrans(F, G)) == brute_nattrans(F, G)


def test_enumerate_functors_matches_brute_force():
    B, C = chain_category(2), arrow_with_retraction()
    found = {(F.obj, F.mor) for F in all_functors(B, C)}
    brute = set()
    for obj in itertools.product(range(C.n_objects), repeat=B.n_objects):
        for mor in itertools.product(range(C.n_arrows), repeat=B.n_arrows):
            F = FinFunctor(B, C, obj, mor)
            if not check_functor(F):
                brute.add((obj, mor))
    assert found == brute


def cells_between(B, C, limit=5):
    Fs = all_functors(B, C)[:limit]
    return [(F, G, H) for F in Fs for G in Fs for H in Fs]


def test_interchange_law():
    B, C, D = chain_category(2), arrow_with_retraction(), arrow_with_retraction()
    checked = 0
    for F, G, H in cells_between(B, C, 4):
        for al in all_cells(F, G):
            for be in all_cells(G, H):
                for K, L, M in cells_between(C, D, 3):
                    for ga in all_cells(K, L):
                        for de in all_cells(L, M):
                            lhs = hcompose(vcompose(de, ga), vcompose(be, al))
                            rhs = vcompose(hcompose(de, be), hcompose(ga, al))
                            assert nattrans_equal(lhs, rhs)
                            checked += 1
    assert checked > 50


def test_vcompose_identity_and_whisker_components():
    B, C = chain_category(2), arrow_with_retraction()
    Fs = all_functors(B, C)
    H = all_functors(C, C)[-1]
    for F in Fs:
        for G in Fs:
            for g in all_cells(F, G):
                assert vcompose(identity_nattrans(G), g) == g
                assert vcompose(g, identity_nattrans(F)) == g
                w = whisker_left(H, g)
                assert check_nattrans(w) == []
                assert all(w.components[x] == H.mor[g.components[x]] for x in range(B.n_objects))


def test_whisker_right_components():
    B, C = chain_category(2), arrow_with_retraction()
    K = all_functors(B, C)[1]
    Fs = all_functors(C, C)[:4]
    for F in Fs:
        for G in Fs:
            for g in all_cells(F, G):
                w = whisker_right(g, K)
                assert w.components == tuple(g.components[K.obj[x]] for x in range(B.n_objects))


def test_pasting_orders_agree():
    # (γK)·(βK) == (γ·β)K and H(γ·β) == Hγ·Hβ
    B, C = chain_category(2), arrow_with_retraction()
    K = all_functors(B, C)[-1]
    H = all_functors(C, C)[-1]
    Fs = all_functors(C, C)[:4]
    for F, G, J in itertools.product(Fs, Fs, Fs):
        for be in all_cells(F, G):
            for ga in all_cells(G, J):
                assert nattrans_equal(vcompose(whisker_right(ga, K), whisker_right(be, K)),
                                      whisker_right(vcompose(ga, be), K))
                assert nattrans_equal(vcompose(whisker_left(H, ga), whisker_left(H, be)),
                                      whisker_left(H, vcompose(ga, be)))


def test_nattrans_equal_distinguishes():
    C = walking_idempotent()
    I = identity_functor(C)
    cells = all_cells(I, I)
    assert len(cells) == 2
    assert nattrans_equal(cells[0], cells[0])
    assert not nattrans_equal(cells[0], cells[1])


def test_nattrans_equal_needs_parallel():
    C = chain_category(2)
    Fs = all_functors(C, C)
    F, G = Fs[0], Fs[-1]
    with pytest.raises(ShapeError):
        nattrans_equal(identity_nattrans(F), identity_nattrans(G))


def test_vcompose_shape_mismatch():
    C = chain_category(2)
    Fs = all_functors(C, C)
    with pytest.raises(ShapeError):
        vcompose(identity_nattrans(Fs[0]), identity_nattrans(Fs[-1]))


def test_product_nattrans_natural():
    C, D = walking_idempotent(), chain_category(2)
    for g in all_cells(identity_functor(C), identity_functor(C)):
        for d in all_cells(identity_functor(D), identity_functor(D)):
            p = product_nattrans(g, d)
            assert check_nattrans(p) == []
            assert p.source == product_functor(identity_functor(C), identity_functor(D))


@pytest.mark.parametrize("name", sorted(skew_fixture_categories()))
def test_category_json_round_trip(name):
    C = skew_fixture_categories()[name]
    assert FinCategory.from_json(C.to_json()) == C


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_congruence_random(data):
    """Replacing a cell by an equal one keeps composites equal."""
    C = arrow_with_retraction()
    Fs = all_functors(C, C)
    F, G, H = (data.draw(st.sampled_from(Fs)) for _ in range(3))
    left, right = all_cells(F, G), all_cells(G, H)
    if not left or not right:
        return
    a = data.draw(st.sampled_from(left))
    b = data.draw(st.sampled_from(right))
    a2 = FinNatTrans(F, G, list(a.components))
    assert nattrans_equal(vcompose(b, a), vcompose(b, a2))
