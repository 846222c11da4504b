import itertools

import pytest

from catalan_sset.catalan import (
    NAMED_3,
    NAMED_4,
    MonoidalPoset,
    PosetError,
    build_catalan_direct,
    build_nerve_monoidal_poset,
    catalan_counts,
    chain_poset,
    named_4_reconciled,
    named_simplices,
    nerve_array,
    two_poset,
)
from catalan_sset.simplicial import boundary_is_compatible, find_isomorphism, is_degenerate, point, validate


def test_counts_examples():
    assert catalan_counts(0) == [1]
    assert catalan_counts(2) == [1, 2, 5]
    assert catalan_counts(6) == [1, 2, 5, 14, 42, 132, 429]


def test_counts_closed_form():
    from math import comb
    assert catalan_counts(10) == [comb(2 * n, n) // (n + 1) for n in range(1, 12)]


def test_direct_sizes():
    assert build_catalan_direct(2).sizes == (1, 2, 5)
    assert build_catalan_direct(4).sizes == (1, 2, 5, 14, 42)


def test_direct_low_levels(C4):
    X = C4
    lab = lambda n, x: X.label(n, x)  # noqa: E731
    faces = {lab(2, x): tuple(lab(1, X.d(2, i, x)) for i in range(3)) for x in X.simplices(2)}
    assert faces == {
        "s0s0(⋆)": ("s0(⋆)", "s0(⋆)", "s0(⋆)"),
        "s0(c)": ("c", "c", "s0(⋆)"),
        "s1(c)": ("s0(⋆)", "c", "c"),
        "t": ("c", "c", "c"),
        "i": ("s0(⋆)", "c", "s0(⋆)"),
    }
    s0star = X.find_label(1, "s0(⋆)")
    assert X.s(1, 0, s0star) == X.s(1, 1, s0star) == X.find_label(2, "s0s0(⋆)")


def test_direct_nondegenerate_3(C4):
    got = dict(named_simplices(C4, 3))
    assert got == NAMED_3


def test_direct_nondegenerate_4_reconciled(C4):
    got = dict(named_simplices(C4, 4))
    assert got == named_4_reconciled()
    assert set(got.values()) & set(NAMED_4.values()) == {NAMED_4[k] for k in ("A1", "A2", "A5")}


def brute_tuple_is_boundary(X, n, names):
    ids = tuple(X.find_label(n - 1, s) for s in names)
    return boundary_is_compatible(X, n, ids)


def test_printed_a3_is_not_a_boundary(C4):
    # d1 of x0 = r must equal d0 of x2 = s2(t)
    assert not brute_tuple_is_boundary(C4, 4, NAMED_4["A3"])
    assert C4.label(2, C4.d(3, 1, C4.find_label(3, "r"))) == "t"
    assert C4.label(2, C4.d(3, 0, C4.find_label(3, "s2(t)"))) == "s1(c)"


def test_printed_list_consistency(C4):
    ok = {k for k, v in NAMED_4.items() if brute_tuple_is_boundary(C4, 4, v)}
    assert ok == {"A1", "A2", "A5"}


def brute_nerve_count(P, n):
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    count = 0
    for vals in itertools.product(range(len(P.elements)), repeat=len(pairs)):
        A = dict(zip(pairs, vals))
        if all(P.le(P.mul(A[(j, k)], A[(i, j)]), A[(i, k)])
               for i in range(n + 1) for j in range(i + 1, n + 1) for k in range(j + 1, n + 1)):
            count += 1
    return count


def test_nerve_two_poset_brute_force():
    P = two_poset()
    X = build_nerve_monoidal_poset(P, 3)
    assert X.sizes[2] == brute_nerve_count(P, 2) == 5
    assert X.sizes[3] == brute_nerve_count(P, 3) == 14


@pytest.mark.parametrize("tensor", ["max", "add", "min"])
def test_nerve_chain3_brute_force(tensor):
    P = chain_poset(3, tensor)
    X = build_nerve_monoidal_poset(P, 3)
    assert validate(X) == []
    for n in range(4):
        assert X.sizes[n] == brute_nerve_count(P, n) if n else X.sizes[0] == 1


def test_nerve_point():
    X = build_nerve_monoidal_poset(chain_poset(1), 5)
    assert X.sizes == (1,) * 6


def test_nerve_degenerate_characterisation(N4):
    P = two_poset()
    for n in range(1, 5):
        for x in N4.simplices(n):
            A = nerve_array(N4, n, x)
            in_image = {j for j in range(n) if x in set(N4.degeneracies[n - 1][j])}
            for j in range(n):
                shape = A[(j, j + 1)] == P.unit and all(
                    A[(k, j)] == A[(k, j + 1)] for k in range(j)
                ) and all(A[(j, k)] == A[(j + 1, k)] for k in range(j + 2, n + 1))
                assert shape == (j in in_image)
            assert is_degenerate(N4, n, x) == bool(in_image)


def test_isomorphism_examples(C4, N4):
    assert find_isomorphism(C4, N4, 2) is not None
    assert find_isomorphism(C4, point(4), 2) is None


def test_isomorphism_dim6():
    X = build_catalan_direct(6)
    Y = build_nerve_monoidal_poset(two_poset(), 6)
    F = find_isomorphism(X, Y, 2)
    assert F is not None
    assert Y.label(1, F(1, X.find_label(1, "c"))) == "(⊤)"


def test_poset_json_round_trip():
    P = two_poset()
    assert MonoidalPoset.from_json(P.to_json()) == P


def test_poset_rejects_non_monotone():
    data = two_poset().to_json()
    data["tensor"] = [[1, 0], [0, 1]]
    with pytest.raises(PosetError):
        MonoidalPoset.from_json(data)
