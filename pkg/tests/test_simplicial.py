import itertools

import pytest
from hypothesis import given, settings, strategies as st

from catalan_sset.simplicial import (
    NotCoskeletal,
    SimplicialError,
    SimplicialMap,
    TruncatedSimplicialSet,
    boundary_is_compatible,
    boundary_of,
    check_coskeletal,
    check_simplicial_map,
    compatible_boundaries,
    coskeletal_extend,
    enumerate_maps,
    find_isomorphism,
    identity_map,
    is_coskeletal,
    is_degenerate,
    nondegenerate,
    point,
    standard_simplex,
    to_dot,
    validate,
)


def brute_compatible(X, n):
    """Every (n+1)-tuple of (n-1)-simplices satisfying d_j x_i = d_i x_{j+1}."""
    out = []
    for xs in itertools.product(X.simplices(n - 1), repeat=n + 1):
        if all(X.d(n - 1, j, xs[i]) == X.d(n - 1, i, xs[j + 1]) for i in range(n) for j in range(i, n)):
            out.append(xs)
    return out


def with_face(X, n, i, x, value):
    faces = [list(map(list, lvl)) for lvl in X.faces]
    faces[n][i][x] = value
    return TruncatedSimplicialSet(X.max_dim, X.sizes, tuple(tuple(map(tuple, lvl)) for lvl in faces),
                                  X.degeneracies, X.labels)


def test_standard_simplex_validates():
    for k in range(4):
        assert validate(standard_simplex(k, 3)) == []


def test_catalan_validates(C4):
    assert validate(C4) == []


def test_corrupted_face_reports_mention_entry(C4):
    x = C4.find_label(3, "a")
    bad = with_face(C4, 3, 0, x, C4.find_label(2, "i"))
    reports = validate(bad)
    assert reports
    assert all(r.mentions("d", 3, 0, x) for r in reports)


def test_corrupted_degeneracy_breaks_injectivity(C2):
    degs = [list(map(list, lvl)) for lvl in C2.degeneracies]
    degs[1][0][1] = degs[1][0][0]
    bad = TruncatedSimplicialSet(C2.max_dim, C2.sizes, C2.faces, tuple(tuple(map(tuple, l)) for l in degs), C2.labels)
    reports = validate(bad)
    assert any(r.identity == "s_j injective" for r in reports)
    assert all(r.mentions("s", 1, 0, 1) or r.mentions("s", 1, 0, 0) for r in reports)


def test_is_degenerate_examples(C4):
    assert is_degenerate(C4, 1, C4.find_label(1, "s0(⋆)"))
    assert not is_degenerate(C4, 1, C4.find_label(1, "c"))
    assert not is_degenerate(C4, 3, C4.find_label(3, "a"))
    with pytest.raises(SimplicialError):
        is_degenerate(C4, 1, 99)


def labels_of(X, n, b):
    return tuple(X.label(n - 1, y) for y in b.tuple)


def test_boundary_examples(C4):
    assert labels_of(C4, 2, boundary_of(C4, 2, C4.find_label(2, "s0(c)"))) == ("c", "c", "s0(⋆)")
    assert labels_of(C4, 3, boundary_of(C4, 3, C4.find_label(3, "a"))) == ("t", "t", "t", "t")
    # printed value is (k, r, s0s1(c), ℓ, k); see the decisions ledger
    assert labels_of(C4, 4, boundary_of(C4, 4, C4.find_label(4, "A7"))) == ("k", "ℓ", "s0s1(c)", "r", "k")


def test_compatible_boundaries_catalan_matches_brute_force(C2):
    found = [b.tuple for b in compatible_boundaries(C2, 3)]
    assert found == brute_compatible(C2, 3)
    assert len(found) == 14


def test_compatible_boundaries_point():
    P = point(3)
    for n in range(1, 4):
        assert len(compatible_boundaries(P, n)) == 1


def test_compatible_boundaries_delta1():
    D1 = standard_simplex(1, 1)
    found = [b.tuple for b in compatible_boundaries(D1, 2)]
    assert found == brute_compatible(D1, 2)
    assert len(found) == 4


def test_compatible_boundaries_sorted(C4):
    tuples = [b.tuple for b in compatible_boundaries(C4, 4)]
    assert tuples == sorted(tuples)


def test_coskeletal_extend_examples(C2):
    assert coskeletal_extend(C2, 2, 4).sizes == (1, 2, 5, 14, 42)
    assert coskeletal_extend(point(0), 0, 5).sizes == (1,) * 6
    assert coskeletal_extend(C2, 2, 2) == C2


def test_coskeletal_extend_rejects_non_coskeletal(C2):
    # the compatible 2-boundary (s0(⋆), s0(⋆), c) has no filler
    with pytest.raises(NotCoskeletal) as info:
        coskeletal_extend(C2, 1, 3)
    assert info.value.n == 2 and info.value.fillers != 1


def test_coskeletal_extend_idempotent(C2):
    X = coskeletal_extend(C2, 2, 5)
    Y = coskeletal_extend(X.truncate(4), 2, 5)
    assert X.dumps() == Y.dumps()


def test_filler_bijection(C4):
    check_coskeletal(C4, 2)
    for n in (3, 4):
        bs = [b.tuple for b in compatible_boundaries(C4, n)]
        assert sorted(boundary_of(C4, n, x).tuple for x in C4.simplices(n)) == bs


def test_boundary_of_is_compatible(C4):
    for n in range(1, 5):
        for x in C4.simplices(n):
            assert boundary_is_compatible(C4, n, boundary_of(C4, n, x).tuple)


def test_degenerate_count_matches_union_of_images(C4):
    for n in range(1, 5):
        images = set()
        for j in range(n):
            images |= set(C4.degeneracies[n - 1][j])
        assert len(images) == C4.sizes[n] - len(nondegenerate(C4, n))
        # inclusion-exclusion over the s_j images
        total = 0
        for k in range(1, n + 1):
            for js in itertools.combinations(range(n), k):
                inter = set.intersection(*(set(C4.degeneracies[n - 1][j]) for j in js))
                total += (-1) ** (k + 1) * len(inter)
        assert total == len(images)


def test_identity_and_constant_maps(C4):
    assert check_simplicial_map(identity_map(C4)) == []
    # every simplex to the totally degenerate simplex on ⋆
    const = []
    y = 0
    for n in range(C4.max_dim + 1):
        const.append((y,) * C4.sizes[n])
        if n < C4.max_dim:
            y = C4.s(n, 0, y)
    assert check_simplicial_map(SimplicialMap(C4, C4, tuple(const))) == []


def test_bad_map_reports(C4):
    comps = [list(range(C4.sizes[n])) for n in range(C4.max_dim + 1)]
    comps[2][C4.find_label(2, "t")] = C4.find_label(2, "i")
    F = SimplicialMap(C4, C4, tuple(map(tuple, comps)))
    assert check_simplicial_map(F)


def test_enumerate_maps_examples(C4):
    assert len(enumerate_maps(C4, C4, 2)) == 2
    assert len(enumerate_maps(C4, point(4), 2)) == 1
    assert len(enumerate_maps(point(4), C4, 0)) == 1


def test_enumerate_maps_brute_force_catalan():
    # brute force: choose images of c and of the five 2-simplices, check all identities at dims ≤ 2
    from catalan_sset.catalan import build_catalan_direct
    X = build_catalan_direct(2)
    count = 0
    for c1 in X.simplices(1):
        for imgs in itertools.product(X.simplices(2), repeat=5):
            comps = ((0,), (X.s(0, 0, 0), c1), imgs)
            if not check_simplicial_map(SimplicialMap(X, X, comps)):
                count += 1
    assert count == len(enumerate_maps(X, X, 2)) == 2


def test_enumerate_maps_deterministic(C4, N4):
    a = [F.components for F in enumerate_maps(C4, N4, 2)]
    b = [F.components for F in enumerate_maps(C4, N4, 2)]
    assert a == b == sorted(a)
    assert len(set(a)) == len(a)
    for F in enumerate_maps(C4, N4, 2):
        assert check_simplicial_map(F) == []


def test_enumerate_maps_needs_coskeletal(C4):
    with pytest.raises(NotCoskeletal):
        enumerate_maps(C4, C4, 1)


def test_standard_simplex_is_1_coskeletal():
    assert is_coskeletal(standard_simplex(2, 4), 1)


def test_find_isomorphism_identity_first(C4):
    F = find_isomorphism(C4, C4, 2)
    assert F.components == identity_map(C4).components


def test_json_round_trip_byte_stable(C4):
    text = C4.dumps()
    again = TruncatedSimplicialSet.from_json(__import__("json").loads(text))
    assert again == C4
    assert again.dumps() == text


def test_malformed_json():
    with pytest.raises(SimplicialError):
        TruncatedSimplicialSet.from_json({"max_dim": 1})


def test_to_dot(C2):
    dot = to_dot(C2, 2)
    assert dot.startswith('digraph "level2"')
    assert dot.count("->") == 15


@settings(max_examples=25, deadline=None)
@given(k=st.integers(0, 3), N=st.integers(0, 4))
def test_standard_simplex_properties(k, N):
    X = standard_simplex(k, N)
    assert validate(X) == []
    for n in range(1, N + 1):
        assert len(compatible_boundaries(X, n)) >= X.sizes[n]


@settings(max_examples=20, deadline=None)
@given(N=st.integers(2, 5))
def test_catalan_truncations_coskeletal(N):
    from catalan_sset.catalan import build_catalan_direct
    X = build_catalan_direct(N)
    assert validate(X) == []
    assert is_coskeletal(X, 2)
