"""Finite truncated simplicial sets.

Simplices are dense integers per level.  ``faces[n][i][x]`` is the id of
``d_i(x)`` for ``x`` in level ``n`` and ``degeneracies[n][i][x]`` is the id
of ``s_i(x)`` in level ``n + 1``.  Labels are a side table keyed by
``(n, x)`` and play no role in any computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Mapping, Sequence


class SimplicialError(ValueError):
    pass


class NotCoskeletal(SimplicialError):
    def __init__(self, n: int, boundary: tuple[int, ...], fillers: int):
        self.n = n
        self.boundary = boundary
        self.fillers = fillers
        super().__init__(
            f"{n}-boundary {boundary} has {fillers} fillers (expected exactly 1)"
        )


@dataclass(frozen=True)
class Violation:
    """One failed simplicial identity.

    ``entries`` records every table entry consulted while evaluating the
    identity, as ``("d" | "s", n, i, x)``.
    """

    identity: str
    n: int
    indices: tuple[int, ...]
    simplex: int
    detail: str
    entries: frozenset = frozenset()

    def mentions(self, kind: str, n: int, i: int, x: int) -> bool:
        return (kind, n, i, x) in self.entries

    def __str__(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.identity}[{idx}] at level {self.n}, simplex {self.simplex}: {self.detail}"


@dataclass(frozen=True)
class TruncatedSimplicialSet:
    max_dim: int
    sizes: tuple[int, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]
    degeneracies: tuple[tuple[tuple[int, ...], ...], ...]
    labels: Mapping[tuple[int, int], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "faces", tuple(tuple(tuple(c) for c in lvl) for lvl in self.faces))
        object.__setattr__(self, "degeneracies", tuple(tuple(tuple(c) for c in lvl) for lvl in self.degeneracies))
        if len(self.sizes) != self.max_dim + 1:
            raise SimplicialError("sizes must have max_dim + 1 entries")
        if len(self.faces) != self.max_dim + 1:
            raise SimplicialError("faces must have max_dim + 1 levels (level 0 empty)")
        if len(self.degeneracies) != self.max_dim:
            raise SimplicialError("degeneracies must have max_dim levels")

    # -- basic access ------------------------------------------------------

    def d(self, n: int, i: int, x: int) -> int:
        return self.faces[n][i][x]

    def s(self, n: int, i: int, x: int) -> int:
        return self.degeneracies[n][i][x]

    def simplices(self, n: int) -> range:
        return range(self.sizes[n])

    def label(self, n: int, x: int) -> str:
        return self.labels.get((n, x), f"{n}:{x}")

    def find_label(self, n: int, name: str) -> int:
        for (m, x), lab in self.labels.items():
            if m == n and lab == name:
                return x
        raise KeyError(f"no {n}-simplex labelled {name!r}")

    def check_simplex(self, n: int, x: int) -> None:
        if not 0 <= n <= self.max_dim or not 0 <= x < self.sizes[n]:
            raise SimplicialError(f"unknown simplex {x} at level {n}")

    def face_tuple(self, n: int, x: int) -> tuple[int, ...]:
        return tuple(self.faces[n][i][x] for i in range(n + 1))

    @cached_property
    def degenerate_sets(self) -> tuple[frozenset, ...]:
        out = [frozenset()]
        for n in range(1, self.max_dim + 1):
            out.append(frozenset(x for row in self.degeneracies[n - 1] for x in row))
        return tuple(out)

    def filler_index(self, n: int) -> dict[tuple[int, ...], list[int]]:
        """Map each boundary tuple at level ``n >= 1`` to the simplices filling it."""
        return self._filler_indices[n]

    @cached_property
    def _filler_indices(self) -> list[dict]:
        out: list[dict] = [{}]
        for n in range(1, self.max_dim + 1):
            idx: dict[tuple[int, ...], list[int]] = {}
            cols = self.faces[n]
            for x in range(self.sizes[n]):
                idx.setdefault(tuple(col[x] for col in cols), []).append(x)
            out.append(idx)
        return out

    def truncate(self, N: int) -> "TruncatedSimplicialSet":
        if not 0 <= N <= self.max_dim:
            raise SimplicialError(f"cannot truncate dimension {self.max_dim} at {N}")
        return TruncatedSimplicialSet(
            N,
            self.sizes[: N + 1],
            self.faces[: N + 1],
            self.degeneracies[:N],
            {k: v for k, v in self.labels.items() if k[0] <= N},
        )

    def with_labels(self, labels: Mapping[tuple[int, int], str]) -> "TruncatedSimplicialSet":
        return TruncatedSimplicialSet(self.max_dim, self.sizes, self.faces, self.degeneracies, dict(labels))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        labels: dict[str, dict[str, str]] = {}
        for (n, x), lab in sorted(self.labels.items()):
            labels.setdefault(str(n), {})[str(x)] = lab
        return {
            "max_dim": self.max_dim,
            "levels": list(self.sizes),
            "faces": [[list(col) for col in lvl] for lvl in self.faces],
            "degeneracies": [[list(col) for col in lvl] for lvl in self.degeneracies],
            "labels": labels,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSimplicialSet":
        try:
            labels = {
                (int(n), int(x)): lab
                for n, row in data.get("labels", {}).items()
                for x, lab in row.items()
            }
            return cls(
                int(data["max_dim"]),
                tuple(int(c) for c in data["levels"]),
                tuple(tuple(tuple(int(v) for v in col) for col in lvl) for lvl in data["faces"]),
                tuple(tuple(tuple(int(v) for v in col) for col in lvl) for lvl in data["degeneracies"]),
                labels,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SimplicialError(f"malformed simplicial set JSON: {exc}") from exc

    def dumps(self) -> str:
        return dumps_canonical(self.to_json())


def dumps_canonical(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def from_tables(
    faces: Sequence[Sequence[Sequence[int]]],
    degeneracies: Sequence[Sequence[Sequence[int]]],
    sizes: Sequence[int],
    labels: Mapping[tuple[int, int], str] | None = None,
) -> TruncatedSimplicialSet:
    return TruncatedSimplicialSet(
        len(sizes) - 1,
        tuple(sizes),
        tuple(tuple(tuple(col) for col in lvl) for lvl in faces),
        tuple(tuple(tuple(col) for col in lvl) for lvl in degeneracies),
        dict(labels or {}),
    )


def point(max_dim: int = 0) -> TruncatedSimplicialSet:
    return standard_simplex(0, max_dim)


def standard_simplex(k: int, max_dim: int) -> TruncatedSimplicialSet:
    """The standard ``k``-simplex truncated at ``max_dim``.

    ``n``-simplices are nondecreasing sequences of length ``n + 1`` in
    ``{0..k}``, listed in lexicographic order.
    """
    levels = []
    for n in range(max_dim + 1):
        levels.append([seq for seq in product(range(k + 1), repeat=n + 1) if list(seq) == sorted(seq)])
    index = [{seq: x for x, seq in enumerate(lvl)} for lvl in levels]
    faces = [()]
    for n in range(1, max_dim + 1):
        faces.append(
            tuple(tuple(index[n - 1][seq[:i] + seq[i + 1:]] for seq in levels[n]) for i in range(n + 1))
        )
    degens = []
    for n in range(max_dim):
        degens.append(
            tuple(tuple(index[n + 1][seq[: i + 1] + seq[i:]] for seq in levels[n]) for i in range(n + 1))
        )
    labels = {(n, x): "".join(map(str, seq)) for n, lvl in enumerate(levels) for x, seq in enumerate(lvl)}
    return from_tables(faces, degens, [len(lvl) for lvl in levels], labels)


# -- validation ------------------------------------------------------------


def _shape_violations(X: TruncatedSimplicialSet) -> list[Violation]:
    out = []
    for n in range(X.max_dim + 1):
        if X.sizes[n] < 0:
            out.append(Violation("shape", n, (), -1, "negative level size"))
        if n == 0:
            if X.faces[0]:
                out.append(Violation("shape", 0, (), -1, "level 0 has no faces"))
            continue
        if len(X.faces[n]) != n + 1:
            out.append(Violation("shape", n, (), -1, f"expected {n + 1} face maps"))
            continue
        for i, col in enumerate(X.faces[n]):
            if len(col) != X.sizes[n]:
                out.append(Violation("shape", n, (i,), -1, "face map has wrong length"))
                continue
            for x, y in enumerate(col):
                if not 0 <= y < X.sizes[n - 1]:
                    out.append(Violation("shape", n, (i,), x, f"d_{i} out of range: {y}",
                                         frozenset({("d", n, i, x)})))
    for n in range(X.max_dim):
        if len(X.degeneracies[n]) != n + 1:
            out.append(Violation("shape", n, (), -1, f"expected {n + 1} degeneracy maps"))
            continue
        for i, col in enumerate(X.degeneracies[n]):
            if len(col) != X.sizes[n]:
                out.append(Violation("shape", n, (i,), -1, "degeneracy map has wrong length"))
                continue
            for x, y in enumerate(col):
                if not 0 <= y < X.sizes[n + 1]:
                    out.append(Violation("shape", n, (i,), x, f"s_{i} out of range: {y}",
                                         frozenset({("s", n, i, x)})))
    return out


def validate(X: TruncatedSimplicialSet) -> list[Violation]:
    """All simplicial-identity and injectivity violations of ``X``."""
    out = _shape_violations(X)
    if out:
        return out
    F, S = X.faces, X.degeneracies
    # d_i d_j = d_{j-1} d_i  (i < j)
    for n in range(2, X.max_dim + 1):
        for x in range(X.sizes[n]):
            for j in range(n + 1):
                for i in range(j):
                    lhs = F[n - 1][i][F[n][j][x]]
                    rhs = F[n - 1][j - 1][F[n][i][x]]
                    if lhs != rhs:
                        out.append(Violation(
                            "d_i d_j = d_{j-1} d_i", n, (i, j), x, f"{lhs} != {rhs}",
                            frozenset({("d", n, j, x), ("d", n - 1, i, F[n][j][x]),
                                       ("d", n, i, x), ("d", n - 1, j - 1, F[n][i][x])}),
                        ))
    # s_i s_j = s_{j+1} s_i  (i <= j)
    for n in range(X.max_dim - 1):
        for x in range(X.sizes[n]):
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = S[n + 1][i][S[n][j][x]]
                    rhs = S[n + 1][j + 1][S[n][i][x]]
                    if lhs != rhs:
                        out.append(Violation(
                            "s_i s_j = s_{j+1} s_i", n, (i, j), x, f"{lhs} != {rhs}",
                            frozenset({("s", n, j, x), ("s", n + 1, i, S[n][j][x]),
                                       ("s", n, i, x), ("s", n + 1, j + 1, S[n][i][x])}),
                        ))
    # mixed identities d_i s_j
    for n in range(X.max_dim):
        for x in range(X.sizes[n]):
            for j in range(n + 1):
                y = S[n][j][x]
                for i in range(n + 2):
                    lhs = F[n + 1][i][y]
                    used = {("s", n, j, x), ("d", n + 1, i, y)}
                    if i in (j, j + 1):
                        rhs, name = x, "d_i s_j = id"
                    elif i < j:
                        rhs, name = S[n - 1][j - 1][F[n][i][x]], "d_i s_j = s_{j-1} d_i"
                        used |= {("d", n, i, x), ("s", n - 1, j - 1, F[n][i][x])}
                    else:
                        rhs, name = S[n - 1][j][F[n][i - 1][x]], "d_i s_j = s_j d_{i-1}"
                        used |= {("d", n, i - 1, x), ("s", n - 1, j, F[n][i - 1][x])}
                    if lhs != rhs:
                        out.append(Violation(name, n, (i, j), x, f"{lhs} != {rhs}", frozenset(used)))
    for n in range(X.max_dim):
        for j in range(n + 1):
            col = S[n][j]
            seen: dict[int, int] = {}
            for x, y in enumerate(col):
                if y in seen:
                    out.append(Violation(
                        "s_j injective", n, (j,), x, f"s_{j}({x}) = s_{j}({seen[y]}) = {y}",
                        frozenset({("s", n, j, x), ("s", n, j, seen[y])}),
                    ))
                else:
                    seen[y] = x
    return out


def is_degenerate(X: TruncatedSimplicialSet, n: int, x: int) -> bool:
    X.check_simplex(n, x)
    if n == 0:
        return False
    return x in X.degenerate_sets[n]


def nondegenerate(X: TruncatedSimplicialSet, n: int) -> list[int]:
    degen = X.degenerate_sets[n]
    return [x for x in X.simplices(n) if x not in degen]


def degeneracy_source(X: TruncatedSimplicialSet, n: int, x: int) -> tuple[int, int] | None:
    """``(j, y)`` with ``x = s_j(y)`` and ``j`` minimal, or None."""
    if n == 0:
        return None
    for j in range(n):
        col = X.degeneracies[n - 1][j]
        for y, z in enumerate(col):
            if z == x:
                return j, y
    return None


# -- boundaries --------------------------------------------------------------


@dataclass(frozen=True)
class Boundary:
    dim: int
    tuple: tuple[int, ...]

    def is_compatible(self, X: TruncatedSimplicialSet) -> bool:
        return boundary_is_compatible(X, self.dim, self.tuple)


def boundary_is_compatible(X: TruncatedSimplicialSet, n: int, xs: Sequence[int]) -> bool:
    if len(xs) != n + 1:
        return False
    if n == 1:
        return True
    F = X.faces[n - 1]
    for j in range(n):
        for i in range(j + 1):
            if F[j][xs[i]] != F[i][xs[j + 1]]:
                return False
    return True


def boundary_of(X: TruncatedSimplicialSet, n: int, x: int) -> Boundary:
    X.check_simplex(n, x)
    if n < 1:
        raise SimplicialError("0-simplices have no boundary")
    b = Boundary(n, X.face_tuple(n, x))
    assert b.is_compatible(X), f"incompatible boundary for simplex {x} at level {n}"
    return b


def _prefix_index(X: TruncatedSimplicialSet, m: int) -> dict[tuple[int, ...], list[int]]:
    # prefix (d_0 y, ..., d_{k-1} y) -> sorted ids y at level m
    idx: dict[tuple[int, ...], list[int]] = {}
    cols = X.faces[m]
    for y in range(X.sizes[m]):
        ft = tuple(col[y] for col in cols)
        for k in range(1, m + 2):
            idx.setdefault(ft[:k], []).append(y)
    return idx


def iter_compatible_boundaries(X: TruncatedSimplicialSet, n: int) -> Iterator[tuple[int, ...]]:
    if n < 1 or n - 1 > X.max_dim:
        raise SimplicialError(f"compatible boundaries need 1 <= n <= max_dim + 1, got {n}")
    m = n - 1
    if n == 1:
        yield from product(range(X.sizes[0]), repeat=2)
        return
    idx = _prefix_index(X, m)
    F = X.faces[m]
    xs: list[int] = []

    def extend(j: int) -> Iterator[tuple[int, ...]]:
        # choose x_{j+1}; constraint d_i(x_{j+1}) = d_j(x_i) for i <= j
        key = tuple(F[j][xs[i]] for i in range(j + 1))
        for y in idx.get(key, ()):
            xs.append(y)
            if j + 1 == n:
                yield tuple(xs)
            else:
                yield from extend(j + 1)
            xs.pop()

    for x0 in range(X.sizes[m]):
        xs.append(x0)
        yield from extend(0)
        xs.pop()


def compatible_boundaries(X: TruncatedSimplicialSet, n: int) -> list[Boundary]:
    """Every compatible ``n``-boundary, lexicographically ordered."""
    return [Boundary(n, b) for b in iter_compatible_boundaries(X, n)]


def check_coskeletal(X: TruncatedSimplicialSet, r: int) -> None:
    """Raise NotCoskeletal unless each n-boundary, r < n <= max_dim, has one filler."""
    for n in range(max(r + 1, 1), X.max_dim + 1):
        fillers = X.filler_index(n)
        for b in iter_compatible_boundaries(X, n):
            got = len(fillers.get(b, ()))
            if got != 1:
                raise NotCoskeletal(n, b, got)


def is_coskeletal(X: TruncatedSimplicialSet, r: int) -> bool:
    try:
        check_coskeletal(X, r)
    except NotCoskeletal:
        return False
    return True


def coskeletal_extend(X: TruncatedSimplicialSet, r: int, N: int) -> TruncatedSimplicialSet:
    """Extend an r-coskeletal ``X`` to dimension ``N`` by unique fillers.

    New ``n``-simplices are the compatible ``n``-boundaries in lexicographic
    order.  Degeneracies into new levels come from the identities
    ``d_i s_j = s_{j-1} d_i`` (i < j), ``id`` (i = j, j+1), ``s_j d_{i-1}``
    (i > j+1), applied to the face tuple and looked up.
    """
    if X.max_dim < r:
        raise SimplicialError(f"need max_dim >= r, got {X.max_dim} < {r}")
    if N < X.max_dim:
        raise SimplicialError(f"cannot extend dimension {X.max_dim} down to {N}")
    problems = validate(X)
    if problems:
        raise SimplicialError(f"input fails validation: {problems[0]}")
    check_coskeletal(X, r)
    if N == X.max_dim:
        return X

    sizes = list(X.sizes)
    faces = [list(lvl) for lvl in X.faces]
    degens = [list(lvl) for lvl in X.degeneracies]
    cur = X
    for n in range(X.max_dim + 1, N + 1):
        level = list(iter_compatible_boundaries(cur, n))
        index = {b: x for x, b in enumerate(level)}
        faces.append(tuple(tuple(b[i] for b in level) for i in range(n + 1)))
        new_degens = []
        for j in range(n):
            col = []
            for y in range(sizes[n - 1]):
                ft = []
                for i in range(n + 1):
                    if i in (j, j + 1):
                        ft.append(y)
                    elif i < j:
                        ft.append(degens[n - 2][j - 1][faces[n - 1][i][y]])
                    else:
                        ft.append(degens[n - 2][j][faces[n - 1][i - 1][y]])
                col.append(index[tuple(ft)])
            new_degens.append(tuple(col))
        degens.append(tuple(new_degens))
        sizes.append(len(level))
        cur = TruncatedSimplicialSet(n, tuple(sizes), tuple(faces), tuple(degens), X.labels)
    return cur


# -- simplicial maps ---------------------------------------------------------


@dataclass(frozen=True)
class SimplicialMap:
    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    components: tuple[tuple[int, ...], ...]

    def __call__(self, n: int, x: int) -> int:
        return self.components[n][x]

    def to_json(self) -> dict:
        return {"components": [list(c) for c in self.components]}


def identity_map(X: TruncatedSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, tuple(tuple(X.simplices(n)) for n in range(X.max_dim + 1)))


def check_simplicial_map(F: SimplicialMap) -> list[str]:
    X, Y = F.source, F.target
    out = []
    if X.max_dim != Y.max_dim:
        return [f"truncation mismatch: {X.max_dim} vs {Y.max_dim}"]
    for n in range(X.max_dim + 1):
        if len(F.components[n]) != X.sizes[n]:
            out.append(f"level {n}: component has length {len(F.components[n])}, expected {X.sizes[n]}")
            return out
        if any(not 0 <= y < Y.sizes[n] for y in F.components[n]):
            out.append(f"level {n}: component value out of range")
            return out
    C = F.components
    for n in range(1, X.max_dim + 1):
        for i in range(n + 1):
            fx, fy = X.faces[n][i], Y.faces[n][i]
            for x in range(X.sizes[n]):
                if C[n - 1][fx[x]] != fy[C[n][x]]:
                    out.append(f"F d_{i} != d_{i} F at level {n}, simplex {x} ({X.label(n, x)})")
    for n in range(X.max_dim):
        for i in range(n + 1):
            sx, sy = X.degeneracies[n][i], Y.degeneracies[n][i]
            for x in range(X.sizes[n]):
                if C[n + 1][sx[x]] != sy[C[n][x]]:
                    out.append(f"F s_{i} != s_{i} F at level {n}, simplex {x} ({X.label(n, x)})")
    return out


def _search_maps(
    X: TruncatedSimplicialSet,
    Y: TruncatedSimplicialSet,
    injective: bool = False,
    fixed: Mapping[tuple[int, int], int] | None = None,
) -> Iterator[SimplicialMap]:
    """Backtracking over simplices in (level, id) order.

    Non-degenerate simplices range over fillers in ``Y`` of their image
    boundary; degenerate ones are forced.  Only genuine choice points
    recurse, so forced runs (the coskeletal levels) are a flat loop.
    """
    order = [(n, x) for n in range(X.max_dim + 1) for x in X.simplices(n)]
    degen_src = {}
    for n in range(1, X.max_dim + 1):
        for j in range(n):
            for y, z in enumerate(X.degeneracies[n - 1][j]):
                degen_src.setdefault((n, z), []).append((j, y))
    comps = [[-1] * X.sizes[n] for n in range(X.max_dim + 1)]
    used = [set() for _ in range(X.max_dim + 1)]
    fixed = dict(fixed or {})

    def candidates(n: int, x: int) -> list[int]:
        if (n, x) in degen_src:
            reps = degen_src[(n, x)]
            j, y = reps[0]
            z = Y.degeneracies[n - 1][j][comps[n - 1][y]]
            for j2, y2 in reps[1:]:
                if Y.degeneracies[n - 1][j2][comps[n - 1][y2]] != z:
                    return []
            cands = [z]
        elif n == 0:
            cands = list(Y.simplices(0))
        else:
            key = tuple(comps[n - 1][X.faces[n][i][x]] for i in range(n + 1))
            cands = Y.filler_index(n).get(key, [])
        if (n, x) in fixed:
            cands = [c for c in cands if c == fixed[(n, x)]]
        if injective:
            cands = [c for c in cands if c not in used[n]]
        return cands

    def run(pos: int) -> Iterator[SimplicialMap]:
        trail = []
        while pos < len(order):
            n, x = order[pos]
            cands = candidates(n, x)
            if len(cands) == 1:
                comps[n][x] = cands[0]
                used[n].add(cands[0])
                trail.append((n, x))
                pos += 1
                continue
            for c in cands:
                comps[n][x] = c
                used[n].add(c)
                yield from run(pos + 1)
                used[n].discard(c)
                comps[n][x] = -1
            break
        else:
            yield SimplicialMap(X, Y, tuple(tuple(c) for c in comps))
        for n, x in reversed(trail):
            used[n].discard(comps[n][x])
            comps[n][x] = -1

    yield from run(0)


def enumerate_maps(X: TruncatedSimplicialSet, Y: TruncatedSimplicialSet, r: int) -> list[SimplicialMap]:
    """Every simplicial map ``X -> Y`` in canonical order.

    ``X`` must be r-coskeletal; the search branches only where the target
    offers more than one filler.
    """
    if X.max_dim != Y.max_dim:
        raise SimplicialError(f"truncation mismatch: {X.max_dim} vs {Y.max_dim}")
    check_coskeletal(X, r)
    maps = list(_search_maps(X, Y))
    for F in maps:
        assert not check_simplicial_map(F)
    return maps


def find_isomorphism(X: TruncatedSimplicialSet, Y: TruncatedSimplicialSet, r: int) -> SimplicialMap | None:
    """The lexicographically first isomorphism ``X -> Y``, or None."""
    if X.max_dim != Y.max_dim or X.sizes != Y.sizes:
        return None
    check_coskeletal(X, r)
    check_coskeletal(Y, r)
    for F in _search_maps(X, Y, injective=True):
        assert not check_simplicial_map(F)
        return F
    return None


def to_dot(X: TruncatedSimplicialSet, n: int) -> str:
    """Face incidences from level ``n`` to level ``n - 1`` as a DOT digraph."""
    if not 1 <= n <= X.max_dim:
        raise SimplicialError(f"level {n} has no faces")
    lines = [f'digraph "level{n}" {{', "  rankdir=BT;"]
    for m in (n - 1, n):
        for x in X.simplices(m):
            style = ", style=dashed" if m and x in X.degenerate_sets[m] else ""
            lines.append(f'  "{m}:{x}" [label="{X.label(m, x)}"{style}];')
    for x in X.simplices(n):
        for i in range(n + 1):
            lines.append(f'  "{n}:{x}" -> "{n - 1}:{X.faces[n][i][x]}" [label="d{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
