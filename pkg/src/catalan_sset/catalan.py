"""The Catalan simplicial set, built directly and as a nerve of a monoidal poset."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .simplicial import (
    SimplicialError,
    TruncatedSimplicialSet,
    coskeletal_extend,
    degeneracy_source,
    find_isomorphism,
    from_tables,
    nondegenerate,
    validate,
)

STAR = "⋆"

# Non-degenerate simplices in dimensions 3 and 4, by the labels of their faces.
NAMED_3 = {
    "a": ("t", "t", "t", "t"),
    "ℓ": ("i", "s1(c)", "t", "s1(c)"),
    "r": ("s0(c)", "t", "s0(c)", "i"),
    "k": ("i", "s1(c)", "s0(c)", "i"),
}
NAMED_4 = {
    "A1": ("a", "a", "a", "a", "a"),
    "A2": ("r", "s1(t)", "a", "s1(t)", "ℓ"),
    "A3": ("r", "r", "s2(t)", "a", "s2(t)"),
    "A4": ("s0(t)", "a", "s0(t)", "ℓ", "ℓ"),
    "A5": ("s1(i)", "s2(i)", "k", "s0(i)", "s1(i)"),
    "A6": ("s0(i)", "r", "k", "ℓ", "s2(i)"),
    "A7": ("k", "r", "s0s1(c)", "ℓ", "k"),
    "A8": ("ℓ", "s1(t)", "s0(t)", "ℓ", "k"),
    "A9": ("k", "r", "s2(t)", "s1(t)", "r"),
}


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class MonoidalPoset:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    tensor: tuple[tuple[int, ...], ...]
    unit: int

    def __len__(self) -> int:
        return len(self.elements)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.tensor[a][b]

    def problems(self) -> list[str]:
        n = len(self.elements)
        out = []
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            return ["leq must be an n x n table"]
        if len(self.tensor) != n or any(len(row) != n for row in self.tensor):
            return ["tensor must be an n x n table"]
        if not 0 <= self.unit < n:
            return ["unit out of range"]
        if any(not 0 <= v < n for row in self.tensor for v in row):
            return ["tensor value out of range"]
        R = range(n)
        for a in R:
            if not self.leq[a][a]:
                out.append(f"leq not reflexive at {self.elements[a]}")
        for a, b in product(R, R):
            if a != b and self.leq[a][b] and self.leq[b][a]:
                out.append(f"leq not antisymmetric at ({self.elements[a]}, {self.elements[b]})")
        for a, b, c in product(R, R, R):
            if self.leq[a][b] and self.leq[b][c] and not self.leq[a][c]:
                out.append(f"leq not transitive at {self.elements[a]}, {self.elements[b]}, {self.elements[c]}")
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                out.append(f"tensor not associative at {self.elements[a]}, {self.elements[b]}, {self.elements[c]}")
        for a, b, c in product(R, R, R):
            if self.leq[a][b] and not (self.leq[self.mul(a, c)][self.mul(b, c)] and self.leq[self.mul(c, a)][self.mul(c, b)]):
                out.append(f"tensor not monotone at {self.elements[a]} <= {self.elements[b]}, {self.elements[c]}")
        for a in R:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                out.append(f"unit not strict at {self.elements[a]}")
        return out

    def check(self) -> None:
        problems = self.problems()
        if problems:
            raise PosetError("; ".join(problems[:5]))

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "leq": [list(row) for row in self.leq],
            "tensor": [list(row) for row in self.tensor],
            "unit": self.unit,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonoidalPoset":
        try:
            P = cls(
                tuple(str(e) for e in data["elements"]),
                tuple(tuple(bool(v) for v in row) for row in data["leq"]),
                tuple(tuple(int(v) for v in row) for row in data["tensor"]),
                int(data["unit"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise PosetError(f"malformed monoidal poset JSON: {exc}") from exc
        P.check()
        return P


def chain_poset(n: int, tensor: str = "max") -> MonoidalPoset:
    """``{0 < 1 < ... < n-1}`` with ``max`` (unit 0), ``min`` (unit n-1) or
    truncated addition ``add`` (unit 0)."""
    ops = {
        "max": (max, 0),
        "min": (min, n - 1),
        "add": (lambda a, b: min(a + b, n - 1), 0),
    }
    op, unit = ops[tensor]
    return MonoidalPoset(
        tuple(str(a) for a in range(n)),
        tuple(tuple(a <= b for b in range(n)) for a in range(n)),
        tuple(tuple(op(a, b) for b in range(n)) for a in range(n)),
        unit,
    )


def two_poset() -> MonoidalPoset:
    """The monoidal poset ``(2, ∨, ⊥)``."""
    return MonoidalPoset(("⊥", "⊤"), ((True, True), (False, True)), ((0, 1), (1, 1)), 0)


def lattice_poset(elements: Sequence[str], leq: Sequence[Sequence[bool]], join: Sequence[Sequence[int]], bottom: int) -> MonoidalPoset:
    P = MonoidalPoset(tuple(elements), tuple(map(tuple, leq)), tuple(map(tuple, join)), bottom)
    P.check()
    return P


def diamond_poset() -> MonoidalPoset:
    """``{0, a, b, 1}`` with join, unit 0."""
    names = ("0", "a", "b", "1")
    below = {0: {0}, 1: {0, 1}, 2: {0, 2}, 3: {0, 1, 2, 3}}
    leq = [[a in below[b] for b in range(4)] for a in range(4)]
    join = [[min(c for c in range(4) if a in below[c] and b in below[c] and all(c in below[d] for d in range(4) if a in below[d] and b in below[d])) for b in range(4)] for a in range(4)]
    return lattice_poset(names, leq, join, 0)


def discrete_monoid_poset(elements: Sequence[str], table: Sequence[Sequence[int]], unit: int) -> MonoidalPoset:
    n = len(elements)
    P = MonoidalPoset(
        tuple(elements),
        tuple(tuple(a == b for b in range(n)) for a in range(n)),
        tuple(map(tuple, table)),
        unit,
    )
    P.check()
    return P


def catalan_counts(N: int) -> list[int]:
    """Catalan numbers ``C_1 .. C_{N+1}`` by the convolution recurrence."""
    if N < 0:
        raise ValueError("N must be non-negative")
    C = [1]
    for n in range(N + 1):
        C.append(sum(C[i] * C[n - i] for i in range(n + 1)))
    return C[1:]


# -- direct construction ---------------------------------------------------


def _catalan_2_skeleton() -> TruncatedSimplicialSet:
    # level 1: s0(⋆)=0, c=1;  level 2: s0s0(⋆)=0, s0(c)=1, s1(c)=2, t=3, i=4
    faces = [
        (),
        ((0, 0), (0, 0)),
        (
            (0, 1, 0, 1, 0),  # d0
            (0, 1, 1, 1, 1),  # d1
            (0, 0, 1, 1, 0),  # d2
        ),
    ]
    degens = [
        ((0,),),
        ((0, 1), (0, 2)),
    ]
    labels = {
        (0, 0): STAR,
        (1, 0): f"s0({STAR})",
        (1, 1): "c",
        (2, 0): f"s0s0({STAR})",
        (2, 1): "s0(c)",
        (2, 2): "s1(c)",
        (2, 3): "t",
        (2, 4): "i",
    }
    return from_tables(faces, degens, [1, 2, 5], labels)


def degenerate_label(j: int, inner: str) -> str:
    if len(inner) > 1 and inner[0] == "s" and inner[1].isdigit():
        return f"s{j}{inner}"
    return f"s{j}({inner})"


def exchange_unitors(faces: tuple[str, ...]) -> tuple[str, ...]:
    swap = {"ℓ": "r", "r": "ℓ"}
    return tuple(swap.get(f, f) for f in faces)


# Printed 4-simplex tuples that only match a compatible boundary once the
# names ℓ and r are exchanged; see named_4_reconciled().
LR_EXCHANGED_4 = frozenset({"A3", "A4", "A6", "A7", "A8", "A9"})


def named_4_reconciled() -> dict[str, tuple[str, ...]]:
    return {
        name: exchange_unitors(faces) if name in LR_EXCHANGED_4 else faces
        for name, faces in NAMED_4.items()
    }


def attach_labels(X: TruncatedSimplicialSet, start: int = 3) -> TruncatedSimplicialSet:
    """Label dims >= ``start``: the named non-degenerate simplices by their face
    labels, degenerate ones as ``s_j(y)`` with ``j`` minimal.

    Raises if the computed non-degenerate simplices in dims 3 and 4 are not
    exactly the named ones.
    """
    labels = dict(X.labels)
    named = {3: NAMED_3, 4: named_4_reconciled()}
    for n in range(start, X.max_dim + 1):
        if n in named:
            by_faces = {}
            for x in nondegenerate(X, n):
                ft = tuple(labels.get((n - 1, X.faces[n][i][x])) for i in range(n + 1))
                by_faces[ft] = x
            expected = {faces: name for name, faces in named[n].items()}
            if set(by_faces) != set(expected):
                raise SimplicialError(
                    f"non-degenerate {n}-simplices {sorted(map(str, by_faces))} differ from the named list"
                )
            for ft, x in by_faces.items():
                labels[(n, x)] = expected[ft]
        for x in X.simplices(n):
            src = degeneracy_source(X, n, x)
            if src is not None and (n - 1, src[1]) in labels:
                labels[(n, x)] = degenerate_label(src[0], labels[(n - 1, src[1])])
    return X.with_labels(labels)


def build_catalan_direct(N: int) -> TruncatedSimplicialSet:
    """ℂ truncated at ``N``: the five 2-simplices, then 2-coskeletal fillers."""
    if N < 2:
        raise ValueError("the direct construction needs N >= 2")
    base = _catalan_2_skeleton()
    problems = validate(base)
    assert not problems, problems
    X = coskeletal_extend(base, 2, N)
    return attach_labels(X)


# -- nerve of a monoidal poset ----------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def nerve_arrays(P: MonoidalPoset, N: int) -> list[list[dict]]:
    """Per level, all arrays ``A[(i, j)]`` with ``A_jk ⊗ A_ij <= A_ik``."""
    levels: list[list[dict]] = [[{}]]
    for n in range(1, N + 1):
        out = []
        for A in levels[-1]:
            new = dict(A)

            def extend(i: int):
                # choose A[(i, n)] for i = n-1 down to 0
                if i < 0:
                    out.append(dict(new))
                    return
                for v in range(len(P)):
                    if all(P.le(P.mul(new[(j, n)], new[(i, j)]), v) for j in range(i + 1, n)):
                        new[(i, n)] = v
                        extend(i - 1)
                new.pop((i, n), None)

            extend(n - 1)
        levels.append(out)
    return levels


def build_nerve_monoidal_poset(P: MonoidalPoset, N: int) -> TruncatedSimplicialSet:
    """The nerve of ``P`` truncated at ``N``.

    Faces delete a vertex, degeneracies repeat one and put the unit on the
    new edge.  Levels >= 2 are ordered lexicographically by face tuple.
    """
    P.check()
    if N < 0:
        raise ValueError("N must be non-negative")
    raw = nerve_arrays(P, N)

    def face_array(A: dict, n: int, k: int) -> tuple:
        idx = [v for v in range(n + 1) if v != k]
        return tuple(A[(idx[a], idx[b])] for a, b in _pairs(n - 1))

    def degen_array(A: dict, n: int, k: int) -> tuple:
        sig = [v if v <= k else v - 1 for v in range(n + 2)]
        return tuple(A[(sig[a], sig[b])] if sig[a] < sig[b] else P.unit for a, b in _pairs(n + 1))

    ordered: list[list[tuple]] = []
    index: list[dict[tuple, int]] = []
    arrays: list[dict[tuple, dict]] = []
    for n, lvl in enumerate(raw):
        by_key = {tuple(A[p] for p in _pairs(n)): A for A in lvl}
        if n < 2:
            keys_n = sorted(by_key)
        else:
            keys_n = sorted(by_key, key=lambda key: tuple(index[n - 1][face_array(by_key[key], n, i)] for i in range(n + 1)))
        ordered.append(keys_n)
        index.append({key: x for x, key in enumerate(keys_n)})
        arrays.append(by_key)

    faces = [()]
    for n in range(1, N + 1):
        faces.append(tuple(
            tuple(index[n - 1][face_array(arrays[n][key], n, i)] for key in ordered[n])
            for i in range(n + 1)
        ))
    degens = []
    for n in range(N):
        degens.append(tuple(
            tuple(index[n + 1][degen_array(arrays[n][key], n, j)] for key in ordered[n])
            for j in range(n + 1)
        ))
    labels = {}
    for n, keys_n in enumerate(ordered):
        for x, key in enumerate(keys_n):
            labels[(n, x)] = "(" + ",".join(P.elements[v] for v in key) + ")" if n else STAR
    X = from_tables(faces, degens, [len(k) for k in ordered], labels)
    problems = validate(X)
    assert not problems, problems[0]
    return X


def edge(X: TruncatedSimplicialSet, n: int, x: int, i: int, j: int) -> int:
    """The 1-simplex of ``x`` spanned by vertices ``i < j``."""
    y, m = x, n
    for v in reversed(range(n + 1)):
        if v not in (i, j):
            y = X.faces[m][v][y]
            m -= 1
    return y


def nerve_array(X: TruncatedSimplicialSet, n: int, x: int) -> dict[tuple[int, int], int]:
    """``A[(i, j)]`` of a simplex of a poset nerve; level-1 ids are element indices."""
    return {(i, j): edge(X, n, x, i, j) for i, j in _pairs(n)}


def named_simplices(X: TruncatedSimplicialSet, n: int) -> list[tuple[str, tuple[str, ...]]]:
    """``(label, face labels)`` for each non-degenerate ``n``-simplex."""
    return [
        (X.label(n, x), tuple(X.label(n - 1, X.faces[n][i][x]) for i in range(n + 1)))
        for x in nondegenerate(X, n)
    ]

