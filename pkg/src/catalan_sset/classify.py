"""Simplicial maps out of ℂ, read as monoid-like structures.

Two instances are covered.

* Monoidal posets: a map ``ℂ → N(P)`` is the same as an element ``m`` with
  ``m ⊗ m ≤ m`` and ``I ≤ m``.
* Finite categories with the cartesian product: a map ``ℂ → N(Cat)`` is the
  data ``(Fc, Ft, Fi, Fa, Fℓ, Fr, Fk)`` subject to one equality for each
  non-degenerate 4-simplex, and such data is the same as a skew-monoidal
  structure on ``Fc``.

In the Cat instance the 1-simplex ``s0(⋆)`` goes to the terminal category,
the degenerate 2-simplices ``s0(c)`` and ``s1(c)`` go to the projections
``Fc × 1 → Fc`` and ``1 × Fc → Fc``, and every structural 2-cell is an
identity.  A 3-simplex ``x`` with faces ``(A123, A023, A013, A012)`` goes to
a natural transformation

    A013 ∘ (A123 × 1)  ⇒  A023 ∘ (1 × A012) ∘ assoc

on ``(A23 × A12) × A01``, and degenerate 3-simplices go to identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .catalan import MonoidalPoset, build_catalan_direct, build_nerve_monoidal_poset
from .fincat import (
    CategoryError,
    FinCategory,
    FinFunctor,
    FinNatTrans,
    associator,
    check_functor,
    check_nattrans,
    compose_functors,
    enumerate_nattrans,
    first_difference,
    fmt,
    identity_functor,
    identity_nattrans,
    left_unitor,
    product,
    product_functor,
    product_nattrans,
    right_unitor,
    terminal_category,
    to_terminal,
    vcompose,
    vcompose_all,
    whisker_left,
    whisker_right,
)
from .simplicial import SimplicialMap, TruncatedSimplicialSet, _search_maps, check_simplicial_map, is_degenerate, nondegenerate
from .skewmon import AxiomResult, SkewError, SkewMonoidalStructure, TensorShapes, check_skew_axioms

EQUALITIES = tuple(f"A{k}" for k in range(1, 10))


class ClassifyError(ValueError):
    pass


# -- monoidal posets ------------------------------------------------------------


@dataclass(frozen=True)
class LaxMonoid:
    poset: MonoidalPoset
    element: int

    @property
    def name(self) -> str:
        return self.poset.elements[self.element]


def is_lax_monoid(P: MonoidalPoset, m: int) -> bool:
    return P.le(P.mul(m, m), m) and P.le(P.unit, m)


def enumerate_lax_monoids(P: MonoidalPoset) -> list[LaxMonoid]:
    P.check()
    return [LaxMonoid(P, m) for m in range(len(P.elements)) if is_lax_monoid(P, m)]


@lru_cache(maxsize=None)
def catalan(N: int) -> TruncatedSimplicialSet:
    return build_catalan_direct(N)


def map_to_lax_monoid(F: SimplicialMap, P: MonoidalPoset) -> LaxMonoid:
    """``m = F(c)``; the images of ``t`` and ``i`` witness the two inequalities."""
    problems = check_simplicial_map(F)
    if problems:
        raise ClassifyError(f"not a simplicial map: {problems[0]}")
    X = F.source
    c = X.find_label(1, "c")
    m = F(1, c)
    Y = F.target
    for name in ("t", "i"):
        y = F(2, X.find_label(2, name))
        a12, a02, a01 = (Y.faces[2][k][y] for k in range(3))
        # the nerve condition on the image 2-simplex
        if not P.le(P.mul(a12, a01), a02):
            raise ClassifyError(f"image of {name} is not a simplex of the nerve")
    if not is_lax_monoid(P, m):
        raise ClassifyError("F(c) is not a lax monoid")
    return LaxMonoid(P, m)


def lax_monoid_to_map(M: LaxMonoid, N: int = 4) -> SimplicialMap:
    """The unique map ``ℂ → N(P)`` sending ``c`` to ``M.element``."""
    if not is_lax_monoid(M.poset, M.element):
        raise ClassifyError(f"{M.name} is not a lax monoid")
    X = catalan(N)
    Y = build_nerve_monoidal_poset(M.poset, N)
    found = list(_search_maps(X, Y, fixed={(1, X.find_label(1, "c")): M.element}))
    if len(found) != 1:
        raise ClassifyError(f"expected one map, found {len(found)}")
    return found[0]


# -- the Cat instance -------------------------------------------------------------


@dataclass(eq=False)
class CatMapData:
    Fc: FinCategory
    Ft: FinFunctor
    Fi: FinFunctor
    Fa: FinNatTrans
    Fl: FinNatTrans
    Fr: FinNatTrans
    Fk: FinNatTrans

    def cells(self) -> dict[str, FinNatTrans]:
        return {"a": self.Fa, "ℓ": self.Fl, "r": self.Fr, "k": self.Fk}

    def same_data(self, other: "CatMapData") -> bool:
        return (self.Fc == other.Fc and self.Ft == other.Ft and self.Fi == other.Fi
                and all(self.cells()[k] == other.cells()[k] for k in self.cells()))

    def to_json(self) -> dict:
        C, C2 = self.Fc, product(self.Fc, self.Fc)
        return {
            "Fc": C.to_json(),
            "Ft": {
                "objects": {fmt(C2.objects[x]): fmt(C.objects[y]) for x, y in enumerate(self.Ft.obj)},
                "arrows": {fmt(C2.arrows[m]): fmt(C.arrows[v]) for m, v in enumerate(self.Ft.mor)},
            },
            "Fi": fmt(C.objects[self.Fi.obj[0]]),
            **{f"F{k}": {fmt(t.dom_category.objects[x]): fmt(C.arrows[m]) for x, m in enumerate(t.components)}
               for k, t in self.cells().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "CatMapData":
        try:
            C = FinCategory.from_json(data["Fc"])
            C2 = product(C, C)
            Ft = FinFunctor(C2, C,
                            [C.obj(data["Ft"]["objects"][fmt(o)]) for o in C2.objects],
                            [C.arrow(data["Ft"]["arrows"][fmt(m)]) for m in C2.arrows], "Ft")
            Fi = unit_functor(C, C.obj(data["Fi"]))
            comps = {}
            for k in ("a", "ℓ", "r", "k"):
                src, _ = cell_shape(k, C, Ft, Fi)
                comps[k] = [C.arrow(data[f"F{k}"][fmt(o)]) for o in src.source.objects]
        except (KeyError, TypeError, CategoryError) as exc:
            raise ClassifyError(f"malformed map data JSON: {exc}") from exc
        return make_cat_map_data(C, Ft, Fi, comps["a"], comps["ℓ"], comps["r"], comps["k"])


def unit_functor(C: FinCategory, unit: int) -> FinFunctor:
    """``Fi : 1 × 1 → C`` picking out ``unit``."""
    one = terminal_category()
    return FinFunctor(product(one, one), C, [unit], [C.ident[unit]], "Fi")


class _Images:
    """Images of the simplices of ℂ up to dimension 3 under given data."""

    def __init__(self, Fc: FinCategory, Ft: FinFunctor, Fi: FinFunctor, cells: dict[str, FinNatTrans] | None = None):
        self.X = catalan(4)
        self.Fc = Fc
        one = terminal_category()
        self.cat1 = {"s0(⋆)": one, "c": Fc}
        self.fun2 = {
            "s0s0(⋆)": to_terminal(product(one, one)),
            "s0(c)": right_unitor(Fc),
            "s1(c)": left_unitor(Fc),
            "t": Ft,
            "i": Fi,
        }
        self.cells = cells or {}

    def edge_cat(self, x1: int) -> FinCategory:
        return self.cat1[self.X.label(1, x1)]

    def functor(self, x2: int) -> FinFunctor:
        return self.fun2[self.X.label(2, x2)]

    def shape(self, x3: int) -> tuple[FinFunctor, FinFunctor]:
        X = self.X
        A123, A023, A013, A012 = (self.functor(X.faces[3][k][x3]) for k in range(4))
        A23 = A123.source.left
        A12 = A123.source.right
        A01 = A012.source.right
        src = compose_functors(A013, product_functor(A123, identity_functor(A01)))
        tgt = compose_all_(A023, product_functor(identity_functor(A23), A012), associator(A23, A12, A01))
        return src, tgt

    def cell(self, x3: int) -> FinNatTrans:
        X = self.X
        if is_degenerate(X, 3, x3):
            src, tgt = self.shape(x3)
            if src != tgt:
                raise AssertionError(f"degenerate 3-simplex {X.label(3, x3)} has a non-identity boundary")
            return identity_nattrans(src)
        return self.cells[X.label(3, x3)]

    def equality(self, x4: int) -> tuple[FinNatTrans, FinNatTrans]:
        """Both sides of the pasting equality of a 4-simplex."""
        X = self.X
        d = lambda n, k, x: X.faces[n][k][x]  # noqa: E731
        A1234, A0234, A0134, A0124, A0123 = (d(4, k, x4) for k in range(5))
        A234 = self.functor(d(3, 0, A1234))
        A123 = self.functor(d(3, 3, A1234))
        A034 = self.functor(d(3, 1, A0134))
        A014 = self.functor(d(3, 2, A0134))
        A012 = self.functor(d(3, 3, A0123))
        c34, c23 = A234.source.left, A234.source.right
        c12, c01 = A012.source.left, A012.source.right
        one = identity_functor
        c_34_23 = product(c34, c23)

        lhs1 = whisker_left(A014, product_nattrans(self.cell(A1234), identity_nattrans(one(c01))))
        P = product_functor(
            compose_functors(product_functor(one(c34), A123), associator(c34, c23, c12)), one(c01))
        lhs2 = whisker_right(self.cell(A0134), P)
        Q = compose_functors(associator(c34, product(c23, c12), c01),
                             product_functor(associator(c34, c23, c12), one(c01)))
        lhs3 = whisker_left(A034, whisker_right(product_nattrans(identity_nattrans(one(c34)), self.cell(A0123)), Q))
        lhs = vcompose_all(lhs3, lhs2, lhs1)

        rhs1 = whisker_right(self.cell(A0124), product_functor(product_functor(A234, one(c12)), one(c01)))
        R = compose_functors(product_functor(one(c_34_23), A012), associator(c_34_23, c12, c01))
        rhs2 = whisker_right(self.cell(A0234), R)
        rhs = vcompose(rhs2, rhs1)
        return lhs, rhs


def compose_all_(*Fs: FinFunctor) -> FinFunctor:
    out = Fs[-1]
    for G in reversed(Fs[:-1]):
        out = compose_functors(G, out)
    return out


def cell_shape(name: str, Fc: FinCategory, Ft: FinFunctor, Fi: FinFunctor) -> tuple[FinFunctor, FinFunctor]:
    """Source and target functors of the cell ``F<name>`` for ``name`` in a, ℓ, r, k."""
    im = _Images(Fc, Ft, Fi)
    return im.shape(im.X.find_label(3, name))


def make_cat_map_data(Fc, Ft, Fi, a, l, r, k) -> CatMapData:
    cells = {}
    for name, comps in (("a", a), ("ℓ", l), ("r", r), ("k", k)):
        src, tgt = cell_shape(name, Fc, Ft, Fi)
        cells[name] = FinNatTrans(src, tgt, comps, f"F{name}")
    return CatMapData(Fc, Ft, Fi, cells["a"], cells["ℓ"], cells["r"], cells["k"])


def data_problems(D: CatMapData) -> list[str]:
    out = check_functor(D.Ft) + check_functor(D.Fi)
    if out:
        return out
    for name, t in D.cells().items():
        src, tgt = cell_shape(name, D.Fc, D.Ft, D.Fi)
        if t.source != src or t.target != tgt:
            out.append(f"F{name} has the wrong boundary")
        else:
            out += check_nattrans(t)
    return out


def validate_cat_map_data(D: CatMapData) -> dict[str, AxiomResult]:
    """One verdict per non-degenerate 4-simplex ``A1 .. A9``.

    The witness is the first object ``(((w,x),y),z)`` at which the two
    pastings differ.
    """
    bad = data_problems(D)
    if bad:
        raise ClassifyError("malformed map data: " + "; ".join(bad))
    im = _Images(D.Fc, D.Ft, D.Fi, D.cells())
    out = {}
    for x4 in nondegenerate(im.X, 4):
        name = im.X.label(4, x4)
        lhs, rhs = im.equality(x4)
        diff = first_difference(lhs, rhs)
        witness = None if diff is None else _flatten(lhs.dom_category.objects[diff])
        out[name] = AxiomResult(name, diff is None, witness)
    return dict(sorted(out.items(), key=lambda kv: int(kv[0][1:])))


def degenerate_equalities_hold(D: CatMapData) -> bool:
    """The equalities attached to degenerate 4-simplices, which hold for any data."""
    im = _Images(D.Fc, D.Ft, D.Fi, D.cells())
    return all(
        first_difference(*im.equality(x4)) is None
        for x4 in im.X.simplices(4) if is_degenerate(im.X, 4, x4)
    )


def _flatten(label) -> tuple[str, ...]:
    if isinstance(label, tuple):
        return tuple(s for part in label for s in _flatten(part))
    return (fmt(label),)


def forced_k(Fc: FinCategory, Ft: FinFunctor, Fi: FinFunctor) -> FinNatTrans:
    """The only value of ``Fk`` compatible with ``A5``.

    Its boundary is ``Fi`` on both sides up to the unitor projections, and the
    pasting of the (identity) coherence cells around ``Fi`` is the identity.
    """
    src, tgt = cell_shape("k", Fc, Ft, Fi)
    if src != tgt:
        raise AssertionError("the k-boundary is not a loop on Fi")
    return FinNatTrans(src, tgt, identity_nattrans(src).components, "Fk")


def skewmon_to_cat_map(S: SkewMonoidalStructure, require_axioms: bool = True) -> CatMapData:
    """Map data for ``S``; with ``require_axioms=False`` any natural candidate
    is converted, which is how failing axioms are matched to failing equalities."""
    failing = [r.name for r in check_skew_axioms(S).values() if not r.passed]
    if failing and require_axioms:
        raise SkewError(f"structure fails {', '.join(failing)}")
    C, n = S.carrier, S.carrier.n_objects
    Fi = unit_functor(C, S.unit)
    Ft = FinFunctor(S.tensor.source, C, S.tensor.obj, S.tensor.mor, "Ft")
    a_src, _ = cell_shape("a", C, Ft, Fi)
    l_src, _ = cell_shape("ℓ", C, Ft, Fi)
    r_src, _ = cell_shape("r", C, Ft, Fi)
    # (A⊗B)⊗C components; ((∗,∗),A) for ℓ; ((A,∗),∗) for r
    a = [S.a(C.obj(x), C.obj(y), C.obj(z)) for (x, y), z in a_src.source.objects]
    l = [S.l(C.obj(w)) for _, w in l_src.source.objects]
    r = [S.r(C.obj(u)) for (u, _), _ in r_src.source.objects]
    assert len(a) == n ** 3 and len(l) == n and len(r) == n
    k = forced_k(C, Ft, Fi).components
    return make_cat_map_data(C, Ft, Fi, a, l, r, k)


def cat_map_to_skewmon(D: CatMapData) -> SkewMonoidalStructure:
    failing = [r.name for r in validate_cat_map_data(D).values() if not r.passed]
    if failing:
        raise ClassifyError(f"map data fails {', '.join(failing)}")
    C = D.Fc
    n = C.n_objects
    unit = D.Fi.obj[0]
    T = FinFunctor(D.Ft.source, C, D.Ft.obj, D.Ft.mor, "⊗")
    shapes = TensorShapes(T, unit)
    alpha = [0] * n ** 3
    for idx, ((x, y), z) in enumerate(D.Fa.dom_category.objects):
        alpha[(C.obj(x) * n + C.obj(y)) * n + C.obj(z)] = D.Fa.components[idx]
    lam = [0] * n
    for idx, (_, w) in enumerate(D.Fl.dom_category.objects):
        lam[C.obj(w)] = D.Fl.components[idx]
    rho = [0] * n
    for idx, ((u, _), _) in enumerate(D.Fr.dom_category.objects):
        rho[C.obj(u)] = D.Fr.components[idx]
    S = SkewMonoidalStructure.from_components(shapes, None, alpha, lam, rho)
    return S


def random_unit_variations(S: SkewMonoidalStructure, count: int, seed: int) -> list[CatMapData]:
    """``count`` map data sharing ``Fc, Ft, Fi, Fa`` with ``S``, with ``Fℓ`` and
    ``Fr`` drawn from all natural transformations of the right shape and
    ``Fk`` forced."""
    rng = random.Random(seed)
    base = skewmon_to_cat_map(S)
    ls = list(enumerate_nattrans(base.Fl.source, base.Fl.target))
    rs = list(enumerate_nattrans(base.Fr.source, base.Fr.target))
    out = []
    for _ in range(count):
        out.append(make_cat_map_data(base.Fc, base.Ft, base.Fi, base.Fa.components,
                                     rng.choice(ls), rng.choice(rs), base.Fk.components))
    return out


def random_cell_variations(D: CatMapData, count: int, seed: int) -> list[CatMapData]:
    """Like ``random_unit_variations`` but also redraws ``Fa``."""
    rng = random.Random(seed)
    As = list(enumerate_nattrans(D.Fa.source, D.Fa.target))
    ls = list(enumerate_nattrans(D.Fl.source, D.Fl.target))
    rs = list(enumerate_nattrans(D.Fr.source, D.Fr.target))
    k = forced_k(D.Fc, D.Ft, D.Fi).components
    return [
        make_cat_map_data(D.Fc, D.Ft, D.Fi, rng.choice(As), rng.choice(ls), rng.choice(rs), k)
        for _ in range(count)
    ]
