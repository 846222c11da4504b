"""Skew-monoidal structures on finite categories.

A structure is ``(C, ⊗, I, α, λ, ρ)`` with

    α : (A⊗B)⊗C → A⊗(B⊗C),   λ : I⊗A → A,   ρ : A → A⊗I

natural in every argument and satisfying five axioms:

    pentagon     α_{A,B,C⊗D} α_{A⊗B,C,D} = (A⊗α_{B,C,D}) α_{A,B⊗C,D} (α_{A,B,C}⊗D)
    unit_middle  (A⊗λ_B) α_{A,I,B} (ρ_A⊗B) = 1
    unit_left    λ_{A⊗B} α_{I,A,B} = λ_A⊗B
    unit_right   α_{A,B,I} ρ_{A⊗B} = A⊗ρ_B
    unit_unit    λ_I ρ_I = 1_I

None of α, λ, ρ needs to be invertible.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .fincat import (
    CategoryError,
    FinCategory,
    FinFunctor,
    FinNatTrans,
    ShapeError,
    associator,
    check_category,
    check_functor,
    check_nattrans,
    compose_functors,
    constant_functor,
    enumerate_functors,
    enumerate_nattrans,
    fmt,
    identity_functor,
    identity_nattrans,
    nattrans_equal,
    object_functor,
    pairing,
    product,
    product_functor,
    product_nattrans,
    rebracket,
    vcompose,
    vcompose_all,
    whisker_left,
    whisker_right,
)

AXIOMS = ("pentagon", "unit_middle", "unit_left", "unit_right", "unit_unit")
KELLY_PREMISES = ("pentagon", "unit_middle")


class SkewError(ValueError):
    pass


class PreconditionError(SkewError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, explored: int):
        super().__init__(f"{message} (explored {explored} partial candidates)")
        self.explored = explored


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        return {"axiom": self.name, "passed": self.passed,
                "witness": list(self.witness) if self.witness is not None else None}


# -- structural functors shared by every structure on a carrier --------------


class TensorShapes:
    """The functors in which α, λ, ρ live, for a fixed tensor and unit."""

    def __init__(self, tensor: FinFunctor, unit: int):
        self.tensor = tensor
        self.unit = unit
        C = self.C = tensor.target
        if tensor.source != product(C, C):
            raise ShapeError("tensor must be a functor C × C → C")
        if not 0 <= unit < C.n_objects:
            raise ShapeError("unit is not an object of the carrier")
        self.C2 = product(C, C)
        self.C3 = product(self.C2, C)
        one = identity_functor(C)
        T = tensor
        self.alpha_source = compose_functors(T, product_functor(T, one))
        self.alpha_target = compose_functors(T, compose_functors(product_functor(one, T), associator(C, C, C)))
        const_i = constant_functor(C, C, unit)
        self.lambda_source = compose_functors(T, pairing(const_i, one))
        self.rho_target = compose_functors(T, pairing(one, const_i))
        self.one = one


@dataclass(eq=False)
class SkewMonoidalStructure:
    carrier: FinCategory
    tensor: FinFunctor
    unit: int
    alpha: FinNatTrans
    lam: FinNatTrans
    rho: FinNatTrans

    @classmethod
    def from_components(
        cls,
        tensor: FinFunctor | TensorShapes,
        unit: int | None,
        alpha: Sequence[int],
        lam: Sequence[int],
        rho: Sequence[int],
    ) -> "SkewMonoidalStructure":
        shapes = tensor if isinstance(tensor, TensorShapes) else TensorShapes(tensor, unit)
        return cls(
            shapes.C, shapes.tensor, shapes.unit,
            FinNatTrans(shapes.alpha_source, shapes.alpha_target, alpha, "α"),
            FinNatTrans(shapes.lambda_source, shapes.one, lam, "λ"),
            FinNatTrans(shapes.one, shapes.rho_target, rho, "ρ"),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewMonoidalStructure):
            return NotImplemented
        return (self.unit == other.unit and self.tensor == other.tensor
                and self.alpha == other.alpha and self.lam == other.lam and self.rho == other.rho)

    def __hash__(self) -> int:
        return hash((self.unit, self.tensor.obj, self.alpha.components, self.lam.components, self.rho.components))

    @cached_property
    def _C2(self):
        return product(self.carrier, self.carrier)

    def tobj(self, a: int, b: int) -> int:
        return self.tensor.obj[self._C2.pair_obj(a, b)]

    def tarr(self, f: int, g: int) -> int:
        return self.tensor.mor[self._C2.pair_arrow(f, g)]

    def a(self, x: int, y: int, z: int) -> int:
        n = self.carrier.n_objects
        return self.alpha.components[(x * n + y) * n + z]

    def l(self, x: int) -> int:
        return self.lam.components[x]

    def r(self, x: int) -> int:
        return self.rho.components[x]

    def id(self, x: int) -> int:
        return self.carrier.ident[x]

    def comp(self, *arrows: int) -> int:
        """``arrows[0] ∘ arrows[1] ∘ ...``."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.carrier.compose(g, out)
        return out

    def problems(self) -> list[str]:
        out = check_category(self.carrier) + check_functor(self.tensor)
        if out:
            return out
        for t in (self.alpha, self.lam, self.rho):
            out += check_nattrans(t)
        return out

    def is_invertible(self) -> bool:
        C = self.carrier
        return all(C.is_iso(m) for t in (self.alpha, self.lam, self.rho) for m in t.components)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        C, C2 = self.carrier, self._C2
        return {
            "carrier": C.to_json(),
            "unit": fmt(C.objects[self.unit]),
            "tensor": {
                "objects": {fmt(C2.objects[x]): fmt(C.objects[y]) for x, y in enumerate(self.tensor.obj)},
                "arrows": {fmt(C2.arrows[m]): fmt(C.arrows[v]) for m, v in enumerate(self.tensor.mor)},
            },
            "alpha": _components_json(self.alpha),
            "lambda": _components_json(self.lam),
            "rho": _components_json(self.rho),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkewMonoidalStructure":
        try:
            C = FinCategory.from_json(data["carrier"])
            C2 = product(C, C)
            tobj = [C.obj(data["tensor"]["objects"][fmt(o)]) for o in C2.objects]
            tmor = [C.arrow(data["tensor"]["arrows"][fmt(m)]) for m in C2.arrows]
            T = FinFunctor(C2, C, tobj, tmor, "⊗")
            shapes = TensorShapes(T, C.obj(data["unit"]))
            alpha = _components_from_json(shapes.C3, C, data["alpha"])
            lam = _components_from_json(C, C, data["lambda"])
            rho = _components_from_json(C, C, data["rho"])
        except (KeyError, TypeError, CategoryError) as exc:
            raise SkewError(f"malformed skew-monoidal JSON: {exc}") from exc
        S = cls.from_components(shapes, None, alpha, lam, rho)
        bad = S.problems()
        if bad:
            raise SkewError("; ".join(bad))
        return S


def _components_json(t: FinNatTrans) -> dict[str, str]:
    X, C = t.dom_category, t.cod_category
    return {fmt(X.objects[x]): fmt(C.arrows[m]) for x, m in enumerate(t.components)}


def _components_from_json(X: FinCategory, C: FinCategory, data: dict) -> list[int]:
    return [C.arrow(data[fmt(o)]) for o in X.objects]


# -- axiom checker (component form) -------------------------------------------


def _check(name, tuples, holds, S) -> AxiomResult:
    for tup in tuples:
        if not holds(*tup):
            return AxiomResult(name, False, tuple(fmt(S.carrier.objects[x]) for x in tup))
    return AxiomResult(name, True)


def _holds_pentagon(S):
    def holds(a, b, c, d):
        t = S.tobj
        lhs = S.comp(S.a(a, b, t(c, d)), S.a(t(a, b), c, d))
        rhs = S.comp(S.tarr(S.id(a), S.a(b, c, d)), S.a(a, t(b, c), d), S.tarr(S.a(a, b, c), S.id(d)))
        return lhs == rhs
    return holds


def _holds_unit_middle(S):
    I = S.unit

    def holds(a, b):
        lhs = S.comp(S.tarr(S.id(a), S.l(b)), S.a(a, I, b), S.tarr(S.r(a), S.id(b)))
        return lhs == S.id(S.tobj(a, b))
    return holds


def _holds_unit_left(S):
    I = S.unit

    def holds(a, b):
        return S.comp(S.l(S.tobj(a, b)), S.a(I, a, b)) == S.tarr(S.l(a), S.id(b))
    return holds


def _holds_unit_right(S):
    I = S.unit

    def holds(a, b):
        return S.comp(S.a(a, b, I), S.r(S.tobj(a, b))) == S.tarr(S.id(a), S.r(b))
    return holds


def _holds_unit_unit(S):
    def holds(x):
        return S.comp(S.l(x), S.r(x)) == S.id(x)
    return holds


_HOLDS = {
    "pentagon": (_holds_pentagon, 4),
    "unit_middle": (_holds_unit_middle, 2),
    "unit_left": (_holds_unit_left, 2),
    "unit_right": (_holds_unit_right, 2),
    "unit_unit": (_holds_unit_unit, 0),
}


def check_skew_axioms(S: SkewMonoidalStructure, axioms: Sequence[str] = AXIOMS) -> dict[str, AxiomResult]:
    """Per-axiom verdicts with the first failing object tuple as witness."""
    bad = S.problems()
    if bad:
        raise SkewError("malformed structure: " + "; ".join(bad))
    return _check_axioms(S, axioms)


def _check_axioms(S: SkewMonoidalStructure, axioms: Sequence[str]) -> dict[str, AxiomResult]:
    out = {}
    n = S.carrier.n_objects
    for name in axioms:
        make, arity = _HOLDS[name]
        tuples = [(S.unit,)] if arity == 0 else itertools.product(range(n), repeat=arity)
        out[name] = _check(name, tuples, make(S), S)
    return out


def passes(S: SkewMonoidalStructure, axioms: Sequence[str] = AXIOMS) -> bool:
    return all(r.passed for r in _check_axioms(S, axioms).values())


# -- independent oracle: whole-diagram pasting ---------------------------------


def oracle_axioms(S: SkewMonoidalStructure) -> dict[str, bool]:
    """Evaluate every axiom as an equality of pasted natural transformations.

    Shares no code with ``check_skew_axioms`` beyond the data: each side is
    built from whiskering, products and vertical composition in ``fincat``.
    """
    C, T, I = S.carrier, S.tensor, S.unit
    alpha, lam, rho = S.alpha, S.lam, S.rho
    one = identity_functor(C)
    id1 = identity_nattrans(one)
    C2 = product(C, C)
    C3 = product(C2, C)
    C4 = product(C3, C)
    const_i2 = constant_functor(C2, C, I)
    out = {}

    # pentagon, on ((C×C)×C)×C
    CC_CC = product(C2, C2)
    K1 = compose_functors(product_functor(identity_functor(C2), T),
                          rebracket(C4, CC_CC, lambda l: (l[0][0], (l[0][1], l[1]))))
    K2 = product_functor(product_functor(T, one), one)
    lhs = vcompose(whisker_right(alpha, K1), whisker_right(alpha, K2))
    C_C3 = product(C, C3)
    R1 = rebracket(C4, C_C3, lambda l: (l[0][0][0], ((l[0][0][1], l[0][1]), l[1])))
    top = whisker_right(whisker_left(T, product_nattrans(id1, alpha)), R1)
    C_C2_C = product(product(C, C2), C)
    R2 = compose_functors(product_functor(product_functor(one, T), one),
                          rebracket(C4, C_C2_C, lambda l: ((l[0][0][0], (l[0][0][1], l[0][1])), l[1])))
    middle = whisker_right(alpha, R2)
    bottom = whisker_left(T, product_nattrans(alpha, id1))
    rhs = vcompose_all(top, middle, bottom)
    out["pentagon"] = nattrans_equal(lhs, rhs)

    # unit_middle, on C×C
    insert_mid = product_functor(pairing(one, constant_functor(C, C, I)), one)
    lhs = vcompose_all(
        whisker_left(T, product_nattrans(id1, lam)),
        whisker_right(alpha, insert_mid),
        whisker_left(T, product_nattrans(rho, id1)),
    )
    out["unit_middle"] = nattrans_equal(lhs, identity_nattrans(lhs.source))

    # unit_left
    insert_left = product_functor(pairing(constant_functor(C, C, I), one), one)
    lhs = vcompose(whisker_right(lam, T), whisker_right(alpha, insert_left))
    rhs = whisker_left(T, product_nattrans(lam, id1))
    out["unit_left"] = nattrans_equal(lhs, rhs)

    # unit_right
    insert_right = pairing(identity_functor(C2), const_i2)
    lhs = vcompose(whisker_right(alpha, insert_right), whisker_right(rho, T))
    rhs = whisker_left(T, product_nattrans(id1, rho))
    out["unit_right"] = nattrans_equal(lhs, rhs)

    # unit_unit, on the terminal category
    pick = object_functor(C, I)
    lhs = vcompose(whisker_right(lam, pick), whisker_right(rho, pick))
    out["unit_unit"] = nattrans_equal(lhs, identity_nattrans(pick))
    return out


# -- enumeration ----------------------------------------------------------------


@dataclass
class Budget:
    max_objects: int = 5
    max_arrows: int = 20
    max_nodes: int = 10**8
    explored: int = field(default=0, init=False)

    @classmethod
    def from_env(cls, default: int | None = None) -> "Budget":
        raw = os.environ.get("CATALAN_SSET_BUDGET")
        if raw:
            return cls(max_nodes=int(raw))
        return cls(max_nodes=default) if default is not None else cls()

    def tick(self) -> None:
        self.explored += 1
        if self.explored > self.max_nodes:
            raise BudgetExceeded(f"search exceeded {self.max_nodes} nodes", self.explored)


def _tensor_object_maps(C: FinCategory, unit: int, budget: Budget) -> Iterator[tuple[int, ...]]:
    """Object maps of C × C → C compatible with the shapes of a structure.

    Prunes when some required arrow (functor image, α, λ, ρ component)
    would land in an empty hom.
    """
    n = C.n_objects
    pairs = [(a, b) for a in range(n) for b in range(n)]
    reach = [[bool(C.hom(x, y)) for y in range(n)] for x in range(n)]
    T: dict[tuple[int, int], int] = {}
    arrow_pairs = {(C.dom[m], C.cod[m]) for m in range(C.n_arrows)}

    def ok() -> bool:
        for (a, b), v in T.items():
            for (a2, a3) in arrow_pairs:
                if a2 != a:
                    continue
                for (b2, b3) in arrow_pairs:
                    if b2 == b and (a3, b3) in T and not reach[v][T[(a3, b3)]]:
                        return False
            if a == unit and not reach[v][b]:
                return False
            if b == unit and not reach[a][v]:
                return False
        for (a, b), ab in T.items():
            for c in range(n):
                abc = T.get((ab, c))
                bc = T.get((b, c))
                if abc is None or bc is None:
                    continue
                a_bc = T.get((a, bc))
                if a_bc is not None and not reach[abc][a_bc]:
                    return False
        return True

    def rec(k: int):
        if k == len(pairs):
            yield tuple(T[p] for p in pairs)
            return
        for v in range(n):
            budget.tick()
            T[pairs[k]] = v
            if ok():
                yield from rec(k + 1)
            del T[pairs[k]]

    yield from rec(0)


def enumerate_skew_structures(
    C: FinCategory,
    axioms: Sequence[str] = AXIOMS,
    budget: Budget | None = None,
) -> list[SkewMonoidalStructure]:
    """Every structure on ``C`` satisfying ``axioms``, in canonical order.

    The order is: unit object, tensor object map, tensor arrow map, then α, λ, ρ
    component tuples lexicographically.  ``axioms=()`` lists all natural
    candidate data.
    """
    return list(iter_skew_structures(C, axioms, budget))


def iter_skew_structures(
    C: FinCategory,
    axioms: Sequence[str] = AXIOMS,
    budget: Budget | None = None,
) -> Iterator[SkewMonoidalStructure]:
    budget = budget if budget is not None else Budget()
    if C.n_objects > budget.max_objects or C.n_arrows > budget.max_arrows:
        raise BudgetExceeded(
            f"carrier has {C.n_objects} objects and {C.n_arrows} arrows; "
            f"budget allows {budget.max_objects} and {budget.max_arrows}", 0)
    unknown = set(axioms) - set(AXIOMS)
    if unknown:
        raise SkewError(f"unknown axioms {sorted(unknown)}")
    C2 = product(C, C)
    for unit in range(C.n_objects):
        for obj in _tensor_object_maps(C, unit, budget):
            for mor in enumerate_functors(C2, C, obj):
                budget.tick()
                T = FinFunctor(C2, C, obj, mor, "⊗")
                yield from _structures_for_tensor(TensorShapes(T, unit), axioms, budget)


def _structures_for_tensor(shapes: TensorShapes, axioms, budget: Budget) -> Iterator[SkewMonoidalStructure]:
    tick = budget.tick
    want = set(axioms)
    lams = list(enumerate_nattrans(shapes.lambda_source, shapes.one, tick))
    if not lams:
        return
    rhos = list(enumerate_nattrans(shapes.one, shapes.rho_target, tick))
    if not rhos:
        return
    alphas = list(enumerate_nattrans(shapes.alpha_source, shapes.alpha_target, tick))

    def build(a, l, r):
        return SkewMonoidalStructure.from_components(shapes, None, a, l, r)

    C = shapes.C
    I = shapes.unit
    if "unit_unit" in want:
        lr_ok = {(i, j) for i, l in enumerate(lams) for j, r in enumerate(rhos)
                 if C.compose(l[I], r[I]) == C.ident[I]}
    else:
        lr_ok = None
    for a in alphas:
        if "pentagon" in want:
            tick()
            if not passes(build(a, lams[0], rhos[0]), ("pentagon",)):
                continue
        good_l = list(range(len(lams)))
        good_r = list(range(len(rhos)))
        if "unit_left" in want:
            good_l = [i for i in good_l if passes(build(a, lams[i], rhos[0]), ("unit_left",))]
        if "unit_right" in want:
            good_r = [j for j in good_r if passes(build(a, lams[0], rhos[j]), ("unit_right",))]
        for i in good_l:
            for j in good_r:
                tick()
                if lr_ok is not None and (i, j) not in lr_ok:
                    continue
                S = build(a, lams[i], rhos[j])
                if "unit_middle" in want and not passes(S, ("unit_middle",)):
                    continue
                yield S


def kelly_property(S: SkewMonoidalStructure) -> bool:
    """For invertible α, λ, ρ satisfying the pentagon and the middle unit law,
    report whether the other three axioms hold (a falsification probe)."""
    if not S.is_invertible():
        raise PreconditionError("α, λ and ρ must be invertible")
    res = check_skew_axioms(S)
    failing = [name for name in KELLY_PREMISES if not res[name].passed]
    if failing:
        raise PreconditionError(f"premise axioms fail: {', '.join(failing)}")
    return all(res[name].passed for name in ("unit_left", "unit_right", "unit_unit"))


def rho_lambda_is_identity(S: SkewMonoidalStructure) -> bool:
    """Whether ``ρ_I ∘ λ_I : I⊗I → I⊗I`` is the identity."""
    I = S.unit
    return S.comp(S.r(I), S.l(I)) == S.id(S.tobj(I, I))


# -- lax monoidal morphisms and monoidal transformations -------------------------


@dataclass(eq=False)
class LaxMonoidalMorphism:
    """``F`` with ``φ_{x,y} : Fx ⊗ Fy → F(x⊗y)`` and ``ψ : I → F(I)``."""

    source: SkewMonoidalStructure
    target: SkewMonoidalStructure
    functor: FinFunctor
    phi: tuple[int, ...]
    psi: int

    def phi_at(self, x: int, y: int) -> int:
        return self.phi[x * self.source.carrier.n_objects + y]

    def same_data(self, other: "LaxMonoidalMorphism") -> bool:
        return (self.functor == other.functor and self.phi == other.phi and self.psi == other.psi)

    def problems(self) -> list[str]:
        F, A, B = self.functor, self.source, self.target
        if F.source != A.carrier or F.target != B.carrier:
            return ["functor does not go between the carriers"]
        out = check_functor(F)
        if out:
            return out
        D = B.carrier
        n = A.carrier.n_objects
        if len(self.phi) != n * n:
            return ["φ needs one component per pair of objects"]
        for x in range(n):
            for y in range(n):
                m = self.phi_at(x, y)
                if D.dom[m] != B.tobj(F.obj[x], F.obj[y]) or D.cod[m] != F.obj[A.tobj(x, y)]:
                    out.append(f"φ component at ({fmt(A.carrier.objects[x])},{fmt(A.carrier.objects[y])}) has the wrong type")
        if D.dom[self.psi] != B.unit or D.cod[self.psi] != F.obj[A.unit]:
            out.append("ψ must go from the unit to F(unit)")
        if not out:
            C = A.carrier
            for f in range(C.n_arrows):
                for g in range(C.n_arrows):
                    x, y, x2, y2 = C.dom[f], C.dom[g], C.cod[f], C.cod[g]
                    lhs = D.compose(F.mor[A.tarr(f, g)], self.phi_at(x, y))
                    rhs = D.compose(self.phi_at(x2, y2), B.tarr(F.mor[f], F.mor[g]))
                    if lhs != rhs:
                        out.append(f"φ is not natural at ({fmt(C.arrows[f])},{fmt(C.arrows[g])})")
        return out


def identity_lax_morphism(S: SkewMonoidalStructure) -> LaxMonoidalMorphism:
    n = S.carrier.n_objects
    phi = tuple(S.id(S.tobj(x, y)) for x in range(n) for y in range(n))
    return LaxMonoidalMorphism(S, S, identity_functor(S.carrier), phi, S.id(S.unit))


def check_lax_morphism(m: LaxMonoidalMorphism) -> dict[str, AxiomResult]:
    bad = m.problems()
    if bad:
        raise SkewError("malformed lax morphism: " + "; ".join(bad))
    A, B, F = m.source, m.target, m.functor
    n = A.carrier.n_objects
    Fo, Fm = F.obj, F.mor
    lab = A.carrier.objects

    def assoc(x, y, z):
        lhs = B.comp(Fm[A.a(x, y, z)], m.phi_at(A.tobj(x, y), z), B.tarr(m.phi_at(x, y), B.id(Fo[z])))
        rhs = B.comp(m.phi_at(x, A.tobj(y, z)), B.tarr(B.id(Fo[x]), m.phi_at(y, z)), B.a(Fo[x], Fo[y], Fo[z]))
        return lhs == rhs

    def left(x):
        lhs = B.comp(Fm[A.l(x)], m.phi_at(A.unit, x), B.tarr(m.psi, B.id(Fo[x])))
        return lhs == B.l(Fo[x])

    def right(x):
        lhs = B.comp(m.phi_at(x, A.unit), B.tarr(B.id(Fo[x]), m.psi), B.r(Fo[x]))
        return lhs == Fm[A.r(x)]

    out = {}
    for name, fn, arity in (("associativity", assoc, 3), ("left_unit", left, 1), ("right_unit", right, 1)):
        out[name] = AxiomResult(name, True)
        for tup in itertools.product(range(n), repeat=arity):
            if not fn(*tup):
                out[name] = AxiomResult(name, False, tuple(fmt(lab[v]) for v in tup))
                break
    return out


def compose_lax_morphisms(m2: LaxMonoidalMorphism, m1: LaxMonoidalMorphism) -> LaxMonoidalMorphism:
    """``G ∘ F`` with ``φ = G(φ^F) ∘ φ^G_{F-,F-}`` and ``ψ = G(ψ^F) ∘ ψ^G``."""
    if m1.target is not m2.source and m1.target != m2.source:
        raise ShapeError("lax morphisms are not composable")
    A, C = m1.source, m2.target
    F, G = m1.functor, m2.functor
    n = A.carrier.n_objects
    phi = tuple(
        C.comp(G.mor[m1.phi_at(x, y)], m2.phi_at(F.obj[x], F.obj[y]))
        for x in range(n) for y in range(n)
    )
    psi = C.comp(G.mor[m1.psi], m2.psi)
    return LaxMonoidalMorphism(A, C, compose_functors(G, F), phi, psi)


@dataclass(eq=False)
class MonoidalTransformation:
    source: LaxMonoidalMorphism
    target: LaxMonoidalMorphism
    components: tuple[int, ...]


def identity_transformation(m: LaxMonoidalMorphism) -> MonoidalTransformation:
    D = m.target.carrier
    return MonoidalTransformation(m, m, tuple(D.ident[y] for y in m.functor.obj))


def vcompose_transformations(beta: MonoidalTransformation, alpha: MonoidalTransformation) -> MonoidalTransformation:
    if not alpha.target.same_data(beta.source):
        raise ShapeError("transformations are not composable")
    D = alpha.source.target.carrier
    return MonoidalTransformation(alpha.source, beta.target,
                                  tuple(D.compose(b, a) for a, b in zip(alpha.components, beta.components)))


def check_monoidal_transformation(t: MonoidalTransformation) -> dict[str, AxiomResult]:
    mF, mG = t.source, t.target
    A, B = mF.source, mF.target
    if not (mG.source is A or mG.source == A) or not (mG.target is B or mG.target == B):
        raise SkewError("transformation between non-parallel morphisms")
    gamma = FinNatTrans(mF.functor, mG.functor, t.components, "γ")
    bad = check_nattrans(gamma)
    if bad:
        raise SkewError("malformed transformation: " + "; ".join(bad))
    n = A.carrier.n_objects
    lab = A.carrier.objects
    g = t.components
    out = {"tensor": AxiomResult("tensor", True)}
    for x in range(n):
        for y in range(n):
            lhs = B.comp(g[A.tobj(x, y)], mF.phi_at(x, y))
            rhs = B.comp(mG.phi_at(x, y), B.tarr(g[x], g[y]))
            if lhs != rhs:
                out["tensor"] = AxiomResult("tensor", False, (fmt(lab[x]), fmt(lab[y])))
                break
        if not out["tensor"].passed:
            break
    ok = B.comp(g[A.unit], mF.psi) == mG.psi
    out["unit"] = AxiomResult("unit", ok, None if ok else (fmt(lab[A.unit]),))
    return out
