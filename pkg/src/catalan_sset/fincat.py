"""Exact calculus of finite categories, functors and natural transformations.

Objects and arrows are dense integers; their labels are kept alongside for
reporting and JSON.  Products are literal pair constructions: object
``(a, b)`` of ``C x D`` has index ``a * |D| + b`` and the same holds for
arrows.  No strictification happens anywhere, so ``1 x C`` and ``C`` are
different categories related by explicit unitor functors.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence


class CategoryError(ValueError):
    pass


class ShapeError(CategoryError):
    """Operands of a categorical operation do not fit together."""


def fmt(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(fmt(x) for x in label) + ")"
    return str(label)


class FinCategory:
    """A finite category given by explicit tables."""

    def __init__(
        self,
        name: str,
        objects: Sequence[Hashable],
        arrows: Sequence[Hashable],
        dom: Sequence[int],
        cod: Sequence[int],
        ident: Sequence[int],
        comp: Mapping[tuple[int, int], int],
    ):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.ident = tuple(ident)
        self._comp = dict(comp)
        if len(self.dom) != len(self.arrows) or len(self.cod) != len(self.arrows):
            raise CategoryError("dom/cod tables must cover every arrow")
        if len(self.ident) != len(self.objects):
            raise CategoryError("identity table must cover every object")

    @cached_property
    def key(self) -> tuple:
        return ("base", self.objects, self.arrows, self.dom, self.cod, self.ident,
                tuple(sorted(self._comp.items())))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self._hash)

    @cached_property
    def _hash(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FinCategory({self.name}: {len(self.objects)} objects, {len(self.arrows)} arrows)"

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def compose(self, g: int, f: int) -> int:
        """``g ∘ f``; raises ShapeError unless ``cod f == dom g``."""
        if self.cod[f] != self.dom[g]:
            raise ShapeError(f"{fmt(self.arrows[g])} ∘ {fmt(self.arrows[f])} is not composable")
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise CategoryError(f"composite {fmt(self.arrows[g])} ∘ {fmt(self.arrows[f])} undefined") from None

    @cached_property
    def _homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for m in range(self.n_arrows):
            out.setdefault((self.dom[m], self.cod[m]), []).append(m)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self._homs.get((a, b), ())

    @cached_property
    def _obj_index(self) -> dict:
        return {o: i for i, o in enumerate(self.objects)} | {fmt(o): i for i, o in enumerate(self.objects)}

    @cached_property
    def _arrow_index(self) -> dict:
        return {a: i for i, a in enumerate(self.arrows)} | {fmt(a): i for i, a in enumerate(self.arrows)}

    def obj(self, label) -> int:
        try:
            return self._obj_index[label]
        except KeyError:
            raise CategoryError(f"{self.name} has no object {label!r}") from None

    def arrow(self, label) -> int:
        try:
            return self._arrow_index[label]
        except KeyError:
            raise CategoryError(f"{self.name} has no arrow {label!r}") from None

    def composable_pairs(self) -> Iterable[tuple[int, int]]:
        """``(g, f)`` with ``cod f == dom g``."""
        outgoing: dict[int, list[int]] = {}
        for m in range(self.n_arrows):
            outgoing.setdefault(self.dom[m], []).append(m)
        for f in range(self.n_arrows):
            for g in outgoing.get(self.cod[f], ()):
                yield g, f

    def is_iso(self, m: int) -> bool:
        return self.inverse(m) is not None

    def inverse(self, m: int) -> int | None:
        a, b = self.dom[m], self.cod[m]
        for n in self.hom(b, a):
            if self.compose(n, m) == self.ident[a] and self.compose(m, n) == self.ident[b]:
                return n
        return None

    def is_discrete(self) -> bool:
        return self.n_arrows == self.n_objects

    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._homs.values())

    # -- JSON (base categories only) -------------------------------------

    def to_json(self) -> dict:
        homs: dict[str, list[str]] = {}
        for m in range(self.n_arrows):
            key = f"({fmt(self.objects[self.dom[m]])},{fmt(self.objects[self.cod[m]])})"
            homs.setdefault(key, []).append(fmt(self.arrows[m]))
        comp = {}
        for (g, f), h in sorted(self._comp.items()):
            if f in self.ident or g in self.ident:
                continue
            comp[f"({fmt(self.arrows[g])},{fmt(self.arrows[f])})"] = fmt(self.arrows[h])
        return {
            "name": self.name,
            "objects": [fmt(o) for o in self.objects],
            "arrows": [fmt(a) for a in self.arrows],
            "homs": homs,
            "id": {fmt(o): fmt(self.arrows[self.ident[i]]) for i, o in enumerate(self.objects)},
            "comp": comp,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FinCategory":
        try:
            objects = [str(o) for o in data["objects"]]
            oidx = {o: i for i, o in enumerate(objects)}
            arrows, dom, cod = [], [], []
            for key, names in data["homs"].items():
                a, b = _split_pair(key)
                for name in names:
                    arrows.append(str(name))
                    dom.append(oidx[a])
                    cod.append(oidx[b])
            if len(set(arrows)) != len(arrows):
                raise CategoryError("arrow names must be unique")
            if "arrows" in data:
                # optional canonical arrow order
                order = [str(a) for a in data["arrows"]]
                if sorted(order) != sorted(arrows):
                    raise CategoryError("'arrows' must list exactly the arrows in 'homs'")
                pos = {a: i for i, a in enumerate(arrows)}
                perm = [pos[a] for a in order]
                arrows, dom, cod = order, [dom[i] for i in perm], [cod[i] for i in perm]
            aidx = {a: i for i, a in enumerate(arrows)}
            ident = [aidx[str(data["id"][o])] for o in objects]
            comp = {}
            for key, h in data.get("comp", {}).items():
                g, f = _split_pair(key)
                comp[(aidx[g], aidx[f])] = aidx[str(h)]
        except (KeyError, TypeError, ValueError) as exc:
            raise CategoryError(f"malformed category JSON: {exc}") from exc
        return make_category(data.get("name", "C"), objects, arrows, dom, cod, ident, comp)


def _split_pair(key: str) -> tuple[str, str]:
    key = key.strip()
    if not (key.startswith("(") and key.endswith(")")):
        raise ValueError(f"expected '(a,b)', got {key!r}")
    inner = key[1:-1]
    depth = 0
    for pos, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return inner[:pos].strip(), inner[pos + 1:].strip()
    raise ValueError(f"expected '(a,b)', got {key!r}")


def make_category(
    name: str,
    objects: Sequence[Hashable],
    arrows: Sequence[Hashable],
    dom: Sequence[int],
    cod: Sequence[int],
    ident: Sequence[int],
    comp: Mapping[tuple[int, int], int],
) -> FinCategory:
    """Build a category, filling in composites with identities."""
    full = dict(comp)
    for m in range(len(arrows)):
        full.setdefault((m, ident[dom[m]]), m)
        full.setdefault((ident[cod[m]], m), m)
    return FinCategory(name, objects, arrows, dom, cod, ident, full)


class ProductCategory(FinCategory):
    """``left x right`` with literal pairs; composition is componentwise."""

    def __init__(self, left: FinCategory, right: FinCategory):
        self.left = left
        self.right = right
        self.name = f"({left.name}×{right.name})"
        nL, nR = left.n_objects, right.n_objects
        mL, mR = left.n_arrows, right.n_arrows
        self._mR = mR
        self.objects = tuple((a, b) for a in left.objects for b in right.objects)
        self.arrows = tuple((f, g) for f in left.arrows for g in right.arrows)
        self.dom = tuple(left.dom[f] * nR + right.dom[g] for f in range(mL) for g in range(mR))
        self.cod = tuple(left.cod[f] * nR + right.cod[g] for f in range(mL) for g in range(mR))
        self.ident = tuple(left.ident[a] * mR + right.ident[b] for a in range(nL) for b in range(nR))
        self._comp = {}

    @cached_property
    def key(self) -> tuple:
        return ("product", self.left.key, self.right.key)

    def compose(self, g: int, f: int) -> int:
        mR = self._mR
        gl, gr = divmod(g, mR)
        fl, fr = divmod(f, mR)
        return self.left.compose(gl, fl) * mR + self.right.compose(gr, fr)

    def pair_obj(self, a: int, b: int) -> int:
        return a * self.right.n_objects + b

    def pair_arrow(self, f: int, g: int) -> int:
        return f * self._mR + g

    def split_obj(self, x: int) -> tuple[int, int]:
        return divmod(x, self.right.n_objects)

    def split_arrow(self, m: int) -> tuple[int, int]:
        return divmod(m, self._mR)

    def to_json(self) -> dict:
        raise CategoryError("product categories are not serialized; serialize the factors")


@lru_cache(maxsize=None)
def product(C: FinCategory, D: FinCategory) -> ProductCategory:
    return ProductCategory(C, D)


def terminal_category() -> FinCategory:
    return _TERMINAL


_TERMINAL = make_category("1", ["*"], ["id*"], [0], [0], [0], {})


def discrete_category(objects: Sequence[str], name: str | None = None) -> FinCategory:
    n = len(objects)
    return make_category(name or f"disc{n}", objects, [f"id{o}" for o in objects],
                         range(n), range(n), range(n), {})


def poset_category(elements: Sequence[str], leq: Callable[[int, int], bool], name: str = "P") -> FinCategory:
    """The thin category with an arrow ``a -> b`` iff ``a <= b``."""
    n = len(elements)
    arrows, dom, cod, index = [], [], [], {}
    for a in range(n):
        for b in range(n):
            if leq(a, b):
                index[(a, b)] = len(arrows)
                arrows.append(f"{elements[a]}≤{elements[b]}")
                dom.append(a)
                cod.append(b)
    ident = [index[(a, a)] for a in range(n)]
    comp = {}
    for (a, b), f in index.items():
        for (b2, c), g in index.items():
            if b2 == b:
                comp[(g, f)] = index[(a, c)]
    return make_category(name, elements, arrows, dom, cod, ident, comp)


def monoid_category(elements: Sequence[str], table: Sequence[Sequence[int]], unit: int, name: str = "M") -> FinCategory:
    """One-object category of a monoid; ``table[g][f]`` is ``g ∘ f``."""
    n = len(elements)
    comp = {(g, f): table[g][f] for g in range(n) for f in range(n)}
    return FinCategory(name, ["•"], list(elements), [0] * n, [0] * n, [unit], comp)


# -- functors ---------------------------------------------------------------


class FinFunctor:
    def __init__(self, source: FinCategory, target: FinCategory, obj: Sequence[int], mor: Sequence[int], name: str = "F"):
        self.source = source
        self.target = target
        self.obj = tuple(obj)
        self.mor = tuple(mor)
        self.name = name
        if len(self.obj) != source.n_objects or len(self.mor) != source.n_arrows:
            raise ShapeError(f"functor {name}: maps do not cover the source")

    @classmethod
    def from_maps(cls, source: FinCategory, target: FinCategory,
                  fobj: Callable[[int], int], fmor: Callable[[int], int], name: str = "F") -> "FinFunctor":
        return cls(source, target, [fobj(x) for x in range(source.n_objects)],
                   [fmor(m) for m in range(source.n_arrows)], name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self is other) or (
            self.obj == other.obj and self.mor == other.mor
            and self.source == other.source and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.obj, self.mor))

    def __repr__(self) -> str:
        return f"FinFunctor({self.name}: {self.source.name} → {self.target.name})"

    def parallel(self, other: "FinFunctor") -> bool:
        return self.source == other.source and self.target == other.target


def check_functor(F: FinFunctor) -> list[str]:
    C, D = F.source, F.target
    out = []
    for x in range(C.n_objects):
        if not 0 <= F.obj[x] < D.n_objects:
            return [f"{F.name}: object image out of range at {fmt(C.objects[x])}"]
    for m in range(C.n_arrows):
        fm = F.mor[m]
        if not 0 <= fm < D.n_arrows:
            return [f"{F.name}: arrow image out of range at {fmt(C.arrows[m])}"]
        if D.dom[fm] != F.obj[C.dom[m]] or D.cod[fm] != F.obj[C.cod[m]]:
            out.append(f"{F.name}: image of {fmt(C.arrows[m])} has the wrong endpoints")
    if out:
        return out
    for x in range(C.n_objects):
        if F.mor[C.ident[x]] != D.ident[F.obj[x]]:
            out.append(f"{F.name}: identity of {fmt(C.objects[x])} not preserved")
    for g, f in C.composable_pairs():
        if F.mor[C.compose(g, f)] != D.compose(F.mor[g], F.mor[f]):
            out.append(f"{F.name}: composite {fmt(C.arrows[g])} ∘ {fmt(C.arrows[f])} not preserved")
    return out


def check_category(C: FinCategory) -> list[str]:
    out = []
    for m in range(C.n_arrows):
        if not (0 <= C.dom[m] < C.n_objects and 0 <= C.cod[m] < C.n_objects):
            return [f"arrow {fmt(C.arrows[m])} has endpoints out of range"]
    for x in range(C.n_objects):
        i = C.ident[x]
        if C.dom[i] != x or C.cod[i] != x:
            out.append(f"identity of {fmt(C.objects[x])} has the wrong endpoints")
    if out:
        return out
    for g, f in C.composable_pairs():
        try:
            h = C.compose(g, f)
        except CategoryError as exc:
            out.append(str(exc))
            continue
        if C.dom[h] != C.dom[f] or C.cod[h] != C.cod[g]:
            out.append(f"composite {fmt(C.arrows[g])} ∘ {fmt(C.arrows[f])} has the wrong endpoints")
    if out:
        return out
    for m in range(C.n_arrows):
        if C.compose(m, C.ident[C.dom[m]]) != m or C.compose(C.ident[C.cod[m]], m) != m:
            out.append(f"identity law fails at {fmt(C.arrows[m])}")
    pairs: dict[int, list[int]] = {}
    for g, f in C.composable_pairs():
        pairs.setdefault(f, []).append(g)
    for f in range(C.n_arrows):
        for g in pairs.get(f, ()):
            for h in pairs.get(g, ()):
                lhs = C.compose(h, C.compose(g, f))
                rhs = C.compose(C.compose(h, g), f)
                if lhs != rhs:
                    out.append(
                        f"associativity fails at ({fmt(C.arrows[h])}, {fmt(C.arrows[g])}, {fmt(C.arrows[f])})"
                    )
    return out


def identity_functor(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, C, range(C.n_objects), range(C.n_arrows), f"1_{C.name}")


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """``G ∘ F``."""
    if F.target != G.source:
        raise ShapeError(f"cannot compose {G!r} after {F!r}")
    return FinFunctor(F.source, G.target, [G.obj[y] for y in F.obj], [G.mor[m] for m in F.mor],
                      f"{G.name}∘{F.name}")


def compose_all(*Fs: FinFunctor) -> FinFunctor:
    """``Fs[0] ∘ Fs[1] ∘ ...``."""
    out = Fs[-1]
    for G in reversed(Fs[:-1]):
        out = compose_functors(G, out)
    return out


def projection_left(C: FinCategory, D: FinCategory) -> FinFunctor:
    P = product(C, D)
    return FinFunctor.from_maps(P, C, lambda x: P.split_obj(x)[0], lambda m: P.split_arrow(m)[0], "π1")


def projection_right(C: FinCategory, D: FinCategory) -> FinFunctor:
    P = product(C, D)
    return FinFunctor.from_maps(P, D, lambda x: P.split_obj(x)[1], lambda m: P.split_arrow(m)[1], "π2")


def pairing(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """``⟨F, G⟩ : X → C × D``."""
    if F.source != G.source:
        raise ShapeError("pairing needs functors with a common source")
    P = product(F.target, G.target)
    return FinFunctor(F.source, P,
                      [P.pair_obj(a, b) for a, b in zip(F.obj, G.obj)],
                      [P.pair_arrow(f, g) for f, g in zip(F.mor, G.mor)],
                      f"⟨{F.name},{G.name}⟩")


def product_functor(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """``F × G : C × C' → D × D'``."""
    S = product(F.source, G.source)
    T = product(F.target, G.target)
    nS, mS = G.source.n_objects, G.source.n_arrows
    return FinFunctor.from_maps(
        S, T,
        lambda x: T.pair_obj(F.obj[x // nS], G.obj[x % nS]),
        lambda m: T.pair_arrow(F.mor[m // mS], G.mor[m % mS]),
        f"({F.name}×{G.name})",
    )


def associator(C: FinCategory, D: FinCategory, E: FinCategory) -> FinFunctor:
    """``(C × D) × E → C × (D × E)``."""
    S = product(product(C, D), E)
    T = product(C, product(D, E))
    CD, DE = S.left, T.right

    def fobj(x):
        ab, c = S.split_obj(x)
        a, b = CD.split_obj(ab)
        return T.pair_obj(a, DE.pair_obj(b, c))

    def fmor(m):
        fg, h = S.split_arrow(m)
        f, g = CD.split_arrow(fg)
        return T.pair_arrow(f, DE.pair_arrow(g, h))

    return FinFunctor.from_maps(S, T, fobj, fmor, "assoc")


def associator_inv(C: FinCategory, D: FinCategory, E: FinCategory) -> FinFunctor:
    """``C × (D × E) → (C × D) × E``."""
    S = product(C, product(D, E))
    T = product(product(C, D), E)
    DE, CD = S.right, T.left

    def fobj(x):
        a, bc = S.split_obj(x)
        b, c = DE.split_obj(bc)
        return T.pair_obj(CD.pair_obj(a, b), c)

    def fmor(m):
        f, gh = S.split_arrow(m)
        g, h = DE.split_arrow(gh)
        return T.pair_arrow(CD.pair_arrow(f, g), h)

    return FinFunctor.from_maps(S, T, fobj, fmor, "assoc⁻¹")


def left_unitor(C: FinCategory) -> FinFunctor:
    """``1 × C → C``."""
    F = projection_right(terminal_category(), C)
    F.name = "l"
    return F


def left_unitor_inv(C: FinCategory) -> FinFunctor:
    """``C → 1 × C``."""
    return pairing(to_terminal(C), identity_functor(C))


def right_unitor(C: FinCategory) -> FinFunctor:
    """``C × 1 → C`` (the pseudo-inverse of ``C → C × 1``)."""
    F = projection_left(C, terminal_category())
    F.name = "r•"
    return F


def right_unitor_inv(C: FinCategory) -> FinFunctor:
    """``C → C × 1``."""
    return pairing(identity_functor(C), to_terminal(C))


def rebracket(source: FinCategory, target: FinCategory, shape: Callable, name: str = "rebracket") -> FinFunctor:
    """Functor moving pair components around, e.g. ``(((a,b),c),d) ↦ (a,((b,c),d))``.

    ``shape`` acts on nested-pair labels; it is applied to object labels and
    arrow labels alike, which is exactly what a canonical structural functor
    between products does.
    """
    return FinFunctor.from_maps(
        source, target,
        lambda x: target.obj(shape(source.objects[x])),
        lambda m: target.arrow(shape(source.arrows[m])),
        name,
    )


def to_terminal(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, terminal_category(), [0] * C.n_objects, [0] * C.n_arrows, "!")


def constant_functor(C: FinCategory, D: FinCategory, d: int) -> FinFunctor:
    return FinFunctor(C, D, [d] * C.n_objects, [D.ident[d]] * C.n_arrows, f"Δ{fmt(D.objects[d])}")


def object_functor(D: FinCategory, d: int) -> FinFunctor:
    """``1 → D`` picking out ``d``."""
    return constant_functor(terminal_category(), D, d)


# -- natural transformations --------------------------------------------------


class FinNatTrans:
    """``components[x] : source(x) → target(x)`` for each object ``x``."""

    def __init__(self, source: FinFunctor, target: FinFunctor, components: Sequence[int], name: str = "γ"):
        if not source.parallel(target):
            raise ShapeError(f"{name}: {source!r} and {target!r} are not parallel")
        self.source = source
        self.target = target
        self.components = tuple(components)
        self.name = name
        if len(self.components) != source.source.n_objects:
            raise ShapeError(f"{name}: one component per object required")

    @property
    def dom_category(self) -> FinCategory:
        return self.source.source

    @property
    def cod_category(self) -> FinCategory:
        return self.source.target

    def __getitem__(self, x: int) -> int:
        return self.components[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinNatTrans):
            return NotImplemented
        return self.components == other.components and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"FinNatTrans({self.name}: {self.source.name} ⇒ {self.target.name})"


def check_nattrans(t: FinNatTrans) -> list[str]:
    F, G = t.source, t.target
    C, D = F.source, F.target
    out = []
    for x in range(C.n_objects):
        c = t.components[x]
        if not 0 <= c < D.n_arrows or D.dom[c] != F.obj[x] or D.cod[c] != G.obj[x]:
            out.append(f"{t.name}: component at {fmt(C.objects[x])} has the wrong type")
    if out:
        return out
    for m in range(C.n_arrows):
        a, b = C.dom[m], C.cod[m]
        if D.compose(G.mor[m], t.components[a]) != D.compose(t.components[b], F.mor[m]):
            out.append(f"{t.name}: naturality square fails at {fmt(C.arrows[m])}")
    return out


def identity_nattrans(F: FinFunctor) -> FinNatTrans:
    D = F.target
    return FinNatTrans(F, F, [D.ident[y] for y in F.obj], f"1_{F.name}")


def vcompose(beta: FinNatTrans, alpha: FinNatTrans) -> FinNatTrans:
    """``β · α`` for ``α : F ⇒ G`` and ``β : G ⇒ H``."""
    if alpha.target != beta.source:
        raise ShapeError(f"cannot stack {beta!r} on {alpha!r}")
    D = alpha.cod_category
    return FinNatTrans(alpha.source, beta.target,
                       [D.compose(b, a) for a, b in zip(alpha.components, beta.components)],
                       f"{beta.name}·{alpha.name}")


def vcompose_all(*cells: FinNatTrans) -> FinNatTrans:
    """``cells[0] · cells[1] · ...`` (the last one acts first)."""
    out = cells[-1]
    for c in reversed(cells[:-1]):
        out = vcompose(c, out)
    return out


def whisker_left(H: FinFunctor, alpha: FinNatTrans) -> FinNatTrans:
    """``Hα : HF ⇒ HG``."""
    return FinNatTrans(compose_functors(H, alpha.source), compose_functors(H, alpha.target),
                       [H.mor[c] for c in alpha.components], f"{H.name}{alpha.name}")


def whisker_right(alpha: FinNatTrans, K: FinFunctor) -> FinNatTrans:
    """``αK : FK ⇒ GK``."""
    return FinNatTrans(compose_functors(alpha.source, K), compose_functors(alpha.target, K),
                       [alpha.components[y] for y in K.obj], f"{alpha.name}{K.name}")


def hcompose(beta: FinNatTrans, alpha: FinNatTrans) -> FinNatTrans:
    """``β ∘ α : HF ⇒ KG`` for ``α : F ⇒ G`` (B → C), ``β : H ⇒ K`` (C → D)."""
    if alpha.cod_category != beta.dom_category:
        raise ShapeError(f"cannot horizontally compose {beta!r} with {alpha!r}")
    D = beta.cod_category
    K = beta.target
    comps = [D.compose(K.mor[alpha.components[x]], beta.components[alpha.source.obj[x]])
             for x in range(alpha.dom_category.n_objects)]
    return FinNatTrans(compose_functors(beta.source, alpha.source), compose_functors(K, alpha.target),
                       comps, f"{beta.name}∘{alpha.name}")


def product_nattrans(alpha: FinNatTrans, beta: FinNatTrans) -> FinNatTrans:
    """``α × β : F × F' ⇒ G × G'``."""
    T = product(alpha.cod_category, beta.cod_category)
    n = beta.dom_category.n_objects
    comps = [T.pair_arrow(alpha.components[x // n], beta.components[x % n])
             for x in range(alpha.dom_category.n_objects * n)]
    return FinNatTrans(product_functor(alpha.source, beta.source), product_functor(alpha.target, beta.target),
                       comps, f"({alpha.name}×{beta.name})")


def nattrans_equal(gamma: FinNatTrans, delta: FinNatTrans) -> bool:
    if not (gamma.source == delta.source and gamma.target == delta.target):
        raise ShapeError(f"{gamma!r} and {delta!r} are not parallel")
    return gamma.components == delta.components


def first_difference(gamma: FinNatTrans, delta: FinNatTrans) -> int | None:
    """Index of the first object where the components differ, or None."""
    if not (gamma.source == delta.source and gamma.target == delta.target):
        raise ShapeError(f"{gamma!r} and {delta!r} are not parallel")
    for x, (a, b) in enumerate(zip(gamma.components, delta.components)):
        if a != b:
            return x
    return None


# -- functor enumeration ------------------------------------------------------


def enumerate_functors(
    source: FinCategory,
    target: FinCategory,
    obj: Sequence[int] | None = None,
    order: Sequence[int] | None = None,
) -> Iterable[tuple[int, ...]]:
    """Arrow maps of every functor ``source → target`` with the given object map.

    Arrows are assigned in ``order``; composites are propagated as soon as
    both factors are known.
    """
    if obj is None:
        raise ShapeError("an object map is required")
    C, D = source, target
    n = C.n_arrows
    order = list(order if order is not None else range(n))
    by_factor: dict[int, list[tuple[int, int, int]]] = {}
    for g, f in C.composable_pairs():
        h = C.compose(g, f)
        by_factor.setdefault(f, []).append((g, f, h))
        by_factor.setdefault(g, []).append((g, f, h))
    img = [-1] * n

    def assign(m: int, v: int, trail: list[int]) -> bool:
        stack = [(m, v)]
        while stack:
            m, v = stack.pop()
            if img[m] != -1:
                if img[m] != v:
                    return False
                continue
            if D.dom[v] != obj[C.dom[m]] or D.cod[v] != obj[C.cod[m]]:
                return False
            img[m] = v
            trail.append(m)
            for g, f, h in by_factor.get(m, ()):
                if img[g] != -1 and img[f] != -1:
                    stack.append((h, D.compose(img[g], img[f])))
        return True

    def undo(trail: list[int]) -> None:
        for m in trail:
            img[m] = -1

    base: list[int] = []
    for x in range(C.n_objects):
        if not assign(C.ident[x], D.ident[obj[x]], base):
            return

    def rec(pos: int):
        while pos < n and img[order[pos]] != -1:
            pos += 1
        if pos == n:
            yield tuple(img)
            return
        m = order[pos]
        for v in D.hom(obj[C.dom[m]], obj[C.cod[m]]):
            trail: list[int] = []
            if assign(m, v, trail):
                yield from rec(pos + 1)
            undo(trail)

    yield from rec(0)


def enumerate_nattrans(F: FinFunctor, G: FinFunctor, tick: Callable[[], None] | None = None) -> Iterable[tuple[int, ...]]:
    """Component tuples of every natural transformation ``F ⇒ G``, in lex order."""
    if not F.parallel(G):
        raise ShapeError(f"{F!r} and {G!r} are not parallel")
    C, D = F.source, F.target
    n = C.n_objects
    squares: list[list[int]] = [[] for _ in range(n)]
    for m in range(C.n_arrows):
        squares[max(C.dom[m], C.cod[m])].append(m)
    comps = [-1] * n

    def rec(x: int):
        if x == n:
            yield tuple(comps)
            return
        for v in D.hom(F.obj[x], G.obj[x]):
            if tick is not None:
                tick()
            comps[x] = v
            if all(
                D.compose(G.mor[m], comps[C.dom[m]]) == D.compose(comps[C.cod[m]], F.mor[m])
                for m in squares[x]
            ):
                yield from rec(x + 1)
        comps[x] = -1

    yield from rec(0)
