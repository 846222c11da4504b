"""Small categories and monoidal posets used by tests, the CLI and the docs."""

from __future__ import annotations

from .catalan import MonoidalPoset, chain_poset, diamond_poset, discrete_monoid_poset, two_poset
from .fincat import (
    FinCategory,
    discrete_category,
    make_category,
    monoid_category,
    poset_category,
    terminal_category,
)


def chain_category(n: int) -> FinCategory:
    return poset_category([str(i) for i in range(n)], lambda a, b: a <= b, f"chain{n}")


def vee_category() -> FinCategory:
    """Poset ``0 ≤ 1``, ``0 ≤ 2``."""
    return poset_category(["0", "1", "2"], lambda a, b: a == b or a == 0, "vee")


def walking_idempotent() -> FinCategory:
    return monoid_category(["1", "e"], [[0, 1], [1, 1]], 0, "idem")


def cyclic2() -> FinCategory:
    return monoid_category(["1", "g"], [[0, 1], [1, 0]], 0, "Z2")


def walking_iso() -> FinCategory:
    objects = ["0", "1"]
    arrows = ["id0", "id1", "f", "g"]
    dom = [0, 1, 0, 1]
    cod = [0, 1, 1, 0]
    comp = {(3, 2): 0, (2, 3): 1}
    return make_category("iso", objects, arrows, dom, cod, [0, 1], comp)


def arrow_with_retraction() -> FinCategory:
    """``s : 0 → 1``, ``p : 1 → 0`` with ``p s = 1`` and ``e = s p`` idempotent on 1."""
    objects = ["0", "1"]
    arrows = ["id0", "id1", "s", "p", "e"]
    dom = [0, 1, 0, 1, 1]
    cod = [0, 1, 1, 0, 1]
    comp = {
        (3, 2): 0,   # p s
        (2, 3): 4,   # s p
        (4, 4): 4,
        (4, 2): 2,   # e s
        (3, 4): 3,   # p e
    }
    return make_category("retract", objects, arrows, dom, cod, [0, 1], comp)


def skew_fixture_categories() -> dict[str, FinCategory]:
    """Carriers with at most four objects on which structures are enumerated."""
    return {
        "terminal": terminal_category(),
        "discrete2": discrete_category(["a", "b"], "discrete2"),
        "discrete3": discrete_category(["a", "b", "c"], "discrete3"),
        "chain2": chain_category(2),
        "chain3": chain_category(3),
        "vee": vee_category(),
        "idem": walking_idempotent(),
        "Z2": cyclic2(),
        "iso": walking_iso(),
        "retract": arrow_with_retraction(),
    }


def poset_fixtures() -> dict[str, MonoidalPoset]:
    """Monoidal posets of sizes 1 to 4."""
    return {
        "point": chain_poset(1, "max"),
        "two_join": two_poset(),
        "two_meet": chain_poset(2, "min"),
        "chain3_max": chain_poset(3, "max"),
        "chain3_add": chain_poset(3, "add"),
        "chain4_max": chain_poset(4, "max"),
        "diamond_join": diamond_poset(),
        "discrete_z2": discrete_monoid_poset(["1", "g"], [[0, 1], [1, 0]], 0),
    }
