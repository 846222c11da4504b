"""Command-line front end.

Exit codes: 0 success, 1 a verification failed (or the search budget ran
out), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from .catalan import MonoidalPoset, PosetError, build_catalan_direct, build_nerve_monoidal_poset, catalan_counts, named_simplices
from .classify import (
    CatMapData,
    ClassifyError,
    cat_map_to_skewmon,
    data_problems,
    enumerate_lax_monoids,
    skewmon_to_cat_map,
    validate_cat_map_data,
)
from .fincat import CategoryError, FinCategory
from .simplicial import (
    SimplicialError,
    TruncatedSimplicialSet,
    _search_maps,
    check_coskeletal,
    dumps_canonical,
    enumerate_maps,
    find_isomorphism,
    to_dot,
    validate,
)
from .skewmon import AXIOMS, Budget, BudgetExceeded, SkewError, SkewMonoidalStructure, check_skew_axioms, iter_skew_structures

MALFORMED = (json.JSONDecodeError, OSError, CategoryError, PosetError, SimplicialError, SkewError, ClassifyError)


class Failure(Exception):
    """A verification did not pass; the report has already been printed."""


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_sset(path: str) -> TruncatedSimplicialSet:
    X = TruncatedSimplicialSet.from_json(_load_json(path))
    problems = validate(X)
    if problems:
        raise SimplicialError(f"{path}: {problems[0]}")
    return X


def _emit(args, data, text: str | None = None) -> None:
    if args.json or text is None:
        sys.stdout.write(dumps_canonical(data))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _write_dot(args, X: TruncatedSimplicialSet) -> None:
    if args.dot:
        Path(args.dot).write_text(to_dot(X, X.max_dim), encoding="utf-8")


def _verdict_table(results) -> str:
    lines = []
    for r in results:
        mark = "pass" if r.passed else "FAIL"
        wit = "" if r.witness is None else "  at (" + ", ".join(r.witness) + ")"
        lines.append(f"{r.name:<12} {mark}{wit}")
    return "\n".join(lines)


# -- subcommands -------------------------------------------------------------


def cmd_catalan_build(args) -> None:
    X = build_catalan_direct(max(args.dim, 2)).truncate(args.dim)
    _write_dot(args, X)
    sys.stdout.write(X.dumps())


def cmd_catalan_counts(args) -> None:
    counts = catalan_counts(args.dim)
    _emit(args, counts, " ".join(map(str, counts)))


def cmd_catalan_nondeg(args) -> None:
    if args.dim < 1:
        raise SimplicialError("non-degenerate simplices are listed for dim >= 1")
    X = build_catalan_direct(max(args.dim, 2))
    rows = named_simplices(X, args.dim)
    data = [{"label": lab, "faces": list(faces)} for lab, faces in rows]
    _emit(args, data, "\n".join(f"{lab} = ({', '.join(faces)})" for lab, faces in rows))


def cmd_nerve_poset(args) -> None:
    P = MonoidalPoset.from_json(_load_json(args.poset))
    X = build_nerve_monoidal_poset(P, args.dim)
    _write_dot(args, X)
    sys.stdout.write(X.dumps())


def cmd_iso(args) -> None:
    X, Y = _load_sset(args.x), _load_sset(args.y)
    F = find_isomorphism(X, Y, args.cosk)
    if F is None:
        _emit(args, {"isomorphic": False}, "no isomorphism")
        raise Failure
    _emit(args, {"isomorphic": True, "map": F.to_json()}, "isomorphism found")


def cmd_maps(args) -> None:
    X, Y = _load_sset(args.x), _load_sset(args.y)
    maps = enumerate_maps(X, Y, args.cosk)
    _emit(args, {"count": len(maps), "maps": [F.to_json() for F in maps]}, f"{len(maps)} maps")


def cmd_monoids(args) -> None:
    P = MonoidalPoset.from_json(_load_json(args.poset))
    found = enumerate_lax_monoids(P)
    names = [M.name for M in found]
    _emit(args, {"count": len(names), "monoids": names}, f"{len(names)} lax monoids: {' '.join(names)}")


def cmd_skewmon_check(args) -> None:
    S = SkewMonoidalStructure.from_json(_load_json(args.structure))
    res = check_skew_axioms(S)
    _emit(args, [r.to_json() for r in res.values()], _verdict_table(res.values()))
    if not all(r.passed for r in res.values()):
        raise Failure


def cmd_skewmon_enumerate(args) -> None:
    C = FinCategory.from_json(_load_json(args.category))
    budget = Budget.from_env()
    if args.budget is not None:
        budget.max_nodes = args.budget
    try:
        found = list(iter_skew_structures(C, AXIOMS, budget))
    except BudgetExceeded as exc:
        _emit(args, {"error": "budget exceeded", "explored": exc.explored}, f"budget exceeded: {exc}")
        raise Failure from exc
    _emit(args, {"count": len(found), "structures": [S.to_json() for S in found]},
          f"{len(found)} skew-monoidal structure" + ("" if len(found) == 1 else "s"))


def cmd_classify_to_map(args) -> None:
    S = SkewMonoidalStructure.from_json(_load_json(args.structure))
    res = check_skew_axioms(S)
    if not all(r.passed for r in res.values()):
        _emit(args, [r.to_json() for r in res.values()], _verdict_table(res.values()))
        raise Failure
    sys.stdout.write(dumps_canonical(skewmon_to_cat_map(S).to_json()))


def cmd_classify_to_skewmon(args) -> None:
    D = CatMapData.from_json(_load_json(args.data))
    _require_well_formed(D)
    res = validate_cat_map_data(D)
    if not all(r.passed for r in res.values()):
        _emit(args, [r.to_json() for r in res.values()], _verdict_table(res.values()))
        raise Failure
    sys.stdout.write(dumps_canonical(cat_map_to_skewmon(D).to_json()))


def cmd_classify_verify(args) -> None:
    D = CatMapData.from_json(_load_json(args.data))
    _require_well_formed(D)
    res = validate_cat_map_data(D)
    _emit(args, [r.to_json() for r in res.values()], _verdict_table(res.values()))
    if not all(r.passed for r in res.values()):
        raise Failure


def _require_well_formed(D: CatMapData) -> None:
    bad = data_problems(D)
    if bad:
        raise ClassifyError("; ".join(bad))


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is single-threaded")
    common.add_argument("--dot", metavar="PATH", help="write the top level's face incidences as DOT")

    parser = argparse.ArgumentParser(prog="catalan-sset", description="The Catalan simplicial set and skew-monoidal structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name: str, fn: Callable, help: str):
        p = parent.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    cat = sub.add_parser("catalan", help="ℂ itself").add_subparsers(dest="sub", required=True)
    leaf(cat, "build", cmd_catalan_build, "ℂ truncated at --dim, as JSON").add_argument("--dim", type=int, required=True)
    leaf(cat, "counts", cmd_catalan_counts, "Catalan level sizes").add_argument("--dim", type=int, required=True)
    leaf(cat, "nondeg", cmd_catalan_nondeg, "non-degenerate simplices of one dimension").add_argument("--dim", type=int, required=True)

    nerve = sub.add_parser("nerve", help="nerves").add_subparsers(dest="sub", required=True)
    p = leaf(nerve, "poset", cmd_nerve_poset, "nerve of a monoidal poset")
    p.add_argument("poset")
    p.add_argument("--dim", type=int, required=True)

    for name, fn, help in (("iso", cmd_iso, "find an isomorphism"), ("maps", cmd_maps, "enumerate simplicial maps")):
        p = leaf(sub, name, fn, help)
        p.add_argument("x")
        p.add_argument("y")
        p.add_argument("--cosk", type=int, required=True)

    leaf(sub, "monoids", cmd_monoids, "lax monoids in a monoidal poset").add_argument("poset")

    skew = sub.add_parser("skewmon", help="skew-monoidal structures").add_subparsers(dest="sub", required=True)
    leaf(skew, "check", cmd_skewmon_check, "check the five axioms").add_argument("structure")
    p = leaf(skew, "enumerate", cmd_skewmon_enumerate, "all structures on a category")
    p.add_argument("category")
    p.add_argument("--budget", type=int, help="maximum number of partial candidates")

    cl = sub.add_parser("classify", help="maps ℂ → N(Cat) versus skew-monoidal structures").add_subparsers(dest="sub", required=True)
    leaf(cl, "to-map", cmd_classify_to_map, "structure → map data").add_argument("structure")
    leaf(cl, "to-skewmon", cmd_classify_to_skewmon, "map data → structure").add_argument("data")
    leaf(cl, "verify", cmd_classify_verify, "check the nine 4-simplex equalities").add_argument("data")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        args.fn(args)
    except Failure:
        return 1
    except MALFORMED as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
