import json

import pytest

from catalan_sset.catalan import build_catalan_direct, build_nerve_monoidal_poset, two_poset
from catalan_sset.classify import make_cat_map_data, skewmon_to_cat_map
from catalan_sset.cli import run
from catalan_sset.fixtures import poset_fixtures, skew_fixture_categories
from catalan_sset.skewmon import SkewMonoidalStructure, TensorShapes, check_skew_axioms, enumerate_skew_structures


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data), encoding="utf-8")
    return str(p)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_counts(capsys):
    code, out, _ = call(capsys, "catalan", "counts", "--dim", "4")
    assert code == 0 and out == "1 2 5 14 42\n"
    code, out, _ = call(capsys, "catalan", "counts", "--dim", "3", "--json")
    assert json.loads(out) == [1, 2, 5, 14]


def test_nondeg(capsys):
    code, out, _ = call(capsys, "catalan", "nondeg", "--dim", "3")
    assert code == 0
    assert "a = (t, t, t, t)" in out.splitlines()
    assert len(out.splitlines()) == 4
    code, out, _ = call(capsys, "catalan", "nondeg", "--dim", "4", "--json")
    assert sorted(row["label"] for row in json.loads(out)) == [f"A{k}" for k in range(1, 10)]


def test_build_and_dot(capsys, tmp_path):
    dot = tmp_path / "c.dot"
    code, out, _ = call(capsys, "catalan", "build", "--dim", "3", "--dot", str(dot))
    assert code == 0
    assert json.loads(out)["levels"] == [1, 2, 5, 14]
    assert dot.read_text().startswith("digraph")


def test_iso_and_maps(capsys, tmp_path):
    x = write(tmp_path, "c.json", build_catalan_direct(4).to_json())
    y = write(tmp_path, "n.json", build_nerve_monoidal_poset(two_poset(), 4).to_json())
    z = write(tmp_path, "m.json", build_nerve_monoidal_poset(poset_fixtures()["chain3_max"], 4).to_json())
    assert call(capsys, "iso", x, y, "--cosk", "2")[0] == 0
    assert call(capsys, "iso", x, z, "--cosk", "2")[0] == 1
    code, out, _ = call(capsys, "maps", x, z, "--cosk", "2", "--json")
    assert code == 0 and json.loads(out)["count"] == 3


def test_nerve_and_monoids(capsys, tmp_path):
    p = write(tmp_path, "p.json", two_poset().to_json())
    code, out, _ = call(capsys, "nerve", "poset", p, "--dim", "3")
    assert code == 0 and json.loads(out)["levels"] == [1, 2, 5, 14]
    code, out, _ = call(capsys, "monoids", p, "--json")
    assert json.loads(out)["count"] == 2


def test_skewmon_commands(capsys, tmp_path):
    C = skew_fixture_categories()["idem"]
    c = write(tmp_path, "idem.json", C.to_json())
    code, out, _ = call(capsys, "skewmon", "enumerate", c, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    s = write(tmp_path, "s.json", data["structures"][0])
    code, out, _ = call(capsys, "skewmon", "check", s)
    assert code == 0 and out.count("pass") == 5

    S = enumerate_skew_structures(C)[0]
    bad = SkewMonoidalStructure.from_components(TensorShapes(S.tensor, S.unit), None, S.alpha.components,
                                                [C.arrow("e")], S.rho.components)
    assert not check_skew_axioms(bad)["unit_unit"].passed
    b = write(tmp_path, "bad.json", bad.to_json())
    code, out, _ = call(capsys, "skewmon", "check", b)
    assert code == 1 and "unit_unit    FAIL  at (•)" in out
    assert call(capsys, "classify", "to-map", b)[0] == 1


def test_budget_exit_code(capsys, tmp_path):
    c = write(tmp_path, "c3.json", skew_fixture_categories()["chain3"].to_json())
    code, out, _ = call(capsys, "skewmon", "enumerate", c, "--budget", "10", "--json")
    assert code == 1 and json.loads(out)["error"] == "budget exceeded"


def test_classify_commands(capsys, tmp_path):
    S = enumerate_skew_structures(skew_fixture_categories()["retract"])[0]
    s = write(tmp_path, "s.json", S.to_json())
    code, out, _ = call(capsys, "classify", "to-map", s)
    assert code == 0
    d = write(tmp_path, "d.json", json.loads(out))
    code, out, _ = call(capsys, "classify", "verify", d)
    assert code == 0 and out.count("pass") == 9
    code, out, _ = call(capsys, "classify", "to-skewmon", d)
    assert code == 0 and SkewMonoidalStructure.from_json(json.loads(out)) == S

    # on idem the unit has a non-identity endomorphism, so Fk can be corrupted
    D = skewmon_to_cat_map(enumerate_skew_structures(skew_fixture_categories()["idem"])[0])
    e = D.Fc.arrow("e")
    broken = make_cat_map_data(D.Fc, D.Ft, D.Fi, D.Fa.components, D.Fl.components, D.Fr.components,
                               tuple(e for _ in D.Fk.components))
    b = write(tmp_path, "b.json", broken.to_json())
    code, out, _ = call(capsys, "classify", "verify", b, "--json")
    assert code == 1
    # every 4-simplex with k as a face
    assert [r["axiom"] for r in json.loads(out) if not r["passed"]] == ["A5", "A6", "A7", "A8", "A9"]
    assert call(capsys, "classify", "to-skewmon", b)[0] == 1


@pytest.mark.parametrize("argv", [
    ["catalan"],
    ["catalan", "counts"],
    ["nosuch"],
    ["catalan", "nondeg", "--dim", "0"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_malformed_inputs(capsys, tmp_path):
    junk = tmp_path / "junk.json"
    junk.write_text("{not json", encoding="utf-8")
    for argv in (["skewmon", "check", str(junk)], ["monoids", str(junk)], ["classify", "verify", str(junk)],
                 ["iso", str(junk), str(junk), "--cosk", "2"], ["skewmon", "check", str(tmp_path / "missing.json")]):
        code, _, err = call(capsys, *argv)
        assert code == 2 and err.startswith("error:")
    wrong = write(tmp_path, "wrong.json", {"Fc": {"objects": []}})
    assert call(capsys, "classify", "verify", wrong)[0] == 2


def test_output_is_deterministic(capsys, tmp_path):
    c = write(tmp_path, "r.json", skew_fixture_categories()["retract"].to_json())
    first = call(capsys, "skewmon", "enumerate", c, "--json")[1]
    second = call(capsys, "skewmon", "enumerate", c, "--json")[1]
    assert first == second
    a = call(capsys, "catalan", "build", "--dim", "4")[1]
    assert a == call(capsys, "catalan", "build", "--dim", "4")[1]


def test_threads_accepted(capsys):
    assert call(capsys, "catalan", "counts", "--dim", "2", "--threads", "4")[0] == 0
