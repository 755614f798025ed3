import io
import json
import os
from contextlib import redirect_stdout

import pytest

from bctwins.cli import main
from bctwins.schemas import SCHEMAS, validate


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def groups(tmp_path):
    g1 = write(tmp_path, "g1.json",
               {"type": "B", "q": ["1", "-1", "1", "-1", "1", "-1", "1"],
                "isogeny": "adjoint"})
    g2 = write(tmp_path, "g2.json",
               {"type": "C", "a": "1", "b": "1", "h": ["1", "1", "1"],
                "isogeny": "sc"})
    g1a = write(tmp_path, "g1a.json",
                {"type": "B", "q": ["-1"] * 7, "isogeny": "adjoint"})
    g2r = write(tmp_path, "g2r.json",
                {"type": "C", "a": "-1", "b": "-1", "h": ["1", "1", "1"],
                 "isogeny": "sc"})
    return g1, g2, g1a, g2r


def test_ratio_output():
    code, out = run_cli(["ratio", "--n", "3"])
    assert code == 0
    assert out.strip() == "lambda = sqrt(8/5) ≈ 1.2649"
    code, out = run_cli(["ratio", "--n", "4", "--json"])
    payload = json.loads(out)
    assert payload["radicand"] == "10/7"
    code, _ = run_cli(["ratio", "--n", "2"])
    assert code == 2


def test_tori_enumerate():
    code, out = run_cli(["tori", "enumerate", "--form", "Sp(1,2)", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert sorted(map(tuple, payload["tori"])) == [(0, 1, 1), (0, 3, 0)]
    code, _ = run_cli(["tori", "enumerate", "--form", "XX(1,2)"])
    assert code == 2


def test_tori_compare_and_classify():
    code, out = run_cli(["tori", "compare", "SO(0,7)", "Sp(0,3)"])
    assert code == 0 and "same_tori\ttrue" in out
    code, _ = run_cli(["tori", "compare", "SO(2,5)", "Sp(1,2)", "--strict"])
    assert code == 1
    code, out = run_cli(["tori", "classify", "--rank", "3", "--json"])
    payload = json.loads(out)
    assert ["SO(0,7)", "Sp(0,3)"] in payload["classes"]


def test_twin_command(groups, tmp_path):
    g1, g2, g1a, g2r = groups
    code, out = run_cli(["twin", g1, g2])
    assert code == 0 and out.startswith("twin\ttrue")

    code, out = run_cli(["twin", g1a, g2r, "--json"])
    payload = json.loads(out)
    assert payload["twin"] is False
    assert payload["first_failure"]["place"] == "2"
    validate(payload, "report")

    code, _ = run_cli(["twin", g1a, g2r, "--strict"])
    assert code == 1


def test_twin_abstract(tmp_path):
    data = write(tmp_path, "abs.json", {
        "type": "abstract", "rank": 3,
        "places": [
            {"name": "v1", "kind": "real", "b_witt": 0, "c_ramified": True,
             "c_signature": [3, 0]},
            {"name": "v2", "kind": "real", "b_witt": 0, "c_ramified": True,
             "c_signature": [0, 3]},
        ]})
    code, out = run_cli(["twin", data, "--json"])
    assert code == 0 and json.loads(out)["twin"] is True
    bad = write(tmp_path, "bad.json", {
        "type": "abstract", "rank": 3,
        "places": [{"name": "v1", "kind": "real", "b_witt": 0,
                    "c_ramified": True, "c_signature": [0, 3]}]})
    code, _ = run_cli(["twin", bad])
    assert code == 2  # odd ramification set


def test_wc_command(groups):
    g1, g2, g1a, _ = groups
    code, out = run_cli(["wc", g1, g2, "--S", "inf,2,5", "--json"])
    assert code == 0 and json.loads(out)["weakly_commensurable"] is True
    code, _ = run_cli(["wc", g1a, g2, "--S", "inf", "--strict"])
    assert code == 1


def test_wc_rank2_redirects(tmp_path):
    g1 = write(tmp_path, "b2.json",
               {"type": "B", "q": ["1", "-1", "1", "-1", "1"]})
    g2 = write(tmp_path, "c2.json",
               {"type": "C", "a": "1", "b": "1", "h": ["1", "1"]})
    code, _ = run_cli(["wc", g1, g2])
    assert code == 3


def test_rank2_command(tmp_path):
    q1 = write(tmp_path, "q1.json", ["1", "-1", "1", "-1", "1"])
    q2 = write(tmp_path, "q2.json", ["1", "1", "1", "-1", "1"])
    code, out = run_cli(["rank2", q1, q1, "--json"])
    payload = json.loads(out)
    assert code == 0 and payload["same_isomorphism_tori"] is True
    code, out = run_cli(["rank2", q1, q2, "--json"])
    assert json.loads(out)["similar"] is False


def test_invariants_and_witt(tmp_path):
    form = write(tmp_path, "f.json", ["1", "1", "-3"])
    code, out = run_cli(["invariants", form, "--json"])
    payload = json.loads(out)
    assert payload["det"] == "-3" and payload["signature"] == [2, 1]
    validate(payload, "report")
    code, out = run_cli(["witt", form, "--place", "3", "--json"])
    assert json.loads(out)["witt_index"] == 0
    code, _ = run_cli(["witt", form, "--place", "4"])
    assert code == 2


def test_embed_command(tmp_path):
    alg = write(tmp_path, "e5.json", {
        "factors": [{"min_poly": ["0", "1"], "d": ["-1"]},
                    {"min_poly": ["0", "1"], "d": ["-1"]}],
        "fixed": 1})
    target = write(tmp_path, "t.json",
                   {"kind": "orthogonal", "f": ["1", "-1", "1", "-1", "1"]})
    code, out = run_cli(["embed", alg, target, "--json"])
    payload = json.loads(out)
    assert code == 0 and payload["outcome"] == "embeds"
    assert payload["embedding"]["equivalence_witness"]["equal"] is True

    # refusal: non-split finite target in odd dimension
    bad_target = write(tmp_path, "t2.json",
                       {"kind": "orthogonal", "f": ["1", "1", "1", "1", "1"]})
    code, _ = run_cli(["embed", alg, bad_target])
    assert code == 3

    alg6 = write(tmp_path, "e6.json", {
        "factors": [{"min_poly": ["0", "1"], "d": ["-1"]}] * 3, "fixed": 0})
    sympl = write(tmp_path, "sympl.json", {"kind": "symplectic", "n": 6})
    code, out = run_cli(["embed", alg6, sympl, "--json"])
    assert code == 0 and json.loads(out)["outcome"] == "embeds"

    unit = write(tmp_path, "unit.json",
                 {"kind": "unitary", "m": "-1", "h": ["1", "-1"]})
    alg_u = write(tmp_path, "eu.json", {
        "factors": [{"min_poly": ["-2", "0", "1"], "d": ["-1"]}], "fixed": 0})
    code, out = run_cli(["embed", alg_u, unit, "--json"])
    assert code == 0 and json.loads(out)["outcome"] == "embeds"


def test_lattice_type_command(tmp_path):
    mat = write(tmp_path, "m.json", {"matrix": [["0", "1"], ["1", "0"]]})
    code, out = run_cli(["lattice-type", mat, "--json"])
    payload = json.loads(out)
    assert (payload["alpha"], payload["beta"], payload["gamma"]) == (0, 0, 1)
    bad = write(tmp_path, "bad.json", {"matrix": [["1", "1"], ["0", "1"]]})
    code, _ = run_cli(["lattice-type", bad])
    assert code == 2


def test_schema_rejects_floats(tmp_path):
    path = tmp_path / "f.json"
    path.write_text("[1.5, 2]")
    code, _ = run_cli(["invariants", str(path)])
    assert code == 2


def test_deterministic_output(groups):
    g1, g2, _, _ = groups
    outputs = {run_cli(["twin", g1, g2, "--json"])[1] for _ in range(3)}
    assert len(outputs) == 1
    outputs = {run_cli(["tori", "classify", "--rank", "4", "--json"])[1]
               for _ in range(3)}
    assert len(outputs) == 1


def test_figures_written(groups, tmp_path):
    g1, g2, _, _ = groups
    fig = str(tmp_path / "twin.png")
    code, _ = run_cli(["twin", g1, g2, "--figure", fig])
    assert code == 0 and os.path.getsize(fig) > 0
    fig2 = str(tmp_path / "tori.png")
    code, _ = run_cli(["tori", "classify", "--rank", "3", "--figure", fig2,
                       "--json"])
    assert code == 0 and os.path.getsize(fig2) > 0


def test_schema_files_in_sync():
    root = os.path.join(os.path.dirname(__file__), "..", "schemas")
    for name, schema in SCHEMAS.items():
        path = os.path.join(root, f"{name}.schema.json")
        with open(path) as fh:
            assert json.load(fh) == schema, f"{name} schema out of sync"


def test_all_reports_validate():
    # every --json output must round-trip through the report schema
    import tempfile
    with tempfile.TemporaryDirectory() as tmp:
        form = os.path.join(tmp, "f.json")
        with open(form, "w") as fh:
            json.dump(["1", "-1", "1", "-1", "1"], fh)
        for argv in (["invariants", form], ["witt", form, "--place", "2"],
                     ["rank2", form, form], ["ratio", "--n", "5"],
                     ["tori", "enumerate", "--form", "SO(2,5)"],
                     ["tori", "compare", "SO(0,7)", "Sp(0,3)"],
                     ["tori", "classify", "--rank", "2"]):
            code, out = run_cli(argv + ["--json"])
            assert code == 0
            validate(json.loads(out), "report")
