import json
import subprocess
import sys

import pytest

from fakequadric.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, render_json, render_text, run
from fakequadric.surface import Divisor

TORSION = {"pairs": [[3, 1], [3, 2], [3, 1], [3, 2]]}
D3 = {"A1": 2, "A2": -1, "A3": 1, "A4": -1}


def _main_json(capsys, argv, payload=None, tmp_path=None):
    if payload is not None:
        path = tmp_path / "req.json"
        path.write_text(json.dumps(payload))
        argv = [*argv, "--input", str(path)]
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_cohomology_of_torsion_divisor():
    resp = run("cohomology", {**TORSION, "divisor": D3})
    assert resp == {"status": "ok", "result": {"h0": 0, "h1": 1, "h2": 0, "chi": -1}, "diagnostics": []}


def test_cohomology_details():
    resp = run("cohomology", {**TORSION, "divisor": D3, "details": True})
    assert resp["result"]["region"] == "Threshold" or resp["result"]["region"] in {
        "H0only", "H1only", "H2only", "AllZero"
    }
    assert set(resp["result"]["canonical"]) == {"c", "a_hat", "f_hat"}


def test_classgroup_request():
    resp = run("classgroup", {"pairs": [[6, 5], [9, 1], [18, 1]]})
    assert resp["result"] == {"rank": 2, "factors": [3, 18]}
    resp = run("classgroup", {**TORSION, "divisor": D3, "details": True})
    assert resp["result"]["torsion_order"] is None
    assert resp["result"]["lattice_point"] == {"phi": "1/3", "c": 0}
    assert resp["result"]["chi_orb"] == "-2/3"
    resp = run("classgroup", {**TORSION, "divisor": {"A1": 1, "A2": -1}})
    assert resp["result"]["torsion_order"] == 3


def test_p1cover_request():
    resp = run("p1cover", {"d": 2, "mults": [1, 1, 1, 1]})
    assert resp["result"]["charpoly"] == [{"n": 1, "exp": -2}, {"n": 2, "exp": 2}]
    assert resp["result"]["coefficients"] == [1, 2, 1]
    assert resp["result"]["holomorphic_eigenvalues"] == {"1/2": 1}
    labelled = run("p1cover", {"d": 2, "branch": [{"label": "x", "m": 1}, {"label": "y", "m": 1}]})
    assert labelled["result"]["genus"] == 0


def test_cover_request():
    payload = {**TORSION, "d": 3, "D": D3, "H": {}, "restrict": ["A1", "E"]}
    resp = run("cover", payload)
    assert resp["status"] == "error" and resp["result"]["code"] == "NotLinearlyEquivalent"
    payload = {"pairs": [[3, 1], [3, 1], [3, 1]], "d": 6, "D": {"C": 3, "G": 3}, "H": {"E": 2}, "restrict": ["F:x"]}
    resp = run("cover", payload)
    assert resp["status"] == "ok"
    assert resp["result"]["eigen"]["charpoly"]["cyclotomic"] == [{"n": 3, "exp": 1}, {"n": 6, "exp": 1}]
    assert "F:x" in resp["result"]["restrictions"]


def test_leyomdin_request():
    payload = {"w_x": 1, "w_y": 1, "a_x": 1, "a_y": 1, "e": [1], "kappa": 3, "s": 2, "m_x": 1, "m_y": 0, "m": 1}
    resp = run("leyomdin", payload)
    assert resp["status"] == "ok"
    assert resp["result"]["charpoly"]["cyclotomic"] == [{"n": 7, "exp": 1}]
    assert resp["result"]["fiber_labels"] == {"A1": "A_0", "A2": "A_1", "A3": "A_inf"}
    bad = run("leyomdin", {k: v for k, v in payload.items() if k != "m"})
    assert bad["status"] == "error" and bad["result"]["code"] == "InvalidLYInput"


def test_schema_errors_are_coded():
    for command, payload in [
        ("cohomology", {"divisor": {}}),
        ("cohomology", {**TORSION, "divisor": {"A1": "x"}}),
        ("p1cover", {"d": 2, "mults": [1, True]}),
        ("classgroup", []),
        ("classgroup", 7),
    ]:
        resp = run(command, payload)
        if isinstance(resp["result"], list):
            continue
        assert resp["status"] == "error"
        assert resp["diagnostics"] and ":" in resp["diagnostics"][0]
    resp = run("cohomology", {**TORSION, "divisor": {"Z": 1}})
    assert resp["result"]["code"] == "UnknownCurve"
    resp = run("classgroup", {"pairs": [[4, 2]]})
    assert resp["result"]["code"] == "NonCoprimePair"


def test_batch_payload():
    resp = run("cohomology", [{**TORSION, "divisor": D3}, {**TORSION, "divisor": {"A1": 1}}])
    assert [r["result"]["h0"] for r in resp["result"]] == [0, 1]
    assert resp["status"] == "ok"


def test_divisor_round_trip():
    D = Divisor.from_json({"C": 3, "E": -1, "A2": 4, "F:x": 1, "G:y": -2, "F": 2})
    assert Divisor.from_json(json.loads(json.dumps(D.to_json()))) == D


def test_output_is_deterministic():
    payload = {**TORSION, "divisor": D3, "details": True}
    first = render_json(run("classgroup", payload))
    assert all(render_json(run("classgroup", payload)) == first for _ in range(3))
    assert render_text(run("classgroup", payload)) == render_text(run("classgroup", payload))


def test_fixture_filter(capsys):
    code = main(["fixtures", "--anchor", "ex:torsion", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert len(out["result"]["checks"]) == 18 and out["result"]["failed"] == 0


def test_unknown_anchor_lists_available(capsys):
    code = main(["fixtures", "--anchor", "nope", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_FAILED
    assert out["result"]["code"] == "UnknownAnchor" and "ex:torsion" in out["result"]["message"]


def test_main_exit_codes(capsys, tmp_path):
    code, out = _main_json(capsys, ["cohomology"], {**TORSION, "divisor": D3}, tmp_path)
    assert code == EXIT_OK and out["result"]["h1"] == 1
    code, out = _main_json(capsys, ["cohomology"], {**TORSION, "divisor": {"Z": 1}}, tmp_path)
    assert code == EXIT_FAILED
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["cohomology", "--input", str(bad)]) == EXIT_USAGE
    assert "SchemaError" in capsys.readouterr().out
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE


def test_text_format(capsys, tmp_path):
    path = tmp_path / "req.json"
    path.write_text(json.dumps({**TORSION, "divisor": D3}))
    assert main(["cohomology", "--input", str(path)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "status: ok"
    assert "result.h1: 1" in lines


def test_console_entry_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "fakequadric", "p1cover", "--format", "json"],
        input=json.dumps({"d": 2, "mults": [1, 1, 1, 1]}),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["genus"] == 1
