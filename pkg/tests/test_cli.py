import json

import pytest

from qhact.cli import main, parse_scalar
from qhact.classify import m2_family
from qhact.cyclotomic import InputError, zeta
from qhact.hopf import instance_to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_job(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_parse_scalar():
    q = zeta(5)
    assert parse_scalar("q^2", q) == q * q
    assert parse_scalar("q^-2", q) == (q * q).inv()
    assert parse_scalar("q", q) == q
    assert parse_scalar(3) == 3
    assert parse_scalar("1/2").rational_value().denominator == 2
    assert parse_scalar({"level": 5, "coeffs": ["0", "1", "0", "0"]}) == q
    with pytest.raises(InputError):
        parse_scalar("q^2")  # no ambient q
    with pytest.raises(InputError):
        parse_scalar("wat")


def test_verify_exit_codes(tmp_path, capsys):
    inst = m2_family(zeta(5), 1).instance()
    good = write_job(tmp_path, "good.json", {"instance": instance_to_json(inst), "inner_faithful": True})
    code, out, _ = run_cli(capsys, "verify", "--job", good, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["inner_faithfulness"]["verdict"] == "inner_faithful"

    bad_obj = instance_to_json(inst)
    bad_obj["grouplikes"][0]["alpha"][0] = (zeta(5) ** 2).to_json()
    bad = write_job(tmp_path, "bad.json", {"instance": bad_obj})
    code, out, _ = run_cli(capsys, "verify", "--job", bad, "--json")
    assert code == 1
    assert json.loads(out)["violations"]

    err_obj = instance_to_json(inst)
    err_obj["presentation"]["q"] = {"level": 5, "coeffs": ["0", "0", "0", "0"]}
    err = write_job(tmp_path, "err.json", {"instance": err_obj})
    code, _, errtxt = run_cli(capsys, "verify", "--job", err, "--json")
    assert code == 2
    assert "error" in errtxt


def test_search_report(tmp_path, capsys):
    job = write_job(tmp_path, "s.json", {"target": "matrix", "N": 2, "ord_q": 5, "lambda": "q^2"})
    code, out, _ = run_cli(capsys, "search", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 3
    assert sorted(f["tag"] for f in report["families"]) == ["r1", "r2", "r3"]
    # markdown rendering is derived from the same report
    code, out_md, _ = run_cli(capsys, "search", "--job", job)
    assert code == 0 and "| r1 |" in out_md


def test_compat_cell(tmp_path, capsys):
    job = write_job(tmp_path, "c.json", {"target": "M2", "rows": [1, 8], "ord_q": 5})
    code, out, _ = run_cli(capsys, "compat", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["compatible"] and report["zeta_as_q_power"] == -2


def test_maxrank(tmp_path, capsys):
    job = write_job(tmp_path, "m.json", {"target": "M2", "ord_q": 5})
    code, out, _ = run_cli(capsys, "max-rank", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["theta"] == 3 and report["witness_verifies"]


def test_reports_deterministic(tmp_path, capsys):
    job = write_job(tmp_path, "s.json", {"target": "matrix", "N": 2, "ord_q": 5, "lambda": "q^4"})
    _, out1, _ = run_cli(capsys, "search", "--job", job, "--json")
    _, out2, _ = run_cli(capsys, "search", "--job", job, "--json")
    assert out1 == out2


def test_qdet_and_invariants(tmp_path, capsys):
    job = write_job(
        tmp_path, "q.json", {"N": 2, "ord_q": 5, "checks": ["centrality", "laplace", "stability"]}
    )
    code, out, _ = run_cli(capsys, "qdet", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["centrality"] is True
    assert report["results"]["stability"]["r1"] == {"g_fixes_det": True, "x_kills_det": True}
    assert report["results"]["stability"]["r7"]["x_kills_det"] is False

    job2 = write_job(
        tmp_path,
        "i.json",
        {"k": 3, "m": 6, "checks": ["match"], "case": "divides_km", "degree_bound": 18},
    )
    code, out, _ = run_cli(capsys, "invariants", "--job", job2, "--json")
    assert code == 0
    assert json.loads(out)["results"]["match"]["match"] is True


def test_suite_subset(tmp_path, capsys):
    job = write_job(tmp_path, "suite.json", {"criteria": [3, 12]})
    code, out, _ = run_cli(capsys, "suite", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"]
    assert [r["id"] for r in report["results"]] == [3, 12]
    # markdown table derives from the same data
    code, out_md, _ = run_cli(capsys, "suite", "--job", job)
    assert "| 3 |" in out_md and "| 12 |" in out_md


def test_suite_gating(tmp_path, capsys):
    job = write_job(tmp_path, "gate.json", {"criteria": [2], "ord_q": 4})
    code, out, _ = run_cli(capsys, "suite", "--job", job, "--json")
    report = json.loads(out)
    assert report["results"][0]["status"] == "skip"
    assert code == 0  # a skipped criterion is not a failure


def test_missing_job_is_input_error(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2 and "job" in err


def test_malformed_json_job(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "verify", "--job", str(path), "--json")
    assert code == 2 and "error" in err


def test_suite_json_deterministic_modulo_seconds(tmp_path, capsys):
    job = write_job(tmp_path, "suite.json", {"criteria": [3]})

    def normalized():
        _, out, _ = run_cli(capsys, "suite", "--job", job, "--json")
        rep = json.loads(out)
        for r in rep["results"]:
            r.pop("seconds", None)
        return json.dumps(rep, sort_keys=True)

    assert normalized() == normalized()


def test_search_affine_explicit_p(tmp_path, capsys):
    from qhact.suite import _generic_affine_p

    p = _generic_affine_p(3, 5)
    job = write_job(
        tmp_path,
        "aff.json",
        {"target": "affine", "m": 5, "p": [[e.to_json() for e in row] for row in p]},
    )
    code, out, _ = run_cli(capsys, "search", "--job", job, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 24
    assert all(f["tag"].startswith("pair(") for f in report["families"])


def test_level_override(tmp_path, capsys):
    # a level override that is a proper multiple still finds the same families
    job = write_job(tmp_path, "pl.json", {"target": "plane", "k": 3, "m": 3})
    code, out, _ = run_cli(capsys, "search", "--job", job, "--json", "--level", "6")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 4
