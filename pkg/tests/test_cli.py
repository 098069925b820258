"""Command-line surface: documents, exit codes, determinism."""

import json

import pytest

from monokit.cli import main
from monokit.mpoly import MPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_basis_degree_zero(capsys):
    code, out, _ = run(capsys, "basis", "--degree", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "monogenics-kit/1"
    assert doc["count"] == 3
    labels = [e["index"] for e in doc["elements"]]
    assert labels == ["X:0", "X:1", "Y:1"]
    coeffs = [e["poly"]["terms"][0]["c"] for e in doc["elements"]]
    assert coeffs == [["1/2", "0/1", "0/1", "0/1"],
                      ["0/1", "-1/2", "0/1", "0/1"],
                      ["0/1", "0/1", "-1/2", "0/1"]]


def test_basis_rejects_negative_degree(capsys):
    code, _, err = run(capsys, "basis", "--degree", "-1")
    assert code == 2
    assert "error" in err


def test_check_gram(capsys):
    code, out, err = run(capsys, "check", "--gram", "--max-degree", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["gram"]["passed"]
    assert doc["gram"]["max_deviation"] < 1e-10
    assert "PASS gram" in err


def test_check_bounds_subset(capsys):
    code, out, _ = run(capsys, "check", "--bounds", "corollary", "--bounds", "sc",
                       "--max-degree", "3")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["bounds"]) == {"corollary", "sc"}
    assert all(v["passed"] for v in doc["bounds"].values())


def test_taylor_element(capsys):
    code, out, _ = run(capsys, "taylor", "--degree", "1", "--index", "X:0")
    assert code == 0
    doc = json.loads(out)
    gammas = [tuple(c["gamma"]) for c in doc["coefficients"]]
    assert gammas == [(0, 1), (1, 0)]


def test_taylor_bad_index(capsys):
    code, _, err = run(capsys, "taylor", "--degree", "1", "--index", "Z:0")
    assert code == 2
    assert "error" in err


def test_fourier_round_trip(capsys, tmp_path):
    from fractions import Fraction
    from monokit.basis import basis_for_degree
    f = Fraction(1, 2) * basis_for_degree(1)[0].poly
    path = tmp_path / "poly.json"
    path.write_text(f.to_json())
    code, out, _ = run(capsys, "fourier", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["input_monogenic"] is True
    values = {(c["n"], c["index"]): c["value"] for c in doc["coefficients"]}
    nonzero = {k: v for k, v in values.items() if abs(v) > 1e-10}
    assert set(nonzero) == {(1, "X:0")}


def test_fourier_missing_input(capsys, tmp_path):
    code, _, err = run(capsys, "fourier", "--input", str(tmp_path / "nope.json"))
    assert code == 2
    assert "not found" in err


def test_bohr_document(capsys):
    code, out, err = run(capsys, "bohr", "--at", "0.01")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"]
    assert 0.0490 < doc["r1"] < 0.0500
    assert 0.5695 < doc["r2"] < 0.5700
    assert doc["radius"] == doc["r1"]
    assert "0.01" in doc["margins"]
    assert "PASS bohr" in err


def test_bohr_rejects_radius_out_of_domain(capsys):
    code, _, err = run(capsys, "bohr", "--at", "0.7")
    assert code == 2
    assert "error" in err


def test_markdown_and_csv_formats(capsys):
    code, out, _ = run(capsys, "bohr", "--format", "md")
    assert code == 0
    assert out.startswith("# bohr")
    code, out, _ = run(capsys, "bohr", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "key,value"
    assert any(line.startswith("r1,") for line in lines)


def test_output_flag_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "bohr", "--output", str(a))[0] == 0
    assert run(capsys, "bohr", "--output", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_deterministic_across_thread_counts(capsys, tmp_path, monkeypatch):
    outputs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("MONOKIT_THREADS", threads)
        path = tmp_path / f"report-{threads}.json"
        code = main(["report", "--max-degree", "1", "--samples", "100",
                     "--functions", "2", "--output", str(path)])
        capsys.readouterr()
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_report_golden_regeneration(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "--golden-dir", str(tmp_path),
                       "--max-degree", "2")
    assert code == 0
    axial = json.loads((tmp_path / "axial_closed_forms.json").read_text())
    assert axial["variants"]["binomial-falling"]["summary"]["disagree"] == 0
    assert (tmp_path / "taylor_closed_forms.json").exists()


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
