"""End-to-end CLI runs through the console entry point."""

import json
import os

import pytest

from ybx.cli import main


@pytest.fixture
def zp2_file(tmp_path):
    path = tmp_path / "zp2.json"
    assert main(["fixture", "generate", "zp2", "--p", "2",
                 "--out", str(path)]) == 0
    return str(path)


def test_brace_zp2(tmp_path):
    out = tmp_path / "brace.json"
    assert main(["brace", "zp2", "--p", "3", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == "ybx/1"
    assert doc["order"] == 9


def test_solution_from_brace_and_validate(tmp_path):
    bpath, spath = tmp_path / "b.json", tmp_path / "s.json"
    assert main(["brace", "zp2", "--p", "2", "--out", str(bpath)]) == 0
    assert main(["solution", "from-brace", str(bpath), "--out", str(spath)]) == 0
    assert main(["solution", "validate", str(spath)]) == 0


def test_fixture_generate_all(tmp_path):
    for name, extra in (("trivial", ["--n", "2"]),
                        ("lyubashenko-shift", ["--n", "3"]),
                        ("lyubashenko-reversal", ["--n", "3"]),
                        ("zp2", ["--p", "2"]),
                        ("z4-nilpotent", [])):
        out = tmp_path / f"{name}.json"
        assert main(["fixture", "generate", name, "--out", str(out)] + extra) == 0


def test_verify_yang_baxter(zp2_file, tmp_path):
    rep = tmp_path / "rep.json"
    assert main(["verify", "yang-baxter", zp2_file, "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["schema"] == "ybx/1"
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_reflection_with_boundary(zp2_file, tmp_path):
    bnd = tmp_path / "bnd.json"
    bnd.write_text(json.dumps({"schema": "ybx/1", "k": [0, 3, 2, 1]}))
    assert main(["verify", "reflection", zp2_file, str(bnd)]) == 0


def test_verify_q_hecke():
    assert main(["verify", "q-hecke", "--n", "2"]) == 0


def test_twist_compute_and_export(zp2_file, tmp_path):
    tw = tmp_path / "twist.json"
    assert main(["twist", "compute", zp2_file, "--out", str(tw)]) == 0
    doc = json.loads(tw.read_text())
    assert doc["schema"] == "ybx/1"
    assert "pairing" in doc
    csv = tmp_path / "twist.csv"
    assert main(["export", str(tw), "--format", "dense-csv",
                 "--out", str(csv)]) == 0
    assert csv.exists()


def test_chain_transfer_report_and_figures(zp2_file, tmp_path):
    rep = tmp_path / "chain.json"
    figs = tmp_path / "figs"
    assert main(["chain", "transfer", "--solution", zp2_file, "--sites", "1",
                 "--checks", "commute,hamiltonian,hecke-span,subalgebra",
                 "--report", str(rep), "--figures", str(figs)]) == 0
    doc = json.loads(rep.read_text())
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert (tmp_path / "chain.tsv").exists()
    pngs = sorted(os.listdir(figs))
    assert pngs == ["braid-operator.png", "hamiltonian-coefficient.png",
                    "transfer-top-coefficient.png"]


def test_chain_empty_check_list(zp2_file):
    # empty check list: empty report, success
    assert main(["chain", "transfer", "--solution", zp2_file, "--sites", "1",
                 "--checks", ""]) == 0


def test_chain_unknown_check_rejected(zp2_file):
    with pytest.raises(SystemExit):
        main(["chain", "transfer", "--solution", zp2_file, "--sites", "1",
              "--checks", "bogus"])


def test_chain_twisted_not_applicable(tmp_path):
    shift = tmp_path / "shift3.json"
    assert main(["fixture", "generate", "lyubashenko-shift", "--n", "3",
                 "--out", str(shift)]) == 0
    rep = tmp_path / "rep.json"
    assert main(["chain", "transfer", "--solution", str(shift), "--sites", "2",
                 "--variant", "twisted", "--checks", "commute",
                 "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["checks"][0]["status"] == "not-applicable"
