from __future__ import annotations

import json

import pytest

from cdgraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "enumerate", "--order", "4")
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "enumerate", "--order", "5", "--connected")
    assert len(out.split()) == 21


def test_enumerate_bad_order(capsys, data_dir):
    code, _, err = run(capsys, "--data-dir", str(data_dir), "enumerate", "--order", "9")
    assert code == 2 and "order" in err


def test_status(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "status", "B2", "--trace")
    assert code == 0
    assert "non-occurring [diameter3]: |rho3|=2<3" in out


def test_status_graph6(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "status", "Bw")
    assert code == 0 and "occurring [direct-product]" in out


def test_status_bad_input(capsys, data_dir):
    code, _, err = run(capsys, "--data-dir", str(data_dir), "status", "!!")
    assert code == 2 and err.startswith("error:")


def test_admissible(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "admissible", "C18", "4", "--strong")
    assert code == 0 and "p4 is strongly admissible" in out
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "admissible", "C18", "2")
    assert code == 1 and "p2 is not admissible" in out


def test_admissible_vertex_range(capsys, data_dir):
    code, _, _ = run(capsys, "--data-dir", str(data_dir), "admissible", "C18", "0")
    assert code == 2


def test_classify_json(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "classify", "--json")
    assert code == 0
    assert json.loads(out)["summary"]["unknown"] == 44


def test_render_labels(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "render", "D1", "--labels")
    assert code == 0 and '"97685839";' in out
    code, _, _ = run(capsys, "--data-dir", str(data_dir), "render", "B15", "--labels")
    assert code == 2


def test_construct(capsys, data_dir):
    code, out, _ = run(capsys, "--data-dir", str(data_dir), "construct", "B4")
    assert code == 0 and "2^33*3*23*89*599479" in out and "matches B4: True" in out
    code, _, _ = run(capsys, "--data-dir", str(data_dir), "construct", "C30")
    assert code == 2


def test_missing_data_dir(capsys, tmp_path):
    code, _, err = run(capsys, "--data-dir", str(tmp_path / "nope"), "verify-paper")
    assert code == 2


def test_verify_failure_exit_code(capsys, tmp_path, data_dir):
    import shutil

    d = tmp_path / "data"
    shutil.copytree(data_dir, d)
    (d / "lemma_checks.json").write_text((d / "lemma_checks.json").read_text().replace('"b-ii", "vertices": [1, 2, 3, 5, 6, 7], "survivors": []', '"b-ii", "vertices": [1, 2, 3, 5, 6, 7], "survivors": [[[1], [2]]]'))
    code, out, _ = run(capsys, "--data-dir", str(d), "verify-paper")
    assert code == 1 and "[FAIL] 6." in out
