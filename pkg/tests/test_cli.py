"""Command-line interface: subcommands, output stability, exit codes."""

import json

import pytest

from lexhyp.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_delta_fraction_output(capsys):
    code, out, _ = run_cli(capsys, "delta", "cycle:5")
    assert code == 0
    assert out == "5/4\n"


def test_delta_json(capsys):
    code, out, _ = run_cli(capsys, "delta", "cycle:4", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["value"] == "1"
    assert blob["quarters"] == 4


def test_delta_grid8(capsys):
    code, out, _ = run_cli(capsys, "delta", "cycle:5", "--grid", "8")
    assert code == 0
    assert out == "5/4\n"


def test_delta_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "delta", "cycle:6", "--json")
    _, out2, _ = run_cli(capsys, "delta", "cycle:6", "--json")
    assert out1 == out2


def test_delta_of_composed_product(capsys):
    code, out, _ = run_cli(capsys, "delta", "lex(path:4,path:2)")
    assert code == 0
    assert out == "3/2\n"


def test_dist_command(capsys):
    code, out, _ = run_cli(capsys, "dist", "path:3", "path:4", "0,0", "0,3")
    assert code == 0
    assert out == "2\n"
    code, out, _ = run_cli(capsys, "dist", "path:3", "path:4", "0,0", "2,3")
    assert out == "2\n"


def test_dist_trivial_factor_rejected(capsys):
    code, _, err = run_cli(capsys, "dist", "trivial", "path:4", "0,0", "0,3")
    assert code == 1
    assert "error" in err


def test_product_to_stdout_and_file(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "product", "lex", "path:2", "path:2")
    assert code == 0
    assert len(out.strip().splitlines()) == 6  # K4

    target = tmp_path / "k4.edges"
    code, _, _ = run_cli(capsys, "product", "lex", "path:2", "path:2", "--out", str(target))
    assert code == 0
    assert target.read_text().strip().splitlines() == out.strip().splitlines()


def test_gspec_file_reference(tmp_path, capsys):
    f = tmp_path / "c5.edges"
    f.write_text("0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run_cli(capsys, "delta", f"@{f}")
    assert code == 0
    assert out == "5/4\n"


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "cycle:5")
    assert code == 0
    assert out == "not in F\n"
    code, out, _ = run_cli(capsys, "classify", "cycle:6")
    assert code == 0
    assert out.startswith("in F (member 0")


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "cycle:6", "--json")
    blob = json.loads(out)
    assert blob["in_family"] is True
    assert blob["witness"]["subset"] == [0, 1, 2, 3, 4, 5]


def test_tree_delta(capsys):
    code, out, _ = run_cli(capsys, "tree-delta", "path:4", "path:2")
    assert code == 0
    assert out == "3/2 (case: diam G1 >= 3)\n"


def test_tree_delta_rejects_non_tree(capsys):
    code, _, err = run_cli(capsys, "tree-delta", "cycle:4", "path:2")
    assert code == 1
    assert "tree" in err


def test_catalog_export(tmp_path, capsys):
    outdir = tmp_path / "cat"
    code, out, _ = run_cli(capsys, "catalog", "--dedup", "--out", str(outdir))
    assert code == 0
    index = json.loads((outdir / "index.json").read_text())
    assert index["deduplicated"] is True
    assert len(index["members"]) == 40
    first = index["members"][0]
    assert set(first) == {"id", "family", "vertex_count", "chords", "file"}
    assert (outdir / first["file"]).exists()
    # member files parse back as graphs
    from lexhyp import parse_graph
    g = parse_graph((outdir / first["file"]).read_text())
    assert g.vertex_count == first["vertex_count"]


def test_catalog_export_raw(tmp_path, capsys):
    outdir = tmp_path / "raw"
    code, _, _ = run_cli(capsys, "catalog", "--out", str(outdir))
    assert code == 0
    index = json.loads((outdir / "index.json").read_text())
    assert len(index["members"]) == 68


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "delta", "cycle:2")
    assert code == 1
    code, _, err = run_cli(capsys, "delta", "0 1 2")
    assert code == 1


def test_cap_exit_code(capsys):
    code, _, err = run_cli(capsys, "delta", "cycle:6", "--cap", "1")
    assert code == 2


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--seed", "3", "--pairs", "4",
                           "--max-vertices", "5",
                           "--checks", "cycle_delta_n_4,tree_delta_zero,dist_formula")
    assert code == 0
    assert "PASS" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--seed", "3", "--pairs", "4",
                           "--max-vertices", "5", "--checks", "cycle_delta_n_4", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["cycle_delta_n_4"]["status"] == "pass"
