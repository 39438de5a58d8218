import json

import pytest

from functidim.cli import main
from functidim.graphs import load_graph, wheel_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_to_file_round_trip(tmp_path, capsys):
    out = tmp_path / "w.txt"
    code, _, _ = run(capsys, "gen", "wheel", "6", "-o", str(out))
    assert code == 0
    assert load_graph(out) == wheel_graph(6)


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert code == 0
    assert out.splitlines()[0] == "# name: C_4"


def test_gen_bad_arity():
    with pytest.raises(SystemExit):
        main(["gen", "complete_bipartite", "3"])


def test_dim_path(tmp_path, capsys):
    gpath = tmp_path / "p.txt"
    run(capsys, "gen", "path", "6", "-o", str(gpath))
    code, out, _ = run(capsys, "dim", str(gpath))
    assert code == 0
    assert out.splitlines()[0] == "dimension 1"


def test_dim_json(tmp_path, capsys):
    gpath = tmp_path / "c.txt"
    run(capsys, "gen", "cycle", "6", "-o", str(gpath))
    code, out, _ = run(capsys, "dim", str(gpath), "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["status"] == "exact"
    assert payload["dimension"] == 2
    assert len(payload["witness"]) == 2


def composed_cycle_constant(tmp_path, capsys, n):
    gpath = tmp_path / "c.txt"
    run(capsys, "gen", "cycle", str(n), "-o", str(gpath))
    cpath = tmp_path / "composed.txt"
    run(capsys, "functi", str(gpath), ",".join(["1"] * n), "-o", str(cpath))
    return cpath


def test_dim_budget_exhaustion(tmp_path, capsys):
    cpath = composed_cycle_constant(tmp_path, capsys, 9)
    code, out, _ = run(capsys, "dim", str(cpath), "--budget", "1", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["status"] == "unknown"
    assert payload["lower_bound"] <= payload["upper_bound"]


def test_dim_env_budget(tmp_path, capsys, monkeypatch):
    cpath = composed_cycle_constant(tmp_path, capsys, 9)
    monkeypatch.setenv("FUNCTIDIM_BUDGET", "1")
    code, out, _ = run(capsys, "dim", str(cpath), "--json")
    assert json.loads(out)["status"] == "unknown"


def test_dim_missing_file(capsys):
    code, _, err = run(capsys, "dim", "/nonexistent/graph.txt")
    assert code == 2
    assert "error" in err


def test_functi_literal(tmp_path, capsys):
    gpath = tmp_path / "c.txt"
    run(capsys, "gen", "cycle", "3", "-o", str(gpath))
    out_path = tmp_path / "composed.txt"
    code, out, _ = run(capsys, "functi", str(gpath), "1,1,1", "-o", str(out_path))
    assert code == 0
    composed = load_graph(out_path)
    assert composed.order == 6 and composed.size == 9
    assert "kind constant" in out


def test_functi_from_function_file(tmp_path, capsys):
    gpath = tmp_path / "c.txt"
    run(capsys, "gen", "cycle", "4", "-o", str(gpath))
    fpath = tmp_path / "f.txt"
    fpath.write_text("# kind: permutation\n2,3,4,1\n")
    code, out, _ = run(capsys, "functi", str(gpath), str(fpath), "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["order"] == 8 and payload["kind"] == "permutation"


def test_construct_complete_constant(capsys):
    code, out, _ = run(capsys, "construct", "T8_complete_constant", "4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["verified"] is True
    assert payload["construction"]["claimed_size"] == 5


def test_construct_cycle_general_with_function(capsys):
    code, out, _ = run(capsys, "construct", "T11_cycle_general", "6", "1,1,2,2,3,3")
    assert code == 0
    assert "verified True" in out


def test_construct_two_clique(capsys):
    code, out, _ = run(capsys, "construct", "TwoClique", "3", "4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["construction"]["claimed_size"] == 4  # 3 + 4 - 3


def test_construct_unknown_id(capsys):
    with pytest.raises(SystemExit):
        main(["construct", "Fig4_six_classes", "4"])


def test_verify_text_and_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "Wheel", "--range", "3..6")
    assert code == 0
    assert "Wheel: 4 pass, 0 fail" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "T8_complete_constant", "--range", "3..4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["summary"]["fail"] == 0
    assert {row["instance"] for row in payload["rows"]} == {"n=03", "n=04"}


def test_verify_csv_output_file(tmp_path, capsys):
    out_file = tmp_path / "report.csv"
    code, out, _ = run(
        capsys, "verify", "Prism", "--range", "3..5", "--csv", "-o", str(out_file)
    )
    assert code == 0
    assert out_file.read_text() == out


def test_verify_bad_range(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "Wheel", "--range", "3-6"])
