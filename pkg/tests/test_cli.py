import io

import pytest

from groupirr import path_graph, star_graph
from groupirr.cli import RunConfig, main, run
from groupirr.graphs import write_edge_list


@pytest.fixture
def p6_file(tmp_path):
    path = tmp_path / "p6.txt"
    write_edge_list(path, path_graph(6))
    return str(path)


@pytest.fixture
def star6_file(tmp_path):
    path = tmp_path / "star6.txt"
    write_edge_list(path, star_graph(6))
    return str(path)


def run_cli(argv):
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_strength_p6(p6_file):
    code, out = run_cli(["strength", p6_file])
    assert code == 0
    assert out == "7 N_MOD4_2\n"


def test_strength_tsv(p6_file):
    code, out = run_cli(["strength", p6_file, "--format", "tsv"])
    assert code == 0 and out == "7\tN_MOD4_2\n"


def test_label_impossible_clause(star6_file):
    code, out = run_cli(["label", star6_file, "Z2xZ2xZ2"])
    assert code == 2
    assert "clause: 2^q = n+2" in out


def test_label_verify_round_trip(p6_file, tmp_path):
    code, out = run_cli(["label", p6_file, "Z7"])
    assert code == 0
    lab_file = tmp_path / "lab.txt"
    lab_file.write_text(out)  # '#' degree rows are ignored on re-read
    code, out2 = run_cli(["verify", p6_file, "Z7", str(lab_file)])
    assert code == 0 and out2 == "irregular\n"


def test_verify_detects_collision(p6_file, tmp_path):
    lab_file = tmp_path / "zeros.txt"
    lab_file.write_text("\n".join(f"{u} {u + 1} (0)" for u in range(5)) + "\n")
    code, out = run_cli(["verify", p6_file, "Z7", str(lab_file)])
    assert code == 3
    assert out.startswith("collision 0 1")


def test_oracle_exit_codes(p6_file):
    code, out = run_cli(["oracle", p6_file, "Z6"])
    assert code == 2 and out == "not-exists\n"
    code, out = run_cli(["oracle", p6_file, "Z7"])
    assert code == 0 and out == "exists\n"
    code, out = run_cli(["oracle", p6_file, "Z7", "--budget", "100"])
    assert code == 4 and out.startswith("budget-exceeded")


def test_spc_output(tmp_path):
    path = tmp_path / "tree.txt"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out = run_cli(["spc", str(path), "0", "3"])
    assert code == 0
    assert "pair 0 3 length 3: 0 1 2 3" in out
    assert "total 3" in out and "certificate 3" in out


def test_spc_rejects_non_tree(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out = run_cli(["spc", str(path), "0", "1"])
    assert code == 1 and out.startswith("error:")


def test_malformed_inputs(tmp_path):
    missing = str(tmp_path / "nope.txt")
    code, out = run_cli(["strength", missing])
    assert code == 1
    graph = tmp_path / "p4.txt"
    write_edge_list(graph, path_graph(4))
    code, out = run_cli(["label", str(graph), "Q9"])
    assert code == 1


def test_determinism(p6_file):
    runs = [run_cli(["label", p6_file, "Z8"]) for _ in range(2)]
    assert runs[0] == runs[1]
    sweeps = [run_cli(["sweep", "--max-n", "5", "--extra-orders", "1"]) for _ in range(2)]
    assert sweeps[0] == sweeps[1]


def test_sweep_passes():
    code, out = run_cli(["sweep", "--max-n", "6"])
    assert code == 0
    assert "sweep PASS" in out
    # exceptional rows are present and judged PASS via their clause
    assert any("impossible[" in line and line.endswith("PASS") for line in out.splitlines())


def test_bench_smoke():
    buf = io.StringIO()
    cfg = RunConfig(subcommand="bench", sizes=[500, 1000], repeats=2, seed=1)
    code = run(cfg, out=buf)
    assert code == 0
    lines = buf.getvalue().splitlines()
    assert lines[0].startswith("n 500 median") and lines[1].startswith("n 1000 median")
