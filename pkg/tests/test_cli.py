import json
import subprocess
import sys

import pytest

from arbogray import cli
from arbogray.errors import InternalInconsistency


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parity_graph13(capsys):
    code, out, _ = run(capsys, "parity", "fig-graph13")
    assert code == 0
    assert "classes 7/6" in out and "|det|=1" in out
    assert "Hamiltonian cycle impossible" in out
    assert "  7\t4->1\t-1" in out


def test_parity_refuses_indegree_three(capsys):
    code, _, err = run(capsys, "parity", "bidirected-complete(4)")
    assert code == 2 and "indegree" in err


def test_hamsearch(capsys):
    code, out, _ = run(capsys, "hamsearch", "fig-graph13", "--cycle")
    assert code == 0 and out.strip() == "none"
    code, out, _ = run(capsys, "hamsearch", "fig-graph13")
    lines = out.splitlines()
    assert lines[0] == "path 13" and len(lines) == 14


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "intro-3vertex")
    assert code == 0 and out == "count 2\n0 1\n0 2\n"


def test_graph_and_file_instances(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "fig-contraction")
    assert out == "4 4 0\n0 1\n0 2\n1 3\n2 3\n"
    f = tmp_path / "g.txt"
    f.write_text("# contraction figure\n" + out)
    code, out2, _ = run(capsys, "enumerate", str(f))
    assert code == 0 and out2.startswith("count 2")


def test_graycode_then_verify(capsys, tmp_path):
    target = tmp_path / "p.json"
    code, out, _ = run(capsys, "graycode", "fig-bipartite7", "--json", str(target))
    assert code == 0 and "7 arborescences" in out
    assert json.loads(target.read_text())["n_steps"] == 7
    code, out, _ = run(capsys, "verify", "fig-bipartite7", str(target))
    assert code == 0 and out.rstrip().endswith("OK")


def test_delta_output_verifies(capsys, tmp_path):
    target = tmp_path / "p.txt"
    code, _, _ = run(capsys, "graycode", "bidirected-complete(4)", "--delta", str(target))
    assert code == 0 and len(target.read_text().splitlines()) == 16
    code, out, _ = run(capsys, "verify", "bidirected-complete(4)", str(target))
    assert code == 0


def test_verify_rejects_bad_paths(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"steps": [[0, 1, 2], [0, 1, 2]]}))
    code, out, _ = run(capsys, "verify", "fig-bipartite7", str(bad))
    assert code == 1 and "FAILED" in out
    junk = tmp_path / "junk.txt"
    junk.write_text("0 1 2\nnot a delta\n")
    code, _, err = run(capsys, "verify", "fig-bipartite7", str(junk))
    assert code == 1 and "cannot read" in err


def test_graycode_refuses_without_oracle(capsys):
    code, out, err = run(capsys, "graycode", "fig-graph13")
    assert code == 2 and "refused" in err and out == ""
    code, out, _ = run(capsys, "graycode", "fig-graph13", "--oracle")
    assert code == 0 and json.loads(out)["n_steps"] == 13


def test_oracle_without_path(capsys, monkeypatch):
    # no small flip graph without a Hamiltonian path is known, so fake the search
    monkeypatch.setattr(cli, "find_hamiltonian_path_bruteforce", lambda fg, budget: None)
    code, out, err = run(capsys, "graycode", "fig-graph13", "--oracle")
    assert code == 2 and "no Hamiltonian path" in err and out == ""


def test_budget_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, "enumerate", "bidirected-complete(6)", "--budget", "10")
    assert code == 3 and "budget" in err
    monkeypatch.setenv("ARBOGRAY_BUDGET", "10")
    code, _, _ = run(capsys, "enumerate", "bidirected-complete(6)")
    assert code == 3
    monkeypatch.setenv("ARBOGRAY_BUDGET", "lots")
    code, _, _ = run(capsys, "enumerate", "intro-3vertex")
    assert code == 1


def test_malformed_inputs(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 2 0\n0 1\n2 2\n")
    code, _, err = run(capsys, "graph", str(f))
    assert code == 1 and "line 3" in err
    code, _, _ = run(capsys, "graph", "no-such-instance")
    assert code == 1


def test_inconsistency_exit_code(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise InternalInconsistency("forced", [{"case": "pivot-pair"}])

    monkeypatch.setattr(cli, "gray_code_clique_support", boom)
    code, _, err = run(capsys, "graycode", "fig-bipartite7")
    assert code == 4 and "forced" in err and "pivot-pair" in err


def test_flipgraph_dot(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "flipgraph", "fig-flipG1", "--dot", str(dot))
    assert code == 0 and "nodes 6" in out and "degrees 1 2 2 3 3 3" in out
    assert dot.read_text().startswith("graph flipgraph {")
    assert (tmp_path / "g.dot.legend").read_text().count("\n") == 6


def test_pipe_end_to_end():
    exe = [sys.executable, "-m", "arbogray.cli"]
    made = subprocess.run(exe + ["graycode", "fig-bipartite7"], capture_output=True, text=True,
                          check=True)
    checked = subprocess.run(exe + ["verify", "fig-bipartite7", "-"], input=made.stdout,
                             capture_output=True, text=True)
    assert checked.returncode == 0, checked.stdout + checked.stderr


@pytest.mark.parametrize("name", ["fig-bipartite7", "intro-3vertex", "bidirected-complete(5)",
                                  "random-tournament(7, seed=1)", "bidirected-cycle(3)"])
def test_graycode_verify_matrix(capsys, tmp_path, name):
    target = tmp_path / "p.json"
    assert run(capsys, "graycode", name, "--json", str(target))[0] == 0
    assert run(capsys, "verify", name, str(target))[0] == 0
