from __future__ import annotations

import io
import json
import subprocess
import sys
import time

from graphbialg import checks
from graphbialg.checks import CheckSpec, run_check
from graphbialg.cli import main


def run(argv, stdin: str = "", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_invariant_tutte_text():
    code, out = run(["invariant", "--which", "tutte", "Bw"])
    assert code == 0 and out == "Bw\tX^2 + X + Y\n"


def test_invariant_json_schema():
    code, out = run(["invariant", "--which", "fk", "--format", "json", "A_"])
    doc = json.loads(out)
    assert doc == {
        "graph": "A_",
        "invariant": "fk",
        "terms": [{"dx": 1, "dy": 1, "coeff": 1}, {"dx": 2, "dy": 0, "coeff": 1}],
    }


def test_invariant_csv():
    code, out = run(["invariant", "--which", "chromatic", "--format", "csv", "A_"])
    assert out.splitlines() == ["graph,invariant,dx,dy,coeff", "A_,chromatic,1,0,-1", "A_,chromatic,2,0,1"]


def test_invariant_reads_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("A_\n\nBw\n")
    code, out = run(["invariant", "--which", "chromatic", str(f)])
    assert code == 0 and out.splitlines() == ["A_\tX^2 - X", "Bw\tX^3 - 3*X^2 + 2*X"]


def test_empty_input(monkeypatch):
    assert run(["invariant"], "", monkeypatch) == (0, "")


def test_malformed_line(monkeypatch, capsys):
    code, out = run(["invariant"], "B~~\n", monkeypatch)
    assert code == 2 and out == ""
    assert "line 1" in capsys.readouterr().err


def test_malformed_second_line(monkeypatch, capsys):
    code, _ = run(["invariant"], "A_\nzz\n", monkeypatch)
    assert code == 2 and "line 2" in capsys.readouterr().err


def test_usage_error():
    assert run(["invariant", "--which", "nope", "A_"])[0] == 2
    assert run(["verify", "--max-vertices", "9"])[0] == 2


def test_coproduct_term_counts():
    _, out = run(["coproduct", "--which", "contraction", "--format", "json", "A_"])
    assert len(json.loads(out)["terms"]) == 2
    _, out = run(["coproduct", "--which", "bipartition", "--format", "json", "@"])
    assert len(json.loads(out)["terms"]) == 2
    _, out = run(["coproduct", "--which", "contraction", "--format", "json", "B?"])
    assert len(json.loads(out)["terms"]) == 1


def test_coproduct_oriented():
    # single arc 0->1 in digraph6
    from graphbialg.formats import emit_digraph6
    from graphbialg.graphs import OrientedGraph

    arc = emit_digraph6(OrientedGraph(2, [(0, 1)]))
    _, out = run(["coproduct", "--format", "json", arc])
    assert len(json.loads(out)["terms"]) == 3


def test_antipode_and_orientations():
    _, out = run(["antipode", "--format", "json", "A_"])
    terms = {t["graph6"]: t["coeff"] for t in json.loads(out)["antipode"]}
    assert terms == {"A?": 2, "A_": -1}
    _, out = run(["orientations", "--which", "po-tac", "Bw"])
    assert out == "Bw\t13\n"
    _, out = run(["orientations", "--which", "strong", "Bw"])
    assert out == "Bw\t2\n"


def test_verify_tiny_all_fast():
    t0 = time.perf_counter()
    code, out = run(["verify", "--suite", "all", "--max-vertices", "2"])
    assert code == 0 and out.endswith("ALL PASS\n")
    assert time.perf_counter() - t0 < 1


def test_verify_deterministic():
    a = run(["verify", "--suite", "antipode", "--max-vertices", "4", "--format", "json"])
    b = run(["verify", "--suite", "antipode", "--max-vertices", "4", "--format", "json", "--jobs", "2"])
    assert a == b and a[0] == 0


def test_verify_failure_carries_counterexample(monkeypatch):
    spec = CheckSpec("broken", lambda g: g.num_edges < 2)
    monkeypatch.setitem(checks.SUITES, "axioms", [spec])
    monkeypatch.setitem(checks.CHECKS, "axioms.broken", spec)
    code, out = run(["verify", "--suite", "axioms", "--max-vertices", "3"])
    assert code == 1
    lines = [l for l in out.splitlines() if l.startswith("COUNTEREXAMPLE")]
    assert lines
    g6 = lines[0].split("\t")[2]
    assert run_check("axioms.broken", g6).status == "fail"


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "graphbialg", "invariant", "--which", "tutte", "Bw"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert r.returncode == 0 and r.stdout == "Bw\tX^2 + X + Y\n"
