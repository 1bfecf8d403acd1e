import json

import pytest

from indmorse.cli import main
from indmorse.io import parse_edge_list, parse_graph6
from indmorse.morse import assumed_certificate
from indmorse.verify import build_corpus, graph_failure, verify_corpus


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_betti_cycle6(capsys):
    code, out = run(capsys, "betti", "--family", "cycle:6")
    assert code == 0 and json.loads(out)["total"] == 2


def test_betti_rational_from_file(capsys, tmp_path):
    f = tmp_path / "k5.txt"
    f.write_text("".join(f"{a} {b}\n" for a in range(5) for b in range(a)))
    code, out = run(capsys, "betti", str(f), "--field", "rational")
    rep = json.loads(out)
    assert code == 0 and rep["betti"] == {"0": 4} and rep["field"] == "rational"


def test_bound_k5_copies(capsys):
    code, out = run(capsys, "bound", "--family", "k5-copies:2")
    rep = json.loads(out)
    assert code == 0
    assert rep["betti_total"] == 16 <= rep["bound"] <= 126 == rep["nominal"]
    assert rep["trace"][0]["lemma"] == "MainRecursion"


def test_matching_emits_pairs(capsys):
    code, out = run(capsys, "matching", "--family", "cycle:5")
    rep = json.loads(out)
    assert code == 0 and rep["valid"] and rep["acyclic"]
    assert len(rep["critical"]) == rep["bound"]


def test_lucas_sweep_message(capsys):
    code, out = run(capsys, "lucas-sweep", "5")
    assert code == 0 and out.strip() == "verified 243 sequences ≤ ℓ(5)=11"


def test_bounds_commands(capsys):
    code, out = run(capsys, "bounds", "table", "--kmax", "10")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 12 and lines[3].split() == ["2", "126", "16"]
    code, out = run(capsys, "bounds", "threshold", "--n", str(2 ** 30), "--chi", "4")
    assert abs(float(out) - 5.158) < 5e-4
    code, out = run(capsys, "bounds", "planar", "--m", "100")
    assert json.loads(out)["vacuous"] is True


def test_analyze_and_verify_corollary(capsys):
    code, out = run(capsys, "analyze", "--family", "petersen")
    assert code == 0 and json.loads(out)["girth"] == 5
    code, out = run(capsys, "verify-corollary", "--family", "petersen")
    rep = json.loads(out)
    assert code == 0 and rep["k"] == 2 and rep["product_bound"] == 126 and rep["passed"]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "betti", "--family", "nope:3")[0] == 2
    assert run(capsys, "betti")[0] == 2
    assert run(capsys, "betti", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "betti", "--family", "complete:3", "--face-cap", "0")[0] == 2
    assert run(capsys, "betti", "--family", "path:20", "--face-cap", "100")[0] == 3
    assert run(capsys, "bounds", "corollary", "--k", "1")[0] == 2


def test_help_lists_families(capsys):
    with pytest.raises(SystemExit):
        main(["bound", "--help"])
    out = capsys.readouterr().out
    for name in ("path:n", "cycle:n", "complete:n", "k5-copies:k", "star:n", "random-gnp", "forest-random"):
        assert name in out


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "out.json"
    assert main(["betti", "--family", "complete:5", "-o", str(dest)]) == 0
    assert json.loads(dest.read_text())["total"] == 4


# corpus verification ---------------------------------------------------------------


def test_corpus_sizes():
    assert len(build_corpus(6)) == 143
    assert sum(1 for g in build_corpus(6) if g.order == 6) == 112
    assert len(build_corpus(0)) == 0
    assert len(build_corpus(7, sample=50, seed=3)) == 50


def test_verify_cap6_passes():
    rep = verify_corpus(6, lucas_max=5, rows_max=12)
    assert rep.passed and rep.checks[0].checked == 143


def test_verify_empty_corpus_is_vacuous(caplog):
    rep = verify_corpus(0, lucas_max=3, rows_max=3)
    assert rep.passed and rep.warnings
    assert "vacuous" in rep.checks[0].detail
    assert any("empty corpus" in r.message for r in caplog.records)


def test_verify_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        dest = tmp_path / f"r{i}.jsonl"
        assert main(["verify", "--vertex-cap", "7", "--sample", "40", "--seed", "11",
                     "--lucas-max", "4", "-o", str(dest)]) == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]
    head = json.loads(outs[0].splitlines()[0])
    assert head["seed"] == 11 and head["passed"]


def test_counterexample_round_trips():
    def lying(g):
        return assumed_certificate(g, 0)

    rep = verify_corpus(5, lucas_max=3, rows_max=3, bound=lying)
    assert not rep.passed
    cx = rep.checks[0].counterexample
    for g in (parse_graph6(cx["graph6"]), parse_edge_list(cx["edges"])):
        assert graph_failure(g, lying) == cx["reason"]
