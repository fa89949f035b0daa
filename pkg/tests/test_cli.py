import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from specexcess.cli import main
from specexcess.generators import cycle, kneser
from specexcess.graph import encode_graph6, parse_graph6


def run(argv, capsys, monkeypatch, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_then_certify(capsys, monkeypatch):
    code, out, _ = run(["generate", "kneser", "5", "2"], capsys, monkeypatch)
    assert code == 0 and out.strip() == encode_graph6(kneser(5, 2))
    code, out, _ = run(["certify", "-"], capsys, monkeypatch, stdin=out)
    assert code == 0
    assert "generalized-odd {3,2;1,1}" in out


def test_certify_bipartite_fails(capsys, monkeypatch):
    code, out, _ = run(["generate", "complete-bipartite", "3", "3"], capsys, monkeypatch)
    code, out, _ = run(["certify", "-", "--quiet"], capsys, monkeypatch, stdin=out)
    assert code == 1
    assert out.strip().endswith("precondition-failed {3,2;1,3}")


def test_analyze_triangle(capsys, monkeypatch):
    code, out, _ = run(["--json", "analyze", "-"], capsys, monkeypatch, stdin="Bw\n")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 1 and data["pi0"] == "3"
    assert data["hoffman"] == ["1", "1"]
    assert data["spectral_excess"] == "2"


def test_analyze_json_round_trip(capsys, monkeypatch):
    code, out, _ = run(["analyze", "--json", "-"], capsys, monkeypatch, stdin="I?LRCecq?\nDUW\n")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["graph6"] for r in rows] == ["I?LRCecq?", "DUW"]
    assert Fraction(rows[0]["lemma_average_excess"]) == 6
    assert rows[1]["min_poly"] == ["2", "-3", "-1", "1"]
    assert json.loads(json.dumps(rows[0], sort_keys=True)) == rows[0]


def test_malformed_graph6_names_line(capsys, monkeypatch):
    code, out, err = run(["analyze", "-"], capsys, monkeypatch, stdin="Bw\nBx!\n")
    assert code == 2
    assert "line 2" in err and "malformed graph6" in err
    assert out.startswith("Bw")


def test_analyze_nonregular_is_input_error(capsys, monkeypatch):
    code, _, err = run(["analyze", "-"], capsys, monkeypatch, stdin="Bg\n")
    assert code == 2 and "not regular" in err


def test_usage_errors(capsys, monkeypatch):
    assert run(["frobnicate"], capsys, monkeypatch)[0] == 2
    assert run(["certify"], capsys, monkeypatch)[0] == 2
    assert run(["generate", "kneser", "5"], capsys, monkeypatch)[0] == 2
    assert run(["generate", "nosuch", "5"], capsys, monkeypatch)[0] == 2
    assert run(["generate", "kneser", "2", "3"], capsys, monkeypatch)[0] == 2
    assert run(["certify", "/no/such/file"], capsys, monkeypatch)[0] == 2
    assert run(["search", "proposition-adjacency", "--n-max", "9"], capsys, monkeypatch)[0] == 2


def test_search_json(capsys, monkeypatch):
    code, out, err = run(
        ["search", "diameter2-counterexample", "--n-max", "13", "--n-min", "13",
         "--family", "circulant", "--json"],
        capsys, monkeypatch,
    )
    assert code == 0
    found = [json.loads(line) for line in out.splitlines()]
    assert encode_graph6(kneser(5, 2)) not in {f["graph6"] for f in found}
    assert all(f["properties"]["adjacency_distinct_eigenvalues"] >= 4 for f in found)
    assert "examined" in err


def test_search_proposition_passes(capsys, monkeypatch):
    code, out, _ = run(["search", "proposition-laplacian", "--n-max", "6", "--quiet"], capsys, monkeypatch)
    assert code == 0 and out == ""


def test_search_with_source(tmp_path, capsys, monkeypatch):
    src = tmp_path / "in.g6"
    src.write_text(encode_graph6(kneser(5, 2)) + "\n")
    code, out, err = run(
        ["search", "proposition-adjacency", "--n-max", "10", "--source", str(src)], capsys, monkeypatch
    )
    assert code == 0 and "positives 1" in err


def test_verify_paper_subset(capsys, monkeypatch):
    code, out, _ = run(["verify-paper", "--criteria", "2,9"], capsys, monkeypatch)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(line.startswith("[PASS]") for line in lines)


def test_threads_keep_order(capsys, monkeypatch):
    stdin = "\n".join(["Bw", "I?LRCecq?", "DUW"] * 3) + "\n"
    code, out, _ = run(["certify", "-", "--quiet", "--threads", "2"], capsys, monkeypatch, stdin=stdin)
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == ["Bw", "I?LRCecq?", "DUW"] * 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "specexcess", "generate", "cycle", "7"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout.strip()) == cycle(7)


@pytest.mark.parametrize("family, params", [("folded-cube", ["5"]), ("hypercube", ["3"]), ("circulant", ["13", "1", "5"])])
def test_generate_certify_never_crashes(family, params, capsys, monkeypatch):
    code, out, _ = run(["generate", family, *params], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["--json", "certify", "-"], capsys, monkeypatch, stdin=out)
    assert code in (0, 1)
    assert json.loads(out)["verdict"]
