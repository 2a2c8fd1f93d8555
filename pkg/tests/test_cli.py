from __future__ import annotations

import json

import pytest

from run_packing_analysis import main, parse_config
from utils.packing import ConfigError
from utils.packing_pipeline import RunConfig, execute, render_report


def _run(capsys, *argv):
    status = main(list(argv) + ["--quiet"])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_parse_count_config() -> None:
    config = parse_config(["count", "--family", "path", "--n", "3", "--q", "3", "--k", "3"])
    assert config.command == "count"
    assert (config.family, config.n, config.q, config.k) == ("path", 3, 3, 3)
    assert config.emit == "json"
    assert config.workers == 1


def test_parse_minimize_config(tmp_path) -> None:
    graph = tmp_path / "g.edges"
    graph.write_text("3 2\n0 1\n1 2\n")
    config = parse_config(
        ["minimize", "--graph", str(graph), "--q", "3", "--k", "2", "--budget", "100000", "--seed", "7"]
    )
    assert config.graph == str(graph)
    assert (config.budget, config.seed) == (100000, 7)


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "--family", "path", "--n", "3", "--q", "2", "--k", "3"], "k-exceeds-q"),
        (["count", "--family", "path", "--n", "3", "--q", "2"], "missing-flag"),
        (["count", "--q", "2", "--k", "1"], "missing-flag"),
        (["count", "--family", "path", "--q", "2", "--k", "1"], "missing-flag"),
        (["count", "--graph", "/no/such/file.edges", "--q", "2", "--k", "1"], "unreadable-file"),
        (["count", "--family", "path", "--n", "3", "--q", "2", "--k", "1", "--bogus"], "usage"),
        (["count", "--family", "hypercube", "--n", "3", "--q", "2", "--k", "1"], "bad-graph-source"),
        (["count", "--family", "random_tree", "--n", "3", "--q", "2", "--k", "1"], "missing-flag"),
        (["count", "--family", "path", "--n", "3", "--q", "2", "--k", "1", "--emit", "csv"], "bad-emit"),
        (["count", "--family", "path", "--n", "3", "--q", "2", "--k", "1", "--emit", "xml"], "bad-emit"),
        (["minimize", "--family", "path", "--n", "3", "--q", "3", "--k", "2", "--budget", "10"], "missing-flag"),
        (["probe", "--family", "path", "--n", "3", "--k", "1"], "missing-flag"),
        (["scan", "--family", "path", "--n", "3", "--q", "2", "--k", "1", "--n-max", "2"], "usage"),
        (["frobnicate"], "usage"),
        ([], "missing-flag"),
    ],
)
def test_parse_config_rejects(argv, code) -> None:
    with pytest.raises(ConfigError) as info:
        parse_config(argv)
    assert info.value.code == code


def test_both_graph_sources_rejected(tmp_path) -> None:
    graph = tmp_path / "g.edges"
    graph.write_text("2 1\n0 1\n")
    with pytest.raises(ConfigError) as info:
        parse_config(["count", "--graph", str(graph), "--family", "path", "--n", "2", "--q", "2", "--k", "1"])
    assert info.value.code == "bad-graph-source"


def test_count_report(capsys) -> None:
    status, out, _ = _run(capsys, "count", "--family", "path", "--n", "3", "--q", "3", "--k", "3")
    assert status == 0
    report = json.loads(out)
    assert report["result"]["value"] == "4"
    assert report["result"]["mode"] == "classical"
    assert report["config"]["command"] == "count"
    assert report["config"]["family"] == "path"
    assert report["version"] == "0.1.0"
    assert report["truncated"] is False
    assert report["timings"] == {}
    names = {check["name"] for check in report["invariant_checks"]}
    assert {"classical_matches_direct", "tree_formula"} <= names
    assert all(check["passed"] for check in report["invariant_checks"])


def test_count_with_assignment(tmp_path, capsys) -> None:
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps({"0": [0, 1, 2], "1": [1, 2, 3]}))
    status, out, _ = _run(
        capsys, "count", "--family", "complete", "--n", "2", "--q", "3", "--k", "2", "--assignment", str(lists)
    )
    assert status == 0
    report = json.loads(out)
    assert report["result"]["mode"] == "assignment"
    assert int(report["result"]["value"]) >= 9


def test_bounds_report(capsys) -> None:
    status, out, _ = _run(capsys, "bounds", "--family", "cycle", "--n", "8", "--q", "3", "--k", "2", "--assume-planar", "--check")
    assert status == 0
    result = json.loads(out)["result"]
    assert result["packing_lower_bound"]["ceiling"] == "41"
    assert result["packing_lower_bound"]["passed"] is True
    assert result["girth8_bound"]["ceiling"] == "3"
    assert result["graph"]["girth"] == 8
    assert result["dz_threshold"] == 23
    assert int(result["measured"]) >= 41


def test_probe_report_and_csv(capsys) -> None:
    argv = ["probe", "--family", "complete", "--n", "2", "--k", "2", "--qmax", "3"]
    status, out, _ = _run(capsys, *argv)
    assert status == 0
    result = json.loads(out)["result"]
    assert result["least_q"] == 2
    assert [row["q"] for row in result["rows"]] == [2, 3]

    status, out, _ = _run(capsys, *argv, "--emit", "csv")
    assert status == 0
    assert out.splitlines() == ["q,classical_count,min_count,gap,exhaustive", "2,1,1,0,True", "3,9,9,0,True"]


def test_probe_truncation_exit_status(capsys) -> None:
    status, out, _ = _run(capsys, "probe", "--family", "path", "--n", "3", "--k", "1", "--qmax", "3", "--pattern-budget", "5")
    assert status == 3
    report = json.loads(out)
    assert report["truncated"] is True
    assert len(report["result"]["rows"]) == 1


def test_minimize_reports(capsys) -> None:
    status, out, _ = _run(capsys, "minimize", "--family", "complete", "--n", "2", "--q", "3", "--k", "2")
    assert status == 0
    result = json.loads(out)["result"]
    assert (result["mode"], result["value"], result["exhaustive"]) == ("exact", "9", True)
    assert result["classical_count"] == "9"

    status, out, _ = _run(
        capsys, "minimize", "--family", "cycle", "--n", "8", "--q", "3", "--k", "2", "--budget", "30", "--seed", "1"
    )
    assert status == 0
    result = json.loads(out)["result"]
    assert result["mode"] == "sampled"
    assert result["exhaustive"] is False
    assert int(result["value"]) >= 3


def test_minimize_truncation(capsys) -> None:
    status, out, _ = _run(capsys, "minimize", "--family", "path", "--n", "3", "--q", "3", "--k", "2", "--pattern-budget", "3")
    assert status == 3
    report = json.loads(out)
    assert report["truncated"] is True
    assert "error" in report["result"]
    assert report["result"]["total_patterns"] > report["result"]["budget"] == 3


def test_minimize_too_many_vertices(capsys) -> None:
    status, out, _ = _run(capsys, "minimize", "--family", "path", "--n", "9", "--q", "1", "--k", "1")
    assert status == 3
    result = json.loads(out)["result"]
    assert "at most 8 vertices" in result["error"]
    assert "total_patterns" not in result and "budget" not in result


def test_packing_number_report(capsys) -> None:
    status, out, _ = _run(capsys, "packing-number", "--family", "path", "--n", "3", "--qmax", "3", "--check")
    assert status == 0
    result = json.loads(out)["result"]
    assert result["value"] == "2"
    assert result["capped"] is False
    assert result["positivity"]["monotone_positivity_failures"] == []


def test_scan_csv(capsys) -> None:
    status, out, _ = _run(capsys, "scan", "--family", "path", "--n", "2", "--n-max", "3", "--q", "2", "--k", "2", "--emit", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "n,m,classical_count,min_count,gap,exhaustive,bound_applicable,bound_ceiling,bound_passed"
    assert lines[1].startswith("2,1,1,1,0,True")
    assert lines[2].startswith("3,2,1,1,0,True")


def test_reports_are_byte_identical(tmp_path) -> None:
    argv = ["minimize", "--family", "cycle", "--n", "8", "--q", "3", "--k", "2", "--budget", "25", "--seed", "5", "--quiet"]
    out = tmp_path / "report.json"
    assert main(argv + ["--out", str(out)]) == 0
    first = out.read_bytes()
    assert main(argv + ["--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_exit_status_for_bad_config(capsys) -> None:
    status, _, err = _run(capsys, "count", "--family", "path", "--n", "3", "--q", "2", "--k", "3")
    assert status == 2
    assert "k-exceeds-q" in err


def test_execute_and_render_directly() -> None:
    config = RunConfig(command="bounds", family="complete", n=2, q=3, k=2, quiet=True)
    status, document = execute(config)
    assert status == 0
    assert document["result"]["tree_value"] == "2"
    assert json.loads(render_report(document)) == document
    with pytest.raises(ConfigError):
        render_report(document, emit="csv")
