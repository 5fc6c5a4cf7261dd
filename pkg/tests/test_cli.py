import io
import json
import logging

import pytest

from negacyclic import __version__, cli
from negacyclic.cli import CommandSpec, main, parse_generator, run
from negacyclic.config import Settings
from negacyclic.errors import InvariantViolation
from negacyclic.field import get_field
from negacyclic.ring import RPoly


@pytest.fixture(autouse=True)
def cli_logging():
    yield
    package = logging.getLogger("negacyclic")
    for handler in list(package.handlers):
        if getattr(handler, "negacyclic_cli", False):
            package.removeHandler(handler)
    package.setLevel(logging.NOTSET)


def test_parse_generator():
    element = parse_generator("0;0;0;(x+1)^4", 3, 9)
    assert element.n == 9
    assert element.f3 == get_field(3).poly((1, 1)) ** 4
    assert isinstance(element, RPoly)


def test_analyze(capsys):
    argv = ["analyze", "--p", "5", "--n", "5", "--gen", "0;1;0;0", "--gen", "0;0;1"]
    assert main(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rank"] == 10
    assert report["dim_fp"] == 15
    assert report["rank_proven"] is True
    assert report["is_free"] is False
    assert report["reduced_generators"] == ["0;1;0;0", "0;0;1;0"]
    assert len(report["spanning_set"]) == 10
    assert report["distance"]["d_oracle"] == 1
    assert all(report["properties"]["verdicts"].values())
    assert "coprime_form" not in report


def test_analyze_coprime_length(capsys):
    assert main(["analyze", "--p", "5", "--n", "3", "--gen", "0;1;1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["coprime_form"].startswith("none: ")
    assert report["distance"]["d_formula"] == "not-applicable"

    assert main(["analyze", "--p", "5", "--n", "3", "--gen", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["coprime_form"] == ["1;1;0;0", "0;0;1;1"]
    assert report["rank"] == 3
    assert report["rank_proven"] is False


def test_analyze_formats(capsys):
    argv = ["analyze", "--p", "3", "--n", "9", "--gen", "0;0;0;(x+1)^4"]
    assert main(argv + ["--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# p=3 n=9 seed=0"
    assert lines[1].startswith("p,n,t1,t2,t3,t4,")
    assert len(lines) == 3

    assert main(argv + ["--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "rank: 5\n" in out
    assert "dim_fp: 5\n" in out


def test_distance(capsys):
    assert main(["distance", "--p", "3", "--n", "9", "--gen", "0;0;0;(x+1)^4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["d_oracle"] == 3
    assert report["d_formula"] == 4
    assert report["agreement"] is False
    assert report["hypothesis_met"] is False


def test_distance_over_budget(capsys):
    argv = ["distance", "--p", "5", "--n", "5", "--gen", "0;0;0;(x+1)^4"]
    argv += ["--support-budget", "1", "--enum-budget", "1"]
    assert main(argv) == 0
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    assert report["d_oracle"] == "skipped(budget)"
    assert report["d_formula"] == 5
    assert "skipped" in captured.err


def test_catalog_csv(capsys):
    argv = ["catalog", "--p", "3", "--n", "9", "--family", "uv-only", "--format", "csv"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    lines = first.splitlines()
    assert lines[0] == "# p=3 n=9 seed=0 family=uv-only"
    assert lines[1].split(",")[-1] == "source"
    assert len(lines) == 2 + 8

    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_catalog_json(capsys):
    argv = ["catalog", "--p", "5", "--n", "1", "--format", "json"]
    assert main(argv) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["header"] == {"p": 5, "n": 1, "seed": 0, "family": "all"}
    assert len(document["entries"]) == 9


def test_tables(capsys):
    assert main(["tables", "--table", "1", "--samples", "1"]) == 0
    verdicts = json.loads(capsys.readouterr().out)
    assert [v["row"] for v in verdicts] == [1, 2, 3, 4, 5]
    assert {v["verdict"] for v in verdicts} == {"match"}


def test_tables_findings_keep_exit_status(capsys):
    assert main(["tables", "--table", "3", "--samples", "0"]) == 0
    by_row = {v["row"]: v for v in json.loads(capsys.readouterr().out)}
    assert by_row[12]["verdict"].startswith("mismatch")
    assert by_row[17]["verdict"] == "match"


def test_verify(capsys):
    argv = ["verify", "--p", "3", "--n", "3", "--count", "3", "--format", "text"]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "check: generators_in_code\npassed: 3\nchecked: 3\n" in out


@pytest.mark.parametrize(
    "argv,status",
    [
        (["analyze", "--p", "5", "--n", "4", "--gen", "1"], 2),
        (["analyze", "--p", "4", "--n", "5", "--gen", "1"], 2),
        (["analyze", "--p", "5", "--n", "5", "--gen", "x^"], 2),
        (["analyze", "--p", "5", "--n", "5", "--gen", "1;2;3;4;5"], 2),
        (["catalog", "--p", "3", "--n", "5", "--divisor-budget", "1"], 3),
        (["catalog", "--p", "3", "--n", "6"], 2),
        (["tables", "--p", "3"], 2),
        (["tables", "--n", "7"], 2),
    ],
)
def test_error_status(argv, status, capsys):
    assert main(argv) == status
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "ERROR" in captured.err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--p", "5", "--n", "5"],
        ["distance", "--n", "5", "--gen", "1"],
        ["catalog", "--p", "3", "--n", "3", "--family", "cyclic"],
        ["verify", "--p", "3", "--n", "3", "--count", "0"],
        ["verify", "--p", "3", "--n", "3", "--samples", "-1"],
        ["bogus"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip() == __version__


def test_run_with_stream():
    stream = io.StringIO()
    spec = CommandSpec("distance", 5, 5, ["0;0;0;(x+1)^2"], format="csv")
    assert run(spec, stream) == 0
    lines = stream.getvalue().splitlines()
    assert lines[0].startswith("d_oracle,d_formula,")
    assert lines[1].startswith("3,3,")


def test_internal_errors(monkeypatch):
    def invariant(spec, stream):
        raise InvariantViolation("broken")

    def crash(spec, stream):
        raise RuntimeError("boom")

    spec = CommandSpec("verify", 3, 3, [], settings=Settings())
    monkeypatch.setitem(cli.RUNNERS, "verify", invariant)
    assert run(spec, io.StringIO()) == 4
    monkeypatch.setitem(cli.RUNNERS, "verify", crash)
    assert run(spec, io.StringIO()) == 4
