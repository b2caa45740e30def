"""Verification-suite front end: configs, reports, determinism, exit codes."""

import json

import pytest

from diffalg.cli import (
    SUITE_NAMES,
    CheckConfig,
    InvalidRank,
    Report,
    UnknownSuite,
    main,
    parse,
    run_suite,
    serialize,
)
from diffalg.poly import VarContext, parse_poly

ALL_SUITES = (
    "daha-relations",
    "shift-iso",
    "e-lambda",
    "abelian-zalg",
    "localization",
    "splitting",
    "factorization",
    "delta-bases",
    "ideal-membership",
    "spanning",
    "springer-module",
    "chain-example",
)


def test_registered_suite_names():
    assert SUITE_NAMES == ALL_SUITES


def test_config_validation():
    with pytest.raises(InvalidRank):
        CheckConfig("all", rank=0)
    with pytest.raises(InvalidRank):
        CheckConfig("all", rank="2")
    with pytest.raises(ValueError):
        CheckConfig("all", d_max=-1)
    with pytest.raises(ValueError):
        CheckConfig("all", budget=0)
    cfg = CheckConfig("splitting", seed=7)
    echo = cfg.echo()
    assert echo["suite"] == "splitting"
    assert echo["seed"] == 7
    assert "out" not in echo


def test_report_entry_validation():
    good = {"label": "x", "status": "pass", "witness": None}
    report = Report("demo", [good], {"suite": "demo"})
    assert report.all_pass()
    assert report.counts() == {"pass": 1, "fail": 0, "skipped": 0}
    with pytest.raises(ValueError):
        Report("demo", [{"label": "x", "status": "ok", "witness": None}], {})
    with pytest.raises(ValueError):
        Report("demo", [{"label": "x", "status": "fail", "witness": None}], {})


def test_empty_report_passes_vacuously():
    report = Report("demo", [], {})
    assert report.all_pass()
    assert parse(serialize(report)) == report


def test_serialize_parse_round_trip():
    entries = [
        {"label": "a", "status": "pass", "witness": None},
        {"label": "b", "status": "fail", "witness": "y1 - y2"},
        {"label": "c", "status": "skipped", "witness": "budget 1s exceeded"},
    ]
    report = Report("demo", entries, {"suite": "demo", "seed": 3}, wall_time=1.23)
    text = serialize(report)
    assert text.endswith("\n")
    again = parse(text)
    assert again == report
    assert again.wall_time is None  # wall time never survives serialization
    assert "wall" not in text


def test_unknown_suite_is_rejected():
    with pytest.raises(UnknownSuite):
        run_suite(CheckConfig("bogus"))


def test_chain_example_suite_passes():
    report = run_suite(CheckConfig("chain-example"))
    assert report.all_pass()
    assert report.entries
    assert report.config["suite"] == "chain-example"
    assert report.wall_time is not None


def test_suite_entries_are_deterministic_bytes():
    cfg_a = CheckConfig("splitting", seed=11)
    cfg_b = CheckConfig("splitting", seed=11)
    assert serialize(run_suite(cfg_a)) == serialize(run_suite(cfg_b))


def test_seed_changes_are_visible_in_config_echo():
    a = serialize(run_suite(CheckConfig("splitting", seed=1)))
    b = serialize(run_suite(CheckConfig("splitting", seed=2)))
    assert a != b  # the echoed config differs even when all checks pass


def test_exhausted_budget_skips_steps():
    report = run_suite(CheckConfig("splitting", budget=1e-9))
    assert report.entries
    assert all(entry["status"] == "skipped" for entry in report.entries)
    assert all("budget" in entry["witness"] for entry in report.entries)
    assert not report.all_pass()


def test_corrupt_run_reports_parseable_witness():
    report = run_suite(CheckConfig("ideal-membership", corrupt=True))
    failing = [e for e in report.entries if e["status"] == "fail"]
    assert len(failing) == 1
    assert "expected failure" in failing[0]["label"]
    witness = failing[0]["witness"]
    assert parse_poly(witness, VarContext(2)).is_constant()


def test_main_exit_codes(tmp_path, capsys):
    assert main(["verify", "daha-relations", "--rank", "0"]) == 2
    capsys.readouterr()
    assert main(["verify", "chain-example"]) == 0
    out = capsys.readouterr().out
    assert "suite chain-example" in out
    assert "[   pass]" in out
    assert main(["verify", "ideal-membership", "--corrupt"]) == 1


def test_main_writes_report_file(tmp_path):
    target = tmp_path / "report.json"
    code = main(["verify", "chain-example", "--out", str(target)])
    assert code == 0
    loaded = parse(target.read_text())
    assert loaded.suite == "chain-example"
    assert loaded.all_pass()
    payload = json.loads(target.read_text())
    assert set(payload) == {"suite", "config", "entries"}


def test_matter_config_file_is_loaded(tmp_path):
    config = tmp_path / "matter.json"
    config.write_text(json.dumps([{"rank": 1, "characters": [[1]]}]))
    code = main(
        ["verify", "abelian-zalg", "--matter-config", str(config), "--seed", "5"]
    )
    assert code == 0


def test_dims_subcommand_prints_pinned_dimension(capsys):
    code = main(
        [
            "dims",
            "--rank",
            "2",
            "--d",
            "1",
            "--xmin",
            "0",
            "--xmax",
            "1",
            "--ymax",
            "1",
            "--basis",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "dimension 5" in out
    assert "y1 - y2" in out


def test_dims_rejects_mismatched_kind_rank(capsys):
    assert main(["dims", "--rank", "3", "--d", "1", "--kind", "B2"]) == 2


def test_eval_subcommand_prints_an_operator(capsys):
    assert main(["eval", "--expr", "s1 y1"]) == 0
    out = capsys.readouterr().out.strip()
    assert out
    assert main(["eval", "--expr", "pi (c + h)", "--rank", "3"]) == 0
