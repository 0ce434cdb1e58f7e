import json

from click.testing import CliRunner

import signum.fixtures as fixture_catalog
from signum.cli import main
from signum.fixtures import Check, Fixture
from signum.patterns import SignPattern


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env, catch_exceptions=False)


def test_analyze_requires_unique_exit_code():
    result = run("analyze", "--fixture", "PAT_XX2", "--trials", "200")
    assert result.exit_code == 0
    assert "overall: requires_unique" in result.output


def test_analyze_json_witness_inertias():
    result = run("analyze", "--fixture", "PAT_P4", "--json", "--trials", "200")
    assert result.exit_code == 1
    doc = json.loads(result.output)
    witness = next(f["witness"] for f in doc["findings"] if "witness" in f)
    assert sorted(map(tuple, witness["inertias"])) == [(0, 0, 4), (2, 2, 0)]


def test_analyze_missing_file_is_an_error():
    result = run("analyze", "nonexistent.txt")
    assert result.exit_code == 3
    assert "error" in result.output


def test_analyze_parse_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 + x\n+ 0 +\n0 + 0\n")
    result = run("analyze", str(bad))
    assert result.exit_code == 3


def test_analyze_unknown_fixture_is_an_error():
    result = run("analyze", "--fixture", "NO_SUCH_PATTERN")
    assert result.exit_code == 3
    assert "unknown fixture" in result.output


def test_witness_adjacent_matching_is_an_error():
    result = run("witness", "--fixture", "PAT_P4", "--matching", "1-2,2-3")
    assert result.exit_code == 3
    assert "composite cycle" in result.output


def test_analyze_inconclusive_exit_code():
    result = run("analyze", "--fixture", "PAT_EG06", "--trials", "200")
    assert result.exit_code == 2


def test_analyze_deterministic_output():
    a = run("analyze", "--fixture", "PAT_EG06", "--json", "--trials", "150", "--seed", "4")
    b = run("analyze", "--fixture", "PAT_EG06", "--json", "--trials", "150", "--seed", "4")
    assert a.output == b.output


def test_seed_env_override():
    direct = run("analyze", "--fixture", "PAT_EG06", "--json", "--trials", "100", "--seed", "99")
    via_env = run(
        "analyze", "--fixture", "PAT_EG06", "--json", "--trials", "100",
        env={"SIGNUM_SEED": "99"},
    )
    assert direct.output == via_env.output


def test_graph_directed_arcs():
    result = run("graph", "--fixture", "PAT_EX26", "--directed")
    assert result.exit_code == 0
    assert result.output.count("->") == 6


def test_graph_undirected_dashed():
    result = run("graph", "--fixture", "PAT_EG06", "--undirected")
    assert result.output.count("--") == 4
    assert result.output.count("dashed") == 2


def test_graph_trivial_pattern(tmp_path):
    f = tmp_path / "one.txt"
    f.write_text("0\n")
    result = run("graph", str(f), "--undirected")
    assert result.exit_code == 0
    assert "--" not in result.output


def test_census_command():
    result = run("census", "--fixture", "PAT_EG06", "--trials", "200")
    assert result.exit_code == 0
    assert "inertia (1, 1, 2): 200" in result.output
    assert "consistent frequency observed: True" in result.output


def test_witness_command():
    result = run("witness", "--fixture", "PAT_XXEG22", "--cycle", "1,2,3,4")
    assert result.exit_code == 0
    assert "inertia: (2, 2, 0)" in result.output


def test_witness_matching_command():
    result = run("witness", "--fixture", "PAT_ALLNEG4", "--matching", "1-2,3-4")
    assert result.exit_code == 0
    assert "inertia: (0, 0, 4)" in result.output


def test_fixtures_listing():
    result = run("fixtures")
    assert result.exit_code == 0
    assert "PAT_P4 (order 4)" in result.output
    assert "PAT_TWOSQ9 (order 9)" in result.output


def test_verify_filter_passes():
    result = run("verify-paper", "--filter", "PAT_XX2")
    assert result.exit_code == 0
    assert "[pass]" in result.output
    assert "FAIL" not in result.output


def test_verify_vacuous_filter_warns():
    result = run("verify-paper", "--filter", "NO_SUCH_FIXTURE")
    assert result.exit_code == 0
    assert "warning" in result.output


def test_verify_negative_control(monkeypatch):
    broken = Fixture(
        "PAT_BROKEN",
        "negative control with a corrupted expectation",
        SignPattern.from_rows([[0, 1], [1, 0]]),
        (
            Check(
                "impossible",
                "trivial",
                "deliberately wrong expectation",
                lambda p: (p.n == 3, f"order is {p.n}"),
            ),
        ),
    )
    monkeypatch.setitem(fixture_catalog.FIXTURES, "PAT_BROKEN", broken)
    result = run("verify-paper", "--filter", "PAT_BROKEN")
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_fuzz_smoke_deterministic():
    a = run("fuzz", "--order", "6", "--trials", "12", "--seed", "2")
    b = run("fuzz", "--order", "6", "--trials", "12", "--seed", "2")
    assert a.exit_code == 0
    assert a.output == b.output
    assert "examined" in a.output


def test_fuzz_repeated_imaginary_smoke():
    result = run(
        "fuzz", "--order", "5", "--trials", "6", "--seed", "3",
        "--target", "repeated-imaginary",
    )
    assert result.exit_code == 0
    assert "examined" in result.output
