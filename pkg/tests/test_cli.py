import json

from click.testing import CliRunner

from hopfdual.cli import main


def test_gram_dihedral_writes_json(tmp_path):
    out = tmp_path / "report.json"
    result = CliRunner().invoke(main, ["gram", "--family", "dihedral", "--N", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "rank" in result.output
    data = json.loads(out.read_text())
    assert data["gram"]["full_rank"] is True
    assert data["config"]["family"] == "dihedral"


def test_gram_csv_dump(tmp_path):
    csv_path = tmp_path / "gram.csv"
    result = CliRunner().invoke(main, ["gram", "--family", "dihedral", "--csv", str(csv_path)])
    assert result.exit_code == 0, result.output
    assert csv_path.read_text().strip()


def test_invalid_d_parameters_exit_with_usage_code():
    result = CliRunner().invoke(main, ["verify", "--family", "dmx", "--m", "2", "--d", "1", "--no-progress"])
    assert result.exit_code == 2
    assert "(1+m)d must be even" in result.output


def test_unknown_suite_is_rejected():
    result = CliRunner().invoke(main, ["verify", "--family", "taft", "--suites", "gram,bogus"])
    assert result.exit_code == 2
    assert "bogus" in result.output


def test_missing_family_is_rejected():
    result = CliRunner().invoke(main, ["verify", "--no-progress"])
    assert result.exit_code == 2
    assert "a family is required" in result.output


def test_verify_small_dihedral_run(tmp_path):
    out = tmp_path / "run.json"
    summary = tmp_path / "run.md"
    result = CliRunner().invoke(
        main,
        [
            "verify",
            "--family",
            "dihedral",
            "--suites",
            "scalars,gram",
            "--no-progress",
            "--out",
            str(out),
            "--summary",
            str(summary),
        ],
    )
    assert result.exit_code == 0, result.output
    assert "[+] Verifying dihedral" in result.output
    document = json.loads(out.read_text())
    assert [suite["suite"] for suite in document["suites"]] == ["scalars", "gram"]
    assert all(suite["status"] == "pass" for suite in document["suites"])
    assert document["version"]
    assert "All 2 suites passed." in summary.read_text()


def test_verify_reads_yaml_config(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("family: dihedral\nsuites: [gram]\nbounds:\n  gram_n: 1\n")
    result = CliRunner().invoke(main, ["verify", "--config", str(config), "--no-progress"])
    assert result.exit_code == 0, result.output
    assert "gram" in result.output


def test_malformed_config_value_exits_with_usage_code(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("family: dihedral\nbounds:\n  r: two\n")
    for command in ("verify", "gram"):
        result = CliRunner().invoke(main, [command, "--config", str(config)])
        assert result.exit_code == 2, result.output
        assert "'bounds.r' must be an integer" in result.output
