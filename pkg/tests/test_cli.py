"""CLI behavior via the click test runner (in-process service transport)."""

import json

import pytest
from click.testing import CliRunner

from obstructor.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_derive_text(runner):
    result = runner.invoke(main, ["derive", "PSU(3)"])
    assert result.exit_code == 0
    assert "l0 = 3" in result.output
    assert "fully-engine-derived" in result.output


def test_derive_json_matches_text(runner):
    as_json = runner.invoke(main, ["derive", "PSU(3)", "--json"])
    assert as_json.exit_code == 0
    body = json.loads(as_json.output)
    assert body["l0"] == 3
    assert body["schema_version"] == "1"
    text = runner.invoke(main, ["derive", "PSU(3)"])
    assert "l0 = %d" % body["l0"] in text.output


def test_derive_trace(runner):
    result = runner.invoke(main, ["derive", "PSU(3)", "--trace"])
    assert result.exit_code == 0
    assert "[μ*]" in result.output
    assert "[φ*]" in result.output
    assert "x1⊗y" in result.output


def test_derive_bad_spec(runner):
    result = runner.invoke(main, ["derive", "SU(6)/Z4"])
    assert result.exit_code == 1
    assert "4 does not divide 6" in result.output


def test_check(runner):
    ok = runner.invoke(main, ["check", "PSU(4)", "--level", "8"])
    assert ok.exit_code == 0
    assert "prequantizable" in ok.output
    no = runner.invoke(main, ["check", "PSU(4)", "--level", "6", "--genus", "2"])
    assert no.exit_code == 0  # a negative verdict is an answer, not an error
    assert "not prequantizable" in no.output
    assert "genus 2" in no.output


def test_check_json(runner):
    result = runner.invoke(main, ["check", "PSU(4)", "--level", "4", "--json"])
    body = json.loads(result.output)
    assert body["prequantizable"] is True
    assert body["genus_independent"] is True


def test_table(runner):
    result = runner.invoke(main, ["table", "--family", "exceptional"])
    assert result.exit_code == 0
    assert "PE6" in result.output
    assert "MISMATCH" not in result.output


def test_table_json(runner):
    result = runner.invoke(main, ["table", "--family", "Ss", "--json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["all_match"] is True
    assert body["rows"][0]["spec"] == "Ss(8)"


def test_table_unknown_family(runner):
    result = runner.invoke(main, ["table", "--family", "nope"])
    assert result.exit_code == 1
    assert "unsupported table family" in result.output


def test_verify_catalog(runner):
    result = runner.invoke(main, ["verify-catalog"])
    assert result.exit_code == 0
    assert "FAIL" not in result.output
    as_json = runner.invoke(main, ["verify-catalog", "--json"])
    assert json.loads(as_json.output)["all_ok"] is True
