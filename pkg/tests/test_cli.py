"""
Tests for the command-line interface.
Run: pytest tests/test_cli.py -v
"""
import json

import pytest

from mixedstirling.cli import cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ── compute ──────────────────────────────────────────────────────


class TestCompute:

    def test_mixed_value(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "mixed", "--n", "6", "--k", "3", "--r", "2")
        assert code == 0
        assert out == "780\n"

    def test_every_algorithm(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "7", "--k", "3", "--r", "3", "--algorithm", "all")
        assert code == 0
        lines = dict(line.split("\t") for line in out.splitlines())
        assert set(lines) == {"closed_form", "convolution", "element_recurrence", "three_case"}
        assert set(lines.values()) == {"2800"}

    def test_restricted_band(self, capsys):
        code, out, _ = run(capsys, "compute", "--n", "3", "--k", "2", "--r", "2", "--max", "2")
        assert code == 0 and out == "3\n"

    def test_band_flag(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "band", "--n", "6", "--k", "2", "--band", "2..3")
        assert code == 0 and out == "10\n"

    def test_families(self, capsys):
        assert run(capsys, "compute", "--family", "stirling2", "--n", "5", "--k", "3")[1] == "25\n"
        assert run(capsys, "compute", "--family", "bell", "--n", "5")[1] == "52\n"
        assert run(capsys, "compute", "--family", "r-stirling", "--n", "5", "--k", "3", "--r", "2")[1] == "19\n"
        assert run(capsys, "compute", "--family", "restricted", "--n", "5", "--k", "3", "--max", "2")[1] == "15\n"
        assert run(capsys, "compute", "--family", "associated", "--n", "6", "--k", "2", "--min", "2")[1] == "25\n"
        assert run(capsys, "compute", "--family", "bell-restricted", "--n", "6", "--max", "2")[1] == "76\n"
        assert run(capsys, "compute", "--family", "mixed-count", "--n", "4", "--cells", "2,1,1")[1] == "12\n"
        assert run(capsys, "compute", "--family", "mixed-bell", "--n", "4", "--k", "3", "--r", "1")[1] == "81\n"
        assert run(capsys, "compute", "--family", "r-stirling-via-mixed", "--n", "5", "--k", "3", "--r", "2")[1] == "19\n"

    def test_big_value_printed_plainly(self, capsys):
        code, out, _ = run(capsys, "compute", "--family", "stirling2", "--n", "120", "--k", "2")
        assert code == 0
        assert out.strip() == str(2 ** 119 - 1)

    def test_restricted_needs_bound(self, capsys):
        code, _, err = run(capsys, "compute", "--family", "restricted", "--n", "5", "--k", "3")
        assert code == 2
        assert "upper block-size bound" in err

    def test_negative_n_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "compute", "--n", "-1")
        assert code == 2

    def test_bad_band(self, capsys):
        code, _, err = run(capsys, "compute", "--n", "3", "--band", "three")
        assert code == 2
        assert "three" in err


# ── table ────────────────────────────────────────────────────────


class TestTable:

    def test_fixed_r(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "mixed", "--r", "3", "--n", "3..7", "--k", "1..5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,k,value"
        assert "7,3,2800" in lines
        assert "3,2,0" not in lines
        assert len(lines) == 1 + 15

    def test_fixed_k(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "mixed", "--k", "2", "--n", "2..6", "--r", "1..5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,r,value"
        assert "6,3,260" in lines

    def test_include_zeros(self, capsys):
        code, out, _ = run(
            capsys, "table", "--r", "2", "--n", "2..3", "--k", "1..2", "--include-zeros",
        )
        assert code == 0
        assert out.splitlines() == ["n,k,value", "2,1,1", "2,2,0", "3,1,3", "3,2,3"]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "table", "--r", "2", "--n", "2..4", "--k", "1..3", "--format", "text")
        assert code == 0
        assert out.splitlines()[0].split() == ["n/k", "1", "2", "3"]
        assert out.splitlines()[-1].split() == ["4", "7", "18", "12"]

    def test_varying_both_rejected(self, capsys):
        code, _, _ = run(capsys, "table", "--n", "2..4", "--k", "1..2", "--r", "1..2")
        assert code == 2


# ── egf ──────────────────────────────────────────────────────────


class TestEgf:

    def test_counts(self, capsys):
        code, out, _ = run(capsys, "egf", "--k", "3", "--r", "2", "--order", "6", "--counts")
        assert code == 0
        assert out.splitlines()[-1] == "6\t780"

    def test_fractions(self, capsys):
        code, out, _ = run(capsys, "egf", "--family", "stirling-band", "--k", "1", "--order", "3")
        assert code == 0
        assert out.splitlines() == ["0\t0/1", "1\t1/1", "2\t1/2", "3\t1/6"]

    def test_cells(self, capsys):
        code, out, _ = run(
            capsys, "egf", "--family", "cells", "--cells", "2,1", "--label1-empty-ok",
            "--max", "2", "--order", "3", "--counts",
        )
        assert code == 0
        assert out.splitlines()[-1] == "3\t9"

    def test_cells_requires_counts(self, capsys):
        assert run(capsys, "egf", "--family", "cells")[0] == 2


# ── oracle ───────────────────────────────────────────────────────


class TestOracle:

    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "3", "--cells", "2,1", "--max", "2", "--label1-empty-ok")
        assert code == 0
        assert out == "9\n"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "2", "--cells", "1,1", "--list")
        assert code == 0
        assert out.splitlines() == ["1: {1} | 2: {2}", "1: {2} | 2: {1}"]

    def test_distinct_prefix(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "5", "--cells", "3", "--distinct-prefix", "2")
        assert code == 0 and out == "19\n"

    def test_over_cap(self, capsys):
        code, _, err = run(capsys, "oracle", "--n", "20", "--cells", "2")
        assert code == 2
        assert "cap" in err


# ── verify ───────────────────────────────────────────────────────


class TestVerify:

    ARGS = ("verify", "--n-max", "5", "--k-max", "2", "--r-max", "2", "--bands", "unbounded,<=2",
            "--oracle-max-n", "4")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--case", "mixed-closed-form",
                           "--case", "restricted-recurrence-as-stated", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert [c["id"] for c in data["cases"]] == ["mixed-closed-form", "restricted-recurrence-as-stated"]
        assert data["grid"]["n_max"] == 5
        assert data["cases"][1]["status"] == "flagged"

    def test_strict_passes_with_expected_flags_only(self, capsys):
        code, _, _ = run(capsys, *self.ARGS, "--case", "restricted-recurrence-as-stated", "--strict")
        assert code == 0

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.txt"
        code, out, _ = run(capsys, *self.ARGS, "--case", "anchor-a001710", "--output", str(path))
        assert code == 0
        assert out == ""
        assert "anchor-a001710" in path.read_text()

    def test_grid_file(self, capsys, tmp_path):
        path = tmp_path / "grid.yaml"
        path.write_text("n_max: 4\nk_max: 2\nr_max: 1\nbands: [unbounded]\noracle_max_n: 3\n")
        code, out, _ = run(capsys, "verify", "--grid-file", str(path), "--case", "oracle-agreement",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["grid"]["n_max"] == 4
        assert data["cases"][0]["status"] == "pass"

    def test_unknown_case(self, capsys):
        code, _, err = run(capsys, *self.ARGS, "--case", "no-such-case")
        assert code == 2
        assert "no-such-case" in err


# ── usage ────────────────────────────────────────────────────────


class TestUsage:

    def test_no_arguments(self, capsys):
        assert run(capsys)[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_required(self, capsys):
        assert run(capsys, "compute")[0] == 2

    def test_bad_choice(self, capsys):
        assert run(capsys, "compute", "--n", "3", "--algorithm", "guess")[0] == 2

    def test_version(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0
        assert "1.0.0" in out
