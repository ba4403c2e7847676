"""End-to-end tests for the ``cousin`` command line."""

from __future__ import annotations

import json
import os
from pathlib import Path

import pytest
from cousin._internal.config import JobConfig
from cousin.cli import build_parser, execute, job_from_args, main, run
from cousin.core.errors import ConfigError

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    monkeypatch.delenv("COUSINDEBUG", raising=False)
    monkeypatch.delenv("COUSIN_MAX_ENUM", raising=False)


def _json_result(capsys) -> object:
    return json.loads(capsys.readouterr().out)["result"]


class TestCommands:
    @pytest.mark.parametrize(
        "preset, variant, fmt, golden",
        [
            ("GSp4", "ss", "md", "gsp4_ss.md"),
            ("GSp4", "sss", "md", "gsp4_sss.md"),
            ("GSp4", "ss", "json", "gsp4_ss.json"),
            ("GSp4", "sss", "json", "gsp4_sss.json"),
            ("GSp4", "ss", "latex", "gsp4_ss.tex"),
            ("GSp4", "ss", "plain", "gsp4_ss.txt"),
            ("GL2", "ss", "md", "gl2_ss.md"),
        ],
    )
    def test_hecke_table_matches_golden(self, capsys, preset, variant, fmt, golden):
        argv = ["slopes", "table", "--preset", preset, "--variant", variant, "--format", fmt]
        assert main(argv) == 0
        assert capsys.readouterr().out == (DATA_DIR / golden).read_text()

    def test_singular_bwb_is_null(self, capsys):
        """Negative vectors directly after a flag are kept as values."""
        assert main(["cousin", "bwb", "--preset", "A1", "--kappa", "-1", "--format", "json"]) == 0
        assert capsys.readouterr().out == '{"result":null}\n'

    def test_kostant_listing(self, capsys):
        assert main(["weyl", "--preset", "GSp4", "--levi", "0", "--list-kostant", "--format", "json"]) == 0
        result = _json_result(capsys)
        assert result["d"] == 3
        assert [e["w"] for e in result["elements"]] == ["Id", "s1", "s1s0", "s1s0s1"]
        assert [e["ell_minus"] for e in result["elements"]] == [3, 2, 1, 0]

    def test_group_listing_plain(self, capsys):
        assert main(["weyl", "--preset", "A1"]) == 0
        assert capsys.readouterr().out == "w   length\nId  0\ns0  1\n"

    def test_slope_condition(self, capsys):
        argv = [
            "slopes", "cond", "--preset", "C2", "--levi", "0", "--kind", "ss", "--flavor", "M",
            "--sign", "+", "--kappa", "5,3,-8", "--lambda", "-3,3,-8", "--format", "json",
        ]
        assert main(argv) == 0
        result = _json_result(capsys)
        assert result["condition"] == "+,ss_M"
        assert result["satisfied"] is True
        assert result["violated_by"] is None

    def test_violated_condition_names_the_bound(self, capsys):
        argv = [
            "slopes", "cond", "--preset", "C2", "--levi", "0", "--kind", "ss", "--flavor", "M",
            "--kappa", "5,3,-8", "--lambda", "3,-3,-8", "--format", "json",
        ]
        assert main(argv) == 0
        assert _json_result(capsys)["violated_by"] == [["-2", "2", "-8"]]

    @pytest.mark.parametrize(
        "form, violated_by",
        [(None, None), ("linear", [["5", "3", "-8"], ["2", "0", "-8"]])],
    )
    def test_strongly_small_mw_form(self, capsys, form, violated_by):
        argv = [
            "slopes", "cond", "--preset", "C2", "--levi", "0", "--kind", "sss", "--flavor", "Mw",
            "--kappa", "5,3,-8", "--w", "Id", "--lambda", "0,0,-8", "--format", "json",
        ]
        if form is not None:
            argv += ["--mw-form", form]
        assert main(argv) == 0
        assert _json_result(capsys)["violated_by"] == violated_by

    def test_cset(self, capsys):
        argv = ["slopes", "cset", "--preset", "C2", "--levi", "0", "--kappa", "5,3,-8", "--format", "json"]
        assert main(argv) == 0
        result = _json_result(capsys)
        assert result["c_set"] == ["Id"]
        assert (result["ell_min"], result["ell_max"], result["regular"]) == (0, 0, True)

    def test_bound(self, capsys):
        argv = ["slopes", "bound", "--preset", "GL2", "--kappa", "5,-5", "--w", "Id", "--format", "json"]
        assert main(argv) == 0
        assert _json_result(capsys) == {"w": "Id", "bound": ["3", "-5"]}

    def test_character(self, capsys):
        assert main(["char", "weyl", "--preset", "A1", "--weight", "2", "--depth", "4", "--format", "json"]) == 0
        result = _json_result(capsys)
        assert [t["weight"] for t in result["terms"]] == [["2"], ["0"], ["-2"]]

    def test_dimension(self, capsys):
        assert main(["char", "dim", "--preset", "A2", "--weight", "1,1", "--format", "json"]) == 0
        assert _json_result(capsys)["dimension"] == 8

    def test_flag_complex(self, capsys):
        assert main(["cousin", "flag", "--preset", "A2", "--kappa", "0,0", "--format", "json"]) == 0
        result = _json_result(capsys)
        assert [len(result["terms"][str(p)]) for p in range(4)] == [1, 2, 2, 1]
        assert result["top"] == ["0", "0"]

    def test_newton_polygon(self, capsys):
        assert main(["newton", "poly", "--p", "3", "--coeffs", "3,-4,1", "--format", "json"]) == 0
        assert _json_result(capsys)["root_valuations"] == ["0", "1"]

    def test_slope_dimension_from_file(self, capsys, tmp_path):
        matrix = tmp_path / "m.json"
        matrix.write_text("[[1, 0], [0, 5]]", encoding="utf-8")
        argv = ["newton", "slopedim", "--p", "5", "--matrix", f"@{matrix}", "--h", "0", "--format", "json"]
        assert main(argv) == 0
        assert _json_result(capsys) == {"h": "0", "dimension": 1}

    def test_finite_slope_dimension(self, capsys):
        argv = ["newton", "slopedim", "--p", "3", "--matrix", "[[0, 0], [0, 3]]", "--format", "json"]
        assert main(argv) == 0
        assert _json_result(capsys) == {"h": None, "dimension": 1}

    def test_check_run(self, capsys):
        argv = ["check", "--suite", "ss-equiv", "--preset", "A1", "--radius", "1", "--format", "json"]
        assert main(argv) == 0
        result = _json_result(capsys)
        assert result["passed"] is True
        assert [r["suite"] for r in result["results"]] == ["ss-equiv"]

    def test_check_list(self, capsys):
        assert main(["check", "list", "--format", "json"]) == 0
        assert len(_json_result(capsys)) == 12


class TestConfigDocuments:
    def test_job_document(self, capsys, tmp_path):
        """Flags on the command line are merged over the document."""
        job = tmp_path / "job.json"
        job.write_text(
            json.dumps({"command": "newton", "params": {"p": 3, "coeffs": [3, -4, 1]}, "output_format": "json"}),
            encoding="utf-8",
        )
        assert main(["newton", "poly", "--config", str(job)]) == 0
        assert _json_result(capsys)["root_valuations"] == ["0", "1"]

    def test_document_for_another_command(self, capsys, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({"command": "weyl"}), encoding="utf-8")
        assert main(["newton", "poly", "--config", str(job)]) == 2
        assert "job document is for" in capsys.readouterr().err

    def test_custom_datum(self, capsys, tmp_path):
        datum = tmp_path / "a1.json"
        datum.write_text(json.dumps({"dim": 1, "simple_roots": [[2]], "simple_coroots": [[1]]}), encoding="utf-8")
        assert main(["weyl", "--datum", str(datum), "--format", "json"]) == 0
        assert _json_result(capsys)["order"] == 2

    def test_job_from_args(self):
        args = build_parser().parse_args(["char", "dim", "--preset", "A2", "--weight=1,0"])
        job = job_from_args(args)
        assert job == JobConfig(command="char", action="dim", preset="A2", params={"weight": "1,0"})


class TestErrors:
    def _error(self, capsys) -> dict:
        return json.loads(capsys.readouterr().err)["error"]

    def test_unknown_preset(self, capsys):
        assert main(["weyl", "--preset", "Z9"]) == 2
        error = self._error(capsys)
        assert error["type"] == "PresetError"
        assert error["module"] == "presets"

    def test_precondition(self, capsys):
        assert main(["char", "dim", "--preset", "A1", "--weight", "-1"]) == 3
        assert self._error(capsys)["type"] == "NotDominantError"

    def test_resource_bound(self, capsys):
        assert main(["weyl", "--preset", "A4", "--max-enum", "100"]) == 4
        assert self._error(capsys)["type"] == "ResourceBoundError"

    def test_missing_parameter(self, capsys):
        assert main(["newton", "leq", "--p", "2", "--coeffs", "-2,1"]) == 2
        assert "needs --h" in self._error(capsys)["message"]

    def test_missing_preset(self, capsys):
        assert main(["weyl"]) == 2
        assert "--preset" in self._error(capsys)["message"]

    def test_debug_and_bound_are_scoped_to_the_call(self, monkeypatch, capsys):
        seen = {}
        real_execute = execute

        def recording_execute(job):
            seen.update((name, os.environ.get(name)) for name in ("COUSINDEBUG", "COUSIN_MAX_ENUM"))
            return real_execute(job)

        monkeypatch.setattr("cousin.cli.execute", recording_execute)
        assert main(["weyl", "--preset", "A1", "--debug", "--max-enum", "50"]) == 0
        assert seen == {"COUSINDEBUG": "1", "COUSIN_MAX_ENUM": "50"}
        assert "COUSINDEBUG" not in os.environ
        assert "COUSIN_MAX_ENUM" not in os.environ


class TestLibraryEntryPoints:
    def test_run_renders(self):
        job = JobConfig(
            command="newton",
            action="leq",
            params={"p": 2, "coeffs": "-2,1", "h": "-1"},
            output_format="json",
        )
        assert run(job) == '{"result":{"h":"-1","slope_leq_h":true}}'

    def test_unknown_command(self):
        with pytest.raises(ConfigError, match="unknown command"):
            execute(JobConfig(command="plot"))

    def test_unknown_action(self):
        with pytest.raises(ConfigError, match="action must be one of"):
            execute(JobConfig(command="newton", action="draw", params={"p": 2}))
