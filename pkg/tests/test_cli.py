"""CLI tests: argument parsing, command output, exit codes."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction as F

import pytest

from homquad.cli import (
    EXIT_INVALID_QUADRANGLE,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    build_parser,
    main,
)

UNIT_SQUARE_DOC = {"A": ["0", "0"], "B": ["1", "0"], "C": ["1", "1"], "D": ["0", "1"]}
PARALLEL_DIAGONALS_DOC = {"A": ["0", "0"], "B": ["2", "0"], "C": ["0", "2"], "D": ["2", "2"]}


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps(UNIT_SQUARE_DOC))
    return str(path)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestParseArgs:
    def test_construct(self):
        args = build_parser().parse_args(["construct", "--input", "q.json", "--lambda", "1/3"])
        assert args.command == "construct"
        assert args.ratio == F(1, 3)

    def test_sweep(self):
        args = build_parser().parse_args(
            ["sweep", "--input", "q.json", "--from", "-1", "--to", "2", "--steps", "7"]
        )
        assert args.ratio_from == F(-1) and args.ratio_to == F(2) and args.steps == 7

    def test_zero_denominator_is_usage_error(self, square_file):
        code, _, err = run_cli("construct", "--input", square_file, "--lambda", "1/0")
        assert code == EXIT_USAGE
        assert "--lambda" in err

    def test_unknown_claim_is_usage_error(self, square_file):
        code, _, _ = run_cli("verify", "--input", square_file, "--claims", "NotAClaim")
        assert code == EXIT_USAGE


class TestConstruct:
    def test_varignon_square(self, square_file):
        code, out, _ = run_cli("construct", "--input", square_file, "--lambda", "1/2")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["kind"] == "parallelogram"
        assert doc["K"] == ["1/2", "0"]

    def test_ratio_one_point(self, square_file):
        code, out, _ = run_cli("construct", "--input", square_file, "--lambda", "1")
        assert code == EXIT_OK
        assert json.loads(out) == {"kind": "point", "O": ["1/2", "1/2"]}


class TestClassify:
    def test_unit_square(self, square_file):
        code, out, _ = run_cli("classify", "--input", square_file)
        assert code == EXIT_OK
        assert json.loads(out) == {
            "class": "convex",
            "O": ["1/2", "1/2"],
            "signed_area": "1",
        }


class TestVerify:
    def test_unit_square_all_pass(self, square_file):
        code, out, _ = run_cli("verify", "--input", square_file)
        assert code == EXIT_OK
        reports = [json.loads(line) for line in out.splitlines()]
        assert reports and all(r["passed"] for r in reports)

    def test_crossed_quad_with_third(self, tmp_path):
        path = tmp_path / "crossed.json"
        path.write_text(
            json.dumps({"A": ["0", "0"], "B": ["4", "0"], "C": ["1", "2"], "D": ["3", "2"]})
        )
        code, out, _ = run_cli("verify", "--input", str(path), "--lambda", "1/3")
        assert code == EXIT_OK
        assert all(json.loads(line)["passed"] for line in out.splitlines())

    def test_claims_filter(self, square_file):
        code, out, _ = run_cli(
            "verify", "--input", square_file, "--claims", "AreaFormula,PerimeterRatio"
        )
        assert code == EXIT_OK
        claims = {json.loads(line)["claim"] for line in out.splitlines()}
        assert claims == {"AreaFormula", "PerimeterRatio"}


class TestSweep:
    def test_unit_square_zero_to_one(self, square_file):
        code, out, _ = run_cli(
            "sweep", "--input", square_file, "--from", "0", "--to", "1", "--steps", "3"
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("lambda\tarea")
        rows = [line.split("\t") for line in lines[1:]]
        assert [(r[0], r[1]) for r in rows] == [("0", "2"), ("1/2", "1/2"), ("1", "0")]

    def test_float_perimeter_column(self, square_file):
        _, out, _ = run_cli(
            "sweep", "--input", square_file, "--from", "0", "--to", "1", "--steps", "3"
        )
        rows = [line.split("\t") for line in out.splitlines()[1:]]
        # Varignon square of the unit square has perimeter 4 * sqrt(1/2).
        assert rows[1][-1] == "2.82842712474619"
        assert rows[2][-1] == "0"

    def test_bad_steps(self, square_file):
        code, _, _ = run_cli(
            "sweep", "--input", square_file, "--from", "0", "--to", "1", "--steps", "1"
        )
        assert code == EXIT_USAGE

    def test_equal_endpoints(self, square_file):
        code, _, _ = run_cli(
            "sweep", "--input", square_file, "--from", "1/2", "--to", "1/2", "--steps", "3"
        )
        assert code == EXIT_USAGE


class TestRenderCommand:
    def test_writes_svg(self, square_file, tmp_path):
        out_path = tmp_path / "fig.svg"
        code, _, _ = run_cli(
            "render",
            "--input",
            square_file,
            "--lambda",
            "1/2",
            "--lambda",
            "1/3",
            "--labels",
            "--output",
            str(out_path),
        )
        assert code == EXIT_OK
        text = out_path.read_text()
        assert text.startswith("<?xml") and text.rstrip().endswith("</svg>")


class TestGenerate:
    def test_stdout_quadrangle(self):
        code, out, _ = run_cli("generate", "--seed", "1")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert set(doc) == {"A", "B", "C", "D"}

    def test_deterministic(self):
        _, out1, _ = run_cli("generate", "--seed", "42")
        _, out2, _ = run_cli("generate", "--seed", "42")
        assert out1 == out2

    def test_class_filter(self, tmp_path):
        out_path = tmp_path / "q.json"
        code, _, _ = run_cli(
            "generate", "--seed", "2", "--class", "crossed", "--output", str(out_path)
        )
        assert code == EXIT_OK
        _, out, _ = run_cli("classify", "--input", str(out_path))
        assert json.loads(out)["class"] == "crossed"


class TestCampaignCommand:
    def test_small_campaign(self):
        code, out, err = run_cli(
            "campaign", "--seed", "3", "--trials", "5", "--lambda", "1/2", "--lambda", "1"
        )
        assert code == EXIT_OK
        assert all(json.loads(line)["passed"] for line in out.splitlines())
        assert "all" in err and "passed" in err


class TestErrorPaths:
    def test_missing_file(self, tmp_path):
        code, _, _ = run_cli("classify", "--input", str(tmp_path / "nope.json"))
        assert code == EXIT_IO

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, _ = run_cli("classify", "--input", str(path))
        assert code == EXIT_IO

    def test_parallel_diagonals(self, tmp_path):
        path = tmp_path / "invalid.json"
        path.write_text(json.dumps(PARALLEL_DIAGONALS_DOC))
        code, _, err = run_cli("verify", "--input", str(path))
        assert code == EXIT_INVALID_QUADRANGLE
        assert "invalid quadrangle" in err

    def test_color_disabled(self, square_file, monkeypatch):
        monkeypatch.setenv("HOMQUAD_COLOR", "never")
        _, _, err = run_cli("verify", "--input", square_file, "--lambda", "1/2")
        assert "\x1b[" not in err


class TestRoundTrip:
    def test_generate_classify_construct_verify(self, tmp_path):
        for seed in (1, 7, 23):
            path = tmp_path / f"q{seed}.json"
            code, _, _ = run_cli("generate", "--seed", str(seed), "--output", str(path))
            assert code == EXIT_OK
            assert run_cli("classify", "--input", str(path))[0] == EXIT_OK
            assert (
                run_cli("construct", "--input", str(path), "--lambda", "1/2")[0] == EXIT_OK
            )
            assert run_cli("verify", "--input", str(path))[0] == EXIT_OK
