import json
from pathlib import Path

import pytest

from hypergroup_synthesis.cli import build_parser, main

SPECS = Path(__file__).resolve().parents[1] / "specs"


def run_cli(capsys, *argv):
    code = main([str(arg) for arg in argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def assert_error(report, error_type, message, details=None):
    assert report == {
        "error": {
            "type": error_type,
            "message": message,
            "details": details or {},
        }
    }


def half_masses(*points):
    return [{"point": list(point), "re": "1/2", "im": "0"} for point in points]


def test_parser_lists_every_command():
    parser = build_parser()
    for command in ("verify", "check-eq", "conv", "fourier", "degree", "synth"):
        args = parser.parse_args([command, "--spec", "x.json"] + {
            "check-eq": ["--kind", "exponential"],
            "conv": ["--x", "1", "--y", "1"],
            "synth": ["--function", "f.json"],
        }.get(command, []))
        assert args.command == command
        assert args.box is None


def test_unknown_command_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["integrate", "--spec", "x.json"])
    assert excinfo.value.code == 2


def test_verify_chebyshev(capsys, spec_dir):
    code, report = run_json(capsys, "verify", "--spec", spec_dir["cheb2"], "--box", 3)
    assert code == 0
    assert report["passed"]
    assert report["axioms"]["passed"]
    assert [check["name"] for check in report["axioms"]["checks"]][:2] == ["degree_basis", "normalization"]
    assert len(report["equations"]) == 2
    assert report["equations"][0]["lambda"] == ["1", "1"]
    assert all(equation["passed"] for equation in report["equations"])


def test_verify_rejects_negative_linearization(capsys, spec_dir):
    code, report = run_json(capsys, "verify", "--spec", spec_dir["badrec"], "--box", 3)
    assert code == 1
    assert not report["passed"]
    assert report["equations"] == []
    checks = {check["name"]: check for check in report["axioms"]["checks"]}
    assert checks["nonnegativity"]["witness"] == {"x": [1], "y": [1], "w": [1], "value": "-1/4"}


def test_verify_is_deterministic(tmp_path, capsys, spec_dir):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for out in (first, second):
        code, text = run_cli(capsys, "verify", "--spec", spec_dir["cheb2"], "--box", 2, "--out", out)
        assert code == 0
        assert text.startswith("verify: all")
    assert first.read_bytes() == second.read_bytes()


def test_conv_2d(capsys, spec_dir):
    code, report = run_json(capsys, "conv", "--spec", spec_dir["cheb2"], "--x", "1,1", "--y", "1,1")
    assert code == 0
    assert report["x"] == [1, 1]
    points = sorted(entry["point"] for entry in report["measure"])
    assert points == [[0, 0], [0, 2], [2, 0], [2, 2]]
    assert {entry["re"] for entry in report["measure"]} == {"1/4"}


def test_conv_1d(capsys, spec_dir):
    code, report = run_json(capsys, "conv", "--spec", spec_dir["cheb1"], "--x", "3", "--y", "4")
    assert code == 0
    assert report["measure"] == half_masses((1,), (7,))


def test_conv_writes_report_and_prints_summary(tmp_path, capsys, spec_dir):
    out = tmp_path / "conv.json"
    code, text = run_cli(capsys, "conv", "--spec", spec_dir["cheb1"], "--x", "3", "--y", "4", "--out", out)
    assert code == 0
    assert text == "conv: [3] * [4] has 2 support points\n"
    assert json.loads(out.read_text())["measure"] == half_masses((1,), (7,))


def test_conv_dimension_mismatch(capsys, spec_dir):
    code, report = run_json(capsys, "conv", "--spec", spec_dir["cheb2"], "--x", "3", "--y", "1,1")
    assert code == 2
    assert_error(report, "validation", "Element [3] is not in N^2", {"dimension": 2, "field": "x"})


def test_conv_on_negative_hypergroup(capsys, spec_dir):
    code, report = run_json(capsys, "conv", "--spec", spec_dir["badrec"], "--x", "1", "--y", "1")
    assert code == 1
    assert report["error"]["type"] == "rejection"
    assert report["error"]["details"]["witness"] == [[1], [1], [1]]
    assert report["error"]["details"]["value"] == "-1/4"


def test_fourier_forward(capsys):
    code, report = run_json(
        capsys, "fourier", "--spec", SPECS / "cheb1.json", "--measure", SPECS / "measure_cheb1.json"
    )
    assert code == 0
    assert report["direction"] == "forward"
    assert report["poly"] == [{"alpha": [2], "coeff": "1"}]


def test_fourier_inverse(capsys, spec_dir, write_json):
    poly = write_json("square.json", [{"alpha": [2], "coeff": "1"}])
    code, report = run_json(capsys, "fourier", "--spec", spec_dir["cheb1"], "--poly", poly)
    assert code == 0
    assert report["direction"] == "inverse"
    assert report["measure"] == half_masses((0,), (2,))


@pytest.mark.parametrize("flags", [[], ["--measure", "m.json", "--poly", "p.json"]])
def test_fourier_needs_exactly_one_input(capsys, spec_dir, flags):
    code, report = run_json(capsys, "fourier", "--spec", spec_dir["cheb1"], *flags)
    assert code == 2
    assert_error(report, "validation", "Pass exactly one of --measure or --poly", {"field": "measure"})


def test_fourier_is_exact_only(capsys, spec_dir):
    code, report = run_json(
        capsys, "fourier", "--spec", spec_dir["cheb1"], "--measure", SPECS / "measure_cheb1.json", "--mode", "float"
    )
    assert code == 2
    assert_error(report, "usage", "The Fourier transform is exact-only", {"operation": "fourier"})


@pytest.mark.parametrize(
    "flags",
    [
        ["--kind", "exponential", "--lambda", "1/3,2/5"],
        ["--kind", "exponential", "--lambda", "1/3,2/5", "--mode", "float"],
        ["--kind", "sine", "--lambda", "1/3,2/5", "--a", "3,-5"],
        ["--kind", "moment", "--lambda", "1/3,2/5", "--alpha", "2,2"],
        ["--kind", "degree", "--lambda", "1/3,2/5", "--alpha", "1,1", "--order", "2"],
    ],
)
def test_check_eq_passes(capsys, spec_dir, flags):
    code, report = run_json(capsys, "check-eq", "--spec", spec_dir["cheb2"], "--box", 3, *flags)
    assert code == 0
    assert report["result"]["passed"]
    assert report["inputs"]["kind"] == flags[1]
    assert report["inputs"]["lambda"] == ["1/3", "2/5"]


def test_check_eq_exponential_law_fails_for_moment_function(capsys, spec_dir):
    code, report = run_json(
        capsys, "check-eq", "--spec", spec_dir["cheb2"], "--box", 3,
        "--kind", "exponential", "--function", SPECS / "functions" / "moment_11.json",
    )
    assert code == 1
    assert not report["result"]["passed"]
    assert report["result"]["counterexample"] is not None


def test_check_eq_degree_too_low(capsys, spec_dir):
    code, report = run_json(
        capsys, "check-eq", "--spec", spec_dir["cheb2"], "--box", 3,
        "--kind", "degree", "--lambda", "1/3,2/5", "--alpha", "1,1", "--order", "1",
    )
    assert code == 1
    assert "ys" in report["result"]["counterexample"]


def test_check_eq_missing_lambda(capsys, spec_dir):
    code, report = run_json(capsys, "check-eq", "--spec", spec_dir["cheb2"], "--kind", "moment", "--alpha", "1,1")
    assert code == 2
    assert_error(report, "validation", "--lambda is required for moment", {"field": "lambda"})


def test_degree_of_moment_member(capsys, spec_dir):
    code, report = run_json(
        capsys, "degree", "--spec", spec_dir["cheb2"], "--box", 4, "--alpha", "1,1", "--lambda", "1/3,2/5"
    )
    assert code == 0
    assert report["n_max"] == 2
    assert report["result"]["degree"] == 2
    assert report["m_lambda"] == ["1/3", "2/5"]


def test_degree_not_found_below_cap(capsys, spec_dir):
    code, report = run_json(
        capsys, "degree", "--spec", spec_dir["cheb2"], "--box", 4,
        "--alpha", "2,1", "--lambda", "1/3,2/5", "--n-max", "1",
    )
    assert code == 1
    assert report["result"]["degree"] is None


def test_synth_moment_member(capsys):
    code, report = run_json(
        capsys, "synth", "--spec", SPECS / "cheb2.json", "--function", SPECS / "functions" / "moment_11.json"
    )
    assert code == 0
    assert report["command"] == "synth"
    assert report["residual"] == "0"
    assert report["variety_dim"] == 4
    assert report["sine_dim"] == 2


def test_synth_needs_lambda_for_several_points(capsys, spec_dir, write_json):
    function = write_json(
        "two_points.json",
        {
            "terms": [
                {"coeff": "1", "alpha": [0, 0], "lambda": ["1/3", "2/5"]},
                {"coeff": "1", "alpha": [0, 0], "lambda": ["1", "1/2"]},
            ]
        },
    )
    code, report = run_json(capsys, "synth", "--spec", spec_dir["cheb2"], "--function", function)
    assert code == 2
    assert report["error"]["type"] == "usage"


def test_missing_spec(capsys):
    code, report = run_json(capsys, "verify")
    assert code == 2
    assert_error(report, "validation", "A hypergroup spec file is required", {"field": "spec"})


def test_unreadable_spec(capsys, tmp_path):
    code, report = run_json(capsys, "verify", "--spec", tmp_path / "missing.json")
    assert code == 2
    assert report["error"]["type"] == "validation"
    assert report["error"]["details"]["field"] == "spec"


def test_invalid_spec_kind(capsys, write_json):
    spec = write_json("bad.json", {"kind": "legendre"})
    code, report = run_json(capsys, "verify", "--spec", spec)
    assert code == 2
    assert report["error"]["details"]["field"] == "kind"


def test_box_must_be_positive(capsys, spec_dir):
    code, report = run_json(capsys, "verify", "--spec", spec_dir["cheb1"], "--box", 0)
    assert code == 2
    assert_error(report, "validation", "Box must be at least 1, got 0", {"field": "box"})


def test_conv_with_identity(capsys, spec_dir):
    code, report = run_json(capsys, "conv", "--spec", spec_dir["cheb1"], "--x", "0", "--y", "5")
    assert code == 0
    assert report["measure"] == [{"point": [5], "re": "1", "im": "0"}]


def test_synth_exponential_is_one_atom(capsys, spec_dir, write_json):
    function = write_json(
        "exponential.json", [{"coeff": "5/3", "alpha": [0, 0], "lambda": ["1/3", "2/5"]}]
    )
    code, report = run_json(capsys, "synth", "--spec", spec_dir["cheb2"], "--function", function)
    assert code == 0
    assert report["atoms"] == [{"alpha": [0, 0], "lambda": ["1/3", "2/5"]}]
    assert report["coefficients"] == ["5/3"]
    assert report["degree"] == 0


def test_check_eq_float_mode_at_irrational_point(capsys, spec_dir):
    code, report = run_json(
        capsys, "check-eq", "--spec", spec_dir["cheb1"], "--box", 10,
        "--kind", "exponential", "--mode", "float", "--lambda", "0.7071067811865476",
    )
    assert code == 0
    assert report["inputs"]["lambda"] == [0.7071067811865476]
    assert report["result"]["mode"] == "float"
    assert report["result"]["max_residual"] <= report["result"]["tolerance"]


def test_check_eq_float_function_file(capsys, spec_dir, write_json):
    function = write_json("decimal.json", [{"coeff": 1, "alpha": [0, 0], "lambda": [0.5, {"re": "0.1", "im": "0.2"}]}])
    code, report = run_json(
        capsys, "check-eq", "--spec", spec_dir["cheb2"], "--box", 3,
        "--kind", "exponential", "--mode", "float", "--function", function,
    )
    assert code == 0
    assert report["inputs"]["function"][0]["lambda"] == [0.5, {"re": 0.1, "im": 0.2}]


def test_decimals_need_float_mode(capsys, spec_dir):
    code, report = run_json(
        capsys, "check-eq", "--spec", spec_dir["cheb1"], "--kind", "exponential", "--lambda", "0.5",
    )
    assert code == 2
    assert_error(
        report, "validation", "Invalid rational: '0.5'", {"hint": "decimals need --mode float", "field": "lambda"}
    )


def test_synth_rejects_float_inputs(capsys, spec_dir, write_json):
    function = write_json("decimal.json", [{"coeff": "1", "alpha": [1, 0], "lambda": ["0.25", "1/3"]}])
    code, report = run_json(
        capsys, "synth", "--spec", spec_dir["cheb2"], "--mode", "float", "--function", function
    )
    assert code == 2
    assert report["error"]["type"] == "usage"
    assert report["error"]["details"]["operation"] == "variety_basis"
