import json

import pytest

from bicext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_json_schema(capsys):
    code, out, _ = run(
        capsys,
        "solve", "--group", "Z", "--target", "[5|2]", "--known", "[3|4]",
        "--side", "right", "--output", "json",
    )
    assert code == 0
    assert json.loads(out) == {"kind": "Unique", "element": {"left": "6", "right": "2"}}


def test_solve_no_solution(capsys):
    code, out, _ = run(
        capsys,
        "solve", "--target", "[1|2]", "--known", "[3|4]", "--side", "right",
        "--output", "json",
    )
    assert code == 0
    assert json.loads(out) == {"kind": "NoSolution", "element": None}


def test_solve_sandwich(capsys):
    code, out, _ = run(
        capsys,
        "solve", "--target", "[1|2]", "--side", "sandwich",
        "--leftk", "[1|5]", "--rightk", "[7|2]", "--output", "json",
    )
    assert code == 0
    assert json.loads(out)["element"] == {"left": "5", "right": "7"}


def test_mul_and_inv(capsys):
    code, out, _ = run(capsys, "mul", "--group", "ZxZ", "[(0,0)|(0,1)]", "[(1,0)|(2,3)]")
    assert code == 0 and out.strip() == "[(1,-1)|(2,3)]"
    code, out, _ = run(capsys, "inv", "[3|5]")
    assert code == 0 and out.strip() == "[5|3]"


def test_leq(capsys):
    code, out, _ = run(capsys, "leq", "--s", "[3|5]", "--t", "[1|3]", "--output", "json")
    assert code == 0
    assert json.loads(out) == {"leq": True, "oracle": True}


def test_ideal(capsys):
    code, out, _ = run(
        capsys, "ideal", "--element", "[3|1]", "--anchor", "2", "--side", "right",
        "--output", "json",
    )
    assert code == 0 and json.loads(out) == {"member": True}


def test_upset(capsys):
    code, out, _ = run(
        capsys, "upset", "--base", "[2|3]", "--window", "3", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["members"] == [
        {"left": "-3", "right": "-2"},
        {"left": "-2", "right": "-1"},
        {"left": "-1", "right": "0"},
        {"left": "0", "right": "1"},
        {"left": "1", "right": "2"},
        {"left": "2", "right": "3"},
    ]


def test_upset_not_applicable_on_rationals(capsys):
    code, out, _ = run(capsys, "upset", "--group", "Q", "--base", "[0|1]")
    assert code == 0
    assert "not applicable" in out


def test_pmap_apply(capsys):
    code, out, _ = run(capsys, "pmap", "apply", "--g", "2", "--h", "5", "--x", "3")
    assert code == 0 and out.strip() == "6"


def test_pmap_apply_out_of_domain(capsys):
    code, _, err = run(capsys, "pmap", "apply", "--g", "2", "--h", "5", "--x", "1")
    assert code == 2 and "OutOfDomain" in err


def test_pmap_apply_missing_flags(capsys):
    code, _, err = run(capsys, "pmap", "apply", "--g", "2")
    assert code == 2


def test_pmap_check_compose(capsys):
    code, out, _ = run(
        capsys, "pmap", "check-compose", "--group", "ZxZ", "--window", "1",
        "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["pairs"] == 81 * 81


def test_witness(capsys):
    code, out, _ = run(
        capsys, "witness", "--seed", "[0|0]", "--target", "[-3|7]", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["right_translator"] == {"left": "6", "right": "-1"}
    assert payload["intermediate"] == {"left": "0", "right": "7"}
    assert payload["left_translator"] == {"left": "-1", "right": "-4"}


def test_escape_table(capsys):
    code, out, _ = run(capsys, "escape", "--a", "0", "--window", "2", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["points"] == 6
    regions = {c["excluded_region"] for c in payload["certificates"]}
    assert regions == {"left-ideal", "right-ideal"}


def test_escape_not_applicable_on_rationals(capsys):
    code, out, _ = run(capsys, "escape", "--group", "Q", "--a", "0", "--output", "json")
    assert code == 0
    assert json.loads(out)["not_applicable"] is True


def test_check_passes(capsys):
    code, out, _ = run(
        capsys, "check", "--group", "Z", "--window", "2", "--suites", "axioms,order"
    )
    assert code == 0
    assert "summary:" in out and " fail" in out


def test_check_json_is_sorted_and_stable(capsys):
    code, out, _ = run(
        capsys, "check", "--group", "Z", "--window", "2", "--suites", "axioms",
        "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["fail"] == 0


def test_check_rejects_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "--suites", "nonsense")
    assert code == 2


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "mul", "[oops|2]", "[1|1]")
    assert code == 2 and "literal error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--group", "Nope", "[1|1]", "[1|1]"])
    assert exc.value.code == 2
