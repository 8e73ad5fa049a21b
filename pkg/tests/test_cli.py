import json
from fractions import Fraction

import pytest

import golden
from mckay_moduli.cli import main, parse_group_spec
from mckay_moduli.errors import GroupSpecError


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_parse_group_spec_cyclic():
    assert parse_group_spec("1/7(1,2)") == ((7,), ((1, 2),))
    assert parse_group_spec("  1/11(1,2,8) ") == ((11,), ((1, 2, 8),))
    assert parse_group_spec("1/3(1,-2)") == ((3,), ((1, -2),))


def test_parse_group_spec_product():
    assert parse_group_spec("2x2:1,0;0,1") == ((2, 2), ((1, 0), (0, 1)))
    assert parse_group_spec("2x4:1,1;0,3") == ((2, 4), ((1, 1), (0, 3)))


def test_parse_group_spec_error_positions():
    with pytest.raises(GroupSpecError) as err:
        parse_group_spec("1/7(1,x)")
    assert err.value.position == 6
    with pytest.raises(GroupSpecError) as err:
        parse_group_spec("1/(1,2)")
    assert err.value.position == 2
    with pytest.raises(GroupSpecError) as err:
        parse_group_spec("2x2:1,0")
    assert err.value.position >= 0
    with pytest.raises(GroupSpecError):
        parse_group_spec("")
    with pytest.raises(GroupSpecError):
        parse_group_spec("7(1,2)")


def test_quiver_json_golden(capsys):
    rc, out, _ = run_cli(capsys, "quiver", "--group", "1/7(1,2)")
    assert rc == 0
    doc = json.loads(out)
    assert doc["schema"] == "mckay-moduli/1"
    assert doc["quiver"]["c"] == [list(r) for r in golden.C_MATRIX_7_12]
    assert len(doc["quiver"]["arrows"]) == 14
    assert doc["group"]["orders"] == [7]


def test_quiver_trivial_group(capsys):
    rc, out, _ = run_cli(capsys, "quiver", "--group", "1/1(0)")
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["quiver"]["vertices"]) == 1
    assert len(doc["quiver"]["arrows"]) == 1
    arrow = doc["quiver"]["arrows"][0]
    assert arrow["head"] == 0 and arrow["tail"] == 0


def test_malformed_spec_exit_code(capsys):
    rc, _, err = run_cli(capsys, "quiver", "--group", "1/7(1,x)")
    assert rc == 2
    assert "x" in err


def test_bad_theta_exit_code(capsys):
    rc, _, err = run_cli(capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "1,1,1")
    assert rc == 2
    assert "error" in err


def test_negative_w_exit_code(capsys):
    rc, _, err = run_cli(
        capsys, "rep", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--w", "-1,0,0"
    )
    assert rc == 2


def test_svg_requires_three_coordinates(capsys, tmp_path):
    target = tmp_path / "fan.svg"
    rc, _, err = run_cli(
        capsys, "fan", "--group", "1/2(1,1)", "--theta", "-1,1",
        "--svg", str(target),
    )
    assert rc == 3
    assert not target.exists()


def test_svg_output(capsys, tmp_path):
    target = tmp_path / "fan.svg"
    rc, out, _ = run_cli(
        capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1",
        "--svg", str(target),
    )
    assert rc == 0
    svg = target.read_text()
    assert svg.startswith("<svg")
    assert "legend" in svg
    assert "0: (" in svg
    assert svg.count("<polygon") == 3
    assert svg.count("<circle") == 4


def test_fan_json_weight_one(capsys):
    rc, out, _ = run_cli(capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1")
    assert rc == 0
    doc = json.loads(out)
    pt = doc["p_theta"]
    ineqs = {(tuple(i["coeffs"]), i["rhs"]) for i in pt["inequalities"]}
    assert ineqs == golden.W1_INEQS
    verts = {tuple(Fraction(x) for x in v) for v in pt["vertices"]}
    assert verts == {(3, 0, 0), (0, 3, 0), (0, 0, 3)}
    assert {tuple(r) for r in pt["rays"]} == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    fan = doc["fan"]
    assert {tuple(r) for r in fan["rays"]} == golden.W1_FAN_RAYS
    assert len(fan["maximal_cones"]) == 3
    assert "charts" not in fan


def test_fan_with_charts(capsys):
    rc, out, _ = run_cli(
        capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--charts", "6"
    )
    assert rc == 0
    doc = json.loads(out)
    charts = doc["fan"]["charts"]
    assert len(charts) == 3
    assert all(ch["saturated_up_to_bound"] for ch in charts)
    assert all(ch["bound"] == 6 for ch in charts)


def test_fan_theta_zero_single_cone(capsys):
    rc, out, _ = run_cli(capsys, "fan", "--group", "1/2(1,1)", "--theta", "0,0")
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["fan"]["maximal_cones"]) == 1


def test_lifted_and_oracle_documents_identical(capsys):
    rc1, out1, _ = run_cli(
        capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--oracle"
    )
    rc2, out2, _ = run_cli(
        capsys, "fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--lifted"
    )
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_ghilb_flag_matches_explicit_theta(capsys):
    rc1, out1, _ = run_cli(capsys, "fan", "--group", "1/2(1,1)", "--ghilb")
    rc2, out2, _ = run_cli(capsys, "fan", "--group", "1/2(1,1)", "--theta", "-1,1")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["theta"] == ["-1/1", "1/1"]


def test_ghilb_excludes_theta(capsys):
    rc, _, _ = run_cli(
        capsys, "fan", "--group", "1/2(1,1)", "--ghilb", "--theta", "-1,1"
    )
    assert rc == 2


def test_rep_document(capsys):
    rc, out, _ = run_cli(
        capsys, "rep", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--w", "1,2,2"
    )
    assert rc == 0
    doc = json.loads(out)
    rep = doc["rep"]
    assert set(rep["b"]) <= {0, 1}
    assert rep["tight_set"] == sorted(rep["tight_set"])
    assert all(rep["b"][k] == 1 for k in rep["tight_set"])
    assert sum(rep["b"]) == len(rep["tight_set"])
    assert rep["mode"] == "face"
    for token in rep["w"] + rep["v"] + [rep["value"]]:
        num, den = token.split("/")
        assert Fraction(int(num), int(den)) == Fraction(token)


def test_rep_single_optimizer_flag(capsys):
    rc, out, _ = run_cli(
        capsys, "rep", "--group", "1/3(1,1,1)", "--theta", "-2,1,1",
        "--w", "1,2,2", "--single-optimizer",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["rep"]["mode"] == "single"


def test_rep_w_zero_all_ones(capsys):
    rc, out, _ = run_cli(
        capsys, "rep", "--group", "1/5(1,3)", "--ghilb", "--w", "0,0"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["rep"]["b"] == [1] * 10


def test_byte_determinism_small(capsys):
    args = ("fan", "--group", "1/3(1,1,1)", "--theta", "-2,1,1", "--charts", "4")
    rc1, out1, _ = run_cli(capsys, *args)
    rc2, out2, _ = run_cli(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_check_command_passes(capsys):
    rc, out, _ = run_cli(capsys, "check", "--group", "1/7(1,2)")
    assert rc == 0
    assert "all checks passed" in out
    assert "FAIL" not in out


def test_check_command_klein(capsys):
    rc, out, _ = run_cli(
        capsys, "check", "--group", "2x2:1,0;0,1", "--bound", "4", "--trials", "5"
    )
    assert rc == 0
    assert "ok   construction-agreement" in out


def test_check_command_n_one(capsys):
    rc, out, _ = run_cli(capsys, "check", "--group", "1/2(1)", "--bound", "4")
    assert rc == 0
    assert "all checks passed" in out


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "doc.json"
    rc, out, _ = run_cli(
        capsys, "quiver", "--group", "1/2(1,1)", "--output", str(target)
    )
    assert rc == 0
    doc = json.loads(target.read_text())
    assert doc["schema"] == "mckay-moduli/1"


def test_text_format(capsys):
    rc, out, _ = run_cli(capsys, "quiver", "--group", "1/2(1,1)", "--format", "text")
    assert rc == 0
    assert "arrow" in out
    rc, out, _ = run_cli(
        capsys, "rep", "--group", "1/2(1,1)", "--theta", "-1,1", "--w", "1,1",
        "--format", "text",
    )
    assert rc == 0
    assert "tight set" in out


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("MCKAY_THREADS", "zero")
    rc, _, err = run_cli(capsys, "quiver", "--group", "1/2(1,1)")
    assert rc == 2
    assert "MCKAY_THREADS" in err
    monkeypatch.setenv("MCKAY_THREADS", "2")
    rc, out, _ = run_cli(capsys, "quiver", "--group", "1/2(1,1)")
    assert rc == 0


def test_missing_subcommand_is_input_error(capsys):
    rc = main([])
    capsys.readouterr()
    assert rc == 2
