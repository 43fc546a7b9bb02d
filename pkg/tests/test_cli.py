import io
import json

import pytest

from primgen.cli import REPORT_KEYS, AnalysisReport, analyze, main
from primgen.perm import parse_permutation
from primgen.theorem import classify_generator

from conftest import EX1_ALPHA, EX2_ALPHA

EX1_G1 = [EX1_ALPHA, "(2 3)(5 6)"]
EX1_G2 = [EX1_ALPHA, "(1 6)(2 7)(3 8)(4 9)(5 10)"]


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    return code, json.loads(text)


def test_analyze_m_partition():
    code, text = run("analyze", EX1_ALPHA)
    assert code == 2
    assert "verdict: FailsMPartition" in text
    assert "m=5" in text
    code, data = run_json("analyze", EX1_ALPHA)
    assert data["verdict"] == "FailsMPartition"
    assert data["certificates"][0]["m"] == 5
    assert data["partition"] == [2, 3, 5]


def test_analyze_qualifies():
    code, data = run_json("analyze", "(2 3 4 5 6 7 8 9 10 11 12)", "--degree", "12")
    assert code == 0
    assert data["verdict"] == "QualifiesL2" and data["partition"] == [1, 11]


def test_analyze_malformed(capsys):
    code, _ = run("analyze", "(1 2 3")
    assert code == 1
    assert "position" in capsys.readouterr().err


def test_analyze_strict_flag():
    assert run_json("analyze", EX2_ALPHA)[1]["verdict"] == "FailsSpecialMPartition"
    code, data = run_json("analyze", EX2_ALPHA, "--strict-defs")
    assert code == 0 and data["verdict"] == "QualifiesL3Plus"


@pytest.mark.parametrize("perm", [EX1_ALPHA, EX2_ALPHA, "(1 2)(3 4)", "(1 2 3 4 5)", "(1 2)(3 4 5)"])
def test_text_and_json_verdicts_agree(perm):
    code_text, text = run("analyze", perm)
    code_json, data = run_json("analyze", perm)
    assert code_text == code_json
    assert f"verdict: {data['verdict']}" in text
    assert data["verdict"] == classify_generator(parse_permutation(perm)).tag.value


def test_analysis_report_round_trip():
    report = analyze(EX2_ALPHA)
    data = json.loads(json.dumps(report.to_dict()))
    assert AnalysisReport.from_dict(data) == report
    assert set(REPORT_KEYS) <= set(data)


def test_group_blocks():
    code, text = run("group", *EX1_G2, "--blocks")
    assert code == 0
    assert "primitive: no" in text
    assert "block system: {1,2,3,4,5} {6,7,8,9,10}" in text
    code, data = run_json("group", *EX1_G2, "--blocks")
    assert data["block_systems"] == [[[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]]]


def test_group_order():
    code, data = run_json("group", *EX1_G1, "--order", "--identify")
    assert code == 0
    assert data["order"] == "3628800"
    assert data["primitive"] is True and data["identity"] == "Symmetric"


def test_group_large_order_is_decimal_string():
    code, data = run_json("group", EX2_ALPHA, "(25 26)(27 28)", "--order")
    assert data["order"] == "265252859812191058636308480000000"


def test_group_intransitive():
    code, data = run_json("group", "(1 2)", "--degree", "4")
    assert code == 0 and data["transitive"] is False and data["primitive"] is None
    code, _ = run("group", "(1 2)", "--degree", "4", "--blocks")
    assert code == 1


def test_group_from_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# example 1, imprimitive\n" + EX1_ALPHA + "\n\n(1 6)(2 7)(3 8)(4 9)(5 10)  # swap halves\n")
    code, data = run_json("group", "--file", str(path), "--blocks")
    assert code == 0 and data["primitive"] is False
    assert len(data["generators"]) == 2


def test_group_degree_mismatch():
    code, _ = run("group", "(1 2 3 4 5 6)", "--degree", "4")
    assert code == 1


def test_group_requires_generators():
    assert run("group")[0] == 1


def test_witness():
    code, text = run("witness", EX1_ALPHA, "1,2,3")
    assert code == 0 and "exponent: 2" in text
    code, data = run_json("witness", EX1_ALPHA, "1,2,3")
    w = data["witness"]
    alpha = parse_permutation(EX1_ALPHA)
    image = {(alpha ** w["exponent"])(x) for x in (1, 2, 3)}
    assert image == set(w["image"]) and image != {1, 2, 3} and image & {1, 2, 3}


def test_witness_none():
    code, text = run("witness", EX1_ALPHA, "6,7,8,9,10")
    assert code == 0 and text.strip() == "none"
    assert run_json("witness", EX1_ALPHA, "6,7,8,9,10")[1]["witness"] is None


@pytest.mark.parametrize("text", ["1,2,3,4,5,6,7,8,9,10", "1,x", "", "0,1"])
def test_witness_bad_set(text):
    assert run("witness", EX1_ALPHA, text)[0] == 1


def test_catalog_m12_verify():
    code, data = run_json("catalog", "m12", "--verify")
    assert code == 0
    assert data["primitive"] is True and data["order"] == "95040"
    assert data["verdict"] == "QualifiesL2"
    assert all(data["checks"].values())


def test_catalog_ex4_2_g2_verify():
    code, text = run("catalog", "ex4_2_G2", "--verify")
    assert code == 0
    assert "primitive: no" in text
    assert "6 blocks of size 5" in text


def test_catalog_unknown():
    assert run("catalog", "nosuch")[0] == 1


def test_catalog_listing():
    code, text = run("catalog")
    assert code == 0 and "m24" in text.split()


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


@pytest.mark.parametrize("argv", [
    ["analyze", EX1_ALPHA],
    ["group", *EX1_G2, "--blocks", "--order"],
    ["witness", EX1_ALPHA, "1,2,3"],
    ["catalog", "psl_2_7", "--verify"],
])
def test_json_keys_are_stable(argv):
    _, data = run_json(*argv)
    assert set(REPORT_KEYS) <= set(data)
