import json
from fractions import Fraction

import pytest

from hkrr import cli


def run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def run_json(argv, capsys):
    code, out = run(argv + ["--format", "json"], capsys)
    return code, json.loads(out)


# ----------------------------------------------------------------------- rr


def test_rr_og10(capsys):
    code, report = run_json(["rr", "og10"], capsys)
    assert code == 0
    assert report["results"]["constants"]["a_0"] == "6"
    assert report["results"]["constants"]["a_5"] == "945"
    assert all(c["pass"] for c in report["checks"])


def test_rr_og6_eval_at_minus_two(capsys):
    code, report = run_json(["rr", "og6", "--eval=-2"], capsys)
    assert code == 0
    assert report["results"]["chi"] == "0"


def test_rr_k3_surface(capsys):
    code, report = run_json(["rr", "k3n", "--n", "1", "--eval", "0"], capsys)
    assert code == 0
    assert report["results"]["chi"] == "2"
    assert report["results"]["polynomial"] == ["2", "1/2"]


def test_rr_rationals_roundtrip_through_json(capsys):
    _, report = run_json(["rr", "og10"], capsys)
    coeffs = [Fraction(c) for c in report["results"]["polynomial"]]
    assert coeffs[0] == 6
    assert coeffs[5] == Fraction(1, 3840)
    assert [str(c) for c in coeffs] == report["results"]["polynomial"]


def test_rr_unknown_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["rr", "banana"])
    assert excinfo.value.code == 2


def test_rr_k3n_requires_n(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["rr", "k3n"])
    assert excinfo.value.code == 2


def test_rr_og6_rejects_wrong_n(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["rr", "og6", "--n", "4"])
    assert excinfo.value.code == 2


# --------------------------------------------------------------------- chern


def test_chern_json_schema_and_values(capsys):
    code, report = run_json(["chern", "og10"], capsys)
    assert code == 0
    assert list(report) == ["family", "chern_numbers", "checks"]
    assert report["family"] == "OG10"
    assert list(report["chern_numbers"]) == [
        "c2^5",
        "c2^3*c4",
        "c2^2*c6",
        "c2*c8",
        "c2*c4^2",
        "c4*c6",
        "c10",
    ]
    assert report["chern_numbers"]["c2^5"] == "127370880"
    assert report["chern_numbers"]["c10"] == "176904"
    assert all(c["pass"] for c in report["checks"])


def test_chern_reports_rank_three(capsys):
    _, report = run_json(["chern", "og10"], capsys)
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["rr_equations_rank"]["actual"] == "3"
    assert by_name["combined_rank"]["actual"] == "7"


def test_chern_rejects_other_targets(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["chern", "og6"])
    assert excinfo.value.code == 2


# -------------------------------------------------------------------- verify


@pytest.mark.parametrize("suite", ["og10", "og6", "fujiki", "identity", "all"])
def test_verify_suites_pass(suite, capsys):
    code, report = run_json(["verify", suite], capsys)
    assert code == 0
    assert report["checks"]
    assert all(c["pass"] for c in report["checks"])


def test_verify_output_is_deterministic(capsys):
    _, first = run(["verify", "all", "--format", "json"], capsys)
    _, second = run(["verify", "all", "--format", "json"], capsys)
    assert first == second


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["verify", "everything"])
    assert excinfo.value.code == 2


def test_verify_table_output_mentions_checks(capsys):
    code, out = run(["verify", "og10"], capsys)
    assert code == 0
    assert "[ok ]" in out
    assert "FAIL" not in out


# -------------------------------------------------------------------- fujiki


def write_gram(tmp_path, payload):
    path = tmp_path / "gram.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_fujiki_theta_fiber(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["F", "Theta"], "entries": [[0, 1], [1, 0]]})
    code, report = run_json(
        ["fujiki", "--cx", "945", "--gram", gram, "--slots", "F^5,Theta^5"], capsys
    )
    assert code == 0
    assert report["results"]["integral"] == "120"


def test_fujiki_single_class(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["a"], "entries": [[3]]})
    code, report = run_json(
        ["fujiki", "--cx", "1", "--gram", gram, "--slots", "a^2"], capsys
    )
    assert code == 0
    assert report["results"]["integral"] == "3"


def test_fujiki_fractional_entries(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["a"], "entries": [["1/2"]]})
    code, report = run_json(
        ["fujiki", "--cx", "4", "--gram", gram, "--slots", "a^4"], capsys
    )
    assert code == 0
    assert report["results"]["integral"] == "1"  # 4 * (1/2)^2


def test_fujiki_odd_slots_is_usage_error(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["a"], "entries": [[3]]})
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["fujiki", "--cx", "1", "--gram", gram, "--slots", "a^3"])
    assert excinfo.value.code == 2


def test_fujiki_rejects_float_entries(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["a"], "entries": [[0.5]]})
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["fujiki", "--cx", "1", "--gram", gram, "--slots", "a^2"])
    assert excinfo.value.code == 2


def test_fujiki_missing_gram_file(tmp_path, capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["fujiki", "--cx", "1", "--gram", str(tmp_path / "no.json"), "--slots", "a^2"])
    assert excinfo.value.code == 2


def test_fujiki_unknown_label(tmp_path, capsys):
    gram = write_gram(tmp_path, {"labels": ["a"], "entries": [[3]]})
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["fujiki", "--cx", "1", "--gram", gram, "--slots", "a,b"])
    assert excinfo.value.code == 2


# ----------------------------------------------------------------------- chi


def test_chi_og6(capsys):
    code, report = run_json(["chi", "--family", "og6", "--q=-8"], capsys)
    assert code == 0
    assert report["results"]["chi"] == "-4"


def test_chi_fractional_square(capsys):
    code, report = run_json(["chi", "--family", "k3n", "--n", "1", "--q", "1/3"], capsys)
    assert code == 0
    assert report["results"]["chi"] == "13/6"


def test_chi_requires_q(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["chi", "--family", "og6"])
    assert excinfo.value.code == 2


def test_bad_fraction_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["chi", "--family", "og6", "--q", "two"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["chi", "--family", "og6", "--q", "1/0"])
    assert excinfo.value.code == 2
