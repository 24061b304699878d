import json
from fractions import Fraction

import mpmath
import pytest

from qpoch.application import EXIT_DOMAIN, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, cli_main
from qpoch.cli.requests import as_integer, parse_number
from qpoch.config import AppConfig
from qpoch.core.arith import ExactComplex, Precision
from qpoch.expansions.coefficients import FIXED_Y_NOTE, regime_coefficients
from qpoch.identity.qpoch import oracle_log_qpoch
from qpoch.repositories.results import load_sweep


def run(capsys, *argv):
    code = cli_main(list(argv), config=AppConfig())
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_prints_table(capsys):
    code, out, _ = run(capsys, "expand", "--c", "1/2", "--max-exp", "1")
    assert code == EXIT_OK
    assert out == regime_coefficients(Fraction(1, 2), 1).render() + "\n"


def test_expand_fixed_y_prints_note(capsys):
    code, out, _ = run(capsys, "expand", "--c", "0", "--max-exp", "3")
    assert code == EXIT_OK
    assert out.strip() == FIXED_Y_NOTE


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--c", "2", "--max-exp", "2", "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["regime"] == "c_large"
    assert document["cutoff"] == "2"
    assert document["terms"]


def test_expand_numeric_groups(capsys):
    code, out, _ = run(capsys, "expand", "--c", "1", "--max-exp", "2", "--numeric", "--x", "3", "--beta", "1/16", "--format", "json")
    assert code == EXIT_OK
    groups = json.loads(out)
    assert [group["beta_exp"] for group in groups] == ["-1", "0", "1", "2"]


def test_expand_numeric_needs_point(capsys):
    code, _, err = run(capsys, "expand", "--c", "1", "--max-exp", "2", "--numeric")
    assert code == EXIT_USAGE
    assert "--x" in err


def test_eval_oracle_matches_library(capsys):
    code, out, _ = run(capsys, "eval", "--y", "1", "--beta", "1/16", "--prec", "128", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    prec = Precision(128)
    expected = oracle_log_qpoch(Fraction(1), Fraction(1, 16), prec).log_value
    assert record["method"] == "oracle"
    assert record["y"] == "1"
    assert record["beta"] == "1/16"
    assert record["prec_bits"] == 128
    assert record["log_value_re"] == prec.format(expected.real)


def test_eval_identity_agrees_with_oracle(capsys):
    _, oracle_out, _ = run(capsys, "eval", "--y", "1", "--beta", "1/16", "--format", "json")
    code, identity_out, _ = run(capsys, "eval", "--y", "1", "--beta", "1/16", "--method", "identity", "--format", "json")
    assert code == EXIT_OK
    oracle = json.loads(oracle_out)
    identity = json.loads(identity_out)
    difference = abs(mpmath.mpf(oracle["log_value_re"]) - mpmath.mpf(identity["log_value_re"]))
    assert difference <= 2 * mpmath.mpf(identity["tail_bound"]) + mpmath.mpf("1e-12")


def test_eval_regime_needs_c(capsys):
    code, _, err = run(capsys, "eval", "--y", "3", "--beta", "1/16", "--method", "regime")
    assert code == EXIT_USAGE
    assert "--c" in err


def test_eval_csv_layout(capsys):
    code, out, _ = run(capsys, "eval", "--y", "2", "--beta", "1/8", "--method", "uniform", "--prec", "128")
    assert code == EXIT_OK
    header, row = out.strip().splitlines()
    assert header.split(",")[:3] == ["method", "y", "beta"]
    assert row.startswith("uniform,2,1/8,128,")


def test_verify_dedekind(capsys):
    code, out, _ = run(capsys, "verify", "--check", "dedekind", "--beta", "1/2", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["check"] == "dedekind"
    assert mpmath.mpf(record["residual"]) < mpmath.mpf("1e-70")


def test_verify_missing_argument(capsys):
    code, _, err = run(capsys, "verify", "--check", "theta", "--beta", "1/2")
    assert code == EXIT_USAGE
    assert "--x" in err


@pytest.mark.parametrize(
    "argv,code",
    [
        (("verify", "--check", "conv-series", "--x", "5/2", "--beta", "1/16"), EXIT_DOMAIN),
        (("estimate", "--regime", "c1", "--c", "1", "--x", "5/2", "--beta", "1/16"), EXIT_DOMAIN),
        (("verify", "--check", "conv-series", "--x", "2", "--beta", "10"), EXIT_NUMERIC),
        (("eval", "--y", "1", "--beta", "1/16", "--prec", "16"), EXIT_NUMERIC),
        (("sweep", "--regime", "c0", "--x", "1", "--beta", "1/16"), EXIT_USAGE),
        (("sweep", "--regime", "c0", "--x", "1", "--beta", "1/16", "--max-order", "-1"), EXIT_USAGE),
        (("eval", "--y", "one", "--beta", "1/16"), EXIT_USAGE),
        (("bogus",), EXIT_USAGE),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_sweep_json_meta(capsys):
    code, out, _ = run(capsys, "sweep", "--regime", "c0", "--x", "3", "--beta", "1/16", "--max-order", "3", "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["meta"] == {
        "regime": "c0",
        "c": "0",
        "x": "3",
        "beta": "1/16",
        "prec_bits": 256,
        "max_order": 3,
    }
    assert [row["order"] for row in document["rows"]] == [-1, 0, 1, 3]


def test_sweep_is_deterministic(capsys):
    argv = ("sweep", "--regime", "c_small", "--c", "1/2", "--x", "1", "--beta", "1/16", "--max-order", "3")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    assert first.splitlines()[0] == "order,beta_exp,partial_re,partial_im,abs_error"


def test_sweep_to_file(capsys, tmp_path):
    target = tmp_path / "sweep.json"
    code, out, _ = run(
        capsys, "sweep", "--regime", "uniform", "--x", "1", "--beta", "1/16", "--max-order", "5", "--format", "json", "--out", str(target)
    )
    assert code == EXIT_OK
    assert out == ""
    assert [row.order for row in load_sweep(target)] == [0, 1, 3, 5]


def test_estimate_record(capsys):
    code, out, _ = run(capsys, "estimate", "--regime", "c_large", "--c", "2", "--x", "3", "--beta", "1/16", "--format", "json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["formula_id"] == "large-c"
    assert 2.9e-276 < float(mpmath.mpf(record["r_star"])) < 3.1e-276


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", Fraction(3)),
        ("1/16", Fraction(1, 16)),
        ("0.125", Fraction(1, 8)),
        ("1e-3", Fraction(1, 1000)),
        ("2+i", ExactComplex(Fraction(2), Fraction(1))),
        ("1.5-2.5i", ExactComplex(Fraction(3, 2), Fraction(-5, 2))),
        ("-i", ExactComplex(Fraction(0), Fraction(-1))),
        ("3j", ExactComplex(Fraction(0), Fraction(3))),
        ("1e-2+1e-3i", ExactComplex(Fraction(1, 100), Fraction(1, 1000))),
        ("4+0i", Fraction(4)),
    ],
)
def test_parse_number(text, expected):
    assert parse_number(text) == expected


def test_parse_number_rejects_garbage():
    with pytest.raises(ValueError):
        parse_number("pi")
    with pytest.raises(ValueError):
        parse_number(" ")
    with pytest.raises(ValueError):
        as_integer(Fraction(5, 2))
    assert as_integer(Fraction(4)) == 4
