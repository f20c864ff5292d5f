import csv
import io
import json
import math
from fractions import Fraction

import pytest

from wreathgrowth import checks
from wreathgrowth.cli import main, significant
from wreathgrowth.partitions import partition_count
from wreathgrowth.qseries import Series


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_significant_digits():
    assert significant(Fraction(2)) == "2.000000000"
    assert significant(Fraction(1605340, 176963)) == "9.071613840"
    assert significant(Fraction(1, 3), 4) == "0.3333"
    assert significant(Fraction(123456789012, 1)) == "123456789000"


def test_coeffs_sym(capsys):
    code, out, _ = run(capsys, "coeffs", "sym", "--m", "10", "--order", "10")
    assert code == 0
    assert out.splitlines()[-1].split() == ["10", "1605340"]


def test_coeffs_alt_base(capsys):
    _, out, _ = run(capsys, "coeffs", "alt-base", "--order", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "gamma"], ["0", "1"], ["1", "1"], ["2", "3"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["coeffs", "sym", "--m", "0"],
        ["coeffs", "alt"],
        ["coeffs", "sym-base", "--m", "2"],
        ["coeffs", "sym", "--m", "2", "--order", "-1"],
        ["hooks", "1", "2"],
        ["hooks", "3", "0"],
        ["fhat", "1"],
        ["fhat", "31"],
        ["asympt", "sym", "--m", "1", "--n", "0"],
        ["asympt", "--generic", "0,2", "--index", "7"],
        ["asympt", "--generic", "0,0", "--n", "3"],
        ["asympt", "--n", "4"],
        ["ratio-table", "--rows", "0"],
        ["hooksum", "--r", "x", "--n", "3"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert usage_error(capsys, *argv) == 2


def test_ratio_table_defaults(capsys):
    _, out, _ = run(capsys, "ratio-table")
    rows = {int(r[0]): r[1:] for r in (line.split() for line in out.splitlines()[1:])}
    assert rows[1] == ["10", "5", "2.000000000"]
    assert rows[10][2] == "9.071613840"
    assert rows[500][2] == "31.99935959"
    assert sorted(rows) == [1, 10, 100, 200, 300, 400, 500]


def test_hooks(capsys):
    _, out, _ = run(capsys, "hooks", "6", "4", "3", "1", "1")
    assert out == "10 7 6 4 2 1\n7 4 3 1\n5 2 1\n2\n1\n"
    _, out, _ = run(capsys, "hooks", "1")
    assert out == "1\n"
    _, out, _ = run(capsys, "hooks", "2", "1", "--format", "json")
    assert json.loads(out)["rows"] == [{"row": "1", "hooks": ["3", "1"]}, {"row": "2", "hooks": ["1"]}]


def test_fhat(capsys):
    _, out, _ = run(capsys, "fhat", "2")
    assert out == "1/2 x1^2\n"
    _, out, _ = run(capsys, "fhat", "4")
    terms = out.strip().replace("- ", "+ -").split(" + ")
    assert sorted(terms) == sorted(["1/4 x1^4", "-x1^2 x2", "1/2 x2^2", "x1 x3"])
    # canonical order: exponent vectors lexicographically decreasing
    assert out == "1/4 x1^4 - x1^2 x2 + x1 x3 + 1/2 x2^2\n"
    _, out, _ = run(capsys, "fhat", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"] == [
        {"coefficient": "-1/3", "exponents": ["3", "0"]},
        {"coefficient": "1", "exponents": ["1", "1"]},
    ]


def test_asympt_with_exact_partition_numbers(capsys):
    _, out, _ = run(capsys, "asympt", "--generic", "1", "--n", "100", "--with-exact", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["exact"] == str(partition_count(100)) == "190569292"
    assert abs(float(row["ratio"]) - 1) < 0.05


def test_asympt_sym_band_at_500(capsys):
    # leading-order estimate is about 19% high here; the 5% band fails
    _, out, _ = run(capsys, "asympt", "sym", "--m", "10", "--n", "500", "--with-exact", "--format", "json")
    ratio = float(json.loads(out)["rows"][0]["ratio"])
    assert 0.95 < ratio < 1.05


def test_asympt_smoke(capsys):
    code, out, _ = run(capsys, "asympt", "alt", "--m", "5", "--n", "10", "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert math.isfinite(float(row["log_estimate"]))
    assert row["estimate"] != "overflow"


def test_asympt_overflow_marker(capsys):
    _, out, _ = run(capsys, "asympt", "sym", "--m", "10", "--n", "100000", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][3] == "overflow"


def test_asympt_index_mode(capsys):
    _, out, _ = run(capsys, "asympt", "--generic", "0,2", "--index", "40", "--with-exact", "--format", "json")
    doc = json.loads(out)
    assert doc["params"]["n"] == "20" and doc["rows"][0]["index"] == "40"


def test_json_schema_and_types(capsys):
    _, out, _ = run(capsys, "ratio-table", "--rows", "1", "60", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "rows"}
    assert doc["command"] == "ratio-table"
    for row in doc["rows"]:
        assert all(isinstance(v, str) for v in row.values())
    assert int(doc["rows"][1]["gamma_sym"]) > 2**64


def test_hooksum(capsys):
    _, out, _ = run(capsys, "hooksum", "--r", "-10", "--n", "10", "--format", "csv")
    assert out.splitlines()[1] == "10,1605340"
    _, out, _ = run(capsys, "hooksum", "--r", "1/2", "--n", "2", "--format", "json")
    # (1 - q/2 - q^2/8)(1 - q^2/2) at q^2
    assert json.loads(out)["rows"][0]["value"] == "-5/8"


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_output_is_deterministic(capsys, fmt):
    argv = ["coeffs", "alt", "--m", "3", "--order", "40", "--format", fmt]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_verify_quick_passes(capsys):
    code, out, err = run(capsys, "verify", "quick")
    assert code == 0, out
    assert "FAIL" not in out
    assert "alt-recurrence" in out and "s\n" in err


def test_verify_reports_corruption(capsys, monkeypatch):
    real = checks.gamma_sym_recurrence

    def corrupted(m, order, method="convolution"):
        coeffs = list(real(m, order, method).coeffs)
        coeffs[-1] += 1
        return Series(coeffs)

    monkeypatch.setattr(checks, "gamma_sym_recurrence", corrupted)
    code, out, err = run(capsys, "verify", "quick", "--format", "csv")
    assert code == 1
    status = {r[0]: r[1] for r in csv.reader(io.StringIO(out))}
    assert status["sym-recurrence"] == "FAIL"
    assert "sym-recurrence" in err
