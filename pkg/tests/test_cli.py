import io
import json
import re
import subprocess
import sys

import pytest

from fibseries.cli import format_series, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_coeff():
    assert call("coeff", "18") == (0, "1\n")
    assert call("coeff", "13") == (0, "-1\n")


def test_coeff_accepts_huge_m():
    code, text = call("coeff", str(10**250 + 7))
    assert code == 0 and text.strip() in {"-1", "0", "1"}


def test_range_csv():
    code, text = call("range", "0", "4", "--format", "csv")
    assert code == 0
    assert text == "m,a\n0,1\n1,-1\n2,-1\n3,0\n4,1\n"


def test_range_csv_without_header():
    _, text = call("range", "0", "4", "--format", "csv", "--no-header")
    assert text == "0,1\n1,-1\n2,-1\n3,0\n4,1\n"


def test_range_jsonl_schema():
    _, text = call("range", "10", "14", "--format", "jsonl")
    assert not text.endswith("\n\n")
    lines = text.splitlines()
    assert len(lines) == 5
    for m, line in zip(range(10, 15), lines):
        obj = json.loads(line)
        assert list(obj) == ["m", "a"]
        assert obj["m"] == m and obj["a"] in (-1, 0, 1)
    assert [json.loads(l)["a"] for l in lines] == [0, 1, -1, -1, 1]


def test_range_text():
    assert call("range", "7", "8")[1] == "7 1\n8 -1\n"


def test_range_beyond_stream_limit(monkeypatch):
    import fibseries.cli as cli

    monkeypatch.setattr(cli, "STREAM_LIMIT", 10)
    assert call("range", "11", "14", "--format", "csv", "--no-header")[1] == "11,1\n12,-1\n13,-1\n14,1\n"


def test_series_reproduces_displayed_expansion():
    shown = r"1 - x - x^2 + x^4 + x^7 - x^8 + x^{11} - x^{12} - x^{13} + x^{14} + x^{18} + \cdots"
    expected = shown.replace("{", "").replace("}", "").replace(r"\cdots", "...")
    _, text = call("series", "18")
    assert " ".join(text.split()) == expected


def test_format_series_edge_cases():
    assert format_series([1]) == "1 + ..."
    assert format_series([0, -1]) == "-x + ..."


def test_support():
    assert call("support", "8")[1].split() == ["0", "1", "2", "4", "7", "8"]


@pytest.mark.parametrize("oracle", ["partitions", "product"])
def test_verify_ok(oracle):
    code, text = call("verify", "--max", "2000", "--oracle", oracle)
    assert code == 0 and text.startswith("ok")


def test_verify_reports_first_mismatch(monkeypatch, capsys):
    import fibseries.cli as cli
    from fibseries.oracle import CoefficientBlock

    real = cli.stream

    def broken(N):
        vals = real(N).values.copy()
        vals[11] = 0
        return CoefficientBlock(lo=0, values=vals)

    monkeypatch.setattr(cli, "stream", broken)
    code, _ = call("verify", "--max", "50")
    assert code == 1
    assert "degree 11" in capsys.readouterr().err


def test_density_csv():
    code, text = call("density", "--max-n", "12", "--format", "csv")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "n,fib_n,alpha,alpha_over_fib,alpha_over_fib_decimal,zero_density,zero_density_decimal"
    assert lines[-1] == "12,144,69,23/48,0.479166666667,25/48,0.520833333333"
    assert len(lines) == 1 + 11


def test_density_text():
    code, text = call("density", "--max-n", "6")
    assert code == 0 and "5/8" in text


def test_roots():
    code, text = call("roots", "--tol", "1e-10")
    assert code == 0
    r1 = float(re.search(r"^r1 = (\S+)", text, re.M).group(1))
    assert abs(r1 - 1.54) < 0.01
    assert "r2 = -1  residual = 0.000e+00" in text


def test_prove():
    code, text = call("prove", "--part", "3", "--n", "9")
    assert code == 0 and "PASS" in text


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["coeff"],
        ["coeff", "-1"],
        ["coeff", "1.5"],
        ["range", "5", "2"],
        ["range", "0", "4", "--format", "xml"],
        ["verify", "--max", "10", "--oracle", "magic"],
        ["density", "--max-n", "3"],
        ["roots", "--tol", "0"],
        ["prove", "--part", "4", "--n", "7"],
        ["prove", "--part", "1", "--n", "4"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv, out=io.StringIO()) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fibseries", "coeff", "14"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
