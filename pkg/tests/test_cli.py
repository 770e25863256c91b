"""命令行测试：子命令输出、退出码与参数解析"""

import io
import json
import time

import pandas as pd
import pytest

from hankelzeta import HankelZeta
from hankelzeta.cli import (
    EXIT_CONVERGENCE, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, UsageError, format_param, main,
    parse_complex, parse_grid, parse_int, parse_linspace, parse_param_tokens, sweep_points,
)


def run_csv(capsys, argv):
    code = main(argv + ["--output", "csv"])
    out = capsys.readouterr().out
    return code, pd.read_csv(io.StringIO(out), float_precision="round_trip")


class TestEval:

    def test_hurwitz_zeta_csv(self, capsys):
        code, frame = run_csv(capsys, ["eval", "hurwitz_zeta", "--s", "-1", "--a", "1"])
        assert code == EXIT_OK
        assert list(frame.columns) == ["target", "s", "a", "value_re", "value_im", "abs_err", "method"]
        assert frame.loc[0, "value_re"] == pytest.approx(-1 / 12, abs=1e-14)
        assert frame.loc[0, "value_im"] == pytest.approx(0.0, abs=1e-14)

    def test_lerch_negative_integer_json(self, capsys):
        code = main(["eval", "lerch_phi_neg", "--lam", "0.5", "--m", "2", "--a", "1", "--output", "json"])
        records = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert records[0]["value_re"] == pytest.approx(12.0, rel=1e-14)
        assert records[0]["m"] == 2
        assert records[0]["method"] == "closed_form"

    def test_series_at_zero(self, capsys):
        code, frame = run_csv(capsys, ["eval", "S", "--t", "0", "--a", "1", "--p", "2"])
        assert code == EXIT_OK
        assert frame.loc[0, "value_re"] == 0.0

    def test_human_output(self, capsys):
        code = main(["eval", "barnes_log_g", "--a", "2"])
        lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        value = next(line for line in lines if line.startswith("value_re: "))
        assert abs(float(value.split(": ")[1])) < 1e-12

    def test_complex_parameter(self, capsys):
        code, frame = run_csv(capsys, ["eval", "log_gamma", "--s=1,0.5"])
        assert code == EXIT_OK
        assert frame.loc[0, "s"] == "1.0,0.5"

    def test_optional_parameter(self, capsys):
        code, frame = run_csv(capsys, ["eval", "log_gamma_integral_m0", "--t", "0.5", "--a", "1.5",
                                       "--form", "zeta_form"])
        assert code == EXIT_OK
        assert frame.loc[0, "form"] == "zeta_form"


class TestOracleAndCheck:

    def test_inverse_gamma(self, capsys):
        code, frame = run_csv(capsys, ["oracle", "inv_gamma", "--s", "3"])
        assert code == EXIT_OK
        assert frame.loc[0, "contour_re"] == pytest.approx(0.5, abs=1e-12)
        assert frame.loc[0, "deviation"] < 1e-12

    def test_check_passes(self, capsys):
        code, frame = run_csv(capsys, ["check", "psi-int", "reflection"])
        assert code == EXIT_OK
        assert list(frame["identity"]) == ["psi-int", "reflection"]
        assert frame["passed"].all()

    def test_check_rejects_parameters(self, capsys):
        assert main(["check", "psi-int", "--a", "1"]) == EXIT_USAGE

    def test_unknown_identity(self, capsys):
        assert main(["check", "thm9"]) == EXIT_USAGE

    def test_check_all_within_budget(self, capsys):
        start = time.perf_counter()
        code, frame = run_csv(capsys, ["check", "all"])
        elapsed = time.perf_counter() - start
        assert code == EXIT_OK
        assert frame["passed"].all()
        assert elapsed < 60.0

    def test_stats_file(self, capsys, tmp_path):
        path = tmp_path / "stats" / "check.json"
        code = main(["check", "psi-int", "--stats-file", str(path)])
        assert code == EXIT_OK
        stats = json.loads(path.read_text(encoding="utf-8"))
        assert stats["operations"]["check:psi-int"] == 1
        assert stats["peak_memory"] > 0.0


class TestSweep:

    def test_grid(self, capsys):
        code, frame = run_csv(capsys, ["sweep", "hurwitz_zeta", "--grid", "s=-3;-2;-1", "--a", "1"])
        assert code == EXIT_OK
        assert list(frame["s"]) == [-3.0, -2.0, -1.0]
        expected = [1 / 120, 0.0, -1 / 12]
        assert frame["value_re"].tolist() == pytest.approx(expected, abs=1e-14)
        assert "error" not in frame.columns

    def test_linspace_integer_parameter(self, capsys):
        code, frame = run_csv(capsys, ["sweep", "zeta_neg_int", "--linspace", "n=0:2:3", "--a", "1"])
        assert code == EXIT_OK
        assert list(frame["n"]) == [0, 1, 2]

    def test_failed_point_recorded(self, capsys):
        code, frame = run_csv(capsys, ["sweep", "hurwitz_zeta", "--grid", "s=0.5;1;2", "--a", "1"])
        assert code == EXIT_OK
        assert frame["error"].isna().tolist() == [True, False, True]
        assert frame.loc[1, "error"].startswith("PoleError")

    def test_csv_reproduces_values(self, capsys):
        code, frame = run_csv(capsys, ["sweep", "hurwitz_zeta", "--grid", "s=-20.5;-3;0.5;2.5,1",
                                       "--grid", "a=1;2.5;1,0.5"])
        assert code == EXIT_OK
        assert len(frame) == 12
        engine = HankelZeta()
        for row in frame.itertuples(index=False):
            result = engine.evaluate("hurwitz_zeta", s=parse_complex(str(row.s)), a=parse_complex(str(row.a)))
            assert result.value.real == row.value_re
            assert result.value.imag == row.value_im
            assert result.abs_err == row.abs_err
            assert result.method.value == row.method

    def test_requires_grid(self, capsys):
        assert main(["sweep", "hurwitz_zeta", "--s", "2", "--a", "1"]) == EXIT_USAGE

    def test_duplicate_parameter(self, capsys):
        assert main(["sweep", "hurwitz_zeta", "--grid", "s=2;3", "--s", "2", "--a", "1"]) == EXIT_USAGE


class TestExitCodes:

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_target(self, capsys):
        assert main(["eval", "riemann_xi", "--s", "2"]) == EXIT_USAGE

    def test_missing_parameter(self, capsys):
        assert main(["eval", "hurwitz_zeta", "--s", "2"]) == EXIT_USAGE

    def test_malformed_parameter(self, capsys):
        assert main(["eval", "hurwitz_zeta", "--s", "two", "--a", "1"]) == EXIT_USAGE

    def test_domain_error(self, capsys):
        assert main(["eval", "hurwitz_zeta", "--s", "1", "--a", "1"]) == EXIT_DOMAIN
        assert "定义域错误" in capsys.readouterr().err

    def test_convergence_error(self, capsys, config_file):
        path = config_file("{lerch: {term_budget: 1000}}")
        code = main(["eval", "lerch_phi", "--lam", "0.9999", "--s", "1", "--a", "1", "--config", path])
        assert code == EXIT_CONVERGENCE
        assert "未收敛" in capsys.readouterr().err

    def test_bad_option_value(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["eval", "hurwitz_zeta", "--s", "2", "--a", "1", "--output", "xml"])
        assert info.value.code == EXIT_USAGE


class TestParsing:

    @pytest.mark.parametrize("text,expected", [
        ("1.5", 1.5 + 0j),
        ("-1,0", -1 + 0j),
        ("0.5,-2", 0.5 - 2j),
        ("1+2j", 1 + 2j),
    ])
    def test_complex(self, text, expected):
        assert parse_complex(text) == expected

    def test_complex_rejects_garbage(self):
        with pytest.raises(UsageError):
            parse_complex("1,2,3")

    def test_int(self):
        assert parse_int("3") == 3
        assert parse_int("2.0") == 2
        with pytest.raises(UsageError):
            parse_int("2.5")

    def test_param_tokens(self):
        params = parse_param_tokens(["--s", "-1", "--a=1,0.5", "--m", "2", "--method", "prop3"])
        assert params == {"s": -1 + 0j, "a": 1 + 0.5j, "m": 2, "method": "prop3"}

    @pytest.mark.parametrize("tokens", [["s", "1"], ["--s"], ["--s", "1", "--s", "2"]])
    def test_param_tokens_rejected(self, tokens):
        with pytest.raises(UsageError):
            parse_param_tokens(tokens)

    def test_grid(self):
        assert parse_grid("p=1;2;3") == ("p", [1, 2, 3])
        with pytest.raises(UsageError):
            parse_grid("p")

    def test_linspace(self):
        name, values = parse_linspace("t=0:0.5:3")
        assert name == "t"
        assert values == [0j, 0.25 + 0j, 0.5 + 0j]
        with pytest.raises(UsageError):
            parse_linspace("t=0:1")

    def test_sweep_points_order(self):
        points = sweep_points([("a", [1, 2]), ("s", [3, 4])])
        assert points == [{"a": 1, "s": 3}, {"a": 1, "s": 4}, {"a": 2, "s": 3}, {"a": 2, "s": 4}]

    def test_format_param(self):
        assert format_param(2 + 0j) == 2.0
        assert format_param(1 + 0.5j) == "1.0,0.5"
        assert format_param(3) == 3
