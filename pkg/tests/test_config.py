"""配置加载、覆盖项、主类与性能监控测试"""

import json
import logging

import pytest

from hankelzeta import HankelZeta
from hankelzeta.config import CONFIG_ENV_VAR, apply_overrides, load_config
from hankelzeta.errors import DomainError, UnknownIdentifierError
from hankelzeta.statistics import PerformanceMonitor


class TestLoadConfig:

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
        config = load_config()
        assert config['contour']['epsilon'] == 1.0
        assert config['lerch']['term_budget'] == 200000
        assert config['euler_maclaurin']['shift'] is None

    def test_user_file_merged(self, config_file):
        # JSON5：允许注释与未加引号的键
        path = config_file("{\n  // 更小的半径\n  contour: {epsilon: 0.5},\n  workers: 2,\n}")
        config = load_config(path)
        assert config['contour']['epsilon'] == 0.5
        assert config['contour']['n_circle'] == 64
        assert config['workers'] == 2

    def test_environment_variable(self, config_file, monkeypatch):
        monkeypatch.setenv(CONFIG_ENV_VAR, config_file("{series: {max_terms: 500}}"))
        assert load_config()['series']['max_terms'] == 500

    def test_unknown_key_warns(self, config_file, caplog):
        path = config_file("{contour: {radius: 2.0}}")
        with caplog.at_level(logging.WARNING, logger="hankelzeta.config"):
            config = load_config(path)
        assert 'radius' not in config['contour']
        assert any("contour.radius" in record.getMessage() for record in caplog.records)

    @pytest.mark.parametrize("text", ["{contour: ", "[1, 2]", "{contour: 3}"])
    def test_invalid_file(self, config_file, text):
        with pytest.raises(DomainError):
            load_config(config_file(text))

    def test_missing_file(self, tmp_path):
        with pytest.raises(DomainError):
            load_config(str(tmp_path / "missing.json"))


class TestOverrides:

    def test_none_skipped(self):
        base = load_config()
        config = apply_overrides(base, {'contour.epsilon': None, 'series.max_terms': 1000})
        assert config['contour']['epsilon'] == base['contour']['epsilon']
        assert config['series']['max_terms'] == 1000

    def test_base_not_mutated(self):
        base = load_config()
        apply_overrides(base, {'workers': 1})
        assert base['workers'] == 4


class TestHankelZeta:

    def test_from_overrides(self):
        engine = HankelZeta.from_overrides(**{'contour.epsilon': 0.5, 'euler_maclaurin.shift': 20})
        assert engine.contour_spec.epsilon == 0.5
        assert engine.em_params.shift == 20

    def test_invalid_override_rejected(self):
        with pytest.raises(DomainError):
            HankelZeta.from_overrides(**{'contour.n_circle': 63})

    def test_evaluate_records_stats(self):
        engine = HankelZeta()
        result = engine.evaluate("zeta_neg_int", n=1, a=1)
        assert result.value.real == pytest.approx(-1 / 12, abs=1e-15)
        assert engine.get_stats()['operations']['zeta_neg_int'] == 1

    def test_oracle(self, engine):
        contour, reference = engine.oracle("zeta_neg", n=2, a=1.5)
        assert abs(contour.value - reference.value) < 1e-10

    def test_unknown_names(self, engine):
        with pytest.raises(UnknownIdentifierError):
            engine.evaluate("riemann_xi", s=2)
        with pytest.raises(UnknownIdentifierError):
            engine.oracle("zeta_sideways")

    def test_check(self, engine):
        reports = engine.check(["psi-int"], workers=1)
        assert reports[0].passed


class TestPerformanceMonitor:

    def test_timed(self):
        monitor = PerformanceMonitor()
        with monitor.timed("hurwitz_zeta"):
            pass
        with monitor.timed("hurwitz_zeta"):
            pass
        stats = monitor.get_stats()
        assert stats['operations']['hurwitz_zeta'] == 2
        assert stats['avg_times']['hurwitz_zeta'] >= 0.0
        assert stats['peak_memory'] > 0.0

    def test_update_stats(self):
        monitor = PerformanceMonitor()
        monitor.update_stats("check_points", 5)
        monitor.update_stats("check_points")
        assert monitor.get_stats()['operations']['check_points'] == 6

    def test_save_stats(self, tmp_path):
        path = tmp_path / "stats" / "run.json"
        monitor = PerformanceMonitor(str(path))
        monitor.update_stats("eval")
        monitor.save_stats()
        assert json.loads(path.read_text(encoding="utf-8"))['operations'] == {'eval': 1}
