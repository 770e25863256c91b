"""恒等式校验套件测试：每个已注册恒等式都应在标准网格上通过"""

import math

import pytest

from hankelzeta.check_suites import (
    EPSILON_FIXED, CheckContext, IDENTITY_REGISTRY, Identity, Probe, available_identities,
    epsilon_kinds, resolve_identities, run_check, run_checks,
)
from hankelzeta.errors import DomainError, UnknownIdentifierError
from hankelzeta.hankel_oracle import INTEGRAND_REGISTRY
from hankelzeta.statistics import PerformanceMonitor

REQUIRED_IDENTITIES = (
    "thm1", "eq4.3", "eq4.7", "eq4.8", "thm2", "thm3", "eq5.10", "thm4", "eq7.7", "eq7.2",
    "eq2.10", "eq2.9", "eq6.2", "eq6.3", "eq6.5", "prop3", "lemma5", "oracle",
)


@pytest.fixture(scope="module")
def context():
    return CheckContext()


class TestRegistry:

    def test_required_identities_registered(self):
        missing = [name for name in REQUIRED_IDENTITIES if name not in IDENTITY_REGISTRY]
        assert not missing

    def test_resolve_all(self):
        assert resolve_identities(["all"]) == available_identities()

    def test_resolve_deduplicates_and_keeps_order(self):
        assert resolve_identities(["eq6.2", "thm1", "eq6.2"]) == ["eq6.2", "thm1"]

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentifierError):
            resolve_identities(["thm9"])
        with pytest.raises(UnknownIdentifierError):
            run_check("thm9", CheckContext())


class TestGrids:

    @pytest.mark.parametrize("identity", ["thm3", "eq5.10"])
    def test_lerch_grids_include_complex_a(self, context, identity):
        labels = [point.label for point in IDENTITY_REGISTRY[identity].grid(context)]
        assert any("a=(1+0.5j)" in label for label in labels)
        assert any("a=2.5" in label for label in labels)

    def test_eps_sweep_covers_registry(self, context):
        covered = {kind.tag for kind in epsilon_kinds()}
        assert covered | EPSILON_FIXED == set(INTEGRAND_REGISTRY)
        labels = [point.label for point in IDENTITY_REGISTRY["eps-independence"].grid(context)]
        assert len(labels) == 2 * len(covered)
        for tag in covered:
            assert f"{tag.value} eps=0.5" in labels


class TestIdentities:

    @pytest.mark.parametrize("identity", available_identities())
    def test_identity_passes(self, context, identity):
        report = run_check(identity, context)
        assert report.error is None, report.error
        assert report.grid_size > 0
        assert report.passed, f"{identity}: 最大偏差 {report.max_deviation:.3e} 于 {report.worst_point}"


class TestRunner:

    def test_parallel_run_keeps_order(self, context):
        monitor = PerformanceMonitor()
        reports = run_checks(["reflection", "psi-int"], context, workers=2, monitor=monitor)
        assert [r.identity for r in reports] == ["reflection", "psi-int"]
        assert all(r.passed for r in reports)
        stats = monitor.get_stats()
        assert stats['operations']['check:psi-int'] == 1
        assert stats['operations']['check_points'] == sum(r.grid_size for r in reports)

    def test_report_dict(self, context):
        record = run_check("psi-int", context).as_dict()
        assert set(record) == {'identity', 'description', 'grid_size', 'max_deviation', 'tolerance',
                               'passed', 'wall_time', 'worst_point', 'error'}

    def test_failed_point_is_reported(self, context, monkeypatch):
        def failing():
            raise DomainError("网格点越界")

        def grid(ctx):
            return [Probe("ok", lambda: (1.0, 1.0)), Probe("bad", failing)]

        monkeypatch.setitem(IDENTITY_REGISTRY, "always-fails",
                            Identity("always-fails", "测试用", 1e-12, False, grid))
        report = run_check("always-fails", context)
        assert not report.passed
        assert math.isinf(report.max_deviation)
        assert report.worst_point == "bad"
        assert "DomainError" in report.error

    def test_deviation_over_tolerance_fails(self, context, monkeypatch):
        def grid(ctx):
            return [Probe("p", lambda: (1.001, 1.0))]

        monkeypatch.setitem(IDENTITY_REGISTRY, "too-far",
                            Identity("too-far", "测试用", 1e-6, False, grid))
        report = run_check("too-far", context)
        assert not report.passed
        assert report.max_deviation == pytest.approx(0.001 / 2.0)
        assert report.error is None
