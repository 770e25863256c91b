# hankelzeta 应用案例：闭式求值、围道比对与恒等式校验

import logging

from hankelzeta import HankelZeta

logging.basicConfig(level=logging.INFO, format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def run_example():
    """依次演示求值、Hankel 围道比对与恒等式校验"""
    print("初始化 hankelzeta...")
    engine = HankelZeta.from_overrides(**{'contour.epsilon': 1.0})

    print("\n步骤1: 闭式求值")
    for target, params in [
        ("hurwitz_zeta", {"s": -1, "a": 1}),
        ("lerch_phi_neg", {"lam": 0.5, "m": 3, "a": 1}),
        ("S", {"t": 0.5, "a": 1.5, "p": 2}),
        ("log_gamma_moment", {"t": 0.5, "a": 2.5, "m": 1}),
        ("barnes_log_g", {"a": 2.5}),
    ]:
        result = engine.evaluate(target, **params)
        print(f"{target}{params} = {result.value:.15g}  (误差界 {result.abs_err:.1e}, {result.method.value})")

    print("\n步骤2: Hankel 围道表示与级数结果比对")
    for name, params in [
        ("zeta_neg", {"n": 2, "a": 1.5}),
        ("phi_one", {"lam": -0.5, "a": 1.0}),
        ("log_G", {"a": 1.5}),
    ]:
        contour, reference = engine.oracle(name, **params)
        print(f"{name}{params}: 围道 {contour.value:.15g}，参考 {reference.value:.15g}，"
              f"偏差 {abs(contour.value - reference.value):.1e}")

    print("\n步骤3: 恒等式校验")
    for report in engine.check(["thm1", "eq6.2", "oracle"]):
        status = "通过" if report.passed else "未通过"
        print(f"- {report.identity}: {status}，最大偏差 {report.max_deviation:.1e}，"
              f"{report.grid_size} 个网格点，{report.wall_time:.2f} 秒")

    # 获取性能统计
    stats = engine.get_stats()
    print("\n性能统计:")
    print(f"- 操作次数: {stats['operations']}")
    print(f"- 峰值内存: {stats['peak_memory']:.1f} MB")


if __name__ == "__main__":
    run_example()
