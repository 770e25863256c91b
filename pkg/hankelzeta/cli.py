#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
hankelzeta 命令行接口
提供 eval / check / oracle / sweep 四个子命令

退出码：0 成功；1 用法错误、未知名称或校验未通过；2 参数不在定义域内；3 数值过程未收敛
"""

import argparse
import itertools
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from hankelzeta import HankelZeta, __version__
from hankelzeta.errors import ConvergenceError, DomainError, HankelZetaError, UnknownIdentifierError
from hankelzeta.targets import lookup_oracle, lookup_target, param_kind

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3

FLOAT_FORMAT = '%.17g'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class UsageError(Exception):
    """命令行参数格式错误"""


class ArgumentParser(argparse.ArgumentParser):
    """用法错误以退出码 1 结束（argparse 默认的 2 留给定义域错误）"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: 错误: {message}\n")


# ---------------------------------------------------------------------------
# 参数解析
# ---------------------------------------------------------------------------

def parse_complex(text: str) -> complex:
    """解析 "re,im"、实数或 Python 复数字面量"""
    text = text.strip()
    try:
        if ',' in text:
            re_part, im_part = text.split(',')
            return complex(float(re_part), float(im_part))
        return complex(float(text))
    except ValueError:
        pass
    try:
        return complex(text.replace(' ', ''))
    except ValueError:
        raise UsageError(f"无法解析复数 {text!r}（格式 re,im）")


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"无法解析整数 {text!r}")
    if not value.is_integer():
        raise UsageError(f"参数需为整数，实际为 {text!r}")
    return int(value)


def parse_value(name: str, text: str):
    kind = param_kind(name)
    if kind == "int":
        return parse_int(text)
    if kind == "str":
        return text
    return parse_complex(text)


def parse_param_tokens(tokens: Sequence[str]) -> Dict[str, Any]:
    """
    把 ["--s", "-1", "--a=1,0.5"] 解析为参数字典

    Args:
        tokens: argparse 未识别的参数

    Returns:
        params: 参数名到值的字典
    """
    params: Dict[str, Any] = {}
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not token.startswith('--') or len(token) <= 2:
            raise UsageError(f"无法识别的参数 {token!r}（格式 --名称 值）")
        name = token[2:]
        if '=' in name:
            name, text = name.split('=', 1)
            i += 1
        else:
            if i + 1 >= len(tokens):
                raise UsageError(f"参数 --{name} 缺少取值")
            text = tokens[i + 1]
            i += 2
        name = name.replace('-', '_')
        if name in params:
            raise UsageError(f"参数 --{name} 重复")
        params[name] = parse_value(name, text)
    return params


def _split_assignment(text: str, option: str) -> Tuple[str, str]:
    if '=' not in text:
        raise UsageError(f"{option} 需写成 名称=取值，实际为 {text!r}")
    name, values = text.split('=', 1)
    return name.strip().replace('-', '_'), values


def parse_grid(text: str) -> Tuple[str, List[Any]]:
    """--grid NAME=v1;v2;v3"""
    name, values = _split_assignment(text, "--grid")
    items = [v for v in values.split(';') if v.strip()]
    if not items:
        raise UsageError(f"--grid {name} 没有取值")
    return name, [parse_value(name, v) for v in items]


def parse_linspace(text: str) -> Tuple[str, List[Any]]:
    """--linspace NAME=start:stop:num"""
    name, values = _split_assignment(text, "--linspace")
    parts = values.split(':')
    if len(parts) != 3:
        raise UsageError(f"--linspace 需写成 名称=起点:终点:点数，实际为 {text!r}")
    try:
        start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"无法解析 --linspace {text!r}")
    if num < 1 or not (math.isfinite(start) and math.isfinite(stop)):
        raise UsageError(f"--linspace 的范围必须有限且点数 ≥ 1，实际为 {text!r}")
    points = np.linspace(start, stop, num)
    if param_kind(name) == "int":
        return name, [parse_int(repr(float(x))) for x in points]
    return name, [complex(float(x)) for x in points]


def format_param(value):
    """表格中的参数列：实数输出为浮点数，复数输出为 "re,im"""
    if isinstance(value, complex):
        if value.imag == 0.0:
            return value.real
        return f"{value.real!r},{value.imag!r}"
    return value


# ---------------------------------------------------------------------------
# 输出
# ---------------------------------------------------------------------------

def emit(frame: pd.DataFrame, output: str, single: bool = False):
    """
    按输出格式打印表格

    Args:
        frame: 结果表
        output: human | csv | json
        single: human 格式下是否按 "键: 值" 逐行打印单条记录
    """
    if output == 'csv':
        sys.stdout.write(frame.to_csv(index=False, float_format=FLOAT_FORMAT))
    elif output == 'json':
        records = frame.astype(object).where(frame.notna(), None).to_dict(orient='records')
        print(json.dumps(records, ensure_ascii=False, indent=2))
    elif single and len(frame) == 1:
        for key, value in frame.iloc[0].items():
            if isinstance(value, float):
                value = FLOAT_FORMAT % value
            print(f"{key}: {value}")
    else:
        print(frame.to_string(index=False, float_format=lambda x: FLOAT_FORMAT % x))


def _print_stats(engine: HankelZeta):
    stats = engine.get_stats()
    print("\n性能统计:", file=sys.stderr)
    for key, value in stats.items():
        if isinstance(value, float):
            print(f"- {key}: {value:.3f}", file=sys.stderr)
        else:
            print(f"- {key}: {value}", file=sys.stderr)


# ---------------------------------------------------------------------------
# 子命令
# ---------------------------------------------------------------------------

def cmd_eval(engine: HankelZeta, args, params: Dict[str, Any]) -> int:
    entry = lookup_target(args.target)
    try:
        bound = entry.bind(params)
    except DomainError as e:
        raise UsageError(str(e))
    result = engine.evaluate(args.target, **params)
    row = {'target': args.target}
    row.update({k: format_param(v) for k, v in bound.items()})
    row.update(result.as_dict())
    emit(pd.DataFrame([row]), args.output, single=True)
    return EXIT_OK


def cmd_oracle(engine: HankelZeta, args, params: Dict[str, Any]) -> int:
    entry = lookup_oracle(args.name)
    try:
        bound = entry.bind(params)
    except DomainError as e:
        raise UsageError(str(e))
    contour, reference = engine.oracle(args.name, **params)
    row = {'oracle': args.name}
    row.update({k: format_param(v) for k, v in bound.items()})
    row.update({
        'contour_re': contour.value.real, 'contour_im': contour.value.imag, 'contour_err': contour.abs_err,
        'reference_re': reference.value.real, 'reference_im': reference.value.imag,
        'reference_err': reference.abs_err,
        'deviation': abs(contour.value - reference.value),
    })
    emit(pd.DataFrame([row]), args.output, single=True)
    return EXIT_OK


def cmd_check(engine: HankelZeta, args, params: Dict[str, Any]) -> int:
    if params:
        raise UsageError(f"check 不接受参数: {', '.join(params)}")
    reports = engine.check(args.identities, workers=args.workers)
    frame = pd.DataFrame([r.as_dict() for r in reports])
    if args.output == 'human':
        frame = frame[['identity', 'grid_size', 'max_deviation', 'tolerance', 'passed', 'wall_time',
                       'worst_point']]
    emit(frame, args.output)
    failed = [r.identity for r in reports if not r.passed]
    if failed:
        logger.warning("未通过的恒等式: %s", ", ".join(failed))
        return EXIT_USAGE
    return EXIT_OK


def sweep_points(grids: List[Tuple[str, List[Any]]]) -> List[Dict[str, Any]]:
    """按 --grid / --linspace 出现的顺序做笛卡尔积，最后一个参数变化最快"""
    names = [name for name, _ in grids]
    return [dict(zip(names, values)) for values in itertools.product(*(v for _, v in grids))]


def cmd_sweep(engine: HankelZeta, args, params: Dict[str, Any]) -> int:
    entry = lookup_target(args.target)
    grids = [parse_grid(g) for g in args.grid or []] + [parse_linspace(s) for s in args.linspace or []]
    if not grids:
        raise UsageError("sweep 至少需要一个 --grid 或 --linspace")
    names = [name for name, _ in grids]
    duplicated = set(names) & set(params) or {n for n in names if names.count(n) > 1}
    if duplicated:
        raise UsageError(f"参数重复指定: {', '.join(sorted(duplicated))}")
    points = sweep_points(grids)
    try:
        entry.bind({**params, **points[0]})
    except DomainError as e:
        raise UsageError(str(e))

    def evaluate(point):
        row = {k: format_param(v) for k, v in {**params, **point}.items()}
        try:
            row.update(engine.evaluate(args.target, **params, **point).as_dict())
            row['error'] = None
        except HankelZetaError as e:
            logger.info("网格点 %s 计算失败: %s", point, e)
            row.update({'value_re': math.nan, 'value_im': math.nan, 'abs_err': math.nan, 'method': None,
                        'error': f"{type(e).__name__}: {e}"})
        return row

    workers = args.workers or engine.workers
    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(evaluate, points))
    frame = pd.DataFrame(rows)
    if frame['error'].isna().all():
        frame = frame.drop(columns=['error'])
    emit(frame, args.output)
    return EXIT_OK


COMMANDS = {
    'eval': cmd_eval,
    'check': cmd_check,
    'oracle': cmd_oracle,
    'sweep': cmd_sweep,
}


# ---------------------------------------------------------------------------
# 入口
# ---------------------------------------------------------------------------

def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument('--config', help='配置文件路径（默认读取环境变量 HANKELZETA_CONFIG）')
    common.add_argument('--output', choices=['human', 'csv', 'json'], default='human', help='输出格式')
    common.add_argument('--verbose', action='store_true', help='输出调试日志')
    common.add_argument('--stats', action='store_true', help='结束后打印性能统计')
    common.add_argument('--stats-file', help='结束后把性能统计写成 JSON 文件')
    common.add_argument('--workers', type=int, help='线程数')
    common.add_argument('--epsilon', type=float, help='围道圆周半径 ε')
    common.add_argument('--n-circle', type=int, help='圆周节点数')
    common.add_argument('--rel-tol', type=float, help='围道节点加倍的相对容差')
    common.add_argument('--max-terms', type=int, help='暴力求和的最大项数')
    common.add_argument('--em-shift', type=int, help='Euler-Maclaurin 直接求和项数 N')
    common.add_argument('--em-order', type=int, help='Euler-Maclaurin 修正项数 J')

    parser = ArgumentParser(
        prog='hankelzeta',
        description="hankelzeta - Hurwitz zeta、Lerch 超越函数与 Hankel 围道积分命令行工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        allow_abbrev=False,
    )
    parser.add_argument('--version', '-v', action='version', version=f'hankelzeta v{__version__}')
    subparsers = parser.add_subparsers(dest='command', help='可用命令', parser_class=ArgumentParser)

    eval_parser = subparsers.add_parser('eval', parents=[common], allow_abbrev=False,
                                        help='求值，参数写成 --名称 值（复数写成 re,im）')
    eval_parser.add_argument('target', help='目标名称，如 hurwitz_zeta、S、log_gamma_moment')

    check_parser = subparsers.add_parser('check', parents=[common], allow_abbrev=False,
                                         help='在标准网格上校验恒等式')
    check_parser.add_argument('identities', nargs='+', help='恒等式编号，如 thm1 eq6.2，或 all')

    oracle_parser = subparsers.add_parser('oracle', parents=[common], allow_abbrev=False,
                                          help='比较 Hankel 围道表示与级数结果')
    oracle_parser.add_argument('name', help='表示名称，如 zeta_neg、phi_one、log_G')

    sweep_parser = subparsers.add_parser('sweep', parents=[common], allow_abbrev=False,
                                         help='在参数网格上批量求值')
    sweep_parser.add_argument('target', help='目标名称')
    sweep_parser.add_argument('--grid', action='append', help='NAME=v1;v2;...')
    sweep_parser.add_argument('--linspace', action='append', help='NAME=start:stop:num')
    return parser


def _overrides(args) -> Dict[str, Any]:
    return {
        'contour.epsilon': args.epsilon,
        'contour.n_circle': args.n_circle,
        'contour.rel_tol': args.rel_tol,
        'series.max_terms': args.max_terms,
        'euler_maclaurin.shift': args.em_shift,
        'euler_maclaurin.order': args.em_order,
        'workers': args.workers,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    """hankelzeta 命令行工具的主入口点"""
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)

    try:
        params = parse_param_tokens(extras)
        engine = HankelZeta.from_overrides(args.config, **_overrides(args))
        code = COMMANDS[args.command](engine, args, params)
        if args.stats:
            _print_stats(engine)
        if args.stats_file:
            engine.performance_monitor.stats_file = args.stats_file
            engine.performance_monitor.save_stats()
        return code
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"hankelzeta: 错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownIdentifierError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"定义域错误: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as e:
        print(f"未收敛: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except HankelZetaError as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
