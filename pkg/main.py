"""
Main Entry Point
Файл: main.py

Командная строка симулятора связанных состояний.

Коды выхода:
    0 - успех
    2 - ошибка использования / параметров
    3 - ошибка области (нет полюса, вырожденная населённость, нет окна)
    4 - численный сбой
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

logger = logging.getLogger(__name__)

COMMANDS = (
    'dynamics',
    'poles',
    'spectrum',
    'duration-scaling',
    'metrology',
    'scaling',
    'landscape',
    'convergence',
)


def _common_parser() -> argparse.ArgumentParser:
    """Флаги, общие для всех команд"""
    common = argparse.ArgumentParser(add_help=False)

    model = common.add_argument_group('model (frequencies in units of ξ, times in 1/ξ)')
    size = model.add_mutually_exclusive_group()
    size.add_argument('--qubits', type=int, help='Число кубитов N (n = 2^N - 1)')
    size.add_argument('--cavities', type=int, help='Число резонаторов n (нечётное)')
    model.add_argument('--omega-atom', type=float, help='Частота атома Ω')
    model.add_argument('--omega-cavity', type=float, help='Частота резонаторов ω0')
    model.add_argument('--coupling', type=float, help='Связь атом-резонатор J')
    model.add_argument('--tmax', type=float, help='Длина ряда')
    model.add_argument('--dt', type=float, help='Шаг сетки')
    model.add_argument('--total', type=float, help='Полная длительность эксперимента T')
    model.add_argument('--config', type=Path, help='Файл параметров key=value')

    common.add_argument('--out', type=Path, required=True, help='Директория результатов')

    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='Отладочный вывод')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='Только предупреждения')

    return common


def _window(text: str):
    from utils.validators import parse_number_list

    values = parse_number_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError("window must be 'start,end'")
    return values[0], values[1]


def build_parser() -> argparse.ArgumentParser:
    """Парсер аргументов командной строки"""
    from metrology.uncertainty import UncertaintySource
    from analytic.landscape import LANDSCAPE_FIELDS

    parser = argparse.ArgumentParser(
        prog='bsm',
        description='Bound-state enhanced metrology with an atom in a ring of coupled cavities'
    )
    sub = parser.add_subparsers(dest='command', required=True, metavar='command')
    common = _common_parser()
    sources = [s.value for s in UncertaintySource]

    p = sub.add_parser('dynamics', parents=[common], help='Ряд P_e(t) точной эволюции')
    p.add_argument('--analytic', action='store_true',
                   help='Добавить колонки pe_longtime и pe_analytic')

    sub.add_parser('poles', parents=[common], help='Полюса связанных состояний и их веса')

    p = sub.add_parser('spectrum', parents=[common], help='Спектр регулярных осцилляций')
    p.add_argument('--input', type=Path, help='CSV t,pe команды dynamics')
    p.add_argument('--window', type=_window, help='Окно start,end (иначе ищется)')
    p.add_argument('--remove-transient', action='store_true',
                   help='Вычесть вклад разреза и считать спектр от t=0 до конца окна')

    p = sub.add_parser('duration-scaling', parents=[common],
                       help='Длительность регулярного окна по N')
    p.add_argument('--qubit-range', default='5-10', help='Значения N: "5-10" или "6,7,8"')

    p = sub.add_parser('metrology', parents=[common], help='Кривые δΩ(t)')
    p.add_argument('--source', default='numeric',
                   help=f'Источники через запятую: {", ".join(sources)}')
    p.add_argument('--window', type=_window, help='Времена кодирования start,end')
    p.add_argument('--per-shot', action='store_true', help='T = t в каждой точке')

    p = sub.add_parser('scaling', parents=[common], help='Фит δΩ ∝ t^-slope')
    p.add_argument('--source', default='numeric', choices=sources)
    p.add_argument('--window', type=_window, required=True, help='Интервал фита start,end')
    p.add_argument('--block', type=float, help='Длина блока оптимальных моментов (по умолчанию 2π/φ)')
    p.add_argument('--per-shot', action='store_true', help='T = t в каждой точке')

    p = sub.add_parser('landscape', parents=[common], help='φ, среднее и амплитуда по параметру')
    p.add_argument('--field', required=True, choices=LANDSCAPE_FIELDS)
    p.add_argument('--values', required=True, help='Значения: "a,b,c" или "start:stop:num"')

    p = sub.add_parser('convergence', parents=[common], help='Статистика окна по N')
    p.add_argument('--qubit-range', default='6-10', help='Значения N')

    return parser


def _console_level(args: argparse.Namespace) -> int:
    from config import config

    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.WARNING
    return getattr(logging, config.LOG_LEVEL, logging.INFO)


async def dispatch(args: argparse.Namespace):
    """Выполнить выбранную команду"""
    import pipelines
    from utils.validators import parse_number_list

    settings = pipelines.load_run_settings(
        args.config,
        qubits=args.qubits,
        cavities=args.cavities,
        omega_atom=args.omega_atom,
        omega_cavity=args.omega_cavity,
        coupling=args.coupling,
        t_max=args.tmax,
        dt=args.dt,
        t_total=args.total,
    )

    if args.command == 'dynamics':
        return await pipelines.run_dynamics(settings, args.out, analytic=args.analytic)
    if args.command == 'poles':
        return await pipelines.run_poles(settings, args.out)
    if args.command == 'spectrum':
        return await pipelines.run_spectrum(
            settings, args.out, args.input, args.window, remove_transient=args.remove_transient
        )
    if args.command == 'duration-scaling':
        qubits = parse_number_list(args.qubit_range, integer=True)
        return await pipelines.run_duration_scaling(settings, args.out, qubits)
    if args.command == 'metrology':
        sources = [s.strip() for s in args.source.split(',') if s.strip()]
        return await pipelines.run_metrology(
            settings, args.out, sources, args.window, per_shot=args.per_shot
        )
    if args.command == 'scaling':
        return await pipelines.run_scaling(
            settings, args.out, args.source, args.window,
            block=args.block, per_shot=args.per_shot
        )
    if args.command == 'landscape':
        values = parse_number_list(args.values)
        return await pipelines.run_landscape(settings, args.out, args.field, values)
    if args.command == 'convergence':
        qubits = parse_number_list(args.qubit_range, integer=True)
        return await pipelines.run_convergence(settings, args.out, qubits)

    raise ValueError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Точка входа

    Args:
        argv: Аргументы (по умолчанию sys.argv[1:])

    Returns:
        Код выхода
    """
    from config import validate_config
    from utils.errors import BoundStateError
    from utils.logger import setup_logger

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logger(None, console_level=_console_level(args))

    try:
        validate_config()
    except ValueError as e:
        logger.error(str(e))
        return 2

    try:
        asyncio.run(dispatch(args))
    except BoundStateError as e:
        logger.error(f"{args.command}: {e}", exc_info=args.verbose)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        # неверное значение источника и т.п.
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2

    return 0


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("\nStopped by user")
        sys.exit(130)
