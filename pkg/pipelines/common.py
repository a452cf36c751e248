"""
Pipeline Plumbing
Файл: pipelines/common.py

Сборка параметров запуска (умолчания < .env < файл --config < флаги),
чтение рядов из CSV и общий учёт запуска: баннер, время, манифест.
"""

import logging
import math
import time
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from dotenv import dotenv_values

from system.dynamics import TimeSeries
from system.model import ModelParams, validate
from utils.errors import ParameterError
from utils.result_storage import ResultStorage, RunManifest, read_csv

logger = logging.getLogger(__name__)

# Ключ файла параметров -> поле RunSettings / ModelParams
PARAMETER_KEYS = {
    'omega_atom': 'omega_atom',
    'omega_cavity': 'omega_cavity',
    'xi': 'hopping',
    'coupling_j': 'coupling',
    'qubits': 'qubits',
    'cavities': 'cavities',
    't_max': 't_max',
    'dt': 'dt',
    't_total': 't_total',
}

INTEGER_FIELDS = ('qubits', 'cavities')


@dataclass(frozen=True)
class RunSettings:
    """
    Параметры одного запуска команды

    Attributes:
        params: ModelParams
        t_max: Длина ряда (1/ξ)
        dt: Шаг сетки
        t_total: Полная длительность эксперимента T (None - не задана)
    """
    params: ModelParams
    t_max: float
    dt: float
    t_total: Optional[float] = None

    def record(self) -> Dict[str, Any]:
        """Полная запись параметров для заголовков и манифеста"""
        record = self.params.to_dict()
        record.update({'t_max': self.t_max, 'dt': self.dt})
        if self.t_total is not None:
            record['t_total'] = self.t_total
        return record


def _parse_value(key: str, raw: Any) -> Any:
    field = PARAMETER_KEYS[key]
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ParameterError(f"{key}: '{raw}' is not a number", field=key)

    if not math.isfinite(value):
        raise ParameterError(f"{key} must be finite", field=key)

    if field in INTEGER_FIELDS:
        if value != int(value):
            raise ParameterError(f"{key} must be an integer", field=key)
        return int(value)
    return value


def read_parameter_file(path: Path) -> Dict[str, Any]:
    """
    Прочитать файл параметров key=value

    Args:
        path: Путь к файлу

    Returns:
        {поле: значение} в терминах RunSettings / ModelParams

    Raises:
        ParameterError: файл не найден, неизвестный ключ или нечисловое значение
    """
    path = Path(path)
    if not path.is_file():
        raise ParameterError(f"parameter file not found: {path}", field="config")

    values = dotenv_values(path)
    unknown = sorted(set(values) - set(PARAMETER_KEYS))
    if unknown:
        raise ParameterError(
            f"unknown keys in {path.name}: {', '.join(unknown)}", field="config"
        )

    parsed = {PARAMETER_KEYS[key]: _parse_value(key, raw) for key, raw in values.items()}
    logger.debug(f"Parameter file {path}: {parsed}")
    return parsed


def params_from_record(record: Mapping[str, Any]) -> Optional[ModelParams]:
    """ModelParams из заголовка CSV; None, если в записи нет полного набора ключей"""
    keys = {key: record[key] for key in PARAMETER_KEYS if key in record}
    needed = {'omega_atom', 'omega_cavity', 'coupling_j'}
    if not needed <= set(keys) or not {'qubits', 'cavities'} & set(keys):
        return None

    fields = {PARAMETER_KEYS[key]: _parse_value(key, raw) for key, raw in keys.items()}
    cavities = fields.get('cavities') or 2 ** fields['qubits'] - 1

    return validate(ModelParams(
        omega_atom=fields['omega_atom'],
        omega_cavity=fields['omega_cavity'],
        coupling=fields['coupling'],
        cavities=cavities,
        hopping=fields.get('hopping', 1.0),
    ))


def load_run_settings(config_path: Optional[Path] = None, **overrides: Any) -> RunSettings:
    """
    Собрать RunSettings

    Args:
        config_path: Файл параметров (--config)
        **overrides: Явные флаги; None означает "не задан"

    Returns:
        RunSettings с проверенными ModelParams
    """
    from config import config

    fields: Dict[str, Any] = {
        'omega_atom': config.DEFAULT_OMEGA_ATOM,
        'omega_cavity': config.DEFAULT_OMEGA_CAVITY,
        'coupling': config.DEFAULT_COUPLING,
        'hopping': config.DEFAULT_HOPPING,
        'qubits': config.DEFAULT_QUBITS,
        'cavities': None,
        't_max': config.DEFAULT_T_MAX,
        'dt': config.DEFAULT_DT,
        't_total': None,
    }

    layers = []
    if config_path is not None:
        layers.append(read_parameter_file(config_path))
    layers.append({k: v for k, v in overrides.items() if v is not None})

    for layer in layers:
        unknown = set(layer) - set(fields)
        if unknown:
            raise ParameterError(f"unknown settings: {', '.join(sorted(unknown))}")
        if 'qubits' in layer and 'cavities' in layer:
            raise ParameterError("set either qubits or cavities, not both", field="cavities")
        if 'cavities' in layer:
            fields['qubits'] = None
        elif 'qubits' in layer:
            fields['cavities'] = None
        fields.update(layer)

    if fields['cavities'] is None:
        if fields['qubits'] is None or fields['qubits'] < 1:
            raise ParameterError("qubit count must be positive", field="qubits")
        fields['cavities'] = 2 ** int(fields['qubits']) - 1

    params = validate(ModelParams(
        omega_atom=float(fields['omega_atom']),
        omega_cavity=float(fields['omega_cavity']),
        coupling=float(fields['coupling']),
        cavities=fields['cavities'],
        hopping=float(fields['hopping']),
    ))

    if not fields['dt'] > 0:
        raise ParameterError("dt must be positive", field="dt")
    if not fields['t_max'] > 0:
        raise ParameterError("t_max must be positive", field="t_max")
    if fields['t_total'] is not None and not fields['t_total'] > 0:
        raise ParameterError("t_total must be positive", field="t_total")

    return RunSettings(
        params=params,
        t_max=float(fields['t_max']),
        dt=float(fields['dt']),
        t_total=None if fields['t_total'] is None else float(fields['t_total']),
    )


def load_series_csv(path: Path) -> Tuple[TimeSeries, Dict[str, str]]:
    """
    Прочитать ряд t,pe, записанный командой dynamics

    Returns:
        (TimeSeries, заголовок)
    """
    columns, header = read_csv(path)
    if 't' not in columns or 'pe' not in columns:
        raise ParameterError(f"{path}: expected columns t,pe", field="input")

    series = TimeSeries(times=columns['t'], values=columns['pe'], params=params_from_record(header))
    return series, header


class PipelineRun:
    """Учёт одного запуска: хранилище, баннеры, итоговый манифест"""

    def __init__(self, command: str, settings: RunSettings, out_dir: Path):
        from config import config

        self.command = command
        self.settings = settings
        self.storage = ResultStorage(out_dir)
        self.tool_version = config.TOOL_VERSION
        self.started_at = datetime.now().isoformat(timespec='seconds')
        self._start = time.perf_counter()

        logger.info("=" * 70)
        logger.info(f"{command.upper()}")
        logger.info("=" * 70)
        logger.info(
            f"n={settings.params.cavities}, Ω={settings.params.omega_atom}, "
            f"ω0={settings.params.omega_cavity}, J={settings.params.coupling}"
        )

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._start

    def finish(self, extra: Optional[Mapping[str, Any]] = None) -> RunManifest:
        """Записать манифест и вывести итог"""
        parameters = self.settings.record()
        if extra:
            parameters.update(extra)

        manifest = RunManifest(
            command=self.command,
            parameters=parameters,
            tool_version=self.tool_version,
            started_at=self.started_at,
            duration_s=round(self.elapsed, 3),
        )
        self.storage.save_manifest(manifest)

        logger.info("=" * 70)
        logger.info(f"{self.command.upper()} COMPLETE")
        logger.info("=" * 70)
        logger.info(f"Time: {self.elapsed:.1f}s")
        logger.info(f"Outputs: {len(manifest.outputs)} files in {self.storage.out_dir}")

        return manifest
