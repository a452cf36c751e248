"""
Result Storage Manager
Файл: utils/result_storage.py

Сохранение результатов в results/: CSV с '#' заголовком параметров,
JSON сводки и манифесты запусков. Все файлы пишутся атомарно
(временный файл в той же директории + os.replace).
"""

import io
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass
class RunManifest:
    """
    Манифест одного запуска команды

    Attributes:
        command: Имя команды CLI
        parameters: Полная запись параметров
        outputs: Пути всех записанных файлов
        tool_version: Версия инструмента
        started_at: Время старта (ISO)
        duration_s: Длительность в секундах
    """
    command: str
    parameters: Dict[str, Any]
    outputs: List[str] = field(default_factory=list)
    tool_version: str = ''
    started_at: str = ''
    duration_s: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _json_default(value: Any) -> Any:
    """Сериализация numpy-скаляров и массивов"""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def atomic_write_text(path: Path, text: str) -> Path:
    """
    Записать текст атомарно

    Args:
        path: Целевой путь
        text: Содержимое

    Returns:
        path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise

    return path


def format_csv(
        columns: Mapping[str, np.ndarray],
        header: Optional[Mapping[str, Any]] = None
) -> str:
    """
    Сформировать CSV: строки '# key=value', строка имён колонок, данные

    Args:
        columns: {имя колонки: массив}, все одной длины
        header: Метаданные для '#' строк

    Returns:
        Текст CSV
    """
    names = list(columns)
    data = np.column_stack([np.asarray(columns[name], dtype=float) for name in names])

    buffer = io.StringIO()
    for key, value in (header or {}).items():
        buffer.write(f"# {key}={value}\n")
    buffer.write(",".join(names) + "\n")
    np.savetxt(buffer, data, fmt='%.10g', delimiter=',')

    return buffer.getvalue()


class ResultStorage:
    """Управление сохранением результатов одного запуска"""

    def __init__(self, out_dir: Optional[Path] = None):
        """
        Args:
            out_dir: Path к директории результатов (по умолчанию из config)
        """
        if out_dir is None:
            from config import config
            out_dir = config.RESULTS_DIR

        self.out_dir = Path(out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.written: List[Path] = []

        logger.debug(f"Result storage initialized: {self.out_dir}")

    def save_csv(
            self,
            name: str,
            columns: Mapping[str, np.ndarray],
            header: Optional[Mapping[str, Any]] = None
    ) -> Path:
        """
        Сохранить таблицу в CSV

        Args:
            name: Имя файла (например, 'dynamics.csv')
            columns: {имя колонки: массив}
            header: Запись параметров для '#' строк

        Returns:
            Path к сохранённому файлу
        """
        path = atomic_write_text(self.out_dir / name, format_csv(columns, header))
        self.written.append(path)
        logger.info(f"Saved {path.name} ({len(next(iter(columns.values())))} rows)")
        return path

    def save_json(self, name: str, data: Mapping[str, Any]) -> Path:
        """
        Сохранить JSON сводку

        Args:
            name: Имя файла
            data: Словарь

        Returns:
            Path к сохранённому файлу
        """
        text = json.dumps(data, indent=2, ensure_ascii=False, default=_json_default) + "\n"
        path = atomic_write_text(self.out_dir / name, text)
        self.written.append(path)
        logger.info(f"Saved {path.name}")
        return path

    def save_manifest(self, manifest: RunManifest) -> Path:
        """
        Сохранить манифест; в outputs попадают все ранее записанные файлы

        Args:
            manifest: RunManifest

        Returns:
            Path к манифесту
        """
        manifest.outputs = [str(p) for p in self.written]
        text = json.dumps(
            manifest.to_dict(), indent=2, ensure_ascii=False, default=_json_default
        ) + "\n"
        path = atomic_write_text(self.out_dir / f"{manifest.command}_manifest.json", text)
        logger.info(f"Manifest saved: {path.name} ({len(manifest.outputs)} outputs)")
        return path


def read_csv(path: Path) -> Tuple[Dict[str, np.ndarray], Dict[str, str]]:
    """
    Прочитать CSV, записанный ResultStorage

    Args:
        path: Путь к файлу

    Returns:
        ({имя колонки: массив}, {ключ заголовка: строка})
    """
    header: Dict[str, str] = {}
    names: Optional[List[str]] = None
    rows: List[str] = []

    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                key, sep, value = line[1:].strip().partition('=')
                if sep:
                    header[key.strip()] = value.strip()
                continue
            if names is None:
                names = [name.strip() for name in line.split(',')]
                continue
            rows.append(line)

    if names is None:
        raise ParameterError(f"{path}: no column header line", field="input")

    data = np.loadtxt(rows, delimiter=',', ndmin=2) if rows else np.empty((0, len(names)))
    columns = {name: data[:, i] for i, name in enumerate(names)}

    return columns, header
