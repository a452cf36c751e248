"""
Logging Configuration
Файл: utils/logger.py

- Логи сохраняются в logs/ (общий файл и файл только с ошибками)
- Цветной вывод в консоль (stderr, чтобы stdout оставался под данные)
"""

import logging
import sys
from pathlib import Path
from datetime import datetime
from typing import Optional


class ColorCodes:
    """ANSI color codes для консоли"""
    GREY = '\033[90m'
    YELLOW = '\033[93m'
    RED = '\033[91m'
    RESET = '\033[0m'


class ColoredFormatter(logging.Formatter):
    """Цвет по уровню сообщения"""

    LEVEL_COLORS = {
        logging.DEBUG: ColorCodes.GREY,
        logging.WARNING: ColorCodes.YELLOW,
        logging.ERROR: ColorCodes.RED,
        logging.CRITICAL: ColorCodes.RED,
    }

    def format(self, record):
        log_message = super().format(record)
        color = self.LEVEL_COLORS.get(record.levelno)
        if color is None:
            return log_message
        return f"{color}{log_message}{ColorCodes.RESET}"


LOG_FORMAT = '%(asctime)s [%(levelname)-8s] %(name)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(
        module_name: Optional[str],
        log_dir: Optional[Path] = None,
        console_level: int = logging.INFO,
        file_level: int = logging.DEBUG,
        to_file: Optional[bool] = None
) -> logging.Logger:
    """
    Настройка логгера для модуля

    Args:
        module_name: __name__ модуля (None - корневой логгер)
        log_dir: Path к директории логов (по умолчанию config.LOGS_DIR)
        console_level: Уровень для консоли
        file_level: Уровень для файла
        to_file: Писать ли логи в файлы (по умолчанию config.LOG_TO_FILE)

    Returns:
        Настроенный logger
    """
    logger = logging.getLogger(module_name)

    # Если уже настроен - возвращаем
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)

    try:
        from config import config
        if log_dir is None:
            log_dir = config.LOGS_DIR
        if to_file is None:
            to_file = config.LOG_TO_FILE
    except ImportError:
        log_dir = log_dir or Path("logs")
        to_file = True if to_file is None else to_file

    file_formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    console_formatter = ColoredFormatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    if to_file:
        log_dir.mkdir(parents=True, exist_ok=True)
        today = datetime.now().strftime('%Y%m%d')

        # FILE: Все логи
        file_handler = logging.FileHandler(
            log_dir / f"bsm_{today}.log",
            encoding='utf-8'
        )
        file_handler.setLevel(file_level)
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)

        # FILE: Только ошибки
        error_handler = logging.FileHandler(
            log_dir / f"bsm_errors_{today}.log",
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(file_formatter)
        logger.addHandler(error_handler)

    # CONSOLE
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    return logger

