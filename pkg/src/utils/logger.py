"""
Logging utility for the CLC tally engine
Provides colored console output on stderr and file logging
"""
import logging
import sys
from pathlib import Path
from typing import Dict, Optional

import colorlog

from config.config import Config


class TallyLogger:
    """Custom logger for the tally engine"""

    def __init__(self, name: str = 'CLCTally', log_file: Optional[str] = 'logs/clc_tally.log',
                 level: int = logging.INFO):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)

        # Prevent duplicate handlers
        if self.logger.handlers:
            return

        # Create formatters
        file_formatter = logging.Formatter(
            '%(asctime)s | %(levelname)-8s | %(name)s | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        console_formatter = colorlog.ColoredFormatter(
            '%(log_color)s%(levelname)-8s%(reset)s | %(message)s',
            log_colors={
                'DEBUG': 'cyan',
                'INFO': 'green',
                'WARNING': 'yellow',
                'ERROR': 'red',
                'CRITICAL': 'bold_red',
            }
        )

        # File handler (an empty path disables it)
        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_path, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(file_formatter)
            self.logger.addHandler(file_handler)

        # Console handler; stdout is reserved for reports
        console_handler = colorlog.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(console_formatter)
        self.logger.addHandler(console_handler)

    def get_logger(self) -> logging.Logger:
        return self.logger

    def log_stage(self, stage: str, data) -> None:
        """Log one pipeline stage with its payload"""
        stage_log = (
            f"\n{'-'*80}\n"
            f"STAGE: {stage}\n"
            f"{'-'*80}\n"
            f"{data}\n"
            f"{'-'*80}"
        )
        self.logger.debug(stage_log)

    def log_summary(self, title: str, metrics: Dict) -> None:
        """Log a block of summary values"""
        summary_log = (
            f"\n{'*'*80}\n"
            f"{title.upper()}\n"
            f"{'*'*80}\n"
        )
        for key, value in metrics.items():
            summary_log += f"{key}: {value}\n"
        summary_log += f"{'*'*80}"
        self.logger.info(summary_log)


# Create default logger instance
tally_logger = TallyLogger(
    log_file=Config.LOG_FILE,
    level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
)
logger = tally_logger.get_logger()
