"""
Base Report Formatter
Abstract base class that all report formatters must inherit from
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Optional

from config.config import Config
from ...utils.rationals import format_decimal, format_exact
from ..tally_engine import TallyReport


class ReportFormatter(ABC):
    """
    Abstract base class for report formatters.
    All output formats (text, json, etc.) must implement these methods.
    """

    format_name = 'base'

    def __init__(self, digits: Optional[int] = None, detailed: bool = False):
        """
        Initialize formatter

        Args:
            digits: Decimal digits for rendered numbers (default: from Config)
            detailed: Whether to include every pipeline stage
        """
        self.digits = Config.DISPLAY_DIGITS if digits is None else digits
        if self.digits < 0:
            raise ValueError("digits must be >= 0")
        self.detailed = detailed

    @abstractmethod
    def format(self, report: TallyReport) -> str:
        """
        Render a tally report

        Returns:
            Complete output text, ending with a newline
        """
        pass

    def decimal(self, value: Fraction) -> str:
        return format_decimal(value, self.digits)

    @staticmethod
    def exact(value: Fraction) -> str:
        return format_exact(value)
