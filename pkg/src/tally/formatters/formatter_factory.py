"""
Formatter Factory
Creates report formatters by output format name
"""
from typing import Dict, List, Optional, Type

from ...utils.logger import logger
from .base_formatter import ReportFormatter
from .json_formatter import JsonFormatter
from .text_formatter import TextFormatter


class FormatterFactory:
    """Factory for creating report formatters"""

    # Registry of available formats
    _formatters: Dict[str, Type[ReportFormatter]] = {
        'text': TextFormatter,
        'json': JsonFormatter,
    }

    @classmethod
    def create(cls, format_name: str, digits: Optional[int] = None,
               detailed: bool = False) -> ReportFormatter:
        """
        Create a formatter instance

        Args:
            format_name: Name of the output format ('text', 'json')
            digits: Decimal digits for rendered numbers
            detailed: Whether to include every pipeline stage

        Raises:
            ValueError: If format_name is not supported
        """
        key = format_name.lower()
        if key not in cls._formatters:
            available = ', '.join(cls._formatters.keys())
            error_msg = f"Unsupported format: '{format_name}'. Available formats: {available}"
            logger.error(error_msg)
            raise ValueError(error_msg)
        return cls._formatters[key](digits=digits, detailed=detailed)

    @classmethod
    def register_formatter(cls, name: str, formatter_class: type):
        """
        Register a new formatter implementation

        Example:
            >>> FormatterFactory.register_formatter('csv', CsvFormatter)
        """
        if not issubclass(formatter_class, ReportFormatter):
            raise TypeError(f"{formatter_class.__name__} must inherit from ReportFormatter")
        cls._formatters[name.lower()] = formatter_class
        logger.debug(f"Registered report format: {name}")

    @classmethod
    def get_available_formats(cls) -> List[str]:
        return list(cls._formatters.keys())
