"""
Report Formatters
"""
from .base_formatter import ReportFormatter
from .formatter_factory import FormatterFactory
from .json_formatter import JsonFormatter
from .text_formatter import TextFormatter

__all__ = ['ReportFormatter', 'FormatterFactory', 'JsonFormatter', 'TextFormatter']
