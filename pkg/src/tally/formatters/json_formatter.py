"""
JSON Report Formatter
Every number appears as {"exact": "p/q", "decimal": "x.xxxx"}
"""
import json
from fractions import Fraction
from typing import Dict

from ...profile.llull_matrix import ScoreMatrix
from ..tally_engine import TallyReport
from .base_formatter import ReportFormatter


class JsonFormatter(ReportFormatter):
    """Machine-readable report with stable field names"""

    format_name = 'json'

    def number(self, value: Fraction) -> Dict[str, str]:
        return {'exact': self.exact(value), 'decimal': self.decimal(value)}

    def matrix(self, matrix: ScoreMatrix) -> Dict[str, Dict[str, Dict[str, str]]]:
        return {x: {y: self.number(matrix[x, y]) for y in matrix.candidates if y != x}
                for x in matrix.candidates}

    def format(self, report: TallyReport) -> str:
        names = list(report.candidates)
        xi = list(report.admissible_order.sequence)
        document = {
            'candidates': names,
            'scale': self.exact(report.scale) if report.scale is not None else None,
            'llull': self.matrix(report.llull),
            'indirect_scores': self.matrix(report.indirect_scores),
            'indirect_margins': self.matrix(report.indirect_margins),
            'ranks': {x: self.number(report.copeland_ranks[x]) for x in names},
            'order': xi,
            'intermediate': [
                {'pair': [x, y], 'margin': self.number(s)}
                for (x, y), s in zip(report.intermediate_margins.pairs(),
                                     report.intermediate_margins.sigma)
            ],
            'projected': self.matrix(report.projected_margins.margins),
            'projected_scores': self.matrix(report.projected_scores),
            'rates': {x: self.number(report.rates[x]) for x in xi},
            'preorder': {
                'classes': [list(c) for c in report.preorder.tie_classes],
                'strict': [list(p) for p in report.preorder.strict.sorted_pairs()],
            },
        }
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
