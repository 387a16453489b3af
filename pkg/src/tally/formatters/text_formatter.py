"""
Text Report Formatter
Plain rate lines, or stage-by-stage tables in detailed mode
"""
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from ...profile.llull_matrix import ScoreMatrix
from ...utils.rationals import format_decimal
from ..tally_engine import TallyReport
from .base_formatter import ReportFormatter


class TextFormatter(ReportFormatter):
    """Human-readable report; '*' marks strict indirect winners"""

    format_name = 'text'

    def format(self, report: TallyReport) -> str:
        if not self.detailed:
            return "\n".join(self._rate_lines(report)) + "\n"

        xi = list(report.admissible_order.sequence)
        scale = report.scale
        unit = f"absolute, total {self._plain(scale)}" if scale is not None else "relative"
        sections = [
            f"Candidates: {' '.join(report.candidates)} (N={report.candidates.N})",
            self._section(f"Original scores ({unit})", self._square(report.llull, scale)),
            self._section(f"Indirect scores ({unit}; * marks v*_xy > v*_yx)",
                          self._square(report.indirect_scores, scale, mark_winners=True)),
            self._section("Ranks", self._ranks(report)),
            f"Admissible order: {' '.join(xi)}",
            self._section(f"Indirect margins ({unit}, admissible order)",
                          self._upper(report.indirect_margins, xi, scale)),
            self._section(f"Intermediate margins ({unit})", self._intermediate(report, scale)),
            self._section(f"Projected margins ({unit}, admissible order)",
                          self._upper(report.projected_margins.margins, xi, scale)),
            self._section("Rates", "\n".join(self._rate_lines(report))),
            "Rates: " + " ".join(self.decimal(report.rates[x]) for x in xi),
            "Social order: " + " > ".join(" = ".join(c) for c in report.preorder.tie_classes),
        ]
        return "\n\n".join(sections) + "\n"

    # -- pieces -----------------------------------------------------------

    def _rate_lines(self, report: TallyReport) -> List[str]:
        xi = report.admissible_order.sequence
        width = max(len(x) for x in xi)
        lines = [f"{x:<{width}} {self.decimal(report.rates[x])}" for x in xi]
        if not self.detailed and report.preorder.has_ties():
            classes = [" = ".join(c) for c in report.preorder.tie_classes if len(c) > 1]
            lines.append("Ties: " + "; ".join(classes))
        return lines

    @staticmethod
    def _section(title: str, body: str) -> str:
        return f"{title}\n{'-' * len(title)}\n{body}"

    def _plain(self, value: Fraction) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return self.decimal(value)

    def _cell(self, value: Fraction, scale: Optional[Fraction]) -> str:
        if scale is not None:
            return self._plain(value * scale)
        return self.decimal(value)

    @staticmethod
    def _values(matrix: ScoreMatrix, scale: Optional[Fraction]) -> pd.DataFrame:
        return matrix.scaled_counts(scale) if scale is not None else matrix.to_frame()

    def _render(self, value: Fraction, scale: Optional[Fraction]) -> str:
        return self._plain(value) if scale is not None else self.decimal(value)

    def _square(self, matrix: ScoreMatrix, scale: Optional[Fraction], mark_winners: bool = False) -> str:
        names = list(matrix.candidates)
        values = self._values(matrix, scale)
        rows = []
        for x in names:
            row = []
            for y in names:
                if x == y:
                    row.append('-')
                    continue
                cell = self._render(values.at[x, y], scale)
                if mark_winners and matrix[x, y] > matrix[y, x]:
                    cell += '*'
                row.append(cell)
            rows.append(row)
        return pd.DataFrame(rows, index=names, columns=names).to_string()

    def _upper(self, matrix: ScoreMatrix, order: Sequence[str], scale: Optional[Fraction]) -> str:
        if len(order) < 2:
            return "(none)"
        rows_names, col_names = list(order[:-1]), list(order[1:])
        values = self._values(matrix, scale)
        rows = []
        for i, x in enumerate(rows_names):
            rows.append(['' if j < i else self._render(values.at[x, y], scale)
                         for j, y in enumerate(col_names)])
        return pd.DataFrame(rows, index=rows_names, columns=col_names).to_string()

    def _ranks(self, report: TallyReport) -> str:
        names = list(report.candidates)
        ranks = [self._rank(report.copeland_ranks[x]) for x in names]
        return pd.DataFrame({'rank': ranks}, index=names).to_string()

    @staticmethod
    def _rank(value: Fraction) -> str:
        return str(value.numerator) if value.denominator == 1 else format_decimal(value, 1)

    def _intermediate(self, report: TallyReport, scale: Optional[Fraction]) -> str:
        pairs = report.intermediate_margins.pairs()
        if not pairs:
            return "(none)"
        labels = [f"{x} > {y}" for x, y in pairs]
        values = [self._cell(s, scale) for s in report.intermediate_margins.sigma]
        return pd.DataFrame({'margin': values}, index=labels).to_string()
