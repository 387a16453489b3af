"""
Input Loading
Reads ballot files and TSV score matrices, writes TSV matrices
"""
import io
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from ..profile.ballots import CandidateSet, Profile, parse_profile
from ..profile.llull_matrix import LlullMatrix, ScoreMatrix
from ..utils.errors import InputError, MatrixFormatError
from ..utils.logger import logger
from ..utils.rationals import format_exact, parse_rational

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None


def load_profile(path: PathLike, unlisted_policy: str) -> Profile:
    """Parse a ballot file"""
    profile = parse_profile(read_text(path), unlisted_policy)
    logger.info(f"Loaded {len(profile.ballots)} ballots from {path}")
    return profile


def parse_matrix(text: str, total_weight: Optional[Fraction] = None) -> LlullMatrix:
    """
    Parse a TSV score table

    The first row and first column hold candidate names in the same order;
    entries are decimals or 'p/q'; diagonal cells are ignored. With a total
    weight the entries are absolute counts and get divided by it.

    Raises:
        MatrixFormatError: Naming the offending line or pair
    """
    numbered = [(lineno, line) for lineno, line in enumerate(text.splitlines(), start=1)
                if line.strip() and not line.lstrip().startswith('#')]
    if not numbered:
        raise MatrixFormatError("empty matrix file")
    body = "\n".join(line for _, line in numbered)
    try:
        frame = pd.read_csv(io.StringIO(body), sep='\t', index_col=0, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, ValueError) as e:
        raise MatrixFormatError(f"cannot read table: {e}") from None

    linenos = [lineno for lineno, _ in numbered]
    columns = [str(c).strip() for c in frame.columns]
    rows = [str(r).strip() for r in frame.index]
    if columns != rows:
        raise MatrixFormatError("row names must match column names in the same order", line=linenos[0])
    try:
        candidates = CandidateSet(tuple(columns))
    except ValueError as e:
        raise MatrixFormatError(str(e), line=linenos[0]) from None

    table = []
    for i, x in enumerate(rows):
        row = []
        for j, y in enumerate(columns):
            if i == j:
                row.append(Fraction(0))
                continue
            cell = frame.iat[i, j].strip()
            try:
                row.append(parse_rational(cell))
            except ValueError as e:
                raise MatrixFormatError(str(e), line=linenos[i + 1], pair=(x, y)) from None
        table.append(row)

    if total_weight is not None:
        return LlullMatrix.from_counts(candidates, table, total_weight)
    return LlullMatrix.from_fractions(candidates, table)


def load_matrix(path: PathLike, total_weight: Optional[Fraction] = None) -> LlullMatrix:
    matrix = parse_matrix(read_text(path), total_weight)
    logger.info(f"Loaded {matrix.N}x{matrix.N} matrix from {path}")
    return matrix


def format_matrix_tsv(matrix: ScoreMatrix) -> str:
    """TSV with exact 'p/q' entries and '-' on the diagonal"""
    names = list(matrix.candidates.names)
    data = [['-' if x == y else _exact_cell(matrix.value(x, y)) for y in names] for x in names]
    frame = pd.DataFrame(data, index=names, columns=names)
    return frame.to_csv(sep='\t', index_label='')


def _exact_cell(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else format_exact(value)
