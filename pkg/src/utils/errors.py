"""
Exception types shared across the tally pipeline
"""
from typing import Optional, Tuple


class InputError(ValueError):
    """Malformed or invalid user input (ballot file, matrix file, Γ violation)"""

    def __init__(self, message: str, line: Optional[int] = None,
                 pair: Optional[Tuple[str, str]] = None):
        self.line = line
        self.pair = pair
        context = []
        if line is not None:
            context.append(f"line {line}")
        if pair is not None:
            context.append(f"pair ({pair[0]}, {pair[1]})")
        prefix = f"{', '.join(context)}: " if context else ""
        super().__init__(f"{prefix}{message}")


class BallotParseError(InputError):
    """Ballot file does not follow the ballot grammar"""


class MatrixFormatError(InputError):
    """Matrix file is not a valid score table"""


class InvariantViolation(RuntimeError):
    """An internal post-condition of the pipeline failed"""
