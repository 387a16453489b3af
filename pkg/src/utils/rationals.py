"""
Exact rational helpers
Parsing, rendering and common-denominator packing of Fraction values
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

Number = Union[int, Fraction, str]

# Below this bound int64 max/min/subtract cannot overflow
_INT64_SAFE = 2 ** 61


def parse_rational(token: Number) -> Fraction:
    """
    Parse a decimal ("0.25", "3") or "p/q" token exactly

    Raises:
        ValueError: If the token is not a finite rational
    """
    if isinstance(token, Fraction):
        return token
    if isinstance(token, int):
        return Fraction(token)
    text = str(token).strip()
    if not text:
        raise ValueError("empty number")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: '{text}'") from e
    return value


def format_exact(value: Fraction) -> str:
    """Render as 'p/q', always with a denominator ('2/1')"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int = 4) -> str:
    """Render with a fixed number of digits, rounding half to even"""
    scaled = round(Fraction(value) * 10 ** digits)
    sign = '-' if scaled < 0 else ''
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators"""
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def pack_fractions(rows: Sequence[Sequence[Number]]) -> Tuple[np.ndarray, int]:
    """
    Pack a square table of rationals into integer numerators over one denominator

    Returns:
        (numerators as an object array of Python ints, denominator)
    """
    table = [[parse_rational(v) for v in row] for row in rows]
    den = common_denominator(v for row in table for v in row)
    nums = np.empty((len(table), len(table[0]) if table else 0), dtype=object)
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            nums[i, j] = v.numerator * (den // v.denominator)
    return nums, den


def reduce_fraction_array(nums: np.ndarray, den: int) -> Tuple[np.ndarray, int]:
    """Divide numerators and denominator by their common gcd; denominator kept positive"""
    if den <= 0:
        raise ValueError("denominator must be positive")
    g = reduce(gcd, (int(x) for x in nums.flat), den)
    if g > 1:
        nums = np.array([int(x) // g for x in nums.flat], dtype=object).reshape(nums.shape)
        den //= g
    else:
        nums = np.array([int(x) for x in nums.flat], dtype=object).reshape(nums.shape)
    return nums, den


def working_array(nums: np.ndarray) -> np.ndarray:
    """int64 copy when every entry is small enough, otherwise an object copy"""
    if nums.size == 0 or max(abs(int(x)) for x in nums.flat) < _INT64_SAFE:
        return nums.astype(np.int64)
    return nums.astype(object)


def to_object_array(work: np.ndarray) -> np.ndarray:
    """Back to an object array of Python ints"""
    return np.array([int(x) for x in work.flat], dtype=object).reshape(work.shape)
