"""
Independent Oracles
Indirect scores by simple-path enumeration and by max-min matrix powers
"""
from typing import Optional

import numpy as np

from config.config import Config
from ..closure.indirect_scores import IndirectScores
from ..profile.llull_matrix import ScoreMatrix


def oracle_indirect_scores(matrix: ScoreMatrix, bound: Optional[int] = None) -> IndirectScores:
    """
    Strongest path by exhaustive enumeration of simple paths

    Raises:
        ValueError: If N exceeds the oracle bound
    """
    bound = Config.ORACLE_BOUND if bound is None else bound
    n = matrix.N
    if n > bound:
        raise ValueError(f"oracle bound exceeded: N={n} > {bound}")

    v = [[int(x) for x in row] for row in matrix.numerators]
    best = [[0] * n for _ in range(n)]

    def walk(source: int, node: int, weakest: int, visited: int):
        for nxt in range(n):
            if visited >> nxt & 1:
                continue
            link = min(weakest, v[node][nxt])
            if link > best[source][nxt]:
                best[source][nxt] = link
            walk(source, nxt, link, visited | (1 << nxt))

    top = matrix.denominator
    for source in range(n):
        walk(source, source, top, 1 << source)

    nums = np.array(best, dtype=object).reshape(n, n)
    return IndirectScores(matrix.candidates, nums, matrix.denominator)


def maxmin_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(a ⊗ b)_xy = max over k of min(a_xk, b_ky)"""
    return np.minimum(a[:, :, None], b[None, :, :]).max(axis=1)


def maxmin_power(matrix: ScoreMatrix, exponent: Optional[int] = None) -> IndirectScores:
    """Max-min matrix power with the diagonal at the top value; exponent defaults to N-1"""
    n = matrix.N
    exponent = max(n - 1, 1) if exponent is None else exponent
    base = matrix.numerators.copy()
    np.fill_diagonal(base, matrix.denominator)
    result = base
    for _ in range(exponent - 1):
        result = maxmin_product(result, base)
    return IndirectScores(matrix.candidates, result, matrix.denominator)
