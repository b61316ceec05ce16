"""
Exact Linear Algebra Module
===========================
Rank and determinant over QQ (fraction-free Bareiss elimination on
integer-scaled rows) and over GF(p) (elimination with modular inverses).
"""

from fractions import Fraction
from math import lcm
from typing import Any, List, Sequence

from src.ringcore import Field, PrimeFieldElement


def _integer_rows(rows: Sequence[Sequence[Any]]) -> List[List[int]]:
    """Scale each rational row by the lcm of its denominators."""
    result = []
    for row in rows:
        values = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in values)) if values else 1
        result.append([int(v * scale) for v in values])
    return result


def _residue_rows(rows: Sequence[Sequence[Any]], p: int) -> List[List[int]]:
    converted = []
    for row in rows:
        converted.append([
            v.value if isinstance(v, PrimeFieldElement) else Field(p)(v).value
            for v in row
        ])
    return converted


def _bareiss(matrix: List[List[int]]) -> tuple:
    """
    In-place fraction-free elimination.

    Returns (rank, last pivot, number of row swaps). Every intermediate entry
    is a minor of the original matrix, so the divisions are exact.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    previous = 1
    rank = 0
    swaps = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
            swaps += 1
        pivot = matrix[rank][col]
        pivot_line = matrix[rank]
        for r in range(rank + 1, n_rows):
            line = matrix[r]
            factor = line[col]
            if factor == 0:
                for c in range(col + 1, n_cols):
                    line[c] = (pivot * line[c]) // previous
            else:
                for c in range(col + 1, n_cols):
                    line[c] = (pivot * line[c] - factor * pivot_line[c]) // previous
            line[col] = 0
        previous = pivot
        rank += 1
    return rank, previous, swaps


def _modular_rank(matrix: List[List[int]], p: int) -> int:
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col] % p), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inverse = pow(matrix[rank][col], -1, p)
        pivot_line = [v * inverse % p for v in matrix[rank]]
        matrix[rank] = pivot_line
        for r in range(rank + 1, n_rows):
            factor = matrix[r][col] % p
            if factor:
                line = matrix[r]
                for c in range(col, n_cols):
                    line[c] = (line[c] - factor * pivot_line[c]) % p
        rank += 1
    return rank


def rank(rows: Sequence[Sequence[Any]], field: Field) -> int:
    """Rank of a matrix given as a list of rows of field elements."""
    if not rows or not rows[0]:
        return 0
    if field.is_rational:
        return _bareiss(_integer_rows(rows))[0]
    return _modular_rank(_residue_rows(rows, field.characteristic), field.characteristic)


def determinant(rows: Sequence[Sequence[Any]], field: Field):
    """Determinant of a square matrix as a field element."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return field.one
    if field.is_rational:
        values = [[Fraction(v) for v in row] for row in rows]
        scales = [lcm(*(v.denominator for v in row)) for row in values]
        matrix = [[int(v * s) for v in row] for row, s in zip(values, scales)]
        full_rank, last_pivot, swaps = _bareiss(matrix)
        if full_rank < n:
            return field.zero
        det = Fraction(last_pivot * (-1) ** swaps)
        for s in scales:
            det /= s
        return det
    p = field.characteristic
    matrix = _residue_rows(rows, p)
    det = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if matrix[r][col] % p), None)
        if pivot_row is None:
            return field.zero
        if pivot_row != col:
            matrix[col], matrix[pivot_row] = matrix[pivot_row], matrix[col]
            det = -det
        pivot = matrix[col][col]
        det = det * pivot % p
        inverse = pow(pivot, -1, p)
        for r in range(col + 1, n):
            factor = matrix[r][col] * inverse % p
            if factor:
                for c in range(col, n):
                    matrix[r][c] = (matrix[r][c] - factor * matrix[col][c]) % p
    return field(det)
