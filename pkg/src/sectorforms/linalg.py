"""Exact linear algebra over the rationals for sparse row dictionaries.

Rows are dicts mapping a column key (any sortable hashable) to a nonzero
Fraction.  Elimination is fraction-free in spirit: pivots are chosen
deterministically (shortest row, then smallest column key), rows are
rescaled exactly, and results never touch floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Sequence

Row = dict[Hashable, Fraction]


def _sub_scaled(target: Row, source: Row, factor: Fraction) -> None:
    """target -= factor * source, dropping zeros in place."""
    if not factor:
        return
    for col, val in source.items():
        s = target.get(col, Fraction(0)) - factor * val
        if s:
            target[col] = s
        else:
            target.pop(col, None)


def rref(rows: Sequence[Row]) -> tuple[list[Row], dict[Hashable, int]]:
    """Reduced row echelon form.

    Returns the nonzero reduced rows and a map pivot column -> row index.
    Deterministic: pivot columns are processed in ascending key order.
    """
    work = [dict(r) for r in rows if r]
    pivots: dict[Hashable, int] = {}
    reduced: list[Row] = []
    while work:
        # most sparse row first, then by its smallest column, for stability
        work.sort(key=lambda r: (len(r), min(r)))
        row = work.pop(0)
        col = min(row)
        inv = 1 / row[col]
        row = {c: v * inv for c, v in row.items()}
        for other in work:
            if col in other:
                _sub_scaled(other, row, other[col])
        for done in reduced:
            if col in done:
                _sub_scaled(done, row, done[col])
        pivots[col] = len(reduced)
        reduced.append(row)
        work = [r for r in work if r]
    return reduced, pivots


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of the right kernel of a matrix with integer columns 0..ncols-1.

    One basis vector per free column, with a 1 in that column; vectors are
    returned in ascending free-column order.
    """
    reduced, pivots = rref(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec: dict[int, Fraction] = {free: Fraction(1)}
        for col, ridx in pivots.items():
            val = reduced[ridx].get(free)
            if val:
                vec[col] = -val
        basis.append(vec)
    return basis


def in_span(basis_rows: Sequence[Row], target: Row) -> bool:
    """Whether target lies in the rational span of basis_rows."""
    reduced, _ = rref(basis_rows)
    work = dict(target)
    while work:
        col = min(work)
        hit = next((r for r in reduced if min(r) == col), None)
        if hit is None:
            return False
        _sub_scaled(work, hit, work[col])
    return True
