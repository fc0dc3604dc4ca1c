"""Compromise ranking over a Fermatean fuzzy decision matrix.

Pipeline: normalize cost columns by component swap, pick per-column ideal and
anti-ideal cells, weight every cell by scalar multiplication with its
criterion weight, sum normalized scores per row, and convert the sums into
utility degrees relative to the weighted ideal and anti-ideal references.

The final utility is strictly increasing in the row's score sum, so ranking
by utility and ranking by score sum always agree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import DegenerateReferenceError, ShapeError
from .ffn import FFN, WeightVector, scale

ORIENTATIONS = ("benefit", "cost")


@dataclass(frozen=True)
class FFMatrix:
    """Rectangular grid of FFNs with row/column ids and column orientations."""

    row_ids: tuple[str, ...]
    col_ids: tuple[str, ...]
    cells: tuple[tuple[FFN, ...], ...]
    orientations: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.row_ids) == 0 or len(self.col_ids) == 0:
            raise ShapeError("matrix must have at least one row and one column")
        if len(self.cells) != len(self.row_ids):
            raise ShapeError(f"{len(self.cells)} cell rows vs {len(self.row_ids)} row ids")
        for i, row in enumerate(self.cells):
            if len(row) != len(self.col_ids):
                raise ShapeError(f"row {self.row_ids[i]!r} has {len(row)} cells, expected {len(self.col_ids)}")
        if len(self.orientations) != len(self.col_ids):
            raise ShapeError(f"{len(self.orientations)} orientations vs {len(self.col_ids)} columns")
        for j, o in enumerate(self.orientations):
            if o not in ORIENTATIONS:
                raise ShapeError(f"column {self.col_ids[j]!r}: unknown orientation {o!r}")

    @property
    def n_rows(self) -> int:
        return len(self.row_ids)

    @property
    def n_cols(self) -> int:
        return len(self.col_ids)

    def column(self, j: int) -> tuple[FFN, ...]:
        return tuple(row[j] for row in self.cells)


@dataclass(frozen=True)
class MarcosResult:
    """Score sums, utility degrees, final utilities, and the induced order."""

    alternatives: tuple[str, ...]
    s: tuple[float, ...]
    s_pis: float
    s_nis: float
    u_minus: tuple[float, ...]
    u_plus: tuple[float, ...]
    f_u: tuple[float, ...]
    order: tuple[str, ...]

    def rank_of(self, alternative: str) -> int:
        """1-based position of an alternative in the final order."""
        return self.order.index(alternative) + 1


def normalize(matrix: FFMatrix) -> FFMatrix:
    """Swap components in cost columns; benefit columns pass through."""
    cost = [o == "cost" for o in matrix.orientations]
    cells = tuple(
        tuple(cell.complement() if cost[j] else cell for j, cell in enumerate(row))
        for row in matrix.cells
    )
    return replace(matrix, cells=cells, orientations=("benefit",) * matrix.n_cols)


def ideal_solutions(matrix: FFMatrix) -> tuple[tuple[FFN, ...], tuple[FFN, ...]]:
    """Per-column max (ideal) and min (anti-ideal) under the FFN order."""
    pis = tuple(max(matrix.column(j)) for j in range(matrix.n_cols))
    nis = tuple(min(matrix.column(j)) for j in range(matrix.n_cols))
    return pis, nis


def weight_matrix(matrix: FFMatrix, weights: Sequence[float]) -> FFMatrix:
    """Scalar-multiply every cell by its column weight."""
    if len(weights) != matrix.n_cols:
        raise ShapeError(f"{len(weights)} weights vs {matrix.n_cols} columns")
    cells = tuple(
        tuple(scale(weights[j], cell) for j, cell in enumerate(row)) for row in matrix.cells
    )
    return replace(matrix, cells=cells)


def weighted_scores(
    weighted: FFMatrix,
    pis: Sequence[FFN],
    nis: Sequence[FFN],
    weights: Sequence[float],
) -> tuple[tuple[float, ...], float, float]:
    """Row sums of normalized scores, plus the weighted reference sums.

    ``pis``/``nis`` are the unweighted per-column ideals; their sums apply the
    same scalar weighting as the matrix cells.
    """
    n = weighted.n_cols
    if not (len(pis) == len(nis) == len(weights) == n):
        raise ShapeError("pis, nis, and weights must all match the column count")
    s = tuple(sum(cell.normalized_score for cell in row) for row in weighted.cells)
    s_pis = sum(scale(weights[j], pis[j]).normalized_score for j in range(n))
    s_nis = sum(scale(weights[j], nis[j]).normalized_score for j in range(n))
    return s, s_pis, s_nis


def utilities(
    s: Sequence[float],
    s_pis: float,
    s_nis: float,
    alternatives: Sequence[str] | None = None,
    standard_marcos: bool = False,
) -> MarcosResult:
    """Utility degrees and final utilities from score sums.

    By default ``u_minus = s / s_pis`` and ``u_plus = s / s_nis`` (the
    convention the rest of this package reproduces); ``standard_marcos=True``
    flips the association.  Order sorts final utility descending, ties broken
    by higher score sum, then input position.
    """
    if s_pis == 0.0 or s_nis == 0.0 or any(x == 0.0 for x in s):
        raise DegenerateReferenceError("score sums must be non-zero to form utility ratios")
    ids = tuple(alternatives) if alternatives is not None else tuple(str(i) for i in range(len(s)))
    if len(ids) != len(s):
        raise ShapeError(f"{len(ids)} alternative ids vs {len(s)} score sums")
    u_minus = []
    u_plus = []
    f_u = []
    for x in s:
        if standard_marcos:
            um, up = x / s_nis, x / s_pis
        else:
            um, up = x / s_pis, x / s_nis
        f_plus = um / (um + up)
        f_minus = up / (um + up)
        fu = (up + um) / (1.0 + (1.0 - f_plus) / f_plus + (1.0 - f_minus) / f_minus)
        u_minus.append(um)
        u_plus.append(up)
        f_u.append(fu)
    by_rank = sorted(
        range(len(s)), key=lambda i: (-f_u[i], -s[i], i)
    )
    return MarcosResult(
        alternatives=ids,
        s=tuple(s),
        s_pis=s_pis,
        s_nis=s_nis,
        u_minus=tuple(u_minus),
        u_plus=tuple(u_plus),
        f_u=tuple(f_u),
        order=tuple(ids[i] for i in by_rank),
    )


def rank(
    matrix: FFMatrix,
    weights: Sequence[float],
    standard_marcos: bool = False,
) -> MarcosResult:
    """Full composition: normalize, ideals, weight, score, utilities."""
    w = weights if isinstance(weights, WeightVector) else WeightVector(weights)
    normalized = normalize(matrix)
    pis, nis = ideal_solutions(normalized)
    weighted = weight_matrix(normalized, w)
    s, s_pis, s_nis = weighted_scores(weighted, pis, nis, w)
    return utilities(s, s_pis, s_nis, matrix.row_ids, standard_marcos)
