"""Fermatean fuzzy number algebra.

An FFN is a pair (mu, nu) of membership and non-membership degrees with
``mu**3 + nu**3 <= 1``.  This module provides the full calculus used by the
decision pipeline: lattice meet/join, the algebraic sum/product and their
scalar forms, score functions, linguistic scales, and the weighted
averaging/geometric aggregation operators.

All values are immutable and every operation is a pure function, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CubeSumError,
    DomainError,
    EmptyInputError,
    LengthMismatchError,
    UnknownTermError,
)

#: Absolute tolerance for construction clamping and feasibility checks.
EPS_TOL = 1e-9


def _cbrt(x: float) -> float:
    """Real cube root of a non-negative quantity, tolerant of float dust."""
    return 0.0 if x <= 0.0 else x ** (1.0 / 3.0)


def _one_minus_weighted_residual(cubes: Iterable[float], weights: Iterable[float]) -> float:
    """1 - prod (1 - c_i)^w_i, computed in log space.

    The naive form loses all precision when some c_i is tiny (1 - c_i rounds
    to 1); log1p/expm1 keeps full relative accuracy across the whole range.
    Zero-weight factors contribute 1 (the 0^0 = 1 convention).
    """
    log_sum = 0.0
    for c, w in zip(cubes, weights):
        if w == 0.0:
            continue
        if c >= 1.0:
            return 1.0
        log_sum += w * math.log1p(-c)
    return -math.expm1(log_sum)


def _clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else (1.0 if x > 1.0 else x)


@total_ordering
@dataclass(frozen=True)
class FFN:
    """A Fermatean fuzzy number.

    Construction validates both components against [0, 1] and the cube-sum
    bound.  Values within ``EPS_TOL`` of feasibility are clamped onto the
    exact boundary; anything further out raises.

    Ordering is total: normalized score first, then accuracy (higher wins),
    then (mu, -nu) lexicographically.
    """

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu, nu = float(self.mu), float(self.nu)
        if not (math.isfinite(mu) and math.isfinite(nu)):
            raise DomainError(f"FFN components must be finite, got ({self.mu!r}, {self.nu!r})")
        if mu < -EPS_TOL or mu > 1.0 + EPS_TOL or nu < -EPS_TOL or nu > 1.0 + EPS_TOL:
            raise DomainError(f"FFN components must lie in [0, 1], got ({mu}, {nu})")
        mu, nu = _clamp01(mu), _clamp01(nu)
        cube_sum = mu**3 + nu**3
        if cube_sum > 1.0 + EPS_TOL:
            raise CubeSumError(f"mu^3 + nu^3 = {cube_sum:.12g} exceeds 1 for ({mu}, {nu})")
        if cube_sum > 1.0:
            # Rescale both components onto the boundary surface.
            shrink = cube_sum ** (1.0 / 3.0)
            mu, nu = mu / shrink, nu / shrink
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    # -- scalarizations -------------------------------------------------

    @property
    def score(self) -> float:
        """(mu^3 - nu^3) / 2, in [-0.5, 0.5]."""
        return (self.mu**3 - self.nu**3) / 2.0

    @property
    def accuracy(self) -> float:
        """(mu^3 + nu^3) / 2, in [0, 0.5]."""
        return (self.mu**3 + self.nu**3) / 2.0

    @property
    def normalized_score(self) -> float:
        """(score + 1) / 2, in [0.25, 0.75]."""
        return (self.score + 1.0) / 2.0

    @property
    def hesitation(self) -> float:
        """Residual degree h with h^3 + mu^3 + nu^3 = 1."""
        return _cbrt(1.0 - self.mu**3 - self.nu**3)

    def score_triple(self) -> "ScoreTriple":
        return ScoreTriple(self.score, self.accuracy, self.normalized_score)

    # -- unary / binary algebra -----------------------------------------

    def complement(self) -> "FFN":
        """Swap membership and non-membership."""
        return FFN(self.nu, self.mu)

    def __add__(self, other: "FFN") -> "FFN":
        if not isinstance(other, FFN):
            return NotImplemented
        mu = _cbrt(self.mu**3 + other.mu**3 - self.mu**3 * other.mu**3)
        return FFN(mu, self.nu * other.nu)

    def __mul__(self, other: "FFN") -> "FFN":
        if not isinstance(other, FFN):
            return NotImplemented
        nu = _cbrt(self.nu**3 + other.nu**3 - self.nu**3 * other.nu**3)
        return FFN(self.mu * other.mu, nu)

    def __rmul__(self, alpha: float) -> "FFN":
        if isinstance(alpha, (int, float)):
            return scale(alpha, self)
        return NotImplemented

    def __pow__(self, alpha: float) -> "FFN":
        if isinstance(alpha, (int, float)):
            return power(self, alpha)
        return NotImplemented

    # -- ordering --------------------------------------------------------

    @property
    def _order_key(self) -> tuple[float, float, float, float]:
        return (self.normalized_score, self.accuracy, self.mu, -self.nu)

    def __lt__(self, other: "FFN") -> bool:
        if not isinstance(other, FFN):
            return NotImplemented
        return self._order_key < other._order_key

    def __repr__(self) -> str:
        return f"FFN({self.mu:.6g}, {self.nu:.6g})"


@dataclass(frozen=True)
class ScoreTriple:
    """Score, accuracy, and normalized score of one FFN."""

    score: float
    accuracy: float
    normalized_score: float


def make_ffn(mu: float, nu: float) -> FFN:
    """Validating constructor; alias for ``FFN(mu, nu)``."""
    return FFN(mu, nu)


def hesitation(f: FFN) -> float:
    return f.hesitation


def complement(f: FFN) -> FFN:
    return f.complement()


def ffn_add(a: FFN, b: FFN) -> FFN:
    """Algebraic sum: identity (0,1), absorbing element (1,0)."""
    return a + b


def ffn_mul(a: FFN, b: FFN) -> FFN:
    """Algebraic product: identity (1,0), absorbing element (0,1)."""
    return a * b


def scale(alpha: float, f: FFN) -> FFN:
    """Scalar multiple: ((1-(1-mu^3)^alpha)^(1/3), nu^alpha)."""
    if alpha < 0:
        raise DomainError(f"scalar must be non-negative, got {alpha}")
    if alpha == 1.0:
        return f
    mu = _cbrt(_one_minus_weighted_residual((f.mu**3,), (alpha,)))
    return FFN(mu, f.nu**alpha)


def power(f: FFN, alpha: float) -> FFN:
    """Scalar exponent, the complement-dual of :func:`scale`."""
    if alpha < 0:
        raise DomainError(f"exponent must be non-negative, got {alpha}")
    if alpha == 1.0:
        return f
    nu = _cbrt(_one_minus_weighted_residual((f.nu**3,), (alpha,)))
    return FFN(f.mu**alpha, nu)


def meet(a: FFN, b: FFN) -> FFN:
    return FFN(min(a.mu, b.mu), max(a.nu, b.nu))


def join(a: FFN, b: FFN) -> FFN:
    return FFN(max(a.mu, b.mu), min(a.nu, b.nu))


def lattice(a: FFN, b: FFN) -> tuple[FFN, FFN]:
    """(meet, join) of two FFNs under the componentwise lattice order."""
    return meet(a, b), join(a, b)


class WeightVector(tuple):
    """Non-negative weights summing to 1 (within 1e-9).

    Behaves as a plain tuple of floats; validation happens once at
    construction.
    """

    def __new__(cls, values: Iterable[float]) -> "WeightVector":
        vals = tuple(float(v) for v in values)
        if not vals:
            raise EmptyInputError("weight vector must contain at least one weight")
        cleaned = []
        for i, v in enumerate(vals):
            if not math.isfinite(v):
                raise DomainError(f"weight[{i}] is not finite: {v!r}")
            if v < -EPS_TOL:
                raise DomainError(f"weight[{i}] is negative: {v}")
            cleaned.append(max(v, 0.0))
        total = sum(cleaned)
        if abs(total - 1.0) > EPS_TOL:
            raise DomainError(f"weights must sum to 1, got {total:.12g}")
        return super().__new__(cls, cleaned)

    @classmethod
    def normalized(cls, values: Iterable[float]) -> "WeightVector":
        """Scale a non-negative vector so it sums to 1."""
        vals = [float(v) for v in values]
        total = sum(vals)
        if total <= 0:
            raise DomainError("cannot normalize a vector with non-positive sum")
        return cls(v / total for v in vals)

    @classmethod
    def uniform(cls, n: int) -> "WeightVector":
        if n < 1:
            raise EmptyInputError("need at least one weight")
        return cls([1.0 / n] * n)


class LinguisticScale:
    """Ordered mapping from term labels to FFNs."""

    def __init__(self, entries: Mapping[str, FFN] | Iterable[tuple[str, FFN]]):
        items = list(entries.items()) if isinstance(entries, Mapping) else list(entries)
        if not items:
            raise EmptyInputError("a linguistic scale needs at least one term")
        self._entries: dict[str, FFN] = {}
        for label, value in items:
            if label in self._entries:
                raise DomainError(f"duplicate scale term {label!r}")
            if not isinstance(value, FFN):
                value = FFN(*value)
            self._entries[str(label)] = value

    def __getitem__(self, term: str) -> FFN:
        try:
            return self._entries[term]
        except KeyError:
            raise UnknownTermError(term, self._entries) from None

    def __contains__(self, term: str) -> bool:
        return term in self._entries

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinguisticScale):
            return NotImplemented
        return self._entries == other._entries

    @property
    def terms(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def items(self) -> Iterable[tuple[str, FFN]]:
        return self._entries.items()

    def __repr__(self) -> str:
        body = ", ".join(f"{t}: ({f.mu:g}, {f.nu:g})" for t, f in self._entries.items())
        return f"LinguisticScale({body})"


#: The seven-term importance scale used throughout the built-in case.
DEFAULT_SCALE = LinguisticScale(
    [
        ("AI", FFN(1.00, 0.00)),
        ("VI", FFN(0.85, 0.25)),
        ("I", FFN(0.70, 0.40)),
        ("M", FFN(0.50, 0.50)),
        ("L", FFN(0.40, 0.70)),
        ("VL", FFN(0.25, 0.85)),
        ("U", FFN(0.00, 1.00)),
    ]
)


def from_linguistic(term: str, scale_: LinguisticScale = DEFAULT_SCALE) -> FFN:
    """Resolve a term label against a scale."""
    return scale_[term]


def _check_aggregation_args(items: Sequence[FFN], weights: Sequence[float]) -> None:
    if len(items) == 0:
        raise EmptyInputError("cannot aggregate an empty list of FFNs")
    if len(items) != len(weights):
        raise LengthMismatchError(f"{len(items)} items vs {len(weights)} weights")


def ffwa(items: Sequence[FFN], weights: Sequence[float]) -> FFN:
    """Weighted averaging aggregation.

    mu = (1 - prod (1-mu_i^3)^w_i)^(1/3),  nu = prod nu_i^w_i.
    Idempotent on constant inputs; (1,0) among the items absorbs.
    """
    _check_aggregation_args(items, weights)
    mu3 = _one_minus_weighted_residual((f.mu**3 for f in items), weights)
    nu_prod = 1.0
    for f, w in zip(items, weights):
        nu_prod *= f.nu**w
    return FFN(_cbrt(mu3), nu_prod)


def ffwg(items: Sequence[FFN], weights: Sequence[float]) -> FFN:
    """Weighted geometric aggregation, the complement-dual of :func:`ffwa`."""
    _check_aggregation_args(items, weights)
    nu3 = _one_minus_weighted_residual((f.nu**3 for f in items), weights)
    mu_prod = 1.0
    for f, w in zip(items, weights):
        mu_prod *= f.mu**w
    return FFN(mu_prod, _cbrt(nu3))
