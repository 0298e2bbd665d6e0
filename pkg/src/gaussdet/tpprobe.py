"""Exhaustive minor positivity probe for the covariance matrix at rational eta.

Strict total positivity asks every minor -- every square submatrix
determinant, not just the principal ones -- to be positive.  This module
evaluates all of them exactly at a rational eta in (0, 1), so there is no
floating-point ambiguity near zero: a nonpositive minor here would be a
genuine counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_BOUND = 8

# Leibniz is used up to this minor size, fraction-free elimination above it.
_LEIBNIZ_MAX = 6

_METHODS = ("auto", "leibniz", "bareiss")


@dataclass(frozen=True)
class MinorIndex:
    """Row and column index sets (1-based, strictly increasing, equal length)."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if not rows or len(rows) != len(cols):
            raise ValueError("rows and cols must be nonempty and of equal length")
        for name, idx in (("rows", rows), ("cols", cols)):
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"{name} must be strictly increasing, got {idx}")
            if idx[0] < 1:
                raise ValueError(f"{name} must be >= 1, got {idx}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def validate_for(self, n: int) -> None:
        if self.rows[-1] > n or self.cols[-1] > n:
            raise ValueError(f"index sets {self} exceed matrix size {n}")

    def __str__(self) -> str:
        return f"rows={list(self.rows)}, cols={list(self.cols)}"


@dataclass(frozen=True)
class TpReport:
    """Result of evaluating every minor of one matrix at one eta."""

    n: int
    eta_value: Fraction
    minors_checked: int
    min_minor: tuple[MinorIndex, Fraction]
    all_positive: bool


def _validate_eta(eta_value) -> Fraction:
    eta = Fraction(eta_value)
    if not 0 < eta < 1:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    return eta


def _det_leibniz(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    k = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(k)):
        inversions = sum(
            1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b]
        )
        term = rows[0][perm[0]]
        for i in range(1, k):
            term *= rows[i][perm[i]]
        total = total - term if inversions & 1 else total + term
    return total


def _det_bareiss(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free elimination; every division is exact."""
    m = [list(r) for r in rows]
    k = len(m)
    sign = 1
    prev = Fraction(1)
    for col in range(k - 1):
        if m[col][col] == 0:
            for swap in range(col + 1, k):
                if m[swap][col] != 0:
                    m[col], m[swap] = m[swap], m[col]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[col][col]
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[col][j]) / prev
            m[i][col] = Fraction(0)
        prev = pivot
    return sign * m[-1][-1]


def _submatrix(eta: Fraction, rows: Sequence[int], cols: Sequence[int]):
    return [[eta ** ((i - j) ** 2) for j in cols] for i in rows]


def _det(sub, method: str) -> Fraction:
    if method == "auto":
        method = "leibniz" if len(sub) <= _LEIBNIZ_MAX else "bareiss"
    if method == "leibniz":
        return _det_leibniz(sub)
    return _det_bareiss(sub)


def minor_value(
    n: int, eta_value, idx: MinorIndex, method: str = "auto"
) -> Fraction:
    """Exact determinant of the selected submatrix at the given eta."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")
    eta = _validate_eta(eta_value)
    idx.validate_for(n)
    return _det(_submatrix(eta, idx.rows, idx.cols), method)


def all_minors_positive(n: int, eta_value, bound: int = DEFAULT_BOUND) -> TpReport:
    """Evaluate every square minor exactly and report positivity and the minimum.

    The minimum's ties are broken by lexicographic (rows, cols) order, so the
    report is independent of evaluation schedule.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the configured bound {bound}")
    eta = _validate_eta(eta_value)
    indices = range(1, n + 1)
    checked = 0
    all_positive = True
    best_key: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    best_value: Fraction | None = None
    for k in range(1, n + 1):
        for rows in itertools.combinations(indices, k):
            for cols in itertools.combinations(indices, k):
                value = _det(_submatrix(eta, rows, cols), "auto")
                checked += 1
                if value <= 0:
                    all_positive = False
                key = (rows, cols)
                if (
                    best_value is None
                    or value < best_value
                    or (value == best_value and key < best_key)
                ):
                    best_value = value
                    best_key = key
    assert best_key is not None and best_value is not None
    return TpReport(
        n=n,
        eta_value=eta,
        minors_checked=checked,
        min_minor=(MinorIndex(*best_key), best_value),
        all_positive=all_positive,
    )
