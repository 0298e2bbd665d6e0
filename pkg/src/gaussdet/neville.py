"""Gaussian-covariance matrices and stage-by-stage pivot-free elimination.

The matrix under study has entries eta^((i-j)^2) for evenly spaced points
(the common variance factor is carried as metadata, never multiplied in).
Elimination proceeds without pivoting: stage s+1 subtracts, from every entry
with row and column beyond s, the product of its row's and column's stage-s
entries over the stage-s pivot.  Every stage is recorded so the trace can be
compared entry by entry against closed forms.

Matrices are immutable once built; elimination is sequential across stages
but pure, so traces can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exact import EtaPoly, EtaRatFunc

Entry = Union[int, Fraction, EtaRatFunc]


class ZeroPivotError(ArithmeticError):
    """A stage pivot was zero, so pivot-free elimination cannot continue."""

    def __init__(self, stage: int) -> None:
        super().__init__(f"zero pivot at stage {stage}")
        self.stage = stage


@dataclass(frozen=True)
class CovarianceParams:
    """Size and scale of the covariance matrix; eta_value=None means symbolic."""

    n: int
    sigma_z_sq: Fraction = Fraction(1)
    eta_value: Fraction | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        if self.sigma_z_sq <= 0:
            raise ValueError(f"sigma_z_sq must be positive, got {self.sigma_z_sq}")
        if self.eta_value is not None and not 0 < self.eta_value < 1:
            raise ValueError(f"eta_value must lie in (0, 1), got {self.eta_value}")


class SymMatrix:
    """Square matrix of exact entries (rationals or eta rational functions).

    ``entry(i, j)`` is 1-based, matching the row/column conventions of the
    elimination stages.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Entry]]) -> None:
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("a nonempty square matrix is required")
        self._rows = rows

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Entry, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Entry:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexError(f"entry ({i}, {j}) outside 1..{self.size}")
        return self._rows[i - 1][j - 1]

    def is_symmetric(self) -> bool:
        return all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def dump(self) -> str:
        """Entries in canonical text form, one row per line, columns '|'-separated."""
        return "\n".join(" | ".join(str(e) for e in row) for row in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SymMatrix(size={self.size})"


@dataclass(frozen=True)
class EliminationTrace:
    """All stages of one elimination run; stage 1 is the input matrix."""

    stages: tuple[SymMatrix, ...]

    @property
    def n(self) -> int:
        return len(self.stages)

    def stage(self, s: int) -> SymMatrix:
        if not 1 <= s <= self.n:
            raise IndexError(f"stage {s} outside 1..{self.n}")
        return self.stages[s - 1]

    def diagonal(self, s: int) -> Entry:
        """The (s, s) entry at stage s, where it has stabilized."""
        return self.stage(s).entry(s, s)

    def dump(self) -> str:
        """One block per stage, suitable for golden-file comparison."""
        blocks = [f"Stage {s}:\n{m.dump()}" for s, m in enumerate(self.stages, start=1)]
        return "\n\n".join(blocks)


def build_covariance(params: CovarianceParams) -> SymMatrix:
    """The scaled covariance matrix with entry (i, j) = eta^((i-j)^2).

    Symbolic when params.eta_value is None, exact numeric otherwise.  The
    variance scale sigma_z_sq stays in params; the full determinant is
    sigma_z_sq^n times the determinant of the matrix built here.
    """
    n = params.n
    if params.eta_value is None:
        rows = [
            [EtaRatFunc(EtaPoly.monomial((i - j) ** 2)) for j in range(n)]
            for i in range(n)
        ]
    else:
        eta = params.eta_value
        rows = [[eta ** ((i - j) ** 2) for j in range(n)] for i in range(n)]
    return SymMatrix(rows)


def neville_eliminate(v: SymMatrix) -> EliminationTrace:
    """Run pivot-free elimination, recording every stage.

    Stage s+1 copies rows 1..s, zeroes column s below the diagonal, and
    updates every remaining entry by the stage-s rule
    U(s+1,i,j) = U(s,i,j) - U(s,i,s)*U(s,s,j)/U(s,s,s).  A zero pivot is a
    hard error: it falsifies the premise of the method for the input.
    """
    n = v.size
    stages = [v]
    current = [list(row) for row in v.rows]
    for s in range(1, n):
        pivot = current[s - 1][s - 1]
        if pivot == 0:
            raise ZeroPivotError(s)
        zero = pivot - pivot  # additive zero of the entry field
        nxt = [list(row) for row in current]
        for i in range(s, n):
            nxt[i][s - 1] = zero
            row_factor = current[i][s - 1]
            for j in range(s, n):
                nxt[i][j] = current[i][j] - row_factor * current[s - 1][j] / pivot
        stages.append(SymMatrix(nxt))
        current = nxt
    return EliminationTrace(tuple(stages))


def diagonal_product(trace: EliminationTrace) -> Entry:
    """Product of the stabilized stage diagonals: the determinant."""
    product = trace.diagonal(1)
    for s in range(2, trace.n + 1):
        product = product * trace.diagonal(s)
    return product


def brute_force_det(v: SymMatrix, bound: int = 8) -> Entry:
    """Leibniz-sum determinant: exact, O(n!), independent of elimination.

    The factorial cost is capped by ``bound``; raise it explicitly when a
    larger oracle run is intended.
    """
    n = v.size
    if n > bound:
        raise ValueError(f"matrix size {n} exceeds the Leibniz oracle bound {bound}")
    rows = v.rows
    first = rows[0][0]
    total = first - first  # additive zero of the entry field
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        total = total - term if inversions & 1 else total + term
    return total
