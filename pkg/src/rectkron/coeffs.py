"""Kronecker and Littlewood-Richardson coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import symchar
from .errors import ConsistencyError, ResourceLimitError, SizeMismatchError
from .partitions import Partition, complement_in_rectangle, enumerate_partitions
from .symchar import character_table, dim_irrep


@dataclass(frozen=True)
class KroneckerQuery:
    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, Partition(getattr(self, name)))
        if not self.lam.size == self.mu.size == self.nu.size:
            raise SizeMismatchError(
                f"Kronecker arguments must have equal sizes: {self.lam}, {self.mu}, {self.nu}"
            )


@dataclass(frozen=True)
class RectangularQuery:
    """k_rho(d, n): the coefficient of [(dn-|rho|, rho)] in [(d^n)] x [(d^n)]."""

    rho: Partition
    d: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rho", Partition(self.rho))
        if self.d <= 0 or self.n <= 0:
            raise ValueError("d and n must be positive")
        if self.first_row < self.rho.part(0):
            raise ValueError(
                f"first row too short: (dn-|rho|, rho) = ({self.first_row}, {self.rho}) "
                "is not a partition"
            )

    @property
    def first_row(self) -> int:
        return self.d * self.n - self.rho.size

    @property
    def lam(self) -> Partition:
        return Partition((self.first_row,) + tuple(self.rho))

    @property
    def rectangle(self) -> Partition:
        return Partition((self.d,) * self.n)


@dataclass(frozen=True)
class CoefficientResult:
    value: int
    method: str


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what}: {num}/{den} is not an integer")
    if q < 0:
        raise ConsistencyError(f"{what}: negative multiplicity {q}")
    return q


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of [nu] in [lam] x [mu], from class-weighted character sums."""
    q = KroneckerQuery(lam, mu, nu)
    m = q.lam.size
    table = character_table(m)
    total = sum(
        s * a * b * c
        for s, a, b, c in zip(table.class_sizes, table.row(q.lam), table.row(q.mu), table.row(q.nu))
    )
    return _exact_div(total, factorial(m), f"k({q.lam};{q.mu};{q.nu})")


def kronecker_result(lam, mu, nu) -> CoefficientResult:
    return CoefficientResult(kronecker(lam, mu, nu), "character-sum")


def tensor_square_decomposition(lam: Sequence[int]) -> dict[Partition, int]:
    """nu -> k(lam, lam, nu) for every nu of the same size."""
    lam = Partition(lam)
    m = lam.size
    table = character_table(m)
    fact = factorial(m)
    weights = [s * x * x for s, x in zip(table.class_sizes, table.row(lam))]
    out = {}
    for nu, row in zip(table.irreps, table.values):
        out[nu] = _exact_div(sum(w * c for w, c in zip(weights, row)), fact, f"[{lam}]^2 at {nu}")
    if sum(k * dim_irrep(nu) for nu, k in out.items()) != dim_irrep(lam) ** 2:
        raise ConsistencyError(f"tensor square of [{lam}] has the wrong dimension")
    return out


def rectangular_kron(rho: Sequence[int], d: int, n: int) -> int:
    """k_rho(d, n) by a direct character sum over S_{dn}.

    Raises ``ValueError`` if (dn - |rho|, rho) is not a partition.
    """
    q = RectangularQuery(rho, d, n)
    if d * n > symchar.settings.max_table_m:
        raise ResourceLimitError(
            f"k_rho({d},{n}) needs S_{d * n}, above the ceiling {symchar.settings.max_table_m}"
        )
    return _rect_cached(q.rho, d, n)


@lru_cache(maxsize=None)
def _rect_cached(rho: Partition, d: int, n: int) -> int:
    q = RectangularQuery(rho, d, n)
    m = d * n
    table = character_table(m)
    rect_row = table.row(q.rectangle)
    total = sum(s * a * r * r for s, a, r in zip(table.class_sizes, table.row(q.lam), rect_row))
    return _exact_div(total, factorial(m), f"k_{rho}({d},{n})")


# -- Littlewood-Richardson -----------------------------------------------------


def _contains(outer: tuple, inner: tuple) -> bool:
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


def lr(lam: Sequence[int], alpha: Sequence[int], beta: Sequence[int]) -> int:
    """c^lam_{alpha,beta}: number of LR tableaux of shape lam/alpha and content beta.

    Tableaux are filled row by row, each row right to left, so the filling
    order is the reading word; the lattice condition and column strictness
    prune as we go.
    """
    lam, alpha, beta = Partition(lam), Partition(alpha), Partition(beta)
    if alpha.size + beta.size != lam.size or not _contains(lam, alpha):
        return 0
    if not _contains(lam, beta):
        return 0
    return _lr_count(tuple(lam), tuple(alpha), tuple(beta))


@lru_cache(maxsize=None)
def _lr_count(lam: tuple, alpha: tuple, beta: tuple) -> int:
    cells = []  # (row, col) in reading order
    for r, row_len in enumerate(lam):
        start = alpha[r] if r < len(alpha) else 0
        for c in range(row_len - 1, start - 1, -1):
            cells.append((r, c))
    filling: dict[tuple, int] = {}
    counts = [0] * (len(beta) + 1)
    k = len(beta)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        # weakly increasing along the row: cell to the right already filled
        hi = filling.get((r, c + 1), k)
        # strictly increasing down the column
        lo = filling.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_rectangle(d: int, n: int, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """c^{(d^n)}_{alpha,beta}: 1 exactly when alpha and beta are complementary in d x n."""
    comp = complement_in_rectangle(alpha, d, n)
    return int(comp is not None and comp == Partition(beta))


def partitions_in_rectangle(size: int, d: int, n: int) -> list[Partition]:
    return enumerate_partitions(size, max_length=n, max_part=d)
