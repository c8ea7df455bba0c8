"""Integer partitions: canonical form, conjugation, interlacing and enumeration.

Partitions are stored as weakly decreasing tuples of positive integers with
no trailing zeros, so structural equality is the only equality.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Optional


class Partition(tuple):
    """An immutable integer partition.

    ``Partition([3, 1, 0])`` and ``Partition((3, 1))`` are the same object
    value; trailing zeros are dropped.  Anything else that is not weakly
    decreasing and nonnegative raises ``ValueError``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated part list such as ``"3,1"``; ``""`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a comma-separated list of integers: {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), reading missing parts as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


EMPTY = Partition()


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram: part j counts the rows of length at least j."""
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def partwise_sum(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    """Row-by-row sum of two partitions, padding the shorter one with zeros."""
    lam, mu = tuple(lam), tuple(mu)
    k = max(len(lam), len(mu))
    return Partition(
        (lam[i] if i < len(lam) else 0) + (mu[i] if i < len(mu) else 0) for i in range(k)
    )


def interlaces(nu: Iterable[int], theta: Iterable[int]) -> bool:
    """True iff ``nu_i >= theta_i >= nu_{i+1}`` for every i (missing parts are 0)."""
    nu, theta = tuple(nu), tuple(theta)
    if len(theta) > len(nu):
        return False
    for i, t in enumerate(theta):
        nxt = nu[i + 1] if i + 1 < len(nu) else 0
        if not nu[i] >= t >= nxt:
            return False
    # theta_i = 0 for i >= len(theta) must still be >= nu_{i+1}
    return len(nu) <= len(theta) + 1


def pieri_down(nu: Iterable[int]) -> list[Partition]:
    """All theta with nu interlacing theta, in decreasing lexicographic order."""
    nu = tuple(nu)
    ranges = [
        range(nu[i], (nu[i + 1] if i + 1 < len(nu) else 0) - 1, -1) for i in range(len(nu))
    ]
    return [Partition(t) for t in product(*ranges)]


def pieri_up(theta: Iterable[int], target_size: int) -> list[Partition]:
    """All nu of size ``target_size`` that interlace ``theta``.

    Returns an empty list when ``target_size < |theta|``.
    """
    theta = tuple(theta)
    if target_size < sum(theta):
        return []
    if not theta:
        return [Partition((target_size,))] if target_size else [EMPTY]
    # nu_{i+1} ranges over [theta_{i+1}, theta_i]; nu_1 takes up the rest
    ranges = [
        range(theta[i - 1], (theta[i] if i < len(theta) else 0) - 1, -1)
        for i in range(1, len(theta) + 1)
    ]
    out = []
    for tail in product(*ranges):
        first = target_size - sum(tail)
        if first >= theta[0]:
            out.append(Partition((first,) + tail))
    return out


def complement_in_rectangle(alpha: Iterable[int], d: int, n: int) -> Optional[Partition]:
    """Complement of ``alpha`` inside the rectangle with ``n`` rows of length ``d``.

    Returns ``None`` if alpha does not fit.
    """
    alpha = Partition(alpha)
    if d <= 0 or n <= 0:
        return EMPTY if not alpha else None
    if len(alpha) > n or (alpha and alpha[0] > d):
        return None
    return Partition(d - alpha.part(n - 1 - i) for i in range(n))


def enumerate_partitions(
    m: int,
    max_length: Optional[int] = None,
    min_part: Optional[int] = None,
    max_part: Optional[int] = None,
    distinct: bool = False,
    odd_only: bool = False,
) -> list[Partition]:
    """Partitions of ``m`` subject to the given constraints.

    The order is decreasing lexicographic, e.g. for m=4:
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if m < 0:
        return []
    lo = max(1, min_part or 1)
    hi = m if max_part is None else min(m, max_part)
    limit = m if max_length is None else max_length
    return [
        Partition(p)
        for p in _enumerate(m, hi, lo, limit, bool(distinct), bool(odd_only))
    ]


@lru_cache(maxsize=4096)
def _enumerate(m, hi, lo, limit, distinct, odd_only):
    if m == 0:
        return ((),)
    if limit == 0:
        return ()
    out = []
    for first in range(min(hi, m), lo - 1, -1):
        if odd_only and first % 2 == 0:
            continue
        nxt = first - 1 if distinct else first
        for rest in _enumerate(m - first, nxt, lo, limit - 1, distinct, odd_only):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int) -> list[Partition]:
    return enumerate_partitions(m)


def count_distinct_odd_in_range(m: int, lo: int, hi: int) -> int:
    """Number of partitions of m into distinct odd parts p with lo <= p <= hi."""
    if lo % 2 == 0 or hi % 2 == 0 or lo > hi:
        raise ValueError(f"need odd lo <= hi, got lo={lo}, hi={hi}")
    if m < 0:
        return 0
    ways = [1] + [0] * m
    for p in range(max(lo, 1), hi + 1, 2):
        for s in range(m, p - 1, -1):
            ways[s] += ways[s - p]
    return ways[m]


def self_conjugate_count(m: int) -> int:
    return sum(1 for lam in enumerate_partitions(m) if conjugate(lam) == lam)


def fits_in_rectangle(alpha: Iterable[int], d: int, n: int) -> bool:
    alpha = tuple(alpha)
    return len(alpha) <= n and (not alpha or alpha[0] <= d)
