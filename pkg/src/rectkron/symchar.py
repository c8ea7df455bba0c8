"""Characters of the symmetric group.

Character values come from the Murnaghan-Nakayama rule, worked on beta-sets
(first-column hook lengths): removing a border strip of length r is moving a
bead from position b to the free position b - r, with sign given by the
parity of the beads jumped over.

Full tables are memoized in-process and persisted as JSON, one file per m.
"""
from __future__ import annotations

import json
import logging
import os
import threading
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Optional, Sequence

from filelock import FileLock
from platformdirs import user_cache_dir

from .errors import ConsistencyError, ResourceLimitError, SizeMismatchError
from .partitions import Partition, conjugate, enumerate_partitions

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "RECTKRON_CACHE_DIR"
DEFAULT_MAX_TABLE_M = 30


@dataclass
class Settings:
    """Process-wide knobs for table construction and persistence.

    ``cache_dir=None`` means "resolve from the environment / platform default";
    set ``persist=False`` to keep tables in memory only.
    """

    cache_dir: Optional[Path] = None
    persist: bool = True
    max_table_m: int = DEFAULT_MAX_TABLE_M
    workers: int = 1

    def resolved_cache_dir(self) -> Path:
        if self.cache_dir is not None:
            return Path(self.cache_dir)
        env = os.environ.get(CACHE_ENV_VAR)
        if env:
            return Path(env)
        return Path(user_cache_dir("rectkron"))


settings = Settings()


def configure(**kwargs) -> Settings:
    """Update the module settings; unknown keys raise ``TypeError``."""
    for key, value in kwargs.items():
        if not hasattr(settings, key):
            raise TypeError(f"unknown setting {key!r}")
        setattr(settings, key, value)
    if settings.max_table_m <= 0 or settings.workers <= 0:
        raise ValueError("ceilings and worker count must be positive")
    return settings


def z_value(mu: Sequence[int]) -> int:
    """Centralizer order of a permutation of cycle type mu."""
    z = 1
    counts: dict[int, int] = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    for part, mult in counts.items():
        z *= part**mult * factorial(mult)
    return z


def class_size(mu: Sequence[int]) -> int:
    """Number of permutations in S_|mu| with cycle type mu."""
    m = sum(mu)
    size, rem = divmod(factorial(m), z_value(mu))
    if rem:
        raise ConsistencyError(f"z({tuple(mu)}) does not divide {m}!")
    return size


@dataclass(frozen=True)
class ConjClass:
    cycle_type: Partition
    class_size: int


# -- Murnaghan-Nakayama ------------------------------------------------------


def _to_beta(shape: tuple) -> tuple:
    k = len(shape)
    return tuple(shape[i] + (k - 1 - i) for i in range(k))


def _from_beta(beta: Sequence[int]) -> tuple:
    # beta sorted decreasing; drop the zero parts that appear as trailing entries
    k = len(beta)
    parts = [beta[i] - (k - 1 - i) for i in range(k)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _strip_removals(shape: tuple, r: int):
    """Yield (smaller shape, sign) for every border strip of length r in shape."""
    beta = _to_beta(shape)
    occupied = set(beta)
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        # beads strictly between target and b; beta is decreasing
        jumped = sum(1 for c in beta[idx + 1:] if c > target)
        new_beta = sorted(beta[:idx] + beta[idx + 1:] + (target,), reverse=True)
        yield _from_beta(new_beta), (-1 if jumped % 2 else 1)


@lru_cache(maxsize=None)
def _mn(shape: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not shape else 0
    total = 0
    rest = mu[1:]
    for smaller, sign in _strip_removals(shape, mu[0]):
        total += sign * _mn(smaller, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lam evaluated on the class of cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(
            f"shape/class size disagreement: |{lam}|={lam.size}, |{mu}|={mu.size}"
        )
    return _mn(tuple(lam), tuple(mu))


def hook_length_dimension(lam: Sequence[int]) -> int:
    lam = Partition(lam)
    cols = conjugate(lam)
    num = factorial(lam.size)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    dim, rem = divmod(num, hooks)
    if rem:
        raise ConsistencyError(f"hook product does not divide {lam.size}!")
    return dim


def dim_irrep(lam: Sequence[int]) -> int:
    """Dimension of [lam], cross-checked between the character and the hook formula."""
    lam = Partition(lam)
    via_char = _mn(tuple(lam), (1,) * lam.size)
    via_hooks = hook_length_dimension(lam)
    if via_char != via_hooks:
        raise ConsistencyError(f"dim[{lam}]: character gives {via_char}, hooks give {via_hooks}")
    return via_char


# -- tables ------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    """values[i][j] = chi_{irreps[i]}(classes[j]).

    Irreps are in decreasing lexicographic order, classes in increasing
    lexicographic order (the identity class first).
    """

    m: int
    irreps: tuple
    classes: tuple
    values: tuple
    _irrep_index: dict = field(default_factory=dict, compare=False, repr=False)
    _class_index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._irrep_index.update({lam: i for i, lam in enumerate(self.irreps)})
        self._class_index.update({c.cycle_type: j for j, c in enumerate(self.classes)})

    @property
    def class_sizes(self) -> tuple:
        return tuple(c.class_size for c in self.classes)

    def row(self, lam: Sequence[int]) -> tuple:
        try:
            return self.values[self._irrep_index[Partition(lam)]]
        except KeyError:
            raise SizeMismatchError(f"{tuple(lam)} is not a partition of {self.m}") from None

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        try:
            j = self._class_index[Partition(mu)]
        except KeyError:
            raise SizeMismatchError(f"{tuple(mu)} is not a partition of {self.m}") from None
        return self.row(lam)[j]


def _column(args):
    m, mu = args
    return [_mn(tuple(lam), mu) for lam in enumerate_partitions(m)]


def build_character_table(m: int, workers: int = 1) -> CharacterTable:
    """Compute the table from scratch, column by column."""
    irreps = tuple(enumerate_partitions(m))
    class_types = tuple(reversed(irreps))
    jobs = [(m, tuple(mu)) for mu in class_types]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(_column, jobs))
    else:
        columns = [_column(job) for job in jobs]
    values = tuple(tuple(col[i] for col in columns) for i in range(len(irreps)))
    classes = tuple(ConjClass(mu, class_size(mu)) for mu in class_types)
    return CharacterTable(m, irreps, classes, values)


def check_table(table: CharacterTable) -> None:
    """Cheap O(p^2) sanity checks; raises ``ConsistencyError``.

    Every row has norm m!, every non-trivial row is orthogonal to the
    trivial row, and the identity column matches the hook-length formula.
    """
    m = table.m
    expected = tuple(enumerate_partitions(m))
    if table.irreps != expected or tuple(c.cycle_type for c in table.classes) != tuple(
        reversed(expected)
    ):
        raise ConsistencyError(f"table for m={m} has wrong index sets")
    sizes = table.class_sizes
    if sum(sizes) != factorial(m) or any(s != class_size(c.cycle_type) for s, c in zip(sizes, table.classes)):
        raise ConsistencyError(f"table for m={m} has wrong class sizes")
    fact = factorial(m)
    trivial = table.values[0]
    for lam, row in zip(table.irreps, table.values):
        if len(row) != len(sizes):
            raise ConsistencyError(f"row {lam} has wrong length")
        if sum(s * x * x for s, x in zip(sizes, row)) != fact:
            raise ConsistencyError(f"row {lam} does not have norm {m}!")
        if lam != table.irreps[0] and sum(s * x * t for s, x, t in zip(sizes, row, trivial)):
            raise ConsistencyError(f"row {lam} is not orthogonal to the trivial row")
        if row[0] != hook_length_dimension(lam):
            raise ConsistencyError(f"row {lam} has wrong degree")


# -- persistence ---------------------------------------------------------------


def table_to_json(table: CharacterTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "m": table.m,
        "irreps": [list(lam) for lam in table.irreps],
        "classes": [
            {"cycle_type": list(c.cycle_type), "class_size": str(c.class_size)}
            for c in table.classes
        ],
        "values": [[str(v) for v in row] for row in table.values],
    }


def table_from_json(data: dict) -> CharacterTable:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    irreps = tuple(Partition(p) for p in data["irreps"])
    classes = tuple(
        ConjClass(Partition(c["cycle_type"]), int(c["class_size"])) for c in data["classes"]
    )
    values = tuple(tuple(int(v) for v in row) for row in data["values"])
    return CharacterTable(int(data["m"]), irreps, classes, values)


def cache_path(m: int, cache_dir: Optional[Path] = None) -> Path:
    base = Path(cache_dir) if cache_dir is not None else settings.resolved_cache_dir()
    return base / f"chartable-v{SCHEMA_VERSION}-m{m}.json"


def _load(path: Path, m: int) -> Optional[CharacterTable]:
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            table = table_from_json(json.load(fh))
        if table.m != m:
            raise ValueError(f"file holds m={table.m}")
        check_table(table)
    except (OSError, ValueError, KeyError, TypeError, ConsistencyError) as exc:
        warnings.warn(f"discarding corrupt character-table cache {path}: {exc}", stacklevel=3)
        return None
    return table


def _store(path: Path, table: CharacterTable) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    with open(tmp, "w") as fh:
        json.dump(table_to_json(table), fh)
    os.replace(tmp, path)


_tables: dict[int, CharacterTable] = {}
_locks: dict[int, threading.Lock] = {}
_locks_guard = threading.Lock()


def _lock_for(m: int) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(m, threading.Lock())


def character_table(m: int) -> CharacterTable:
    """Character table of S_m, from memory, the disk cache, or a fresh build.

    At most one builder per m runs at a time (thread lock in-process, file
    lock across processes); waiting callers reuse the finished table.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > settings.max_table_m:
        raise ResourceLimitError(
            f"character table for m={m} exceeds the ceiling {settings.max_table_m}"
        )
    table = _tables.get(m)
    if table is not None:
        return table
    with _lock_for(m):
        table = _tables.get(m)
        if table is not None:
            return table
        if settings.persist:
            path = cache_path(m)
            path.parent.mkdir(parents=True, exist_ok=True)
            with FileLock(str(path) + ".lock"):
                table = _load(path, m)
                if table is None:
                    log.info("building character table for m=%d", m)
                    table = build_character_table(m, settings.workers)
                    check_table(table)
                    _store(path, table)
        else:
            table = build_character_table(m, settings.workers)
            check_table(table)
        _tables[m] = table
        return table


def clear_memory() -> None:
    """Forget in-process tables (the disk cache is untouched)."""
    _tables.clear()


def cache_status(cache_dir: Optional[Path] = None) -> list[dict]:
    base = Path(cache_dir) if cache_dir is not None else settings.resolved_cache_dir()
    out = []
    if not base.is_dir():
        return out
    for path in sorted(base.glob(f"chartable-v{SCHEMA_VERSION}-m*.json")):
        m = int(path.stem.rsplit("-m", 1)[1])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ok = _load(path, m) is not None
        out.append({"m": m, "path": str(path), "bytes": path.stat().st_size, "valid": ok})
    return sorted(out, key=lambda r: r["m"])


def clear_cache(cache_dir: Optional[Path] = None) -> int:
    """Delete persisted tables; returns the number of files removed."""
    base = Path(cache_dir) if cache_dir is not None else settings.resolved_cache_dir()
    removed = 0
    if base.is_dir():
        for path in base.glob("chartable-v*-m*.json*"):
            path.unlink()
            removed += 1
    clear_memory()
    return removed
