"""Instance checks of the identities around rectangular Kronecker coefficients.

Each check evaluates both sides through different code paths and returns a
``VerificationReport``; ``run_suite`` sweeps them deterministically.
"""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Iterable, Sequence, Union

from .coeffs import kronecker, lr, lr_rectangle, rectangular_kron
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    partwise_sum,
    pieri_down,
    pieri_up,
    self_conjugate_count,
)
from . import stable
from .stable import (
    PAPER_DERANGEMENTS,
    PAPER_TABLE,
    brute_force_derangements,
    derangement_count,
    fpf_multiplicity,
    is_known_erratum,
    n2_closed_form,
    n2_closed_form_as_printed,
    orbit_count,
    sl_invariant_dim,
    stable_sign,
    stable_trivial,
    stable_table_row,
)
from .symchar import character_table, dim_irrep

log = logging.getLogger(__name__)

Value = Union[int, list]


@dataclass
class VerificationReport:
    identity_name: str
    instance: dict
    lhs: Value
    rhs: Value
    notes: str = ""
    erratum: bool = False
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.lhs == self.rhs

    @property
    def failed_hard(self) -> bool:
        """A failure that is not an acknowledged erratum of the printed table."""
        return not self.passed and not self.erratum

    def sort_key(self):
        return (self.identity_name, json.dumps(self.instance, sort_keys=True))

    def to_json(self) -> dict:
        def enc(v):
            return [str(x) for x in v] if isinstance(v, list) else str(v)

        return {
            "identity_name": self.identity_name,
            "instance": self.instance,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "passed": self.passed,
            "erratum": self.erratum,
            "notes": self.notes,
        }


def _p(lam) -> str:
    return str(Partition(lam))


def _rect(d: int, n: int) -> Partition:
    return Partition((d,) * n)


def _rejected(name: str, instance: dict, why: str) -> VerificationReport:
    # a rejected instance is reported as a failure carrying the reason
    return VerificationReport(name, instance, "rejected", "admissible", notes=why)


# -- the three identities ------------------------------------------------------


def check_e3(theta: Sequence[int], d: int, n: int) -> VerificationReport:
    """Sum of k(R, R, nu) over nu interlacing theta vs. sum of k(alpha, alpha, theta) over alpha in R."""
    theta = Partition(theta)
    inst = {"theta": _p(theta), "d": d, "n": n}
    if d * n < theta.size:
        return _rejected("e3", inst, "dn < |theta|")
    rect = _rect(d, n)
    lhs = sum(kronecker(rect, rect, nu) for nu in pieri_up(theta, d * n))
    rhs = sum(
        kronecker(alpha, alpha, theta)
        for alpha in enumerate_partitions(theta.size, max_length=n, max_part=d)
    )
    return VerificationReport("e3", inst, lhs, rhs)


def check_e4(theta: Sequence[int], d: int, n: int) -> VerificationReport:
    """As e3, with the right side expanded through general LR coefficients of the rectangle."""
    theta = Partition(theta)
    inst = {"theta": _p(theta), "d": d, "n": n}
    if d * n < theta.size:
        return _rejected("e4", inst, "dn < |theta|")
    rect = _rect(d, n)
    lhs = sum(kronecker(rect, rect, nu) for nu in pieri_up(theta, d * n))
    small = enumerate_partitions(theta.size)
    rhs = 0
    for beta in enumerate_partitions(d * n - theta.size):
        left = [(a, lr(rect, a, beta)) for a in small]
        left = [(a, c) for a, c in left if c]
        if not left:
            continue
        right = [(r, lr(rect, r, beta)) for r in small]
        for alpha, c1 in left:
            for rho, c2 in right:
                if c2:
                    rhs += c1 * kronecker(alpha, rho, theta) * c2
    return VerificationReport("e4", inst, lhs, rhs, notes="RHS uses tableau-counting LR")


def check_e5(theta: Sequence[int], d: int, n: int) -> VerificationReport:
    """Sum of k_rho(d, n) over theta interlacing rho vs. sum of k(alpha, alpha, theta) with at most n rows.

    Terms whose (dn - |rho|, rho) does not interlace theta are dropped,
    matching the range of the e3 left side.
    """
    theta = Partition(theta)
    inst = {"theta": _p(theta), "d": d, "n": n}
    if theta.size > d:
        return _rejected("e5", inst, "requires |theta| <= d")
    lhs = 0
    for rho in pieri_down(theta):
        if d * n - rho.size >= theta.part(0):
            lhs += rectangular_kron(rho, d, n)
    rhs = sum(
        kronecker(alpha, alpha, theta)
        for alpha in enumerate_partitions(theta.size, max_length=n)
    )
    return VerificationReport("e5", inst, lhs, rhs, notes="RHS bound: length(alpha) <= n")


# -- monotonicity and stabilization ----------------------------------------------


def _kron_or_zero(rho: Partition, d: int, n: int) -> int:
    if d * n - rho.size < rho.part(0):
        return 0
    return rectangular_kron(rho, d, n)


def stabilization_threshold(rho: Sequence[int]) -> int:
    """Smallest d with 2d >= |rho| + rho_1."""
    rho = Partition(rho)
    return -(-(rho.size + rho.part(0)) // 2)


def check_stabilization(rho: Sequence[int], n: int, d_max: int) -> VerificationReport:
    """k_rho(d, n) for valid d <= d_max: non-decreasing, and equal to the sl_n invariant
    dimension once 2d >= |rho| + rho_1.

    ``lhs`` is the computed sequence.  ``rhs`` is the sequence it must equal:
    the invariant dimension in the stable range and, below it, the running
    maximum of the sequence capped by that dimension.
    """
    rho = Partition(rho)
    inst = {"rho": _p(rho), "n": n, "d_max": d_max}
    target = sl_invariant_dim(rho, n)
    start = stabilization_threshold(rho)
    ds = [d for d in range(1, d_max + 1) if d * n - rho.size >= rho.part(0)]
    lhs = [rectangular_kron(rho, d, n) for d in ds]
    rhs = []
    running = None
    for d, v in zip(ds, lhs):
        running = v if running is None else max(running, v)
        rhs.append(target if d >= start else min(running, target))
    notes = f"d={ds}; stable from d={start}; invariant dimension {target}"
    return VerificationReport("stabilization", inst, lhs, rhs, notes=notes)


def check_symmetry_monotonicity(
    rho: Sequence[int], pairs: Iterable[tuple]
) -> VerificationReport:
    """k_rho(d, n) = k_rho(n, d) on every pair, and monotone in each variable.

    Pairs where (dn - |rho|, rho) is not a partition count as 0.  The last
    entry of lhs is the number of monotonicity violations (rhs: 0).
    """
    rho = Partition(rho)
    pairs = [tuple(p) for p in pairs]
    inst = {"rho": _p(rho), "pairs": [list(p) for p in pairs]}
    values = {p: _kron_or_zero(rho, *p) for p in pairs}
    swapped = [_kron_or_zero(rho, n, d) for d, n in pairs]
    violations = 0
    for axis in (0, 1):
        groups: dict = {}
        for p in pairs:
            groups.setdefault(p[1 - axis], []).append((p[axis], values[p]))
        for seq in groups.values():
            seq.sort()
            violations += sum(1 for a, b in zip(seq, seq[1:]) if b[1] < a[1])
    lhs = [values[p] for p in pairs] + [violations]
    rhs = swapped + [0]
    return VerificationReport("symmetry_monotonicity", inst, lhs, rhs)


# -- Kronecker and LR invariants ----------------------------------------------------


def check_kronecker_symmetry(lam, mu, nu) -> VerificationReport:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    perms = [(lam, mu, nu), (lam, nu, mu), (mu, lam, nu), (mu, nu, lam), (nu, lam, mu), (nu, mu, lam)]
    vals = [kronecker(*t) for t in perms]
    return VerificationReport(
        "kronecker_symmetry", {"triple": [_p(lam), _p(mu), _p(nu)]}, vals, [vals[0]] * 6
    )


def check_conjugation(lam, mu, nu) -> VerificationReport:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return VerificationReport(
        "kronecker_conjugation",
        {"triple": [_p(lam), _p(mu), _p(nu)]},
        kronecker(lam, mu, nu),
        kronecker(conjugate(lam), conjugate(mu), nu),
    )


def check_jk_bound(alpha, beta, theta) -> VerificationReport:
    """k(alpha, beta, theta) != 0 implies m - theta_1 <= (m - alpha_1) + (m - beta_1).

    lhs is 1 when the coefficient is nonzero, rhs is 1 when the inequality
    allows it to be; pass means the implication holds (lhs <= rhs encoded as
    min(lhs, rhs) == lhs).
    """
    alpha, beta, theta = Partition(alpha), Partition(beta), Partition(theta)
    m = theta.size
    nonzero = int(kronecker(alpha, beta, theta) != 0)
    allowed = int(m - theta.part(0) <= (m - alpha.part(0)) + (m - beta.part(0)))
    return VerificationReport(
        "jk_bound",
        {"triple": [_p(alpha), _p(beta), _p(theta)]},
        nonzero,
        min(nonzero, allowed),
    )


def check_semigroup(t1: Sequence, t2: Sequence) -> VerificationReport:
    s = [partwise_sum(a, b) for a, b in zip(t1, t2)]
    k1, k2 = kronecker(*t1), kronecker(*t2)
    ks = kronecker(*s)
    bound = max(k1, k2)
    return VerificationReport(
        "semigroup",
        {"first": [_p(x) for x in t1], "second": [_p(x) for x in t2]},
        ks if ks < bound else bound,
        bound,
        notes=f"k(sum)={ks}, summands {k1}, {k2}",
    )


def lr_via_characters(lam, alpha, beta) -> int:
    """c^lam_{alpha,beta} as <Ind(chi_alpha x chi_beta), chi_lam>, summed over classes of S_a x S_b."""
    lam, alpha, beta = Partition(lam), Partition(alpha), Partition(beta)
    a, b = alpha.size, beta.size
    if a + b != lam.size:
        return 0
    ta, tb, tl = character_table(a), character_table(b), character_table(a + b)
    total_num = 0
    den = factorial(a) * factorial(b)
    for ca, xa in zip(ta.classes, ta.row(alpha)):
        for cb, xb in zip(tb.classes, tb.row(beta)):
            union = Partition(sorted(tuple(ca.cycle_type) + tuple(cb.cycle_type), reverse=True))
            total_num += ca.class_size * cb.class_size * xa * xb * tl.value(lam, union)
    q, r = divmod(total_num, den)
    if r:
        raise ArithmeticError("induced character inner product is not integral")
    return q


def check_lr_rectangle(d: int, n: int, alpha, beta) -> VerificationReport:
    return VerificationReport(
        "lr_rectangle",
        {"d": d, "n": n, "alpha": _p(alpha), "beta": _p(beta)},
        lr_rectangle(d, n, alpha, beta),
        lr(_rect(d, n), alpha, beta),
    )


def check_lr_characters(lam, alpha, beta) -> VerificationReport:
    return VerificationReport(
        "lr_characters",
        {"lambda": _p(lam), "alpha": _p(alpha), "beta": _p(beta)},
        lr(lam, alpha, beta),
        lr_via_characters(lam, alpha, beta),
    )


# -- stable-value checks ------------------------------------------------------------


def check_table_entry(m: int, rho) -> VerificationReport:
    rho = Partition(rho)
    computed = fpf_multiplicity(rho)
    printed = PAPER_TABLE[m][rho]
    erratum = computed != printed and is_known_erratum(m, rho)
    notes = ""
    if erratum:
        row = stable_table_row(m)
        ev = row.evidence.get(str(rho), {})
        notes = f"erratum in printed table; evidence {json.dumps(ev, sort_keys=True)}"
    return VerificationReport(
        "paper_table", {"m": m, "rho": _p(rho)}, computed, printed, notes=notes, erratum=erratum
    )


def check_derangements(m: int) -> VerificationReport:
    rhs = [brute_force_derangements(m)] if m <= 8 else []
    if m in PAPER_DERANGEMENTS:
        rhs.append(PAPER_DERANGEMENTS[m])
    lhs = [derangement_count(m)] * len(rhs)
    return VerificationReport("derangements", {"m": m}, lhs, rhs)


def check_dimension_accounting(m: int) -> VerificationReport:
    lhs = sum(fpf_multiplicity(rho) * dim_irrep(rho) for rho in enumerate_partitions(m))
    return VerificationReport("dimension_accounting", {"m": m}, lhs, derangement_count(m))


def check_triple_agreement(rho) -> VerificationReport:
    rho = Partition(rho)
    m = rho.size
    lhs = [fpf_multiplicity(rho)]
    rhs = [sl_invariant_dim(rho, m), sl_invariant_dim(rho, m + 1)]
    if m >= 1 and rho == Partition((m,)):
        rhs += [stable_trivial(m, m), orbit_count(m)]
    if m >= 1 and rho == Partition((1,) * m):
        rhs.append(stable_sign(m, m))
    return VerificationReport("triple_agreement", {"rho": _p(rho)}, lhs * len(rhs), rhs)


def check_n_stabilization(rho, n_max: int) -> VerificationReport:
    """sl_n invariant dimension is non-decreasing in n and constant for n >= |rho|."""
    rho = Partition(rho)
    lhs = [sl_invariant_dim(rho, n) for n in range(1, n_max + 1)]
    limit = fpf_multiplicity(rho) if rho.size <= stable.max_brute_m else lhs[-1]
    rhs = []
    running = 0
    for n, v in enumerate(lhs, start=1):
        running = max(running, v)
        rhs.append(limit if n >= rho.size else min(running, limit))
    return VerificationReport("n_stabilization", {"rho": _p(rho), "n_max": n_max}, lhs, rhs)


def check_odd_self_conjugate(m: int) -> VerificationReport:
    sign = Partition((1,) * m)
    return VerificationReport(
        "self_conjugate",
        {"m": m},
        self_conjugate_count(m),
        sum(kronecker(lam, lam, sign) for lam in enumerate_partitions(m)),
    )


def check_n2_closed_form(rho, d: int) -> VerificationReport:
    rho = Partition(rho)
    closed = n2_closed_form(rho)
    notes = ""
    if n2_closed_form_as_printed(rho) != closed:
        notes = "published one-even-part wording gives the other value here"
    return VerificationReport(
        "n2_closed_form", {"rho": _p(rho), "d": d}, closed, rectangular_kron(rho, d, 2), notes=notes
    )


# -- sweep ------------------------------------------------------------------------


def _random_nonzero_triple(rng: random.Random, m: int):
    parts = enumerate_partitions(m)
    while True:
        t = tuple(rng.choice(parts) for _ in range(3))
        if kronecker(*t):
            return t


def semigroup_instances(count: int, max_total: int, seed: int) -> list:
    """Seeded pairs of nonvanishing triples with m + m' <= max_total."""
    rng = random.Random(seed)
    out = []
    if max_total < 2:
        return out
    for _ in range(count):
        m1 = rng.randint(1, max_total - 1)
        m2 = rng.randint(1, max_total - m1)
        out.append((_random_nonzero_triple(rng, m1), _random_nonzero_triple(rng, m2)))
    return out


def _dn_pairs(max_dn: int):
    return [(d, n) for d in range(1, max_dn + 1) for n in range(1, max_dn // d + 1)]


def run_suite(
    max_m: int,
    max_dn: int,
    seed: int,
    suites: Iterable[str] = ("all",),
    semigroup_samples: int = 100,
) -> list[VerificationReport]:
    """Every check at every admissible instance within the bounds.

    ``max_m`` bounds the partitions checked (|theta|, |rho|, Kronecker sizes);
    ``max_dn`` bounds the rectangle area.  Reports come back sorted by
    identity name then instance.
    """
    if max_m < 0 or max_dn < 0:
        raise ValueError("bounds must be nonnegative")
    suites = set(suites)
    want = lambda name: "all" in suites or name in suites  # noqa: E731
    log.info("verification sweep max_m=%d max_dn=%d seed=%d", max_m, max_dn, seed)
    reports: list[VerificationReport] = []
    pairs = _dn_pairs(max_dn)
    small = [lam for m in range(max_m + 1) for lam in enumerate_partitions(m)]

    for theta in small:
        for d, n in pairs:
            if d * n < theta.size:
                continue
            if want("e3"):
                reports.append(check_e3(theta, d, n))
            if want("e4"):
                reports.append(check_e4(theta, d, n))
            if want("e5") and theta.size <= d:
                reports.append(check_e5(theta, d, n))

    if want("stabilization"):
        for rho in small:
            for n in range(1, max_dn + 1):
                d_max = max_dn // n
                if any(d * n - rho.size >= rho.part(0) for d in range(1, d_max + 1)):
                    reports.append(check_stabilization(rho, n, d_max))
    if want("symmetry"):
        for rho in small:
            reports.append(check_symmetry_monotonicity(rho, pairs))
    if want("n2"):
        for rho in small:
            for d in range(1, max_dn // 2 + 1):
                if 2 * d - rho.size >= rho.part(0):
                    reports.append(check_n2_closed_form(rho, d))

    if want("kronecker"):
        for m in range(max_m + 1):
            parts = enumerate_partitions(m)
            for lam, mu, nu in product(parts, repeat=3):
                reports.append(check_conjugation(lam, mu, nu))
                reports.append(check_jk_bound(lam, mu, nu))
                if lam >= mu >= nu:
                    reports.append(check_kronecker_symmetry(lam, mu, nu))
        total = max(max_m, min(max_dn, 10))
        for t1, t2 in semigroup_instances(semigroup_samples if max_m else 0, total, seed):
            log.debug("semigroup instance %s + %s", t1, t2)
            reports.append(check_semigroup(t1, t2))
    if want("lr"):
        for d, n in pairs:
            if d * n > 9:
                continue
            for a in range(d * n + 1):
                for alpha in enumerate_partitions(a):
                    for beta in enumerate_partitions(d * n - a):
                        reports.append(check_lr_rectangle(d, n, alpha, beta))
        for lam in small:
            for a in range(lam.size + 1):
                for alpha in enumerate_partitions(a):
                    for beta in enumerate_partitions(lam.size - a):
                        reports.append(check_lr_characters(lam, alpha, beta))

    if want("stable"):
        top = min(max_m, stable.max_brute_m)
        for m in range(top + 1):
            reports.append(check_derangements(m))
            reports.append(check_dimension_accounting(m))
            reports.append(check_odd_self_conjugate(m))
            for rho in enumerate_partitions(m):
                reports.append(check_triple_agreement(rho))
                reports.append(check_n_stabilization(rho, max(m + 1, 2)))
                if m in PAPER_TABLE:
                    reports.append(check_table_entry(m, rho))

    reports.sort(key=VerificationReport.sort_key)
    return reports


def summarize(reports: Sequence[VerificationReport]) -> str:
    by_name: dict = {}
    for r in reports:
        stats = by_name.setdefault(r.identity_name, [0, 0, 0])
        stats[0] += 1
        stats[1] += r.passed
        stats[2] += r.erratum
    lines = [f"{name:24s} {ok}/{n} passed" + (f", {err} erratum" if err else "")
             for name, (n, ok, err) in sorted(by_name.items())]
    hard = sum(r.failed_hard for r in reports)
    errata = [r for r in reports if r.erratum]
    for r in errata:
        lines.append(f"erratum: {r.identity_name} {r.instance} computed {r.lhs}, printed {r.rhs}")
    lines.append(f"{len(reports)} reports, {hard} failures, {len(errata)} erratum notes")
    return "\n".join(lines)

