"""Inverse images of the generic commuting type map.

Brute force goes through a cached full table over all partitions of n.
Closed-form fast paths cover staircase images, two-part images with gap
2..4, and the image (n-1, 1); the minimal-rank test and the two open
question explorers sit on top.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from nilcomm.commutant import DMapResult, dmap, dmap_index
from nilcomm.partitions import (
    Partition,
    almost_rect,
    count_partitions,
    enumerate_partitions,
    is_stable,
    min_ar_cover,
    partition_rank,
    partitions_with_parts,
)


class FiberCountFinding(UserWarning):
    """A fiber size disagreed with a count that is stated without the set."""


@dataclass(frozen=True)
class DTable:
    """Image of every partition of n, with the per-entry computation record."""

    n: int
    trials: int
    seed: int
    entries: dict  # Partition -> DMapResult

    def image(self, lam) -> Partition:
        return self.entries[Partition(lam)].d

    def fiber(self, mu) -> set:
        mu = Partition(mu)
        return {lam for lam, res in self.entries.items() if res.d == mu}

    def fibers(self) -> dict:
        out: dict[Partition, set] = {}
        for lam, res in self.entries.items():
            out.setdefault(res.d, set()).add(lam)
        return out

    def method_counts(self, lams=None) -> dict:
        if lams is None:
            lams = self.entries.keys()
        formula = mc = 0
        for lam in lams:
            if self.entries[Partition(lam)].method.startswith("formula"):
                formula += 1
            else:
                mc += 1
        return {"formula": formula, "monte-carlo": mc}


_TABLE_CACHE: dict[tuple, DTable] = {}


def dmap_all(n: int, trials: int = 64, *, seed: int = 0) -> DTable:
    """Full image table on the partitions of n.  Cached per (n, trials, seed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    key = (n, trials, seed)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    entries: dict[Partition, DMapResult] = {}
    for lam in enumerate_partitions(n):
        entries[lam] = dmap(lam, trials, seed=seed)
    if len(entries) != count_partitions(n):
        raise RuntimeError(f"table at n={n} is incomplete")
    table = DTable(n, trials, seed, entries)
    _TABLE_CACHE[key] = table
    return table


def dinv(mu, trials: int = 64, *, seed: int = 0) -> set:
    """{lam : D(lam) = mu}, by brute force over the full table."""
    mu = Partition(mu)
    return dmap_all(mu.n, trials, seed=seed).fiber(mu)


def fiber_json(mu, trials: int = 64, *, seed: int = 0) -> dict:
    mu = Partition(mu)
    table = dmap_all(mu.n, trials, seed=seed)
    fiber = sorted(table.fiber(mu), reverse=True)
    return {
        "mu": list(mu),
        "fiber": [list(lam) for lam in fiber],
        "size": len(fiber),
        "methods": table.method_counts(fiber),
    }


def _glue(head: tuple, m: int) -> list:
    """head extended by each almost-rectangular tail of m, kept when the
    concatenation is a partition whose first and last parts differ by >= 2."""
    out = []
    for t in range(1, m + 1):
        tail = tuple(almost_rect(m, t))
        if head and head[-1] < tail[0]:
            continue
        cand = head + tail
        if cand[0] - cand[-1] >= 2:
            out.append(Partition(cand))
    return out


def dinv_diff2(mu: int, k: int) -> set:
    """Fiber of the gap-2 staircase (mu, mu-2, ..., mu-2k): freeze the first
    k steps and let the final step spread over every almost-rectangular shape."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if mu - 2 * k < 1:
        raise ValueError(f"staircase from {mu} cannot take {k} steps")
    head = tuple(mu - 2 * i for i in range(k))
    m = mu - 2 * k
    return {Partition(head + tuple(almost_rect(m, t))) for t in range(1, m + 1)}


def dinv_two_part(mu: int, r: int, trials: int = 64, *, seed: int = 0) -> set:
    """Fiber of (mu, mu-r) for 2 <= r <= 5.

    Gaps 2..4 come from explicit families; gap 5 falls back to brute force
    and the known count (r-1)(mu-r) is checked, with a mismatch reported as
    a finding rather than an error.
    """
    if not 2 <= r <= 5:
        raise ValueError("r must be in 2..5")
    if mu - r < 1:
        raise ValueError("mu - r must be >= 1")
    if r == 2:
        return set(_glue((mu,), mu - 2))
    if r == 3:
        return set(_glue((mu,), mu - 3)) | set(_glue((mu - 1,), mu - 2))
    if r == 4:
        out = set(_glue((mu,), mu - 4))
        out |= set(_glue((mu - 2,), mu - 2))
        out |= set(_glue(tuple(almost_rect(mu, 2)), mu - 4))
        return out
    fiber = dinv((mu, mu - r), trials, seed=seed)
    expected = (r - 1) * (mu - r)
    if len(fiber) != expected:
        warnings.warn(
            f"fiber of ({mu},{mu - r}) has {len(fiber)} elements, "
            f"stated count is {expected}",
            FiberCountFinding,
            stacklevel=2,
        )
    return fiber


def dinv_n11(n: int) -> set:
    """Fiber of (n-1, 1): almost-rectangular body over a single 1, or a 3
    over an almost-rectangular body ending in 1."""
    if n < 4:
        raise ValueError("n must be >= 4")
    out: set[Partition] = set()
    for t in range(1, n):
        body = tuple(almost_rect(n - 1, t))
        cand = body + (1,)
        if cand[0] - cand[-1] >= 2:
            out.add(Partition(cand))
    out |= set(_glue((3,), n - 3))
    return out


def minimal_rank_check(mu: int, r: int) -> bool:
    """Is (mu+2, 1^(mu+r-2)) the unique rank-minimal element of the fiber
    of (mu+r, mu)?

    Rank n - t falls as the part count t grows, so only partitions with
    t >= mu+r-1 parts can tie or beat the candidate.  Membership in the
    fiber needs a two-part image, which is decided exactly by the cover
    and index formulas; no sampling is involved.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if mu < 1:
        raise ValueError("mu must be >= 1")
    n = 2 * mu + r
    candidate = Partition((mu + 2,) + (1,) * (mu + r - 2))
    members = set()
    for t in range(mu + r - 1, n + 1):
        for lam in partitions_with_parts(n, t):
            if min_ar_cover(lam) == 2 and dmap_index(lam) == mu + r:
                members.add(lam)
    return members == {candidate}


@dataclass(frozen=True)
class Q1Report:
    """Observed fiber size of (mu, mu-r) against the conjectured count."""

    mu: int
    r: int
    n: int
    fiber: tuple
    size: int
    conjectured: int
    matches: bool

    def to_json_dict(self) -> dict:
        return {
            "target": [self.mu, self.mu - self.r],
            "n": self.n,
            "size": self.size,
            "conjectured": self.conjectured,
            "matches": self.matches,
            "fiber": [list(lam) for lam in self.fiber],
        }


def explore_q1(mu: int, r: int, trials: int = 64, *, seed: int = 0) -> Q1Report:
    """Does |fiber of (mu, mu-r)| = (r-1)(mu-r) hold beyond gap 4?  Data only."""
    if r < 5:
        raise ValueError("r must be >= 5")
    if mu - r < 1:
        raise ValueError("mu - r must be >= 1")
    fiber = tuple(sorted(dinv((mu, mu - r), trials, seed=seed), reverse=True))
    conjectured = (r - 1) * (mu - r)
    return Q1Report(mu, r, 2 * mu - r, fiber, len(fiber), conjectured,
                    len(fiber) == conjectured)


@dataclass(frozen=True)
class Q2Report:
    """Rank-minimal fiber elements of a stable image vs the conjectured one."""

    mu: Partition
    conjectured: Partition
    min_rank: int
    minimal: tuple
    in_fiber: bool
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "mu": list(self.mu),
            "conjectured": list(self.conjectured),
            "min_rank": self.min_rank,
            "minimal": [list(lam) for lam in self.minimal],
            "in_fiber": self.in_fiber,
            "holds": self.holds,
        }


def explore_q2(mu, trials: int = 64, *, seed: int = 0) -> Q2Report:
    """Is the conjectured partition the unique rank-minimal fiber element
    of a stable image?  Data only."""
    mu = Partition(mu)
    if not is_stable(mu):
        raise ValueError(f"{tuple(mu)} is not stable")
    s = mu.t
    ones = mu[0] - 2 * (s - 1)
    if ones < 0:
        raise ValueError(f"{tuple(mu)} leaves a negative tail of ones")
    conjectured = Partition(tuple(p + 2 for p in mu[1:]) + (1,) * ones)
    fiber = dinv(mu, trials, seed=seed)
    min_rank = min(partition_rank(lam) for lam in fiber)
    minimal = tuple(sorted(
        (lam for lam in fiber if partition_rank(lam) == min_rank), reverse=True))
    return Q2Report(mu, conjectured, min_rank, minimal,
                    conjectured in fiber, minimal == (conjectured,))


def lemma1_structure(mu: int, r: int):
    """Partitions of 2*mu - r built from two almost-rectangular segments,
    the first of at most floor(r/2) parts, with first and last parts at
    least 2 apart.  Every element of the fiber of (mu, mu-r) has this shape,
    so the stream prunes brute-force fiber searches."""
    if not 2 <= r < mu:
        raise ValueError("need 2 <= r < mu")
    smax = r // 2
    for lam in enumerate_partitions(2 * mu - r):
        ps = tuple(lam)
        t = len(ps)
        if ps[0] - ps[-1] < 2:
            continue
        for s in range(1, min(smax, t - 1) + 1):
            if ps[0] - ps[s - 1] <= 1 and ps[s] - ps[-1] <= 1:
                yield lam
                break
