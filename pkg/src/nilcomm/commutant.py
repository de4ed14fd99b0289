"""Centralizer of a nilpotent Jordan matrix and the generic commuting type.

The centralizer of the block-diagonal nilpotent J decomposes into rectangular
blocks, one per pair of Jordan blocks, each constant along diagonals with the
lower-left triangle forced to zero.  One generator per admissible diagonal
gives a basis of dimension sum(min(p_i, p_j)).

The map D sends a partition p to the Jordan type of a generic nilpotent
element commuting with J_p.  Two facts pin it down tightly: the first part of
D(p) is an explicit maximum over windows of parts (dmap_index), and the number
of parts of D(p) is the minimal almost-rectangular cover of p.  Small covers
are resolved by closed formulas; everything else falls back to randomized
sampling with dominance-maximum aggregation and exact consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from nilcomm._rng import Stream, derive
from nilcomm.partitions import (
    Partition,
    dominance_leq,
    is_stable,
    min_ar_cover,
    stable_partitions,
)
from nilcomm.exactla import ExactMatrix, _jordan_type_rows, build_jordan, jordan_type


class MCInconsistencyError(RuntimeError):
    """Sampling produced types that contradict the formula-level facts."""


# generator descriptor: (block row i, block col j, diagonal offset, length,
# row origin, col origin); entries are ones at (row0 + r, col0 + offset + r)
Gen = tuple


def _generators(lam: Partition) -> tuple[Gen, ...]:
    offs = []
    off = 0
    for p in lam:
        offs.append(off)
        off += p
    gens = []
    for i, p in enumerate(lam):
        for j, q in enumerate(lam):
            m = min(p, q)
            for k in range(q - m, q):
                gens.append((i, j, k, min(p, q - k), offs[i], offs[j]))
    return tuple(gens)


@dataclass(frozen=True)
class CommutantBasis:
    lam: Partition
    gens: tuple
    dim: int

    @cached_property
    def basis(self) -> list[ExactMatrix]:
        """Dense generators, each checked to commute with the Jordan matrix."""
        n = self.lam.n
        b = build_jordan(self.lam)
        out = []
        for (_, _, k, length, r0, c0) in self.gens:
            rows = [[0] * n for _ in range(n)]
            for r in range(length):
                rows[r0 + r][c0 + k + r] = 1
            e = ExactMatrix(rows)
            if e @ b != b @ e:
                raise RuntimeError(f"generator fails to commute for {tuple(self.lam)}")
            out.append(e)
        return out


def commutant_basis(lam) -> CommutantBasis:
    """Structural basis of the commuting algebra of the Jordan matrix of lam."""
    lam = Partition(lam)
    gens = _generators(lam)
    expected = sum(min(p, q) for p in lam for q in lam)
    if len(gens) != expected:
        raise RuntimeError(
            f"basis size {len(gens)} disagrees with the min-sum formula {expected}"
        )
    return CommutantBasis(lam, gens, len(gens))


_GEN_CACHE: dict[tuple, tuple] = {}


def _cached_gens(lam: tuple) -> tuple:
    g = _GEN_CACHE.get(lam)
    if g is None:
        g = _generators(Partition(lam))
        _GEN_CACHE[lam] = g
    return g


def _draw_rows(lam: tuple, stream: Stream, bound: int) -> list:
    """Random integer coefficients on the generators, strictly upper triangular
    on the leading diagonals inside each group of equal parts (this forces the
    image in the semisimple quotient, hence the whole element, to be nilpotent).
    """
    n = sum(lam)
    rows = [[0] * n for _ in range(n)]
    for (i, j, k, length, r0, c0) in _cached_gens(lam):
        if lam[i] == lam[j] and k == 0:
            coef = stream.randint(-bound, bound) if i < j else 0
        else:
            coef = stream.randint(-bound, bound)
        if coef:
            for r in range(length):
                rows[r0 + r][c0 + k + r] += coef
    return rows


def sample_jordan(lam, seed: int, coeff_bound: int = 10) -> tuple:
    """Jordan type of one random nilpotent commuting element (no dense object kept)."""
    rows = _draw_rows(tuple(lam), Stream(seed), coeff_bound)
    return _jordan_type_rows([tuple(r) for r in rows])


@dataclass(frozen=True)
class CommutantSample:
    lam: Partition
    matrix: ExactMatrix
    jordan: Partition
    seed: int
    coeff_bound: int

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "jordan": list(self.jordan),
            "seed": self.seed,
            "coeff_bound": self.coeff_bound,
        }


def sample_nilpotent_commuting(lam, seed: int, coeff_bound: int = 10, retries: int = 32) -> CommutantSample:
    """Verified random nilpotent element commuting with the Jordan matrix of lam.

    The draw scheme makes non-nilpotent output impossible, but the contract is
    exact verification, so nilpotency and commutation are both checked; a
    failed draw (which would signal a bug, not bad luck) is redrawn a bounded
    number of times and then reported with its seed.
    """
    lam = Partition(lam)
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    b = build_jordan(lam)
    for attempt in range(retries):
        rows = _draw_rows(tuple(lam), Stream(derive(seed, 1, attempt)), coeff_bound)
        m = ExactMatrix(rows)
        if m @ b != b @ m:
            raise RuntimeError(f"sample fails commutation for {tuple(lam)}; bug")
        try:
            jt = jordan_type(m)
        except Exception:
            continue
        return CommutantSample(lam, m, jt, seed, coeff_bound)
    raise RuntimeError(
        f"no nilpotent sample for {tuple(lam)} after {retries} retries (seed {seed})"
    )


def dmap_index(lam) -> int:
    """First part of the generic commuting type.

    Maximum of 2(i-1) + lam_i + ... + lam_(i+r) over windows with
    lam_i - lam_(i+r) <= 1, requiring lam_(i-1) >= 2 when i > 1.
    """
    ps = tuple(lam)
    t = len(ps)
    best = 0
    for i in range(t):
        if i > 0 and ps[i - 1] < 2:
            continue
        acc = 2 * i
        for r in range(t - i):
            if ps[i] - ps[i + r] > 1:
                break
            acc += ps[i + r]
            if acc > best:
                best = acc
    return best


@dataclass(frozen=True)
class DMapResult:
    lam: Partition
    d: Partition
    method: str
    trials_used: int
    index_check: bool
    parts_check: bool

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "d": list(self.d),
            "method": self.method,
            "trials_used": self.trials_used,
            "checks": {"index": self.index_check, "parts": self.parts_check},
        }


def _diff2_image(lam: Partition) -> Partition | None:
    """Image when lam is a gap-2 staircase over an almost-rectangular tail.

    Matches lam = (u, u-2, ..., u-2(k-1), tail) with tail almost rectangular
    summing to u-2k; then the image is the staircase extended one more step.
    """
    ps = tuple(lam)
    u = ps[0]
    for k in range(1, (u - 1) // 2 + 1):
        if len(ps) <= k:
            break
        if any(ps[i] != u - 2 * i for i in range(k)):
            break
        tail = ps[k:]
        if sum(tail) == u - 2 * k and tail[0] - tail[-1] <= 1:
            return Partition([u - 2 * i for i in range(k + 1)])
    return None


def dmap(
    lam,
    trials: int = 64,
    *,
    seed: int = 0,
    coeff_bound: int = 10,
    force_mc: bool = False,
    early_stop: bool = True,
) -> DMapResult:
    """Generic commuting type of lam: formula cascade, then Monte Carlo.

    Cover 1 gives (n); cover 2 gives (index, n - index); a gap-2 staircase
    over an almost-rectangular tail extends the staircase.  Anything else is
    sampled: trials independent draws, aggregated by dominance maximum, with
    the first-part and part-count formulas as mandatory consistency checks.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lam = Partition(lam)
    n = lam.n
    u = dmap_index(lam)
    cover = min_ar_cover(lam)
    d: Partition | None = None
    method = "monte-carlo"
    used = 0
    if not force_mc:
        if cover == 1:
            d, method = Partition((n,)), "formula-r1"
        elif cover == 2:
            d, method = Partition((u, n - u)), "formula-r2"
        else:
            img = _diff2_image(lam)
            if img is not None:
                d, method = img, "formula-diff2"
    if d is None:
        d, used = _dmap_mc(lam, trials, seed, coeff_bound, early_stop, u, cover)
    index_check = d[0] == u
    parts_check = d.t == cover
    if not (index_check and parts_check):
        raise MCInconsistencyError(
            f"type {tuple(d)} for {tuple(lam)} fails checks: "
            f"first part {d[0]} vs {u}, parts {d.t} vs {cover}"
        )
    return DMapResult(lam, d, method, used, index_check, parts_check)


def _dmap_mc(
    lam: Partition, trials: int, seed: int, coeff_bound: int, early_stop: bool,
    u: int, cover: int,
) -> tuple[Partition, int]:
    """Dominance-maximum over sampled types, with provable early exit.

    The target type is stable, has first part u and cover parts, and
    dominates every sampled type.  So once the current unique maximum q is a
    member of that candidate set and no other candidate dominates q, the
    target can only be q itself.  A stable input is its own target, which
    gives a second sound exit.
    """
    n = lam.n
    candidates = None
    if early_stop:
        candidates = list(stable_partitions(n, u, cover))
    observed: set = set()
    maxima: list = []
    lam_stable = is_stable(lam)
    used = 0
    for trial in range(trials):
        jt = sample_jordan(lam, derive(seed, 2, trial), coeff_bound)
        used += 1
        if jt not in observed:
            observed.add(jt)
            maxima = [m for m in maxima if not dominance_leq(m, jt)]
            if not any(dominance_leq(jt, m) for m in maxima):
                maxima.append(jt)
        if early_stop and len(maxima) == 1:
            q = maxima[0]
            if lam_stable and q == tuple(lam):
                return Partition(q), used
            above = [c for c in candidates if dominance_leq(q, c)]
            if len(above) == 1 and above[0] == q:
                return Partition(q), used
    if len(maxima) != 1:
        raise MCInconsistencyError(
            f"incomparable maxima for {tuple(lam)} after {used} trials "
            f"(seed {seed}): {sorted(maxima, reverse=True)}"
        )
    return Partition(maxima[0]), used


def dmap_idempotence_check(lam, trials: int = 64, **kw) -> bool:
    d = dmap(lam, trials, **kw).d
    return dmap(d, trials, **kw).d == d
