"""Acceptance suites: every claim the library rests on, checked at desk scale.

Each suite returns a SuiteResult and never raises on a mere mismatch; the
failures are counted and the first one is quoted.  run_all executes the
twelve suites in order, sharing verified commuting pairs between the
construction suites and the constraint-soundness suite.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from nilcomm import exactla
from nilcomm._rng import Stream, derive
from nilcomm.commutant import dmap, sample_jordan
from nilcomm.constraints import FORBIDDEN, check_two_part_pairs, compatible_filter
from nilcomm.dinverse import dinv, dinv_diff2, dinv_two_part, dmap_all
from nilcomm.partitions import (
    Partition,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    is_stable,
)
from nilcomm.twoblock import (
    antidiagonal,
    antidiagonal_block_rank_formulas,
    construct_lemma_eq2,
    construct_squarezero_partner,
    tb_to_matrix,
)


@dataclass(frozen=True)
class SuiteResult:
    criterion: int
    name: str
    passed: bool
    checked: int
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"CRITERION {self.criterion} [{self.name}]: {status} - "
                f"{self.detail} ({self.checked} checks)")

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "detail": self.detail,
        }


def _result(criterion: int, name: str, checked: int, fails: list, ok: str) -> SuiteResult:
    if not fails:
        return SuiteResult(criterion, name, True, checked, ok)
    detail = f"{len(fails)} failures; first: {fails[0]}"
    return SuiteResult(criterion, name, False, checked, detail)


def suite1(max_n: int = 10, witnesses: list | None = None) -> SuiteResult:
    """Square-zero partners of every rank for every host type."""
    fails: list[str] = []
    checked = 0
    for n in range(1, max_n + 1):
        for mu in enumerate_partitions(n):
            b = exactla.build_jordan(mu)
            for a in range(n // 2 + 1):
                checked += 1
                try:
                    m = construct_squarezero_partner(mu, a)
                except Exception as exc:
                    fails.append(f"mu={tuple(mu)} a={a}: {exc}")
                    continue
                sq_zero = (m @ m).is_zero()
                rank_ok = exactla.rank(m) == a
                commutes = m @ b == b @ m
                if not (sq_zero and rank_ok and commutes):
                    fails.append(
                        f"mu={tuple(mu)} a={a}: square-zero={sq_zero} "
                        f"rank-ok={rank_ok} commutes={commutes}")
                    continue
                if witnesses is not None:
                    witnesses.append((mu, exactla.jordan_type(m)))
    return _result(1, "square-zero partners", checked, fails,
                   f"all ranks realized for n <= {max_n}")


def suite2(max_n: int = 16, mc_max_n: int = 10, trials: int = 64,
           seed: int = 0) -> SuiteResult:
    """Images of two-column shapes collapse to a single part, formula and
    Monte Carlo agreeing on the overlap."""
    fails: list[str] = []
    checked = 0
    for n in range(1, max_n + 1):
        for a in range(n // 2 + 1):
            lam = Partition((2,) * a + (1,) * (n - 2 * a))
            checked += 1
            res = dmap(lam, trials, seed=seed)
            if res.d != (n,):
                fails.append(f"lam={tuple(lam)}: formula gave {tuple(res.d)}")
            if n <= mc_max_n:
                checked += 1
                mc = dmap(lam, trials, seed=seed, force_mc=True)
                if mc.d != (n,):
                    fails.append(f"lam={tuple(lam)}: sampling gave {tuple(mc.d)}")
    return _result(2, "two-column images", checked, fails,
                   f"single-part image for every shape, n <= {max_n}")


def _admissible(l1: int, l2: int):
    for j in range(l2):
        for l in range(j, l2):
            if l1 == l2 and j + l == 0:
                continue
            yield j, l


def suite3(max_n: int = 14, draws: int = 3, seed: int = 0,
           witnesses: list | None = None) -> SuiteResult:
    """Predicted antidiagonal types match the dense Jordan type exactly."""
    fails: list[str] = []
    checked = 0
    cases = {"a": 0, "b": 0, "c": 0}
    for l1 in range(1, max_n):
        for l2 in range(1, min(l1, max_n - l1) + 1):
            host = Partition((l1, l2))
            b = exactla.build_jordan(host)
            for j, l in _admissible(l1, l2):
                for k in range(draws):
                    rng = Stream(derive(seed, 3, l1, l2, j, l, k))
                    bc = Fraction(rng.nonzero(10), rng.randint(1, 4))
                    cc = Fraction(rng.nonzero(10), rng.randint(1, 4))
                    x, pred, case = antidiagonal(l1, l2, j, l, bc, cc)
                    m = tb_to_matrix(x)
                    checked += 1
                    if m @ b != b @ m:
                        fails.append(f"({l1},{l2}) j={j} l={l}: no commutation")
                        continue
                    jt = exactla.jordan_type(m)
                    if jt != pred:
                        fails.append(
                            f"({l1},{l2}) j={j} l={l} case {case}: "
                            f"type {tuple(jt)} vs predicted {tuple(pred)}")
                        continue
                    cases[case] += 1
                    if witnesses is not None:
                        witnesses.append((host, pred))
    ok = (f"cases a/b/c = {cases['a']}/{cases['b']}/{cases['c']}, "
          f"n <= {max_n}")
    return _result(3, "antidiagonal types", checked, fails, ok)


def suite4(max_n: int = 14, seed: int = 0) -> SuiteResult:
    """Block ranks of antidiagonal powers follow the four closed formulas."""
    fails: list[str] = []
    checked = 0
    for l1 in range(1, max_n):
        for l2 in range(1, min(l1, max_n - l1) + 1):
            n = l1 + l2
            for j, l in _admissible(l1, l2):
                x, _, _ = antidiagonal(l1, l2, j, l, 1, 1)
                acc = tb_to_matrix(x)
                step = acc
                m = 1
                while True:
                    pred = antidiagonal_block_rank_formulas(l1, l2, j, l, m)
                    got = {
                        "11": exactla.rank(acc.block(0, l1, 0, l1)),
                        "12": exactla.rank(acc.block(0, l1, l1, n)),
                        "21": exactla.rank(acc.block(l1, n, 0, l1)),
                        "22": exactla.rank(acc.block(l1, n, l1, n)),
                    }
                    checked += 4
                    if got != pred:
                        fails.append(
                            f"({l1},{l2}) j={j} l={l} m={m}: {got} vs {pred}")
                        break
                    if acc.is_zero():
                        break
                    if m > n:
                        fails.append(f"({l1},{l2}) j={j} l={l}: not nilpotent")
                        break
                    acc = acc @ step
                    m += 1
    return _result(4, "antidiagonal block ranks", checked, fails,
                   f"all four formulas exact, n <= {max_n}")


def suite5(max_n: int = 16, sample_n: int = 10, samples: int = 10000,
           seed: int = 0, coeff_bound: int = 10,
           witnesses: list | None = None) -> SuiteResult:
    """Two-part hosts: the off-by-one partner exists for equal blocks, and
    sampling the full commuting parametrization never produces a two-part
    type outside the allowed set; the pair rule forbids exactly the rest."""
    from nilcomm.twoblock import TwoBlockElement, tb_pow_order

    fails: list[str] = []
    checked = 0
    for m in range(2, max_n // 2 + 1):
        checked += 1
        host = Partition((m, m))
        b = exactla.build_jordan(host)
        try:
            e = construct_lemma_eq2(m, seed)
        except Exception as exc:
            fails.append(f"m={m}: {exc}")
            continue
        if e @ b != b @ e:
            fails.append(f"m={m}: partner does not commute")
            continue
        jt = exactla.jordan_type(e)
        if jt != (m + 1, m - 1):
            fails.append(f"m={m}: partner has type {tuple(jt)}")
            continue
        if witnesses is not None:
            witnesses.append((host, jt))

    seen_pairs: set[tuple] = set()
    for l1 in range(1, sample_n):
        for l2 in range(1, min(l1, sample_n - l1) + 1):
            n = l1 + l2
            allowed = {(l1, l2)}
            if n % 2 == 0 and n >= 4:
                h = n // 2
                if (l1, l2) in ((h, h), (h + 1, h - 1)):
                    allowed = {(h, h), (h + 1, h - 1)}
            rng = Stream(derive(seed, 5, l1, l2))
            for _ in range(samples):
                a = (0,) + tuple(
                    rng.randint(-coeff_bound, coeff_bound) for _ in range(l1 - 1))
                bco = [rng.randint(-coeff_bound, coeff_bound) for _ in range(l2)]
                cco = [rng.randint(-coeff_bound, coeff_bound) for _ in range(l2)]
                d = (0,) + tuple(
                    rng.randint(-coeff_bound, coeff_bound) for _ in range(l2 - 1))
                if l1 == l2:
                    if rng.randint(0, 1):
                        bco[0] = 0
                    else:
                        cco[0] = 0
                x = TwoBlockElement(l1, l2, a, tuple(bco), tuple(cco), d)
                checked += 1
                dense = tb_to_matrix(x)
                if exactla.rank(dense) != n - 2:
                    continue
                order = tb_pow_order(x)
                q = (order, n - order)
                if q not in allowed:
                    fails.append(f"host ({l1},{l2}): sampled two-part type {q}")
                elif witnesses is not None and ((l1, l2), q) not in seen_pairs:
                    seen_pairs.add(((l1, l2), q))
                    witnesses.append((Partition((l1, l2)), Partition(q)))

    for n in range(2, max_n + 1):
        shapes = [Partition((p, n - p)) for p in range((n + 1) // 2, n)]
        h = n // 2
        exceptional = {(h, h), (h + 1, h - 1)} if n % 2 == 0 and n >= 4 else set()
        for lam in shapes:
            for mu in shapes:
                checked += 1
                verdict = check_two_part_pairs(lam, mu).verdict
                ok = lam == mu or {tuple(lam), tuple(mu)} == exceptional
                if (verdict == FORBIDDEN) == ok:
                    fails.append(
                        f"pair {tuple(lam)},{tuple(mu)}: verdict {verdict}")
    return _result(5, "two-part realizability", checked, fails,
                   f"no sampled type escapes, partners exist to n = {max_n}")


def suite6(max_n: int = 16, trials: int = 64, seed: int = 0) -> SuiteResult:
    """Staircase fibers from the closed form equal brute force."""
    fails: list[str] = []
    checked = 0
    for mu in range(3, max_n + 1):
        for k in range(1, (mu - 1) // 2 + 1):
            n = (k + 1) * (mu - k)
            if n > max_n:
                continue
            target = Partition([mu - 2 * i for i in range(k + 1)])
            fast = dinv_diff2(mu, k)
            checked += 2
            if len(fast) != mu - 2 * k:
                fails.append(f"mu={mu} k={k}: size {len(fast)} != {mu - 2 * k}")
            brute = dinv(target, trials, seed=seed)
            if fast != brute:
                fails.append(
                    f"mu={mu} k={k}: closed form differs from brute force "
                    f"by {sorted(map(tuple, fast ^ brute))}")
    return _result(6, "staircase fibers", checked, fails,
                   f"closed form exact up to n = {max_n}")


def suite7(max_n: int = 16, trials: int = 64, seed: int = 0) -> SuiteResult:
    """Two-part fiber sizes (r-1)(mu-r), with the explicit sets for gaps 2..4."""
    fails: list[str] = []
    checked = 0
    for r in range(2, 6):
        mu = r + 1
        while 2 * mu - r <= max_n:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                fast = dinv_two_part(mu, r, trials, seed=seed)
            checked += 1
            if len(fast) != (r - 1) * (mu - r):
                fails.append(
                    f"mu={mu} r={r}: size {len(fast)} != {(r - 1) * (mu - r)}")
            if r <= 4:
                checked += 1
                brute = dinv((mu, mu - r), trials, seed=seed)
                if fast != brute:
                    fails.append(
                        f"mu={mu} r={r}: explicit set differs from brute force "
                        f"by {sorted(map(tuple, fast ^ brute))}")
            mu += 1
    return _result(7, "two-part fibers", checked, fails,
                   f"counts and sets exact up to n = {max_n}")


def suite8(trials: int = 64, seed: int = 0) -> SuiteResult:
    """The worked fiber of (6,2) and its dominance-minimal elements."""
    fails: list[str] = []
    expected = {
        Partition(p) for p in
        [(6, 2), (6, 1, 1), (4, 2, 2), (4, 2, 1, 1), (4, 1, 1, 1, 1), (3, 3, 1, 1)]
    }
    fiber = dinv((6, 2), trials, seed=seed)
    if fiber != expected:
        fails.append(f"fiber is {sorted(map(tuple, fiber))}")
    minimal = {
        lam for lam in fiber
        if not any(nu != lam and dominance_leq(nu, lam) for nu in fiber)
    }
    if minimal != {Partition((3, 3, 1, 1)), Partition((4, 1, 1, 1, 1))}:
        fails.append(f"dominance-minimal elements are {sorted(map(tuple, minimal))}")
    return _result(8, "worked fiber example", 2, fails,
                   "six elements, two dominance-minimal")


def suite9(trials: int = 64, seed: int = 0) -> SuiteResult:
    """The worked image D((3,1,1)) = (4,1)."""
    res = dmap((3, 1, 1), trials, seed=seed)
    fails = [] if res.d == (4, 1) else [f"got {tuple(res.d)}"]
    return _result(9, "worked image example", 1, fails, "(3,1,1) maps to (4,1)")


def suite10(max_n: int = 12, trials: int = 64, seed: int = 0) -> SuiteResult:
    """Idempotence of the image map, and fixed points = stable partitions."""
    fails: list[str] = []
    checked = 0
    for n in range(1, max_n + 1):
        table = dmap_all(n, trials, seed=seed)
        for lam, res in table.entries.items():
            checked += 2
            if table.image(res.d) != res.d:
                fails.append(f"lam={tuple(lam)}: image {tuple(res.d)} not fixed")
            if is_stable(lam) != (res.d == lam):
                fails.append(f"lam={tuple(lam)}: stability vs fixed-point mismatch")
    return _result(10, "idempotence and stability", checked, fails,
                   f"both properties hold for n <= {max_n}")


_BANK_CACHE: dict[tuple, dict] = {}


def sample_bank(n_max: int = 10, per: int = 1000, seed: int = 0,
                coeff_bound: int = 10) -> dict:
    """per sampled commuting types for every partition of every n <= n_max.

    Keyed by the host partition; memoized, so the acceptance suite and the
    property tests share one bank.
    """
    key = (n_max, per, seed, coeff_bound)
    bank = _BANK_CACHE.get(key)
    if bank is None:
        bank = {}
        for n in range(1, n_max + 1):
            for lam in enumerate_partitions(n):
                bank[lam] = [
                    Partition(sample_jordan(lam, derive(seed, 7, *lam, i), coeff_bound))
                    for i in range(per)
                ]
        _BANK_CACHE[key] = bank
    return bank


def suite11(sample_n: int = 10, per: int = 1000, pair_n: int = 12,
            seed: int = 0, coeff_bound: int = 10,
            witnesses: list | None = None) -> SuiteResult:
    """No verified commuting pair is ever marked forbidden."""
    if witnesses is None:
        witnesses = []
        suite1(witnesses=witnesses)
        suite3(seed=seed, witnesses=witnesses)
        suite5(seed=seed, witnesses=witnesses)
    fails: list[str] = []
    checked = 0
    pairs = {(lam, Partition(mu)) for lam, mu in witnesses}
    bank = sample_bank(sample_n, per, seed, coeff_bound)
    for lam, draws in bank.items():
        checked += len(draws)
        pairs.update((lam, q) for q in draws)
    for n in range(1, pair_n + 1):
        for lam in enumerate_partitions(n):
            pairs.add((lam, conjugate(lam)))
    for lam, mu in sorted(pairs):
        checked += 1
        verdict = compatible_filter(lam, mu)
        if verdict.verdict == FORBIDDEN:
            rules = [r.rule for r in verdict.reasons]
            fails.append(f"witness {tuple(lam)},{tuple(mu)} forbidden by {rules}")
    return _result(11, "constraint soundness", checked, fails,
                   f"{len(pairs)} distinct verified pairs all pass")


def suite12(max_n: int = 14) -> SuiteResult:
    """(mu+2, 1^(mu+r-2)) is the unique rank-minimal fiber element."""
    from nilcomm.dinverse import minimal_rank_check

    fails: list[str] = []
    checked = 0
    for total in range(3, max_n + 1):
        for r in range(2, total):
            mu = total - r
            checked += 1
            if not minimal_rank_check(mu, r):
                fails.append(f"mu={mu} r={r}")
    return _result(12, "rank-minimal uniqueness", checked, fails,
                   f"unique minimum for all first parts <= {max_n}")


def run_all(max_n: int = 16, trials: int = 64, seed: int = 0,
            progress=None) -> list[SuiteResult]:
    """All twelve suites at their stated scales, capped by max_n."""

    def cap(default: int) -> int:
        return min(default, max_n)

    witnesses: list[tuple] = []
    results: list[SuiteResult] = []

    def emit(res: SuiteResult) -> None:
        results.append(res)
        if progress is not None:
            progress(res)

    emit(suite1(cap(10), witnesses=witnesses))
    emit(suite2(cap(16), cap(10), trials, seed))
    emit(suite3(cap(14), 3, seed, witnesses=witnesses))
    emit(suite4(cap(14), seed))
    emit(suite5(cap(16), cap(10), 10000, seed, witnesses=witnesses))
    emit(suite6(cap(16), trials, seed))
    emit(suite7(cap(16), trials, seed))
    emit(suite8(trials, seed))
    emit(suite9(trials, seed))
    emit(suite10(cap(12), trials, seed))
    emit(suite11(cap(10), 1000, cap(12), seed, witnesses=witnesses))
    emit(suite12(cap(14)))
    return results
