"""Integer partitions: parsing, conjugation, dominance, almost-rectangular structure.

A partition is a nonincreasing tuple of positive integers.  The functions here
are the combinatorial substrate for everything else: almost-rectangular
decompositions control the number of parts of the generic commuting type, and
dominance is the orbit-closure order on nilpotent conjugacy classes.
"""

from __future__ import annotations

import re
from typing import Iterator


class Partition(tuple):
    """Nonincreasing tuple of positive integers.

    Instances are plain tuples (hashable, comparable with tuple literals);
    input is sorted into canonical order rather than rejected.
    """

    __slots__ = ()

    def __new__(cls, parts):
        ps = tuple(sorted((int(x) for x in parts), reverse=True))
        if not ps:
            raise ValueError("partition needs at least one part")
        if ps[-1] < 1:
            raise ValueError(f"parts must be positive, got {ps}")
        return super().__new__(cls, ps)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def t(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return "(" + render(self) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse(text: str) -> Partition:
    """Parse `a,b,c` or `a^e,b^f` (exponents expand the part).

    Surrounding parentheses and whitespace are tolerated so rendered output
    round-trips.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty partition")
    parts: list[int] = []
    for tok in s.split(","):
        m = _TOKEN.match(tok.strip())
        if not m:
            raise ValueError(f"bad partition token {tok!r}")
        v = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if v < 1:
            raise ValueError(f"parts must be positive, got {v}")
        if e < 1:
            raise ValueError(f"exponent must be positive, got {e}")
        parts.extend([v] * e)
    return Partition(parts)


def render(p) -> str:
    """Canonical text form: exponent notation once a part repeats 3+ times."""
    out: list[str] = []
    i = 0
    ps = tuple(p)
    while i < len(ps):
        j = i
        while j < len(ps) and ps[j] == ps[i]:
            j += 1
        count = j - i
        if count >= 3:
            out.append(f"{ps[i]}^{count}")
        else:
            out.extend(str(ps[i]) for _ in range(count))
        i = j
    return ",".join(out)


def conjugate(p) -> Partition:
    """Column lengths of the Ferrers diagram."""
    ps = tuple(p)
    return Partition(sum(1 for x in ps if x >= i) for i in range(1, ps[0] + 1))


def dominance_leq(p, q) -> bool:
    """True iff every prefix sum of p is at most the matching prefix sum of q.

    Missing parts count as zero.  Only defined for equal totals.
    """
    ps, qs = tuple(p), tuple(q)
    if sum(ps) != sum(qs):
        raise ValueError(f"dominance needs equal totals: {sum(ps)} vs {sum(qs)}")
    a = b = 0
    for i in range(max(len(ps), len(qs))):
        a += ps[i] if i < len(ps) else 0
        b += qs[i] if i < len(qs) else 0
        if a > b:
            return False
    return True


def almost_rect(n: int, t: int) -> Partition:
    """P(n, t): the unique t-part partition of n with max - min <= 1."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    q, r = divmod(n, t)
    return Partition([q + 1] * r + [q] * (t - r))


def is_almost_rectangular(p) -> bool:
    ps = tuple(p)
    return ps[0] - ps[-1] <= 1


def min_ar_cover(p) -> int:
    """Smallest r such that the parts split into r almost-rectangular groups.

    Greedy on the sorted parts: start a new group whenever the current part
    drops below the group's first part minus 1.  Tests check this against a
    brute-force splitting search.
    """
    ps = tuple(p)
    groups = 1
    head = ps[0]
    for x in ps[1:]:
        if x < head - 1:
            groups += 1
            head = x
    return groups


def partition_rank(p) -> int:
    """Total minus number of parts (the rank n - t)."""
    ps = tuple(p)
    return sum(ps) - len(ps)


def is_stable(p) -> bool:
    """True iff consecutive parts differ by at least 2 (one part counts)."""
    ps = tuple(p)
    return all(ps[i] - ps[i + 1] >= 2 for i in range(len(ps) - 1))


def _parts_iter(n: int, max_part: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _parts_iter(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    for ps in _parts_iter(n, n):
        yield Partition(ps)


def count_partitions(n: int) -> int:
    """p(n) by the bounded-part recurrence."""
    if n < 0:
        raise ValueError("negative n")
    # table[m] = number of partitions of m with parts <= k, built up over k
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            table[m] += table[m - k]
    return table[n]


def partitions_with_parts(n: int, t: int) -> Iterator[Partition]:
    """Partitions of n with exactly t parts, reverse lexicographic."""
    if t < 1 or t > n:
        return
    # exactly t parts of n  <->  partition of n-t into at most t parts, +1 each
    for tail in _parts_iter(n - t, n - t) if n > t else [()]:
        if len(tail) <= t:
            padded = tuple(x + 1 for x in tail) + (1,) * (t - len(tail))
            yield Partition(padded)


def stable_partitions(n: int, first: int, count: int) -> Iterator[Partition]:
    """Partitions of n with `count` parts, first part `first`, consecutive gaps >= 2."""

    def rec(remaining: int, prev: int, left: int) -> Iterator[tuple]:
        if left == 0:
            if remaining == 0:
                yield ()
            return
        for x in range(min(prev - 2, remaining - (left - 1)), 0, -1):
            for rest in rec(remaining - x, x, left - 1):
                yield (x,) + rest

    if first > n or count < 1:
        return
    if count == 1:
        if first == n:
            yield Partition((first,))
        return
    for rest in rec(n - first, first, count - 1):
        yield Partition((first,) + rest)
