"""Exact dense linear algebra over the rationals.

Rank via fraction-free (Bareiss) elimination on integer rows, Jordan types of
nilpotent matrices from nullities of successive powers, and the Jordan-chain
change of basis.  No floating point enters this module; nullity differences of
one decide Jordan types, so there is no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from nilcomm.partitions import Partition, almost_rect


class NotNilpotentError(ValueError):
    """Raised when a Jordan type is requested for a non-nilpotent matrix."""


def _check_entry(x):
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"entries must be int or Fraction, got {type(x).__name__}")
    return x


class ExactMatrix:
    """Immutable dense matrix with int/Fraction entries."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: Iterable[Sequence]):
        data = tuple(tuple(_check_entry(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        w = len(data[0])
        if any(len(r) != w for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", w)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def __getitem__(self, rc):
        r, c = rc
        return self._rows[r][c]

    def row_data(self) -> tuple:
        return self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(
            a == b
            for ra, rb in zip(self._rows, other._rows)
            for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(tuple(tuple(Fraction(x) for x in r) for r in self._rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in subtraction")
        return ExactMatrix(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )

    def scale(self, c) -> "ExactMatrix":
        _check_entry(c)
        return ExactMatrix(tuple(c * x for x in r) for r in self._rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}"
            )
        return ExactMatrix(_mul_rows(self._rows, other._rows))

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.__matmul__(other)
        return self.scale(other)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        """Submatrix with rows [r0, r1) and columns [c0, c1)."""
        return ExactMatrix(r[c0:c1] for r in self._rows[r0:r1])

    def dump(self) -> str:
        """Dimensions line, then rows of space-separated rationals."""
        lines = [f"{self.rows} {self.cols}"]
        for r in self._rows:
            lines.append(" ".join(str(Fraction(x)) for x in r))
        return "\n".join(lines)

    def __repr__(self):
        return f"<ExactMatrix {self.rows}x{self.cols}>"


def _mul_rows(a: tuple, b: tuple) -> list:
    bt = tuple(zip(*b))
    out = []
    for ra in a:
        nz = [(j, x) for j, x in enumerate(ra) if x]
        row = []
        for col in bt:
            s = 0
            for j, x in nz:
                v = col[j]
                if v:
                    s += x * v
            row.append(s)
        out.append(row)
    return out


def zeros(rows: int, cols: int) -> ExactMatrix:
    return ExactMatrix([[0] * cols for _ in range(rows)])


def identity(n: int) -> ExactMatrix:
    return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def jordan_block(m: int) -> ExactMatrix:
    """Nilpotent single block: ones on the superdiagonal."""
    return ExactMatrix(
        [[1 if j == i + 1 else 0 for j in range(m)] for i in range(m)]
    )


def build_jordan(p) -> ExactMatrix:
    """Block-diagonal nilpotent matrix with block sizes given by the partition."""
    ps = tuple(p)
    n = sum(ps)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for m in ps:
        for i in range(m - 1):
            rows[off + i][off + i + 1] = 1
        off += m
    return ExactMatrix(rows)


def direct_sum(*ms: ExactMatrix) -> ExactMatrix:
    n = sum(m.rows for m in ms)
    w = sum(m.cols for m in ms)
    rows = [[0] * w for _ in range(n)]
    r0 = c0 = 0
    for m in ms:
        for i, row in enumerate(m.row_data()):
            for j, x in enumerate(row):
                rows[r0 + i][c0 + j] = x
        r0 += m.rows
        c0 += m.cols
    return ExactMatrix(rows)


def _int_rank(rows: list) -> int:
    """Rank of a list-of-lists of ints, destructively, by Bareiss elimination.

    Fraction-free: every division below is exact by the Sylvester determinant
    identity as long as rows with a zero pivot-column coefficient are still
    rescaled by pivot/prev.
    """
    nr = len(rows)
    if nr == 0:
        return 0
    nc = len(rows[0])
    pr = 0
    prev = 1
    for pc in range(nc):
        if pr >= nr:
            break
        piv = -1
        for r in range(pr, nr):
            if rows[r][pc]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pr:
            rows[pr], rows[piv] = rows[piv], rows[pr]
        prow = rows[pr]
        p = prow[pc]
        for r in range(pr + 1, nr):
            row = rows[r]
            coef = row[pc]
            if coef:
                for c in range(pc + 1, nc):
                    row[c] = (p * row[c] - coef * prow[c]) // prev
            elif p != prev:
                for c in range(pc + 1, nc):
                    row[c] = (p * row[c]) // prev
            row[pc] = 0
        prev = p
        pr += 1
    return pr


def _int_rows(m: ExactMatrix) -> list:
    """Copy rows, clearing denominators per row (rank is unchanged)."""
    out = []
    for row in m.row_data():
        if any(isinstance(x, Fraction) for x in row):
            mult = lcm(*(x.denominator if isinstance(x, Fraction) else 1 for x in row))
            out.append([int(x * mult) for x in row])
        else:
            out.append(list(row))
    return out


def rank(m: ExactMatrix) -> int:
    return _int_rank(_int_rows(m))


def nullity(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def matrix_power_seq(m: ExactMatrix, kmax: int):
    """Yield m^1, m^2, ... up to kmax, stopping after the first zero power."""
    if not m.is_square():
        raise ValueError("powers need a square matrix")
    acc = m
    for _ in range(kmax):
        yield acc
        if acc.is_zero():
            return
        acc = acc @ m


def jordan_type(a: ExactMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from nullities of its powers.

    Refuses non-nilpotent input: the rank sequence of powers is strictly
    decreasing until zero for nilpotents, so the first repeat at a nonzero
    value is a certificate of failure.
    """
    if not a.is_square():
        raise ValueError("jordan_type needs a square matrix")
    data = a.row_data()
    if any(isinstance(x, Fraction) for r in data for x in r):
        # global scaling keeps the rank sequence of powers intact
        mult = lcm(*(x.denominator for r in data for x in r))
        data = tuple(tuple(int(x * mult) for x in r) for r in data)
    return Partition(_jordan_type_rows(data))


def _jordan_type_rows(rows0):
    """Jordan type from raw integer rows (tuple form); fast path for samplers."""
    n = len(rows0)
    base = [tuple(r) for r in rows0]
    ranks = []
    cur = base
    prev_rank = n
    k = 0
    while True:
        k += 1
        r = _int_rank([list(row) for row in cur])
        if r == prev_rank:
            raise NotNilpotentError(
                f"matrix is not nilpotent: rank stabilizes at {r} from power {k}"
            )
        ranks.append(r)
        if r == 0:
            break
        if k >= n:
            raise NotNilpotentError(
                f"matrix is not nilpotent: rank still {r} at power {n}"
            )
        prev_rank = r
        cur = _mul_int(cur, base)
    # conjugate-type column counts: nullity(a^j) - nullity(a^(j-1))
    nulls = [0] + [n - r for r in ranks]
    cols = [nulls[j] - nulls[j - 1] for j in range(1, len(nulls))]
    parts: list[int] = []
    for size in range(len(cols), 0, -1):
        extra = cols[size - 1] - (cols[size] if size < len(cols) else 0)
        parts.extend([size] * extra)
    return tuple(parts)


def _mul_int(a, b):
    bt = tuple(zip(*b))
    out = []
    for ra in a:
        nz = [(j, x) for j, x in enumerate(ra) if x]
        row = []
        for col in bt:
            s = 0
            for j, x in nz:
                v = col[j]
                if v:
                    s += x * v
            row.append(s)
        out.append(tuple(row))
    return out


def is_ut_toeplitz(m: ExactMatrix) -> bool:
    """Entry (i, j) depends on j - i only and vanishes for j < i."""
    data = m.row_data()
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            if j < i:
                if x != 0:
                    return False
            elif i > 0 and j > 0:
                if x != data[i - 1][j - 1]:
                    return False
    return True


def toeplitz_product_rank_check(c: ExactMatrix, d: ExactMatrix) -> bool:
    """rank(c d) = max(rank c + rank d - r, 0) for upper-triangular Toeplitz factors."""
    if c.cols != d.rows:
        raise ValueError("inner dimensions differ")
    if not (is_ut_toeplitz(c) and is_ut_toeplitz(d)):
        raise ValueError("inputs must be upper-triangular Toeplitz")
    r = c.cols
    return rank(c @ d) == max(rank(c) + rank(d) - r, 0)


def rref(m: ExactMatrix):
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in m.row_data()]
    nr, nc = len(rows), len(rows[0])
    pivots = []
    pr = 0
    for pc in range(nc):
        piv = next((r for r in range(pr, nr) if rows[r][pc]), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = 1 / rows[pr][pc]
        rows[pr] = [x * inv for x in rows[pr]]
        for r in range(nr):
            if r != pr and rows[r][pc]:
                coef = rows[r][pc]
                rows[r] = [a - coef * b for a, b in zip(rows[r], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nr:
            break
    return rows, pivots


def nullspace(m: ExactMatrix) -> list[tuple]:
    """Basis of the right kernel, as tuples of Fractions."""
    rows, pivots = rref(m)
    nc = m.cols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def inverse(m: ExactMatrix) -> ExactMatrix:
    if not m.is_square():
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    aug = ExactMatrix(
        tuple(row) + tuple(1 if i == j else 0 for j in range(n))
        for i, row in enumerate(m.row_data())
    )
    rows, pivots = rref(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return ExactMatrix(r[n:] for r in rows[:n])


def solve_right(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """X with a X = b, for invertible a."""
    return inverse(a) @ b


def jordan_chain_basis(e: ExactMatrix):
    """Invertible P with P^-1 e P in Jordan form; returns (P, type).

    Chains are assembled top down: pick vectors of maximal height first,
    extend the span, and push each chosen top through e to fill its chain.
    """
    jt = jordan_type(e)  # also certifies nilpotency
    n = e.rows
    s = jt[0]
    powers = [identity(n)]
    for _ in range(s):
        powers.append(powers[-1] @ e)
    kernels = [nullspace(powers[k]) for k in range(s + 1)]

    def _clear(vec):
        mult = lcm(*(x.denominator for x in vec)) if vec else 1
        return [int(x * mult) for x in vec]

    span_rows: list[list[int]] = []
    span_rank = 0

    def try_add(vec) -> bool:
        nonlocal span_rank
        cand = span_rows + [_clear(vec)]
        r = _int_rank([row[:] for row in cand])
        if r > span_rank:
            span_rows.append(_clear(vec))
            span_rank = r
            return True
        return False

    tops: list[tuple[int, tuple]] = []  # (height, vector)
    carried: list[tuple] = []
    for k in range(s, 0, -1):
        # seed the span with everything of height < k
        span_rows = []
        span_rank = 0
        for v in kernels[k - 1]:
            try_add(v)
        next_carried = []
        for v in carried:
            if not try_add(v):
                raise RuntimeError("chain vectors became dependent; bug")
            next_carried.append(v)
        want = len(kernels[k]) - len(kernels[k - 1])  # vectors at height k
        new_tops = []
        for v in kernels[k]:
            if len(next_carried) + len(new_tops) >= want:
                break
            if try_add(v):
                new_tops.append(v)
        if len(next_carried) + len(new_tops) != want:
            raise RuntimeError("could not complete chain basis; bug")
        for v in new_tops:
            tops.append((k, v))
        carried = [_apply(e, v) for v in next_carried + new_tops]

    cols: list[tuple] = []
    for height, v in sorted(tops, key=lambda hv: -hv[0]):
        chain = [v]
        for _ in range(height - 1):
            chain.append(_apply(e, chain[-1]))
        cols.extend(reversed(chain))
    p = ExactMatrix(zip(*cols))
    return p, jt


def _apply(m: ExactMatrix, vec) -> tuple:
    return tuple(
        sum(x * v for x, v in zip(row, vec) if x) for row in m.row_data()
    )


def jordan_power_type(m: int, k: int) -> Partition:
    """Jordan type of the k-th power of a single nilpotent block of size m."""
    if k >= m:
        return Partition([1] * m)
    return almost_rect(m, k)
