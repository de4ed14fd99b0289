"""Structured algebra of matrices commuting with a two-block nilpotent Jordan matrix.

For block sizes l1 >= l2 the commuting algebra is spanned by four families:

  M_i  power i of the top-block shift (M_0 is the identity on the top block),
  N_i  power i of the bottom-block shift (N_0 the identity on the bottom),
  K_k  ones at 0-indexed positions (r, l1 + k + r),        r < l2 - k,
  L_l  ones at 0-indexed positions (l1 + r, l1 - l2 + l + r), r < l2 - l.

The only nonzero products are

  M_i M_j = M_{i+j}    M_i K_j = K_{i+j}    K_i L_j = M_{l1-l2+i+j}
  K_i N_j = K_{i+j}    L_i M_j = L_{i+j}    L_i K_j = N_{l1-l2+i+j}
  N_i L_j = L_{i+j}    N_i N_j = N_{i+j}

with M_j = 0 for j >= l1 and K_j = L_j = N_j = 0 for j >= l2.  Working with
coefficient vectors instead of dense matrices makes powers and rank bounds of
these elements nearly free; every construction below is still verified against
the dense realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from nilcomm import exactla
from nilcomm._rng import Stream, derive
from nilcomm.partitions import Partition, almost_rect, conjugate
from nilcomm.exactla import ExactMatrix, build_jordan, jordan_type


@dataclass(frozen=True)
class TwoBlockElement:
    """Coefficient vector in the M/K/L/N span for block sizes (l1, l2).

    a[i] multiplies M_i (i < l1); b[i], c[i], d[i] multiply K_i, L_i, N_i
    (i < l2).  a[0] and d[0] scale the two block identities, so an element
    is in nilpotent form only when both vanish (and, for equal blocks,
    when b[0]*c[0] = 0 as well).
    """

    l1: int
    l2: int
    a: tuple
    b: tuple
    c: tuple
    d: tuple

    def __post_init__(self):
        if not (self.l1 >= self.l2 >= 1):
            raise ValueError(f"need l1 >= l2 >= 1, got ({self.l1}, {self.l2})")
        if len(self.a) != self.l1 or any(
            len(v) != self.l2 for v in (self.b, self.c, self.d)
        ):
            raise ValueError("coefficient vectors have wrong length")

    @property
    def n(self) -> int:
        return self.l1 + self.l2

    def is_nilpotent_form(self) -> bool:
        if self.a[0] != 0 or self.d[0] != 0:
            return False
        if self.l1 == self.l2 and self.b[0] * self.c[0] != 0:
            return False
        return True

    def leading_indices(self) -> tuple[int, int, int, int]:
        """(alpha, beta, gamma, delta): first nonzero index per family.

        Sentinels l1 (for a) and l2 (for b, c, d) when a family is zero.
        """
        alpha = next((i for i, x in enumerate(self.a) if x), self.l1)
        beta = next((i for i, x in enumerate(self.b) if x), self.l2)
        gamma = next((i for i, x in enumerate(self.c) if x), self.l2)
        delta = next((i for i, x in enumerate(self.d) if x), self.l2)
        return alpha, beta, gamma, delta

    def is_zero(self) -> bool:
        return not (any(self.a) or any(self.b) or any(self.c) or any(self.d))

    def render(self) -> str:
        toks = []
        for name, vec in (("M", self.a), ("K", self.b), ("L", self.c), ("N", self.d)):
            for i, x in enumerate(vec):
                if x:
                    toks.append(f"{name}[{i}]={Fraction(x)}")
        return " ".join(toks) if toks else "0"


def tb_zero(l1: int, l2: int) -> TwoBlockElement:
    return TwoBlockElement(l1, l2, (0,) * l1, (0,) * l2, (0,) * l2, (0,) * l2)


def tb_unit(l1: int, l2: int, family: str, i: int, coef=1) -> TwoBlockElement:
    """Single basis element: family in 'M', 'K', 'L', 'N' with coefficient coef."""
    a = [0] * l1
    b = [0] * l2
    c = [0] * l2
    d = [0] * l2
    if family == "M":
        a[i] = coef
    elif family == "K":
        b[i] = coef
    elif family == "L":
        c[i] = coef
    elif family == "N":
        d[i] = coef
    else:
        raise ValueError(f"unknown family {family!r}")
    return TwoBlockElement(l1, l2, tuple(a), tuple(b), tuple(c), tuple(d))


def tb_add(x: TwoBlockElement, y: TwoBlockElement) -> TwoBlockElement:
    if (x.l1, x.l2) != (y.l1, y.l2):
        raise ValueError("block size mismatch")
    return TwoBlockElement(
        x.l1,
        x.l2,
        tuple(p + q for p, q in zip(x.a, y.a)),
        tuple(p + q for p, q in zip(x.b, y.b)),
        tuple(p + q for p, q in zip(x.c, y.c)),
        tuple(p + q for p, q in zip(x.d, y.d)),
    )


def tb_mul(x: TwoBlockElement, y: TwoBlockElement) -> TwoBlockElement:
    """Bilinear extension of the product table in the module docstring."""
    if (x.l1, x.l2) != (y.l1, y.l2):
        raise ValueError("block size mismatch")
    l1, l2 = x.l1, x.l2
    gap = l1 - l2
    a = [0] * l1
    b = [0] * l2
    c = [0] * l2
    d = [0] * l2
    xa = [(i, v) for i, v in enumerate(x.a) if v]
    xb = [(i, v) for i, v in enumerate(x.b) if v]
    xc = [(i, v) for i, v in enumerate(x.c) if v]
    xd = [(i, v) for i, v in enumerate(x.d) if v]
    ya = [(i, v) for i, v in enumerate(y.a) if v]
    yb = [(i, v) for i, v in enumerate(y.b) if v]
    yc = [(i, v) for i, v in enumerate(y.c) if v]
    yd = [(i, v) for i, v in enumerate(y.d) if v]
    for i, u in xa:
        for j, v in ya:  # M M -> M
            if i + j < l1:
                a[i + j] += u * v
        for j, v in yb:  # M K -> K
            if i + j < l2:
                b[i + j] += u * v
    for i, u in xb:
        for j, v in yc:  # K L -> M shifted by the block-size gap
            if gap + i + j < l1:
                a[gap + i + j] += u * v
        for j, v in yd:  # K N -> K
            if i + j < l2:
                b[i + j] += u * v
    for i, u in xc:
        for j, v in ya:  # L M -> L
            if i + j < l2:
                c[i + j] += u * v
        for j, v in yb:  # L K -> N shifted by the block-size gap
            if gap + i + j < l2:
                d[gap + i + j] += u * v
    for i, u in xd:
        for j, v in yc:  # N L -> L
            if i + j < l2:
                c[i + j] += u * v
        for j, v in yd:  # N N -> N
            if i + j < l2:
                d[i + j] += u * v
    return TwoBlockElement(l1, l2, tuple(a), tuple(b), tuple(c), tuple(d))


def tb_pow_order(x: TwoBlockElement, cap: int | None = None) -> int:
    """Smallest k >= 1 with x^k = 0, or raises if x is not nilpotent-form."""
    if not x.is_nilpotent_form():
        raise ValueError("order is only computed for nilpotent-form elements")
    cap = cap if cap is not None else x.n + 1
    acc = x
    k = 1
    while not acc.is_zero():
        if k > cap:
            raise RuntimeError("power order exceeded cap; bug")
        acc = tb_mul(acc, x)
        k += 1
    return k


def tb_to_matrix(x: TwoBlockElement) -> ExactMatrix:
    """Dense realization; commutes with the two-block Jordan matrix exactly."""
    l1, l2 = x.l1, x.l2
    n = l1 + l2
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(x.a):
        if v:
            for r in range(l1 - i):
                rows[r][r + i] += v
    for k, v in enumerate(x.b):
        if v:
            for r in range(l2 - k):
                rows[r][l1 + k + r] += v
    for l, v in enumerate(x.c):
        if v:
            for r in range(l2 - l):
                rows[l1 + r][l1 - l2 + l + r] += v
    for i, v in enumerate(x.d):
        if v:
            for r in range(l2 - i):
                rows[l1 + r][l1 + r + i] += v
    return ExactMatrix(rows)


def tb_rank_bound(x: TwoBlockElement) -> int:
    """Upper bound max(n - alpha - delta, 2 l2 - beta - gamma) on the dense rank."""
    alpha, beta, gamma, delta = x.leading_indices()
    return max(x.n - alpha - delta, 2 * x.l2 - beta - gamma)


def _antidiagonal_type(l1: int, l2: int, j: int, l: int) -> Partition:
    """Jordan type of K_j + L_l from the closed power-rank recurrences.

    The rank of each power is the sum of its block ranks (odd powers sit on
    the block antidiagonal, even powers on the block diagonal, so the blocks
    never share rows or columns).  The type is the conjugate of the rank
    drops.
    """
    ranks = [l1 + l2]
    m = 1
    while ranks[-1] > 0:
        f = antidiagonal_block_rank_formulas(l1, l2, j, l, m)
        ranks.append(f["11"] + f["12"] + f["21"] + f["22"])
        m += 1
    return conjugate(Partition([ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]))


def antidiagonal(l1: int, l2: int, j: int, l: int, bcoef, ccoef):
    """Element bcoef*K_j + ccoef*L_l with its predicted Jordan type.

    Returns (element, predicted type, case) where case is 'a', 'b' or 'c'.
    The type comes from the power-rank recurrences and always lands in one
    of three shape families.  With w = l1 - l2 + j + l, the label records
    which family, decided by where multiples of w fall (each window admits
    at most one k):

      a: some k with l2 <= k w < l1
         -> ((2k+1)^(l1-kw), (2k)^(w+l2-l1), (2k-1)^(kw-l2))
      b: some k with l2 - l <= k w < l2 - j and the type is not P(n, w)
         -> ((2k+2)^(l2-kw-j), (2k+1)^(w+j-l), (2k)^(kw+l-l2))
      c: otherwise P(n, w), the almost-rectangular type.

    Zero exponents are dropped.
    """
    if not (l1 >= l2 >= 1):
        raise ValueError(f"need l1 >= l2 >= 1, got ({l1}, {l2})")
    if not (0 <= j <= l < l2):
        raise ValueError(f"need 0 <= j <= l < l2, got j={j}, l={l}, l2={l2}")
    if bcoef == 0 or ccoef == 0:
        raise ValueError("coefficients must be nonzero")
    if l1 == l2 and j + l == 0:
        raise ValueError("equal blocks need j + l >= 1 for a nilpotent element")
    x = tb_add(tb_unit(l1, l2, "K", j, bcoef), tb_unit(l1, l2, "L", l, ccoef))
    n = l1 + l2
    w = l1 - l2 + j + l
    pred = _antidiagonal_type(l1, l2, j, l)

    def runs(*pairs) -> Partition:
        parts: list[int] = []
        for val, exp in pairs:
            if exp < 0:
                raise RuntimeError("negative exponent; bug in case selection")
            parts.extend([val] * exp)
        return Partition(parts)

    ka = -(-l2 // w)  # smallest k with k w >= l2
    kb = -(-(l2 - l) // w)
    shape = None
    if ka * w < l1:
        case = "a"
        shape = runs((2 * ka + 1, l1 - ka * w), (2 * ka, w + l2 - l1), (2 * ka - 1, ka * w - l2))
    elif kb * w < l2 - j and pred != almost_rect(n, w):
        case = "b"
        shape = runs((2 * kb + 2, l2 - kb * w - j), (2 * kb + 1, w + j - l), (2 * kb, kb * w + l - l2))
    else:
        case = "c"
        shape = almost_rect(n, w)
    if shape != pred:
        raise RuntimeError(f"case {case} shape {tuple(shape)} disagrees with rank recurrences {tuple(pred)}")
    return x, pred, case


def antidiagonal_block_rank_formulas(l1: int, l2: int, j: int, l: int, m: int) -> dict:
    """Predicted block ranks of the m-th power of K_j + L_l.

    Keys '11', '12', '21', '22' give the rank of each block of the power;
    odd powers live on the antidiagonal, even powers on the diagonal.
    """
    w = l1 - l2 + j + l
    if m % 2 == 0:
        h = m // 2
        return {
            "11": max(l1 - h * w, 0),
            "22": max(l2 - h * w, 0),
            "12": 0,
            "21": 0,
        }
    h = (m + 1) // 2
    return {
        "11": 0,
        "22": 0,
        "12": max(l1 + l - h * w, 0),
        "21": max(l1 + j - h * w, 0),
    }


def _verify_witness(a: ExactMatrix, host, expect: Partition | None = None) -> Partition:
    """Check commutation with the host Jordan matrix and return the Jordan type."""
    b = build_jordan(host)
    if a @ b != b @ a:
        raise RuntimeError(f"witness does not commute with the Jordan matrix of {tuple(host)}")
    jt = jordan_type(a)
    if expect is not None and jt != tuple(expect):
        raise RuntimeError(f"witness has type {tuple(jt)}, expected {tuple(expect)}")
    return jt


def construct_lemma_odd(l1: int, l2: int, a: int) -> ExactMatrix:
    """Square-zero element of rank a commuting with the two-block Jordan matrix.

    Valid for 0 <= a <= floor((l1+l2)/2).  Powers of the individual blocks
    cover every rank except the corner where both sizes are odd and
    a = (l1+l2)/2; that corner needs a genuinely off-diagonal element.
    """
    if not (l1 >= l2 >= 1):
        raise ValueError(f"need l1 >= l2 >= 1, got ({l1}, {l2})")
    n = l1 + l2
    if not 0 <= a <= n // 2:
        raise ValueError(f"rank {a} out of range for n={n}")
    a1 = min(a, l1 // 2)
    a2 = a - a1
    if a2 <= l2 // 2:
        blocks = []
        for size, r in ((l1, a1), (l2, a2)):
            jb = exactla.jordan_block(size)
            acc = exactla.zeros(size, size) if r == 0 else _block_power(jb, size - r)
            blocks.append(acc)
        out = exactla.direct_sum(*blocks)
    elif l1 == l2:
        out = tb_to_matrix(tb_unit(l1, l2, "K", 0))
    else:
        # both sizes odd, a = n/2: shift both blocks halfway and couple the
        # corners so the square cancels through the K L product
        k1 = (l1 - 1) // 2
        k2 = (l2 - 1) // 2
        x = tb_unit(l1, l2, "M", k1)
        x = tb_add(x, tb_unit(l1, l2, "K", k2))
        x = tb_add(x, tb_unit(l1, l2, "L", k2, -1))
        if k2 + 1 < l2:
            x = tb_add(x, tb_unit(l1, l2, "N", k2 + 1))
        out = tb_to_matrix(x)
    _verify_witness(out, Partition((l1, l2)), _two_row_type(n, a))
    return out


def _block_power(m: ExactMatrix, k: int) -> ExactMatrix:
    acc = m
    for _ in range(k - 1):
        acc = acc @ m
    return acc


def _two_row_type(n: int, a: int) -> Partition:
    return Partition([2] * a + [1] * (n - 2 * a))


def construct_squarezero_partner(mu, a: int) -> ExactMatrix:
    """Square-zero matrix of rank a commuting with the Jordan matrix of mu.

    Parts are paired so that each unit (an odd pair, an even single, or a
    leftover odd single) can absorb up to half its size in rank; the unit
    capacities always sum to floor(n/2).
    """
    mu = Partition(mu)
    n = mu.n
    if not 0 <= a <= n // 2:
        raise ValueError(f"rank {a} out of range for n={n}")
    parts = list(mu)
    odd_pos = [i for i, p in enumerate(parts) if p % 2 == 1]
    even_pos = [i for i, p in enumerate(parts) if p % 2 == 0]
    units: list[tuple] = []  # (positions, capacity)
    for u in range(0, len(odd_pos) - 1, 2):
        i, j = odd_pos[u], odd_pos[u + 1]
        units.append(((i, j), (parts[i] + parts[j]) // 2))
    if len(odd_pos) % 2 == 1:
        i = odd_pos[-1]
        units.append(((i,), (parts[i] - 1) // 2))
    for i in even_pos:
        units.append(((i,), parts[i] // 2))
    assert sum(cap for _, cap in units) == n // 2

    remaining = a
    alloc: list[int] = []
    for _, cap in units:
        take = min(remaining, cap)
        alloc.append(take)
        remaining -= take
    assert remaining == 0

    offsets = []
    off = 0
    for p in parts:
        offsets.append(off)
        off += p
    rows = [[0] * n for _ in range(n)]
    for (pos, _), take in zip(units, alloc):
        if len(pos) == 1:
            i = pos[0]
            p = parts[i]
            if take > 0:
                blk = _block_power(exactla.jordan_block(p), p - take)
                _paste(rows, blk, offsets[i], offsets[i])
        else:
            i, j = pos
            sub = construct_lemma_odd(parts[i], parts[j], take)
            li = parts[i]
            _paste(rows, sub.block(0, li, 0, li), offsets[i], offsets[i])
            _paste(rows, sub.block(0, li, li, sub.cols), offsets[i], offsets[j])
            _paste(rows, sub.block(li, sub.rows, 0, li), offsets[j], offsets[i])
            _paste(rows, sub.block(li, sub.rows, li, sub.cols), offsets[j], offsets[j])
    out = ExactMatrix(rows)
    _verify_witness(out, mu, _two_row_type(n, a))
    return out


def _paste(rows: list, block: ExactMatrix, r0: int, c0: int) -> None:
    for i, row in enumerate(block.row_data()):
        for j, x in enumerate(row):
            if x:
                rows[r0 + i][c0 + j] = x


def common_squarezero_witness(lam, mu, k: int):
    """Square-zero rank-k partners for two hosts of the same size.

    The two outputs share the Jordan type (2^k, 1^(n-2k)), hence are
    conjugate; the conjugating change of basis is not materialized.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError("hosts must have equal size")
    return construct_squarezero_partner(lam, k), construct_squarezero_partner(mu, k)


def construct_lemma_eq2(lam: int, seed: int = 0, retries: int = 32) -> ExactMatrix:
    """Element of type (lam+1, lam-1) commuting with the equal-block Jordan matrix.

    Generic coefficients on the M, K and N families with a[1], b[0], d[1]
    nonzero realize the type; random integers in [-100, 100] stand in for
    generic values, with exact verification and redraw on degeneration.
    """
    if lam < 2:
        raise ValueError(f"need block size >= 2, got {lam}")
    target = Partition((lam + 1, lam - 1))
    for attempt in range(retries):
        rng = Stream(derive(seed, 4, attempt))
        a = [0] + [rng.randint(-100, 100) for _ in range(lam - 1)]
        b = [rng.randint(-100, 100) for _ in range(lam)]
        d = [0] + [rng.randint(-100, 100) for _ in range(lam - 1)]
        a[1] = rng.nonzero(100)
        b[0] = rng.nonzero(100)
        d[1] = rng.nonzero(100)
        x = TwoBlockElement(lam, lam, tuple(a), tuple(b), (0,) * lam, tuple(d))
        m = tb_to_matrix(x)
        if jordan_type(m) == tuple(target):
            _verify_witness(m, Partition((lam, lam)), target)
            return m
    raise RuntimeError(
        f"no generic draw of type {tuple(target)} after {retries} retries (seed {seed})"
    )


def maxrank_partners(l1: int, l2: int, seed: int = 0) -> dict[Partition, ExactMatrix]:
    """Jordan types of maximal-rank elements commuting with the two-block host.

    Gap <= 1 gives the full-cycle type (n); gap exactly 2 gives the host type
    and its balanced neighbor; gap >= 3 gives only the host type.  Each type
    is returned with a verified witness.
    """
    if not (l1 >= l2 >= 1):
        raise ValueError(f"need l1 >= l2 >= 1, got ({l1}, {l2})")
    n = l1 + l2
    host = Partition((l1, l2))
    out: dict[Partition, ExactMatrix] = {}
    gap = l1 - l2
    if gap <= 1:
        if (l1, l2) == (1, 1):
            w = ExactMatrix([[0, 1], [0, 0]])
        elif gap == 0:
            w = tb_to_matrix(tb_add(tb_unit(l1, l2, "K", 0), tb_unit(l1, l2, "L", 1)))
        else:
            w = tb_to_matrix(tb_add(tb_unit(l1, l2, "K", 0), tb_unit(l1, l2, "L", 0)))
        out[Partition((n,))] = w
    elif gap == 2:
        out[host] = build_jordan(host)
        m = l2 + 1
        e = construct_lemma_eq2(m, seed)
        p, jt = exactla.jordan_chain_basis(e)
        assert jt == (l1, l2)
        pinv = exactla.inverse(p)
        out[Partition((m, m))] = pinv @ build_jordan(Partition((m, m))) @ p
    else:
        out[host] = build_jordan(host)
    for shape, w in out.items():
        _verify_witness(w, host, shape)
    return out
