"""Partitions, integer vectors and the orderings used for preinjective extensions.

Partitions are plain tuples of non-negative integers in weakly decreasing
order. Zero parts are allowed and, where a partition indexes a direct sum of
indecomposables (``I_c``), they are meaningful: ``(2, 0)`` is ``I_2 + I_0``.
Ordinary partition operations (LR coefficients, strips) ignore trailing zeros.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]
IntVector = tuple[int, ...]


class PartitionError(ValueError):
    """Raised on malformed partition input or violated preconditions."""


def strip(p: Sequence[int]) -> Partition:
    """Drop trailing zeros."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def is_partition(p: Sequence[int]) -> bool:
    return all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def as_partition(p: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in p)
    if not is_partition(p):
        raise PartitionError(f"not a partition: {p}")
    return p


def same_partition(a: Sequence[int], b: Sequence[int]) -> bool:
    return strip(a) == strip(b)


def pad(p: Sequence[int], n: int) -> tuple[int, ...]:
    if len(p) > n:
        raise PartitionError(f"{tuple(p)} has more than {n} entries")
    return tuple(p) + (0,) * (n - len(p))


def _pad_pair(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = max(len(a), len(b))
    return pad(a, n), pad(b, n)


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


_PART_RE = re.compile(r"^\(\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\)$")


def parse_vector(text: str) -> IntVector:
    """Parse ``"(3,2,1)"`` (or a bare ``"3,2,1"``) into a tuple of ints."""
    t = text.strip()
    if not t.startswith("("):
        t = "(" + t + ")"
    if not _PART_RE.match(t):
        raise PartitionError(f"cannot parse {text!r}; expected e.g. (3,2,1)")
    body = t[1:-1].strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def parse_partition(text: str) -> Partition:
    return as_partition(parse_vector(text))


# ---------------------------------------------------------------------------
# orderings


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Prefix-sum comparison; the shorter vector is padded with zeros."""
    a, b = _pad_pair(a, b)
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def dominance_eqsum(a: Sequence[int], b: Sequence[int]) -> bool:
    return sum(a) == sum(b) and dominance_leq(a, b)


def weighted_dominance(a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = _pad_pair(a, b)
    return dominance_leq(
        [i * x for i, x in enumerate(a, 1)], [i * y for i, y in enumerate(b, 1)]
    )


# ---------------------------------------------------------------------------
# generalized majorization
#
# b has m parts, c has m + n parts. The +inf / -inf sentinels are replaced by
# explicit index guards.


def _check_shapes(b: Sequence[int], c: Sequence[int], n: int) -> None:
    if n < 0 or len(c) != len(b) + n:
        raise PartitionError(
            f"expected len(c) == len(b) + n, got len(b)={len(b)}, len(c)={len(c)}, n={n}"
        )


def _b_less_c(b: Sequence[int], c: Sequence[int], j: int, i: int) -> bool:
    """b_j < c_i under the sentinel conventions (1-based indices)."""
    m = len(b)
    if j <= 0:  # b_j = +inf
        return False
    if i > len(c):  # c_i = -inf
        return False
    if j > m:  # b_j = -inf, c_i finite
        return True
    return b[j - 1] < c[i - 1]


def h_indices(b: Sequence[int], c: Sequence[int], n: int) -> tuple[int, ...]:
    """h_q = min{i : b_{i-q+1} < c_i} for q = 1..n (1-based)."""
    _check_shapes(b, c, n)
    m = len(b)
    hs = []
    for q in range(1, n + 1):
        i = q
        while not _b_less_c(b, c, i - q + 1, i):
            i += 1
        assert q <= i <= q + m
        hs.append(i)
    return tuple(hs)


def _prefix(v: Sequence[int], k: int) -> int:
    return sum(v[: max(k, 0)])


def x_vector(b: Sequence[int], c: Sequence[int], n: int) -> IntVector:
    hs = h_indices(b, c, n)
    xs: list[int] = []
    for q, h in enumerate(hs, 1):
        xs.append(_prefix(c, h) - _prefix(b, h - q) - sum(xs))
    return tuple(xs)


def _side_conditions(c: Sequence[int], b: Sequence[int], a: Sequence[int]) -> bool:
    n = len(a)
    return all(b[i] >= c[i + n] for i in range(len(b))) and sum(b) + sum(a) == sum(c)


def gen_maj(c: Sequence[int], b: Sequence[int], a: Sequence[int]) -> bool:
    """Whether (b, a) is a generalized majorization of c.

    ``a`` has n parts, ``b`` has m parts and ``c`` must have m + n parts;
    pad with zeros beforehand if needed.
    """
    n = len(a)
    if len(c) != len(b) + n:
        return False
    if not _side_conditions(c, b, a):
        return False
    for q, h in enumerate(h_indices(b, c, n), 1):
        if _prefix(c, h) - _prefix(b, h - q) > _prefix(a, q):
            return False
    return True


def gen_maj_via_x(c: Sequence[int], b: Sequence[int], a: Sequence[int]) -> bool:
    """Same relation as :func:`gen_maj`, decided by ``x_vector(b, c) <= a``.

    Raises PartitionError unless b_i >= c_{i+n} and |b| + |a| = |c|.
    """
    n = len(a)
    _check_shapes(b, c, n)
    if not _side_conditions(c, b, a):
        raise PartitionError("gen_maj_via_x needs b_i >= c_{i+n} and |b| + |a| = |c|")
    return dominance_eqsum(x_vector(b, c, n), a)


def elementary_gen_maj(c: Sequence[int], b: Sequence[int], a1: int) -> bool:
    if len(c) != len(b) + 1:
        return False
    m = len(b)
    if not all(b[i] >= c[i + 1] for i in range(m)):
        return False
    if sum(b) + a1 != sum(c):
        return False
    (h1,) = h_indices(b, c, 1)
    return all(b[i - 1] == c[i] for i in range(h1, m + 1))


def _elementary_candidates(prev: Partition, a_j: int) -> Iterator[Partition]:
    """All d with len(d) = len(prev)+1, |d| = |prev|+a_j, d_{i+1} <= prev_i."""
    total = sum(prev) + a_j
    m = len(prev)

    def tails(i: int, upper: int, budget: int) -> Iterator[tuple[int, ...]]:
        # choose d_{i+1}, ..., d_{m+1} (0-based positions i..m)
        if i > m:
            yield ()
            return
        hi = min(prev[i - 1], upper, budget)
        for v in range(hi, -1, -1):
            for rest in tails(i + 1, v, budget - v):
                yield (v,) + rest

    for tail in tails(1, total, total):
        first = total - sum(tail)
        if tail and first < tail[0]:
            continue
        yield (first,) + tail


def elementary_chain_witness(
    c: Sequence[int], b: Sequence[int], a: Sequence[int]
) -> Optional[tuple[Partition, ...]]:
    """A chain b = d^0, d^1, ..., d^n = c of elementary majorizations, or None."""
    c, b, a = tuple(c), tuple(b), tuple(a)
    n = len(a)
    if len(c) != len(b) + n:
        return None

    @lru_cache(maxsize=None)
    def search(j: int, d: Partition) -> Optional[tuple[Partition, ...]]:
        if j == n:
            return (d,) if d == c else None
        nxt = a[j]
        for cand in _elementary_candidates(d, nxt):
            if j + 1 == n and cand != c:
                continue
            if not elementary_gen_maj(cand, d, nxt):
                continue
            rest = search(j + 1, cand)
            if rest is not None:
                return (d,) + rest
        return None

    return search(0, b)


# ---------------------------------------------------------------------------
# strips and Littlewood-Richardson


def is_horizontal_strip(nu: Sequence[int], lam: Sequence[int]) -> Optional[int]:
    """Length of the horizontal strip nu/lam, or None if it is not one."""
    nu, lam = strip(nu), strip(lam)
    if len(lam) > len(nu):
        return None
    lam_p = pad(lam, len(nu))
    if any(l > v for l, v in zip(lam_p, nu)):
        return None
    if any(nu[i + 1] > lam_p[i] for i in range(len(nu) - 1)):
        return None
    return sum(nu) - sum(lam)


def strip_extensions(lam: Sequence[int], t: int) -> frozenset[Partition]:
    """All nu with nu/lam a horizontal t-strip."""
    lam = strip(lam)
    out = set()
    k = len(lam)

    def rec(i: int, left: int, acc: tuple[int, ...]) -> None:
        # row i (0-based) may grow up to lam[i-1] (row above, old shape)
        if i == k + 1:
            if left == 0:
                out.add(strip(acc))
            return
        cur = lam[i] if i < k else 0
        cap = left if i == 0 else min(left, lam[i - 1] - cur)
        for g in range(cap + 1):
            rec(i + 1, left - g, acc + (cur + g,))

    if t >= 0:
        rec(0, t, ())
    return frozenset(out)


def strip_restrictions(lam: Sequence[int], t: int) -> frozenset[Partition]:
    """All mu contained in lam with lam/mu a horizontal t-strip."""
    lam = strip(lam)
    out = set()
    k = len(lam)

    def rec(i: int, left: int, acc: tuple[int, ...]) -> None:
        if i == k:
            if left == 0:
                out.add(strip(acc))
            return
        lower = lam[i + 1] if i + 1 < k else 0
        for s in range(min(left, lam[i] - lower) + 1):
            rec(i + 1, left - s, acc + (lam[i] - s,))

    if t >= 0:
        rec(0, t, ())
    return frozenset(out)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(l > v for l, v in zip(lam, nu)):
        return 0
    if not mu:
        return 1
    lam_p = pad(lam, len(nu))
    # cells of nu/lam in reverse reading order: rows top to bottom, right to left
    cells = [(r, col) for r in range(len(nu)) for col in range(nu[r] - 1, lam_p[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)
    total = 0

    def rec(k: int) -> None:
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, col = cells[k]
        hi = len(mu)
        right = filling.get((r, col + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, col))
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] == mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, col)] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
            del filling[(r, col)]

    rec(0)
    return total


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu} by LR tableau enumeration."""
    return _lr(strip(lam), strip(mu), strip(nu))


def partitions_of(n: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n (no zero parts), largest parts first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, None if max_parts is None else max_parts - 1, first):
            yield (first,) + rest


def _contained_in(lam: Partition, bound: Partition) -> bool:
    return len(lam) <= len(bound) and all(x <= y for x, y in zip(lam, bound))


def lr_expansions(lam: Sequence[int], mu: Sequence[int]) -> frozenset[Partition]:
    lam, mu = strip(lam), strip(mu)
    n = sum(lam) + sum(mu)
    out = set()
    # nu contains both lam and mu and has at most len(lam)+len(mu) rows
    for nu in partitions_of(n, len(lam) + len(mu)):
        if _contained_in(lam, nu) and _contained_in(mu, nu) and lr_coeff(lam, mu, nu) > 0:
            out.add(nu)
    return frozenset(out)


# ---------------------------------------------------------------------------
# dominance lattice helpers


def dominated_partitions(a: Sequence[int]) -> frozenset[Partition]:
    """Partitions alpha (padded to len(a)) with alpha <= a in dominance order."""
    n = len(a)
    out = set()
    for p in partitions_of(sum(a), n):
        alpha = pad(p, n)
        if dominance_leq(alpha, a):
            out.add(alpha)
    return frozenset(out)


def _concave_majorant(points: list[Fraction]) -> list[Fraction]:
    """Least concave majorant of (i, points[i]), endpoints fixed."""
    hull: list[int] = []
    for i in range(len(points)):
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            if (points[i1] - points[i0]) * (i - i0) <= (points[i] - points[i0]) * (i1 - i0):
                hull.pop()
            else:
                break
        hull.append(i)
    out = list(points)
    for i0, i1 in zip(hull, hull[1:]):
        for i in range(i0, i1 + 1):
            out[i] = points[i0] + (points[i1] - points[i0]) * (i - i0) / (i1 - i0)
    return out


def minimal_dominating_partition(x: Sequence[int]) -> Optional[Partition]:
    """The dominance-minimal partition a (len(a) = len(x)) with x <= a, or None.

    Integer least concave majorant of the prefix sums: take the real majorant,
    round up, and repeat until the rounded sequence is itself concave.
    """
    n = len(x)
    if n == 0:
        return ()
    cur = [Fraction(s) for s in (0, *accumulate(x))]
    while True:
        nxt = [Fraction(math.ceil(v)) for v in _concave_majorant(cur)]
        if nxt == cur:
            break
        cur = nxt
    parts = tuple(int(cur[i + 1] - cur[i]) for i in range(n))
    if parts[-1] < 0:
        return None
    return parts
