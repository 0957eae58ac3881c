"""Closed points of the projective line over F_q: monic irreducibles plus infinity."""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import NamedTuple, Optional

import numpy as np


class Point(NamedTuple):
    """``coeffs`` lists a monic polynomial low degree first; ``None`` is infinity."""

    q: int
    coeffs: Optional[tuple[int, ...]]

    @property
    def degree(self) -> int:
        return 1 if self.coeffs is None else len(self.coeffs) - 1

    @property
    def is_infinity(self) -> bool:
        return self.coeffs is None

    def __str__(self) -> str:
        if self.coeffs is None:
            return "inf"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def infinity(q: int) -> Point:
    return Point(q, None)


def poly_mod(a: tuple[int, ...], b: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Remainder of a by the monic polynomial b (coefficients low first)."""
    r = [x % q for x in a]
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        c, shift = r[-1], len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % q
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def poly_mul(a: tuple[int, ...], b: tuple[int, ...], q: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return tuple(out)


def poly_pow(a: tuple[int, ...], t: int, q: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(t):
        out = poly_mul(out, a, q)
    return out


def monic_polys(q: int, degree: int):
    for low in cartesian(range(q), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(coeffs: tuple[int, ...], q: int) -> bool:
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in monic_polys(q, k):
            if not any(poly_mod(coeffs, f, q)):
                return False
    return True


def make_point(coeffs: tuple[int, ...], q: int) -> Point:
    coeffs = tuple(int(c) % q for c in coeffs)
    if not is_irreducible(coeffs, q):
        raise ValueError(f"polynomial {coeffs} is not monic irreducible over F_{q}")
    return Point(q, coeffs)


@lru_cache(maxsize=None)
def points_of_degree(q: int, degree: int) -> tuple[Point, ...]:
    pts = [Point(q, f) for f in monic_polys(q, degree) if is_irreducible(f, q)]
    if degree == 1:
        pts.append(infinity(q))
    return tuple(pts)


def companion(coeffs: tuple[int, ...], q: int) -> np.ndarray:
    """Companion matrix of a monic polynomial: subdiagonal ones, last column -c."""
    n = len(coeffs) - 1
    C = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        C[i, i - 1] = 1
    for i in range(n):
        C[i, n - 1] = (-coeffs[i]) % q
    return C
