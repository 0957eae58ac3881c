"""Decompose a representation into indecomposables using Hom dimensions.

Multiplicities are read off triangular systems:

* dim Hom(X, P_m) only sees preprojective summands P_n, n <= m;
* dim Hom(I_m, X) only sees preinjective summands I_n, n <= m;
* dim Hom(R_x(t), X) sees summands in the tube at x, plus t*deg(x) per
  preinjective summand.

The answer is rebuilt and checked against Hom dimensions in both directions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from ..symbols import SegreEntry, SegreSymbol, Symbol
from .points import Point, points_of_degree
from .reps import Representation, direct_sum, hom_dim_repr, inj_rep, proj_rep, reg_rep


class ClassificationError(RuntimeError):
    """Hom dimensions admit no decomposition: a bug, not bad input."""


class ConcreteClass(NamedTuple):
    """An isomorphism class: symbol data plus the actual points of regular summands."""

    proj: tuple[int, ...]
    regular: tuple[tuple[Point, tuple[int, ...]], ...]  # sorted (point, partition)
    inj: tuple[int, ...]

    @property
    def symbol(self) -> Symbol:
        return Symbol(
            self.proj,
            SegreSymbol(tuple(SegreEntry(lam, p.degree) for p, lam in self.regular)),
            self.inj,
        )

    def __str__(self) -> str:
        reg = " ".join(f"{'(' + ','.join(map(str, lam)) + ')'}@[{p}]" for p, lam in self.regular)
        return " ".join(
            [*(f"P{n}" for n in self.proj), "|", reg, "|", *(f"I{n}" for n in self.inj)]
        ).replace("|  |", "||")


def _point_key(p: Point) -> tuple:
    return (p.degree, p.coeffs is None, p.coeffs or ())


def make_class(proj, regular, inj) -> ConcreteClass:
    reg = tuple(sorted(((p, tuple(lam)) for p, lam in regular), key=lambda e: (_point_key(e[0]), e[1])))
    return ConcreteClass(
        tuple(sorted(proj, reverse=True)), reg, tuple(sorted(inj, reverse=True))
    )


@lru_cache(maxsize=None)
def _proj(n: int, q: int) -> Representation:
    return proj_rep(n, q)


@lru_cache(maxsize=None)
def _inj(n: int, q: int) -> Representation:
    return inj_rep(n, q)


@lru_cache(maxsize=None)
def _reg(point: Point, t: int) -> Representation:
    return reg_rep(point, t)


def realize(cls: ConcreteClass, q: int) -> Representation:
    parts = [_proj(n, q) for n in cls.proj]
    for p, lam in cls.regular:
        parts.extend(_reg(p, t) for t in lam)
    parts.extend(_inj(n, q) for n in cls.inj)
    if not parts:
        return Representation.zero(q)
    return direct_sum(*parts)


def _second_differences(h: list[int]) -> list[int]:
    """m_k = h_k - 2 h_{k-1} + h_{k-2} with h_{-1} = h_{-2} = 0."""
    ext = [0, 0] + h
    return [ext[k + 2] - 2 * ext[k + 1] + ext[k] for k in range(len(h))]


def _classify(X: Representation) -> ConcreteClass:
    q = X.q
    a, b = X.dim
    # preprojectives: h_m = sum_{n<=m} p_n (m - n + 1), m = 0..b
    h = [hom_dim_repr(X, _proj(m, q)) for m in range(b + 1)]
    p_mult = _second_differences(h)
    # preinjectives: g_m = sum_{n<=m} i_n (m - n + 1), m = 0..a
    g = [hom_dim_repr(_inj(m, q), X) for m in range(a + 1)]
    i_mult = _second_differences(g)
    if min(p_mult, default=0) < 0 or min(i_mult, default=0) < 0:
        raise ClassificationError(f"negative multiplicity for {X.A.tolist()} {X.B.tolist()}")
    proj = [n for n, k in enumerate(p_mult) for _ in range(k)]
    inj = [n for n, k in enumerate(i_mult) for _ in range(k)]
    n_inj = len(inj)
    ra = a - sum(n + 1 for n in proj) - sum(inj)
    rb = b - sum(proj) - sum(n + 1 for n in inj)
    if ra != rb or ra < 0:
        raise ClassificationError(f"regular part has unbalanced dimension ({ra}, {rb})")
    regular = []
    left = ra
    deg = 1
    while left > 0 and deg <= ra:
        for pt in points_of_degree(q, deg):
            if left == 0:
                break
            if deg > left:
                break
            base = [hom_dim_repr(_reg(pt, 1), X) - deg * n_inj]
            if base[0] == 0:
                continue
            # f_t = sum_s m_s min(t, s), up to t = left // deg + 1
            tmax = left // deg
            f = [0] + [base[0] // deg]
            for t in range(2, tmax + 2):
                f.append((hom_dim_repr(_reg(pt, t), X) - t * deg * n_inj) // deg)
            lam = []
            for s in range(1, tmax + 1):
                mult = 2 * f[s] - f[s - 1] - f[s + 1]
                if mult < 0:
                    raise ClassificationError("negative tube multiplicity")
                lam.extend([s] * mult)
            lam.sort(reverse=True)
            if not lam:
                raise ClassificationError("tube detected without summands")
            regular.append((pt, tuple(lam)))
            left -= deg * sum(lam)
        deg += 1
    if left != 0:
        raise ClassificationError("regular part not exhausted by tubes")
    return make_class(proj, regular, inj)


_CACHE: dict[tuple, ConcreteClass] = {}


def classify_concrete(X: Representation, verify: bool = False) -> ConcreteClass:
    key = X.key()
    hit = _CACHE.get(key)
    if hit is not None and not verify:
        return hit
    cls = _classify(X)
    if verify:
        Y = realize(cls, X.q)
        for T in (X, Y):
            if hom_dim_repr(T, X) != hom_dim_repr(T, Y) or hom_dim_repr(X, T) != hom_dim_repr(Y, T):
                raise ClassificationError("rebuilt module has different Hom dimensions")
    _CACHE[key] = cls
    return cls


def classify(X: Representation) -> Symbol:
    """The decomposition symbol of X (verified by rebuilding)."""
    return classify_concrete(X, verify=True).symbol
