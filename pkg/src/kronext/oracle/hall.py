"""Hall numbers and exact frames, checked on concrete isomorphism classes.

Both checks read everything from a :class:`SubmoduleTable`: a short exact
sequence ``0 -> U -> X -> Q -> 0`` exists iff ``(Q, U)`` occurs among the
(quotient, sub) pairs of X.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from ..monoid import product
from ..symbols import DimVector, Symbol, dim_vector, symbols_up_to
from .classify import ConcreteClass, make_class, realize
from .extensions import SubmoduleTable, enumerate_concrete
from .reps import ext_dim_repr


def concrete_sum(M: ConcreteClass, N: ConcreteClass) -> ConcreteClass:
    """Class of M + N; tube summands at a shared point are merged."""
    tubes: dict = defaultdict(list)
    for p, lam in M.regular + N.regular:
        tubes[p].extend(lam)
    regular = [(p, tuple(sorted(parts, reverse=True))) for p, parts in tubes.items()]
    return make_class(M.proj + N.proj, regular, M.inj + N.inj)


def concrete_classes_up_to(max_dim: tuple[int, int], q: int) -> list[ConcreteClass]:
    out = []
    for sym in symbols_up_to(max_dim):
        out.extend(enumerate_concrete(sym, q))
    return out


def _dim(X: ConcreteClass) -> DimVector:
    return dim_vector(X.symbol)


# ---------------------------------------------------------------------------
# Hall numbers


def hall_membership(
    mu: Symbol, nu1: Symbol, nu2: Symbol, q: int, table: Optional[SubmoduleTable] = None
) -> tuple[bool, bool]:
    """(some F^M_{N1 N2} > 0 over point choices, [mu] in product(nu1, nu2))."""
    table = table or SubmoduleTable(q)
    oracle = False
    N1s, N2s = set(enumerate_concrete(nu1, q)), set(enumerate_concrete(nu2, q))
    for M in enumerate_concrete(mu, q):
        if any(Q in N1s and S in N2s for Q, S in table.pairs(M)):
            oracle = True
            break
    return oracle, mu in product(nu1, nu2)


def hall_triples(max_dim: tuple[int, int]) -> Iterator[tuple[Symbol, Symbol, Symbol]]:
    """(mu, nu1, nu2) with dim mu = dim nu1 + dim nu2 <= max_dim."""
    syms = symbols_up_to(max_dim)
    by_dim = defaultdict(list)
    for s in syms:
        by_dim[dim_vector(s)].append(s)
    for nu1 in syms:
        for nu2 in syms:
            d = dim_vector(nu1) + dim_vector(nu2)
            if d.a <= max_dim[0] and d.b <= max_dim[1]:
                for mu in by_dim[d]:
                    yield mu, nu1, nu2


# ---------------------------------------------------------------------------
# exact frames


@dataclass(frozen=True)
class FrameWitness:
    A: ConcreteClass
    B: ConcreteClass
    C: ConcreteClass
    D: ConcreteClass


def find_frame(
    M: ConcreteClass, N: ConcreteClass, X: ConcreteClass, Y: ConcreteClass, table: SubmoduleTable
) -> Optional[FrameWitness]:
    """A, B, C, D with 0->D->Y->B->0, 0->B->M->A->0, 0->D->N->C->0, 0->C->X->A->0 exact."""
    by_sub_N = defaultdict(list)
    for C, D in table.pairs(N):
        by_sub_N[D].append(C)
    by_sub_M = defaultdict(list)
    for A, B in table.pairs(M):
        by_sub_M[B].append(A)
    on_X = table.pairs(X)
    for B, D in table.pairs(Y):
        for C in by_sub_N.get(D, ()):
            for A in by_sub_M.get(B, ()):
                if on_X[(A, C)] > 0:
                    return FrameWitness(A, B, C, D)
    return None


def green_frame_check(
    M: ConcreteClass,
    N: ConcreteClass,
    X: ConcreteClass,
    Y: ConcreteClass,
    q: int,
    table: Optional[SubmoduleTable] = None,
) -> tuple[bool, bool]:
    """(0 -> Y -> M+N -> X -> 0 exists, an exact frame exists). Needs Ext(M, N) = 0."""
    table = table or SubmoduleTable(q)
    if ext_dim_repr(realize(M, q), realize(N, q)) != 0:
        raise ValueError("green_frame_check needs Ext(M, N) = 0")
    cross = table.pairs(concrete_sum(M, N))[(X, Y)] > 0
    frame = find_frame(M, N, X, Y, table) is not None
    return cross, frame


def frame_quadruples(max_dim: tuple[int, int], q: int) -> Iterator[tuple[ConcreteClass, ...]]:
    """(M, N, X, Y) with Ext(M, N) = 0 and dim X + dim Y = dim M + dim N <= max_dim."""
    classes = concrete_classes_up_to(max_dim, q)
    by_dim = defaultdict(list)
    for c in classes:
        by_dim[_dim(c)].append(c)
    for M in classes:
        for N in classes:
            total = _dim(M) + _dim(N)
            if total.a > max_dim[0] or total.b > max_dim[1]:
                continue
            if ext_dim_repr(realize(M, q), realize(N, q)) != 0:
                continue
            for X in classes:
                dx = _dim(X)
                if dx.a > total.a or dx.b > total.b:
                    continue
                for Y in by_dim[total - dx]:
                    yield M, N, X, Y
