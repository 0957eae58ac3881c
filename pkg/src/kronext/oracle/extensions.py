"""Brute-force extension data over F_q.

Two independent routes to the middle terms of ``0 -> N -> X -> M -> 0``:

* :func:`ext_middle_terms` glues M and N along every extension class
  (upper block-triangular structure maps) and classifies the result;
* :class:`SubmoduleTable` walks every subrepresentation U of every module X
  of a given dimension and records ``(class of X/U, class of U)``. This is
  the Hall-number route and scales to the full verification sweep.
"""

from __future__ import annotations

from collections import Counter
from itertools import product as cartesian
from typing import Iterator

import numpy as np

from ..symbols import Symbol, dim_vector, symbols_of_dim
from .classify import ConcreteClass, classify_concrete, make_class, realize
from .linalg import encode, rref, subspace_index, subspaces, supersets
from .points import points_of_degree
from .reps import Representation, _delta

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# decomposition classes


def enumerate_concrete(sym: Symbol, q: int) -> list[ConcreteClass]:
    """Every isomorphism class in S(sym, F_q): distinct points for distinct entries."""
    entries = list(sym.regular)
    out: set[ConcreteClass] = set()

    def rec(k: int, used: frozenset, acc: list) -> None:
        if k == len(entries):
            out.add(make_class(sym.proj, acc, sym.inj))
            return
        lam, d = entries[k]
        for pt in points_of_degree(q, d):
            if pt not in used:
                acc.append((pt, lam))
                rec(k + 1, used | {pt}, acc)
                acc.pop()

    rec(0, frozenset(), [])
    return sorted(out, key=str)


def enumerate_class(sym: Symbol, q: int) -> list[Representation]:
    """One representation per isomorphism class in S(sym, F_q)."""
    return [realize(c, q) for c in enumerate_concrete(sym, q)]


# ---------------------------------------------------------------------------
# gluing route


def _ext_representatives(M: Representation, N: Representation) -> tuple[np.ndarray, list[int]]:
    """Gluing coordinates outside the image of the Ringel map.

    Returns (im_basis_rref, free_coordinates); the free coordinates index a
    complement of the coboundaries, so they enumerate Ext^1(M, N) once each.
    """
    q = M.q
    D = _delta(M, N)
    R, piv = rref(D.T, q)  # row space of D^T = column space of D
    n_coords = D.shape[0]
    free = [c for c in range(n_coords) if c not in piv]
    return R[: len(piv)], free


def _glue(M: Representation, N: Representation, coords: np.ndarray) -> Representation:
    Na, Nb = N.dim
    Ma, Mb = M.dim
    half = Na * Mb
    EA = coords[:half].reshape(Mb, Na).T  # column-major vec of an Na x Mb block
    EB = coords[half:].reshape(Mb, Na).T
    A = np.zeros((Na + Ma, Nb + Mb), dtype=np.int64)
    B = np.zeros_like(A)
    A[:Na, :Nb], A[:Na, Nb:], A[Na:, Nb:] = N.A, EA, M.A
    B[:Na, :Nb], B[:Na, Nb:], B[Na:, Nb:] = N.B, EB, M.B
    return Representation(M.q, A, B)


def ext_classes(
    M: Representation, N: Representation, budget: int = DEFAULT_BUDGET, full_space: bool = False
) -> set[ConcreteClass]:
    """Concrete classes of all middle terms X of 0 -> N -> X -> M -> 0.

    By default only one gluing per extension class is tried; ``full_space``
    walks every pair of off-diagonal blocks instead.
    """
    q = M.q
    n_coords = 2 * N.dim.a * M.dim.b
    if full_space:
        free = list(range(n_coords))
    else:
        _, free = _ext_representatives(M, N) if n_coords else (None, [])
    if q ** len(free) > budget:
        raise BudgetExceeded(f"Ext group has {q}^{len(free)} elements (budget {budget})")
    out = set()
    for vals in cartesian(range(q), repeat=len(free)):
        coords = np.zeros(n_coords, dtype=np.int64)
        coords[free] = vals
        out.add(classify_concrete(_glue(M, N, coords)))
    return out


def ext_middle_terms(
    alpha: Symbol, beta: Symbol, q: int, budget: int = DEFAULT_BUDGET, full_space: bool = False
) -> frozenset[Symbol]:
    """Symbols of all extensions of a module in S(alpha) by a module in S(beta)."""
    out: set[Symbol] = set()
    for M in enumerate_class(alpha, q):
        for N in enumerate_class(beta, q):
            out |= {c.symbol for c in ext_classes(M, N, budget, full_space)}
    return frozenset(out)


# ---------------------------------------------------------------------------
# submodule route


def _reduce_columns(V: np.ndarray, Ua, q: int) -> np.ndarray:
    """Reduce the columns of V modulo the RREF subspace Ua."""
    if Ua.dim:
        V = (V - Ua.basis.T @ V[list(Ua.pivots), :]) % q
    return V


def sub_and_quotient(X: Representation, Ua, Ub) -> tuple[Representation, Representation]:
    """Restriction to U = (Ua, Ub) and the induced quotient X/U (RREF bases)."""
    q = X.q
    a, b = X.dim
    # sub: images of the U_b basis, read in U_a coordinates (pivot entries)
    pa = list(Ua.pivots)
    SA = (X.A @ Ub.basis.T)[pa, :] % q
    SB = (X.B @ Ub.basis.T)[pa, :] % q
    # quotient: complement spanned by standard vectors at non-pivot coordinates
    ca = [i for i in range(a) if i not in Ua.pivots]
    cb = [j for j in range(b) if j not in Ub.pivots]
    QA = _reduce_columns(X.A[:, cb], Ua, q)[ca, :]
    QB = _reduce_columns(X.B[:, cb], Ua, q)[ca, :]
    return Representation(q, SA, SB), Representation(q, QA, QB)


def _image_span(X: Representation, Ub, q: int) -> frozenset[int]:
    """Members of A(U_b) + B(U_b)."""
    a = X.dim.a
    gens = np.vstack([(X.A @ Ub.basis.T).T, (X.B @ Ub.basis.T).T]) % q if Ub.dim else np.zeros((0, a), dtype=np.int64)
    if gens.shape[0] == 0:
        return frozenset({0})
    R, piv = rref(gens, q)
    basis = R[: len(piv)]
    members = set()
    for coeffs in cartesian(range(q), repeat=len(piv)):
        members.add(encode((np.array(coeffs, dtype=np.int64) @ basis) % q, q))
    return frozenset(members)


def subrepresentations(X: Representation) -> Iterator[tuple]:
    """Yield (Ua, Ub) for every subrepresentation of X."""
    q = X.q
    a, b = X.dim
    subs_a, subs_b = subspaces(a, q), subspaces(b, q)
    index_a = subspace_index(a, q)
    sup_a = supersets(a, q)
    for Ub in subs_b:
        W = index_a[_image_span(X, Ub, q)]
        for ia in sup_a[W]:
            yield subs_a[ia], Ub


def submodule_pairs(X: Representation) -> Counter:
    """Counter of (class of X/U, class of U) over all subrepresentations U."""
    out: Counter = Counter()
    for Ua, Ub in subrepresentations(X):
        S, Q = sub_and_quotient(X, Ua, Ub)
        out[(classify_concrete(Q), classify_concrete(S))] += 1
    return out


def hall_number(M: ConcreteClass, N1: ConcreteClass, N2: ConcreteClass, q: int) -> int:
    """F^M_{N1 N2}: subrepresentations U of M with U ~ N2 and M/U ~ N1."""
    return submodule_pairs(realize(M, q))[(N1, N2)]


class SubmoduleTable:
    """Lazily built map: concrete middle term -> Counter of (quotient, sub) classes."""

    def __init__(self, q: int):
        self.q = q
        self._pairs: dict[ConcreteClass, Counter] = {}

    def pairs(self, X: ConcreteClass) -> Counter:
        hit = self._pairs.get(X)
        if hit is None:
            hit = submodule_pairs(realize(X, self.q))
            self._pairs[X] = hit
        return hit

    def update(self, other: dict) -> None:
        self._pairs.update(other)

    def classes_of_dim(self, dim: tuple[int, int]) -> list[ConcreteClass]:
        out = []
        for sym in symbols_of_dim(dim):
            out.extend(enumerate_concrete(sym, self.q))
        return out

    def middle_terms(self, M: ConcreteClass, N: ConcreteClass) -> set[ConcreteClass]:
        dim = dim_vector(M.symbol) + dim_vector(N.symbol)
        return {X for X in self.classes_of_dim(dim) if self.pairs(X)[(M, N)] > 0}

    def symbol_product(self, alpha: Symbol, beta: Symbol) -> frozenset[Symbol]:
        """Oracle version of S(alpha) * S(beta)."""
        dim = dim_vector(alpha) + dim_vector(beta)
        out = set()
        for X in self.classes_of_dim(dim):
            if any(Q.symbol == alpha and S.symbol == beta for Q, S in self.pairs(X)):
                out.add(X.symbol)
        return frozenset(out)
