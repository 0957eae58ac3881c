"""Kronecker representations as matrix pairs over F_q.

A representation of dimension vector (a, b) is a pair of a x b matrices
(A, B): two maps from the b-dimensional space to the a-dimensional one.
With this orientation P_0 = (1, 0) is simple projective, I_0 = (0, 1) is
simple injective and dim Ext(I_0, P_0) = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from numba import njit

from ..symbols import DimVector
from .linalg import inverse, rank
from .points import Point, companion, poly_pow


@dataclass(frozen=True, eq=False)
class Representation:
    q: int
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self) -> None:
        A = np.asarray(self.A, dtype=np.int64) % self.q
        B = np.asarray(self.B, dtype=np.int64) % self.q
        if A.ndim != 2 or A.shape != B.shape:
            raise ValueError(f"structure maps must share a 2-d shape, got {A.shape} and {B.shape}")
        A.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def dim(self) -> DimVector:
        return DimVector(*self.A.shape)

    def key(self) -> tuple:
        return (self.q, self.A.shape, self.A.tobytes(), self.B.tobytes())

    @classmethod
    def zero(cls, q: int, a: int = 0, b: int = 0) -> "Representation":
        return cls(q, np.zeros((a, b), dtype=np.int64), np.zeros((a, b), dtype=np.int64))


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    q = reps[0].q
    a = sum(r.dim.a for r in reps)
    b = sum(r.dim.b for r in reps)
    A = np.zeros((a, b), dtype=np.int64)
    B = np.zeros((a, b), dtype=np.int64)
    i = j = 0
    for r in reps:
        ra, rb = r.dim
        A[i : i + ra, j : j + rb] = r.A
        B[i : i + ra, j : j + rb] = r.B
        i, j = i + ra, j + rb
    return Representation(q, A, B)


def change_basis(rep: Representation, Ga: np.ndarray, Gb: np.ndarray) -> Representation:
    """The isomorphic representation (Ga A Gb^-1, Ga B Gb^-1)."""
    q = rep.q
    Gb_inv = inverse(Gb, q) if Gb.size else Gb
    return Representation(q, Ga @ rep.A @ Gb_inv, Ga @ rep.B @ Gb_inv)


# ---------------------------------------------------------------------------
# indecomposables


def proj_rep(n: int, q: int) -> Representation:
    A = np.zeros((n + 1, n), dtype=np.int64)
    B = np.zeros((n + 1, n), dtype=np.int64)
    for j in range(n):
        A[j, j] = 1
        B[j + 1, j] = 1
    return Representation(q, A, B)


def inj_rep(n: int, q: int) -> Representation:
    A = np.zeros((n, n + 1), dtype=np.int64)
    B = np.zeros((n, n + 1), dtype=np.int64)
    for i in range(n):
        A[i, i] = 1
        B[i, i + 1] = 1
    return Representation(q, A, B)


def reg_rep(point: Point, t: int) -> Representation:
    q = point.q
    if t < 1:
        raise ValueError("regular length must be >= 1")
    if point.is_infinity:
        J = np.zeros((t, t), dtype=np.int64)
        for i in range(1, t):
            J[i, i - 1] = 1
        return Representation(q, J, np.eye(t, dtype=np.int64))
    C = companion(poly_pow(point.coeffs, t, q), q)
    return Representation(q, np.eye(C.shape[0], dtype=np.int64), C)


IndecSpec = Union[tuple[str, int], tuple[str, Point, int]]


def build_indec(spec: IndecSpec, q: int) -> Representation:
    """``("P", n)``, ``("I", n)`` or ``("R", point, t)``."""
    kind = spec[0]
    if kind == "P":
        return proj_rep(spec[1], q)
    if kind == "I":
        return inj_rep(spec[1], q)
    if kind == "R":
        point, t = spec[1], spec[2]
        if point.q != q:
            raise ValueError("point lives over a different field")
        from .points import is_irreducible

        if not point.is_infinity and not is_irreducible(point.coeffs, q):
            raise ValueError(f"{point} is not irreducible")
        return reg_rep(point, t)
    raise ValueError(f"unknown indecomposable kind {kind!r}")


# ---------------------------------------------------------------------------
# Hom and Ext


@njit(cache=True)
def _delta_matrix(AM, BM, AN, BN, q):
    Na, Nb = AN.shape
    Ma, Mb = AM.shape
    D = np.zeros((2 * Na * Mb, Na * Ma + Nb * Mb), dtype=np.int64)
    off = Na * Mb
    # row (i, j) <-> entry (i, j) of an Na x Mb map, index j * Na + i
    for j in range(Mb):
        for i in range(Na):
            row = j * Na + i
            # (f_a A_M)[i, j] = sum_k f_a[i, k] A_M[k, j];  f_a[i, k] -> k * Na + i
            for k in range(Ma):
                D[row, k * Na + i] = AM[k, j]
                D[off + row, k * Na + i] = BM[k, j]
            # (A_N f_b)[i, j] = sum_k A_N[i, k] f_b[k, j];  f_b[k, j] -> Na*Ma + j * Nb + k
            for k in range(Nb):
                D[row, Na * Ma + j * Nb + k] = (q - AN[i, k]) % q
                D[off + row, Na * Ma + j * Nb + k] = (q - BN[i, k]) % q
    return D


def _delta(M: Representation, N: Representation) -> np.ndarray:
    """Matrix of (f_a, f_b) -> (f_a A_M - A_N f_b, f_a B_M - B_N f_b).

    Unknowns: vec(f_a) (N_a x M_a), then vec(f_b) (N_b x M_b), column-major;
    rows: vec of the two N_a x M_b components, column-major.
    """
    return _delta_matrix(M.A, M.B, N.A, N.B, M.q)


def hom_dim_repr(M: Representation, N: Representation) -> int:
    Ma, Mb = M.dim
    Na, Nb = N.dim
    unknowns = Ma * Na + Mb * Nb
    if unknowns == 0:
        return 0
    return unknowns - rank(_delta(M, N), M.q)


def ext_dim_repr(M: Representation, N: Representation) -> int:
    """dim Ext^1(M, N) as the cokernel dimension of the Ringel map."""
    target = 2 * N.dim.a * M.dim.b
    if target == 0:
        return 0
    return target - rank(_delta(M, N), M.q)
