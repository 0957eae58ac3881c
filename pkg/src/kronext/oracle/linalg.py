"""Exact linear algebra over prime fields F_q on small integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

import numpy as np
from numba import njit


def rref(M: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod q and the pivot columns."""
    R = np.array(M, dtype=np.int64) % q
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            R[[r, p]] = R[[p, r]]
        inv = pow(int(R[r, c]), -1, q)
        R[r] = (R[r] * inv) % q
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            R[nzr] = (R[nzr] - np.outer(col[nzr], R[r])) % q
        pivots.append(c)
        r += 1
    return R, pivots


@njit(cache=True)
def _rank_mod(R: np.ndarray, q: int) -> int:
    rows, cols = R.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = -1
        for i in range(r, rows):
            if R[i, c] % q != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for k in range(cols):
                R[r, k], R[p, k] = R[p, k], R[r, k]
        piv = R[r, c] % q
        inv = 1
        while (piv * inv) % q != 1:
            inv += 1
        for k in range(c, cols):
            R[r, k] = (R[r, k] * inv) % q
        for i in range(r + 1, rows):
            f = R[i, c] % q
            if f != 0:
                for k in range(c, cols):
                    R[i, k] = (R[i, k] - f * R[r, k]) % q
        r += 1
    return r


def rank(M: np.ndarray, q: int) -> int:
    if M.size == 0:
        return 0
    return int(_rank_mod(np.array(M, dtype=np.int64) % q, q))


def nullspace(M: np.ndarray, q: int) -> np.ndarray:
    """Basis of {v : M v = 0} as rows."""
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref(M, q)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(piv):
            basis[k, p] = (-R[i, f]) % q
    return basis


def row_space(M: np.ndarray, q: int) -> np.ndarray:
    """RREF basis (nonzero rows) of the row space."""
    if M.size == 0:
        return np.zeros((0, M.shape[1]), dtype=np.int64)
    R, piv = rref(M, q)
    return R[: len(piv)]


def inverse(M: np.ndarray, q: int) -> np.ndarray:
    n = M.shape[0]
    R, piv = rref(np.hstack([M % q, np.eye(n, dtype=np.int64)]), q)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return R[:, n:]


def encode(v, q: int) -> int:
    """Vector -> integer (base q, first coordinate most significant)."""
    out = 0
    for x in v:
        out = out * q + int(x)
    return out


@dataclass(frozen=True)
class Subspace:
    basis: np.ndarray  # RREF rows
    pivots: tuple[int, ...]
    members: frozenset[int]  # encoded vectors

    @property
    def dim(self) -> int:
        return len(self.pivots)


def _members(basis: np.ndarray, q: int) -> frozenset[int]:
    k, n = basis.shape
    if k == 0:
        return frozenset({0})
    out = set()
    for coeffs in cartesian(range(q), repeat=k):
        out.add(encode((np.array(coeffs) @ basis) % q, q))
    return frozenset(out)


@lru_cache(maxsize=None)
def subspaces(n: int, q: int) -> tuple[Subspace, ...]:
    """Every subspace of F_q^n, each given by its RREF basis."""
    out = []
    for k in range(n + 1):
        for piv in _combinations(n, k):
            free_slots = [(i, c) for i, p in enumerate(piv) for c in range(p + 1, n) if c not in piv]
            for vals in cartesian(range(q), repeat=len(free_slots)):
                B = np.zeros((k, n), dtype=np.int64)
                for i, p in enumerate(piv):
                    B[i, p] = 1
                for (i, c), v in zip(free_slots, vals):
                    B[i, c] = v
                B.setflags(write=False)
                out.append(Subspace(B, piv, _members(B, q)))
    return tuple(out)


def _combinations(n: int, k: int):
    from itertools import combinations

    return combinations(range(n), k)


@lru_cache(maxsize=None)
def subspace_index(n: int, q: int) -> dict[frozenset[int], int]:
    return {s.members: i for i, s in enumerate(subspaces(n, q))}


@lru_cache(maxsize=None)
def supersets(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """For each subspace index, the indices of all subspaces containing it."""
    subs = subspaces(n, q)
    return tuple(
        tuple(j for j, t in enumerate(subs) if s.members <= t.members) for s in subs
    )
