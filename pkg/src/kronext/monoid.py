"""Extension monoid products of decomposition symbols.

``product(alpha, beta)`` is the set of symbols of all middle terms ``X`` of short
exact sequences ``0 -> N -> X -> M -> 0`` with ``M`` in the class of ``alpha``
and ``N`` in the class of ``beta``. It is computed by factoring both symbols
into atoms and rewriting the concatenated word into normal order
(``P`` ascending, one Segre block, ``I`` descending) with the elementary
products below.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Sequence

from .partitions import lr_expansions, strip_restrictions
from .symbols import (
    Atom,
    Inj,
    Proj,
    RegSym,
    SegreEntry,
    SegreSymbol,
    Symbol,
    ZERO,
    atoms,
    regular_full_set,
)


def prod_inj_pair(i: int, j: int) -> frozenset[Symbol]:
    """{[I_i]} * {[I_j]}."""
    if i - j >= -1:
        return frozenset({Symbol(inj=(i, j))})
    return frozenset(Symbol(inj=(j - s, i + s)) for s in range((j - i) // 2 + 1))


def prod_proj_pair(i: int, j: int) -> frozenset[Symbol]:
    """{[P_i]} * {[P_j]}."""
    if i - j <= -1:
        return frozenset({Symbol(proj=(i, j))})
    return frozenset(Symbol(proj=(j + s, i - s)) for s in range((i - j) // 2 + 1))


def _matchings(sigma: Sequence[SegreEntry], tau: Sequence[SegreEntry]):
    """Partial matchings between entries of equal degree, as lists of (i, j) pairs."""

    def rec(i: int, used: frozenset[int]):
        if i == len(sigma):
            yield []
            return
        for rest in rec(i + 1, used):
            yield rest
        for j, e in enumerate(tau):
            if j not in used and e.degree == sigma[i].degree:
                for rest in rec(i + 1, used | {j}):
                    yield [(i, j)] + rest

    yield from rec(0, frozenset())


@lru_cache(maxsize=None)
def _prod_segre(sigma: SegreSymbol, tau: SegreSymbol) -> frozenset[SegreSymbol]:
    s, t = sigma.entries, tau.entries
    out = set()
    for matching in _matchings(s, t):
        mi = {i for i, _ in matching}
        mj = {j for _, j in matching}
        fixed = [s[i] for i in range(len(s)) if i not in mi]
        fixed += [t[j] for j in range(len(t)) if j not in mj]
        choices = [
            [SegreEntry(nu, s[i].degree) for nu in lr_expansions(s[i].partition, t[j].partition)]
            for i, j in matching
        ]
        for merged in cartesian(*choices):
            out.add(SegreSymbol(tuple(fixed) + tuple(merged)))
    return frozenset(out)


def prod_segre(sigma: SegreSymbol, tau: SegreSymbol) -> frozenset[Symbol]:
    """S(sigma) * S(tau) for two Segre symbols."""
    return frozenset(Symbol(regular=r) for r in _prod_segre(sigma, tau))


def _strip_choices(sigma: SegreSymbol) -> Iterable[tuple[int, SegreSymbol]]:
    """For each way of removing a horizontal strip from every entry: (t, remainder)."""
    per_entry = []
    for lam, d in sigma:
        opts = []
        for ti in range(sum(lam) + 1):
            for mu in strip_restrictions(lam, ti):
                opts.append((ti * d, mu, d))
        per_entry.append(opts)
    for combo in cartesian(*per_entry):
        t = sum(c[0] for c in combo)
        rest = tuple(SegreEntry(mu, d) for _, mu, d in combo if mu)
        yield t, SegreSymbol(rest)


def prod_reg_proj(sigma: SegreSymbol, m: int) -> frozenset[Symbol]:
    """S(sigma) * {[P_m]}."""
    return frozenset(Symbol(proj=(m + t,), regular=rest) for t, rest in _strip_choices(sigma))


def prod_inj_reg(n: int, sigma: SegreSymbol) -> frozenset[Symbol]:
    """{[I_n]} * S(sigma)."""
    return frozenset(Symbol(inj=(n + t,), regular=rest) for t, rest in _strip_choices(sigma))


def prod_inj_proj(n: int, m: int) -> frozenset[Symbol]:
    """{[I_n]} * {[P_m]}."""
    return regular_full_set(n + m + 1) | {Symbol(proj=(m,), inj=(n,))}


def cokernel_set_P(n: int, m: int) -> frozenset[Symbol]:
    """Symbols of all X with 0 -> P_n -> P_m -> X -> 0 exact (n < m)."""
    if n >= m:
        raise ValueError(f"need n < m for a proper monomorphism P_{n} -> P_{m}, got n={n}, m={m}")
    return regular_full_set(m - n)


# ---------------------------------------------------------------------------
# normal-order rewriting

_RANK = {Proj: 0, RegSym: 1, Inj: 2}


def _out_of_order(x: Atom, y: Atom) -> bool:
    rx, ry = _RANK[type(x)], _RANK[type(y)]
    if rx != ry:
        return rx > ry
    if isinstance(x, Proj):
        return x.n > y.n
    if isinstance(x, Inj):
        return x.n < y.n
    return True  # two Segre blocks always merge


def _rewrite_pair(x: Atom, y: Atom) -> frozenset[Symbol]:
    if isinstance(x, Inj) and isinstance(y, Proj):
        return prod_inj_proj(x.n, y.n)
    if isinstance(x, Inj) and isinstance(y, RegSym):
        return prod_inj_reg(x.n, y.segre)
    if isinstance(x, RegSym) and isinstance(y, Proj):
        return prod_reg_proj(x.segre, y.n)
    if isinstance(x, RegSym) and isinstance(y, RegSym):
        return prod_segre(x.segre, y.segre)
    if isinstance(x, Inj):
        return prod_inj_pair(x.n, y.n)
    return prod_proj_pair(x.n, y.n)


def _word_to_symbol(word: Sequence[Atom]) -> Symbol:
    proj = tuple(a.n for a in word if isinstance(a, Proj))
    inj = tuple(a.n for a in word if isinstance(a, Inj))
    regs = [a.segre for a in word if isinstance(a, RegSym)]
    return Symbol(proj, regs[0] if regs else SegreSymbol(), inj)


def _clean(word: Iterable[Atom]) -> tuple[Atom, ...]:
    return tuple(a for a in word if not (isinstance(a, RegSym) and not a.segre))


@lru_cache(maxsize=None)
def _normalize(word: tuple[Atom, ...]) -> frozenset[Symbol]:
    for k in range(len(word) - 1):
        if _out_of_order(word[k], word[k + 1]):
            out: set[Symbol] = set()
            for sym in _rewrite_pair(word[k], word[k + 1]):
                out |= _normalize(_clean(word[:k] + tuple(atoms(sym)) + word[k + 2 :]))
            return frozenset(out)
    return frozenset({_word_to_symbol(word)})


def normalize_word(word: Sequence[Atom]) -> frozenset[Symbol]:
    """The product of the atoms of ``word``, left factor first, as a symbol set."""
    return _normalize(_clean(word))


def product(alpha: Symbol, beta: Symbol) -> frozenset[Symbol]:
    return normalize_word(atoms(alpha) + atoms(beta))


def product_sets(A: Iterable[Symbol], B: Iterable[Symbol]) -> frozenset[Symbol]:
    B = list(B)
    out: set[Symbol] = set()
    for alpha in A:
        for beta in B:
            out |= product(alpha, beta)
    return frozenset(out)


def product_chain(symbols: Sequence[Symbol]) -> frozenset[Symbol]:
    """Left fold of the product over a sequence of symbols."""
    acc: frozenset[Symbol] = frozenset({ZERO})
    for s in symbols:
        acc = product_sets(acc, [s])
    return acc
