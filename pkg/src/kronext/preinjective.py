"""Extensions and embeddings of preinjective modules.

A preinjective module ``I_{c_1} + ... + I_{c_k}`` is written as the index list
``c`` in weakly decreasing order. Zero entries are genuine summands (``I_0``),
so lengths matter here and nothing is zero-stripped.

Some criteria use the multiplicity form instead: ``mult[k]`` is the number of
copies of ``I_k``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .monoid import product, product_chain, product_sets
from .partitions import (
    Partition,
    PartitionError,
    dominance_eqsum,
    dominated_partitions,
    gen_maj,
    h_indices,
    minimal_dominating_partition,
    partitions_of,
    pad,
    weighted_dominance,
    x_vector,
)
from .symbols import Symbol, inj_sym


def _indices(p: Sequence[int]) -> Partition:
    p = tuple(int(v) for v in p)
    if any(v < 0 for v in p):
        raise PartitionError(f"module indices must be >= 0, got {p}")
    return tuple(sorted(p, reverse=True))


# ---------------------------------------------------------------------------
# encodings


def to_multiplicities(p: Sequence[int], top: Optional[int] = None) -> tuple[int, ...]:
    """Index list -> (m_0, m_1, ..., m_top) with m_k the number of I_k."""
    p = _indices(p)
    top = max(p, default=0) if top is None else top
    if p and p[0] > top:
        raise ValueError(f"top={top} is below the largest index {p[0]}")
    mult = [0] * (top + 1)
    for v in p:
        mult[v] += 1
    return tuple(mult)


def from_multiplicities(mult: Sequence[int]) -> Partition:
    """(m_0, m_1, ...) -> weakly decreasing index list."""
    if any(m < 0 for m in mult):
        raise ValueError(f"negative multiplicity in {tuple(mult)}")
    return tuple(k for k in range(len(mult) - 1, -1, -1) for _ in range(mult[k]))


def inj_symbol(p: Sequence[int]) -> Symbol:
    return inj_sym(*_indices(p))


# ---------------------------------------------------------------------------
# chain products


def chain_product(a: Sequence[int]) -> frozenset[Symbol]:
    """{[I_{a_n}]} * ... * {[I_{a_1}]} computed by the product engine."""
    a = _indices(a)
    return product_chain([inj_sym(v) for v in reversed(a)])


def chain_product_dominance(a: Sequence[int]) -> frozenset[Symbol]:
    """The same set read off the dominance order: {[I_alpha] : alpha <= a}."""
    return frozenset(inj_sym(*alpha) for alpha in dominated_partitions(_indices(a)))


def membership_gen_maj(c: Sequence[int], b: Sequence[int], a: Sequence[int]) -> bool:
    """Whether [I_c] lies in chain_product(a) * {[I_b]}, decided by majorization."""
    return gen_maj(_indices(c), _indices(b), _indices(a))


def membership_symbolic(c: Sequence[int], b: Sequence[int], a: Sequence[int]) -> bool:
    """Same question answered by the product engine."""
    return inj_symbol(c) in product_sets(chain_product(a), [inj_symbol(b)])


# ---------------------------------------------------------------------------
# embeddings


def embedding_exists_wdom(sub_mult: Sequence[int], amb_mult: Sequence[int]) -> bool:
    """Monomorphism from the sub module into the ambient one, both in multiplicity form.

    Holds iff the numbers of I_0 satisfy sub_0 <= amb_0 and the remaining
    multiplicities satisfy weighted dominance.
    """
    if any(v < 0 for v in sub_mult) or any(v < 0 for v in amb_mult):
        raise ValueError("multiplicities must be >= 0")
    n = max(len(sub_mult), len(amb_mult), 1)
    s, t = pad(sub_mult, n), pad(amb_mult, n)
    return s[0] <= t[0] and weighted_dominance(s[1:], t[1:])


def _resolve_n(b: Partition, c: Partition, n: Optional[int]) -> int:
    if n is None:
        return len(c) - len(b)
    if len(c) != len(b) + n:
        raise PartitionError(f"need len(c) == len(b) + n, got {len(c)} != {len(b)} + {n}")
    return n


def _tail_conditions(b: Partition, c: Partition, n: int) -> bool:
    m = len(b)
    hn = h_indices(b, c, n)[-1] if n else 0
    for i in range(1, m + 1):
        bi, ci = b[i - 1], c[i - 1 + n]
        if i <= hn - n and bi < ci:
            return False
        if i > hn - n and bi != ci:
            return False
    return True


def embedding_exists_genmaj(b: Sequence[int], c: Sequence[int], n: Optional[int] = None) -> bool:
    """Monomorphism I_b -> I_c, decided by the x-vector of (b, c).

    ``n`` is the number of summands of the cokernel, i.e. len(c) - len(b)
    counting zero entries; it is inferred when omitted.
    """
    b, c = _indices(b), _indices(c)
    n = _resolve_n(b, c, n)
    if n < 0:
        return False
    if not _tail_conditions(b, c, n):
        return False
    if n == 0:
        return True
    x = x_vector(b, c, n)
    if sum(x) != sum(c) - sum(b):
        return False
    return minimal_dominating_partition(x) is not None


def cokernels(b: Sequence[int], c: Sequence[int]) -> list[Partition]:
    """All a with [I_c] in {[I_a]} * {[I_b]}, i.e. exact 0 -> I_b -> I_c -> I_a -> 0."""
    b, c = _indices(b), _indices(c)
    n, w = len(c) - len(b), sum(c) - sum(b)
    if n < 0 or w < 0:
        return []
    target = inj_symbol(c)
    out = []
    for p in partitions_of(w, n):
        a = pad(p, n)
        if len(a) == n and target in product(inj_symbol(a), inj_symbol(b)):
            out.append(a)
    return out


def embedding_exists_symbolic(b: Sequence[int], c: Sequence[int]) -> bool:
    return bool(cokernels(b, c))


def minimal_cokernel(b: Sequence[int], c: Sequence[int], n: Optional[int] = None) -> Optional[Partition]:
    """The dominance-minimal a with 0 -> I_b -> I_c -> I_a -> 0 exact, or None."""
    b, c = _indices(b), _indices(c)
    n = _resolve_n(b, c, n)
    if not embedding_exists_genmaj(b, c, n):
        return None
    if n == 0:
        return ()
    return minimal_dominating_partition(x_vector(b, c, n))


def is_dominance_minimal(a: Sequence[int], candidates: Sequence[Sequence[int]]) -> bool:
    return all(dominance_eqsum(a, other) for other in candidates)
