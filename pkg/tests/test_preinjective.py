import pytest

from kronext.partitions import PartitionError, dominance_eqsum, gen_maj, pad, partitions_of
from kronext.preinjective import (
    chain_product,
    chain_product_dominance,
    cokernels,
    embedding_exists_genmaj,
    embedding_exists_symbolic,
    embedding_exists_wdom,
    from_multiplicities,
    membership_gen_maj,
    membership_symbolic,
    minimal_cokernel,
    to_multiplicities,
)
from kronext.symbols import inj_sym


def index_lists(max_weight, max_len):
    """Weakly decreasing lists of indices >= 0 (zeros allowed)."""
    out = [()]

    def rec(prefix, top, left):
        for v in range(min(top, left), -1, -1):
            p = prefix + (v,)
            out.append(p)
            if len(p) < max_len:
                rec(p, v, left - v)

    if max_len > 0:
        rec((), max_weight, max_weight)
    return out


def test_multiplicity_translation():
    assert to_multiplicities((2, 0, 0)) == (2, 0, 1)
    assert to_multiplicities((1,), top=3) == (0, 1, 0, 0)
    assert from_multiplicities((2, 0, 1)) == (2, 0, 0)
    for p in index_lists(6, 4):
        assert from_multiplicities(to_multiplicities(p)) == p
    with pytest.raises(ValueError):
        from_multiplicities((1, -1))


def test_chain_product_examples():
    assert chain_product((2, 0)) == {inj_sym(2, 0), inj_sym(1, 1)}
    assert chain_product((3,)) == {inj_sym(3)}
    assert chain_product((1, 1)) == {inj_sym(1, 1)}
    assert chain_product(()) == {inj_sym()}


def test_chain_product_two_routes_small():
    for a in index_lists(4, 3):
        assert chain_product(a) == chain_product_dominance(a), a


def test_membership_examples():
    assert membership_gen_maj((3, 2, 1), (2, 1), (3,))
    assert membership_symbolic((3, 2, 1), (2, 1), (3,))
    assert not membership_gen_maj((3, 2, 1), (2, 1), (2,))
    for a in [(2, 1), (3, 0), (1, 1, 1)]:
        for c in partitions_of(sum(a), len(a)):
            c = pad(c, len(a))
            assert membership_symbolic(c, (), a) == dominance_eqsum(c, a)


def test_membership_two_routes_small():
    for c in index_lists(5, 3):
        for b in index_lists(sum(c), len(c)):
            n = len(c) - len(b)
            if n < 1:
                continue
            for p in partitions_of(sum(c) - sum(b), n):
                a = pad(p, n)
                assert membership_gen_maj(c, b, a) == membership_symbolic(c, b, a), (c, b, a)


def test_wdom_examples():
    assert embedding_exists_wdom((1,), (1, 1))  # I_0 into I_1 + I_0
    assert embedding_exists_wdom((0, 2, 1), (0, 2, 1))
    assert not embedding_exists_wdom((0, 1), (2,))  # I_1 into I_0 + I_0
    with pytest.raises(ValueError):
        embedding_exists_wdom((-1,), (1,))


def test_genmaj_embedding_examples():
    assert embedding_exists_genmaj((2, 1), (3, 2, 1), 1)
    assert embedding_exists_genmaj((3, 1, 0), (3, 1, 0), 0)
    assert not embedding_exists_genmaj((3, 1), (2, 1), 0)
    assert not embedding_exists_genmaj((1,), (0, 0))  # I_1 into I_0 + I_0
    with pytest.raises(PartitionError):
        embedding_exists_genmaj((1,), (1, 0), 2)


def test_minimal_cokernel_examples():
    assert minimal_cokernel((2, 1), (3, 2, 1), 1) == (3,)
    for c in [(3, 1), (2, 2, 0), (4, 1, 1)]:
        assert minimal_cokernel((), c) == c
    assert minimal_cokernel((1,), (0, 0)) is None


def test_three_embedding_criteria_small():
    for c in index_lists(6, 4):
        for b in index_lists(sum(c), len(c)):
            g = embedding_exists_genmaj(b, c)
            assert g == embedding_exists_wdom(to_multiplicities(b), to_multiplicities(c)), (b, c)
            assert g == embedding_exists_symbolic(b, c), (b, c)


def test_minimal_cokernel_is_minimal_small():
    for c in index_lists(6, 4):
        for b in index_lists(sum(c), len(c)):
            a = minimal_cokernel(b, c)
            found = cokernels(b, c)
            if a is None:
                assert not found
                continue
            assert a in found
            assert all(dominance_eqsum(a, other) for other in found), (b, c, a, found)
            # anything strictly below the minimum is not a cokernel
            for p in partitions_of(sum(a), len(a)):
                lower = pad(p, len(a))
                if lower != a and dominance_eqsum(lower, a):
                    assert lower not in found
            assert gen_maj(c, b, a)
