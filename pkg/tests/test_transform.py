import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from menger import setcore
from menger.census import _isotone_minorant, all_transformations, random_transformation
from menger.errors import DomainError
from menger.transform import (
    KernelTransformation,
    NPlaceTransformation,
    diagonal_star,
    full_intersection_distributive_oracle,
    full_union_distributive_oracle,
    is_contractive,
    is_full_intersection_distributive,
    is_full_union_distributive,
    is_idempotent,
    is_interior,
    is_intersection_distributive,
    is_isotone,
    is_isotone_naive,
    is_union_distributive,
    kernel_of,
    preceq,
    satisfies_eq2,
    satisfies_eq6,
    satisfies_eq8,
    superpose,
)

T = NPlaceTransformation.from_entries

F_KERNEL = T(2, 1, [0, 1, 0, 1])    # X ↦ X ∩ {a}
G_GAP = T(2, 1, [0, 0, 2, 3])       # interior but not ∪-distributive
SWAP = T(1, 1, [1, 0])              # swaps ∅ and A


def _random_tables(m, n, count, seed=0):
    return [random_transformation(m, n, s) for s in range(seed, seed + count)]


# ---------------------------------------------------------------------------
# superposition


def test_superpose_identity_const():
    ident = NPlaceTransformation.identity(1)
    const = NPlaceTransformation.constant(1, 1, 0)
    assert superpose(ident, [const]).table == bytes([0, 0])


def test_superpose_kernel_gap():
    assert superpose(F_KERNEL, [G_GAP]).table == bytes([0, 0, 0, 1])
    assert superpose(G_GAP, [F_KERNEL]).table == bytes([0, 0, 0, 0])


def test_superpose_binary_top():
    # f(A, A) = A, else ∅; f[f f] = f (checked over all 4 argument tuples).
    f = T(1, 2, [0, 0, 0, 1])
    assert superpose(f, [f, f]).table == f.table


def test_superpose_shape_mismatch():
    with pytest.raises(DomainError):
        superpose(F_KERNEL, [SWAP])
    with pytest.raises(DomainError):
        superpose(F_KERNEL, [F_KERNEL, F_KERNEL])


@settings(max_examples=60)
@given(st.sampled_from([(1, 1), (2, 1), (1, 2), (2, 2)]), st.integers(0, 2**32))
def test_superassociativity(shape, seed):
    m, n = shape
    rng = random.Random(seed)
    draws = [random_transformation(m, n, rng.getrandbits(64)) for _ in range(2 * n + 1)]
    f, gs, hs = draws[0], draws[1 : n + 1], draws[n + 1 :]
    lhs = superpose(superpose(f, gs), hs)
    rhs = superpose(f, [superpose(g, hs) for g in gs])
    assert lhs.table == rhs.table


def test_superpose_preserves_contractive_and_isotone():
    rng = random.Random(7)
    m, n = 2, 2
    meets = [setcore.meet_of_index(i, m, n) for i in range(1 << (m * n))]
    for _ in range(30):
        contractives = [
            T(m, n, [v & meets[i] for i, v in enumerate(
                random_transformation(m, n, rng.getrandbits(64)).table)])
            for _ in range(n + 1)
        ]
        out = superpose(contractives[0], contractives[1:])
        assert is_contractive(out).passed

        isotones = [
            T(m, n, _isotone_minorant(
                random_transformation(m, n, rng.getrandbits(64)).table, m, n))
            for _ in range(n + 1)
        ]
        assert all(is_isotone(t).passed for t in isotones)
        assert is_isotone(superpose(isotones[0], isotones[1:])).passed


# ---------------------------------------------------------------------------
# predicates, spec'd verdicts


def test_contractive():
    assert is_contractive(F_KERNEL).passed
    w = is_contractive(T(1, 1, [1, 1]))
    assert not w.passed and w.indices == (0,)
    for m, n in [(1, 1), (2, 2), (3, 1)]:
        assert is_contractive(NPlaceTransformation.constant(m, n, 0)).passed


def test_idempotent():
    assert is_idempotent(F_KERNEL).passed
    w = is_idempotent(T(2, 1, [0, 0, 0, 1]))
    assert not w.passed and w.indices == (3,)
    assert is_idempotent(NPlaceTransformation.identity(2)).passed


def test_isotone():
    assert is_isotone(G_GAP).passed
    w = is_isotone(SWAP)
    assert not w.passed and w.indices == (0, 1)
    assert is_isotone(NPlaceTransformation.constant(2, 1, 2)).passed


def test_isotone_matches_naive_oracle():
    for f in _random_tables(2, 2, 100):
        assert is_isotone(f).passed == is_isotone_naive(f).passed
    for entries in itertools.product(range(4), repeat=4):
        f = T(2, 1, entries)
        assert is_isotone(f).passed == is_isotone_naive(f).passed


def test_interior():
    assert is_interior(G_GAP).passed
    w = is_interior(T(2, 1, [0, 0, 0, 1]))
    assert not w.passed and w.check == "interior:idempotent"
    assert is_interior(NPlaceTransformation.constant(2, 2, 0)).passed


def test_union_distributive():
    assert is_union_distributive(F_KERNEL).passed
    w = is_union_distributive(G_GAP)
    assert not w.passed and w.indices == (1, 2) and w.coord == 0
    # replay: g({a}∪{b}) ≠ g({a}) ∪ g({b})
    assert G_GAP.table[1 | 2] != G_GAP.table[1] | G_GAP.table[2]


@pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (3, 2)])
def test_kernel_expansions_distributive(m, n):
    for kernel in range(1 << m):
        f = KernelTransformation(m, n, kernel).expand()
        assert is_union_distributive(f).passed
        assert is_intersection_distributive(f).passed
        assert is_full_union_distributive(f).passed
        assert is_full_intersection_distributive(f).passed
        assert is_interior(f).passed


def test_full_distributive_examples():
    assert is_full_union_distributive(F_KERNEL).passed
    assert full_union_distributive_oracle(F_KERNEL) is None
    assert not is_full_union_distributive(G_GAP).passed

    # constant-∅ is the K = ∅ kernel form: full-∪ holds (including the empty
    # family), and full-∩ holds over nonempty families.
    bottom = NPlaceTransformation.constant(1, 2, 0)
    assert is_full_union_distributive(bottom).passed
    assert is_full_intersection_distributive(bottom).passed
    assert full_union_distributive_oracle(bottom) is None
    assert full_intersection_distributive_oracle(bottom) is None
    # the empty family does bite on the ∪ side: constant-A fails it while
    # passing the binary law
    top = NPlaceTransformation.constant(1, 2, 1)
    assert is_union_distributive(top).passed
    assert not is_full_union_distributive(top).passed
    assert full_union_distributive_oracle(top) is not None


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1)])
def test_full_reduction_matches_oracle_exhaustive(m, n):
    for f in all_transformations(m, n):
        assert is_full_union_distributive(f).passed == (
            full_union_distributive_oracle(f) is None
        )
        assert is_full_intersection_distributive(f).passed == (
            full_intersection_distributive_oracle(f) is None
        )


def test_full_reduction_matches_oracle_sampled():
    for f in _random_tables(2, 2, 60, seed=400):
        assert is_full_union_distributive(f).passed == (
            full_union_distributive_oracle(f) is None
        )
        assert is_full_intersection_distributive(f).passed == (
            full_intersection_distributive_oracle(f) is None
        )


# ---------------------------------------------------------------------------
# structural characterizations


def test_eq2():
    assert satisfies_eq2(G_GAP).passed
    w = satisfies_eq2(SWAP)
    assert not w.passed and w.indices == (0, 0)
    assert satisfies_eq2(NPlaceTransformation.constant(2, 2, 0)).passed


def test_eq6_and_kernel_of():
    assert satisfies_eq6(F_KERNEL).passed
    assert kernel_of(F_KERNEL).kernel == 1
    w = satisfies_eq6(G_GAP)
    assert not w.passed and w.indices == (1,)
    with pytest.raises(DomainError):
        kernel_of(G_GAP)
    assert kernel_of(NPlaceTransformation.constant(1, 2, 0)).kernel == 0


def test_eq6_passers_are_exactly_kernel_expansions():
    for m, n in [(2, 1), (1, 2)]:
        expansions = {
            KernelTransformation(m, n, k).expand().table for k in range(1 << m)
        }
        passers = {
            bytes(entries)
            for entries in itertools.product(range(1 << m), repeat=1 << (m * n))
            if satisfies_eq6(T(m, n, entries)).passed
        }
        assert passers == expansions


def test_eq8():
    assert not satisfies_eq8(F_KERNEL, [G_GAP]).passed
    assert satisfies_eq8(G_GAP, [F_KERNEL]).passed
    assert satisfies_eq8(G_GAP, [G_GAP]).passed  # reduces to idempotence


def test_preceq():
    bottom = NPlaceTransformation.constant(2, 1, 0)
    for g in _random_tables(2, 1, 20):
        assert preceq(bottom, g)
        assert preceq(g, g)
    assert not preceq(F_KERNEL, G_GAP)
    assert not preceq(G_GAP, F_KERNEL)


def test_preceq_is_partial_order_on_sample():
    sample = _random_tables(2, 1, 12, seed=5)
    for f in sample:
        assert preceq(f, f)
        for g in sample:
            if preceq(f, g) and preceq(g, f):
                assert f.table == g.table
            for h in sample:
                if preceq(f, g) and preceq(g, h):
                    assert preceq(f, h)


def test_diagonal_star():
    assert diagonal_star(G_GAP, G_GAP).table == G_GAP.table  # interior ⇒ f∗f = f
    assert diagonal_star(F_KERNEL, G_GAP).table == bytes([0, 0, 0, 1])
    assert diagonal_star(G_GAP, F_KERNEL).table == bytes([0, 0, 0, 0])


# ---------------------------------------------------------------------------
# construction and serialization


def test_table_validation():
    with pytest.raises(DomainError):
        T(2, 1, [0, 1, 2])
    with pytest.raises(DomainError):
        T(2, 1, [0, 1, 2, 4])


def test_json_round_trip():
    for f in (F_KERNEL, G_GAP, NPlaceTransformation.identity(2)):
        assert NPlaceTransformation.from_json(f.to_json()) == f
    with pytest.raises(DomainError):
        NPlaceTransformation.from_json({"m": 2, "table": [0]})


def test_apply():
    assert F_KERNEL.apply((3,)) == 1
    f = T(1, 2, [0, 0, 0, 1])
    assert f.apply((1, 1)) == 1
    with pytest.raises(DomainError):
        f.apply((1,))
