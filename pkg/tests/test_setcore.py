import pytest
from hypothesis import given, strategies as st

from menger import setcore
from menger.errors import DomainError, ResourceGuardError


def test_encode_examples():
    assert setcore.encode((1, 2), m=2) == 9
    assert setcore.encode((0, 0, 0), m=1) == 0
    assert setcore.encode((3,), m=2) == 3


def test_encode_out_of_range():
    with pytest.raises(DomainError):
        setcore.encode((4,), m=2)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (4, 3)])
def test_round_trip_exhaustive(m, n):
    for idx in range(1 << (m * n)):
        t = setcore.decode(idx, m, n)
        assert setcore.encode(t, m) == idx
    for components in [(0,) * n, ((1 << m) - 1,) * n]:
        assert setcore.decode(setcore.encode(components, m), m, n) == components


@given(st.integers(1, 4), st.data())
def test_round_trip_random(m, data):
    n = data.draw(st.integers(1, 12 // m))
    components = tuple(data.draw(st.integers(0, (1 << m) - 1)) for _ in range(n))
    assert setcore.decode(setcore.encode(components, m), m, n) == components


def test_intersect_all_examples():
    assert setcore.intersect_all((1, 3), m=2) == 1
    assert setcore.intersect_all((1, 2), m=2) == 0
    assert setcore.intersect_all((1, 1, 1), m=1) == 1


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_intersect_all_permutation_invariant(components):
    assert setcore.intersect_all(components, 2) == setcore.intersect_all(
        sorted(components), 2
    )


def test_shape_guards():
    with pytest.raises(ResourceGuardError):
        setcore.check_shape(5, 1)
    with pytest.raises(ResourceGuardError):
        setcore.check_shape(4, 4)
    with pytest.raises(DomainError):
        setcore.check_shape(0, 1)
    with pytest.raises(DomainError):
        setcore.check_shape(2, 0)
    setcore.check_shape(4, 3)


def test_ground_set():
    a = setcore.GroundSet(2)
    assert a.full == 3
    assert list(a.subsets()) == [0, 1, 2, 3]
    with pytest.raises(ResourceGuardError):
        setcore.GroundSet(9)


def test_meet_of_index():
    assert setcore.meet_of_index(setcore.encode((1, 3), 2), 2, 2) == 1
    assert setcore.meet_of_index(setcore.encode((2, 1), 2), 2, 2) == 0
