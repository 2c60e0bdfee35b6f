import pytest

from symrep.combinatorics import (
    Partition,
    SkewShape,
    add_border_strips,
    partitions_of,
    remove_border_strips,
)


def brute_remove(lam, k):
    out = []
    for mu in partitions_of(lam.size - k) if lam.size >= k else []:
        if lam.contains(mu):
            s = SkewShape(lam, mu)
            if s.is_skew_hook():
                out.append((mu, s.leg()))
    return sorted(out, reverse=True)


def brute_add(lam, k):
    out = []
    for nu in partitions_of(lam.size + k):
        if nu.contains(lam):
            s = SkewShape(nu, lam)
            if s.is_skew_hook():
                out.append((nu, s.leg()))
    return sorted(out, reverse=True)


@pytest.mark.parametrize("n", range(0, 8))
def test_strip_enumeration_matches_brute_force(n):
    for lam in partitions_of(n):
        for k in range(1, 6):
            assert list(remove_border_strips(lam, k)) == brute_remove(lam, k), (lam, k)
            assert list(add_border_strips(lam, k)) == brute_add(lam, k), (lam, k)


def test_strips_of_two_by_two():
    assert remove_border_strips(Partition((2, 2)), 2) == ((Partition((2,)), 0), (Partition((1, 1)), 1))
    assert remove_border_strips(Partition((2, 2)), 4) == ()
    assert add_border_strips(Partition(), 2) == ((Partition((2,)), 0), (Partition((1, 1)), 1))
