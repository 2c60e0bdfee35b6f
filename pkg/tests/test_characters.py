import csv
import io
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from symrep.characters import (
    GroupAlgebraElement,
    central_idempotent,
    character_table,
    convolve,
    hook_cycle_character,
    mn_character,
    removable_indicator,
    restriction_multiplicities,
)
from symrep.combinatorics import Partition, Permutation, SkewShape, class_representative, partitions_of, skew
from symrep.errors import DomainError, ResourceError
from symrep.linalg import ExactMatrix
from symrep.repforms import seminormal_rep


def brute_convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    out = {}
    for g, x in a.coeffs.items():
        for h, y in b.coeffs.items():
            out[g * h] = out.get(g * h, Fraction(0)) + x * y
    return GroupAlgebraElement(a.n, out)


@pytest.mark.parametrize(
    "shape, rho, value",
    [((2, 1), (3,), -1), ((2, 2), (4,), 0), ((2, 1), (1, 1, 1), 2), ((1,), (1,), 1), ((3, 2), (2, 2, 1), 1)],
)
def test_mn_examples(shape, rho, value):
    assert mn_character(shape, rho) == value


def test_mn_size_mismatch():
    with pytest.raises(DomainError):
        mn_character((2, 1), (2,))


def test_mn_accepts_unsorted_cycle_type():
    assert mn_character((3, 2), (1, 2, 2)) == mn_character((3, 2), (2, 2, 1))


@pytest.mark.parametrize("shape, value", [(skew((3, 1)), -1), (skew((2, 2), (1,)), -1), (skew((2, 2)), 0)])
def test_hook_cycle_examples(shape, value):
    assert hook_cycle_character(shape) == value


def test_table_examples():
    assert character_table(1).entries == ((1,),)
    t = character_table(3)
    assert t.col_labels == ((1, 1, 1), (2, 1), (3,))
    assert t.row((2, 1)) == (2, 0, -1)
    assert t.row((3,)) == (1, 1, 1)
    assert t.row((1, 1, 1)) == (1, -1, 1)
    assert t[(2, 1), (3,)] == -1


def test_table_errors():
    with pytest.raises(ResourceError):
        character_table(21)
    with pytest.raises(ResourceError):
        character_table(6, cap=5)
    with pytest.raises(DomainError):
        character_table(0)


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    t = character_table(n)
    order = factorial(n)
    k = len(t.row_labels)
    for a in range(k):
        for b in range(k):
            row = sum(s * x * y for s, x, y in zip(t.class_sizes, t.entries[a], t.entries[b]))
            assert row == (order if a == b else 0)
            col = sum(r[a] * r[b] for r in t.entries)
            assert col * t.class_sizes[a] == (order if a == b else 0)
    assert sum(x * x for x in t.column([1] * n)) == order


@pytest.mark.parametrize("n", range(1, 6))
def test_table_matches_seminormal_traces(n):
    t = character_table(n)
    for lam in t.row_labels:
        rep = seminormal_rep(lam)
        assert tuple(rep.matrix(class_representative(rho)).trace() for rho in t.col_labels) == t.row(lam)


def test_csv_and_json():
    t = character_table(3)
    rows = list(csv.reader(io.StringIO(t.to_csv())))
    assert rows[0] == ["lambda", "1+1+1", "2+1", "3"]
    assert rows[2] == ["2+1", "2", "0", "-1"]
    assert '"2+1"' in t.to_csv()
    j = t.to_json()
    assert j["entries"][1] == ["2", "0", "-1"]
    assert j["class_sizes"] == ["1", "3", "2"]


@pytest.mark.parametrize(
    "lam, expected",
    [((4,), {(3,): 1}), ((2, 1), {(2,): 1, (1, 1): 1}), ((4, 2, 1), {(3, 2, 1): 1, (4, 1, 1): 1, (4, 2): 1})],
)
def test_restriction_examples(lam, expected):
    assert restriction_multiplicities(lam) == {Partition(k): v for k, v in expected.items()}


@pytest.mark.parametrize("n", range(1, 8))
def test_branching_is_multiplicity_free(n):
    for lam in partitions_of(n):
        assert restriction_multiplicities(lam) == removable_indicator(lam)


def test_group_algebra_basics():
    e = GroupAlgebraElement.identity(3)
    x = GroupAlgebraElement(3, {Permutation((2, 3, 1)): Fraction(1, 3), Permutation((2, 1, 3)): -2})
    assert e * x == x == x * e
    assert (x - x).is_zero()
    assert x.scale(2) == x + x
    with pytest.raises(DomainError):
        convolve(e, GroupAlgebraElement.identity(2))
    with pytest.raises(DomainError):
        GroupAlgebraElement(3, {Permutation((2, 1)): 1})
    assert x.to_json() == [{"perm": [2, 1, 3], "coeff": "-2"}, {"perm": [2, 3, 1], "coeff": "1/3"}]


@pytest.mark.parametrize("n", range(1, 5))
def test_convolution_against_brute_force(n):
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    a = GroupAlgebraElement(n, {g: Fraction(i % 5 - 2, 1 + i % 3) for i, g in enumerate(perms)})
    b = GroupAlgebraElement(n, {g: Fraction(3 - i % 4, 2 + i % 2) for i, g in enumerate(perms)})
    expected = brute_convolve(a, b)
    assert convolve(a, b) == expected
    assert convolve(a, b, backend="python") == expected


def test_convolution_is_associative_and_noncommutative():
    s1 = GroupAlgebraElement.basis(Permutation.simple(1, 3))
    s2 = GroupAlgebraElement.basis(Permutation.simple(2, 3))
    assert s1 * s2 != s2 * s1
    assert (s1 * s2) * s1 == s1 * (s2 * s1) == s2 * s1 * s2


def test_idempotent_examples():
    e = central_idempotent(2, (1, 1))
    assert e == GroupAlgebraElement(2, {Permutation((1, 2)): Fraction(1, 2), Permutation((2, 1)): Fraction(-1, 2)})
    for n in range(1, 5):
        triv = central_idempotent(n, (n,))
        assert len(triv.coeffs) == factorial(n)
        assert set(triv.coeffs.values()) == {Fraction(1, factorial(n))}
    with pytest.raises(ResourceError):
        central_idempotent(6, (6,))
    with pytest.raises(DomainError):
        central_idempotent(3, (2,))


@pytest.mark.parametrize("n", range(1, 6))
def test_idempotent_system(n):
    shapes = partitions_of(n)
    es = {lam: central_idempotent(n, lam) for lam in shapes}
    total = GroupAlgebraElement(n)
    gens = [GroupAlgebraElement.basis(Permutation.simple(k, n)) for k in range(1, n)]
    for lam, e in es.items():
        total = total + e
        for mu, f in es.items():
            assert e * f == (e if lam == mu else GroupAlgebraElement(n))
        for g in gens:
            assert g * e == e * g
        for mu in shapes:
            rep = seminormal_rep(mu)
            image = e.act(rep)
            assert image == (ExactMatrix.identity(rep.dim) if lam == mu else ExactMatrix.zeros(rep.dim))
    assert total == GroupAlgebraElement.identity(n)
