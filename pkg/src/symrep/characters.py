"""Murnaghan-Nakayama characters, character tables, branching and central idempotents."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, lcm
from typing import Mapping, Sequence

from . import kernels
from .combinatorics import (
    Partition,
    Permutation,
    SkewShape,
    class_size,
    cycle_type,
    hook_dimension,
    partitions_of,
    removable_nodes,
)
from .errors import DomainError, ResourceError
from .linalg import frac_str

DEFAULT_TABLE_CAP = 20
DEFAULT_IDEMPOTENT_CAP = 5


def _as_shape(shape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else SkewShape(Partition(shape))


@lru_cache(maxsize=None)
def _mn_cached(outer: Partition, inner: Partition, rho: Partition) -> int:
    return kernels.skew_character(outer, inner, rho)


def mn_character(shape, rho) -> int:
    """chi^{lambda/mu} on the class of cycle type ``rho``.

    Strips of size ``rho_1, rho_2, ...`` (largest first) are peeled off the
    outer shape, each weighted by ``(-1)^leg``, until the inner shape remains.
    """
    shape = _as_shape(shape)
    rho = Partition(sorted(rho, reverse=True))
    if rho.size != shape.size:
        raise DomainError(f"|{shape}| = {shape.size} but |rho| = {rho.size}")
    return _mn_cached(shape.outer, shape.inner, rho)


def hook_cycle_character(shape) -> int:
    """Value on the full cycle ``(1 2 ... k)``: ``(-1)^leg`` on a skew hook, else 0."""
    shape = _as_shape(shape)
    if shape.size == 0:
        raise DomainError("the full cycle needs a nonempty shape")
    return (-1) ** shape.leg() if shape.is_skew_hook() else 0


@dataclass(frozen=True)
class CharacterTable:
    n: int
    row_labels: tuple[Partition, ...]
    col_labels: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def __getitem__(self, key) -> int:
        lam, rho = key
        return self.entries[self.row_labels.index(Partition(lam))][self.col_labels.index(Partition(rho))]

    def row(self, lam) -> tuple[int, ...]:
        return self.entries[self.row_labels.index(Partition(lam))]

    def column(self, rho) -> tuple[int, ...]:
        j = self.col_labels.index(Partition(rho))
        return tuple(r[j] for r in self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(["lambda"] + ["+".join(map(str, rho)) for rho in self.col_labels])
        for lam, row in zip(self.row_labels, self.entries):
            writer.writerow(["+".join(map(str, lam))] + [str(x) for x in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [list(lam) for lam in self.row_labels],
            "columns": [list(rho) for rho in self.col_labels],
            "class_sizes": [str(c) for c in self.class_sizes],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def __str__(self) -> str:
        cols = [str(rho) for rho in self.col_labels]
        rows = [str(lam) for lam in self.row_labels]
        cells = [[str(x) for x in r] for r in self.entries]
        lw = max(len(r) for r in rows)
        widths = [max(len(cols[j]), *(len(c[j]) for c in cells)) for j in range(len(cols))]
        lines = [" " * lw + "  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths))]
        for label, row in zip(rows, cells):
            lines.append(label.ljust(lw) + "  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines)


@lru_cache(maxsize=32)
def character_table(n: int, cap: int = DEFAULT_TABLE_CAP) -> CharacterTable:
    """Rows in decreasing lexicographic order; columns in increasing order (identity class first)."""
    if n < 1:
        raise DomainError("character tables are built for n >= 1")
    if n > cap:
        raise ResourceError(f"n = {n} exceeds the character table cap {cap}")
    rows = tuple(partitions_of(n))
    cols = rows[::-1]
    entries = kernels.character_table(n, rows, cols)
    return CharacterTable(
        n,
        rows,
        cols,
        tuple(tuple(r) for r in entries),
        tuple(class_size(rho) for rho in cols),
    )


def restriction_multiplicities(lam) -> dict[Partition, int]:
    """Multiplicities of irreducibles of S_{n-1} in the restriction, by character inner products."""
    lam = Partition(lam)
    n = lam.size
    if n < 1:
        raise DomainError("restriction needs |lambda| >= 1")
    out = {}
    for mu in partitions_of(n - 1):
        total = sum(
            class_size(rho) * mn_character(lam, rho.union([1])) * mn_character(mu, rho)
            for rho in partitions_of(n - 1)
        )
        mult = Fraction(total, factorial(n - 1))
        if mult.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {mult}")
        if mult:
            out[mu] = int(mult)
    return out


def removable_indicator(lam) -> dict[Partition, int]:
    lam = Partition(lam)
    out = {}
    for node in removable_nodes(lam):
        rows = list(lam)
        rows[node.row - 1] -= 1
        out[Partition(rows)] = 1
    return out


# -- group algebra -------------------------------------------------------------

@lru_cache(maxsize=None)
def _indexing(n: int) -> tuple[tuple[Permutation, ...], dict[Permutation, int]]:
    perms = tuple(Permutation(x + 1 for x in p) for p in permutations(range(n)))
    return perms, {p: i for i, p in enumerate(perms)}


class GroupAlgebraElement:
    """Finite rational combination of permutations of ``{1..n}``."""

    def __init__(self, n: int, coeffs: Mapping[Permutation, Fraction] | None = None):
        self.n = n
        self.coeffs: dict[Permutation, Fraction] = {}
        for g, c in (coeffs or {}).items():
            g = Permutation(g)
            if len(g) != n:
                raise DomainError(f"{g} is not in S_{n}")
            c = Fraction(c)
            if c:
                self.coeffs[g] = self.coeffs.get(g, Fraction(0)) + c
        self.coeffs = {g: c for g, c in self.coeffs.items() if c}

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {Permutation.identity(n): 1})

    @classmethod
    def basis(cls, w: Permutation) -> "GroupAlgebraElement":
        return cls(len(w), {w: 1})

    def __getitem__(self, g) -> Fraction:
        return self.coeffs.get(Permutation(g), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def _check(self, other: "GroupAlgebraElement"):
        if self.n != other.n:
            raise DomainError(f"elements of CS_{self.n} and CS_{other.n}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) + c
        return GroupAlgebraElement(self.n, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {g: c * x for g, x in self.coeffs.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return convolve(self, other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def act(self, rep):
        """Image under a representation (linear extension of ``rep.matrix``)."""
        total = rep._identity() * 0
        for g, c in self.coeffs.items():
            m = rep.matrix(g)
            total = total + (m * c if hasattr(m, "rows") else m * float(c))
        return total

    def to_json(self) -> list[dict]:
        perms, _ = _indexing(self.n)
        return [
            {"perm": list(g), "coeff": frac_str(self.coeffs[g])}
            for g in perms
            if g in self.coeffs
        ]

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.n}, {len(self.coeffs)} terms)"


def _integer_vector(x: GroupAlgebraElement) -> tuple[list[int], int]:
    perms, index = _indexing(x.n)
    den = lcm(*(c.denominator for c in x.coeffs.values())) if x.coeffs else 1
    vec = [0] * len(perms)
    for g, c in x.coeffs.items():
        vec[index[g]] = int(c * den)
    return vec, den


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement, backend: str | None = None) -> GroupAlgebraElement:
    """``(a b)(g) = sum_h a(h) b(h^{-1} g)``, exactly."""
    a._check(b)
    va, da = _integer_vector(a)
    vb, db = _integer_vector(b)
    vc = kernels.convolve_integers(a.n, va, vb, backend)
    perms, _ = _indexing(a.n)
    den = da * db
    return GroupAlgebraElement(a.n, {perms[i]: Fraction(v, den) for i, v in enumerate(vc) if v})


def central_idempotent(n: int, lam, cap: int = DEFAULT_IDEMPOTENT_CAP) -> GroupAlgebraElement:
    """``e_lambda = (dim / n!) sum_g chi^lambda(g^{-1}) g``."""
    lam = Partition(lam)
    if lam.size != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if n > cap:
        raise ResourceError(f"n = {n} exceeds the idempotent cap {cap}")
    dim = hook_dimension(lam)
    perms, _ = _indexing(n)
    values = {}
    coeffs = {}
    for g in perms:
        rho = cycle_type(g.inverse())
        if rho not in values:
            values[rho] = Fraction(dim * mn_character(lam, rho), factorial(n))
        coeffs[g] = values[rho]
    return GroupAlgebraElement(n, coeffs)
