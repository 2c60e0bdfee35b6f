"""Partitions, nodes, skew shapes, border strips and permutations.

Everything here is an immutable value.  Partitions double as Young diagrams
and as cycle types; nodes use 1-based ``(row, col)`` coordinates and the
content of a node is ``col - row``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import groupby
from math import factorial, prod
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, ShapeError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction so every partition has a
    unique representation; the empty tuple is the empty partition.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,3,1"``; ``""``, ``"0"`` and ``"∅"`` give the empty partition."""
        text = text.strip()
        if text in ("", "∅", "()", "[]"):
            return cls()
        text = text.strip("()[]")
        try:
            return cls(int(p) for p in re.split(r"[,\s+]+", text) if p)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse partition {text!r}") from None

    @property
    def size(self) -> int:
        return sum(self)

    n = size

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "∅"

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def nodes(self) -> list["Node"]:
        return [Node(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1)]

    def contains(self, other: Sequence[int]) -> bool:
        """Diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def multiplicities(self) -> dict[int, int]:
        return {k: len(list(g)) for k, g in groupby(self)}

    def union(self, other: Iterable[int]) -> "Partition":
        """Multiset union of parts, e.g. ``ρ ∪ {1}``."""
        return Partition(sorted(list(self) + list(other), reverse=True))


class Node(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    def __str__(self) -> str:
        return str(self.outer) if not self.inner else f"{self.outer}/{self.inner}"

    @cached_property
    def cells(self) -> tuple[Node, ...]:
        """Cells in row-major order."""
        return tuple(
            Node(r, c)
            for r, p in enumerate(self.outer, 1)
            for c in range(self.inner.part(r) + 1, p + 1)
        )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __len__(self) -> int:
        return self.size

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def contents(self) -> list[int]:
        return [c.content for c in self.cells]

    def rows(self) -> list[int]:
        """Row indices occupied by at least one cell."""
        return sorted({c.row for c in self.cells})

    def is_connected(self) -> bool:
        """Edge-adjacency connectivity; the empty shape counts as connected."""
        cells = set(self.cells)
        if not cells:
            return True
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(Node(*nb))
        return len(seen) == len(cells)

    def is_skew_hook(self) -> bool:
        if not self.cells:
            return False
        contents = self.contents()
        return self.is_connected() and len(set(contents)) == len(contents)

    def leg(self) -> int:
        """Number of occupied rows minus one."""
        if not self.cells:
            raise DomainError("leg is undefined on the empty skew shape")
        return len(self.rows()) - 1


def skew(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def removable_nodes(lam: Sequence[int]) -> list[Node]:
    lam = Partition(lam)
    return [Node(m, lam.part(m)) for m in range(1, len(lam) + 1) if lam.part(m) > lam.part(m + 1)]


def addable_nodes(lam: Sequence[int]) -> list[Node]:
    lam = Partition(lam)
    return [
        Node(m, lam.part(m) + 1)
        for m in range(1, len(lam) + 2)
        if m == 1 or lam.part(m - 1) > lam.part(m)
    ]


def hook_length(lam: Partition, node: Node) -> int:
    conj = lam.conjugate()
    return (lam.part(node.row) - node.col) + (conj.part(node.col) - node.row) + 1


def hook_dimension(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod((lam[r - 1] - c) + (conj[c - 1] - r) + 1 for r, c in lam.nodes())
    return factorial(lam.size) // hooks


# -- border strips -----------------------------------------------------------

def _diagram_from_rows(rows: list[int]) -> Partition | None:
    while rows and rows[-1] == 0:
        rows.pop()
    if any(a < b for a, b in zip(rows, rows[1:])) or any(r < 0 for r in rows):
        return None
    return Partition(rows)


@lru_cache(maxsize=None)
def remove_border_strips(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(mu, leg)`` with ``lam/mu`` a skew hook of ``k`` cells.

    The rim of ``lam`` holds exactly one cell per content; a strip is a run of
    ``k`` consecutive contents along the rim, kept when what remains is a
    partition.
    """
    lam = Partition(lam)
    if k <= 0 or not lam:
        return ()
    rim = {}
    for r, p in enumerate(lam, 1):
        for c in range(1, p + 1):
            if lam.part(r + 1) < c + 1:  # (r+1, c+1) outside lam
                rim[c - r] = Node(r, c)
    out = []
    for top in sorted(rim, reverse=True):
        contents = range(top, top - k, -1)
        if any(d not in rim for d in contents):
            continue
        rows = list(lam)
        for d in contents:
            rows[rim[d].row - 1] -= 1
        mu = _diagram_from_rows(rows)
        if mu is None or not all(
            rim[d].col > mu.part(rim[d].row) for d in contents
        ):
            continue
        strip = SkewShape(lam, mu)
        if strip.is_skew_hook():
            out.append((mu, strip.leg()))
    return tuple(sorted(set(out), reverse=True))


@lru_cache(maxsize=None)
def add_border_strips(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(nu, leg)`` with ``nu/lam`` a skew hook of ``k`` cells."""
    lam = Partition(lam)
    if k <= 0:
        return ()
    out = []
    # first free cell on each diagonal is the only candidate cell of that content
    lo, hi = -len(lam) - k + 1, (lam[0] if lam else 0)
    for start in range(lo, hi + 1):
        rows = list(lam) + [0] * k
        ok = True
        for d in range(start, start + k):
            r = max(1, 1 - d)
            while lam.part(r) >= r + d:
                r += 1
            if rows[r - 1] != r + d - 1:
                ok = False
                break
            rows[r - 1] += 1
        if not ok:
            continue
        nu = _diagram_from_rows(rows)
        if nu is None:
            continue
        strip = SkewShape(nu, lam)
        if strip.is_skew_hook():
            out.append((nu, strip.leg()))
    return tuple(sorted(set(out), reverse=True))


# -- permutations ------------------------------------------------------------

class Permutation(tuple):
    """Bijection of ``{1..n}`` in one-line notation: ``w[i-1] == w(i)``.

    Products compose right to left: ``(u * v)(i) == u(v(i))``.
    """

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, k: int, n: int) -> "Permutation":
        """The simple transposition ``s_k = (k, k+1)`` in ``S_n``."""
        if not 1 <= k < n:
            raise DomainError(f"s_{k} does not exist in S_{n}")
        return cls.transposition(k, k + 1, n)

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Permutation":
        cycles = [list(c) for c in cycles]
        if n is None:
            n = max((max(c) for c in cycles if c), default=0)
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in seen or not 1 <= a <= n:
                    raise DomainError(f"bad cycle notation: {cycles}")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse one-line ``"2,1,4,3"`` or cycle notation ``"(1 2)(3 4)"``."""
        text = text.strip()
        if text.startswith("("):
            cycles = [
                [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
                for body in re.findall(r"\(([^)]*)\)", text)
            ]
            return cls.from_cycles(cycles, n)
        try:
            perm = cls(int(x) for x in re.split(r"[,\s]+", text) if x)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse permutation {text!r}") from None
        if n is not None and len(perm) < n:
            perm = cls(tuple(perm) + tuple(range(len(perm) + 1, n + 1)))
        return perm

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise DomainError("permutations from different symmetric groups")
        return Permutation(self[o - 1] for o in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, w in enumerate(self, 1):
            inv[w - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def cycle_type(w: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in w.cycles()), reverse=True))


def class_representative(rho: Sequence[int]) -> Permutation:
    """``(1..rho_1)(rho_1+1..rho_1+rho_2)...``"""
    rho = Partition(rho)
    cycles, start = [], 1
    for part in rho:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, rho.size)


def centralizer_order(rho: Sequence[int]) -> int:
    """``z_rho = prod_i i^{l_i} l_i!``"""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho: Sequence[int]) -> int:
    rho = Partition(rho)
    return factorial(rho.size) // centralizer_order(rho)


def coxeter_length(w: Permutation) -> int:
    """Inversion count."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: Permutation) -> list[int]:
    """Indices ``[k_1, ..., k_l]`` with ``w = s_{k_1} * ... * s_{k_l}`` and ``l`` minimal."""
    images = list(w)
    word = []
    # peel right descents: w = (w * s_i) * s_i with w * s_i one inversion shorter
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def compose_word(word: Sequence[int], n: int) -> Permutation:
    w = Permutation.identity(n)
    for k in word:
        w = w * Permutation.simple(k, n)
    return w
