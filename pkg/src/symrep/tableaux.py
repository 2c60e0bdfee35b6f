"""Standard (skew) tableaux, content vectors and the Gelfand-Zetlin weight set."""
from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .combinatorics import (
    Node,
    Partition,
    Permutation,
    SkewShape,
    addable_nodes,
    coxeter_length,
    reduced_word,
)
from .errors import DomainError

WeightVector = tuple[int, ...]


class StandardTableau:
    """A bijective increasing filling of a skew shape by ``1..k``.

    Stored as the sequence of nodes holding ``1, 2, ..., k``; the node to
    entry map is derived from it.
    """

    def __init__(self, shape: SkewShape, positions: Sequence[Node]):
        self.shape = shape
        self.positions = tuple(Node(*p) for p in positions)
        if sorted(self.positions) != sorted(shape.cells):
            raise DomainError("entries do not fill the shape")
        entries = self.entries
        for (r, c), k in entries.items():
            right, below = entries.get((r, c + 1)), entries.get((r + 1, c))
            if (right is not None and right < k) or (below is not None and below < k):
                raise DomainError(f"filling is not standard at {(r, c)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "StandardTableau":
        """Build from the entries of each row; ``inner`` gives the skipped prefix per row."""
        inner = Partition(inner)
        outer = Partition(inner.part(r) + len(row) for r, row in enumerate(rows, 1))
        shape = SkewShape(outer, inner)
        positions = [None] * shape.size
        for r, row in enumerate(rows, 1):
            for j, k in enumerate(row):
                if not 1 <= k <= shape.size or positions[k - 1] is not None:
                    raise DomainError(f"bad entry {k}")
                positions[k - 1] = Node(r, inner.part(r) + j + 1)
        return cls(shape, positions)

    @cached_property
    def entries(self) -> dict[Node, int]:
        return {node: k for k, node in enumerate(self.positions, 1)}

    @property
    def size(self) -> int:
        return len(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def __getitem__(self, node) -> int:
        return self.entries[Node(*node)]

    def node_of(self, k: int) -> Node:
        return self.positions[k - 1]

    def content_vector(self) -> WeightVector:
        return tuple(node.content for node in self.positions)

    def rows(self) -> list[list[int]]:
        return [
            [self.entries[Node(r, c)] for c in range(self.shape.inner.part(r) + 1, p + 1)]
            for r, p in enumerate(self.shape.outer, 1)
        ]

    def act(self, w: Permutation) -> "StandardTableau":
        """``w . T``: replace every entry ``j`` by ``w(j)``; raises if the result is not standard."""
        positions = [None] * self.size
        for k, node in enumerate(self.positions, 1):
            positions[w(k) - 1] = node
        return StandardTableau(self.shape, positions)

    def swap(self, k: int) -> "StandardTableau":
        p = list(self.positions)
        p[k - 1], p[k] = p[k], p[k - 1]
        return StandardTableau(self.shape, p)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.outer), "inner": list(self.shape.inner), "rows": self.rows()}

    def __str__(self) -> str:
        width = len(str(self.size))
        lines = []
        for r, row in enumerate(self.rows(), 1):
            pad = " " * ((width + 1) * self.shape.inner.part(r))
            lines.append(pad + " ".join(str(k).rjust(width) for k in row))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"StandardTableau({self.rows()!r}, inner={tuple(self.shape.inner)!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StandardTableau)
            and self.shape == other.shape
            and self.positions == other.positions
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.positions))


def _as_shape(shape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else SkewShape(Partition(shape))


@lru_cache(maxsize=None)
def _standard_tableaux(shape: SkewShape) -> tuple[StandardTableau, ...]:
    outer = shape.outer
    found = []

    def grow(diagram: Partition, path: list[Node]):
        if diagram == outer:
            found.append(StandardTableau(shape, path))
            return
        for node in addable_nodes(diagram):
            if node.col <= outer.part(node.row):
                rows = list(diagram) + [0]
                rows[node.row - 1] += 1
                grow(Partition(rows), path + [node])

    grow(shape.inner, [])
    found.sort(key=StandardTableau.content_vector)
    return tuple(found)


def standard_tableaux(shape) -> list[StandardTableau]:
    """All standard tableaux of a (skew) shape ordered by content vector."""
    return list(_standard_tableaux(_as_shape(shape)))


def canonical_tableau(shape) -> StandardTableau:
    """Fill ``1..n`` left to right along the rows, first row first."""
    shape = _as_shape(shape)
    return StandardTableau(shape, shape.cells)


def content_vector(t: StandardTableau) -> WeightVector:
    return t.content_vector()


def is_valid_weight(weight: Iterable) -> bool:
    """Membership in the set cut out by the three weight conditions.

    ``i_1 = 0``; every later entry has a neighbour ``i_k +- 1`` earlier; two
    equal entries ``a`` are separated by both ``a - 1`` and ``a + 1``.
    """
    weight = tuple(weight)
    for x in weight:
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, float) and x.is_integer():
                continue
            raise DomainError(f"weight entries must be integers: {weight!r}")
    i = tuple(int(x) for x in weight)
    if not i:
        return True
    if i[0] != 0:
        return False
    for k in range(1, len(i)):
        earlier = set(i[:k])
        if i[k] - 1 not in earlier and i[k] + 1 not in earlier:
            return False
    last_seen: dict[int, int] = {}
    for m, a in enumerate(i):
        if a in last_seen:
            between = set(i[last_seen[a] + 1 : m])
            if a - 1 not in between or a + 1 not in between:
                return False
        last_seen[a] = m
    return True


def weight_to_tableau(weight: Sequence[int]) -> StandardTableau:
    """The unique standard tableau with the given content vector."""
    if not is_valid_weight(weight):
        raise DomainError(f"{tuple(weight)} is not a valid weight")
    diagram = Partition()
    positions = []
    for k, a in enumerate(weight, 1):
        spots = [node for node in addable_nodes(diagram) if node.content == a]
        if len(spots) != 1:
            raise DomainError(f"no addable node of content {a} for entry {k}")
        node = spots[0]
        rows = list(diagram) + [0]
        rows[node.row - 1] += 1
        diagram = Partition(rows)
        positions.append(node)
    return StandardTableau(SkewShape(diagram), positions)


def admissible_transposition(t: StandardTableau, k: int) -> StandardTableau:
    """Swap ``k`` and ``k+1``; allowed only when they sit on non-adjacent diagonals."""
    if not 1 <= k < t.size:
        raise DomainError(f"s_{k} does not act on tableaux with {t.size} entries")
    if abs(t.node_of(k + 1).content - t.node_of(k).content) < 2:
        raise DomainError(f"s_{k} is not admissible: {k} and {k + 1} lie on adjacent diagonals")
    return t.swap(k)


def tableau_permutation(t: StandardTableau) -> Permutation:
    """The ``w`` with ``t = w . canonical_tableau(shape)``."""
    canon = canonical_tableau(t.shape)
    return Permutation(t[node] for node in canon.positions)


def tableau_length(t: StandardTableau) -> int:
    return coxeter_length(tableau_permutation(t))


def path_to_canonical(t: StandardTableau) -> list[int]:
    """Admissible transpositions taking ``t`` to the canonical tableau.

    Applying ``s_{k_1}``, then ``s_{k_2}``, ... to ``t`` lands on the canonical
    tableau, every step is admissible and the word is reduced.
    """
    word = reduced_word(tableau_permutation(t))
    current = t
    for k in word:
        current = admissible_transposition(current, k)
    if current != canonical_tableau(t.shape):
        raise AssertionError("reduced word did not reach the canonical tableau")
    return word
