"""Explicit matrix models of irreducible (and skew) representations of S_n.

Bases are standard tableaux ordered by content vector.  Column ``j`` of a
generator matrix holds the coordinates of ``s_k`` applied to basis vector
``j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import sqrt

import numpy as np

from .combinatorics import Partition, Permutation, SkewShape
from .errors import DomainError, VerificationError
from .linalg import ExactMatrix, float_residual, nullspace
from .tableaux import StandardTableau, standard_tableaux, tableau_length

DEFAULT_TOLERANCE = 1e-9


class _Representation:
    """Shared matrix bookkeeping: generators, memoised permutation matrices."""

    shape: SkewShape
    basis: tuple[StandardTableau, ...]
    gens: list

    @property
    def n(self) -> int:
        return self.shape.size

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, t: StandardTableau) -> int:
        return self._index[t]

    def _identity(self):
        raise NotImplementedError

    def matrix(self, w: Permutation):
        """Product of generator matrices along a reduced word of ``w``."""
        w = Permutation(w)
        if len(w) != self.n:
            raise DomainError(f"permutation of {len(w)} letters acting on a rep of S_{self.n}")
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                shorter = w * Permutation.simple(i + 1, len(w))
                result = self.matrix(shorter) @ self.gens[i]
                break
        else:
            result = self._identity()
        self._cache[w] = result
        return result


@dataclass(eq=False)
class SeminormalRep(_Representation):
    lam: Partition
    basis: tuple[StandardTableau, ...]
    gens: list[ExactMatrix]
    _index: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.basis)}

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.lam)

    def _identity(self):
        return ExactMatrix.identity(self.dim)


@dataclass(eq=False)
class OrthogonalRep(_Representation):
    shape: SkewShape
    basis: tuple[StandardTableau, ...]
    gens: list[np.ndarray]
    _index: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.basis)}

    def _identity(self):
        return np.eye(self.dim)


def _axial(t: StandardTableau, k: int) -> int:
    return t.node_of(k + 1).content - t.node_of(k).content


def seminormal_rep(lam) -> SeminormalRep:
    """Young's seminormal form with exact rational entries.

    For ``d = cont(k+1) - cont(k)``: if ``d = +-1`` then ``s_k v_T = +-v_T``;
    otherwise the diagonal entry is ``1/d`` and the off-diagonal entry is
    ``1`` when swapping raises the tableau length, ``1 - 1/d^2`` when it
    lowers it.
    """
    lam = Partition(lam)
    if not lam:
        raise DomainError("seminormal form needs a nonempty partition")
    basis = tuple(standard_tableaux(lam))
    index = {t: i for i, t in enumerate(basis)}
    lengths = {t: tableau_length(t) for t in basis}
    n, dim = lam.size, len(basis)
    gens = []
    for k in range(1, n):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for j, t in enumerate(basis):
            d = _axial(t, k)
            if abs(d) == 1:
                m[j][j] = Fraction(d)
                continue
            rho = Fraction(1, d)
            s = t.swap(k)
            i = index[s]
            m[j][j] = rho
            m[i][j] = Fraction(1) if lengths[s] > lengths[t] else 1 - rho * rho
        gens.append(ExactMatrix(m))
    return SeminormalRep(lam, basis, gens)


def orthogonal_rep(shape) -> OrthogonalRep:
    """Young's orthogonal form for a straight or skew shape.

    ``s_k w_T = rho w_T + sqrt(1 - rho^2) w_{s_k T}`` with ``rho = 1/d``; the
    second term vanishes when ``d = +-1``.  Matrices are symmetric by
    construction.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    if shape.size == 0:
        raise DomainError("orthogonal form needs a nonempty shape")
    basis = tuple(standard_tableaux(shape))
    index = {t: i for i, t in enumerate(basis)}
    dim = len(basis)
    gens = []
    for k in range(1, shape.size):
        m = np.zeros((dim, dim))
        for j, t in enumerate(basis):
            d = _axial(t, k)
            m[j, j] = 1.0 / d
            if abs(d) >= 2:
                m[index[t.swap(k)], j] = sqrt(1.0 - 1.0 / (d * d))
        gens.append(m)
    return OrthogonalRep(shape, basis, gens)


def rep_matrix(rep: _Representation, w: Permutation):
    return rep.matrix(w)


def jm_matrix(rep: _Representation, k: int):
    """Image of the Jucys-Murphy element ``L_k = sum_{m<k} (m, k)``."""
    if not 1 <= k <= rep.n:
        raise DomainError(f"L_{k} is not defined in S_{rep.n}")
    total = rep._identity() * 0
    for m in range(1, k):
        total = total + rep.matrix(Permutation.transposition(m, k, rep.n))
    return total


# -- the rank two degenerate affine Hecke algebra -----------------------------

@dataclass(frozen=True)
class HeckeModuleLab:
    """The module ``L(a, b)`` of ``H_2 = <s, x, y | xy = yx, s^2 = 1, sx = ys - 1>``."""

    a: Fraction
    b: Fraction
    x: ExactMatrix
    y: ExactMatrix
    s: ExactMatrix

    @property
    def dim(self) -> int:
        return self.x.shape[0]

    def relation_residuals(self) -> dict[str, ExactMatrix]:
        one = ExactMatrix.identity(self.dim)
        return {
            "xy=yx": self.x @ self.y - self.y @ self.x,
            "s^2=1": self.s @ self.s - one,
            "sx=ys-1": self.s @ self.x - (self.y @ self.s - one),
        }


def hecke_L(a, b) -> HeckeModuleLab:
    a, b = Fraction(a), Fraction(b)
    if b == a + 1:
        mats = ([[a]], [[b]], [[1]])
    elif b == a - 1:
        mats = ([[a]], [[b]], [[-1]])
    else:
        mats = ([[a, -1], [0, b]], [[b, 1], [0, a]], [[0, 1], [1, 0]])
    module = HeckeModuleLab(a, b, *(ExactMatrix(m) for m in mats))
    for name, residual in module.relation_residuals().items():
        if not residual.is_zero():
            raise VerificationError(f"L({a},{b}) violates {name}")
    return module


def intertwiners(m1: HeckeModuleLab, m2: HeckeModuleLab) -> list[ExactMatrix]:
    """Basis of ``{M : M g_1 = g_2 M for g in x, y, s}``."""
    n1, n2 = m1.dim, m2.dim
    rows = []
    # unknown M is n2 x n1, flattened row-major; coefficient of M[p][q] in (M A - B M)[i][j]
    for g1, g2 in ((m1.x, m2.x), (m1.y, m2.y), (m1.s, m2.s)):
        for i, j in product(range(n2), range(n1)):
            row = [Fraction(0)] * (n2 * n1)
            for q in range(n1):
                row[i * n1 + q] += g1[q, j]
            for p in range(n2):
                row[p * n1 + j] -= g2[i, p]
            rows.append(row)
    return [ExactMatrix([v[i * n1 : (i + 1) * n1] for i in range(n2)]) for v in nullspace(rows)]


def hecke_iso_check(a, b, c=None, d=None) -> bool:
    """Is ``L(a, b)`` isomorphic to ``L(c, d)``?  Defaults to ``(c, d) = (b, a)``.

    Both modules must be two-dimensional irreducible with distinct
    eigenvalues (``a != b, b +- 1``).
    """
    a, b = Fraction(a), Fraction(b)
    c, d = (b, a) if c is None else (Fraction(c), Fraction(d))
    for p, q in ((a, b), (c, d)):
        if p == q or abs(p - q) == 1:
            raise DomainError(f"L({p},{q}) needs a != b and a != b +- 1")
    m1, m2 = hecke_L(a, b), hecke_L(c, d)
    if m1.dim != m2.dim:
        return False
    basis = intertwiners(m1, m2)
    # det of a generic combination is a degree-dim polynomial in the coefficients;
    # a grid with dim+1 values per coordinate cannot be a zero set for it
    for coeffs in product(range(m1.dim + 1), repeat=len(basis)):
        total = ExactMatrix.zeros(m2.dim, m1.dim)
        for c_, m in zip(coeffs, basis):
            total = total + m * c_
        if total.det() != 0:
            return True
    return False


# -- natural permutation module -------------------------------------------------

def natural_module_basis(n: int) -> np.ndarray:
    """Columns ``v_j = (e_1 + ... + e_{j-1} - (j-1) e_j) / sqrt(j(j-1))``, ``j = 2..n``."""
    v = np.zeros((n, n - 1))
    for j in range(2, n + 1):
        v[: j - 1, j - 2] = 1.0
        v[j - 1, j - 2] = -(j - 1)
        v[:, j - 2] /= sqrt(j * (j - 1))
    return v


def natural_module_matrices(n: int, tol: float = DEFAULT_TOLERANCE) -> list[np.ndarray]:
    """Matrices of ``s_1..s_{n-1}`` on the sum-zero submodule in the basis above."""
    v = natural_module_basis(n)
    mats = []
    for i in range(1, n):
        perm = np.eye(n)
        perm[[i - 1, i]] = perm[[i, i - 1]]
        a = v.T @ perm @ v
        if float_residual(perm @ v, v @ a) > tol:
            raise VerificationError(f"span of v_j is not s_{i}-stable")
        mats.append(a)
    return mats


def natural_module_formula(n: int) -> list[np.ndarray]:
    """The same matrices written down directly from the closed-form action."""
    mats = []
    for i in range(1, n):
        a = np.eye(n - 1)
        if i >= 2:
            c = sqrt(1 - 1 / i**2)
            p, q = i - 2, i - 1
            a[p, p], a[q, p] = 1 / i, c
            a[p, q], a[q, q] = c, -1 / i
        else:
            a[0, 0] = -1.0
        mats.append(a)
    return mats


def natural_module_check(n: int, tol: float = DEFAULT_TOLERANCE) -> bool:
    if n < 2:
        raise DomainError("natural module check needs n >= 2")
    rep = orthogonal_rep(Partition((n - 1, 1)))
    return all(
        float_residual(a, g) <= tol for a, g in zip(natural_module_matrices(n, tol), rep.gens)
    )
