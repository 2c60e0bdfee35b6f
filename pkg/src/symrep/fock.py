"""Truncated fermionic Fock space on the partition basis ``{v_lambda}``.

``Lambda_k`` (``k > 0``) removes border strips of size ``k`` and
``Lambda_{-k}`` adds them, each with sign ``(-1)^leg``.  Vectors carry a
degree cap; producing a partition above it raises instead of clipping.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .combinatorics import Partition, add_border_strips, partitions_of, remove_border_strips
from .errors import DomainError, PreconditionError, TruncationError
from .linalg import frac_str, rref
from .symfunc import GradedPolynomial, schur_poly

DEFAULT_FOCK_CAP = 12

LAMBDA_ZERO_MESSAGE = (
    "Lambda_0 is not well defined on the fermionic Fock space: "
    "the diagonal sum acts by an infinite scalar on every semi-infinite wedge"
)


class FockVector:
    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, cap: int = DEFAULT_FOCK_CAP):
        self.cap = cap
        out: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if lam.size > cap:
                raise TruncationError(f"v_{lam} lies above the degree cap {cap}")
            out[lam] = out.get(lam, Fraction(0)) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def basis(cls, lam, cap: int = DEFAULT_FOCK_CAP) -> "FockVector":
        return cls({Partition(lam): 1}, cap)

    @classmethod
    def vacuum(cls, cap: int = DEFAULT_FOCK_CAP) -> "FockVector":
        return cls({Partition(): 1}, cap)

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, FockVector):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return FockVector(out, max(self.cap, other.cap))

    def __neg__(self) -> "FockVector":
        return FockVector({k: -v for k, v in self.terms.items()}, self.cap)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __mul__(self, c) -> "FockVector":
        return FockVector({k: Fraction(c) * v for k, v in self.terms.items()}, self.cap)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def pairing(self, other: "FockVector") -> Fraction:
        """The form with ``(v_lambda, v_mu) = delta``."""
        return sum((c * other.terms.get(k, 0) for k, c in self.terms.items()), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, tuple(-p for p in kv[0])))

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": frac_str(c)} for lam, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{frac_str(c)} v[{lam}]" for lam, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"FockVector({str(self)!r}, cap={self.cap})"


def lambda_op(k: int, v: FockVector) -> FockVector:
    """Apply ``Lambda_k`` (strip removal for ``k > 0``, strip addition for ``k < 0``)."""
    if k == 0:
        raise DomainError(LAMBDA_ZERO_MESSAGE)
    out: dict[Partition, Fraction] = {}
    for lam, c in v.terms.items():
        moves = remove_border_strips(lam, k) if k > 0 else add_border_strips(lam, -k)
        for mu, leg in moves:
            if mu.size > v.cap:
                raise TruncationError(f"Lambda_{k} v_{lam} reaches |{mu}| = {mu.size} > cap {v.cap}")
            out[mu] = out.get(mu, Fraction(0)) + (c if leg % 2 == 0 else -c)
    return FockVector(out, v.cap)


def apply_word(ks: Sequence[int], v: FockVector) -> FockVector:
    """``Lambda_{k_1} ... Lambda_{k_l} v`` (rightmost factor first)."""
    for k in reversed(ks):
        v = lambda_op(k, v)
    return v


def heisenberg_residual(n: int, k: int, lam, cap: int = DEFAULT_FOCK_CAP) -> FockVector:
    """``[Lambda_n, Lambda_k] v_lambda - n delta_{n,-k} v_lambda``; zero when the relation holds."""
    lam = Partition(lam)
    if n == 0 or k == 0:
        raise DomainError(LAMBDA_ZERO_MESSAGE)
    if lam.size + abs(n) + abs(k) > cap:
        raise PreconditionError(f"cap {cap} < |lambda| + |n| + |k| = {lam.size + abs(n) + abs(k)}")
    v = FockVector.basis(lam, cap)
    bracket = lambda_op(n, lambda_op(k, v)) - lambda_op(k, lambda_op(n, v))
    return bracket - v * (n if n == -k else 0)


def fock_character(lam, rho, cap: int | None = None, inner=()) -> int:
    """Coefficient of ``v_inner`` (default ``v_empty``) in ``Lambda_{rho_1} ... Lambda_{rho_l} v_lambda``.

    With a nonempty ``inner`` this is the skew character of ``lambda/inner``.
    """
    lam, inner = Partition(lam), Partition(inner)
    rho = Partition(sorted(rho, reverse=True))
    if lam.size - inner.size != rho.size:
        raise DomainError(f"|lambda/mu| = {lam.size - inner.size} but |rho| = {rho.size}")
    v = apply_word(list(rho), FockVector.basis(lam, cap if cap is not None else max(lam.size, 1)))
    value = v.coefficient(inner)
    if value.denominator != 1:
        raise AssertionError(f"non-integral character value {value}")
    return int(value)


def fock_character_pairing(lam, rho, cap: int | None = None) -> int:
    """``(v_lambda, Lambda_{-rho_1} ... Lambda_{-rho_l} v_empty)``."""
    lam, rho = Partition(lam), Partition(sorted(rho, reverse=True))
    if lam.size != rho.size:
        raise DomainError(f"|lambda| = {lam.size} but |rho| = {rho.size}")
    cap = cap if cap is not None else max(lam.size, 1)
    v = apply_word([-p for p in rho], FockVector.vacuum(cap))
    return int(FockVector.basis(lam, cap).pairing(v))


def boson_image(v: FockVector) -> GradedPolynomial:
    """``sigma(v_lambda) = S_lambda`` extended linearly."""
    out = GradedPolynomial()
    for lam, c in v.terms.items():
        out = out + schur_poly(lam, max(v.cap, lam.size)) * c
    return out


def boson_image_residual(lam, n: int, direction: str = "raise", cap: int = DEFAULT_FOCK_CAP) -> GradedPolynomial:
    """Defect of ``sigma`` intertwining ``Lambda_{-n}`` with ``n x_n`` (raise) or ``Lambda_n`` with ``d/dx_n`` (lower)."""
    lam = Partition(lam)
    if n < 1:
        raise DomainError("n must be a positive integer")
    if lam.size + n > cap:
        raise PreconditionError(f"cap {cap} < |lambda| + n = {lam.size + n}")
    v = FockVector.basis(lam, cap)
    s_lam = schur_poly(lam, cap)
    if direction == "raise":
        return boson_image(lambda_op(-n, v)) - GradedPolynomial.variable(n, n) * s_lam
    if direction == "lower":
        return boson_image(lambda_op(n, v)) - s_lam.derivative(n)
    raise DomainError(f"direction must be 'raise' or 'lower', not {direction!r}")


def graded_dimension(j: int, cap: int | None = None) -> int:
    """Rank of ``{Lambda_{-rho_1} ... Lambda_{-rho_l} v_empty : rho |- j}`` inside degree ``j``."""
    cap = cap if cap is not None else max(j, 1)
    shapes = partitions_of(j)
    index = {lam: i for i, lam in enumerate(shapes)}
    rows = []
    for rho in shapes:
        v = apply_word([-p for p in rho], FockVector.vacuum(cap))
        row = [Fraction(0)] * len(shapes)
        for lam, c in v.terms.items():
            row[index[lam]] = c
        rows.append(row)
    return len(rref(rows)[1])
