"""Exact polynomials in x_1, x_2, ... graded by deg(x_k) = k, and Schur polynomials.

The bosonic Fock space is realised as this polynomial ring with ``a_{-n}``
acting as multiplication by ``n x_n`` and ``a_n`` as ``d/dx_n``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping

from .characters import mn_character
from .combinatorics import Partition, partitions_of
from .errors import DomainError, ResourceError, VerificationError
from .linalg import frac_str

DEFAULT_DEGREE_CAP = 16

Exponents = tuple[int, ...]


def _trim(exps: Iterable[int]) -> Exponents:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class GradedPolynomial:
    """Sparse map from exponent vectors ``(a_1, a_2, ...)`` to rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        out: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            key = _trim(exps)
            if any(a < 0 for a in key):
                raise DomainError(f"negative exponent in {key}")
            out[key] = out.get(key, Fraction(0)) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def constant(cls, c) -> "GradedPolynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, k: int, c=1) -> "GradedPolynomial":
        if k < 1:
            raise DomainError("variables are x_1, x_2, ...")
        return cls({(0,) * (k - 1) + (1,): c})

    @classmethod
    def monomial(cls, parts: Iterable[int], c=1) -> "GradedPolynomial":
        """``c * x_{p_1} x_{p_2} ...`` for a multiset of variable indices."""
        parts = list(parts)
        exps = [0] * max(parts, default=0)
        for p in parts:
            exps[p - 1] += 1
        return cls({tuple(exps): c})

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == GradedPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "GradedPolynomial":
        other = _coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GradedPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "GradedPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "GradedPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return GradedPolynomial({k: c * v for k, v in self.terms.items()})
        out: dict[Exponents, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                n = max(len(k1), len(k2))
                key = _trim(
                    (k1[i] if i < len(k1) else 0) + (k2[i] if i < len(k2) else 0) for i in range(n)
                )
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return GradedPolynomial(out)

    __rmul__ = __mul__

    def derivative(self, k: int) -> "GradedPolynomial":
        """``d/dx_k``."""
        out = {}
        for exps, c in self.terms.items():
            if len(exps) >= k and exps[k - 1]:
                e = list(exps)
                out[tuple(e[: k - 1]) + (e[k - 1] - 1,) + tuple(e[k:])] = c * e[k - 1]
        return GradedPolynomial(out)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degrees(self) -> set[int]:
        """Graded degrees of the monomials present."""
        return {sum(i * a for i, a in enumerate(exps, 1)) for exps in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def variables(self) -> set[int]:
        return {i for exps in self.terms for i, a in enumerate(exps, 1) if a}

    def _sorted_terms(self):
        # graded degree, then lexicographically larger x_1 powers first
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(i * a for i, a in enumerate(kv[0], 1)), tuple(-a for a in kv[0])),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self._sorted_terms():
            mono = " ".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(exps, 1) if a
            )
            chunks.append(f"{frac_str(c)} * {mono}" if mono else frac_str(c))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"GradedPolynomial({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"coeff": frac_str(c), "exps": list(exps)} for exps, c in self._sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "GradedPolynomial":
        return cls({tuple(d["exps"]): Fraction(d["coeff"]) for d in data})


def _coerce(x) -> GradedPolynomial:
    return x if isinstance(x, GradedPolynomial) else GradedPolynomial.constant(x)


def _check_cap(degree: int, cap: int):
    if degree > cap:
        raise ResourceError(f"degree {degree} exceeds the working cap {cap}")


@lru_cache(maxsize=None)
def _elementary(k: int) -> GradedPolynomial:
    if k < 0:
        return GradedPolynomial()
    terms = {}
    for rho in partitions_of(k):
        mult = rho.multiplicities()
        exps = tuple(mult.get(i, 0) for i in range(1, k + 1))
        terms[exps] = Fraction(1, prod(factorial(m) for m in mult.values()))
    return GradedPolynomial(terms)


def elementary_schur(k: int, cap: int = DEFAULT_DEGREE_CAP) -> GradedPolynomial:
    """Coefficient of ``z^k`` in ``exp(sum_n x_n z^n)``."""
    _check_cap(k, cap)
    return _elementary(k)


@lru_cache(maxsize=None)
def _schur(lam: Partition) -> GradedPolynomial:
    l = len(lam)
    entries = [[_elementary(lam[i] + j - i) for j in range(l)] for i in range(l)]
    memo: dict[tuple[int, frozenset], GradedPolynomial] = {}

    # Laplace expansion along successive rows, memoised on the unused column set
    def minor(r: int, cols: frozenset) -> GradedPolynomial:
        if r == l:
            return GradedPolynomial.constant(1)
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = GradedPolynomial()
        for pos, c in enumerate(sorted(cols)):
            entry = entries[r][c]
            if entry.is_zero():
                continue
            term = entry * minor(r + 1, cols - {c})
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(l)))


def schur_poly(lam, cap: int = DEFAULT_DEGREE_CAP) -> GradedPolynomial:
    """Jacobi-Trudi determinant ``det(S_{lambda_i + j - i})``."""
    lam = Partition(lam)
    _check_cap(lam.size, cap)
    return _schur(lam)


def power_monomial(rho) -> GradedPolynomial:
    """``P_rho = prod_i rho_i x_{rho_i}``."""
    rho = Partition(rho)
    return GradedPolynomial.monomial(rho, prod(rho))


def monomial_norm(rho) -> Fraction:
    """``(x^rho, x^rho) = prod_i l_i! / i^{l_i}`` with ``l_i`` the multiplicity of ``i``."""
    rho = Partition(rho)
    return Fraction(
        prod(factorial(m) for m in rho.multiplicities().values()),
        prod(i**m for i, m in rho.multiplicities().items()),
    )


def frobenius_expand(rho, cap: int = DEFAULT_DEGREE_CAP) -> dict[Partition, int]:
    """Nonzero coefficients of ``P_rho`` in the Schur basis; the expansion is re-checked exactly."""
    rho = Partition(rho)
    _check_cap(rho.size, cap)
    coeffs = {}
    for lam in partitions_of(rho.size):
        chi = mn_character(lam, rho)
        if chi:
            coeffs[lam] = chi
    rebuilt = GradedPolynomial()
    for lam, chi in coeffs.items():
        rebuilt = rebuilt + schur_poly(lam, cap) * chi
    if rebuilt != power_monomial(rho):
        raise VerificationError(f"Schur expansion of P_{rho} does not reproduce it")
    return coeffs


def schur_in_monomials(lam, cap: int = DEFAULT_DEGREE_CAP) -> GradedPolynomial:
    """``sum_rho chi^lambda(rho) / Z_rho * x^rho`` with ``Z_rho = prod_i l_i!``."""
    lam = Partition(lam)
    _check_cap(lam.size, cap)
    out = GradedPolynomial()
    for rho in partitions_of(lam.size):
        z = prod(factorial(m) for m in rho.multiplicities().values())
        out = out + GradedPolynomial.monomial(rho, Fraction(mn_character(lam, rho), z))
    return out


def contravariant_form(f: GradedPolynomial, g: GradedPolynomial) -> Fraction:
    """``(f, g)``: replace each ``x_n`` in ``f`` by ``(1/n) d/dx_n``, apply to ``g``, evaluate at 0.

    Only the monomial of ``g`` equal to a monomial ``x^a`` of ``f`` survives
    the evaluation, contributing ``prod_n a_n! / n^{a_n}``.
    """
    total = Fraction(0)
    for exps, c in f.terms.items():
        d = g.terms.get(exps)
        if d:
            weight = Fraction(
                prod(factorial(a) for a in exps), prod(n**a for n, a in enumerate(exps, 1))
            )
            total += c * d * weight
    return total
