"""Cross-validation sweeps shared by the CLI ``verify`` command.

Each suite yields ``Check`` records; a suite passes when every record does.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

import numpy as np

from .characters import character_table, hook_cycle_character, mn_character, removable_indicator, restriction_multiplicities
from .combinatorics import (
    Partition,
    Permutation,
    SkewShape,
    class_representative,
    hook_dimension,
    partitions_of,
)
from .fock import boson_image_residual, fock_character, heisenberg_residual
from .linalg import ExactMatrix, float_residual
from .repforms import jm_matrix, orthogonal_rep, seminormal_rep
from .symfunc import contravariant_form, power_monomial, schur_in_monomials, schur_poly
from .tableaux import standard_tableaux


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.suite}: {self.name}" + (f" ({self.detail})" if self.detail else "")


def _shapes(n_max: int) -> Iterator[Partition]:
    for m in range(1, n_max + 1):
        yield from partitions_of(m)


def coxeter_suite(n_max: int, tol: float) -> Iterator[Check]:
    for lam in _shapes(n_max):
        sn = seminormal_rep(lam)
        n, g = lam.size, sn.gens
        one = ExactMatrix.identity(sn.dim)
        ok = all(x @ x == one for x in g)
        ok &= all(g[k] @ g[k + 1] @ g[k] == g[k + 1] @ g[k] @ g[k + 1] for k in range(n - 2))
        ok &= all(g[i] @ g[j] == g[j] @ g[i] for i in range(n - 1) for j in range(i + 2, n - 1))
        yield Check("coxeter", f"seminormal relations {lam}", ok)

        og = orthogonal_rep(lam).gens
        eye = np.eye(len(sn.basis))
        res = max(
            [float_residual(x.T @ x, eye) for x in og]
            + [float_residual(x @ x, eye) for x in og]
            + [float_residual(og[k] @ og[k + 1] @ og[k], og[k + 1] @ og[k] @ og[k + 1]) for k in range(n - 2)]
            + [float_residual(og[i] @ og[j], og[j] @ og[i]) for i in range(n - 1) for j in range(i + 2, n - 1)],
            default=0.0,
        )
        yield Check("coxeter", f"orthogonal relations {lam}", res <= tol, f"residual {res:.2e}")

        jms = [jm_matrix(sn, k) for k in range(1, n + 1)]
        spectrum = all(
            jms[k - 1].is_diagonal()
            and jms[k - 1].diag() == [t.node_of(k).content for t in sn.basis]
            for k in range(1, n + 1)
        )
        yield Check("coxeter", f"JM spectrum {lam}", spectrum)
        rel = all(g[k - 1] @ jms[k - 1] == jms[k] @ g[k - 1] - one for k in range(1, n))
        yield Check("coxeter", f"s_k L_k = L_(k+1) s_k - 1 {lam}", rel)


def orthogonality_suite(n_max: int, tol: float) -> Iterator[Check]:
    for n in range(1, n_max + 1):
        table = character_table(n)
        order = factorial(n)
        rows, sizes = table.entries, table.class_sizes
        row_ok = all(
            sum(c * a * b for c, a, b in zip(sizes, r1, r2)) == (order if i == j else 0)
            for i, r1 in enumerate(rows)
            for j, r2 in enumerate(rows)
        )
        yield Check("orthogonality", f"row orthogonality n={n}", row_ok)
        cols = list(zip(*rows))
        col_ok = all(
            sum(a * b for a, b in zip(c1, c2)) * (sizes[i] if i == j else 1) == (order if i == j else 0)
            for i, c1 in enumerate(cols)
            for j, c2 in enumerate(cols)
        )
        yield Check("orthogonality", f"column orthogonality n={n}", col_ok)
        dims = table.column((1,) * n)
        yield Check("orthogonality", f"sum of squared dimensions n={n}", sum(d * d for d in dims) == order)
        yield Check(
            "orthogonality",
            f"dimensions = hook formula = tableau count n={n}",
            all(d == hook_dimension(lam) == len(standard_tableaux(lam)) for lam, d in zip(table.row_labels, dims)),
        )
        yield Check(
            "orthogonality",
            f"branching multiplicity-free n={n}",
            all(restriction_multiplicities(lam) == removable_indicator(lam) for lam in table.row_labels),
        )


def characters_suite(n_max: int, tol: float) -> Iterator[Check]:
    for n in range(1, n_max + 1):
        bad = []
        for lam in partitions_of(n):
            rep = seminormal_rep(lam)
            for rho in partitions_of(n):
                mn = mn_character(lam, rho)
                tr = rep.matrix(class_representative(rho)).trace()
                fk = fock_character(lam, rho)
                if not mn == tr == fk:
                    bad.append(f"{lam}@{rho}: mn={mn} trace={tr} fock={fk}")
        yield Check("characters", f"mn = trace = fock n={n}", not bad, "; ".join(bad[:3]))
        worst, bad = 0.0, []
        for outer in partitions_of(n):
            for m in range(n):
                for inner in partitions_of(m):
                    if not outer.contains(inner):
                        continue
                    shape = SkewShape(outer, inner)
                    k = shape.size
                    hook, mn = hook_cycle_character(shape), mn_character(shape, (k,))
                    trace = float(np.trace(orthogonal_rep(shape).matrix(class_representative((k,)))))
                    worst = max(worst, abs(trace - hook))
                    if hook != mn or abs(trace - hook) > tol:
                        bad.append(f"{shape}: hook={hook} mn={mn} trace={trace:.3g}")
        yield Check("characters", f"skew full-cycle values |outer|={n}", not bad, f"max residual {worst:.2e}")


def fock_suite(n_max: int, tol: float, ops: int = 4) -> Iterator[Check]:
    cap = n_max + 2 * ops
    rng = [k for k in range(-ops, ops + 1) if k]
    for m in range(0, n_max + 1):
        bad = [
            (n, k, lam)
            for lam in partitions_of(m)
            for n in rng
            for k in rng
            if not heisenberg_residual(n, k, lam, cap).is_zero()
        ]
        yield Check("fock", f"[Lambda_n, Lambda_k] = n delta v, |lambda|={m}", not bad, str(bad[:3]) if bad else "")


def boson_suite(n_max: int, tol: float, ops: int = 3) -> Iterator[Check]:
    for m in range(0, n_max + 1):
        ok = all(
            boson_image_residual(lam, n, d, cap=m + ops).is_zero()
            for lam in partitions_of(m)
            for n in range(1, ops + 1)
            for d in ("raise", "lower")
        )
        yield Check("boson", f"sigma intertwines Lambda_(+-n) |lambda|={m}", ok)
    for n in range(1, n_max + 1):
        shapes = partitions_of(n)
        frob = all(
            sum((schur_poly(lam) * mn_character(lam, rho) for lam in shapes), schur_poly(()) * 0)
            == power_monomial(rho)
            for rho in shapes
        )
        yield Check("boson", f"Frobenius formula n={n}", frob)
        yield Check(
            "boson",
            f"Schur in monomials = Jacobi-Trudi n={n}",
            all(schur_in_monomials(lam) == schur_poly(lam) for lam in shapes),
        )
        yield Check(
            "boson",
            f"Schur orthonormality n={n}",
            all(
                contravariant_form(schur_poly(a), schur_poly(b)) == Fraction(a == b)
                for a in shapes
                for b in shapes
            ),
        )


SUITES: dict[str, Callable[[int, float], Iterator[Check]]] = {
    "coxeter": coxeter_suite,
    "orthogonality": orthogonality_suite,
    "characters": characters_suite,
    "fock": fock_suite,
    "boson": boson_suite,
}


def run_suites(names: list[str], n_max: int, tol: float) -> list[Check]:
    checks = []
    for name in names:
        checks.extend(SUITES[name](n_max, tol))
    return checks
