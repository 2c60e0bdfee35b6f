"""Acceptance criteria: one check per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or under pytest.
"""
import time
from itertools import product
from math import factorial

import numpy as np
import pytest

from symrep.characters import (
    GroupAlgebraElement,
    central_idempotent,
    character_table,
    hook_cycle_character,
    mn_character,
    removable_indicator,
    restriction_multiplicities,
)
from symrep.combinatorics import Permutation, SkewShape, class_representative, hook_dimension, partitions_of
from symrep.fock import FockVector, apply_word, boson_image_residual, fock_character, heisenberg_residual
from symrep.linalg import ExactMatrix
from symrep.repforms import jm_matrix, natural_module_check, orthogonal_rep, seminormal_rep
from symrep.symfunc import GradedPolynomial, contravariant_form, power_monomial, schur_in_monomials, schur_poly
from symrep.tableaux import is_valid_weight, standard_tableaux

FLOAT_TOL = 1e-9


def _max_abs(m) -> float:
    return float(np.abs(m).max()) if m.size else 0.0


def character_tables():
    for n in range(1, 8):
        t = character_table(n)
        order, k = factorial(n), len(t.row_labels)
        for a in range(k):
            for b in range(k):
                row = sum(s * x * y for s, x, y in zip(t.class_sizes, t.entries[a], t.entries[b]))
                col = sum(r[a] * r[b] for r in t.entries) * t.class_sizes[a]
                if row != (order if a == b else 0) or col != (order if a == b else 0):
                    return False, f"orthogonality fails at n={n}"
        if sum(x * x for x in t.column((1,) * n)) != order:
            return False, f"sum of squared dimensions fails at n={n}"
    return True, "n <= 7"


def three_way_characters():
    triples = 0
    for n in range(1, 7):
        for lam in partitions_of(n):
            rep = seminormal_rep(lam)
            for rho in partitions_of(n):
                mn = mn_character(lam, rho)
                trace = rep.matrix(class_representative(rho)).trace()
                fock = fock_character(lam, rho)
                if not mn == trace == fock:
                    return False, f"{lam} at {rho}: mn={mn} trace={trace} fock={fock}"
                triples += 1
    return True, f"{triples} triples"


def dimensions():
    for n in range(1, 11):
        dims = character_table(n).column((1,) * n)
        for lam, chi in zip(character_table(n).row_labels, dims):
            if not hook_dimension(lam) == len(standard_tableaux(lam)) == chi:
                return False, f"{lam}"
    d = hook_dimension((5, 3, 3, 1))
    return d == 4158, f"dim V(5,3,3,1) = {d}"


def representation_relations():
    worst = 0.0
    for n in range(1, 7):
        for lam in partitions_of(n):
            g = seminormal_rep(lam).gens
            one = ExactMatrix.identity(len(seminormal_rep(lam).basis))
            for i in range(n - 1):
                if g[i] @ g[i] != one:
                    return False, f"seminormal s^2 at {lam}"
                if i + 1 < n - 1 and g[i] @ g[i + 1] @ g[i] != g[i + 1] @ g[i] @ g[i + 1]:
                    return False, f"seminormal braid at {lam}"
                if any(g[i] @ g[j] != g[j] @ g[i] for j in range(i + 2, n - 1)):
                    return False, f"seminormal commuting at {lam}"
            o = orthogonal_rep(lam).gens
            eye = np.eye(len(one.rows))
            for i in range(n - 1):
                worst = max(worst, _max_abs(o[i].T @ o[i] - eye), _max_abs(o[i] @ o[i] - eye))
                if i + 1 < n - 1:
                    worst = max(worst, _max_abs(o[i] @ o[i + 1] @ o[i] - o[i + 1] @ o[i] @ o[i + 1]))
                for j in range(i + 2, n - 1):
                    worst = max(worst, _max_abs(o[i] @ o[j] - o[j] @ o[i]))
    return worst <= FLOAT_TOL, f"orthogonal residual {worst:.1e}"


def jm_spectrum():
    for n in range(1, 7):
        for lam in partitions_of(n):
            rep = seminormal_rep(lam)
            jms = [jm_matrix(rep, k) for k in range(1, n + 1)]
            for k, m in enumerate(jms, 1):
                if not m.is_diagonal() or m.diag() != [t.node_of(k).content for t in rep.basis]:
                    return False, f"L_{k} at {lam}"
            one = ExactMatrix.identity(rep.dim)
            for k in range(1, n):
                if rep.gens[k - 1] @ jms[k - 1] != jms[k] @ rep.gens[k - 1] - one:
                    return False, f"s_k L_k relation at {lam}, k={k}"
    return True, "n <= 6"


def frobenius_identities():
    for n in range(1, 7):
        shapes = partitions_of(n)
        for rho in shapes:
            total = GradedPolynomial()
            for lam in shapes:
                total = total + schur_poly(lam) * mn_character(lam, rho)
            if total != power_monomial(rho):
                return False, f"P_{rho}"
        for lam in shapes:
            if schur_in_monomials(lam) != schur_poly(lam):
                return False, f"monomial expansion of S_{lam}"
    every = [lam for m in range(0, 7) for lam in partitions_of(m)]
    for a in every:
        for b in every:
            if contravariant_form(schur_poly(a), schur_poly(b)) != (1 if a == b else 0):
                return False, f"(S_{a}, S_{b})"
    return True, "n <= 6"


def heisenberg_relations():
    ks = [k for k in range(-4, 5) if k]
    count = 0
    for m in range(0, 9):
        for lam in partitions_of(m):
            for n in ks:
                for k in ks:
                    if not heisenberg_residual(n, k, lam, cap=16).is_zero():
                        return False, f"n={n} k={k} at {lam}"
                    count += 1
    vac = FockVector.vacuum(16)
    bracket = apply_word([2, -2], vac) - apply_word([-2, 2], vac)
    return bracket == vac * 2, f"{count} residuals, [L2, L-2] v0 = 2 v0"


def boson_fermion():
    count = 0
    for m in range(0, 7):
        for lam in partitions_of(m):
            for n in (1, 2, 3):
                for direction in ("raise", "lower"):
                    if not boson_image_residual(lam, n, direction, cap=12).is_zero():
                        return False, f"{direction} n={n} at {lam}"
                    count += 1
    return True, f"{count} residuals"


def idempotents():
    for n in range(1, 6):
        shapes = partitions_of(n)
        es = {lam: central_idempotent(n, lam) for lam in shapes}
        zero, total = GroupAlgebraElement(n), GroupAlgebraElement(n)
        gens = [GroupAlgebraElement.basis(Permutation.simple(k, n)) for k in range(1, n)]
        for lam, e in es.items():
            total = total + e
            for mu, f in es.items():
                if e * f != (e if lam == mu else zero):
                    return False, f"e_{lam} e_{mu}"
            if any(g * e != e * g for g in gens):
                return False, f"e_{lam} not central"
            for mu in shapes:
                rep = seminormal_rep(mu)
                want = ExactMatrix.identity(rep.dim) if lam == mu else ExactMatrix.zeros(rep.dim)
                if e.act(rep) != want:
                    return False, f"e_{lam} on V_{mu}"
        if total != GroupAlgebraElement.identity(n):
            return False, f"sum at n={n}"
    return True, "n <= 5"


def weight_spectrum():
    for n in range(1, 6):
        contents = {t.content_vector() for lam in partitions_of(n) for t in standard_tableaux(lam)}
        valid = {w for w in product(range(-(n - 1), n), repeat=n) if is_valid_weight(w)}
        if valid != contents:
            return False, f"n={n}: {len(valid)} valid weights vs {len(contents)} content vectors"
    return True, "n <= 5"


def skew_mn():
    worst, shapes = 0.0, 0
    for n in range(1, 7):
        for outer in partitions_of(n):
            for m in range(0, n):
                for inner in partitions_of(m):
                    if not outer.contains(inner):
                        continue
                    shape = SkewShape(outer, inner)
                    k = shape.size
                    hook = hook_cycle_character(shape)
                    if hook != mn_character(shape, (k,)):
                        return False, f"{shape}"
                    trace = float(np.trace(orthogonal_rep(shape).matrix(class_representative((k,)))))
                    worst = max(worst, abs(trace - hook))
                    shapes += 1
    return worst <= FLOAT_TOL, f"{shapes} shapes, trace residual {worst:.1e}"


def natural_module():
    bad = [n for n in range(2, 9) if not natural_module_check(n, FLOAT_TOL)]
    return not bad, f"failing n: {bad}" if bad else "2 <= n <= 8"


def branching():
    for n in range(1, 8):
        for lam in partitions_of(n):
            if restriction_multiplicities(lam) != removable_indicator(lam):
                return False, f"{lam}"
    return True, "n <= 7"


# (label, check, runtime bound in seconds or None)
CRITERIA = [
    ("01 character tables", character_tables, 5.0),
    ("02 three-way character agreement", three_way_characters, 30.0),
    ("03 dimensions", dimensions, None),
    ("04 representation relations", representation_relations, None),
    ("05 JM spectrum", jm_spectrum, None),
    ("06 Frobenius identities", frobenius_identities, 10.0),
    ("07 Heisenberg relations", heisenberg_relations, None),
    ("08 boson-fermion correspondence", boson_fermion, None),
    ("09 idempotents", idempotents, 60.0),
    ("10 weight spectrum", weight_spectrum, None),
    ("11 skew MN", skew_mn, None),
    ("12 natural module", natural_module, None),
    ("13 branching", branching, None),
]


def evaluate(label, check, bound):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if bound is not None and elapsed > bound:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s > {bound:.0f}s"
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail} ({elapsed:.2f}s)"
    return ok, line


@pytest.mark.parametrize("label, check, bound", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, check, bound, capsys):
    ok, line = evaluate(label, check, bound)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
