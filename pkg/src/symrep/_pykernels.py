"""Pure-Python hot kernels; exact at any size (Python ints).

Partitions enter the Murnaghan-Nakayama kernel as bead masks: with ``L``
beads, part ``lam_i`` (``i = 1..L``, zero padded) sits at position
``lam_i - i + L``.  Removing a border strip of size ``k`` moves one bead from
``p`` to a free ``p - k``; the leg length is the number of beads strictly
between.
"""
from itertools import permutations

BACKEND = "python"


def bead_mask(parts, beads):
    mask = 0
    for i in range(beads):
        p = parts[i] if i < len(parts) else 0
        mask |= 1 << (p - i - 1 + beads)
    return mask


def _mn(mask, j, rho, target, memo):
    if j == len(rho):
        return 1 if mask == target else 0
    key = (mask, j)
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = rho[j]
    cand = mask & ~(mask << k) & ~((1 << k) - 1)
    total = 0
    while cand:
        low = cand & -cand
        cand ^= low
        p = low.bit_length() - 1
        between = mask & (low - 1) & ~((1 << (p - k + 1)) - 1)
        value = _mn(mask ^ low ^ (low >> k), j + 1, rho, target, memo)
        total += -value if between.bit_count() & 1 else value
    memo[key] = total
    return total


def skew_character(outer, inner, rho):
    """chi^{outer/inner} at cycle type ``rho`` (parts in the order given)."""
    beads = len(outer)
    memo = {}
    return _mn(bead_mask(outer, beads), 0, tuple(rho), bead_mask(inner, beads), memo)


def character_table(n, shapes, classes):
    """Rows indexed by ``shapes``, columns by ``classes``; one memo per column."""
    empty = bead_mask((), n)
    table = [[0] * len(classes) for _ in shapes]
    for c, rho in enumerate(classes):
        memo = {}
        rho = tuple(rho)
        for r, lam in enumerate(shapes):
            table[r][c] = _mn(bead_mask(lam, n), 0, rho, empty, memo)
    return table


def mult_table(n):
    """Permutations of ``0..n-1`` in lexicographic order and ``table[i][j] = index(p_i o p_j)``."""
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    return perms, table


def convolve(a, b, table):
    """``c[g] = sum_{h k = g} a[h] b[k]`` over integer coefficient vectors."""
    c = [0] * len(a)
    nz_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        row = table[i]
        for j, y in nz_b:
            c[row[j]] += x * y
    return c
