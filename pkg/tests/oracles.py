"""Independent reference computations used by the tests.

None of these go through the engine's elimination or series code.
"""

import itertools
from math import prod

import sympy


def count_kernel_vectors(rows, p):
    """Number of v in F_p^cols with rows . v = 0, by enumeration."""
    cols = len(rows[0])
    count = 0
    for v in itertools.product(range(p), repeat=cols):
        if all(sum(a * b for a, b in zip(r, v)) % p == 0 for r in rows):
            count += 1
    return count


def rank_over_q(rows):
    return sympy.Matrix(rows).rank()


def sign_by_adjacent_swaps(images, degrees):
    """Koszul sign by bubble-sorting the slots into place one swap at a time.

    Slot contents start in order; the target position of the content in
    slot i is images[i].  Each adjacent swap of two odd contents costs -1.
    """
    targets = list(images)
    degs = list(degrees)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(targets) - 1):
            if targets[i] > targets[i + 1]:
                if degs[i] % 2 and degs[i + 1] % 2:
                    sign = -sign
                targets[i], targets[i + 1] = targets[i + 1], targets[i]
                degs[i], degs[i + 1] = degs[i + 1], degs[i]
                changed = True
    return sign


def graded_sym_dimension(h00, h10, h20, n, q, odd_one_forms=True):
    """dim of the degree-q part of the n-th graded symmetric power.

    Counts multisets of n generators (h00 of degree 0, h10 of degree 1,
    h20 of degree 2) with total degree q.  Odd generators square to zero,
    so with ``odd_one_forms`` each 1-form generator appears at most once.
    """
    gens = [0] * h00 + [1] * h10 + [2] * h20
    count = 0
    for multiset in itertools.combinations_with_replacement(range(len(gens)), n):
        if sum(gens[g] for g in multiset) != q:
            continue
        if odd_one_forms:
            ones = [g for g in multiset if gens[g] == 1]
            if len(ones) != len(set(ones)):
                continue
        count += 1
    return count


def orbit_count_dimension(h00, h10, h20, n, q, characteristic):
    """Fixed-space dimension of the signed permutation module, via orbits.

    Each S_n-orbit of basis monomials spans a summand.  In characteristic 2
    signs are trivial and every orbit contributes one invariant (its sum).
    Otherwise an orbit contributes one iff no stabilizer element acts by -1.
    Brute force over the group; independent of any linear algebra.
    """
    h = (h00, h10, h20)
    monomials = []
    for parts in itertools.product(range(3), repeat=n):
        if sum(parts) != q:
            continue
        for choices in itertools.product(*(range(h[d]) for d in parts)):
            monomials.append((parts, choices))
    perms = list(itertools.permutations(range(n)))

    def image(perm, mono):
        parts, choices = mono
        np_, nc = [0] * n, [0] * n
        for i, j in enumerate(perm):
            np_[j], nc[j] = parts[i], choices[i]
        return tuple(np_), tuple(nc)

    seen = set()
    dim = 0
    for mono in monomials:
        if mono in seen:
            continue
        orbit = {image(p, mono) for p in perms}
        seen |= orbit
        if characteristic == 2:
            dim += 1
            continue
        bad = False
        for p in perms:
            if image(p, mono) == mono and sign_by_adjacent_swaps(p, mono[0]) == -1:
                bad = True
                break
        if not bad:
            dim += 1
    return dim


def basis_count(h00, h10, h20, n, q):
    h = (h00, h10, h20)
    return sum(prod(h[d] for d in parts)
               for parts in itertools.product(range(3), repeat=n) if sum(parts) == q)
