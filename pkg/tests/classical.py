"""Independent classical character table of the even permutation group.

Brute force over group elements: conjugacy classes by orbit enumeration,
class-algebra structure constants from permutation multiplication tables,
then simultaneous diagonalization of the class-sum matrices.  Shares no
code with the package's seminormal machinery.
"""

from itertools import permutations as iter_permutations

import numpy as np


def _compose(a, b):
    # one-line tuples over 1..n acting as functions: (a*b)(i) = a(b(i))
    return tuple(a[b[i] - 1] for i in range(len(a)))


def _inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v - 1] = i + 1
    return tuple(out)


def _is_even(a):
    n = len(a)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])
    return inv % 2 == 0


def classical_alt_table(n, seed=12345):
    """(classes, chars): conjugacy classes of even permutations as lists of
    one-line tuples, and the irreducible characters as complex row vectors
    over those classes."""
    elems = [p for p in iter_permutations(range(1, n + 1)) if _is_even(p)]
    elem_set = set(elems)
    assert len(elems) in (1, len(list(iter_permutations(range(1, n + 1)))) // 2)

    class_of = {}
    classes = []
    for p in elems:
        if p in class_of:
            continue
        orbit = {p}
        stack = [p]
        while stack:
            x = stack.pop()
            for g in elems:
                y = _compose(_compose(g, x), _inverse(g))
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        idx = len(classes)
        classes.append(sorted(orbit))
        for x in orbit:
            class_of[x] = idx

    r = len(classes)
    reps = [cls[0] for cls in classes]
    # structure constants: K_i K_j = sum_k a[i][j][k] K_k, computed by
    # counting solutions x*y = rep_k with x in C_i
    a = np.zeros((r, r, r))
    for i, ci in enumerate(classes):
        for x in ci:
            xinv = _inverse(x)
            for k, z in enumerate(reps):
                y = _compose(xinv, z)
                a[i][class_of[y]][k] += 1

    rng = np.random.default_rng(seed)
    combo = np.zeros((r, r), dtype=complex)
    for i in range(r):
        # (A_i w)_j = sum_k a[i][j][k] w_k has the central characters as
        # eigenvectors with eigenvalue w_i
        combo += (rng.random() + 1j * rng.random()) * a[i]
    _, vecs = np.linalg.eig(combo)

    ident_class = class_of[tuple(range(1, n + 1))]
    sizes = np.array([len(c) for c in classes], dtype=float)
    order = float(len(elems))
    chars = []
    for col in range(r):
        w = vecs[:, col]
        w = w / w[ident_class]
        deg = np.sqrt(order / np.sum(np.abs(w) ** 2 / sizes))
        chars.append(deg * w / sizes)
    return classes, class_of, np.array(chars)
