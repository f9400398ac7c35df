"""Finite-alphabet expansion of symmetric functions, used as a test oracle.

Polynomials are ``Counter`` maps from exponent tuples to integer coefficients.
"""

import itertools
from collections import Counter


def distinct_arrangements(parts, slots):
    """All distinct vectors of length ``slots`` whose non-zero entries are ``parts``."""
    out = set()
    for pos in itertools.permutations(range(slots), len(parts)):
        e = [0] * slots
        for p, v in zip(pos, parts):
            e[p] = v
        out.add(tuple(e))
    return out


def m_poly(lam, k):
    return Counter({e: 1 for e in distinct_arrangements(lam, k)})


def mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def coefficient_at(poly, lam, k):
    return poly.get(tuple(list(lam) + [0] * (k - len(lam))), 0)


def m_of_xy(nu, k):
    """m_nu in the k*k variables x_i y_j, as a polynomial in (x, y) exponents."""
    out = Counter()
    for e in distinct_arrangements(nu, k * k):
        rows = tuple(sum(e[i * k + j] for j in range(k)) for i in range(k))
        cols = tuple(sum(e[i * k + j] for i in range(k)) for j in range(k))
        out[rows + cols] += 1
    return out


