"""Brute-force point counts over a prime field F_q, for GL_n with small n.

Everything here is a direct enumeration: all n x n matrices, all flags of a
given type, all polynomial-entry sections of ad(E_mu).  Nothing in this
module uses the formula modules, so it serves as independent ground truth.

Conventions:

* Matrices act on column vectors, so ``M`` stabilizes a subspace ``V`` when
  ``M v in V`` for every ``v in V``.  The upper-triangular Borel stabilizes
  the standard flag ``<e1> ⊂ <e1, e2> ⊂ ...``.
* A flag type is a strictly increasing tuple of dimensions in ``1..n-1``.
  The parabolic P_J of GL_n stabilizes flags of type ``{j : alpha_j not in J}``.
* A section of ad(E_mu), mu = (m_1, ..., m_n), is a matrix whose (i, j)
  entry is a polynomial in s of degree at most m_j - m_i (zero if negative).
  Its value at 0 is the matrix of constant terms and its value at infinity
  is the matrix of coefficients of s^{m_j - m_i}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

SUPPORTED_Q = (2, 3)
MAX_N = 3
MAX_SECTIONS = 2**16


class OracleBoundError(ValueError):
    """The requested enumeration is outside the supported size."""


def _check(n: int, q: int):
    if q not in SUPPORTED_Q:
        raise OracleBoundError(f"q must be one of {SUPPORTED_Q}, got {q}")
    if not 1 <= n <= MAX_N:
        raise OracleBoundError(f"n must be between 1 and {MAX_N}, got {n}")


# ---------------------------------------------------------------- flag types


def full_type(n: int) -> tuple[int, ...]:
    return tuple(range(1, n))


def type_from_mask(n: int, J: int) -> tuple[int, ...]:
    """Flag type stabilized by the standard parabolic P_J of GL_n."""
    return tuple(j for j in range(1, n) if not (J >> (j - 1)) & 1)


def mask_from_type(n: int, dims: Sequence[int]) -> int:
    dims = set(dims)
    return sum(1 << (j - 1) for j in range(1, n) if j not in dims)


def _validate_type(n: int, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(b <= a for a, b in zip(dims, dims[1:])) or any(not 0 < d < n for d in dims):
        raise ValueError(f"flag type {dims} is not strictly increasing inside 1..{n - 1}")
    return dims


# ---------------------------------------------------------------- linear algebra mod q


def rref(rows: np.ndarray, q: int) -> np.ndarray:
    """Reduced row echelon form mod q, zero rows removed."""
    a = np.array(rows, dtype=np.int64) % q
    if a.ndim == 1:
        a = a[None, :]
    r = 0
    nrows, ncols = a.shape
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, q)) % q
        for i in range(nrows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % q
        r += 1
        if r == nrows:
            break
    return a[:r]


def rank_mod(rows: np.ndarray, q: int) -> int:
    return rref(rows, q).shape[0]


def _all_vectors(n: int, q: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)


@lru_cache(maxsize=None)
def subspaces(n: int, q: int, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All k-dimensional subspaces of F_q^n as canonical RREF bases, sorted."""
    if k == 0:
        return ((),)
    vecs = _all_vectors(n, q)[1:]
    seen = set()
    for combo in itertools.product(range(len(vecs)), repeat=k):
        basis = rref(vecs[list(combo)], q)
        if basis.shape[0] == k:
            seen.add(tuple(tuple(int(x) for x in row) for row in basis))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Flag:
    dims: tuple[int, ...]
    subspaces: tuple[tuple[tuple[int, ...], ...], ...]

    def basis(self, i: int) -> np.ndarray:
        return np.array(self.subspaces[i], dtype=np.int64).reshape(self.dims[i], -1)


def _contains(big: np.ndarray, small: np.ndarray, q: int) -> bool:
    return rank_mod(np.vstack([big, small]), q) == big.shape[0]


@lru_cache(maxsize=None)
def flags(n: int, q: int, dims: tuple[int, ...]) -> tuple[Flag, ...]:
    """All flags V_1 ⊂ V_2 ⊂ ... in F_q^n with dim V_i = dims[i]."""
    dims = _validate_type(n, dims)
    chains: list[tuple] = [()]
    for k in dims:
        nxt = []
        for chain in chains:
            for sub in subspaces(n, q, k):
                if chain:
                    big = np.array(sub, dtype=np.int64)
                    small = np.array(chain[-1], dtype=np.int64)
                    if not _contains(big, small, q):
                        continue
                nxt.append(chain + (sub,))
        chains = nxt
    return tuple(Flag(dims, c) for c in chains)


def _annihilator(basis: np.ndarray, n: int, q: int) -> np.ndarray:
    """All covectors c with c·v = 0 for v in the row span of ``basis``."""
    vecs = _all_vectors(n, q)
    if basis.size == 0:
        return vecs
    return vecs[((vecs @ basis.T) % q == 0).all(axis=1)]


def stabilizes(mats: np.ndarray, flag: Flag, q: int) -> np.ndarray:
    """Boolean per matrix: M V_i ⊆ V_i for every subspace of the flag."""
    mats = np.asarray(mats, dtype=np.int64)
    n = mats.shape[-1]
    ok = np.ones(mats.shape[:-2], dtype=bool)
    for i in range(len(flag.dims)):
        B = flag.basis(i)
        C = _annihilator(B, n, q)
        # C M B^T must vanish: the image of each basis vector lies in V.
        prod = np.einsum("ra,...ab,kb->...rk", C, mats, B) % q
        ok &= (prod == 0).all(axis=(-2, -1))
    return ok


# ---------------------------------------------------------------- matrices


@lru_cache(maxsize=None)
def all_matrices(n: int, q: int) -> np.ndarray:
    """Every n x n matrix over F_q, in row-major lexicographic order."""
    _check(n, q)
    m = _all_vectors(n * n, q).reshape(-1, n, n)
    m.setflags(write=False)
    return m


def _encode(mats: np.ndarray, q: int) -> np.ndarray:
    n = mats.shape[-1]
    weights = q ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    return mats.reshape(*mats.shape[:-2], n * n) @ weights


def is_nilpotent(mats: np.ndarray, q: int) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64)
    n = mats.shape[-1]
    power = mats % q
    for _ in range(n - 1):
        power = (power @ mats) % q
    return (power == 0).all(axis=(-2, -1))


@lru_cache(maxsize=None)
def nilpotent_matrices(n: int, q: int) -> np.ndarray:
    mats = all_matrices(n, q)
    return mats[is_nilpotent(mats, q)]


@lru_cache(maxsize=None)
def _stab_counts(n: int, q: int, dims: tuple[int, ...]) -> np.ndarray:
    """For every matrix (by code), the number of flags of type dims it stabilizes."""
    mats = all_matrices(n, q)
    counts = np.zeros(mats.shape[0], dtype=np.int64)
    for f in flags(n, q, dims):
        counts += stabilizes(mats, f, q)
    counts.setflags(write=False)
    return counts


def _det(mats: np.ndarray) -> np.ndarray:
    n = mats.shape[-1]
    total = np.zeros(mats.shape[:-2], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = np.ones(mats.shape[:-2], dtype=np.int64)
        for i, p in enumerate(perm):
            term = term * mats[..., i, p]
        total += sign * term
    return total


# ---------------------------------------------------------------- counts


def oracle_group_order(n: int, q: int, det1: bool = False) -> int:
    """Number of invertible (or determinant-one) n x n matrices over F_q."""
    d = _det(all_matrices(n, q)) % q
    return int((d == 1).sum() if det1 else (d != 0).sum())


def oracle_nilcone(n: int, q: int) -> int:
    return int(nilpotent_matrices(n, q).shape[0])


def oracle_sp(n: int, q: int, flag_type: Sequence[int]) -> int:
    """#{(F, N) : F a flag of the given type, N nilpotent, N stabilizes F}."""
    _check(n, q)
    dims = _validate_type(n, flag_type)
    nil = nilpotent_matrices(n, q)
    return int(sum(int(stabilizes(nil, f, q).sum()) for f in flags(n, q, dims)))


def oracle_st(n: int, q: int, type1: Sequence[int], type2: Sequence[int]) -> int:
    """#{(F1, F2, N) : N nilpotent stabilizing both flags}."""
    _check(n, q)
    d1, d2 = _validate_type(n, type1), _validate_type(n, type2)
    codes = _encode(nilpotent_matrices(n, q), q)
    c1 = _stab_counts(n, q, d1)[codes]
    c2 = _stab_counts(n, q, d2)[codes]
    return int((c1 * c2).sum())


def section_degrees(weights: Sequence[int]) -> np.ndarray:
    """Matrix of degree bounds m_j - m_i (negative means the entry is zero)."""
    m = np.asarray(weights, dtype=np.int64)
    return m[None, :] - m[:, None]


def section_dimension(weights: Sequence[int]) -> int:
    deg = section_degrees(weights)
    return int((deg[deg >= 0] + 1).sum())


def _sections(weights: Sequence[int], q: int) -> np.ndarray:
    """All sections as an array (count, n, n, top + 1) of coefficients of s^d."""
    deg = section_degrees(weights)
    n = deg.shape[0]
    top = max(int(deg.max()), 0)
    slots = [(i, j, d) for i in range(n) for j in range(n) for d in range(int(deg[i, j]) + 1)]
    coeffs = _all_vectors(len(slots), q)
    out = np.zeros((coeffs.shape[0], n, n, top + 1), dtype=np.int64)
    for c, (i, j, d) in enumerate(slots):
        out[:, i, j, d] = coeffs[:, c]
    return out


def _poly_matmul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    da, db = a.shape[-1], b.shape[-1]
    out = np.zeros(a.shape[:-1] + (da + db - 1,), dtype=np.int64)
    for x in range(da):
        for y in range(db):
            out[..., x + y] += np.einsum("...ik,...kj->...ij", a[..., x], b[..., y])
    return out % q


def _nilpotent_sections(secs: np.ndarray, q: int) -> np.ndarray:
    """Psi^n = 0 as a matrix over F_q[s] (equivalently char(Psi) = x^n)."""
    n = secs.shape[1]
    power = secs % q
    for _ in range(n - 1):
        power = _poly_matmul(power, secs, q)
    return (power == 0).all(axis=(1, 2, 3))


def oracle_trip(
    n: int,
    q: int,
    gl_weights: Sequence[int],
    type0: Sequence[int],
    type_inf: Sequence[int],
) -> int:
    """#{(F0, Finf, Psi) : Psi nilpotent, Psi(0) fixes F0, Psi(inf) fixes Finf}."""
    _check(n, q)
    if len(gl_weights) != n:
        raise ValueError(f"need {n} weights, got {len(gl_weights)}")
    d0, dinf = _validate_type(n, type0), _validate_type(n, type_inf)
    dim = section_dimension(gl_weights)
    if q**dim > MAX_SECTIONS:
        raise OracleBoundError(
            f"{q}^{dim} sections exceed the enumeration bound {MAX_SECTIONS}"
        )
    secs = _sections(gl_weights, q)
    secs = secs[_nilpotent_sections(secs, q)]
    deg = section_degrees(gl_weights)
    at0 = secs[..., 0]
    idx = np.clip(deg, 0, None)
    rows, cols = np.indices(deg.shape)
    at_inf = secs[:, rows, cols, idx] * (deg >= 0)
    c0 = _stab_counts(n, q, d0)[_encode(at0, q)]
    cinf = _stab_counts(n, q, dinf)[_encode(at_inf, q)]
    return int((c0 * cinf).sum())


def parse_type(n: int, text: str) -> tuple[int, ...]:
    """'full', 'trivial' (or 'none'), or dimensions joined by '/', e.g. '1/2'."""
    text = text.strip().lower()
    if text == "full":
        return full_type(n)
    if text in ("trivial", "none", ""):
        return ()
    return _validate_type(n, [int(x) for x in text.split("/")])


def sorted_flags(n: int, q: int, dims: Iterable[int]) -> list[Flag]:
    return sorted(flags(n, q, tuple(dims)), key=lambda f: f.subspaces)


__all__ = [
    "OracleBoundError",
    "Flag",
    "flags",
    "subspaces",
    "rref",
    "stabilizes",
    "full_type",
    "type_from_mask",
    "mask_from_type",
    "parse_type",
    "all_matrices",
    "nilpotent_matrices",
    "is_nilpotent",
    "oracle_group_order",
    "oracle_nilcone",
    "oracle_sp",
    "oracle_st",
    "oracle_trip",
    "section_degrees",
    "section_dimension",
]
