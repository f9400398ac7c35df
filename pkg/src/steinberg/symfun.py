"""Symmetric functions in the monomial basis, plethysm and the Exp series.

Everything is stored in the monomial basis ``m``.  Plethystic substitutions
are carried out in the power-sum basis, where they act diagonally, and
converted back with the integer transition matrix p -> m.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from .counts import InternalMismatch
from .qalg import ONE, ZERO, QPoly, QRat, TSeries

Partition = tuple[int, ...]

DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_BIDEGREE = 3


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order: (n), (n-1,1), ..."""

    def gen(n, largest) -> Iterator[Partition]:
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest

    return tuple(gen(n, n))


def z_factor(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def _distinct_rearrangements(parts: Partition, length: int) -> set[tuple[int, ...]]:
    padded = tuple(parts) + (0,) * (length - len(parts))
    return set(permutations(padded))


@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Structure constants of ``m_lam * m_mu`` in the m basis."""
    n = sum(lam) + sum(mu)
    out = []
    for nu in partitions(n):
        L = len(nu)
        if len(lam) > L or len(mu) > L:
            continue
        bs = _distinct_rearrangements(mu, L)
        c = 0
        for a in _distinct_rearrangements(lam, L):
            b = tuple(x - y for x, y in zip(nu, a))
            if b in bs:
                c += 1
        if c:
            out.append((nu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def p_in_m(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """p_lam = sum_mu R[lam, mu] m_mu; R counts part-to-variable assignments."""
    n = sum(lam)
    out = []
    for mu in partitions(n):
        L = len(mu)
        count = 0

        def place(k, sums):
            nonlocal count
            if k == len(lam):
                count += sums == list(mu)
                return
            for i in range(L):
                if sums[i] + lam[k] <= mu[i]:
                    sums[i] += lam[k]
                    place(k + 1, sums)
                    sums[i] -= lam[k]

        place(0, [0] * L)
        if count:
            out.append((mu, count))
    return tuple(out)


def _add_into(acc: dict, key, value):
    cur = acc.get(key)
    new = value if cur is None else cur + value
    if _is_zero(new):
        acc.pop(key, None)
    else:
        acc[key] = new


def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, int) else x.is_zero()


class SymFunc:
    """Homogeneous symmetric function of a fixed degree, in the m basis."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Partition, object] = ()):
        self.degree = degree
        clean = {}
        for lam, c in dict(coeffs).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} does not have size {degree}")
            c = QRat.of(c) if not isinstance(c, TSeries) else c
            if not _is_zero(c):
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def m(cls, lam: Partition) -> "SymFunc":
        return cls(sum(lam), {tuple(lam): ONE})

    def __getitem__(self, lam: Partition):
        return self.coeffs.get(tuple(lam), ZERO)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(acc, k, v)
        return SymFunc(self.degree, acc)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            acc: dict = {}
            for a, ca in self.coeffs.items():
                for b, cb in other.coeffs.items():
                    cab = ca * cb
                    for nu, c in monomial_product(a, b):
                        _add_into(acc, nu, cab * c)
            return SymFunc(self.degree + other.degree, acc)
        return SymFunc(self.degree, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self):
        body = " + ".join(f"({c})*m{list(k)}" for k, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc[{self.degree}]({body or '0'})"


class BiSymFunc:
    """Bidegree (n, n) symmetric function in two alphabets X, Y.

    Keys are pairs ``(lam, nu)`` meaning ``m_lam(X) m_nu(Y)``.  Coefficients
    are ``QRat`` or, inside graded series, ``TSeries``.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping = ()):
        self.degree = degree
        clean = {}
        for (a, b), c in dict(coeffs).items():
            a, b = tuple(a), tuple(b)
            if sum(a) != degree or sum(b) != degree:
                raise ValueError(f"key {(a, b)} does not have bidegree ({degree}, {degree})")
            if not isinstance(c, (QRat, TSeries)):
                c = QRat.of(c)
            if not _is_zero(c):
                clean[(a, b)] = c
        self.coeffs = clean

    @classmethod
    def one(cls) -> "BiSymFunc":
        return cls(0, {((), ()): ONE})

    def __getitem__(self, key):
        a, b = key
        return self.coeffs.get((tuple(a), tuple(b)), ZERO)

    def __eq__(self, other):
        if not isinstance(other, BiSymFunc):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: "BiSymFunc") -> "BiSymFunc":
        if other.degree != self.degree:
            raise ValueError("adding bisymmetric functions of different degrees")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(acc, k, v)
        return BiSymFunc(self.degree, acc)

    def __mul__(self, other):
        if isinstance(other, BiSymFunc):
            acc: dict = {}
            for (a1, b1), c1 in self.coeffs.items():
                for (a2, b2), c2 in other.coeffs.items():
                    c12 = c1 * c2
                    for nx, cx in monomial_product(a1, a2):
                        for ny, cy in monomial_product(b1, b2):
                            _add_into(acc, (nx, ny), c12 * (cx * cy))
            return BiSymFunc(self.degree + other.degree, acc)
        return BiSymFunc(self.degree, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def map_coeffs(self, fn) -> "BiSymFunc":
        return BiSymFunc(self.degree, {k: fn(v) for k, v in self.coeffs.items()})

    def keys(self) -> list[tuple[Partition, Partition]]:
        return [(a, b) for a in partitions(self.degree) for b in partitions(self.degree)]

    def to_json(self) -> list:
        out = []
        for a, b in self.keys():
            c = self[(a, b)]
            entry = {"x_part": list(a), "y_part": list(b)}
            if isinstance(c, TSeries):
                entry["t_coeffs"] = c.to_json()
            else:
                entry["coeff"] = c.to_json()
            out.append(entry)
        return out

    def __repr__(self):
        return f"BiSymFunc[{self.degree}]({len(self.coeffs)} terms)"


class GradedBiSeries:
    """Degree-indexed family of BiSymFunc with TSeries coefficients."""

    def __init__(self, tmax: int, components: Mapping[int, BiSymFunc] = ()):
        self.tmax = tmax
        self.components = {}
        for n, f in dict(components).items():
            for c in f.coeffs.values():
                if not isinstance(c, TSeries) or c.tmax != tmax:
                    raise ValueError("coefficients must be TSeries with a uniform tmax")
            self.components[n] = f

    def __getitem__(self, n: int) -> BiSymFunc:
        return self.components.get(n, BiSymFunc(n))

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def __mul__(self, other: "GradedBiSeries") -> "GradedBiSeries":
        raise NotImplementedError("use graded_product with an explicit degree bound")

    def to_json(self) -> dict:
        return {"tmax": self.tmax, "components": {str(n): self[n].to_json() for n in self.degrees()}}


def graded_product(a: GradedBiSeries, b: GradedBiSeries, nmax: int) -> GradedBiSeries:
    if a.tmax != b.tmax:
        raise ValueError("tmax mismatch")
    out: dict[int, BiSymFunc] = {}
    for i, fa in a.components.items():
        for j, fb in b.components.items():
            if i + j > nmax:
                continue
            prod_ = fa * fb
            out[i + j] = out[i + j] + prod_ if i + j in out else prod_
    return GradedBiSeries(a.tmax, out)


# -- transitions and plethysm -------------------------------------------------


def _check_degree(n: int, bound: int):
    if n < 0 or n > bound:
        raise ValueError(f"degree {n} outside the configured bound {bound}")


def p_combination_to_m(n: int, weights: Mapping[Partition, QRat]) -> SymFunc:
    """sum_lam weights[lam] p_lam, expanded in the m basis."""
    acc: dict = {}
    for lam, w in weights.items():
        for mu, c in p_in_m(lam):
            _add_into(acc, mu, w * c)
    return SymFunc(n, acc)


def p_pair_combination_to_mm(n: int, weights: Mapping[Partition, object]) -> BiSymFunc:
    """sum_lam weights[lam] p_lam(X) p_lam(Y), expanded in m(X) m(Y)."""
    acc: dict = {}
    for lam, w in weights.items():
        for a, ca in p_in_m(lam):
            for b, cb in p_in_m(lam):
                _add_into(acc, (a, b), w * (ca * cb))
    return BiSymFunc(n, acc)


def h_in_m(n: int, bound: int = DEFAULT_MAX_DEGREE) -> SymFunc:
    """h_n = sum_lam p_lam / z_lam, in the m basis."""
    _check_degree(n, bound)
    return p_combination_to_m(n, {lam: QRat(1, z_factor(lam)) for lam in partitions(n)})


def _q_power_minus_one(r: int) -> QPoly:
    return QPoly([-1] + [0] * (r - 1) + [1])


def gl_order(n: int) -> QPoly:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    out = QPoly((1,))
    for i in range(n):
        out = out * (QPoly.monomial(n) - QPoly.monomial(i))
    return out


def pleth_h_X_over_qm1(n: int, bound: int = DEFAULT_MAX_DEGREE) -> SymFunc:
    """h_n[X/(q-1)] in the m basis.

    Computed as sum_nu q^{sum nu_i^2} / (q^n prod |GL_{nu_i}|) m_nu and checked
    against the power-sum substitution p_r -> p_r / (q^r - 1).
    """
    _check_degree(n, bound)
    direct = {}
    for nu in partitions(n):
        den = QPoly.monomial(n)
        for part in nu:
            den = den * gl_order(part)
        direct[nu] = QRat(QPoly.monomial(sum(x * x for x in nu)), den)
    result = SymFunc(n, direct)
    via_p = p_combination_to_m(
        n,
        {
            lam: QRat(1, z_factor(lam)) / _prod_poly(_q_power_minus_one(r) for r in lam)
            for lam in partitions(n)
        },
    )
    if via_p != result:
        raise InternalMismatch(f"h_{n}[X/(q-1)]: monomial and power-sum routes disagree")
    return result


def _prod_poly(items: Iterable[QPoly]) -> QPoly:
    out = QPoly((1,))
    for x in items:
        out = out * x
    return out


def h_at_one_over_one_minus_q(n: int) -> QRat:
    """h_n[1/(1-q)] via p_r[1/(1-q)] = 1/(1-q^r)."""
    total = ZERO
    for lam in partitions(n):
        den = _prod_poly(-_q_power_minus_one(r) for r in lam)
        total = total + QRat(1, den * z_factor(lam))
    return total


def pleth_h_XY_over_qm1(n: int, bound: int = DEFAULT_MAX_BIDEGREE) -> BiSymFunc:
    """h_n[XY/(q-1)] via p_r -> p_r(X) p_r(Y) / (q^r - 1)."""
    _check_degree(n, bound)
    if n == 0:
        return BiSymFunc.one()
    return p_pair_combination_to_mm(
        n,
        {
            lam: QRat(1, z_factor(lam)) / _prod_poly(_q_power_minus_one(r) for r in lam)
            for lam in partitions(n)
        },
    )


# -- the coproduct f(X) -> f(XY) ------------------------------------------------


def _matrices_with_margins(rows: Partition, cols: Partition) -> Iterator[list[list[int]]]:
    """Non-negative integer matrices with the given row and column sums."""
    nr, nc = len(rows), len(cols)
    mat = [[0] * nc for _ in range(nr)]
    colrem = list(cols)

    def fill_row(i):
        if i == nr:
            if not any(colrem):
                yield [row[:] for row in mat]
            return
        yield from fill_cell(i, 0, rows[i])

    def fill_cell(i, j, remaining):
        if j == nc - 1:
            if remaining <= colrem[j]:
                mat[i][j] = remaining
                colrem[j] -= remaining
                yield from fill_row(i + 1)
                colrem[j] += remaining
                mat[i][j] = 0
            return
        for v in range(min(remaining, colrem[j]), -1, -1):
            mat[i][j] = v
            colrem[j] -= v
            yield from fill_cell(i, j + 1, remaining - v)
            colrem[j] += v
        mat[i][j] = 0

    if nr == 0 or nc == 0:
        if sum(rows) == sum(cols) == 0:
            yield []
        return
    yield from fill_row(0)


@lru_cache(maxsize=None)
def _delta_monomial(nu: Partition) -> tuple:
    """m_nu(XY) in the m(X) m(Y) basis by expansion over the alphabet x_i y_j.

    The coefficient of m_lam(X) m_mu(Y) counts the exponent matrices with row
    sums lam, column sums mu and non-zero entries forming nu.
    """
    n = sum(nu)
    target = sorted(nu)
    out = []
    for lam in partitions(n):
        for mu in partitions(n):
            c = 0
            for mat in _matrices_with_margins(lam, mu):
                if sorted(x for row in mat for x in row if x) == target:
                    c += 1
            if c:
                out.append(((lam, mu), c))
    return tuple(out)


def delta_n(f: SymFunc, bound: int = 4) -> BiSymFunc:
    """f(X) -> f(XY) for homogeneous f, in the m(X) m(Y) basis."""
    _check_degree(f.degree, bound)
    acc: dict = {}
    for nu, c in f.coeffs.items():
        for key, k in _delta_monomial(nu):
            _add_into(acc, key, c * k)
    return BiSymFunc(f.degree, acc)


# -- the generating function ---------------------------------------------------


def _tconst(c, tmax: int) -> TSeries:
    return TSeries.const(c, tmax)


def _as_series(f: BiSymFunc, tmax: int, shift: int = 0) -> BiSymFunc:
    return f.map_coeffs(lambda c: TSeries.monomial(shift, c, tmax))


def exp_side(nmax: int, tmax: int) -> GradedBiSeries:
    """Graded pieces of Exp[XY / ((q-1)(1-t))] up to degree nmax and t^tmax.

    Expanded as prod_{d=0}^{tmax} sum_k t^{dk} h_k[XY/(q-1)].
    """
    if nmax > DEFAULT_MAX_BIDEGREE + 1:
        raise ValueError(f"nmax={nmax} too large")
    h = [pleth_h_XY_over_qm1(k, bound=nmax) for k in range(nmax + 1)]
    acc = GradedBiSeries(tmax, {0: _as_series(BiSymFunc.one(), tmax)})
    for d in range(tmax + 1):
        factor = {}
        for k in range(nmax + 1):
            if d * k <= tmax:
                factor[k] = _as_series(h[k], tmax, shift=d * k)
        acc = graded_product(acc, GradedBiSeries(tmax, factor), nmax)
    return acc


def gl_antidominant_weights(n: int, tmax: int) -> list[tuple[int, ...]]:
    """All m_1 <= ... <= m_n <= 0 with -sum(m) <= tmax, in lexicographic order."""
    out = []

    def rec(prefix, lo, budget):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for m in range(max(lo, -budget), 1):
            rec(prefix + [m], m, budget + m)

    rec([], -tmax, tmax)
    return sorted(out)


def omega_series(n: int, tmax: int) -> GradedBiSeries:
    """sum over anti-dominant GL_n weights of t^{-deg} C_mu, truncated at t^tmax."""
    from .bundles import Cocharacter, c_mu
    from .rootsys import gl

    datum = gl(n)
    total = BiSymFunc(n)
    for weights in gl_antidominant_weights(n, tmax):
        tw, value = c_mu(datum, Cocharacter.from_gl_weights(weights))
        total = total + _as_series(value, tmax, shift=tw)
    return GradedBiSeries(tmax, {n: total})


def exp_side_power_sum(n: int, tmax: int) -> BiSymFunc:
    """Degree-n part of exp(sum_r p_r[XY/((q-1)(1-t))] / r) (reference route)."""
    weights = {}
    for lam in partitions(n):
        series = TSeries.const(QRat(1, z_factor(lam)), tmax)
        for r in lam:
            series = series * TSeries.geometric(tmax, step=r, c=QRat(1, _q_power_minus_one(r)))
        weights[lam] = series
    if n == 0:
        return _as_series(BiSymFunc.one(), tmax)
    return p_pair_combination_to_mm(n, weights)


def partition_to_subset(nu: Partition) -> int:
    """J(nu): all simple roots of GL_n except those at block boundaries."""
    n = sum(nu)
    cuts = set()
    s = 0
    for part in nu[:-1]:
        s += part
        cuts.add(s)
    mask = 0
    for i in range(1, n):
        if i not in cuts:
            mask |= 1 << (i - 1)
    return mask
