"""Point counts of groups, nilpotent cones, Springer and Steinberg varieties.

All counts are polynomials in q.  Subsets of simple roots are int bitmasks
(bit i is the (i+1)-th simple root).  Levi subgroups keep the full maximal
torus, so ``|L_K|`` carries the ambient torus rank.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Union

from .qalg import ONE, ZERO, QPoly, QRat, as_polynomial
from .rootsys import ReductiveDatum, build_root_system, full_mask, levi_subsystem
from .weyl import double_coset_indices, kilmoyer_by_index, weyl_group


class InternalMismatch(AssertionError):
    """Two independent routes to the same quantity disagreed."""


Q = QPoly((0, 1))
QM1 = QPoly((-1, 1))


def _qpow(k: int) -> QPoly:
    return QPoly.monomial(k)


def _poincare(rs) -> QPoly:
    return QPoly(weyl_group(rs).poincare())


def group_order(datum: ReductiveDatum) -> QPoly:
    """|H(F_q)| = q^{|Phi+|} (q-1)^r sum_{w in W} q^{l(w)}."""
    rs = build_root_system(datum)
    return _qpow(rs.n_positive) * QM1**datum.torus_rank * _poincare(rs)


def nilcone_order(datum: ReductiveDatum) -> QPoly:
    """q^{dim - rank}; dim - rank is the number of roots."""
    return _qpow(build_root_system(datum).n_roots)


@lru_cache(maxsize=None)
def levi_order(datum: ReductiveDatum, K: int) -> QPoly:
    """|L_K(F_q)| for the standard Levi of K, with the ambient torus."""
    lv = levi_subsystem(build_root_system(datum), K)
    return _qpow(lv.system.n_positive) * QM1**datum.torus_rank * _poincare(lv.system)


@lru_cache(maxsize=None)
def levi_nilcone(datum: ReductiveDatum, K: int) -> QPoly:
    return _qpow(levi_subsystem(build_root_system(datum), K).system.n_roots)


@lru_cache(maxsize=None)
def _levi_ratio(datum: ReductiveDatum, K: int) -> QRat:
    return QRat(levi_nilcone(datum, K), levi_order(datum, K))


@lru_cache(maxsize=None)
def sp_count(datum: ReductiveDatum, J: int) -> QPoly:
    """|Sp_H(J)|, by the flag-variety formula, checked against the Levi formula."""
    rs = build_root_system(datum)
    W = weyl_group(rs)
    lv = levi_subsystem(rs, J)
    reps = W.right_ok(J)
    coset_poly = QPoly(_bincount(W.lengths[reps]))
    via_cells = _qpow(lv.system.n_positive + rs.n_positive) * coset_poly
    via_levi = QRat(group_order(datum) * levi_nilcone(datum, J), levi_order(datum, J))
    if via_levi != via_cells:
        raise InternalMismatch(f"Springer count routes disagree for {datum}, J={J:b}")
    return via_cells


def _bincount(values) -> list[int]:
    out: list[int] = []
    for v in values:
        v = int(v)
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return out


def kilmoyer_counts(datum: ReductiveDatum, J1: int, J2: int) -> Counter:
    """Multiset {J1 ∩ w·J2 : w in D_{J1,J2}}."""
    return _kilmoyer_counts(datum, J1, J2).copy()


@lru_cache(maxsize=None)
def _kilmoyer_counts(datum: ReductiveDatum, J1: int, J2: int) -> Counter:
    rs = build_root_system(datum)
    return Counter(kilmoyer_by_index(rs, int(k), J1, J2) for k in double_coset_indices(rs, J1, J2))


@lru_cache(maxsize=None)
def st_count(datum: ReductiveDatum, J1: int, J2: int) -> QPoly:
    """|St_H(J1, J2)| = |H| sum_{w in D} |N(Lie L_K)| / |L_K|,  K = J1 ∩ w·J2."""
    total = ZERO
    for K, mult in sorted(_kilmoyer_counts(datum, J1, J2).items()):
        total = total + _levi_ratio(datum, K) * mult
    return as_polynomial(total * group_order(datum))


CountValues = Union[Mapping[int, QRat], Callable[[int], object]]


@dataclass(frozen=True)
class CountFunction:
    """A function on subsets (or pairs of subsets) of simple roots."""

    rank: int
    values: Mapping

    def __call__(self, *J):
        return self.values[J[0] if len(J) == 1 else tuple(J)]

    def is_polynomial(self) -> bool:
        return all(QRat.of(v).is_polynomial() for v in self.values.values())


def sp_function(datum: ReductiveDatum) -> CountFunction:
    n = datum.semisimple_rank
    return CountFunction(n, {J: QRat.of(sp_count(datum, J)) for J in range(1 << n)})


def st_function(datum: ReductiveDatum) -> CountFunction:
    n = datum.semisimple_rank
    return CountFunction(
        n,
        {(a, b): QRat.of(st_count(datum, a, b)) for a in range(1 << n) for b in range(1 << n)},
    )


def coproduct_eval(datum: ReductiveDatum, f: CountValues, J1: int, J2: int) -> QRat:
    """Delta_H(f)(J1, J2) = sum_{w in D_{J1,J2}} f(J1 ∩ w·J2)."""
    get = f if callable(f) else f.__getitem__
    total = ZERO
    for K, mult in sorted(_kilmoyer_counts(datum, J1, J2).items()):
        total = total + QRat.of(get(K)) * mult
    return total


def coproduct(datum: ReductiveDatum, f: CountValues) -> CountFunction:
    n = datum.semisimple_rank
    return CountFunction(
        n, {(a, b): coproduct_eval(datum, f, a, b) for a in range(1 << n) for b in range(1 << n)}
    )


def dim_parabolic(datum: ReductiveDatum, J: int) -> int:
    rs = build_root_system(datum)
    return datum.torus_rank + rs.n_positive + levi_subsystem(rs, J).system.n_positive


__all__ = [
    "InternalMismatch",
    "group_order",
    "nilcone_order",
    "levi_order",
    "levi_nilcone",
    "sp_count",
    "st_count",
    "kilmoyer_counts",
    "CountFunction",
    "sp_function",
    "st_function",
    "coproduct_eval",
    "coproduct",
    "dim_parabolic",
    "full_mask",
    "ONE",
]
