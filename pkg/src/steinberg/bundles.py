"""Principal bundles on P^1: Levi of a cocharacter, automorphisms, triple counts.

A cocharacter is given by its pairings ``a_i = <alpha_i, mu>`` with the simple
roots, plus the diagonal weights when the group is GL_n.  Anti-dominant
means every ``a_i <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .counts import levi_order, st_count
from .qalg import QPoly, QRat
from .rootsys import (
    DatumError,
    ReductiveDatum,
    build_root_system,
    classify_cartan,
    levi_subsystem,
    mask_indices,
)
from .symfun import BiSymFunc, partition_to_subset, partitions
from .weyl import double_coset_indices, kilmoyer_by_index


@dataclass(frozen=True)
class Cocharacter:
    simple_pairings: tuple[int, ...]
    gl_weights: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "simple_pairings", tuple(int(a) for a in self.simple_pairings))
        if self.gl_weights is not None:
            w = tuple(int(m) for m in self.gl_weights)
            object.__setattr__(self, "gl_weights", w)
            expect = tuple(w[i] - w[i + 1] for i in range(len(w) - 1))
            if expect != self.simple_pairings:
                raise ValueError(f"weights {w} inconsistent with pairings {self.simple_pairings}")

    @classmethod
    def from_gl_weights(cls, weights: Sequence[int]) -> "Cocharacter":
        w = tuple(int(m) for m in weights)
        return cls(tuple(w[i] - w[i + 1] for i in range(len(w) - 1)), w)

    @property
    def is_antidominant(self) -> bool:
        return all(a <= 0 for a in self.simple_pairings)

    @property
    def degree(self) -> int:
        """deg(E_mu) = sum of the GL weights."""
        if self.gl_weights is None:
            raise ValueError("degree is only defined for GL_n weights")
        return sum(self.gl_weights)


@dataclass(frozen=True)
class LeviData:
    datum: ReductiveDatum
    pi_mu: int
    embedding: tuple[int, ...]

    def to_local(self, mask: int) -> int:
        """Re-express a subset of Pi_mu in the Levi's own simple-root indexing."""
        out = 0
        for a, i in enumerate(self.embedding):
            if (mask >> i) & 1:
                out |= 1 << a
        if mask & ~self.pi_mu:
            raise ValueError("subset is not contained in Pi_mu")
        return out


def _check(datum: ReductiveDatum, mu: Cocharacter):
    if len(mu.simple_pairings) != datum.semisimple_rank:
        raise ValueError(
            f"cocharacter has {len(mu.simple_pairings)} pairings, datum has rank {datum.semisimple_rank}"
        )
    if not mu.is_antidominant:
        raise ValueError(f"cocharacter {mu.simple_pairings} is not anti-dominant")


def levi_of(datum: ReductiveDatum, mu: Cocharacter) -> LeviData:
    _check(datum, mu)
    pi_mu = 0
    for i, a in enumerate(mu.simple_pairings):
        if a == 0:
            pi_mu |= 1 << i
    lv = levi_subsystem(build_root_system(datum), pi_mu)
    sub = lv.system.cartan
    comps = classify_cartan(sub)
    name = "x".join(f"{s}{r}" for s, r in comps) or "T"
    ld = ReductiveDatum(comps, datum.torus_rank, cartan=sub.tolist(), name=f"L({name})+t{datum.torus_rank}")
    return LeviData(ld, pi_mu, lv.embedding)


def root_pairings(datum: ReductiveDatum, mu: Cocharacter) -> list[int]:
    rs = build_root_system(datum)
    return [int(x) for x in rs.roots @ list(mu.simple_pairings)] if rs.rank else []


def aut_excess(datum: ReductiveDatum, mu: Cocharacter) -> int:
    """dim Aut(E_mu) - dim L_mu = sum over <alpha, mu> > 0 of (<alpha, mu> + 1)."""
    return sum(a + 1 for a in root_pairings(datum, mu) if a > 0)


def dim_aut(datum: ReductiveDatum, mu: Cocharacter) -> tuple[int, QPoly]:
    """Dimension of Aut(E_mu) and its number of F_q-points."""
    lev = levi_of(datum, mu)
    dim_l = datum.torus_rank + build_root_system(lev.datum).n_roots
    extra = aut_excess(datum, mu)
    order = levi_order(datum, lev.pi_mu) * QPoly.monomial(extra)
    return dim_l + extra, order


@lru_cache(maxsize=None)
def _pi_counts(datum: ReductiveDatum, pi_mu: int, J: int) -> tuple[tuple[int, int], ...]:
    rs = build_root_system(datum)
    counts: dict[int, int] = {}
    for k in double_coset_indices(rs, pi_mu, J):
        K = kilmoyer_by_index(rs, int(k), pi_mu, J)
        counts[K] = counts.get(K, 0) + 1
    return tuple(sorted(counts.items()))


def trip_count(datum: ReductiveDatum, mu: Cocharacter, J0: int, Jinf: int) -> QPoly:
    """Number of F_q-points of Trip_mu(J0, Jinf).

    q^{dim Aut - dim L_mu} times the double sum over D_{Pi_mu,J0} x D_{Pi_mu,Jinf}
    of |St_{L_mu}(Pi_mu ∩ w·J0, Pi_mu ∩ w'·Jinf)|.
    """
    lev = levi_of(datum, mu)
    total = QPoly()
    side0 = _pi_counts(datum, lev.pi_mu, J0)
    side_inf = _pi_counts(datum, lev.pi_mu, Jinf)
    for K0, c0 in side0:
        for K1, c1 in side_inf:
            total = total + st_count(lev.datum, lev.to_local(K0), lev.to_local(K1)) * (c0 * c1)
    return total * QPoly.monomial(aut_excess(datum, mu))


def c_mu(datum: ReductiveDatum, mu: Cocharacter) -> tuple[int, BiSymFunc]:
    """(t-weight, [Trip_mu] / |Aut(E_mu)|) with m_{nu0}(X) m_{nuinf}(Y) coordinates."""
    if not datum.is_gl or mu.gl_weights is None:
        raise DatumError("c_mu needs a GL_n datum and GL weights")
    n = datum.torus_rank
    _, aut = dim_aut(datum, mu)
    coeffs = {}
    for a in partitions(n):
        for b in partitions(n):
            coeffs[(a, b)] = QRat(trip_count(datum, mu, partition_to_subset(a), partition_to_subset(b)), aut)
    return -mu.degree, BiSymFunc(n, coeffs)


def subset_local(lev: LeviData, mask: int) -> int:
    return lev.to_local(mask)


__all__ = [
    "Cocharacter",
    "LeviData",
    "levi_of",
    "dim_aut",
    "aut_excess",
    "trip_count",
    "c_mu",
    "mask_indices",
]
