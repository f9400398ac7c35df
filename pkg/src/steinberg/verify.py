"""Cross-check suites: each returns a ``CheckResult`` with a PASS/FAIL verdict.

The suites compare independent routes to the same numbers:

=============  ================================================================
sp-oracle      Springer counts vs brute force over F_q (GL_2, GL_3)
st-oracle      Steinberg counts vs brute force over F_q (GL_2, GL_3)
coproduct      Delta_H([Sp_H]) = [St_H] as polynomials
trip-oracle    triple counts vs brute force over F_2 (GL_2)
mellit         Omega (bundle route) = Exp[XY/((q-1)(1-t))] (plethysm route)
hnq            h_n[1/(1-q)] = 1/((1-q)...(1-q^n))
delta          coproduct on GL_n subsets = f(X) -> f(XY) on monomials
invariance     associate invariance, symmetry, torus rank, degree formula
=============  ================================================================
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .bundles import Cocharacter, trip_count
from .counts import coproduct_eval, sp_count, st_count
from .oracle import oracle_sp, oracle_st, oracle_trip, type_from_mask
from .qalg import QPoly, QRat, eval_at
from .rootsys import ReductiveDatum, build_root_system, gl, levi_subsystem, parse_datum, sl
from .symfun import (
    SymFunc,
    delta_n,
    exp_side,
    h_at_one_over_one_minus_q,
    omega_series,
    partition_to_subset,
    partitions,
)
from .weyl import associate_classes, weyl_group


@dataclass
class CheckResult:
    name: str
    ok: bool
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"{verdict} {self.name} ({self.checked} checks, {self.seconds:.2f}s){extra}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


class _Tally:
    def __init__(self, name: str):
        self.result = CheckResult(name, True)
        self.start = time.perf_counter()

    def check(self, ok: bool, what: Callable[[], str]):
        self.result.checked += 1
        if not ok:
            self.result.ok = False
            self.result.failures.append(what())

    def done(self) -> CheckResult:
        self.result.seconds = time.perf_counter() - self.start
        return self.result


def _subsets(datum: ReductiveDatum) -> range:
    return range(1 << datum.semisimple_rank)


SP_ST_CASES = ((2, 2), (2, 3), (3, 2))


def check_sp_oracle(cases=SP_ST_CASES) -> CheckResult:
    t = _Tally("sp-oracle")
    for n, q in cases:
        G = gl(n)
        for J in _subsets(G):
            f, o = eval_at(sp_count(G, J), q), oracle_sp(n, q, type_from_mask(n, J))
            t.check(f == o, lambda: f"GL{n} q={q} J={J:b}: formula {f} oracle {o}")
    return t.done()


def check_st_oracle(cases=SP_ST_CASES) -> CheckResult:
    t = _Tally("st-oracle")
    for n, q in cases:
        G = gl(n)
        for J1 in _subsets(G):
            for J2 in _subsets(G):
                f = eval_at(st_count(G, J1, J2), q)
                o = oracle_st(n, q, type_from_mask(n, J1), type_from_mask(n, J2))
                t.check(f == o, lambda: f"GL{n} q={q} ({J1:b},{J2:b}): formula {f} oracle {o}")
    return t.done()


COPRODUCT_DATA = ("A1", "A2", "A3", "B2", "G2", "GL2", "GL3")


def check_coproduct(data=COPRODUCT_DATA) -> CheckResult:
    t = _Tally("coproduct")
    for name in data:
        H = parse_datum(name)
        for J1 in _subsets(H):
            for J2 in _subsets(H):
                lhs = coproduct_eval(H, lambda K: sp_count(H, K), J1, J2)
                rhs = QRat.of(st_count(H, J1, J2))
                t.check(lhs == rhs, lambda: f"{name} ({J1:b},{J2:b}): {lhs} != {rhs}")
    return t.done()


TRIP_WEIGHTS = ((0, 0), (-1, 0), (-2, 0), (-1, -1))


def check_trip_oracle(weights=TRIP_WEIGHTS, q: int = 2) -> CheckResult:
    t = _Tally("trip-oracle")
    for w in weights:
        n = len(w)
        G = gl(n)
        mu = Cocharacter.from_gl_weights(w)
        for J0 in _subsets(G):
            for Ji in _subsets(G):
                f = eval_at(trip_count(G, mu, J0, Ji), q)
                o = oracle_trip(n, q, w, type_from_mask(n, J0), type_from_mask(n, Ji))
                t.check(f == o, lambda: f"mu={w} ({J0:b},{Ji:b}) q={q}: formula {f} oracle {o}")
    return t.done()


def check_mellit(nmax: int = 3, tmax: int = 4, nmin: int = 1) -> CheckResult:
    t = _Tally("mellit")
    exp = exp_side(nmax, tmax)
    for n in range(nmin, nmax + 1):
        lhs = omega_series(n, tmax)[n]
        rhs = exp[n]
        for key in rhs.keys():
            a, b = lhs[key], rhs[key]
            for k in range(tmax + 1):
                ca = a.coeffs[k] if hasattr(a, "coeffs") else a
                cb = b.coeffs[k] if hasattr(b, "coeffs") else b
                t.check(ca == cb, lambda: f"n={n} {key} t^{k}: {ca} != {cb}")
    return t.done()


def check_hnq(nmax: int = 6) -> CheckResult:
    t = _Tally("hnq")
    for n in range(1, nmax + 1):
        expected = QRat(1)
        for i in range(1, n + 1):
            expected = expected / (1 - QRat.of(QPoly.monomial(i)))
        got = h_at_one_over_one_minus_q(n)
        t.check(got == expected, lambda: f"n={n}: {got} != {expected}")
    return t.done()


def _convention_coproduct(n: int, nu) -> dict:
    """Delta'_{GL_n}(m_nu) read in m(X) m(Y) coordinates via m_lam <-> delta_[J(lam)]."""
    G = gl(n)
    rs = build_root_system(G)
    target = partition_to_subset(nu)
    cls = next(c for c in associate_classes(rs) if target in c)
    f = {J: (1 if J in cls else 0) for J in _subsets(G)}
    return {
        (lam, mu): coproduct_eval(G, f, partition_to_subset(lam), partition_to_subset(mu))
        for lam in partitions(n)
        for mu in partitions(n)
    }


def check_delta(nmax: int = 4) -> CheckResult:
    t = _Tally("delta")
    for n in range(1, nmax + 1):
        for nu in partitions(n):
            expansion = delta_n(SymFunc.m(nu))
            for key, val in _convention_coproduct(n, nu).items():
                got = expansion[key]
                t.check(got == val, lambda: f"m{list(nu)} at {key}: {got} != {val}")
    return t.done()


ASSOCIATE_DATA = ("A2", "A3", "B2")
TORUS_WEIGHTS = ((0, 0), (-1, 0), (-3, 0), (0, 0, 0), (-1, 0, 0), (-1, -1, 0), (-2, -1, 0))


def check_invariance() -> CheckResult:
    t = _Tally("invariance")
    for name in ASSOCIATE_DATA:
        H = parse_datum(name)
        classes = associate_classes(build_root_system(H))
        for c in classes:
            sp_vals = {sp_count(H, J) for J in c}
            t.check(len(sp_vals) == 1, lambda: f"{name}: sp not constant on {c}")
            for J2 in _subsets(H):
                vals = {st_count(H, J1, J2) for J1 in c} | {st_count(H, J2, J1) for J1 in c}
                t.check(len(vals) == 1, lambda: f"{name}: st not constant on {c} (other {J2:b})")
    for name in COPRODUCT_DATA:
        H = parse_datum(name)
        for J1 in _subsets(H):
            for J2 in _subsets(H):
                t.check(
                    st_count(H, J1, J2) == st_count(H, J2, J1),
                    lambda: f"{name}: st({J1:b},{J2:b}) != st({J2:b},{J1:b})",
                )
    for w in TORUS_WEIGHTS:
        n = len(w)
        mu = Cocharacter.from_gl_weights(w)
        mu_ss = Cocharacter(mu.simple_pairings)
        for J0 in _subsets(gl(n)):
            for Ji in _subsets(gl(n)):
                a = trip_count(gl(n), mu, J0, Ji)
                b = trip_count(sl(n), mu_ss, J0, Ji)
                t.check(a == b, lambda: f"mu={w} ({J0:b},{Ji:b}): GL {a} != SL {b}")
    for name in COPRODUCT_DATA + ("C3", "D4", "F4"):
        H = parse_datum(name)
        rs = build_root_system(H)
        W = weyl_group(rs)
        for J in _subsets(H):
            levi_pos = levi_subsystem(rs, J).system.n_positive
            max_coset = int(W.lengths[W.right_ok(J)].max())
            # dim P_J - rank = |Phi^+| + |Phi_J^+|, plus the flag variety dimension
            expected = rs.n_positive + levi_pos + max_coset
            deg = sp_count(H, J).degree
            t.check(
                deg == expected and deg == rs.n_roots,
                lambda: f"{name} J={J:b}: degree {deg}, expected {expected}",
            )
    return t.done()


SUITES: dict[str, Callable[[], CheckResult]] = {
    "sp-oracle": check_sp_oracle,
    "st-oracle": check_st_oracle,
    "coproduct": check_coproduct,
    "trip-oracle": check_trip_oracle,
    "mellit": check_mellit,
    "hnq": check_hnq,
    "delta": check_delta,
    "invariance": check_invariance,
}


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](**kwargs)]


__all__ = [
    "CheckResult",
    "SUITES",
    "run_suite",
    "check_sp_oracle",
    "check_st_oracle",
    "check_coproduct",
    "check_trip_oracle",
    "check_mellit",
    "check_hnq",
    "check_delta",
    "check_invariance",
]
