import itertools

import numpy as np
import pytest

from steinberg.qalg import QPoly
from steinberg.rootsys import build_root_system, parse_datum, root_system_from_cartan
from steinberg.weyl import (
    WeylSizeError,
    associate_classes,
    kilmoyer_intersection,
    min_coset_reps,
    min_double_coset_reps,
    weyl_group,
)

# classical degrees of the basic invariants: sum_w q^l(w) = prod_i [d_i]_q
DEGREES = {
    "A1": (2,), "A2": (2, 3), "A3": (2, 3, 4), "B2": (2, 4), "B3": (2, 4, 6), "C3": (2, 4, 6),
    "D4": (2, 4, 4, 6), "G2": (2, 6), "F4": (2, 6, 8, 12), "E6": (2, 5, 6, 8, 9, 12),
}


def q_int(d):
    return QPoly([1] * d)


@pytest.mark.parametrize("name", sorted(DEGREES))
def test_poincare_polynomial_matches_degrees(name):
    W = weyl_group(build_root_system(parse_datum(name)))
    expected = QPoly((1,))
    for d in DEGREES[name]:
        expected = expected * q_int(d)
    assert QPoly(W.poincare()) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_a_lengths_are_inversion_counts(n):
    """S_n oracle: length multiset equals the inversion-number multiset."""
    inv = sorted(
        sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        for p in itertools.permutations(range(n))
    )
    W = weyl_group(build_root_system(parse_datum(f"A{n - 1}")))
    assert sorted(W.lengths.tolist()) == inv


def test_b2_signed_permutations():
    W = weyl_group(build_root_system(parse_datum("B2")))
    assert len(W) == 8 and W.lengths.max() == 4


def _subgroup(W, J):
    rs = W.rs
    gens = [W.index_of(rs.reflections[i]) for i in range(rs.rank) if (J >> i) & 1]
    elems = {W.index_of(np.arange(rs.n_roots))}
    frontier = set(elems)
    while frontier:
        new = set()
        for k in frontier:
            for g in gens:
                prod = W.perms[g][W.perms[k]]
                idx = W.index_of(prod)
                if idx not in elems:
                    new.add(idx)
        elems |= new
        frontier = new
    return elems


def _compose(W, a, b):
    return W.index_of(W.perms[a][W.perms[b]])


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "G2"])
def test_coset_reps_by_orbit_oracle(name):
    rs = build_root_system(parse_datum(name))
    W = weyl_group(rs)
    for J in range(1 << rs.rank):
        WJ = _subgroup(W, J)
        seen, mins = set(), set()
        for k in range(len(W)):
            if k in seen:
                continue
            coset = {_compose(W, k, u) for u in WJ}
            seen |= coset
            mins.add(min(coset, key=lambda x: W.lengths[x]))
        got = {W.index_of(w.perm) for w in min_coset_reps(rs, J)}
        assert got == mins


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_double_coset_reps_by_orbit_oracle(name):
    rs = build_root_system(parse_datum(name))
    W = weyl_group(rs)
    for J1 in range(1 << rs.rank):
        for J2 in range(1 << rs.rank):
            L, R = _subgroup(W, J1), _subgroup(W, J2)
            seen, mins = set(), set()
            for k in range(len(W)):
                if k in seen:
                    continue
                orbit = {_compose(W, _compose(W, u, k), v) for u in L for v in R}
                seen |= orbit
                mins.add(min(orbit, key=lambda x: W.lengths[x]))
            reps = min_double_coset_reps(rs, J1, J2)
            assert {W.index_of(w.perm) for w in reps} == mins
            for w in reps:
                kilmoyer_intersection(rs, w, J1, J2, check=True)


def test_a2_examples():
    rs = build_root_system(parse_datum("A2"))
    assert sorted(w.length for w in min_coset_reps(rs, 0b01)) == [0, 1, 2]
    reps = min_double_coset_reps(rs, 0b01, 0b01)
    assert [w.length for w in reps] == [0, 1]
    s2 = weyl_group(rs).index_of(rs.reflections[1])
    assert weyl_group(rs).index_of(reps[1].perm) == s2


def test_associate_classes():
    assert associate_classes(build_root_system(parse_datum("A3"))) == [[0], [1, 2, 4], [3, 6], [5], [7]]
    assert len(associate_classes(build_root_system(parse_datum("E6")))) == 17
    # B2: the two simple roots have different lengths, so are not associate
    assert associate_classes(build_root_system(parse_datum("B2"))) == [[0], [1], [2], [3]]


def test_size_cap(monkeypatch):
    monkeypatch.setenv("STEINBERG_MAX_WEYL", "10")
    rs = root_system_from_cartan(((2, -1, 0), (-1, 2, -1), (0, -1, 2)))
    weyl_group.cache_clear()
    try:
        with pytest.raises(WeylSizeError):
            weyl_group(rs)
    finally:
        weyl_group.cache_clear()
