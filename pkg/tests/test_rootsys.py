import numpy as np
import pytest

from steinberg.rootsys import (
    DatumError,
    ReductiveDatum,
    build_root_system,
    cartan_matrix,
    classify_cartan,
    gl,
    levi_subsystem,
    pairing,
    parse_datum,
    sl,
)


def closure_count(cartan):
    """Independent closure oracle: apply simple reflections until nothing new appears."""
    cartan = np.asarray(cartan)
    r = cartan.shape[0]
    roots = {tuple(int(i == j) for j in range(r)) for i in range(r)}
    frontier = set(roots)
    while frontier:
        new = set()
        for root in frontier:
            v = np.array(root)
            for i in range(r):
                # s_i(v) = v - <v, alpha_i^vee> alpha_i, with <alpha_j, alpha_i^vee> = A[i, j]
                w = v.copy()
                w[i] -= int(cartan[i] @ v)
                t = tuple(int(x) for x in w)
                if t not in roots:
                    new.add(t)
        roots |= new
        frontier = new
    return len(roots)


@pytest.mark.parametrize(
    "name,n_roots",
    [("A1", 2), ("A2", 6), ("A3", 12), ("A7", 56), ("B2", 8), ("B3", 18), ("C3", 18),
     ("B4", 32), ("D4", 24), ("D5", 40), ("G2", 12), ("F4", 48), ("E6", 72)],
)
def test_root_counts_match_closure_oracle(name, n_roots):
    H = parse_datum(name)
    rs = build_root_system(H)
    assert rs.n_roots == n_roots
    assert closure_count(rs.cartan) == n_roots
    assert rs.n_positive * 2 == rs.n_roots


def test_cartan_conventions():
    # B_n: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2
    assert cartan_matrix("B", 2)[1, 0] == -2
    assert cartan_matrix("C", 2)[0, 1] == -2
    g2 = cartan_matrix("G", 2)
    assert sorted([g2[0, 1], g2[1, 0]]) == [-3, -1]
    for name in ("A3", "B3", "C3", "D4", "G2", "F4", "E6"):
        A = build_root_system(parse_datum(name)).cartan
        assert (np.diag(A) == 2).all()


def test_highest_roots():
    rs = build_root_system(parse_datum("G2"))
    assert sorted(map(tuple, rs.roots[list(rs.positive_indices)].tolist()))[-1] in {(3, 2), (2, 3)}
    rs = build_root_system(parse_datum("E6"))
    top = rs.roots[list(rs.positive_indices)].sum(axis=1).max()
    assert top == 11  # Coxeter number 12 minus 1


def test_parse_and_datum():
    assert parse_datum("GL3") == gl(3)
    assert parse_datum("SL3") == sl(3)
    assert gl(3).torus_rank == 3 and sl(3).torus_rank == 2
    assert parse_datum("A1xA1+t2").semisimple_rank == 2
    assert parse_datum("A1xA1+t3").torus_rank == 3
    assert gl(1).semisimple_rank == 0 and gl(1).is_gl
    with pytest.raises(DatumError):
        parse_datum("Q3")
    with pytest.raises(DatumError):
        ReductiveDatum((("A", 2),), 1)
    with pytest.raises(DatumError):
        parse_datum("E8").check_supported()
    with pytest.raises(DatumError):
        parse_datum("B1")


def test_levi_and_classification():
    rs = build_root_system(parse_datum("B3"))
    lv = levi_subsystem(rs, 0b110)
    assert lv.system.n_positive == 4  # B2
    assert classify_cartan(lv.system.cartan) == (("B", 2),)
    assert classify_cartan(build_root_system(parse_datum("F4")).cartan) == (("F", 4),)
    lv = levi_subsystem(build_root_system(parse_datum("A3")), 0b101)
    assert classify_cartan(lv.system.cartan) == (("A", 1), ("A", 1))


def test_pairing():
    assert pairing((1, 1), (-1, 0)) == -1
    with pytest.raises(ValueError):
        pairing((1, 1), (0,))
