import pytest

from steinberg.oracle import (
    OracleBoundError,
    flags,
    full_type,
    mask_from_type,
    oracle_group_order,
    oracle_nilcone,
    oracle_sp,
    oracle_st,
    oracle_trip,
    parse_type,
    section_dimension,
    sorted_flags,
    subspaces,
    type_from_mask,
)


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_subspace_counts(n, q):
    for k in range(n + 1):
        assert len(subspaces(n, q, k)) == gaussian_binomial(n, k, q)


def test_flag_counts_and_canonical_forms():
    assert len(flags(3, 2, (1, 2))) == 21
    assert len(flags(2, 3, (1,))) == 4
    assert sorted_flags(3, 2, (1, 2)) == sorted_flags(3, 2, (1, 2))
    assert len({f.subspaces for f in flags(3, 3, (1, 2))}) == len(flags(3, 3, (1, 2)))


def test_type_mask_round_trip():
    for n in (1, 2, 3):
        for J in range(1 << max(n - 1, 0)):
            assert mask_from_type(n, type_from_mask(n, J)) == J
    assert type_from_mask(3, 0) == full_type(3) == (1, 2)
    assert type_from_mask(3, 0b01) == (2,)
    assert parse_type(3, "full") == (1, 2) and parse_type(3, "trivial") == () and parse_type(3, "1/2") == (1, 2)
    with pytest.raises(ValueError):
        parse_type(3, "2/1")


def test_documented_values():
    assert oracle_group_order(2, 2) == 6
    assert oracle_group_order(2, 3) == 48
    assert oracle_group_order(2, 2, det1=True) == 6
    assert oracle_group_order(2, 3, det1=True) == 24
    assert oracle_group_order(1, 3) == 2
    assert oracle_nilcone(2, 2) == 4 and oracle_nilcone(2, 3) == 9 and oracle_nilcone(3, 2) == 64
    assert oracle_sp(2, 2, (1,)) == 6
    assert oracle_sp(2, 3, ()) == 9
    assert oracle_st(2, 2, (1,), (1,)) == 12
    assert oracle_st(2, 3, (1,), (1,)) == 24
    assert oracle_st(3, 2, (), ()) == 64
    assert oracle_trip(2, 2, (-1, 0), (1,), (1,)) == 16
    assert oracle_trip(1, 2, (-5,), (), ()) == 1


def test_trip_reduces_to_steinberg_for_central_weights():
    for a in [(), (1,)]:
        for b in [(), (1,)]:
            assert oracle_trip(2, 2, (0, 0), a, b) == oracle_st(2, 2, a, b)
            assert oracle_trip(2, 2, (-1, -1), a, b) == oracle_st(2, 2, a, b)


def test_trip_swap_symmetry():
    for w in [(-1, 0), (-2, 0), (-2, -1, 0)]:
        n = len(w)
        types = [type_from_mask(n, J) for J in range(1 << (n - 1))]
        for a in types:
            for b in types:
                assert oracle_trip(n, 2, w, a, b) == oracle_trip(n, 2, w, b, a)


def test_bounds():
    assert section_dimension((-1, 0)) == 4
    with pytest.raises(OracleBoundError):
        oracle_trip(3, 3, (-3, -1, 0), (), ())
    with pytest.raises(OracleBoundError):
        oracle_sp(4, 2, (1, 2, 3))
    with pytest.raises(OracleBoundError):
        oracle_sp(2, 5, (1,))
