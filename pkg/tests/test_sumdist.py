import json

import numpy as np
import pytest

from divfun.reversible import count_principal, iter_squares, square_from_offsets
from divfun.sumdist import (
    InvalidSystemError,
    SumDistanceSystem,
    enumerate_sds,
    sds_to_square,
    square_to_sds,
    sum_of_squares_target,
    verify_sds,
    verify_signed_form,
)

SEVEN = {
    ((1, 3, 5), (6, 18, 30)),
    ((1, 7, 9), (2, 22, 26)),
    ((1, 11, 13), (14, 18, 22)),
    ((1, 23, 25), (2, 6, 10)),
    ((3, 9, 15), (16, 18, 20)),
    ((3, 21, 27), (4, 6, 8)),
    ((7, 9, 11), (12, 18, 24)),
}


def sds(A, B, inclusive=False):
    return SumDistanceSystem(len(A), tuple(A), tuple(B), inclusive)


def row_major_square(n):
    return square_from_offsets(range(n), [n * k for k in range(n)])


def test_verify_examples():
    assert verify_sds(sds([1, 3, 5], [6, 18, 30]))
    assert verify_sds(sds([1, 2, 3], [7, 14, 21], inclusive=True))
    assert not verify_sds(sds([1, 2], [3, 4]))
    assert not verify_sds(sds([1, 3, 5], [6, 18, 30], inclusive=True))


def test_signed_form_agrees():
    for m in range(1, 5):
        for incl in (False, True):
            for s in enumerate_sds(m, incl):
                assert verify_signed_form(s)
    assert not verify_signed_form(sds([1, 2], [3, 4]))


def test_structure_validation():
    with pytest.raises(InvalidSystemError):
        sds([1, 1], [2, 3])
    with pytest.raises(InvalidSystemError):
        SumDistanceSystem(2, (1,), (2, 3))
    with pytest.raises(InvalidSystemError):
        sds([0, 1], [2, 3])


def test_square_to_sds_examples():
    assert square_to_sds(row_major_square(6)) == sds([1, 3, 5], [6, 18, 30])
    assert square_to_sds(row_major_square(7)) == sds([1, 2, 3], [7, 14, 21], inclusive=True)
    assert square_to_sds(row_major_square(2)) == sds([1], [2])
    with pytest.raises(ValueError):
        square_to_sds(row_major_square(1))


def test_sds_to_square_examples():
    assert sds_to_square(sds([1, 3, 5], [6, 18, 30])) == row_major_square(6)
    assert sds_to_square(sds([1, 2, 3], [7, 14, 21], inclusive=True)) == row_major_square(7)
    assert sds_to_square(sds([1], [2])) == row_major_square(2)
    # component order does not matter: the transpose is undone
    assert sds_to_square(sds([6, 18, 30], [1, 3, 5])) == row_major_square(6)


def test_sds_to_square_rejects_invalid():
    with pytest.raises(InvalidSystemError):
        sds_to_square(sds([1, 2], [3, 4]))
    with pytest.raises(InvalidSystemError):
        sds_to_square(sds([1, 3], [5, 7]))


def test_enumerate_m3():
    got = {(s.A, s.B) for s in enumerate_sds(3)}
    assert got == SEVEN
    (only,) = enumerate_sds(3, inclusive=True)
    assert (only.A, only.B) == ((1, 2, 3), (7, 14, 21))


def test_enumerate_m1():
    assert enumerate_sds(1) == [sds([1], [2])]


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("inclusive", [False, True])
def test_enumeration_invariants(m, inclusive):
    systems = enumerate_sds(m, inclusive)
    n = 2 * m + 1 if inclusive else 2 * m
    assert len(systems) == count_principal(n)
    target = sum_of_squares_target(m, inclusive)
    for s in systems:
        assert verify_sds(s)
        assert s.sum_of_squares() == target
        assert square_to_sds(sds_to_square(s)) == s
        if not inclusive:
            assert all((a + b) % 2 for a in s.A for b in s.B)


@pytest.mark.parametrize("n", range(2, 13))
def test_square_roundtrip(n):
    for sq in iter_squares(n):
        assert sds_to_square(square_to_sds(sq)) == sq


def test_sum_of_squares_targets():
    assert sum_of_squares_target(3) == 1295 == sds([1, 3, 5], [6, 18, 30]).sum_of_squares()
    assert sum_of_squares_target(3, True) == 700 == sds([1, 2, 3], [7, 14, 21], True).sum_of_squares()
    assert sum_of_squares_target(1) == 5
    with pytest.raises(ValueError):
        sum_of_squares_target(0)


def test_canonical_and_equality():
    a = sds([6, 18, 30], [1, 3, 5])
    b = sds([1, 3, 5], [6, 18, 30])
    assert a != b and a.same_as(b) and a.canonical() == b


def test_serialization():
    s = sds([1, 2, 3], [7, 14, 21], inclusive=True)
    assert s.to_json() == '{"m":3,"inclusive":true,"A":[1,2,3],"B":[7,14,21]}'
    assert s.to_text() == "1 2 3 | 7 14 21"
    assert SumDistanceSystem.from_dict(json.loads(s.to_json())) == s
    assert SumDistanceSystem.from_dict({"A": [1], "B": [2]}) == sds([1], [2])
    with pytest.raises(InvalidSystemError):
        SumDistanceSystem.from_dict({"A": [1], "B": [2], "inclusive": "yes"})


def test_larger_counts_match():
    for m in (7, 8):
        assert len(enumerate_sds(m)) == count_principal(2 * m)
        assert len(enumerate_sds(m, True)) == count_principal(2 * m + 1)


def test_square_orientation_matches_offsets():
    sq = sds_to_square(sds([1, 7, 9], [2, 22, 26]))
    assert int(sq.M[0, 1]) == 2
    assert np.array_equal(sq.M, sq.M[:, :1] + sq.M[:1, :] - 1)
