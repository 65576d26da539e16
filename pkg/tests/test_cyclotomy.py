import math

import pytest
from hypothesis import given, strategies as st

from diffspec.cyclotomy import (QUADRANTS, build_partition, count_residue_pairs,
                                count_residue_pairs_scan, cyclotomic_number_closed,
                                gcd_power_forms, index_range, parametrize_Eij)
from diffspec.errors import MuOutOfRange, ParameterError, RangeEmpty
from diffspec.field import build_quadratic_extension

from conftest import field


def test_F7_partition():
    P = build_partition(field(7, 1))
    assert P.numbers == {(0, 0): 1, (0, 1): 2, (1, 0): 1, (1, 1): 1}
    assert P.members(0, 1) == {2, 4}
    assert P.quadrant_of(0) is None and P.quadrant_of(6) is None
    assert P.quadrant_of(1) == (0, 0)


def test_F9_partition():
    P = build_partition(field(3, 2))
    assert P.numbers == {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 2}


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (7, 1), (7, 2), (3, 5), (13, 1)])
def test_partition_invariants(p, n):
    F = field(p, n)
    P = build_partition(F)
    assert sum(P.numbers.values()) == F.q - 2
    sets = [P.members(i, j) for i, j in QUADRANTS]
    assert len(frozenset().union(*sets)) == F.q - 2
    for i, j in QUADRANTS:
        assert P.numbers[(i, j)] == cyclotomic_number_closed(p, n, i, j)
        for x in P.e_sets[(i, j)][:20].tolist():
            assert F.is_square(x) == (i == 0) and F.is_square(F.add(x, 1)) == (j == 0)


def test_closed_numbers_examples():
    assert cyclotomic_number_closed(7, 1, 0, 0) == 1
    assert cyclotomic_number_closed(7, 1, 0, 1) == 2
    assert cyclotomic_number_closed(3, 2, 0, 0) == 1
    assert cyclotomic_number_closed(3, 2, 1, 1) == 2
    assert cyclotomic_number_closed(3, 1, 0, 0) == 0
    assert cyclotomic_number_closed(3, 1, 0, 1) == 1
    with pytest.raises(ParameterError):
        cyclotomic_number_closed(2, 3, 0, 0)


def test_parametrization_examples():
    F7 = field(7, 1)
    E = build_quadratic_extension(F7)
    par = parametrize_Eij(E, 0, 0)
    assert par.t.tolist() == [1] and par.x.tolist() == [1]
    par = parametrize_Eij(E, 0, 1)
    assert par.t.tolist() == [0, 1] and set(par.x.tolist()) == {2, 4}
    F9 = field(3, 2)
    par = parametrize_Eij(build_quadratic_extension(F9), 1, 1)
    assert par.gamma == F9.neg(F9.alpha)
    assert par.t.tolist() == [0, 1]
    assert set(par.x.tolist()) == build_partition(F9).members(1, 1)
    assert parametrize_Eij(build_quadratic_extension(F7), 1, 1).gamma == F7.neg_one


def test_empty_range():
    E = build_quadratic_extension(field(3, 1))
    with pytest.raises(RangeEmpty):
        parametrize_Eij(E, 0, 0)
    assert len(index_range(3, 0, 0)) == 0


@pytest.mark.parametrize("p,n", [(3, 2), (5, 1), (5, 2), (7, 2), (3, 3), (11, 1), (13, 2), (3, 4)])
def test_parametrizations_cover_quadrants(p, n):
    F = field(p, n)
    E = build_quadratic_extension(F)
    P = build_partition(F)
    for i, j in QUADRANTS:
        if P.numbers[(i, j)] == 0:
            with pytest.raises(RangeEmpty):
                parametrize_Eij(E, i, j)
            continue
        xs = parametrize_Eij(E, i, j).x.tolist()
        assert len(set(xs)) == len(xs) == P.numbers[(i, j)]
        assert set(xs) == P.members(i, j)


def test_residue_examples():
    assert count_residue_pairs(5, 3, 0) == 1
    assert count_residue_pairs(5, 3, 1) == 4
    assert count_residue_pairs(4, 2, 1) == 2
    with pytest.raises(MuOutOfRange):
        count_residue_pairs(10, 4, 3)
    with pytest.raises(ParameterError):
        count_residue_pairs(0, 4, 1)


@given(st.integers(1, 400), st.data())
def test_residue_counts_match_scan(N, data):
    v = data.draw(st.integers(1, N))
    mu = data.draw(st.integers(0, v // 2))
    assert count_residue_pairs(N, v, mu, check=False) == count_residue_pairs_scan(N, v, mu)


@given(st.integers(1, 300), st.data())
def test_residue_counts_partition_N(N, data):
    v = data.draw(st.integers(1, N))
    assert sum(count_residue_pairs(N, v, mu) for mu in range(v // 2 + 1)) == N


def test_gcd_examples():
    assert gcd_power_forms(3, 2, 4) == 10
    assert gcd_power_forms(3, 2, 2) == 2
    assert gcd_power_forms(5, 4, 2) == 2
    # beyond 64 bits the closed form is returned unchecked
    assert gcd_power_forms(11, 40, 80) == 11**40 + 1


def test_gcd_grid():
    for p in (3, 5, 7, 11):
        for a in range(1, 13):
            for b in range(1, 13):
                assert gcd_power_forms(p, a, b) == math.gcd(p**a + 1, p**b - 1)
