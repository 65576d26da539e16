import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from diffspec.cyclotomy import QUADRANTS, build_partition
from diffspec.derivative import (ExponentParams, Family, Spectrum, count_solutions, derivative,
                                 h_solution_counts, restricted_images, solution_counts,
                                 spectrum_bruteforce, uniformity_bruteforce, verify_lemma11)
from diffspec.errors import ParameterError, RegimeViolation, ZeroInverse
from diffspec.field import Repr

from conftest import field


def test_derivative_examples(F7):
    assert derivative(F7, 4, 2) == 2
    assert derivative(F7, 4, 3) == 0
    for x in range(7):
        assert derivative(F7, 1, x) == 1


def test_count_examples(F7):
    assert count_solutions(F7, 4, 1, 1) == 2
    assert count_solutions(F7, 4, 1, 3) == 0
    assert count_solutions(F7, 4, 2, F7.mul(2, F7.pow(2, 4))) == count_solutions(F7, 4, 1, 2) == 1
    with pytest.raises(ParameterError):
        count_solutions(F7, 4, 0, 1)


def test_spectrum_examples():
    F9 = field(3, 2)
    assert spectrum_bruteforce(F9, 2).omega == {1: 9}
    assert spectrum_bruteforce(F9, 1).omega == {0: 8, 9: 1}
    assert spectrum_bruteforce(field(5, 3), 13).delta == 6
    assert spectrum_bruteforce(field(7, 1), 4).omega == {0: 2, 1: 3, 2: 2}
    with pytest.raises(ParameterError):
        spectrum_bruteforce(F9, 0)


def test_exponent_params():
    e = ExponentParams.thm1(5, 3, 2)
    assert (e.d, e.e, e.g, e.family) == (13, 1, 2, Family.THM1)
    assert ExponentParams.thm2(7, 3, 1).d == 214
    assert ExponentParams.thm2(11, 3, 1).d == 776
    assert ExponentParams.thm2(7, 1, 1).d == 4
    with pytest.raises(RegimeViolation):
        ExponentParams.thm2(5, 3, 1)
    with pytest.raises(RegimeViolation):
        ExponentParams.thm2(7, 3, 2)
    assert ExponentParams.raw(3, 2, 8).reduced == 8
    assert ExponentParams.raw(3, 2, 17).reduced == 1


@pytest.mark.parametrize("p,n", [(3, 3), (5, 2), (7, 2), (11, 1)])
def test_table_and_poly_spectra_agree(p, n):
    T, P = field(p, n), field(p, n, Repr.POLY)
    for d in (2, 3, 5, (p + 1) // 2 + T.q // 2):
        assert spectrum_bruteforce(T, d) == spectrum_bruteforce(P, d)
    ds = list(range(1, 20))
    assert np.array_equal(uniformity_bruteforce(T, ds), uniformity_bruteforce(P, ds))


@pytest.mark.parametrize("p,n", [(3, 4), (5, 3), (7, 3), (11, 2)])
def test_mass_and_frobenius(p, n):
    F = field(p, n)
    for d in range(1, F.q - 1, 7):
        s = spectrum_bruteforce(F, d)
        assert s.mass() == (F.q, F.q)
        assert spectrum_bruteforce(F, d * p % F.order or F.order) == s


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(7, 1), (3, 3), (5, 2), (11, 2)]), st.data())
def test_scaling_reduction(pn, data):
    F = field(*pn)
    d = data.draw(st.integers(1, 3 * F.q))
    a = data.draw(st.integers(1, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    assert count_solutions(F, d, a, b) == count_solutions(F, d, 1, F.div(b, F.pow(a, d)))


def test_spectrum_serialization():
    s = spectrum_bruteforce(field(5, 3), 13)
    assert Spectrum.from_dict(s.to_dict()) == s
    assert s[4] == 15 and s[3] == 0
    with pytest.raises(AssertionError):
        Spectrum(5, {1: 4}).check()


def test_uniformity_cap():
    F = field(7, 3)
    ds = list(range(2, 100))
    full = uniformity_bruteforce(F, ds)
    assert np.array_equal(uniformity_bruteforce(F, ds, cap=3), np.minimum(full, 4))
    assert np.array_equal(full, [spectrum_bruteforce(F, d).delta for d in ds])


@pytest.mark.parametrize("p,n,k", [(7, 3, 1), (5, 3, 2), (3, 4, 1), (11, 2, 3)])
def test_quadrant_decomposition(p, n, k):
    F = field(p, n)
    d = ExponentParams.thm1(p, n, k).d
    A = restricted_images(F, d, build_partition(F))
    assert sum(sum(m.values()) for m in A.multiplicities.values()) + 2 == F.q
    N = solution_counts(F, d)
    assert all(A.count(b) == N[b] for b in range(F.q))
    for ij in QUADRANTS:
        assert A.images[ij] == {b for b, m in A.multiplicities[ij].items() if m >= 1}


def test_image_examples():
    F = field(7, 3)
    A = restricted_images(F, 4, build_partition(F))
    assert len(A.images[(0, 0)]) == 29
    assert 1 not in A.images[(1, 0)] and 1 not in A.images[(0, 1)]
    F = field(5, 3)
    A = restricted_images(F, 13, build_partition(F))
    assert A.U(0, 0, 1) + A.U(1, 1, 1) == 1


def test_h_counts_F7(F7):
    P = build_partition(F7)
    N = solution_counts(F7, 4)
    assert h_solution_counts(F7, 1, 1, P).lam_sum + 1 == N[1] == 2
    assert h_solution_counts(F7, 1, 6, P).chi_sum + 1 == N[6] == 2
    assert h_solution_counts(F7, 1, 3, P).chi_sum == N[3]
    with pytest.raises(ZeroInverse):
        h_solution_counts(F7, 1, 0, P)


@pytest.mark.parametrize("p,n,k", [(7, 1, 1), (3, 3, 1), (7, 3, 1), (7, 3, 3)])
def test_h_decomposition_every_b(p, n, k):
    F = field(p, n)
    report = verify_lemma11(F, k, build_partition(F))
    assert len(report) == F.q - 1 and all(report.values())


def test_h_decomposition_regime():
    F = field(5, 1)
    with pytest.raises(RegimeViolation):
        verify_lemma11(F, 1, build_partition(F))
