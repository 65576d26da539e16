import pytest

from diffspec.derivative import spectrum_bruteforce, uniformity_bruteforce
from diffspec.errors import SearchBoundExceeded
from diffspec.search import frobenius_canonical, orbit, search_exponents

from conftest import field


def test_planar_square():
    out = search_exponents(field(3, 2), 1)
    assert 2 in [r.d for r in out.results]
    assert all(r.delta == 1 for r in out.results)


def test_dedup_keeps_canonical_of_second_family_exponent():
    out = search_exponents(field(7, 3), 4, dedup=True)
    canon = int(frobenius_canonical([214], 7, 3)[0])
    assert canon == min(orbit(214, 7, 3)) == 130
    hit = [r for r in out.results if r.canonical == canon]
    assert hit and hit[0].delta == 4
    assert out.violations == []
    keys = [(r.delta, r.canonical, r.d) for r in out.results]
    assert keys == sorted(keys)
    assert len({r.canonical for r in out.results}) == len(out.results)


def test_search_agrees_with_exhaustive_scan():
    F = field(5, 3)
    out = search_exponents(F, 2)
    ds = range(2, F.q - 1)
    brute = [d for d, u in zip(ds, uniformity_bruteforce(F, ds)) if u <= 2]
    assert sorted(r.d for r in out.results) == brute
    assert (3 in brute) == (3 in [r.d for r in out.results])


def test_inverse_filter_is_checked():
    F = field(5, 3)
    out = search_exponents(F, 3, inverse=True)
    assert out.violations == []
    assert len(out.results) <= len(search_exponents(F, 3, dedup=True).results)


def test_orbit_members_share_spectra():
    F = field(3, 4)
    for r in search_exponents(F, 3, dedup=True).results[:10]:
        for m in orbit(r.d, 3, 4):
            assert spectrum_bruteforce(F, m) == r.spectrum


def test_search_bound():
    with pytest.raises(SearchBoundExceeded):
        search_exponents(field(3, 7), 2, bound=1000)
