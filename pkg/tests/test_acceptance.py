"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines inline; they are
also collected into the terminal summary, and ``python tests/test_acceptance.py``
prints them without pytest.
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, field  # noqa: E402
from diffspec import closed_forms as cf  # noqa: E402
from diffspec.cli import TABLE1, table1_rows  # noqa: E402
from diffspec.derivative import count_solutions, spectrum_bruteforce  # noqa: E402
from diffspec.field import Repr  # noqa: E402
from diffspec.verify import Grid, fields_upto, run_suite  # noqa: E402


def report(num, title, ok, detail):
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES[num] = line
    print(line)
    assert ok, line


def _suite(name, **grid):
    (rep,) = run_suite(name, Grid(**grid))
    bad = rep.first_failure
    return rep, ("" if bad is None else f"first failure {bad.label()}: {bad.detail}")


def test_criterion_01_table1():
    t = time.perf_counter()
    rows = table1_rows()
    elapsed = time.perf_counter() - t
    ok = len(rows) == len(TABLE1) == 10 and elapsed < 60
    for r, pub_bound, pub_delta, _ in rows:
        ok &= r.match and r.bound == pub_bound and r.delta_brute == pub_delta == r.delta_closed
    report(1, "comparison table", ok, f"10 rows, bounds and deltas exact, {elapsed:.1f}s")


def test_criterion_02_first_family():
    t = time.perf_counter()
    rep, why = _suite("thm1", p_max=11, qn_max=10**5)
    elapsed = time.perf_counter() - t
    ok = rep.passed and len(rep.checks) >= 60 and elapsed < 300
    report(2, "first-family spectra", ok, why or f"{len(rep.checks)} triples, {elapsed:.1f}s")


def test_criterion_03_second_family():
    t = time.perf_counter()
    rep, why = _suite("thm2", p_max=10**5, qn_max=10**5)
    elapsed = time.perf_counter() - t
    checked = {c.case for c in rep.checks}
    required = {(3, 3, 1), (3, 3, 3), (3, 5, 1), (3, 5, 5), (7, 3, 1), (7, 3, 3),
                (11, 3, 1), (11, 3, 3), (19, 3, 1)}
    ok = rep.passed and required <= checked and elapsed < 120
    report(3, "second-family spectra", ok, why or f"{len(rep.checks)} triples, {elapsed:.1f}s")


def test_criterion_04_corollaries():
    got = {(p, n): spectrum_bruteforce(field(p, n), cf.exponent_thm2(p, n, 1)).delta
           for p, n in ((7, 3), (7, 5), (11, 3))}
    ok = got == {(7, 3): 4, (7, 5): 4, (11, 3): 6}
    report(4, "4- and 6-uniform spot checks", ok, str(got))


def test_criterion_05_cyclotomic_numbers():
    rep, why = _suite("cyclotomy", qn_max=10**4)
    report(5, "cyclotomic numbers", rep.passed, why or f"{len(rep.checks)} fields")


def test_criterion_06_parametrization():
    rep, why = _suite("lemma2", qn_max=4096)
    report(6, "quadrant parametrizations", rep.passed, why or f"{len(rep.checks)} fields")


def test_criterion_07_counting_identities():
    r3, why3 = _suite("lemma3", n_max=1000)
    r4, why4 = _suite("lemma4", p_max=11, exp_max=12)
    ok = r3.passed and r4.passed
    report(7, "residue counts and gcd identity", ok,
           why3 or why4 or f"N <= 1000 over {len(r3.checks)} moduli; p in {{3,5,7,11}}, a,b <= 12")


def test_criterion_08_images():
    ri, whyi = _suite("images", qn_max=10**4)
    rr, whyr = _suite("relations", qn_max=10**4)
    ok = ri.passed and rr.passed
    report(8, "image sizes and relations", ok, whyi or whyr or f"{len(ri.checks)} triples")


def test_criterion_09_h_decomposition():
    rep, why = _suite("lemma11", p_max=11, qn_max=1331)
    fields = {c.case[:2] for c in rep.checks}
    ok = rep.passed and {(7, 1), (3, 3), (7, 3), (11, 3)} <= fields
    report(9, "h-count decomposition", ok, why or f"{len(rep.checks)} triples, every nonzero b")


def test_criterion_10_properties():
    problems = []
    rng = np.random.default_rng(2024)
    small = fields_upto(10**4)
    for p, n in small:
        F = field(p, n)
        xs = np.arange(F.q)
        if not np.array_equal(F.antilog[F.log[xs[1:]]], xs[1:]):
            problems.append(f"round trip F_{p}^{n}")
        if not np.array_equal(F.vpow(xs, F.q), xs):
            problems.append(f"Fermat F_{p}^{n}")
    for p, n in fields_upto(1000):
        P = field(p, n, Repr.POLY)
        if any(P.pow(x, P.q) != x for x in range(P.q)):
            problems.append(f"Fermat (polynomial route) F_{p}^{n}")
    spectra = 0
    for p, n in [(3, 5), (5, 3), (7, 3), (11, 2), (13, 2), (3, 4)]:
        F = field(p, n)
        for d in range(1, F.q - 1):
            s = spectrum_bruteforce(F, d)
            spectra += 1
            if s.mass() != (F.q, F.q):
                problems.append(f"mass F_{p}^{n} d={d}")
            if spectrum_bruteforce(F, d * p % F.order) != s:
                problems.append(f"Frobenius F_{p}^{n} d={d}")
        for _ in range(50):
            d = int(rng.integers(1, F.q))
            a = int(rng.integers(1, F.q))
            b = int(rng.integers(0, F.q))
            if count_solutions(F, d, a, b) != count_solutions(F, d, 1, F.div(b, F.pow(a, d))):
                problems.append(f"scaling F_{p}^{n} d={d} a={a} b={b}")
    ok = not problems
    report(10, "property suites", ok, "; ".join(problems[:3]) or
           f"{len(small)} fields round trip/Fermat, {spectra} spectra mass/Frobenius, scaling")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
