"""Oracle-equivalence suites: closed forms against exhaustive enumeration.

Each suite walks a bounded parameter grid, records one :class:`Check` per
case and stops at nothing; callers decide what a failure means.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import closed_forms as cf
from .cyclotomy import (
    QUADRANTS,
    build_partition,
    cyclotomic_number_closed,
    gcd_power_forms,
    parametrize_Eij,
    residue_pairs_closed,
)
from .derivative import (
    ExponentParams,
    restricted_images,
    solution_counts,
    spectrum_bruteforce,
    verify_lemma11,
)
from .errors import ParameterError, RangeEmpty
from .field import DEFAULT_TABLE_BOUND, build_field, build_quadratic_extension
from .poly import is_prime

SUITES = ("cyclotomy", "lemma2", "lemma3", "lemma4", "images", "relations",
          "lemma11", "thm1", "thm2")


@dataclass(frozen=True)
class Grid:
    """Bounds for a suite; ``None`` picks the suite's own default."""

    p_max: int | None = None
    exp_max: int | None = None
    qn_max: int | None = None
    n_max: int | None = None  # largest N for the residue-count suite


DEFAULTS = {
    "cyclotomy": Grid(qn_max=10**4),
    "lemma2": Grid(qn_max=4096),
    "lemma3": Grid(n_max=1000),
    "lemma4": Grid(p_max=11, exp_max=12),
    "images": Grid(qn_max=10**4),
    "relations": Grid(qn_max=10**4),
    "lemma11": Grid(p_max=11, qn_max=1331),
    "thm1": Grid(p_max=11, qn_max=10**5),
    "thm2": Grid(p_max=19, qn_max=10**5),
}


@dataclass(frozen=True)
class Check:
    case: tuple
    ok: bool
    detail: str = ""

    def label(self):
        return "(" + ",".join(map(str, self.case)) + ")"


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.ok), None)

    def add(self, case, problems):
        problems = [p for p in problems if p]
        self.checks.append(Check(tuple(case), not problems, "; ".join(problems)))


def _resolve(suite, grid):
    base = DEFAULTS[suite]
    return Grid(*(g if g is not None else b for g, b in
                  zip((grid.p_max, grid.exp_max, grid.qn_max, grid.n_max),
                      (base.p_max, base.exp_max, base.qn_max, base.n_max))))


def odd_primes(limit):
    return [p for p in range(3, limit + 1, 2) if is_prime(p)]


def fields_upto(qn_max, p_max=None, predicate=None):
    """(p, n) with p odd prime, p^n <= qn_max, in increasing (p, n) order."""
    out = []
    for p in odd_primes(min(qn_max, p_max or qn_max)):
        n = 1
        while p**n <= qn_max:
            if predicate is None or predicate(p, n):
                out.append((p, n))
            n += 1
    return out


@lru_cache(maxsize=16)
def _field(p, n):
    return build_field(p, n)


@lru_cache(maxsize=16)
def _partition(p, n):
    return build_partition(_field(p, n))


def _diff(name, got, want):
    return "" if got == want else f"{name}: got {got}, expected {want}"


def suite_cyclotomy(grid):
    rep = SuiteReport("cyclotomy")
    for p, n in fields_upto(grid.qn_max, grid.p_max):
        part = build_partition(build_field(p, n))
        rep.add((p, n), [_diff(f"({i},{j})", part.numbers[(i, j)],
                               cyclotomic_number_closed(p, n, i, j)) for i, j in QUADRANTS])
    return rep


def suite_lemma2(grid):
    rep = SuiteReport("lemma2")
    for p, n in fields_upto(grid.qn_max, grid.p_max, lambda p, n: p ** (2 * n) <= DEFAULT_TABLE_BOUND):
        F = _field(p, n)
        ext = build_quadratic_extension(F)
        part = _partition(p, n)
        problems = []
        for i, j in QUADRANTS:
            want = cyclotomic_number_closed(p, n, i, j)
            try:
                xs = parametrize_Eij(ext, i, j).x.tolist()
            except RangeEmpty:
                xs = []
            if len(set(xs)) != len(xs):
                problems.append(f"E_{i}{j}: parametrization repeats elements")
            if set(xs) != part.members(i, j):
                problems.append(f"E_{i}{j}: generated set differs from enumeration")
            problems.append(_diff(f"|E_{i}{j}|", len(xs), want))
        rep.add((p, n), problems)
    return rep


def suite_lemma3(grid):
    """Closed residue counts against running histograms of a mod v."""
    rep = SuiteReport("lemma3")
    top = grid.n_max
    a = np.arange(1, top + 1)
    for v in range(1, top + 1):
        onehot = np.zeros((top, v), dtype=np.int32)
        onehot[a - 1, a % v] = 1
        hist = np.cumsum(onehot, axis=0)[v - 1:]  # row N - v holds counts for a <= N
        mus = np.arange(v // 2 + 1)
        neg = (-mus) % v
        direct = np.where(mus == neg, hist[:, mus], hist[:, mus] + hist[:, neg])
        Ns = np.arange(v, top + 1)[:, None]
        closed = residue_pairs_closed(Ns, v, mus[None, :])
        bad = None
        if not np.array_equal(direct, closed):
            i, j = np.argwhere(direct != closed)[0]
            bad = f"N={v + i}, mu={j}: closed {closed[i, j]}, scan {direct[i, j]}"
        rep.add((v,), [bad])
    return rep


def suite_lemma4(grid):
    rep = SuiteReport("lemma4")
    for p in odd_primes(grid.p_max):
        problems = []
        for a in range(1, grid.exp_max + 1):
            for b in range(1, grid.exp_max + 1):
                problems.append(_diff(f"gcd(p^{a}+1, p^{b}-1)",
                                      gcd_power_forms(p, a, b, check=False),
                                      math.gcd(p**a + 1, p**b - 1)))
        rep.add((p,), problems)
    return rep


def _thm1_triples(grid):
    for p, n in fields_upto(grid.qn_max, grid.p_max):
        for k in range(1, 2 * n + 1):
            yield p, n, k


def _images(p, n, k):
    F = _field(p, n)
    return F, restricted_images(F, ExponentParams.thm1(p, n, k).d, _partition(p, n))


def suite_images(grid):
    rep = SuiteReport("images")
    for p, n, k in _thm1_triples(grid):
        F, A = _images(p, n, k)
        problems = []
        for ij, exp in cf.expected_image_cardinalities(p, n, k).items():
            problems += [f"{cf.QUADRANT_NAMES[ij]} {m}" for m in
                         exp.mismatches(A.multiplicities[ij], F.neg_one)]
        problems.append(_rebuild(F, ExponentParams.thm1(p, n, k).d, A))
        rep.add((p, n, k), problems)
    return rep


def _rebuild(F, d, A):
    # quadrant multiplicities plus the two boundary points must give back N(1, b)
    rebuilt = np.zeros(F.q, dtype=np.int64)
    for mult in A.multiplicities.values():
        rebuilt[np.fromiter(mult, np.int64, len(mult))] += np.fromiter(mult.values(), np.int64, len(mult))
    for b in A.boundary:
        rebuilt[b] += 1
    N = solution_counts(F, d)
    if np.array_equal(rebuilt, N):
        return ""
    b = int(np.argmax(rebuilt != N))
    return f"N(1,{b}): quadrants give {rebuilt[b]}, direct count {N[b]}"


def suite_relations(grid):
    rep = SuiteReport("relations")
    for p, n, k in _thm1_triples(grid):
        F, A = _images(p, n, k)
        rep.add((p, n, k), [f"{r} fails" for r in cf.expected_image_relations(p, n, k)
                            if not r.holds(A, F.neg_one)])
    return rep


def _thm2_triples(grid):
    admissible = lambda p, n: p % 4 == 3 and n % 2 == 1
    for p, n in fields_upto(grid.qn_max, grid.p_max, admissible):
        for k in range(1, n + 1):
            if n % k == 0:
                yield p, n, k


def suite_lemma11(grid):
    rep = SuiteReport("lemma11")
    for p, n, k in _thm2_triples(grid):
        report = verify_lemma11(_field(p, n), k, _partition(p, n))
        bad = [b for b, ok in report.items() if not ok]
        rep.add((p, n, k), [f"decomposition fails at b={bad[0]}" if bad else ""])
    return rep


def suite_thm1(grid):
    rep = SuiteReport("thm1")
    for p, n, k in _thm1_triples(grid):
        closed = cf.spectrum_thm1(p, n, k)
        brute = spectrum_bruteforce(_field(p, n), ExponentParams.thm1(p, n, k).d)
        problems = [_diff("omega", brute.omega, closed.omega)]
        if closed.delta > cf.helleseth_bound(p, n, k):
            problems.append(f"delta {closed.delta} exceeds the bound")
        if math.gcd(n, k) != n:
            problems.append(_diff("uniformity", closed.delta, cf.uniformity_cor1(p, n, k)))
        rep.add((p, n, k), problems)
    return rep


def suite_thm2(grid):
    rep = SuiteReport("thm2")
    for p, n, k in _thm2_triples(grid):
        closed = cf.spectrum_thm2(p, n, k)
        brute = spectrum_bruteforce(_field(p, n), cf.exponent_thm2(p, n, k))
        rep.add((p, n, k), [_diff("omega", brute.omega, closed.omega)])
    return rep


_RUNNERS = {name: globals()[f"suite_{name}"] for name in SUITES}


def run_suite(name: str, grid: Grid | None = None) -> list:
    """Run one suite (or ``"all"``); returns a list of SuiteReports."""
    grid = grid or Grid()
    if name == "all":
        return [run_suite(s, grid)[0] for s in SUITES]
    if name not in _RUNNERS:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return [_RUNNERS[name](_resolve(name, grid))]
