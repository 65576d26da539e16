"""Exhaustive ground truth for power functions f(x) = x^d.

Counts solutions of f(x + a) - f(x) = b, builds differential spectra, splits
the derivative D(x) = f(x + 1) - f(x) over the cyclotomic quadrants, and
evaluates the auxiliary h-function counts used for the second exponent family.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cyclotomy import QUADRANTS, CyclotomicPartition
from .errors import ParameterError, RegimeViolation, ZeroInverse
from .field import FieldCtx


class Family(enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    RAW = "raw"


def thm2_regime(p, n, k):
    if p % 4 != 3 or n % 2 == 0 or k < 1 or n % k:
        raise RegimeViolation(f"(p, n, k) = ({p}, {n}, {k}) needs p = 3 mod 4, odd n and k | n")


@dataclass(frozen=True)
class ExponentParams:
    p: int
    n: int
    d: int
    family: Family = Family.RAW
    k: int | None = None

    @property
    def q(self):
        return self.p**self.n

    @property
    def e(self):
        return None if self.k is None else math.gcd(self.n, self.k)

    @property
    def g(self):
        return None if self.k is None else math.gcd(2 * self.n, self.k)

    @property
    def reduced(self):
        """d modulo q - 1, kept nonzero so that 0^d stays 0."""
        r = self.d % (self.q - 1)
        return r if r else self.q - 1

    @classmethod
    def thm1(cls, p, n, k):
        if k < 1:
            raise ParameterError("k must be positive")
        return cls(p, n, (p**k + 1) // 2, Family.THM1, k)

    @classmethod
    def thm2(cls, p, n, k):
        thm2_regime(p, n, k)
        q = p**n
        return cls(p, n, (q + 1) // (p**k + 1) + (q - 1) // 2, Family.THM2, k)

    @classmethod
    def raw(cls, p, n, d):
        return cls(p, n, d)


@dataclass(frozen=True)
class Spectrum:
    """omega[i] = number of b with N(1, b) = i; only nonzero counts are kept."""

    q: int
    omega: dict

    def __post_init__(self):
        clean = {int(i): int(c) for i, c in sorted(self.omega.items()) if c}
        object.__setattr__(self, "omega", clean)

    @property
    def delta(self) -> int:
        return max(self.omega)

    def __getitem__(self, i):
        return self.omega.get(i, 0)

    def mass(self):
        """(sum of omega_i, sum of i * omega_i); both equal q for a genuine spectrum."""
        return sum(self.omega.values()), sum(i * c for i, c in self.omega.items())

    def check(self):
        if self.mass() != (self.q, self.q):
            raise AssertionError(f"spectrum mass {self.mass()} != ({self.q}, {self.q})")
        return self

    @classmethod
    def from_multiplicities(cls, q, counts):
        """Build from N(1, b) listed over all q values of b."""
        hist = np.bincount(np.asarray(counts, dtype=np.int64))
        return cls(q, {i: int(c) for i, c in enumerate(hist) if c})

    def to_dict(self):
        return {"q": self.q, "omega": {str(i): c for i, c in self.omega.items()},
                "delta": self.delta}

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["q"]), {int(i): int(c) for i, c in data["omega"].items()})


def derivative(ctx: FieldCtx, d: int, x: int) -> int:
    """(x + 1)^d - x^d, with 0^0 = 1."""
    return ctx.sub(ctx.pow(ctx.add(x, 1), d), ctx.pow(x, d))


def _check_d(d):
    if d < 1:
        raise ParameterError(f"exponent must be >= 1 for spectrum computations, got {d}")


def derivative_values(ctx: FieldCtx, d: int, xs) -> np.ndarray:
    """D(x) for every entry of ``xs`` (element codes)."""
    _check_d(d)
    xs = np.asarray(xs, dtype=np.int64)
    if not ctx.has_tables:
        ptab = ctx.power_table(d)
        return ctx.vsub(ptab[ctx.vsucc(xs)], ptab[xs])
    out = np.empty(xs.shape, dtype=np.int64)
    special = (xs == 0) | (xs == ctx.neg_one)
    rest = ~special
    logs = kernels.derivative_logs(ctx.zech, d % ctx.order, ctx.log[xs[rest]])
    out[rest] = np.where(logs == ctx.order, 0, ctx.antilog[logs])
    out[xs == 0] = derivative(ctx, d, 0)
    out[xs == ctx.neg_one] = derivative(ctx, d, ctx.neg_one)
    return out


def solution_counts(ctx: FieldCtx, d: int) -> np.ndarray:
    """N(1, b) for every b, indexed by element code."""
    vals = derivative_values(ctx, d, np.arange(ctx.q, dtype=np.int64))
    return np.bincount(vals, minlength=ctx.q)


def count_solutions(ctx: FieldCtx, d: int, a: int, b: int) -> int:
    """N(a, b) = #{x : (x + a)^d - x^d = b} by scanning all x."""
    if a == 0:
        raise ParameterError("a must be nonzero")
    _check_d(d)
    xs = np.arange(ctx.q, dtype=np.int64)
    if ctx.has_tables:
        lhs = ctx.vsub(ctx.vpow(ctx.vadd(xs, a), d), ctx.vpow(xs, d))
    else:
        ptab = ctx.power_table(d)
        lhs = ctx.vsub(ptab[ctx.vadd(xs, a)], ptab)
    return int(np.count_nonzero(lhs == b))


def worker_count(workers=None):
    if workers is None:
        workers = int(os.environ.get("DIFFSPEC_THREADS", "0") or 0)
    return workers if workers > 0 else (os.cpu_count() or 1)


def _log_histogram(ctx, d, workers):
    """Histogram of log D(x) over the whole field; index q-1 is the zero bin."""
    zech = ctx.zech
    o = ctx.order
    dr = d % o
    chunks = max(1, min(workers, o // 4096 or 1))
    bounds = [o * i // chunks for i in range(chunks + 1)]

    def run(i):
        out = np.zeros(o + 1, dtype=np.int64)
        kernels.derivative_log_counts(zech, dr, bounds[i], bounds[i + 1], out)
        return out

    if chunks == 1:
        counts = run(0)
    else:
        with ThreadPoolExecutor(chunks) as pool:
            counts = sum(pool.map(run, range(chunks)))
    counts[0] += 1  # x = 0 gives D = 1
    counts[ctx.half if d % 2 == 0 else 0] += 1  # x = -1 gives D = -(-1)^d
    return counts


def spectrum_bruteforce(ctx: FieldCtx, d: int, workers=None) -> Spectrum:
    """Differential spectrum of x^d from one pass over the field.

    Table-backed fields use the Zech-log kernels, splitting the x-range over
    worker threads and summing the partial histograms.
    """
    _check_d(d)
    if ctx.has_tables:
        counts = _log_histogram(ctx, d, worker_count(workers))
    else:
        counts = solution_counts(ctx, d)
    return Spectrum.from_multiplicities(ctx.q, counts).check()


def uniformity_bruteforce(ctx: FieldCtx, ds, cap=None, workers=None) -> np.ndarray:
    """Differential uniformity of x^d for each d in ``ds`` (all >= 1).

    With ``cap`` set, any uniformity above it is reported as ``cap + 1``,
    which lets the compiled kernel stop early on each exponent.
    """
    ds = [int(d) for d in ds]
    for d in ds:
        _check_d(d)
    if not ctx.has_tables:
        out = np.array([solution_counts(ctx, d).max() for d in ds], dtype=np.int64)
        return out if cap is None else np.minimum(out, cap + 1)
    reduced = np.array([d % ctx.order for d in ds], dtype=np.int64)
    cap = -1 if cap is None else int(cap)
    chunks = max(1, min(worker_count(workers), len(ds) // 8))
    if chunks == 1:
        return kernels.exponent_deltas(ctx.zech, reduced, cap)
    parts = np.array_split(reduced, chunks)
    with ThreadPoolExecutor(chunks) as pool:
        return np.concatenate(list(pool.map(lambda part: kernels.exponent_deltas(ctx.zech, part, cap),
                                            parts)))


@dataclass(frozen=True)
class DerivativeImageAnalysis:
    images: dict  # (i, j) -> frozenset of b
    multiplicities: dict  # (i, j) -> {b: |U_ij(b)|}
    boundary: tuple  # (D(0), D(-1))

    @property
    def S1(self):
        return self.images[(0, 0)] | self.images[(1, 1)]

    @property
    def S2(self):
        return self.images[(0, 1)] | self.images[(1, 0)]

    def U(self, i, j, b):
        return self.multiplicities[(i, j)].get(b, 0)

    def count(self, b):
        """N(1, b) reassembled from the quadrants and the two boundary points."""
        return sum(self.U(i, j, b) for i, j in QUADRANTS) + self.boundary.count(b)


def restricted_images(ctx: FieldCtx, d: int, partition: CyclotomicPartition) -> DerivativeImageAnalysis:
    images, mults = {}, {}
    for ij in QUADRANTS:
        vals = derivative_values(ctx, d, partition.e_sets[ij])
        bs, cs = np.unique(vals, return_counts=True)
        mults[ij] = dict(zip(bs.tolist(), cs.tolist()))
        images[ij] = frozenset(mults[ij])
    boundary = (derivative(ctx, d, 0), derivative(ctx, d, ctx.neg_one))
    return DerivativeImageAnalysis(images, mults, boundary)


@dataclass(frozen=True)
class HSolutionCounts:
    lam: tuple  # solutions in E_00 of h_i(x) = b^(-(p^k+1)/2), i = 1..4
    chi: tuple  # the same in E_11

    @property
    def lam_sum(self):
        return sum(self.lam)

    @property
    def chi_sum(self):
        return sum(self.chi)


def _h_values(ctx, k, xs):
    s = (ctx.p**k + 1) // 2
    A = ctx.vpow(ctx.vsucc(xs), s)
    B = ctx.vpow(xs, s)
    return (ctx.vadd(A, B), ctx.vsub(A, B), ctx.vsub(B, A), ctx.vneg(ctx.vadd(A, B)))


def _h_histograms(ctx, k, partition):
    thm2_regime(ctx.p, ctx.n, k)
    return {ij: [np.bincount(h, minlength=ctx.q) for h in _h_values(ctx, k, partition.e_sets[ij])]
            for ij in ((0, 0), (1, 1))}


def _h_target(ctx, k, b):
    return ctx.pow(b, -((ctx.p**k + 1) // 2))


def h_solution_counts(ctx: FieldCtx, k: int, b: int, partition: CyclotomicPartition) -> HSolutionCounts:
    if b == 0:
        raise ZeroInverse("b must be nonzero")
    hist = _h_histograms(ctx, k, partition)
    c = _h_target(ctx, k, b)
    return HSolutionCounts(tuple(int(h[c]) for h in hist[(0, 0)]),
                           tuple(int(h[c]) for h in hist[(1, 1)]))


def verify_lemma11(ctx: FieldCtx, k: int, partition: CyclotomicPartition) -> dict:
    """Check the h-count decomposition of N(1, b) for every nonzero b.

    For b a square the four E_00 counts must add up to N(1, b), for b a
    nonsquare the four E_11 counts; b = 1 and b = -1 each get one extra
    solution from the boundary points.  Returns {b: passed}.
    """
    thm2_regime(ctx.p, ctx.n, k)
    d = ExponentParams.thm2(ctx.p, ctx.n, k).d
    hist = _h_histograms(ctx, k, partition)
    lam_tot = sum(hist[(0, 0)])
    chi_tot = sum(hist[(1, 1)])
    N = solution_counts(ctx, d)
    report = {}
    for b in range(1, ctx.q):
        c = _h_target(ctx, k, b)
        predicted = int(lam_tot[c]) if partition.class_of[b] == 0 else int(chi_tot[c])
        if b in (1, ctx.neg_one):
            predicted += 1
        report[b] = predicted == int(N[b])
    return report
