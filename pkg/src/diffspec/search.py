"""Exhaustive scan of exponents d for low differential uniformity."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .derivative import Spectrum, spectrum_bruteforce, uniformity_bruteforce
from .errors import ParameterError, SearchBoundExceeded
from .field import FieldCtx

DEFAULT_SEARCH_BOUND = 10**5
ORBIT_SAMPLE = 3  # results whose whole orbit is re-checked when deduplicating


@dataclass(frozen=True)
class SearchResult:
    d: int
    delta: int
    spectrum: Spectrum
    canonical: int  # smallest member of {d * p^i mod (q - 1)}


@dataclass
class SearchOutcome:
    results: list
    scanned: int
    # exponents whose identified partner (orbit member or inverse) had a different spectrum
    violations: list


def frobenius_canonical(ds, p: int, n: int) -> np.ndarray:
    ds = np.asarray(ds, dtype=np.int64)
    o = p**n - 1
    best = ds % o
    cur = best.copy()
    for _ in range(n - 1):
        cur = cur * p % o
        np.minimum(best, cur, out=best)
    return best


def orbit(d: int, p: int, n: int) -> list:
    o = p**n - 1
    return sorted({d * p**i % o for i in range(n)})


def search_exponents(ctx: FieldCtx, max_delta: int, dedup: bool = False,
                     inverse: bool = False, bound: int = DEFAULT_SEARCH_BOUND,
                     workers=None) -> SearchOutcome:
    """All d in [2, q-2] with uniformity <= max_delta, sorted by (delta, canonical, d).

    ``dedup`` keeps the smallest d of each Frobenius orbit.  ``inverse``
    additionally merges the orbit of a permutation exponent with that of its
    inverse modulo q - 1; every merge that reaches the output is confirmed by
    computing the partner's uniformity.
    """
    q, p, n, o = ctx.q, ctx.p, ctx.n, ctx.q - 1
    if q > bound:
        raise SearchBoundExceeded(f"q = {q} exceeds the search bound {bound}")
    if max_delta < 1:
        raise ParameterError("max_delta must be >= 1")
    ds = np.arange(2, q - 1, dtype=np.int64)
    canon = frobenius_canonical(ds, p, n)
    keys = canon.copy()
    if inverse:
        for i, d in enumerate(ds.tolist()):
            if math.gcd(d, o) == 1:
                keys[i] = min(keys[i], frobenius_canonical([pow(d, -1, o)], p, n)[0])
    if dedup or inverse:
        _, first = np.unique(keys, return_index=True)
        ds = ds[np.sort(first)]
    deltas = uniformity_bruteforce(ctx, ds, cap=max_delta, workers=workers)
    hits = ds[deltas <= max_delta].tolist()

    results, violations = [], []
    for d in hits:
        spec = spectrum_bruteforce(ctx, d, workers)
        results.append(SearchResult(d, spec.delta, spec, int(frobenius_canonical([d], p, n)[0])))
    results.sort(key=lambda r: (r.delta, r.canonical, r.d))

    if dedup or inverse:
        for r in results[:ORBIT_SAMPLE]:
            for m in orbit(r.d, p, n):
                if m != r.d and spectrum_bruteforce(ctx, m, workers).omega != r.spectrum.omega:
                    violations.append((r.d, m, "frobenius"))
    if inverse:
        for r in results:
            if math.gcd(r.d, o) != 1:
                continue
            inv = pow(r.d, -1, o)
            if inv != 1 and int(uniformity_bruteforce(ctx, [inv])[0]) != r.delta:
                violations.append((r.d, inv, "inverse"))
    return SearchOutcome(results, len(ds), violations)
