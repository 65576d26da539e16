"""Quadratic cyclotomy: squares/nonsquares, the quadrants E_ij, and counting lemmas.

``E_ij`` is the set of ``x != 0, -1`` with ``x`` in class ``i`` and ``x + 1``
in class ``j`` (class 0 = squares, class 1 = nonsquares).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import MuOutOfRange, ParameterError, RangeEmpty
from .field import ExtFieldCtx, FieldCtx

QUADRANTS = ((0, 0), (0, 1), (1, 0), (1, 1))

# beyond this the internal brute-force cross-checks are skipped
SCAN_CHECK_LIMIT = 10**6
INT64_LIMIT = 1 << 63


@dataclass(frozen=True, eq=False)
class CyclotomicPartition:
    ctx: FieldCtx
    class_of: np.ndarray  # class index per element, -1 at zero
    e_sets: dict  # (i, j) -> sorted int64 array
    numbers: dict  # (i, j) -> |E_ij|
    _frozen: dict = field(default_factory=dict, repr=False)

    def members(self, i, j) -> frozenset:
        if (i, j) not in self._frozen:
            self._frozen[(i, j)] = frozenset(self.e_sets[(i, j)].tolist())
        return self._frozen[(i, j)]

    def quadrant_of(self, x: int):
        """(i, j) for x in some E_ij, or None for x in {0, -1}."""
        y = self.ctx.add(x, 1)
        if x == 0 or y == 0:
            return None
        return int(self.class_of[x]), int(self.class_of[y])


def _classes(ctx: FieldCtx) -> np.ndarray:
    if ctx.has_tables:
        cls = ctx.log % 2
        cls[0] = -1
        return cls
    cls = np.array([-1] + [0 if ctx.is_square(x) else 1 for x in range(1, ctx.q)],
                   dtype=np.int64)
    return cls


def build_partition(ctx: FieldCtx) -> CyclotomicPartition:
    cls = _classes(ctx)
    cls.setflags(write=False)
    xs = np.arange(1, ctx.q, dtype=np.int64)
    ys = ctx.vsucc(xs)
    keep = ys != 0
    xs, ys = xs[keep], ys[keep]
    ci, cj = cls[xs], cls[ys]
    e_sets, numbers = {}, {}
    for i, j in QUADRANTS:
        members = xs[(ci == i) & (cj == j)]
        members.setflags(write=False)
        e_sets[(i, j)] = members
        numbers[(i, j)] = len(members)
    return CyclotomicPartition(ctx, cls, e_sets, numbers)


def cyclotomic_number_closed(p: int, n: int, i: int, j: int) -> int:
    """The cyclotomic number (i, j) of order 2 over F_{p^n}."""
    if p % 2 == 0:
        raise ParameterError("p must be odd")
    q = p**n
    if q % 4 == 1:
        return (q - 5) // 4 if (i, j) == (0, 0) else (q - 1) // 4
    return (q + 1) // 4 if (i, j) == (0, 1) else (q - 3) // 4


def index_range(q: int, i: int, j: int) -> range:
    """Parameter range of t for the quadrant E_ij (both residues of q mod 4)."""
    one = q % 4 == 1
    if (i, j) == (0, 0):
        return range(1, (q - 5) // 4 + 1) if one else range(1, (q - 3) // 4 + 1)
    if (i, j) == (1, 1):
        return range(0, (q - 5) // 4 + 1) if one else range(1, (q - 3) // 4 + 1)
    if (i, j) == (1, 0):
        return range(1, (q - 1) // 4 + 1) if one else range(1, (q - 3) // 4 + 1)
    if (i, j) == (0, 1):
        return range(0, (q - 5) // 4 + 1) if one else range(0, (q - 3) // 4 + 1)
    raise ParameterError(f"no quadrant ({i}, {j})")


@dataclass(frozen=True)
class Parametrization:
    quadrant: tuple
    t: np.ndarray
    x: np.ndarray
    gamma: int | None = None  # nonsquare used for E_11

    def __iter__(self):
        return zip(self.t.tolist(), self.x.tolist())

    def __len__(self):
        return len(self.t)


def parametrize_Eij(ext: ExtFieldCtx, i: int, j: int) -> Parametrization:
    """Generate E_ij from its closed-form parametrization.

    E_00 and E_11 use powers of alpha in the base field (E_11 with gamma = -1
    when q = 3 mod 4 and gamma = -alpha otherwise).  E_10 and E_01 use
    delta = beta^((q-1)/2) in the quadratic extension; their images must fall
    back into the base field.
    """
    F = ext.base
    q = F.q
    ts = np.array(index_range(q, i, j), dtype=np.int64)
    if len(ts) == 0:
        raise RangeEmpty(f"E_{i}{j} has no parameters over F_{q}")
    inv2 = F.inv(2 % F.p)
    gamma = None
    if (i, j) in ((0, 0), (1, 1)):
        a = F.antilog[ts % F.order]
        a_inv = F.antilog[(-ts) % F.order]
        if (i, j) == (0, 0):
            half = F.vmul(F.vsub(a, a_inv), inv2)
            x = F.vmul(half, half)
        else:
            gamma = F.neg_one if q % 4 == 3 else F.neg(F.alpha)
            half = F.vmul(F.vsub(a, F.vmul(F.inv(gamma), a_inv)), inv2)
            x = F.vmul(gamma, F.vmul(half, half))
        return Parametrization((i, j), ts, x, gamma)
    period = 2 * (q + 1)  # multiplicative order of delta
    m = 2 * ts if (i, j) == (1, 0) else 2 * ts + 1
    pw = ext.powers(ext.delta, period)
    w, w_inv = pw[m % period], pw[(-m) % period]
    half = ext.vmul(ext.vsub(w, w_inv), ext.embed(inv2))
    x = ext.vmul(half, half)
    if np.any(x >= q):
        raise AssertionError(f"E_{i}{j} parametrization left the base field")
    return Parametrization((i, j), ts, x)


def count_residue_pairs_scan(N: int, v: int, mu: int) -> int:
    return sum(1 for a in range(1, N + 1) if a % v in (mu % v, -mu % v))


def residue_pairs_closed(N, v: int, mu):
    """Case-split count of a in [1, N] with a = +-mu mod v; N and mu broadcast as arrays."""
    qt, r = np.divmod(np.asarray(N, dtype=np.int64), v)
    mu = np.asarray(mu, dtype=np.int64)
    return np.select(
        [mu == 0, 2 * mu == v, (v - r <= mu) & (mu <= r),
         (mu >= np.maximum(v - r, r + 1)) | (mu <= np.minimum(r, v - r - 1))],
        [qt, np.where(mu <= r, qt + 1, qt), 2 * (qt + 1), 2 * qt + 1],
        2 * qt)  # remaining case: r < mu < v - r


def count_residue_pairs(N: int, v: int, mu: int, check: bool = True) -> int:
    """How many a in [1, N] satisfy a = +mu or a = -mu modulo v.

    Evaluated by the case split on mu against q = N // v and r = N % v; with
    ``check`` the result is compared with a direct scan when N <= 10^6.
    """
    if v < 1 or N < 1:
        raise ParameterError("N and v must be positive")
    if mu < 0 or 2 * mu > v:
        raise MuOutOfRange(f"mu = {mu} outside [0, {v}/2]")
    result = int(residue_pairs_closed(N, v, mu))
    if check and N <= SCAN_CHECK_LIMIT:
        direct = count_residue_pairs_scan(N, v, mu)
        if direct != result:
            raise AssertionError(f"residue count mismatch at N={N}, v={v}, mu={mu}")
    return result


def gcd_power_forms(p: int, a: int, b: int, check: bool = True) -> int:
    """gcd(p^a + 1, p^b - 1) for odd p.

    Equals p^l + 1 when a/l is odd and b/l even (l = gcd(a, b)), else 2.  The
    direct gcd is compared when ``check`` is set and both powers fit in 64 bits.
    """
    if p % 2 == 0 or p < 3:
        raise ParameterError("p must be an odd prime")
    if a < 1 or b < 1:
        raise ParameterError("exponents must be positive")
    l = math.gcd(a, b)
    result = p**l + 1 if (a // l) % 2 == 1 and (b // l) % 2 == 0 else 2
    if check and p ** max(a, b) < INT64_LIMIT:
        direct = math.gcd(p**a + 1, p**b - 1)
        if direct != result:
            raise AssertionError(f"gcd identity fails at p={p}, a={a}, b={b}")
    return result
