"""Finite fields F_{p^n} of odd characteristic with exact arithmetic.

Elements are plain ``int`` values in ``[0, q)``: the coefficient vector
``(c0, ..., c_{n-1})`` of the polynomial-basis representation is stored as
``c0 + c1*p + ... + c_{n-1}*p^(n-1)``.  Zero is ``0`` and one is ``1``.

Two representations share this encoding and agree bit-for-bit:

* ``Repr.LOG_TABLE``: log/antilog (and Zech) tables over a primitive element,
  built with numpy for ``q`` up to the table bound.
* ``Repr.POLY``: schoolbook polynomial arithmetic modulo the field modulus,
  with square-and-multiply exponentiation.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import poly
from .errors import (
    EvenCharacteristic,
    LogOfZero,
    NotPrime,
    Overflow,
    ParameterError,
    TableBoundExceeded,
    ZeroInput,
    ZeroInverse,
)

FieldElement = int

DEFAULT_TABLE_BOUND = 1 << 24
# exponent products (q-1)*(q-1) must stay inside int64
MAX_Q = math.isqrt((1 << 63) - 1)


class Repr(enum.Enum):
    LOG_TABLE = "log_table"
    POLY = "poly"


@dataclass(frozen=True)
class FieldParams:
    p: int
    n: int
    modulus: tuple[int, ...]  # monic, constant-first, length n+1
    q: int


def _check_characteristic(p, n):
    if not isinstance(p, int) or not isinstance(n, int):
        raise ParameterError("p and n must be integers")
    if n < 1:
        raise ParameterError(f"extension degree must be >= 1, got {n}")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not poly.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    q = p**n
    if q > MAX_Q:
        raise Overflow(f"{p}^{n} = {q} exceeds the supported field size {MAX_Q}")
    return q


class FieldCtx:
    """An immutable F_{p^n} together with its primitive element ``alpha``."""

    def __init__(self, params: FieldParams, alpha: int, tables=None):
        self.params = params
        self.p = params.p
        self.n = params.n
        self.q = params.q
        self.order = self.q - 1
        self.half = self.order // 2
        self.alpha = alpha
        self._mod = list(params.modulus)
        self._pw = [self.p**i for i in range(self.n)]
        if tables is None:
            self.repr = Repr.POLY
            self.log = self.antilog = None
        else:
            self.repr = Repr.LOG_TABLE
            self.antilog, self.log = tables
            for arr in (self.antilog, self.log):
                arr.setflags(write=False)
        self.neg_one = self.p - 1

    def __repr__(self):
        return (f"FieldCtx(p={self.p}, n={self.n}, modulus={self.format_poly(self._mod)}, "
                f"alpha={self.format(self.alpha)}, repr={self.repr.value})")

    @property
    def has_tables(self):
        return self.repr is Repr.LOG_TABLE

    # -- encoding ---------------------------------------------------------

    def elem(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ParameterError(f"too many coefficients for degree {self.n}")
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pw))

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def format(self, x: int) -> str:
        return self.format_poly(list(self.coeffs(x)))

    @staticmethod
    def format_poly(c) -> str:
        terms = []
        for i in range(len(c) - 1, -1, -1):
            if c[i] == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c[i]) if (c[i] != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    def elements(self):
        return range(self.q)

    # -- scalar arithmetic -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        out, w, p = 0, 1, self.p
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        out, w, p = 0, 1, self.p
        while a:
            a, da = divmod(a, p)
            out += (-da % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % self.order])
        return self._poly_mul(a, b)

    def _poly_mul(self, a, b):
        return self.elem(poly.mulmod(list(self.coeffs(a)), list(self.coeffs(b)), self._mod, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        if self.has_tables:
            return int(self.antilog[(-int(self.log[a])) % self.order])
        return self._poly_pow(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroInverse("zero raised to a negative power")
        if self.has_tables:
            return int(self.antilog[(int(self.log[a]) * e) % self.order])
        if e < 0:
            a, e = self.inv(a), -e
        return self._poly_pow(a, e % self.order)

    def _poly_pow(self, a, e):
        return self.elem(poly.powmod(list(self.coeffs(a)), e, self._mod, self.p))

    def arith(self, op: str, *operands: int) -> int:
        """Dispatch by name: add, sub, mul, inv, pow."""
        return getattr(self, op)(*operands)

    def dlog(self, x: int) -> int:
        if x == 0:
            raise LogOfZero("discrete log of zero")
        if self.has_tables:
            return int(self.log[x])
        return self._bsgs(x)

    def _bsgs(self, x):
        m = math.isqrt(self.order) + 1
        baby = {}
        cur = 1
        for j in range(m):
            baby.setdefault(cur, j)
            cur = self.mul(cur, self.alpha)
        giant = self.pow(self.alpha, -m)
        cur = x
        for i in range(m + 1):
            if cur in baby:
                return (i * m + baby[cur]) % self.order
            cur = self.mul(cur, giant)
        raise AssertionError("alpha is not primitive")

    def is_square(self, x: int) -> bool:
        if x == 0:
            raise ZeroInput("quadratic character of zero")
        if self.has_tables:
            return int(self.log[x]) % 2 == 0
        return self.pow(x, self.half) == 1

    def antilog_of(self, i: int) -> int:
        return self.pow(self.alpha, i)

    # -- vectorized arithmetic (numpy int64 arrays) ------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        if self.n == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for w in self._pw:
            out += ((a // w + b // w) % p) * w
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if self.n == 1:
            return -a % p
        out = np.zeros(a.shape, dtype=np.int64)
        for w in self._pw:
            out += (-(a // w) % p) * w
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vsucc(self, a):
        """x + 1 for every entry; only the constant digit changes."""
        a = np.asarray(a, dtype=np.int64)
        return a + 1 - self.p * (a % self.p == self.p - 1)

    def vmul(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.antilog[(la + lb) % self.order]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e: int):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        out = self.antilog[(self.log[a] * (e % self.order)) % self.order]
        zero_val = 0 if e > 0 else 1
        if e < 0 and np.any(a == 0):
            raise ZeroInverse("zero raised to a negative power")
        return np.where(a == 0, zero_val, out)

    def vlog(self, a):
        self._need_tables()
        return self.log[np.asarray(a, dtype=np.int64)]

    def power_table(self, d: int):
        """x^d for every x in [0, q), with 0^d = 0 for d > 0."""
        if self.has_tables:
            return self.vpow(np.arange(self.q, dtype=np.int64), d)
        return np.array([self.pow(x, d) for x in range(self.q)], dtype=np.int64)

    def _need_tables(self):
        if not self.has_tables:
            raise TableBoundExceeded("operation needs log tables (field built in POLY mode)")

    @cached_property
    def zech(self):
        """zech[m] = log(1 + alpha^m), with -1 where 1 + alpha^m = 0."""
        self._need_tables()
        z = self.log[self.vsucc(self.antilog[: self.order])]
        z.setflags(write=False)
        return z


def _order_is_full(ctx_poly: FieldCtx, x: int, prime_factors) -> bool:
    return all(ctx_poly.pow(x, ctx_poly.order // r) != 1 for r in prime_factors)


def _mul_by_alpha_matrix(p, n, modulus, alpha_coeffs):
    cols = []
    for j in range(n):
        xj = [0] * j + [1]
        prod = poly.mulmod(list(alpha_coeffs), xj, modulus, p)
        cols.append(prod + [0] * (n - len(prod)))
    return np.array(cols, dtype=np.int64).T


def _build_tables(p, n, modulus, alpha_coeffs):
    q = p**n
    order = q - 1
    A = _mul_by_alpha_matrix(p, n, modulus, alpha_coeffs)
    V = np.zeros((n, order), dtype=np.int64)
    V[0, 0] = 1
    filled = 1
    M = A.copy()  # A^filled
    while filled < order:
        take = min(filled, order - filled)
        V[:, filled:filled + take] = (M @ V[:, :take]) % p
        filled += take
        if filled < order:
            M = (M @ M) % p
    weights = np.array([p**i for i in range(n)], dtype=np.int64)
    antilog = np.empty(q, dtype=np.int64)
    antilog[:order] = weights @ V
    antilog[order] = 1
    log = np.full(q, -1, dtype=np.int64)
    log[antilog[:order]] = np.arange(order, dtype=np.int64)
    if np.count_nonzero(log[1:] < 0):
        raise AssertionError("antilog table is not a permutation of F_q*")
    return antilog, log


def table_bound_from_env():
    raw = os.environ.get("DIFFSPEC_TABLE_BOUND")
    return int(raw) if raw else DEFAULT_TABLE_BOUND


def build_field(p: int, n: int, repr_hint: Repr | str | None = None,
                table_bound: int | None = None, cache_dir=None) -> FieldCtx:
    """Construct F_{p^n} deterministically.

    The modulus is the lexicographically first monic irreducible of degree
    ``n`` and ``alpha`` the first element, in constant-first coefficient
    order, of multiplicative order ``q-1``.  Tables are built when ``q`` is
    within ``table_bound`` unless ``repr_hint`` asks for ``POLY``.  With a
    ``cache_dir`` the antilog table is read from (or written to) the on-disk
    table cache.
    """
    q = _check_characteristic(p, n)
    if repr_hint is not None and not isinstance(repr_hint, Repr):
        repr_hint = Repr(repr_hint)
    bound = table_bound_from_env() if table_bound is None else table_bound
    if repr_hint is Repr.LOG_TABLE and q > bound:
        raise TableBoundExceeded(f"q = {q} exceeds the table bound {bound}")
    modulus = tuple(poly.first_irreducible(p, n))
    params = FieldParams(p, n, modulus, q)
    poly_ctx = FieldCtx(params, alpha=0)
    factors = list(poly.factorize(q - 1))
    alpha = None
    for coeffs in itertools.product(range(p), repeat=n):
        x = poly_ctx.elem(coeffs)
        if x and _order_is_full(poly_ctx, x, factors):
            alpha = x
            break
    assert alpha is not None
    want_tables = repr_hint is not Repr.POLY and q <= bound
    if not want_tables:
        return FieldCtx(params, alpha)
    tables = None
    if cache_dir is not None:
        from . import cache
        tables = cache.load(cache_dir, params, alpha)
    if tables is None:
        tables = _build_tables(p, n, list(modulus), poly_ctx.coeffs(alpha))
        if cache_dir is not None:
            from . import cache
            cache.save(cache_dir, params, alpha, tables[0])
    return FieldCtx(params, alpha, tables)


class ExtFieldCtx:
    """The quadratic extension F_{q^2} = F_q(lam) with lam^2 = gamma.

    ``gamma`` is the base field's primitive element (a nonsquare), so elements
    are pairs ``u + lam*v`` encoded as ``u + q*v``.  The subfield embedding is
    then the identity on codes below ``q``.  ``beta`` is the first primitive
    element of the big field with ``beta^(q+1) = alpha``; ``delta`` is
    ``beta^((q-1)/2)``.
    """

    def __init__(self, base: FieldCtx):
        if not base.has_tables:
            raise TableBoundExceeded("the quadratic extension needs a table-backed base field")
        self.base = base
        self.p = base.p
        self.n = 2 * base.n
        self.q = base.q * base.q
        self.order = self.q - 1
        self.gamma = base.alpha
        self.alpha_embed = base.q + 1
        self.beta = self._find_beta()
        self.delta = self.pow(self.beta, (base.q - 1) // 2)

    def __repr__(self):
        return f"ExtFieldCtx(base={self.base!r}, beta={self.split(self.beta)})"

    def split(self, z):
        return z % self.base.q, z // self.base.q

    def join(self, u, v):
        return u + self.base.q * v

    def embed(self, x: int) -> int:
        return x

    def in_subfield(self, z: int) -> bool:
        return z < self.base.q

    def project(self, z: int) -> int:
        if not self.in_subfield(z):
            raise ValueError("element does not lie in the base field")
        return z

    def add(self, a, b):
        F = self.base
        (u1, v1), (u2, v2) = self.split(a), self.split(b)
        return self.join(F.add(u1, u2), F.add(v1, v2))

    def neg(self, a):
        u, v = self.split(a)
        return self.join(self.base.neg(u), self.base.neg(v))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        F = self.base
        (u1, v1), (u2, v2) = self.split(a), self.split(b)
        u = F.add(F.mul(u1, u2), F.mul(self.gamma, F.mul(v1, v2)))
        v = F.add(F.mul(u1, v2), F.mul(u2, v1))
        return self.join(u, v)

    def norm(self, a):
        F = self.base
        u, v = self.split(a)
        return F.sub(F.mul(u, u), F.mul(self.gamma, F.mul(v, v)))

    def conj(self, a):
        u, v = self.split(a)
        return self.join(u, self.base.neg(v))

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        nrm_inv = self.base.inv(self.norm(a))
        u, v = self.split(self.conj(a))
        return self.join(self.base.mul(u, nrm_inv), self.base.mul(v, nrm_inv))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    # vectorized counterparts over numpy code arrays
    def vmul(self, a, b):
        F = self.base
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        u1, v1 = a % F.q, a // F.q
        u2, v2 = b % F.q, b // F.q
        u = F.vadd(F.vmul(u1, u2), F.vmul(self.gamma, F.vmul(v1, v2)))
        v = F.vadd(F.vmul(u1, v2), F.vmul(u2, v1))
        return u + F.q * v

    def vadd(self, a, b):
        F = self.base
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return F.vadd(a % F.q, b % F.q) + F.q * F.vadd(a // F.q, b // F.q)

    def vneg(self, a):
        F = self.base
        a = np.asarray(a, dtype=np.int64)
        return F.vneg(a % F.q) + F.q * F.vneg(a // F.q)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def powers(self, z, count):
        """[z^0, z^1, ..., z^(count-1)] by doubling."""
        out = np.empty(max(count, 1), dtype=np.int64)
        out[0] = 1
        filled = 1
        while filled < count:
            take = min(filled, count - filled)
            out[filled:filled + take] = self.vmul(out[:take], self.pow(z, filled))
            filled += take
        return out[:count]

    def _find_beta(self):
        F = self.base
        factors = list(poly.factorize(self.order))
        squares = F.vmul(np.arange(F.q), np.arange(F.q))
        for v in range(F.q):
            target = F.add(F.alpha, F.mul(self.gamma, F.mul(v, v)))
            for u in np.flatnonzero(squares == target):
                z = self.join(int(u), v)
                if all(self.pow(z, self.order // r) != 1 for r in factors):
                    return z
        raise AssertionError("no primitive element with norm alpha")


def build_quadratic_extension(ctx: FieldCtx, table_bound: int | None = None) -> ExtFieldCtx:
    bound = table_bound_from_env() if table_bound is None else table_bound
    if ctx.q * ctx.q > bound:
        raise TableBoundExceeded(f"p^(2n) = {ctx.q * ctx.q} exceeds the table bound {bound}")
    if not ctx.has_tables:
        ctx = build_field(ctx.p, ctx.n, Repr.LOG_TABLE, table_bound=max(bound, ctx.q))
    return ExtFieldCtx(ctx)
