"""Closed-form spectra, bounds and image-set predictions as functions of (p, n, k).

Nothing here touches a field: every value is integer arithmetic on p, n, k,
so the results can be checked against the exhaustive counts in
:mod:`diffspec.derivative`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .derivative import DerivativeImageAnalysis, ExponentParams, Spectrum, thm2_regime
from .errors import InconsistentClosedForm, ParameterError

QUADRANT_NAMES = {(0, 0): "I00", (0, 1): "I01", (1, 0): "I10", (1, 1): "I11"}


def _odd_prime_check(p):
    if p < 3 or p % 2 == 0:
        raise ParameterError(f"p must be an odd prime, got {p}")


def helleseth_bound(p: int, n: int, k: int) -> int:
    """Known upper bound gcd((p^k - 1)/2, p^(2n) - 1) on the uniformity of x^((p^k+1)/2)."""
    _odd_prime_check(p)
    return math.gcd((p**k - 1) // 2, p ** (2 * n) - 1)


def exponent_thm1(p: int, n: int, k: int) -> int:
    return ExponentParams.thm1(p, n, k).d


def exponent_thm2(p: int, n: int, k: int) -> int:
    """(p^n + 1)/(p^k + 1) + (p^n - 1)/2, defined for p = 3 mod 4, odd n, k | n."""
    return ExponentParams.thm2(p, n, k).d


class _Omega:
    """Accumulates formula rows; rows landing on one index are summed."""

    def __init__(self):
        self.rows = {}

    def add(self, i, count):
        if count < 0:
            raise InconsistentClosedForm(f"negative count {count} at index {i}")
        self.rows[i] = self.rows.get(i, 0) + count


def _finish(q, acc: _Omega, omega0: int) -> Spectrum:
    complement = q - sum(c for i, c in acc.rows.items() if i >= 1)
    if complement != omega0:
        raise InconsistentClosedForm(f"omega_0: stated {omega0}, complement {complement}")
    acc.add(0, omega0)
    return Spectrum(q, acc.rows).check()


def spectrum_thm1(p: int, n: int, k: int) -> Spectrum:
    """Spectrum of x^((p^k+1)/2) over F_{p^n}, split on k/e and p^e mod 4 (e = gcd(n, k))."""
    _odd_prime_check(p)
    if n < 1 or k < 1:
        raise ParameterError("n and k must be positive")
    q = p**n
    e = math.gcd(n, k)
    pe = p**e
    acc = _Omega()
    if (k // e) % 2 == 1:
        if pe % 4 == 3:
            acc.add((pe + 1) // 4, 2)
            acc.add((pe - 1) // 2, (q - pe) // (pe - 1))
            acc.add(1, (q - 1) // 2)
            omega0 = (q - 3) // 2 - (q - pe) // (pe - 1)
        else:
            acc.add((pe + 3) // 4, 1)
            acc.add((pe - 1) // 4, 1)
            acc.add((pe - 1) // 2, (q - pe) // (pe - 1))
            acc.add(2, (q - 1) // 4)
            omega0 = (q - 1) * (3 * pe - 7) // (4 * (pe - 1))
    else:
        acc.add(pe, 1)
        acc.add(pe - 1, (q - pe) // (2 * (pe - 1)))
        acc.add(pe + 1, (q - pe) // (2 * (pe + 1)))
        omega0 = q - (q * pe - 1) // (pe * pe - 1)
    return _finish(q, acc, omega0)


def spectrum_thm2(p: int, n: int, k: int) -> Spectrum:
    """Spectrum of x^((p^n+1)/(p^k+1) + (p^n-1)/2) for p = 3 mod 4, odd n, k | n."""
    thm2_regime(p, n, k)
    q, pk = p**n, p**k
    top = (q - pk) // (pk - 1)
    acc = _Omega()
    acc.add((pk + 1) // 4, 2)
    acc.add((pk + 1) // 2, top)
    acc.add(1, (q - 1) // 2 - top)
    return _finish(q, acc, (q - 3) // 2)


def uniformity_cor1(p: int, n: int, k: int) -> int:
    """Stated uniformity of x^((p^k+1)/2): (p^e - 1)/2 for odd k/e, p^e + 1 for even k/e.

    For n = e and p^e = 3 mod 4 the index (p^e - 1)/2 carries no b, so the
    true uniformity is smaller; read it from :func:`spectrum_thm1` instead.
    """
    _odd_prime_check(p)
    e = math.gcd(n, k)
    return (p**e - 1) // 2 if (k // e) % 2 == 1 else p**e + 1


@dataclass(frozen=True)
class StatedUniformity:
    value: int
    degenerate: bool  # the stated value exceeds the spectrum's true maximum


def uniformity_cor2(p: int, n: int, k: int) -> StatedUniformity:
    """(p^k + 1)/2 for the second family; degenerate when k = n (that index is empty)."""
    stated = (p**k + 1) // 2
    return StatedUniformity(stated, spectrum_thm2(p, n, k).delta != stated)


# -- image-set predictions ------------------------------------------------


@dataclass(frozen=True)
class QuadrantExpectation:
    """Predicted image of D restricted to one quadrant.

    ``special`` maps a sign (+1 for b = 1, -1 for b = -1) to the multiplicity
    assigned to that b; every other b in the image has multiplicity
    ``generic``.  ``stated_size`` is the image size as the cardinality
    formula gives it.  When that formula counts the special values as members
    (``counts_special``) a special b with multiplicity 0 is counted although
    it cannot be in the image, and ``size`` discounts it.
    """

    stated_size: int
    generic: int
    special: dict = field(default_factory=dict)
    counts_special: bool = True

    @property
    def absent(self) -> frozenset:
        return frozenset(s for s, m in self.special.items() if m == 0)

    @property
    def size(self) -> int:
        return self.stated_size - (len(self.absent) if self.counts_special else 0)

    def mismatches(self, multiplicities: dict, neg_one: int, literal=False) -> list:
        """Differences between an enumerated {b: |U(b)|} map and this prediction."""
        out = []
        want = self.stated_size if literal else self.size
        if len(multiplicities) != want:
            out.append(f"|I| = {len(multiplicities)}, expected {want}")
        sign_of = {1: 1, neg_one: -1}
        for s, m in self.special.items():
            b = 1 if s == 1 else neg_one
            got = multiplicities.get(b, 0)
            if got != m:
                out.append(f"|U({'+1' if s == 1 else '-1'})| = {got}, expected {m}")
        for b, m in multiplicities.items():
            if sign_of.get(b) in self.special:
                continue
            if m != self.generic:
                out.append(f"|U(b)| = {m} for generic b = {b}, expected {self.generic}")
                break
        return out


def expected_image_cardinalities(p: int, n: int, k: int) -> dict:
    """Image sizes and multiplicity tables of D on each quadrant, d = (p^k+1)/2."""
    _odd_prime_check(p)
    q = p**n
    e = math.gcd(n, k)
    pe = p**e
    ne_odd = (n // e) % 2 == 1
    ke_odd = (k // e) % 2 == 1
    q1 = q % 4 == 1
    out = {}

    if ne_odd:
        out[(0, 0)] = QuadrantExpectation(
            (q + pe - 2) // (2 * (pe - 1)), (pe - 1) // 2,
            {1: (pe - 5) // 4 if q1 else (pe - 3) // 4})
    elif pe % 4 == 3:
        out[(0, 0)] = QuadrantExpectation(
            (q + 2 * pe - 3) // (2 * (pe - 1)), (pe - 1) // 2,
            {1: (pe - 3) // 4, -1: (pe - 3) // 4})
    else:
        out[(0, 0)] = QuadrantExpectation(
            (q + 2 * pe - 3) // (2 * (pe - 1)), (pe - 1) // 2,
            {1: (pe - 5) // 4, -1: (pe - 1) // 4})

    if ne_odd:
        sign = -1 if ke_odd else 1
        out[(1, 1)] = QuadrantExpectation(
            (q + pe - 2) // (2 * (pe - 1)), (pe - 1) // 2,
            {sign: (pe - 1) // 4 if q1 else (pe - 3) // 4})
    else:
        out[(1, 1)] = QuadrantExpectation((q - 1) // (2 * (pe - 1)), (pe - 1) // 2)

    if ke_odd:
        # D is injective here, so |I_ij| = |E_ij|, and that count never included b = 1
        out[(1, 0)] = QuadrantExpectation(
            (q - 1) // 4 if q1 else (q - 3) // 4, 1, {1: 0}, counts_special=False)
        out[(0, 1)] = QuadrantExpectation(
            (q - 1) // 4 if q1 else (q + 1) // 4, 1, {1: 0}, counts_special=False)
    else:
        size = (q + pe + 2) // (2 * (pe + 1))
        out[(1, 0)] = QuadrantExpectation(
            size, (pe + 1) // 2, {1: (pe - 1) // 4 if q1 else (pe - 3) // 4})
        out[(0, 1)] = QuadrantExpectation(
            size, (pe + 1) // 2, {1: (pe - 1) // 4 if q1 else (pe + 1) // 4})
    return out


class RelationKind(enum.Enum):
    EQUAL = "equal"
    DISJOINT = "disjoint"
    MEET_ONE = "meet_one"  # intersection is exactly {1}


@dataclass(frozen=True)
class Relation:
    left: str
    right: str
    kind: RelationKind
    # signs of distinguished b that the multiplicity tables rule out of each side
    absent_left: frozenset = frozenset()
    absent_right: frozenset = frozenset()

    def holds(self, analysis: DerivativeImageAnalysis, neg_one: int) -> bool:
        A, B = _named_set(analysis, self.left), _named_set(analysis, self.right)
        to_elem = {1: 1, -1: neg_one}
        za = {to_elem[s] for s in self.absent_left}
        zb = {to_elem[s] for s in self.absent_right}
        if A & za or B & zb:
            return False
        if self.kind is RelationKind.DISJOINT:
            return not (A & B)
        if self.kind is RelationKind.EQUAL:
            z = za | zb
            return A - z == B - z
        expected = {1} - za - zb
        return (A & B) == expected

    def __str__(self):
        sym = {RelationKind.EQUAL: "=", RelationKind.DISJOINT: "disjoint from",
               RelationKind.MEET_ONE: "meets in {1}"}[self.kind]
        return f"{self.left} {sym} {self.right}"


def _named_set(analysis, name):
    if name == "S1":
        return analysis.S1
    if name == "S2":
        return analysis.S2
    return analysis.images[(int(name[1]), int(name[2]))]


def expected_image_relations(p: int, n: int, k: int, literal: bool = False) -> list:
    """Predicted relations between the quadrant images for d = (p^k+1)/2.

    (I00, I11) are equal for even k/e and disjoint otherwise; (I10, I01) are
    disjoint for odd k/e with p^e = 3 mod 4 and equal otherwise; S1 = I00 u I11
    and S2 = I01 u I10 are disjoint for odd k/e and meet in {1} for even k/e.

    Unless ``literal`` is set, a distinguished b whose predicted multiplicity
    is 0 on one side is excluded from the comparison and required to be
    absent from that side.
    """
    _odd_prime_check(p)
    e = math.gcd(n, k)
    ke_odd = (k // e) % 2 == 1
    pe3 = p**e % 4 == 3
    exp = expected_image_cardinalities(p, n, k)

    def z(*quads):
        if literal:
            return frozenset()
        sets = [exp[qd].absent for qd in quads]
        return frozenset.intersection(*sets)

    rel = [
        Relation("I00", "I11", RelationKind.DISJOINT if ke_odd else RelationKind.EQUAL,
                 z((0, 0)), z((1, 1))),
        Relation("I10", "I01",
                 RelationKind.DISJOINT if (ke_odd and pe3) else RelationKind.EQUAL,
                 z((1, 0)), z((0, 1))),
        Relation("S1", "S2", RelationKind.DISJOINT if ke_odd else RelationKind.MEET_ONE,
                 z((0, 0), (1, 1)), z((1, 0), (0, 1))),
    ]
    return rel
