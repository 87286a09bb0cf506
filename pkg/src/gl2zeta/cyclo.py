"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as exact rational combinations of powers of a fixed
primitive n-th root of unity.  Equality, zero tests and rationality tests
go through the canonical representative modulo the n-th cyclotomic
polynomial, so expressions that differ by a vanishing sum of roots of
unity compare equal.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials, constant coefficient first.
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        assert c % lead == 0
        q = c // lead
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta_n^k, 0 <= k < n, in the basis 1..zeta^(phi(n)-1)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[d - 1]
        cur = [0] + cur[: d - 1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CycNumber:
    """An element of Q(zeta_n)."""

    __slots__ = ("n", "_terms", "_canon_cache")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("conductor must be positive")
        self.n = n
        clean: dict[int, object] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    k %= n
                    nc = clean.get(k, 0) + c
                    if nc:
                        clean[k] = _norm_coeff(nc)
                    elif k in clean:
                        del clean[k]
        self._terms = clean
        self._canon_cache = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(n: int) -> "CycNumber":
        return CycNumber(n)

    @staticmethod
    def one(n: int) -> "CycNumber":
        return CycNumber(n, {0: 1})

    @staticmethod
    def from_rational(n: int, value) -> "CycNumber":
        return CycNumber(n, {0: Fraction(value)})

    @staticmethod
    def from_monomials(n: int, pairs) -> "CycNumber":
        acc: dict[int, object] = {}
        for coef, power in pairs:
            if not coef:
                continue
            power %= n
            acc[power] = acc.get(power, 0) + coef
        return CycNumber(n, acc)

    # -- ring operations ----------------------------------------------

    def _check(self, other: "CycNumber") -> None:
        if self.n != other.n:
            raise ValueError(
                f"conductor mismatch: {self.n} != {other.n}; lift explicitly first"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber(self.n, {0: other})
        if not isinstance(other, CycNumber):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return CycNumber(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber(self.n, {0: other})
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycNumber(self.n)
            return CycNumber(self.n, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, CycNumber):
            return NotImplemented
        self._check(other)
        acc: dict[int, object] = {}
        n = self.n
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                if k >= n:
                    k -= n
                acc[k] = acc.get(k, 0) + c1 * c2
        return CycNumber(n, acc)

    __rmul__ = __mul__

    def conj(self) -> "CycNumber":
        """Complex conjugate (zeta -> zeta^(-1))."""
        return CycNumber(self.n, {-k % self.n: c for k, c in self._terms.items()})

    def lift(self, m: int) -> "CycNumber":
        """Reinterpret in Q(zeta_m) where n divides m."""
        if m % self.n != 0:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        step = m // self.n
        return CycNumber(m, {k * step: c for k, c in self._terms.items()})

    # -- canonical form and predicates ---------------------------------

    def canonical_coeffs(self) -> tuple:
        """Coordinates in the basis 1..zeta^(phi(n)-1), reduced mod Phi_n."""
        if self._canon_cache is None:
            table = _power_table(self.n)
            d = len(table[0])
            vec = [0] * d
            for k, c in self._terms.items():
                row = table[k]
                for i in range(d):
                    if row[i]:
                        vec[i] += c * row[i]
            self._canon_cache = tuple(_norm_coeff(c) for c in vec)
        return self._canon_cache

    @property
    def coeffs(self) -> tuple:
        """Canonical coordinates padded to length n."""
        canon = self.canonical_coeffs()
        return canon + (0,) * (self.n - len(canon))

    def is_zero(self) -> bool:
        return not any(self.canonical_coeffs())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            r = self.as_rational()
            return r is not None and r == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.canonical_coeffs() == other.canonical_coeffs()

    def __hash__(self):
        return hash((self.n, self.canonical_coeffs()))

    def as_rational(self):
        """The value as a Fraction, or None when it is not rational."""
        canon = self.canonical_coeffs()
        if any(canon[1:]):
            return None
        return Fraction(canon[0])

    def to_float(self) -> complex:
        tau = 2.0 * cmath.pi / self.n
        total = 0j
        for k, c in self._terms.items():
            total += complex(c) * cmath.exp(1j * tau * k)
        return total

    def __repr__(self):
        return f"CycNumber({self.n}, {dict(sorted(self._terms.items()))})"

    def __str__(self):
        r = self.as_rational()
        if r is not None:
            return str(r)
        parts = []
        for i, c in enumerate(self.canonical_coeffs()):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z{self.n}^{i}")
            elif c == -1:
                parts.append(f"-z{self.n}^{i}")
            else:
                parts.append(f"{c}*z{self.n}^{i}")
        out = "+".join(parts)
        return out.replace("+-", "-")


def root_of_unity(n: int, k: int = 1) -> CycNumber:
    """zeta_n^k."""
    return CycNumber(n, {k % n: 1})
