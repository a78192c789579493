"""Exact arithmetic in cyclotomic fields Q(zeta_d).

An element is stored by its coordinates in the power basis
1, z, ..., z^(phi(d)-1) of Q(zeta_d), where z is a fixed primitive d-th
root of unity.  Coordinates are exact rationals, reduced modulo the d-th
cyclotomic polynomial, so equality (in particular zero testing) is a
plain coefficient comparison.  Complex conjugation sends z to z^(d-1).

A real element x (one fixed by conjugation) satisfies, exactly,

    x = a_0 + sum_{j>=1} a_j cos(2 pi j / d),

so its sign is decided by evaluating that sum in certified interval
arithmetic, doubling the working precision until the enclosure excludes
zero.  Termination is guaranteed: the value is exactly representable and
nonzero whenever we ask.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from mpmath import iv

_MAX_SIGN_PREC = 1 << 14  # sanity cap; never reached for exact nonzero reals


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (constant coefficient first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // den[-1]
        out[k] = q
        for j, d in enumerate(den):
            num[k + j] -= q * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, constant first."""
    if d < 1:
        raise ValueError(f"order must be positive, got {d}")
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_exact_div(poly, list(cyclotomic_polynomial(e)))
    return tuple(poly)


class CycloField:
    """The field Q(zeta_d), with reduction tables for the power basis."""

    __slots__ = ("order", "degree", "modulus", "_powers", "_conj_exp")

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        # z^j reduced mod Phi_d, for every exponent needed in products
        # (up to 2*degree - 2) and in conjugation (up to d - 1).
        top = max(order, 2 * self.degree - 1)
        powers: list[tuple[int, ...]] = []
        cur = [0] * self.degree
        cur[0] = 1
        for j in range(top):
            powers.append(tuple(cur))
            cur = [0] + cur[:-1]
            lead = cur[-1] if len(cur) > self.degree else 0
            if len(cur) > self.degree:
                cur = cur[: self.degree]
            if lead:
                for i in range(self.degree):
                    cur[i] -= lead * self.modulus[i]
        self._powers = tuple(powers)
        self._conj_exp = tuple((j * (order - 1)) % order for j in range(self.degree))

    def zero(self) -> CycloNumber:
        return CycloNumber(self, (Fraction(0),) * self.degree)

    def one(self) -> CycloNumber:
        return self.from_rational(1)

    def from_rational(self, a) -> CycloNumber:
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(a)
        return CycloNumber(self, tuple(coeffs))

    def zeta_power(self, j: int) -> CycloNumber:
        """z^j as a field element (j taken modulo the order)."""
        j %= self.order
        return CycloNumber(self, tuple(Fraction(c) for c in self._powers[j]))

    def reduce(self, raw: list[Fraction]) -> tuple[Fraction, ...]:
        """Reduce a coefficient list of arbitrary length modulo Phi_d."""
        out = list(raw[: self.degree])
        out += [Fraction(0)] * (self.degree - len(out))
        for j in range(self.degree, len(raw)):
            c = raw[j]
            if c:
                table = self._powers[j]
                for i in range(self.degree):
                    if table[i]:
                        out[i] += c * table[i]
        return tuple(out)

    def __repr__(self):
        return f"CycloField(order={self.order})"


@lru_cache(maxsize=None)
def field(order: int) -> CycloField:
    return CycloField(order)


class CycloNumber:
    """An exact element of Q(zeta_d)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: CycloField, coeffs: tuple[Fraction, ...]):
        self.field = fld
        self.coeffs = coeffs

    # -- structure ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.field.order

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def conjugate(self) -> CycloNumber:
        raw = [Fraction(0)] * self.field.order
        for j, c in enumerate(self.coeffs):
            if c:
                raw[self.field._conj_exp[j]] += c
        return CycloNumber(self.field, self.field.reduce(raw))

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> CycloNumber | None:
        if isinstance(other, CycloNumber):
            if other.field.order != self.field.order:
                if other.is_rational():
                    return self.field.from_rational(other.as_fraction())
                if self.is_rational():
                    return other  # caller re-dispatches
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.field is not self.field and not self.is_rational():
            raise ValueError("mixed cyclotomic orders")
        if o.field is not self.field:
            return o + self.as_fraction()
        return CycloNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o if o.field is self.field else -o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.field is not self.field:
            return o * self.as_fraction()
        n = self.field.degree
        raw = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        raw[i + j] += a * b
        return CycloNumber(self.field, self.field.reduce(raw))

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        """Field inverse, by the extended Euclidean algorithm mod Phi_d."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        # Work with rational coefficient lists, constant first.
        a = [Fraction(c) for c in self.field.modulus]
        b = list(self.coeffs)
        # Invariant: b = s * self (mod Phi); a needs no cofactor tracking.
        s_prev: list[Fraction] = [Fraction(0)]
        s_cur: list[Fraction] = [Fraction(1)]

        def deg(p):
            for k in range(len(p) - 1, -1, -1):
                if p[k]:
                    return k
            return -1

        while True:
            db = deg(b)
            if db < 0:
                raise ZeroDivisionError("element not invertible (not coprime to modulus)")
            if db == 0:
                inv = 1 / b[0]
                raw = [c * inv for c in s_cur]
                return CycloNumber(self.field, self.field.reduce(raw))
            # a, b <- b, a mod b ; update cofactors the same way
            da = deg(a)
            r = list(a)
            q = [Fraction(0)] * max(da - db + 1, 1)
            for k in range(da - db, -1, -1):
                c = r[k + db] / b[db]
                q[k] = c
                if c:
                    for j in range(db + 1):
                        r[k + j] -= c * b[j]
            # new cofactor: s_prev - q * s_cur
            prod = [Fraction(0)] * (len(q) + len(s_cur) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s_cur):
                        if sc:
                            prod[i + j] += qc * sc
            new_s = [Fraction(0)] * max(len(s_prev), len(prod))
            for i, c in enumerate(s_prev):
                new_s[i] += c
            for i, c in enumerate(prod):
                new_s[i] -= c
            a, b = b, r
            s_prev, s_cur = s_cur, new_s

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.field is not self.field:
            return self.field.from_rational(self.as_fraction()) / o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparisons and sign ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloNumber):
            if other.field.order == self.field.order:
                return self.coeffs == other.coeffs
            return (
                self.is_rational()
                and other.is_rational()
                and self.coeffs[0] == other.coeffs[0]
            )
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def approx(self) -> float:
        """Float approximation of the real part (exact value when real)."""
        d = self.order
        return float(
            sum(float(c) * math.cos(2.0 * math.pi * j / d) for j, c in enumerate(self.coeffs) if c)
        )

    def real_sign(self) -> int:
        """Certified sign of a real element (-1, 0, +1).

        Caller must pass a real element; sign of the constant term is used
        directly when the element is rational, otherwise certified interval
        evaluation refines precision until zero is excluded.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            a = self.coeffs[0]
            return 1 if a > 0 else -1
        d = self.order
        prec = 64
        saved = iv.prec
        try:
            while prec <= _MAX_SIGN_PREC:
                iv.prec = prec
                two_pi = 2 * iv.pi
                acc = iv.mpf(self.coeffs[0].numerator) / iv.mpf(self.coeffs[0].denominator)
                for j in range(1, len(self.coeffs)):
                    c = self.coeffs[j]
                    if c:
                        term = iv.mpf(c.numerator) / iv.mpf(c.denominator)
                        acc += term * iv.cos(two_pi * j / d)
                if acc.a > 0:
                    return 1
                if acc.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved
        raise ArithmeticError(
            f"could not certify sign of {self!r}; is the element real and nonzero?"
        )

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                if j == 0:
                    terms.append(str(c))
                elif j == 1:
                    terms.append(f"{c}*z{self.order}")
                else:
                    terms.append(f"{c}*z{self.order}^{j}")
        return " + ".join(terms) if terms else "0"


def root_of_unity(k: int, p: int) -> CycloNumber:
    """The root of unity e^(2 pi i k / p), in the field Q(zeta_(p/gcd(k,p))).

    Each root lives in the smallest cyclotomic field containing it, so the
    representation stays phi(d)-dimensional and inverses remain valid for
    pivoting.
    """
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not 0 <= k < p:
        raise ValueError(f"k must satisfy 0 <= k < p, got k={k}, p={p}")
    g = math.gcd(k, p)
    d = p // g if k else 1
    return field(d).zeta_power(k // g if k else 0)
