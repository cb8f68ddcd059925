"""Exact arithmetic in cyclotomic fields.

A value is stored as a rational polynomial in ``z(m) = exp(2*pi*i/m)`` reduced
modulo the m-th cyclotomic polynomial, always at the smallest conductor ``m``
whose field contains it (``m`` never congruent to 2 mod 4). With that
normalisation, equal values have identical ``(conductor, coeffs)`` pairs.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = int | Fraction


def _clean(q) -> Rational:
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _divide_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _divide_monic(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, dc in enumerate(den):
                num[i - dn + j] -= c * dc
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the reduced coordinates of z(m)^k for k in 0..m-1."""
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    rows = []
    cur = [1] + [0] * (n - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(n):
                cur[j] -= top * phi[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _prime_factors(m: int) -> tuple[int, ...]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _reduce_raw(m: int, raw: Sequence) -> list:
    """Collapse a length-m exponent vector (group-ring element) onto the power basis."""
    table = _power_table(m)
    n = len(table[0])
    out = [0] * n
    for k, c in enumerate(raw):
        if c:
            row = table[k]
            for j in range(n):
                if row[j]:
                    out[j] += c * row[j]
    return out


def _galois(m: int, coeffs: Sequence, k: int) -> list:
    raw = [0] * m
    for i, c in enumerate(coeffs):
        if c:
            raw[(i * k) % m] += c
    return _reduce_raw(m, raw)


@lru_cache(maxsize=None)
def _fixing_group(m: int, d: int) -> tuple[int, ...]:
    """Units k mod m with k = 1 mod d, k != 1: the Galois group of Q(z(m)) over Q(z(d))."""
    return tuple(k for k in range(2, m) if k % d == 1 % d and math.gcd(k, m) == 1)


@lru_cache(maxsize=None)
def _descent(m: int, d: int):
    """Pivot positions and inverse matrix expressing Q(z(d)) coordinates from Q(z(m)) ones."""
    table = _power_table(m)
    step = m // d
    nd = totient(d)
    # columns: images of z(d)^j = z(m)^(j*step)
    cols = [table[(j * step) % m] for j in range(nd)]
    nm = len(table[0])
    # pick pivot rows with Gaussian elimination on the nm x nd matrix
    mat = [[Fraction(cols[j][i]) for j in range(nd)] for i in range(nm)]
    pivots: list[int] = []
    work = [row[:] for row in mat]
    basis_rows: list[list[Fraction]] = []
    for i in range(nm):
        row = work[i][:]
        for prow, pcol in basis_rows:
            if row[pcol]:
                f = row[pcol] / prow[pcol]
                row = [a - f * b for a, b in zip(row, prow)]
        nz = next((c for c in range(nd) if row[c]), None)
        if nz is not None:
            basis_rows.append((row, nz))
            pivots.append(i)
            if len(pivots) == nd:
                break
    sub = [mat[i][:] for i in pivots]
    return tuple(pivots), _invert(sub)


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _normalize(m: int, coeffs: list) -> tuple[int, tuple]:
    while m > 1:
        if not any(coeffs[1:]):
            return 1, (_clean(coeffs[0]),)
        for q in _prime_factors(m):
            d = m // q
            if all(_galois(m, coeffs, k) == coeffs for k in _fixing_group(m, d)):
                pivots, inverse = _descent(m, d)
                vals = [coeffs[i] for i in pivots]
                coeffs = [sum((a * v for a, v in zip(row, vals) if a and v), 0) for row in inverse]
                m = d
                break
        else:
            break
    return m, tuple(_clean(c) for c in coeffs)


class Cyclotomic:
    """An element of a cyclotomic field, canonically reduced."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rational], _normalized: bool = False):
        if not _normalized:
            if conductor < 1:
                raise ValueError(f"conductor must be positive, got {conductor}")
            n = totient(conductor)
            coeffs = list(coeffs) + [0] * (n - len(coeffs))
            if len(coeffs) > n:
                raise ValueError("too many coefficients for conductor")
            conductor, coeffs = _normalize(conductor, coeffs)
        self.conductor = conductor
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- constructors

    @classmethod
    def rational(cls, q: Rational) -> "Cyclotomic":
        return cls(1, (_clean(Fraction(q)),), _normalized=True)

    @classmethod
    def from_exponents(cls, m: int, terms: dict[int, Rational] | Iterable[tuple[int, Rational]]) -> "Cyclotomic":
        """Sum of ``c * z(m)^k`` over the given ``{k: c}`` terms."""
        raw = [0] * m
        items = terms.items() if isinstance(terms, dict) else terms
        for k, c in items:
            raw[k % m] += c
        return cls(m, _reduce_raw(m, raw))

    # -- structure

    def _raw(self, L: int) -> list:
        """Exponent vector of length L (L a multiple of the conductor)."""
        step = L // self.conductor
        raw = [0] * L
        for i, c in enumerate(self.coeffs):
            if c:
                raw[i * step] += c
        return raw

    def lift(self, L: int) -> tuple:
        """Coordinates in the power basis of Q(z(L)); ``L`` must be a multiple of the conductor."""
        if L % self.conductor:
            raise ValueError(f"{L} is not a multiple of conductor {self.conductor}")
        return tuple(_reduce_raw(L, self._raw(L)))

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def is_algebraic_integer(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def as_rational_integer(self) -> int | None:
        if self.conductor == 1 and Fraction(self.coeffs[0]).denominator == 1:
            return int(self.coeffs[0])
        return None

    def as_rational(self) -> Fraction | None:
        if self.conductor == 1:
            return Fraction(self.coeffs[0])
        return None

    # -- arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            if self.conductor == 1:
                return Cyclotomic(1, (_clean(self.coeffs[0] + other.coeffs[0]),), _normalized=True)
            return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        L = math.lcm(self.conductor, other.conductor)
        raw = [a + b for a, b in zip(self._raw(L), other._raw(L))]
        return Cyclotomic(L, _reduce_raw(L, raw))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs), _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            s = other.coeffs[0]
            if s == 0:
                return ZERO
            return Cyclotomic(self.conductor, tuple(_clean(c * s) for c in self.coeffs), _normalized=True)
        if self.conductor == 1:
            return other * self
        L = math.lcm(self.conductor, other.conductor)
        sa, sb = L // self.conductor, L // other.conductor
        raw = [0] * L
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        raw[(i * sa + j * sb) % L] += a * b
        return Cyclotomic(L, _reduce_raw(L, raw))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return Cyclotomic.rational(1 / Fraction(self.coeffs[0]))
        m = self.conductor
        inv = _poly_inverse_mod([Fraction(c) for c in self.coeffs], [Fraction(c) for c in cyclotomic_polynomial(m)])
        return Cyclotomic(m, inv)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def galois(self, k: int) -> "Cyclotomic":
        """Image under the automorphism ``z(m) -> z(m)^k`` (``k`` coprime to the conductor)."""
        m = self.conductor
        if math.gcd(k, m) != 1:
            raise ValueError(f"{k} is not a unit modulo {m}")
        return Cyclotomic(m, _galois(m, self.coeffs, k % m))

    def conjugate(self) -> "Cyclotomic":
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    # -- comparison and display

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        return render(self)


def _coerce(x) -> Cyclotomic | None:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    return None


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _poly_trim(a)
    return q, a


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list, modulus: list) -> list:
    """Extended Euclid: ``s`` with ``s * a = 1 mod modulus`` over the rationals."""
    r0, r1 = _poly_trim(list(modulus)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    s = [x / c for x in s1]
    _, rem = _poly_divmod(s, modulus)
    n = len(modulus) - 1
    return rem + [0] * (n - len(rem))


ZERO = Cyclotomic(1, (0,), _normalized=True)
ONE = Cyclotomic(1, (1,), _normalized=True)


def root_of_unity(m: int, k: int = 1) -> Cyclotomic:
    """``z(m)^k`` where ``z(m) = exp(2*pi*i/m)``."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    return Cyclotomic.from_exponents(m, {k % m: 1})


def arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(a: Cyclotomic) -> Cyclotomic:
    return a.conjugate()


def as_rational_integer(a: Cyclotomic) -> int | None:
    return a.as_rational_integer()


def linear_combination(terms: Iterable[tuple[Rational, Cyclotomic]]) -> Cyclotomic:
    """``sum(w * x)`` accumulated in one common field, reduced once."""
    terms = [(w, x) for w, x in terms if w and not x.is_zero()]
    if not terms:
        return ZERO
    L = reduce_lcm(x.conductor for _, x in terms)
    if L == 1:
        return Cyclotomic.rational(sum(w * x.coeffs[0] for w, x in terms))
    raw = [0] * L
    for w, x in terms:
        step = L // x.conductor
        for i, c in enumerate(x.coeffs):
            if c:
                raw[i * step] += w * c
    return Cyclotomic(L, _reduce_raw(L, raw))


def hermitian_sum(terms: Iterable[tuple[Rational, Cyclotomic, Cyclotomic]]) -> Cyclotomic:
    """``sum(w * x * conj(y))`` accumulated in one common field, reduced once."""
    terms = [(w, x, y) for w, x, y in terms if w and not x.is_zero() and not y.is_zero()]
    if not terms:
        return ZERO
    L = reduce_lcm(c for _, x, y in terms for c in (x.conductor, y.conductor))
    if L == 1:
        return Cyclotomic.rational(sum(w * x.coeffs[0] * y.coeffs[0] for w, x, y in terms))
    raw = [0] * L
    for w, x, y in terms:
        sx, sy = L // x.conductor, L // y.conductor
        xs = [(i * sx, a) for i, a in enumerate(x.coeffs) if a]
        ys = [(j * sy, b) for j, b in enumerate(y.coeffs) if b]
        for ex, a in xs:
            wa = w * a
            for ey, b in ys:
                raw[(ex - ey) % L] += wa * b
    return Cyclotomic(L, _reduce_raw(L, raw))


def reduce_lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out


def render(a: Cyclotomic) -> str:
    """Deterministic text form, ascending exponent: ``"1/2*z(8)^1 + -1/2*z(8)^3"``."""
    if a.conductor == 1:
        return str(a.coeffs[0])
    terms = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        terms.append(str(c) if k == 0 else f"{c}*z({a.conductor})^{k}")
    return " + ".join(terms)
