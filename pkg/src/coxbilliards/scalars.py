"""Exact arithmetic in the real cyclotomic fields Q(2*cos(pi/N)).

Every number that appears in a geometric representation of a Coxeter group
with finite bond labels dividing N lives in Q(2*cos(pi/N)).  Elements are
stored as rational coefficient vectors in the power basis of the generator
z = 2*cos(pi/N); multiplication is reduced modulo the minimal polynomial of
z, which is computed from the cyclotomic polynomial of order 2N.  Zero tests
are exact (a reduced coefficient vector is zero iff the number is zero,
because the modulus is irreducible); signs are determined by refining a
rigorous interval enclosure of z until it separates the value from zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

__all__ = ["CosField", "Scalar", "field_for_labels"]


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    """Euclidean division of polynomials with ascending coefficients."""
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    while num and num[-1] == 0:
        num.pop()
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den):
        c = num[-1] / den[-1]
        d = len(num) - len(den)
        q[d] = c
        for k, b in enumerate(den):
            num[d + k] -= c * b
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # y^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, [Fraction(c) for c in _cyclotomic(d)])
            assert not any(r), f"cyclotomic division left a remainder for n={n}"
            poly = q
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def _minpoly_two_cos(N: int) -> tuple[Fraction, ...]:
    """Minimal polynomial (monic, ascending) of 2*cos(pi/N) over Q."""
    if N == 1:
        return (Fraction(2), Fraction(1))  # z = -2
    phi = _cyclotomic(2 * N)
    d = len(phi) - 1  # degree phi(2N), even for N >= 2
    assert d % 2 == 0
    h = d // 2
    # phi is palindromic; y^{-h} * phi(y) = a_h + sum_{k>=1} a_{h+k} (y^k + y^{-k}).
    # Rewrite via V_k(z) = y^k + y^{-k} with z = y + 1/y.
    vk = [[Fraction(2)], [Fraction(0), Fraction(1)]]  # V_0 = 2, V_1 = z
    for _ in range(2, h + 1):
        prev, prev2 = vk[-1], vk[-2]
        nxt = [Fraction(0)] + prev  # z * V_{k-1}
        for j, c in enumerate(prev2):
            nxt[j] -= c
        vk.append(nxt)
    out = [Fraction(0)] * (h + 1)
    out[0] = Fraction(phi[h])
    for k in range(1, h + 1):
        for j, c in enumerate(vk[k]):
            out[j] += phi[h + k] * c
    assert out[-1] == 1
    return tuple(out)


def _mpf_to_fraction(x) -> Fraction:
    """Exact value of an mpmath float (binary floats are rational)."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if x == 0:
            return Fraction(0)
        raise ArithmeticError(f"cannot convert non-finite float {x!r}")
    val = Fraction(man) * Fraction(2) ** exp
    return -val if sign else val


class CosField:
    """The field Q(2*cos(pi/N)), supplying Scalar values attached to it."""

    _instances: dict[int, "CosField"] = {}

    def __new__(cls, N: int):
        if N < 1:
            raise ValueError(f"field order must be >= 1, got {N}")
        inst = cls._instances.get(N)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(N)
            cls._instances[N] = inst
        return inst

    def _init(self, N: int) -> None:
        self.N = N
        self.minpoly = _minpoly_two_cos(N)
        self.degree = len(self.minpoly) - 1
        # Reduction rows: z^k mod minpoly, for degree <= k <= 2*degree - 2.
        d = self.degree
        rows = []
        cur = [-c for c in self.minpoly[:-1]]  # z^d
        rows.append(tuple(cur))
        for _ in range(d + 1, 2 * d - 1):
            cur = [Fraction(0)] + cur
            top = cur.pop()
            if top:
                for j, c in enumerate(rows[0]):
                    cur[j] += top * c
            rows.append(tuple(cur))
        self._reduction = rows
        self.zero = Scalar(self, (Fraction(0),) * d)
        self.one = self.from_rational(Fraction(1))
        self._interval_cache: dict[int, object] = {}
        import math as _math

        self._gen_float = 2.0 * _math.cos(_math.pi / N)

    # -- constructors -------------------------------------------------

    def from_rational(self, q) -> "Scalar":
        q = Fraction(q)
        return Scalar(self, (q,) + (Fraction(0),) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> "Scalar":
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        cs = cs + (Fraction(0),) * (self.degree - len(cs))
        return Scalar(self, cs)

    def generator(self) -> "Scalar":
        """The number 2*cos(pi/N)."""
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        return self.from_coeffs((0, 1))

    def two_cos_pi_over(self, m: int) -> "Scalar":
        """2*cos(pi/m) for m dividing N (m = 2 is always available)."""
        if m < 2:
            raise ValueError(f"bond label must be >= 2, got {m}")
        if m == 2:
            return self.zero
        if self.N % m != 0:
            raise ValueError(f"cos(pi/{m}) does not lie in Q(2cos(pi/{self.N}))")
        k = self.N // m
        v0, v1 = self.from_rational(2), self.generator()
        if k == 0:
            return v0
        z = v1
        for _ in range(k - 1):
            v0, v1 = v1, z * v1 - v0
        return v1

    def cos_pi_over(self, m: int) -> "Scalar":
        """Exact cos(pi/m); rejects m < 2."""
        return self.two_cos_pi_over(m) / self.from_rational(2)

    # -- interval machinery for sign determination ---------------------

    def _generator_interval(self, prec: int):
        """Rational enclosure [lo, hi] of 2*cos(pi/N), rigorous via mpmath.iv."""
        pair = self._interval_cache.get(prec)
        if pair is None:
            ctx = mpmath.iv
            old = ctx.prec
            try:
                ctx.prec = prec
                iv = 2 * ctx.cos(ctx.pi / self.N)
                lo = _mpf_to_fraction(mpmath.mpf(iv.a))
                hi = _mpf_to_fraction(mpmath.mpf(iv.b))
            finally:
                ctx.prec = old
            pair = (lo, hi)
            self._interval_cache[prec] = pair
        return pair

    def _sign_by_interval(self, coeffs) -> int:
        prec = 64
        while prec <= 1 << 14:
            zlo, zhi = self._generator_interval(prec)
            lo = hi = Fraction(0)
            for c in reversed(coeffs):
                # interval multiply by [zlo, zhi], then add the coefficient
                cands = (lo * zlo, lo * zhi, hi * zlo, hi * zhi)
                lo, hi = min(cands) + c, max(cands) + c
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
        raise ArithmeticError(
            "interval refinement failed to separate a nonzero field element from 0"
        )

    def __repr__(self):
        return f"CosField(N={self.N}, degree={self.degree})"


class Scalar:
    """An element of a CosField; immutable and exactly comparable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CosField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is self.field:
                return other
            return lift(other, self.field)
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (self.coeffs[0] * o.coeffs[0],))
        a, b = self.coeffs, o.coeffs
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        red = self.field._reduction
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(red[k - d]):
                    if r:
                        out[j] += c * r
        return Scalar(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (1 / self.coeffs[0],))
        # Extended Euclid in Q[z]: find u with u*self = 1 mod minpoly.
        r0 = list(self.field.minpoly)
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r, s1, s
        while r0 and r0[-1] == 0:
            r0.pop()
        assert len(r0) == 1, "modulus is irreducible, gcd must be constant"
        c = r0[0]
        inv = [x / c for x in s0]
        inv += [Fraction(0)] * (d - len(inv))
        return Scalar(self.field, tuple(inv[:d]))

    # -- predicates and order ------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coeffs[0]

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coeffs[0] > 0 else -1
        return self.field._sign_by_interval(self.coeffs)

    def approx(self) -> float:
        """Float approximation (search heuristics only, never for decisions)."""
        z = self.field._gen_float
        val = 0.0
        for c in reversed(self.coeffs):
            val = val * z + c.numerator / c.denominator
        return val

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Scalar):
            if other.field is self.field:
                return self.coeffs == other.coeffs
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.N, self.coeffs))
        return self._hash

    def __lt__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() < 0

    def __le__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() <= 0

    def __gt__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() > 0

    def __ge__(self, other):
        diff = self - self._coerce(other)
        return diff.sign() >= 0

    # -- serialization --------------------------------------------------

    def to_str(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        return f"cyc{self.field.N}:" + ",".join(str(c) for c in self.coeffs)

    @staticmethod
    def from_str(s: str, field: CosField | None = None) -> "Scalar":
        if s.startswith("cyc"):
            head, _, tail = s.partition(":")
            N = int(head[3:])
            f = CosField(N)
            val = f.from_coeffs([Fraction(c) for c in tail.split(",")])
            if field is not None and field is not f:
                val = lift(val, field)
            return val
        if field is None:
            raise ValueError("a field is required to parse a rational scalar")
        return field.from_rational(Fraction(s))

    def __repr__(self):
        if self.is_rational():
            return f"Scalar({self.coeffs[0]})"
        terms = ",".join(str(c) for c in self.coeffs)
        return f"Scalar[N={self.field.N}]({terms})"


def lift(x: Scalar, target: CosField) -> Scalar:
    """Re-express x in a larger field; requires x.field.N | target.N."""
    if x.field is target:
        return x
    if target.N % x.field.N != 0:
        raise ValueError(
            f"cannot lift from Q(2cos(pi/{x.field.N})) to Q(2cos(pi/{target.N}))"
        )
    if x.is_rational():
        return target.from_rational(x.coeffs[0])
    gen = target.two_cos_pi_over(x.field.N)
    out = target.zero
    power = target.one
    for c in x.coeffs:
        if c:
            out = out + power * target.from_rational(c)
        power = power * gen
    return out


def field_for_labels(labels) -> CosField:
    """The smallest CosField housing cos(pi/m) for every finite label m >= 3."""
    N = 1
    for m in labels:
        if m is not None and m >= 3:
            N = N * m // gcd(N, m)
    return CosField(N)
