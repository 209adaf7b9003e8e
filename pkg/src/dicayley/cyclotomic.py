"""Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].

Values are stored as coefficient tuples of length phi(m), the canonical
representative modulo the m-th cyclotomic polynomial.  With that basis a value
is a rational integer exactly when every non-constant coefficient vanishes.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence


class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        if not divisor.coeffs or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPolynomial(()), IntPolynomial(rem)
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k]
            if q:
                quot[k - d] = q
                for i, c in enumerate(divisor.coeffs):
                    rem[k - d + i] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """Phi_m by exact division of x^m - 1 by Phi_d over the proper divisors d of m."""
    if m < 1:
        raise ValueError(f"conductor must be >= 1, got {m}")
    num = IntPolynomial([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            num, rem = num.divmod_monic(cyclotomic_poly(d))
            assert rem.is_zero()
    return num


def euler_phi(m: int) -> int:
    return cyclotomic_poly(m).degree


class _Context:
    """Per-conductor reduction tables."""

    def __init__(self, m: int) -> None:
        self.m = m
        phi = cyclotomic_poly(m)
        self.deg = phi.degree
        # powers[k] = x^k mod Phi_m for 0 <= k < max(m, 2*deg)
        n = max(m, 2 * self.deg)
        powers: list[tuple[int, ...]] = []
        cur = [0] * self.deg
        cur[0] = 1
        for _ in range(n):
            powers.append(tuple(cur))
            # multiply by x and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(self.deg):
                    cur[i] -= top * phi.coeffs[i]
        self.powers = powers

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        out = list(coeffs[: self.deg]) + [0] * max(0, self.deg - len(coeffs))
        n = len(self.powers)
        for k in range(self.deg, len(coeffs)):
            c = coeffs[k]
            if c:
                # x^k = x^(k mod m) in the ring since Phi_m divides x^m - 1
                for i, v in enumerate(self.powers[k if k < n else k % self.m]):
                    if v:
                        out[i] += c * v
        return tuple(out)


@lru_cache(maxsize=None)
def _context(m: int) -> _Context:
    return _Context(m)


class CyclotomicInt:
    """An element of Z[zeta_m] in canonical form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int]) -> None:
        ctx = _context(m)
        self.m = m
        self.coeffs: tuple[int, ...] = ctx.reduce(list(coeffs))

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[int, ...]) -> CyclotomicInt:
        obj = object.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        return obj

    @classmethod
    def integer(cls, m: int, value: int) -> CyclotomicInt:
        deg = _context(m).deg
        return cls._raw(m, (int(value),) + (0,) * (deg - 1))

    @classmethod
    def zero(cls, m: int) -> CyclotomicInt:
        return cls.integer(m, 0)

    @classmethod
    def from_exponent_counts(cls, m: int, counts: Sequence[int]) -> CyclotomicInt:
        """Sum of counts[e] * zeta_m^e over 0 <= e < m."""
        ctx = _context(m)
        out = [0] * ctx.deg
        for e, c in enumerate(counts):
            if c:
                for i, v in enumerate(ctx.powers[e]):
                    if v:
                        out[i] += c * v
        return cls._raw(m, tuple(out))

    @classmethod
    def from_exponents(cls, m: int, exponents: Iterable[int]) -> CyclotomicInt:
        counts = [0] * m
        for e in exponents:
            counts[e % m] += 1
        return cls.from_exponent_counts(m, counts)

    def _check(self, other: CyclotomicInt) -> None:
        if self.m != other.m:
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.m, other)
        elif not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check(other)
        return CyclotomicInt._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.m, other)
        elif not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt._raw(self.m, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicInt._raw(self.m, _context(self.m).reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CyclotomicInt:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicInt.integer(self.m, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> CyclotomicInt:
        """Complex conjugate: zeta^k -> zeta^(-k), extended linearly."""
        m = self.m
        counts = [0] * m
        for k, c in enumerate(self.coeffs):
            if c:
                counts[(-k) % m] += c
        return CyclotomicInt.from_exponent_counts(m, counts)

    def lift(self, target: int) -> CyclotomicInt:
        """Embed into Z[zeta_target] via zeta_m -> zeta_target^(target/m)."""
        if target % self.m:
            raise ValueError(f"{self.m} does not divide {target}")
        step = target // self.m
        counts = [0] * target
        for k, c in enumerate(self.coeffs):
            if c:
                counts[k * step] += c
        return CyclotomicInt.from_exponent_counts(target, counts)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational_integer(self) -> int | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def abs_square(self) -> CyclotomicInt:
        return self * self.conj()

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.m), math.sin(2 * math.pi / self.m))
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.as_rational_integer() == other
        if isinstance(other, CyclotomicInt):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.m}, {list(self.coeffs)})"

    def __str__(self) -> str:
        q = self.as_rational_integer()
        if q is not None:
            return str(q)
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}z{self.m}^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def root_of_unity(m: int, e: int) -> CyclotomicInt:
    """zeta_m^e in canonical form."""
    if m < 1:
        raise ValueError(f"conductor must be >= 1, got {m}")
    return CyclotomicInt._raw(m, _context(m).powers[e % m])


def integer_sqrt_if_square(v: int) -> int | None:
    if v < 0:
        raise ValueError(f"integer square root of negative value {v}")
    r = math.isqrt(v)
    return r if r * r == v else None


def is_perfect_square_value(z: CyclotomicInt) -> bool:
    """True iff z is a non-negative rational integer that is a perfect square."""
    q = z.as_rational_integer()
    return q is not None and q >= 0 and integer_sqrt_if_square(q) is not None


def matrix_has_integer_eigenvalues(mat: Sequence[Sequence[CyclotomicInt]]) -> bool:
    """Decide exactly whether a 1x1 or 2x2 cyclotomic matrix has only integer eigenvalues.

    For 2x2 the eigenvalues are integers iff trace and determinant are rational
    integers and the discriminant is a perfect square (parity then matches).
    """
    if len(mat) == 1:
        return mat[0][0].as_rational_integer() is not None
    if len(mat) != 2:
        raise ValueError("only 1x1 and 2x2 matrices are supported")
    (a, b), (c, d) = mat
    t = (a + d).as_rational_integer()
    det = (a * d - b * c).as_rational_integer()
    if t is None or det is None:
        return False
    disc = t * t - 4 * det
    return disc >= 0 and integer_sqrt_if_square(disc) is not None
