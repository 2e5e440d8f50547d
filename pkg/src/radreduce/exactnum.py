"""Exact scalar arithmetic: rationals, quadratic-field elements, root predicates.

Rationals are ``fractions.Fraction`` throughout (always stored reduced, positive
denominator, arithmetic exact).  On top of that this module provides the three
number-theoretic predicates the reduction machinery needs:

* is a rational a perfect square, and of what,
* does a rational have a rational odd p-th root,
* the squarefree integer part of a rational (which classifies the quadratic
  field Q(sqrt(q))).

``QuadExt`` represents an element a + b*sqrt(R) of the quadratic extension
Q(sqrt(R)) for a fixed non-square R, with exact componentwise arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

# Trial division bound for factoring; inputs here are tiny, but exceeding the
# bound must raise rather than return a wrong answer.
FACTOR_BOUND = 10**6

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FactorizationError(ValueError):
    """Raised when an integer cannot be factored within the configured bound."""


def parse_rational(text: str) -> Fraction:
    """Parse the canonical rational text format: '-2158', '6/11'."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    """Canonical text form, inverse of parse_rational on reduced values."""
    return str(q)


def integer_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0 and whether it is exact.

    Pure integer Newton iteration; never touches floating point.
    """
    if n < 0 or k < 1:
        raise ValueError("integer_nth_root requires n >= 0, k >= 1")
    if n in (0, 1) or k == 1:
        return n, True
    # Start above the root and descend: r0 = 2^ceil(bits/k) >= n^(1/k).
    r = 1 << -((-n.bit_length()) // k)
    while True:
        r_next = ((k - 1) * r + n // r ** (k - 1)) // k
        if r_next >= r:
            break
        r = r_next
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r, r**k == n


def rational_is_square(q: Fraction) -> Fraction | None:
    """Nonnegative rational square root of q, or None when q is not a square."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = math.isqrt(num)
    if rn * rn != num:
        return None
    rd = math.isqrt(den)
    if rd * rd != den:
        return None
    return Fraction(rn, rd)


def rational_odd_root(q: Fraction, p: int) -> Fraction | None:
    """Unique real rational z with z**p == q for odd p >= 3, or None.

    Odd p makes the real root well defined for either sign of q.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p}")
    sign = -1 if q < 0 else 1
    rn, ok_n = integer_nth_root(abs(q.numerator), p)
    if not ok_n:
        return None
    rd, ok_d = integer_nth_root(q.denominator, p)
    if not ok_d:
        return None
    return Fraction(sign * rn, rd)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed witnesses (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, bound: int = FACTOR_BOUND) -> dict[int, int]:
    """Factor n >= 1 by trial division up to `bound`, with a perfect-power /
    probable-prime fallback for the remaining cofactor.

    Raises FactorizationError when the cofactor cannot be certified; a wrong
    factorization is never returned.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # Wheel over numbers coprime to 30.
    step = (4, 2, 4, 2, 4, 6, 2, 6)
    q, i = 7, 0
    while q * q <= n and q <= bound:
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
        q += step[i]
        i = (i + 1) % 8
    if n == 1:
        return factors
    if q * q > n:
        # Remaining cofactor is prime (all divisors up to its sqrt removed).
        factors[n] = factors.get(n, 0) + 1
        return factors
    if is_probable_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return factors
    # Perfect-power fallback: n = b^e with b certifiably prime.
    for e in range(2, n.bit_length() + 1):
        b, exact = integer_nth_root(n, e)
        if b < 2:
            break
        if exact and is_probable_prime(b):
            factors[b] = factors.get(b, 0) + e
            return factors
    raise FactorizationError(f"cannot factor cofactor {n} within bound {bound}")


def squarefree_part(q: Fraction, bound: int = FACTOR_BOUND) -> int:
    """The unique squarefree integer m with q = m * (rational square).

    Q(sqrt(q1)) == Q(sqrt(q2)) iff the squarefree parts agree; the sign of q
    is carried by m.
    """
    if q == 0:
        raise ValueError("squarefree_part undefined for 0")
    # q = num/den = (num*den)/den^2, so only num*den matters.
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    m = sign
    for prime, exp in factorize(abs(n), bound).items():
        if exp % 2:
            m *= prime
    return m


def divisors(n: int, bound: int = FACTOR_BOUND) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for prime, exp in factorize(n, bound).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    return is_probable_prime(n)


@dataclass(frozen=True)
class QuadExt:
    """Element a + b*sqrt(R) of Q(sqrt(R)), R a fixed non-square rational.

    Arithmetic is exact and componentwise; (sqrt(R))^2 = R.  Mixing elements
    over different R values is an error, never a coercion.
    """

    a: Fraction
    b: Fraction
    R: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "R", Fraction(self.R))
        if self.R == 0 or rational_is_square(self.R) is not None:
            raise ValueError(f"R = {self.R} is a rational square; use plain rationals")

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.R != self.R:
                raise ValueError(f"mismatched field contexts: sqrt({self.R}) vs sqrt({other.R})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.R)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.R)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.R)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.R)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.b * o.b * self.R,
            self.a * o.b + self.b * o.a,
            self.R,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.R)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2*R; zero only for the zero element."""
        return self.a * self.a - self.b * self.b * self.R

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(R))")
        return QuadExt(self.a / n, -self.b / n, self.R)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n: int) -> "QuadExt":
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(Fraction(1), Fraction(0), self.R)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        root = f"sqrt({self.R})"
        head = f"{self.a} + " if self.a else ""
        coef = "" if self.b == 1 else f"{self.b}*"
        s = f"{head}{coef}{root}"
        return s.replace("+ -", "- ")


def quadext_of(q, R) -> QuadExt:
    """Embed a rational into Q(sqrt(R))."""
    return QuadExt(Fraction(q), Fraction(0), Fraction(R))


def sqrt_of(R) -> QuadExt:
    """The element sqrt(R) itself."""
    return QuadExt(Fraction(0), Fraction(1), Fraction(R))
