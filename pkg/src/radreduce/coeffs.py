"""Closed-form coefficient families of the reduction polynomials.

For odd p >= 3 the degree-p trace polynomial f (satisfied by the scaled sum
u = z^((p-1)/2) * (y + y') of conjugate radical roots), the sqrt-part
polynomial A, and the cofactor polynomial f' of the fundamental identity
4*D^2*A^2*R = f*f' + Z^2 - 4*D all have coefficients given by explicit
binomial closed forms.  This module computes them exactly, along with the
convolution sums coupling them and the closed form u_k both convolutions
collapse to.

Families (CLI tags in parentheses):

* c_{2k+1} ("c")      - odd-degree coefficients of f
* a_{2k}   ("a")      - even-degree coefficients of A (cleared form)
* c'_{2j+1} ("cprime") - odd-degree coefficients of f'
* C_{p-2k} ("C")      - coefficients of the expansion of X^p + 1 in the
                         basis X^k (X+1)^(p-2k), solved from the triangular
                         linear system they satisfy
* u_k      ("u")      - closed form equal to both convolution sums s_k, t_k

All values are exact rationals and, in fact, integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def binom(m: int, n: int) -> int:
    """Binomial coefficient with the extended convention: 0 for n < 0 or n > m."""
    if n < 0 or n > m:
        return 0
    return comb(m, n)


def _check_p(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p}")


def coeff_c(p: int, k: int) -> Fraction:
    """c_{2k+1}, the coefficient family of the trace polynomial f.

    Computed from both equivalent closed forms (ascending index 2k+1 and
    descending index p-2k) and cross-checked; 0 outside 0 <= k <= (p-1)/2.
    """
    _check_p(p)
    half = (p - 1) // 2
    if k < 0 or k > half:
        return Fraction(0)
    sign = -1 if (half - k) % 2 else 1
    value = sign * Fraction(p, (p + 1) // 2 + k) * binom((p + 1) // 2 + k, 2 * k + 1)
    # Descending-index form of the same family: c_{p-2k'} with k' = half - k.
    kd = half - k
    sign_d = -1 if kd % 2 else 1
    alt = sign_d * Fraction(p, p - kd) * binom(p - kd, kd)
    if value != alt:
        raise AssertionError(f"coefficient closed forms disagree at p={p}, k={k}")
    return value


def coeff_a(p: int, k: int) -> Fraction:
    """a_{2k}, the even-degree coefficient family of the sqrt-part polynomial."""
    _check_p(p)
    half = (p - 1) // 2
    if k < 0 or k > half:
        return Fraction(0)
    sign = -1 if k % 2 else 1
    return sign * Fraction(p - 1, half + k) * binom(half + k, 2 * k)


def coeff_cprime(p: int, j: int) -> Fraction:
    """c'_{2j+1}, the coefficient family of the cofactor polynomial."""
    _check_p(p)
    if j < 0 or j > (p - 3) // 2:
        return Fraction(0)
    sign = -1 if ((p - 3) // 2 - j) % 2 else 1
    return sign * Fraction(p - 2, (p - 1) // 2 + j) * binom((p - 1) // 2 + j, 2 * j + 1)


def system_C(p: int) -> list[Fraction]:
    """Expansion coefficients [C_p, C_{p-2}, ..., C_1] of X^p + 1 over the
    basis X^k (X+1)^(p-2k), solved by forward substitution.

    The system is unitriangular: C_p = 1 and, for j >= 1,
    sum_{k=0}^{j} C_{p-2k} * binom(p-2k, j-k) = 0.
    """
    _check_p(p)
    out = [Fraction(1)]
    for j in range(1, (p - 1) // 2 + 1):
        acc = Fraction(0)
        for k in range(j):
            acc += out[k] * binom(p - 2 * k, j - k)
        out.append(-acc)  # binom(p-2j, 0) = 1
    return out


def coeff_u(p: int, k: int) -> Fraction:
    """Closed form u_k = ((-1)^k (p-1) / k) * binom(p+k-2, 2k-1), 1 <= k <= p-1."""
    _check_p(p)
    if not 1 <= k <= p - 1:
        raise ValueError(f"k must satisfy 1 <= k <= p-1, got k={k}, p={p}")
    sign = -1 if k % 2 else 1
    return sign * Fraction(p - 1, k) * binom(p + k - 2, 2 * k - 1)


def conv_s(p: int, k: int) -> Fraction:
    """s_k = sum_j a_{2j} * a_{2(k-j)}: the even-coefficient convolution of the
    sqrt-part polynomial with itself (out-of-range factors are 0)."""
    _check_p(p)
    if not 1 <= k <= p - 1:
        raise ValueError(f"k must satisfy 1 <= k <= p-1, got k={k}, p={p}")
    return sum((coeff_a(p, j) * coeff_a(p, k - j) for j in range(k + 1)), Fraction(0))


def conv_t(p: int, k: int) -> Fraction:
    """t_k = sum_j c_{2j+1} * c'_{2(k-j-1)+1}: the even-coefficient convolution
    of the trace polynomial with the cofactor polynomial."""
    _check_p(p)
    if not 2 <= k <= p - 1:
        raise ValueError(f"k must satisfy 2 <= k <= p-1, got k={k}, p={p}")
    return sum(
        (coeff_c(p, j) * coeff_cprime(p, k - j - 1) for j in range(k)), Fraction(0)
    )


def vanishing_sum(p: int, j: int) -> Fraction:
    """The alternating binomial sum that the expansion coefficients satisfy:

        sum_{k=0}^{j} (-1)^k (p/(p-k)) binom(p-k, k) binom(p-2k, j-k)

    equals 1 for j = 0 and vanishes for 1 <= j <= (p-1)/2.
    """
    _check_p(p)
    if j < 0 or j > (p - 1) // 2:
        raise ValueError(f"j must satisfy 0 <= j <= (p-1)/2, got j={j}, p={p}")
    total = Fraction(0)
    for k in range(j + 1):
        sign = -1 if k % 2 else 1
        total += sign * Fraction(p, p - k) * binom(p - k, k) * binom(p - 2 * k, j - k)
    return total


# Recurrence certificates.  Both convolution families satisfy linear
# recurrences with these polynomial coefficients in (p, k).


def s_recurrence_coeffs(p: int, k: int) -> tuple[int, int]:
    """(A, B) with A*s_{k+1} + B*s_k = 0 for 1 <= k <= p-2."""
    return 4 * k * k + 6 * k + 2, -k * k - 2 * p + 1 + p * p


def t_recurrence_coeffs(p: int, k: int) -> tuple[int, int, int]:
    """(a, b, c) with a*t_{k+2} + b*t_{k+1} + c*t_k = 0 for 2 <= k <= p-3."""
    a = 16 * k**3 + 64 * k**2 + 76 * k + 24
    b = -8 * k**3 - 12 * k**2 - 8 * p * k + 4 * p * p * k + 2 * p * p - 4 * p + 2
    c = k**3 - k**2 - p * p * k + 2 * p * k - k + p * p - 2 * p + 1
    return a, b, c
