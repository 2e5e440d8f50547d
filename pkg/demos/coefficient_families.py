#!/usr/bin/env python3
"""The coefficient families and their recurrence certificates, at p = 11.

All five families are integers given by binomial closed forms.  The even
coefficients of the squared sqrt-part polynomial (s_k) and of the product
f*f' (t_k) collapse to the same closed form u_k, which satisfies a two-term
recurrence; t_k additionally satisfies a three-term recurrence.  These are
the certified facts that prove the fundamental identity degreewise.
"""

from radreduce.coeffs import (
    coeff_a,
    coeff_c,
    coeff_cprime,
    coeff_u,
    conv_s,
    conv_t,
    s_recurrence_coeffs,
    system_C,
)

p = 11
half = (p - 1) // 2

print(f"p = {p}")
print(f"trace polynomial odd coefficients c_(2k+1):  {[str(coeff_c(p, k)) for k in range(half + 1)]}")
print(f"sqrt-part even coefficients a_(2k):          {[str(coeff_a(p, k)) for k in range(half + 1)]}")
print(f"cofactor odd coefficients c'_(2j+1):         {[str(coeff_cprime(p, j)) for j in range(half)]}")
print(f"expansion coefficients C_p..C_1 (system):    {[str(c) for c in system_C(p)]}")
print()

print(" k   s_k = t_k = u_k")
for k in range(1, p):
    s = conv_s(p, k)
    u = coeff_u(p, k)
    t = conv_t(p, k) if k >= 2 else None
    tag = "" if (s == u and (t is None or t == u)) else "   MISMATCH"
    print(f"{k:2d}   {s}{tag}")

print()
print("two-term recurrence (4k^2+6k+2) s_(k+1) + (p^2 - 2p + 1 - k^2) s_k = 0:")
for k in range(1, 4):
    ca, cb = s_recurrence_coeffs(p, k)
    total = ca * conv_s(p, k + 1) + cb * conv_s(p, k)
    print(f"  k = {k}: {ca} * {conv_s(p, k + 1)} + {cb} * {conv_s(p, k)} = {total}")
