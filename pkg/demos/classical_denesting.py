#!/usr/bin/env python3
"""Classical square-root denestings, certified exactly.

sqrt(d + sqrt(R)) splits into two simple square roots exactly when d^2 - R
is the square of a rational; the fourth-root variant needs d^2 - R to be a
rational *fourth* power.  The certificates are pure rational identities,
checked without any floating point (a numeric cross-check is shown anyway).
"""

from fractions import Fraction

from radreduce import euclid_biquadratic, euclid_denest
from radreduce.numeric import eval_dual
from radreduce import exprtree as et
from mpmath import mp

print("square-root denesting attempts:")
for d, R in [(3, 5), (2, 3), (1, Fraction(1, 2)), (5, 13)]:
    den = euclid_denest(d, R)
    if den is None:
        print(f"  sqrt({d} + sqrt({R})): d^2 - R = {Fraction(d)**2 - R} is not a square, no denesting")
    else:
        print(f"  sqrt({d} + sqrt({R})) = sqrt({den.x1}) + sqrt({den.x2})"
              f"   [certified: {den.certify(d, R)}]")

print()
print("fourth-root denesting:")
den4 = euclid_biquadratic(7, 48)
print(f"  (7 + sqrt(48))^(1/4) = sqrt(sqrt({den4.inner}) + {den4.half_k})"
      f" + sqrt(sqrt({den4.inner}) - {den4.half_k})   [certified: {den4.certify(7, 48)}]")

print()
print("numeric cross-check at 256 bits:")
lhs = eval_dual(euclid_denest(3, 5).expr(), 256)
rhs = eval_dual(et.Sqrt(et.add(et.rat(3), et.Sqrt(et.rat(5)))), 256)
with mp.workprec(300):
    print(f"  | (sqrt(5/2) + sqrt(1/2)) - sqrt(3 + sqrt(5)) | = {mp.nstr(abs(lhs - rhs), 5)}")
