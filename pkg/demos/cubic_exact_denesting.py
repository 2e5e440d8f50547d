#!/usr/bin/env python3
"""A fully exact denesting: (-7 + sqrt(50))^(1/3) = sqrt(2) - 1.

Everything here happens in exact arithmetic in the field Q(sqrt(50)); no
floating point is involved.  The branch value -1 + (1/5)*sqrt(50) is exactly
-1 + sqrt(2), and cubing it in QuadExt recovers -7 + sqrt(50) on the nose.
"""

from radreduce import QuadExt, reduce_radical

r = reduce_radical(3, -7, 50)

print("instance: p = 3, d = -7, R = 50, norm D =", r.params.D)
print(f"trace polynomial f = {r.f}   (zero: u = {r.u})")
print(f"z = {r.z}  (since z^3 = D)")
print()

plus, minus = r.branch_values
print(f"branch values in Q(sqrt(50)):  {plus}   and   {minus}")
print("note (1/5)*sqrt(50) = sqrt(2), so the plus branch is -1 + sqrt(2)")
print()

cube = plus**3
print(f"({plus})^3 = {cube}")
assert cube == QuadExt(-7, 1, 50)
print("which is exactly d + sqrt(R): the denesting is certified symbolically.")
