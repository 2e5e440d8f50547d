#!/usr/bin/env python3
"""Walk through the degree reduction of y = (2 + sqrt(5))^(1/5).

This instance has D = d^2 - R = -1, so z = -1 is an exact rational 5th root
of D.  The trace polynomial f turns out to have no rational zero, so the
radical is *reduced* (degree 10 -> degrees <= 5) but not denested: y is a
polynomial in z, u, sqrt(5) where u is a root of f.
"""

from radreduce import reduce_radical

r = reduce_radical(5, 2, 5)

print("instance: p = 5, d = 2, R = 5")
print(f"norm D = d^2 - R = {r.params.D}")
print()
print(f"defining polynomial  g = {r.g}")
print(f"trace polynomial     f = {r.f}")
print(f"sqrt-part polynomial A = {r.A}")
print()
print(f"z (rational 5th root of D): {r.z_description}")
print(f"u (rational zero of f):     {r.u_description}")
print()
print("f has no rational zero, so no radical denesting pops out here;")
print("the reduction still expresses y through z, a root u of f, and sqrt(5).")
print()
print("necessary conditions for y to have degree 2p:")
for key, value in r.conditions.to_json().items():
    print(f"  {key}: {value}")
