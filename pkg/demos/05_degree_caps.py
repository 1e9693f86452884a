"""Intersecting k-sets with a cap on the largest degree.

Run: python demos/05_degree_caps.py
"""

from signedekr.bounds import cordeg_check, frankl_g, frankl_h, frankl_verify
from signedekr.core import elements_of

n, k = 7, 3
for i in (3, 4):
    r = frankl_verify(n, k, i)
    print(f"i={i}: cap h={frankl_h(n, k, i)}, bound g={frankl_g(n, k, i)}, "
          f"largest family {r.lhs} with degree {r.details['degree']}")
    print("   ", [elements_of(m) for m in r.witness.members])
    c = cordeg_check(r.witness, 4)
    print(f"    excess |F|-d(F) = {c.details['excess']} (needs {c.details['required_excess']}),"
          f" size bound holds: {c.ok}")

print("\ng(i) at n=9, k=4:", {i: frankl_g(9, 4, i) for i in range(3, 6)})
