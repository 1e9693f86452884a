"""Exact maximum intersecting families by branch and bound, and the circle bound.

Run: python demos/04_exact_search.py   (about half a minute)
"""

from signedekr.core import Params, c_size, e_size, p_size
from signedekr.search import circle_alpha_check, m_exact, result_line

print("n  k   e    p    c    m")
for n in range(4, 9):
    res = m_exact(Params(n, 2, 1))
    print(f"{n}  2  {e_size(n, 2):3d}  {p_size(n, 2):3d}  {c_size(n, 2):3d}  {res.alpha:3d}")
    print("   ", result_line(Params(n, 2, 1), res))

print("\nstars win for l = 0:")
for n, k in [(6, 3), (8, 4)]:
    print("   ", result_line(Params(n, k, 0), m_exact(Params(n, k, 0))))

print("\nthe signed circle: at most k of its n vectors fit in one family")
for n, k in [(4, 2), (5, 2), (6, 3), (7, 3), (8, 3)]:
    r = circle_alpha_check(n, k)
    print(f"   n={n} k={k}: alpha={r.lhs}, averaged bound {r.details['averaged_bound']}"
          f" = e = {r.details['e']}")
