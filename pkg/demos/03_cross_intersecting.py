"""Cross-intersecting pairs of lex segments and the bounds built on them.

Run: python demos/03_cross_intersecting.py
"""

from signedekr import bounds
from signedekr.core import elements_of
from signedekr.lexshadow import enumerate_maximal_lex_pairs, lex_segment, segment_length

n, k = 6, 2
print("first five 2-subsets of [6] in lex order:",
      [elements_of(m) for m in lex_segment(n, k, 5).members])

print("\nmaximal cross-intersecting segment pairs, a=b=2, n=4:")
for P, Q in enumerate_maximal_lex_pairs(2, 2, 4):
    print(f"  P={elements_of(P)} Q={elements_of(Q)}  "
          f"|A|={segment_length(P, 2, 4)} |B|={segment_length(Q, 2, 4)}")

print("\nmax |A| + c|B| with B inside A against the closed form:")
for n, k, c in [(6, 2, 2), (7, 3, 3), (8, 3, 2), (9, 3, 1)]:
    r = bounds.thm7_verify(n, k, c)
    print(f"  n={n} k={k} c={c}: search {r.lhs}, formula {r.rhs} ({r.rhs_argmax})")

print("\nwith |B| capped, the three-term bound:")
for n, k, c, i in [(7, 3, 3, 2), (8, 3, 1, 3), (8, 3, 3, 3)]:
    r = bounds.thm10_verify(n, k, c, i)
    print(f"  n={n} k={k} c={c} i={i}: search {r.lhs} <= {r.rhs} ({r.rhs_argmax})")

# Raising the cap by x: the bound adds k*x to the first term.  That is enough
# while c <= k but not beyond; adding c*x instead holds throughout.
r_k = bounds.cor_cross3_verify(5, 2, 5, 2, 1)
r_c = bounds.cor_cross3_verify(5, 2, 5, 2, 1, slack_weight=5)
print(f"\nn=5 k=2 c=5 i=2 x=1: search {r_k.lhs}; k*x form {r_k.rhs}, c*x form {r_c.rhs}")
