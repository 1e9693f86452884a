"""Signed sets, their scalar products, and the three intersecting constructions.

Run: python demos/01_signed_families.py
"""

from signedekr.core import (Params, SignedSet, construct_C, construct_E, construct_P,
                            format_signed_family, generate_V, is_intersecting, min_pair_product,
                            parse_signed_family, scalar_product)

# A signed set over [5] with two +1 coordinates and one -1 coordinate.
v = SignedSet.from_elements((1, 2), (3,), 5)
w = SignedSet.from_elements((3, 4), (1,), 5)
print("v =", v, "  w =", w, "  <v,w> =", scalar_product(v, w))

# -2 is as low as it goes in V(5,2,1); a family avoiding it is "intersecting".
p = Params(5, 2, 1)
V = generate_V(p)
print(f"|V(5,2,1)| = {len(V)}, minimum pairwise product {min_pair_product(V)}")

for name, build in [("E", construct_E), ("P", construct_P), ("C", construct_C)]:
    fam = build(p)
    print(f"{name}(5,2,1): {len(fam):3d} members, intersecting={is_intersecting(fam)}")

# The text format round-trips exactly.
text = format_signed_family(construct_E(Params(4, 2, 1)))
print(text, end="")
assert parse_signed_family(text, n=4, k=2, l=1) == construct_E(Params(4, 2, 1))

# Above n = k^2 the lifted family C overtakes E.
for n in range(4, 9):
    e, c = len(construct_E(Params(n, 2, 1))), len(construct_C(Params(n, 2, 1)))
    print(f"n={n}: |E|={e:3d} |C|={c:3d}")
