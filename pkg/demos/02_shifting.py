"""Left compression: shifting a random family to a fixed point.

Run: python demos/02_shifting.py
"""

import random

from signedekr.core import Params, format_signed_family, min_pair_product
from signedekr.shifting import ShiftPair, fully_shift, is_shifted, shift_family, shift_potential
from signedekr.suites import random_family

rng = random.Random(5)
fam = random_family(Params(6, 2, 1), rng, max_size=8)
print("before:", len(fam), "members, min product", min_pair_product(fam),
      "potential", shift_potential(fam.pairs))
print(format_signed_family(fam), end="")

one = shift_family(fam, ShiftPair(1, 6))
print("after the (1,6)-shift, potential", shift_potential(one.pairs))

out = fully_shift(fam)
print("\nfixed point:", len(out), "members, min product", min_pair_product(out),
      "shifted", is_shifted(out))
print(format_signed_family(out), end="")
