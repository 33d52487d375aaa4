#!/usr/bin/env python3
"""Write data/reference_zeros.txt: ordinates of the first nontrivial zeta
zeros, 15 decimal places, one per line.  Source: mpmath.zetazero."""

import mpmath as mp

mp.mp.dps = 30
COUNT = 50

with open("../data/reference_zeros.txt", "w") as f:
    f.write("# ordinates of the first %d nontrivial zeta zeros\n" % COUNT)
    f.write("# generated by tools/gen_reference_zeros.py (mpmath.zetazero)\n")
    for n in range(1, COUNT + 1):
        z = mp.zetazero(n)
        f.write(mp.nstr(z.imag, 18, strip_zeros=False) + "\n")
print("wrote data/reference_zeros.txt")
