"""
Exponential distortion in Baumslag's group
==========================================

Conjugating ``a`` by ``s^n`` spreads it into a binomial row of counters, so
a word of length ``2n + 1`` in the big group needs ``2n + 2^n`` letters in
Z wr Z.
"""
from wreathdistort import baumslag, wreath

# the three relators hold in the affine model
for name, value in baumslag.relators().items():
    print(f"{name:>16} = {value}")

print()
for n in range(6):
    conj = baumslag.s_conjugate(wreath.gen(0), n)
    print(f"a^(s^{n}) = {wreath.normal_form(conj)}")

print()
print(" n  |w|_G  |w|_H  ratio")
for row in baumslag.distortion_table(12):
    print(f"{row.n:>2}  {row.len_G_witness:>5}  {row.len_H:>5}  {row.ratio}")
