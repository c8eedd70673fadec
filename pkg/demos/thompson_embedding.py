"""
Z wr Z inside Thompson's group F
================================

``a`` goes to ``x1 x2 x1^-2`` and ``t`` to ``x0``.  We look at the tree pair
diagrams of a few images, count carets, and compare word lengths on both
sides using breadth-first search in F.
"""
from wreathdistort import embedding, oracle, thompson, wreath

for word in ["a", "t", "a t a T", "a^2 T a^-1 t^3"]:
    w = wreath.evaluate_word(word)
    p = embedding.phi(w)
    nf = wreath.normal_form(w)
    print(f"{word:>16} -> {str(p):<36} carets {thompson.caret_count(p):>2}"
          f"  (closed form {embedding.exact_caret_count(nf)})")

# images of the lamps a_n commute, as they must
p, q = embedding.phi(wreath.gen(0)), embedding.phi(wreath.gen(3))
print("phi(a_0), phi(a_3) commute:", p * q == q * p)

# word lengths in F up to radius 10 (a few seconds)
print()
print("|w|  |phi(w)|_F  element")
for r in embedding.distortion_report(2, 10):
    print(f"{r.len_H:>3}  {str(r.len_F):>10}  {r.element}")

# the image of a alone already needs six generators of F
print()
print("|phi(a)|_F =", oracle.distance(thompson.cayley_group(), embedding.PHI_A, 8))
