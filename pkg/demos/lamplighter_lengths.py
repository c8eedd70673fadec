"""
Word length in Z wr Z
=====================

An element is a finite row of integer counters plus a cursor.  Its word
length has a closed form, and here we check it against a brute-force search.
"""
from wreathdistort import oracle, wreath

# a word is read left to right as instructions: t moves the cursor right,
# a adds one to the counter under the cursor
w = wreath.evaluate_word("t^2 a^3 t a^-2 t a t^-7 a^2 t")
print("counters:   ", w.counter_map, "cursor:", w.cursor)
print("normal form:", wreath.normal_form(w))
print("length:     ", wreath.word_length(w))

# a geodesic visits the positive side first when the cursor ends up left of zero
g = wreath.geodesic_word(w)
print("geodesic:   ", g)
assert wreath.evaluate_word(g) == w

# the closed form agrees with breadth-first search on a whole ball
b = oracle.ball(wreath.cayley_group(), 6, keep_elements=True)
same = sum(wreath.word_length(e) == b.distances[k] for k, e in b.elements.items())
print(f"formula = BFS on {same} of {len(b)} elements of the radius-6 ball")
print("sphere sizes:", b.sphere_sizes)
