from hypothesis import strategies as st

from wreathdistort.wreath import WreathElement

counters = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=5)
wreath_elements = st.builds(WreathElement.make, counters, st.integers(-6, 6))

f_letters = st.lists(st.tuples(st.integers(0, 4), st.sampled_from([-2, -1, 1, 2])), max_size=6)
