from hypothesis import given, strategies as st

from wreathdistort.laurent import ONE, ZERO, LocalizedLaurentPoly as L, one_plus_x_power

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4)
elems = st.builds(L, polys, st.integers(0, 3))


def test_canonical_cancellation():
    # (1 + 2x + x^2) / (1 + x)^3 = 1 / (1 + x)
    q = L({0: 1, 1: 2, 2: 1}, 3)
    assert q == L({0: 1}, 1)
    assert q.d == 1 and q.numerator == ((0, 1),)


def test_zero_and_one():
    assert L({}, 5) == ZERO and ZERO.d == 0
    assert L({0: 1}) == 1 == ONE
    assert str(ZERO) == "0"
    assert str(L({-1: 2, 2: -1}, 2)) == "(2x^-1 - x^2)/(1+x)^2"


def test_negative_denominator_power_multiplies_out():
    assert L({0: 1}, -2) == L(one_plus_x_power(2))


def test_monomial_units():
    u = L.monomial(2, -3)
    assert u * L.monomial(-2, 3) == ONE
    assert L.monomial(0, 2) == L({0: 1, 1: 2, 2: 1})


@given(elems, elems, elems)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * b == b * a


@given(elems, st.integers(-3, 3), st.integers(-3, 3))
def test_times_unit_matches_multiplication(a, i, j):
    assert a.times_unit(i, j) == a * L.monomial(i, j)


@given(elems)
def test_canonical_form(a):
    if a.d:
        # p(-1) != 0 exactly when 1 + x does not divide p
        assert sum(c * (-1) ** (e % 2) for e, c in a.numerator) != 0
    assert all(c for _, c in a.numerator)
    assert hash(a) == hash(L(dict(a.numerator), a.d))


@given(elems, elems)
def test_equality_is_ring_equality(a, b):
    # cross-multiplied difference vanishes iff canonical forms agree
    d = max(a.d, b.d)
    lhs = L(a.poly) * L(one_plus_x_power(d - a.d))
    rhs = L(b.poly) * L(one_plus_x_power(d - b.d))
    assert (a == b) == (lhs == rhs)
