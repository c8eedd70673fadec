import itertools
from collections import Counter

import pytest
from hypothesis import given

from wreathdistort import embedding, oracle, thompson, wreath
from wreathdistort.embedding import OutsidePaperCase
from wreathdistort.thompson import CaretType as C
from wreathdistort.wreath import IDENTITY, WreathElement, gen, t_power

from strategies import wreath_elements


def nf_of(counters, m=0):
    return wreath.normal_form(WreathElement.make(counters, m))


def test_images_of_generators():
    assert embedding.phi(gen(0)) == thompson.evaluate_word("x1 x2 x1^-2")
    assert embedding.phi(t_power(1)) == thompson.x(0)
    assert embedding.phi(IDENTITY) == thompson.IDENTITY


def test_image_of_a_has_four_carets():
    assert thompson.caret_count(embedding.PHI_A) == 4


@given(wreath_elements, wreath_elements)
def test_homomorphism(u, v):
    assert embedding.phi(u * v) == embedding.phi(u) * embedding.phi(v)


def test_images_of_lamps_commute():
    imgs = [embedding.phi(gen(n)) for n in range(-4, 5)]
    for p, q in itertools.combinations(imgs, 2):
        assert p * q == q * p


def test_injective_on_radius_5_ball():
    b = oracle.ball(wreath.cayley_group(), 5, keep_elements=True)
    images = {embedding.phi(w) for w in b.elements.values()}
    assert len(images) == len(b)


def test_exact_caret_count_on_radius_6_ball():
    # covers one-sided elements and pure cursor moves as well
    b = oracle.ball(wreath.cayley_group(), 6, keep_elements=True)
    for w in b.elements.values():
        assert thompson.caret_count(embedding.phi(w)) == embedding.exact_caret_count(wreath.normal_form(w))


@given(wreath_elements)
def test_exact_caret_count_random(w):
    assert thompson.caret_count(embedding.phi(w)) == embedding.exact_caret_count(wreath.normal_form(w))


def test_stated_formula_values():
    nf = nf_of({0: 1, -1: 1})
    assert embedding.predicted_caret_count(nf) == 7
    assert thompson.caret_count(embedding.phi(nf.to_element())) == 7
    assert embedding.predicted_caret_count(nf_of({0: 1, -1: 1}, 3)) == 9


def test_stated_formula_cursor_case_differs_from_images():
    # the image of a_0 a_-1 t^3 has one more caret than the stated correction gives
    nf = nf_of({0: 1, -1: 1}, 3)
    assert thompson.caret_count(embedding.phi(nf.to_element())) == 10
    assert embedding.exact_caret_count(nf) == 10


def test_stated_formula_exact_when_cursor_is_zero():
    for nf, img in embedding.two_sided_family(max_index=2, max_exp=2, max_cursor=0):
        assert thompson.caret_count(img) == embedding.predicted_caret_count(nf)


@pytest.mark.parametrize("counters", [{0: 1}, {-2: 1}, {}])
def test_one_sided_elements_are_outside_stated_case(counters):
    with pytest.raises(OutsidePaperCase):
        embedding.predicted_caret_count(nf_of(counters))


def test_stated_weight_values():
    assert embedding.predicted_weight(nf_of({0: 1, -1: 1})) == 12
    fig1 = wreath.evaluate_word(wreath.FIG1_WORD)
    assert embedding.predicted_weight(wreath.normal_form(fig1 * t_power(2))) == 52
    with pytest.raises(OutsidePaperCase):
        embedding.predicted_weight(wreath.normal_form(fig1))


def census(nf):
    k, l = len(nf.positive), len(nf.negative)
    mass = sum(abs(e) for _, e in nf.positive) + sum(abs(f) for _, f in nf.negative)
    return {"L0": 1, "LL": nf.i_k, "R*": nf.j_l, "R0": 1, "I0I0": k + l, "heavy": mass}


def observed(p):
    c = Counter(thompson.classify_carets(p))
    assert set(c) <= set(thompson.PAIRING_WEIGHTS)
    return {
        "L0": c[C.L0, C.L0], "LL": c[C.LL, C.LL], "R*": c[C.RStar, C.RStar], "R0": c[C.R0, C.R0],
        "I0I0": c[C.I0, C.I0], "heavy": c[C.I0, C.IR] + c[C.IR, C.I0],
    }


def test_caret_pairing_census_with_cursor_zero():
    for nf, img in embedding.two_sided_family(max_index=2, max_exp=2, max_cursor=0):
        assert observed(img) == census(nf)


def test_weight_exceeds_stated_total_by_two():
    for nf, img in embedding.two_sided_family(max_index=2, max_exp=2, max_cursor=0):
        assert thompson.fordham_weight(img) == embedding.predicted_weight(nf) + 2


def test_report_fields_for_short_elements():
    recs = embedding.distortion_report(1, 6)
    by = {r.element: r for r in recs}
    assert by["1"].len_H == 0 and by["1"].len_F == 0 and by["1"].sandwich_ok
    assert by["t"].len_F == 1 and by["t"].sandwich_ok
    a = by["a_0"]
    assert (a.len_H, a.carets, a.len_F, a.weight) == (1, 4, 6, 6)
    assert a.sandwich_ok is False
    assert [r.len_H for r in recs] == sorted(r.len_H for r in recs)


def test_unknown_length_is_settled_only_past_the_bound():
    r = embedding.DistortionRecord("w", 2, 0, None, 0, oracle.Unknown(5), None)
    assert r.sandwich_ok is None
    r.len_F = oracle.Unknown(8)
    assert r.sandwich_ok is False


def test_report_limit_keeps_partial_records():
    with pytest.raises(embedding.ReportIncomplete) as exc:
        embedding.distortion_report(1, 8, limit=50)
    assert len(exc.value.records) == 5
