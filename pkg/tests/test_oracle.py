import pytest

from wreathdistort import oracle, thompson, wreath
from wreathdistort.oracle import LimitExceeded, Unknown


def test_radius_zero():
    for group in (wreath.cayley_group(), thompson.cayley_group()):
        b = oracle.ball(group, 0)
        assert b.sphere_sizes == [1] and list(b.distances.values()) == [0]


def test_wreath_spheres():
    b = oracle.ball(wreath.cayley_group(), 4)
    assert b.sphere_sizes[:2] == [1, 4]
    assert sum(b.sphere_sizes) == len(b)


def test_adjacent_distances_differ_by_at_most_one():
    g = thompson.cayley_group()
    b = oracle.ball(g, 7, keep_elements=True)
    for k, p in b.elements.items():
        for _, s in g.generators:
            nk = g.key(g.step(p, s))
            if nk in b.distances:
                assert abs(b.distances[nk] - b.distances[k]) <= 1


def test_distance_and_unknown():
    g = wreath.cayley_group()
    assert oracle.distance(g, wreath.IDENTITY, 0) == 0
    assert oracle.distance(g, wreath.gen(3), 4) == Unknown(4)
    assert str(Unknown(4)) == ">4"


def test_limit_carries_partial_ball():
    with pytest.raises(LimitExceeded) as exc:
        oracle.ball(thompson.cayley_group(), 6, limit=100)
    part = exc.value.partial
    assert part.radius == 3 and part.sphere_sizes == [1, 4, 12, 36]


def test_generator_order_does_not_change_distances():
    g = thompson.cayley_group()
    a = oracle.ball(g, 5)
    b = oracle.ball(g.shuffled([3, 1, 0, 2]), 5)
    assert a.distances == b.distances


def test_workers_give_identical_csv():
    g = thompson.cayley_group()
    one = list(oracle.ball_csv(oracle.ball(g, 5), g.label))
    two = list(oracle.ball_csv(oracle.ball(g, 5, workers=2), g.label))
    assert one == two
