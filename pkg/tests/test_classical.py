import itertools

import pytest

from cylindric import roots as rt
from cylindric.classical import cohk, embed, grassmannian, iota, reading_element, triangle_check
from cylindric.diagrams import canonical_tableau, content, is_ideal, standard_tableaux
from cylindric.weyl import inversion_set


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


ALL_SMALL = [p for n in range(1, 8) for p in partitions(n)]


def test_embed_single_box():
    sk = embed((1,))
    assert sk.diagram.kappa == 2 and len(sk.ideal) == 1
    assert content(sk.diagram, next(iter(sk.ideal.cells))) == 1


@pytest.mark.parametrize("lam", ALL_SMALL, ids=str)
def test_embed_contents_avoid_zero(lam):
    sk = embed(lam)
    d = sk.diagram
    assert len(sk.ideal) == sum(lam)
    assert is_ideal(d, sk.ideal.cells)
    assert all(1 <= content(d, x) <= d.kappa - 1 for x in sk.ideal.cells)
    # planar content b - a shifted by m
    assert all(content(d, x) == x.b - x.a + len(lam) for x in sk.ideal.cells)


def test_embed_rejects_bad_input():
    for lam, mu in [((2, 3), None), ((-1,), None), ((2, 1), (3,)), ((2,), (1, 1))]:
        with pytest.raises(ValueError):
            embed(lam, mu)
    assert embed((2, 1, 0, 0)).lam == (2, 1)
    assert len(embed((0,)).ideal) == 0 and grassmannian((0,)).is_identity()


@pytest.mark.parametrize("lam", ALL_SMALL, ids=str)
def test_grassmannian(lam):
    w = grassmannian(lam)
    assert w.length == sum(lam)
    assert len(w.right_descents()) == 1
    assert len(w.inverse().left_descents()) == 1
    # any tableau gives the same element
    sk = embed(lam)
    for t in itertools.islice(standard_tableaux(sk.ideal), 5):
        assert reading_element(sk, t) == w
        assert reading_element(sk, t, reverse=True) == w.inverse()


def test_cohk_single_box():
    sk = embed((1,))
    x = next(iter(sk.ideal.cells))
    assert cohk((1,), (x,), x) == rt.simple_root(1, 2)
    with pytest.raises(ValueError):
        cohk((1,), (), x)


def test_iota_on_simple_root():
    w = grassmannian((1,))
    assert iota(w, rt.simple_root(1, 2)) == rt.simple_root(1, 2)


def test_cohk_is_tableau_independent():
    lam = (3, 2)
    sk = embed(lam)
    tabs = list(standard_tableaux(sk.ideal))
    for x in sk.ideal.cells:
        assert len({cohk(lam, t, x) for t in tabs}) == 1
    assert {cohk(lam, tabs[0], x) for x in sk.ideal.cells} == inversion_set(grassmannian(lam).inverse())


@pytest.mark.parametrize("lam", ALL_SMALL, ids=str)
def test_triangle(lam):
    r = triangle_check(lam)
    assert all(r.values()), r


def test_skew_shape():
    sk = embed((3, 3, 1), (2, 1))
    d = sk.diagram
    assert len(sk.ideal) == 4
    assert d.ell == 3 and d.offset == 3
    assert all(1 <= content(d, x) <= d.kappa - 1 for x in sk.ideal.cells)
    w = reading_element(sk, canonical_tableau(sk.ideal))
    assert w.length == 4 and 0 not in w.reduced_word
