import itertools

import pytest
from hypothesis import given, strategies as st

from cylindric import roots as rt
from cylindric.diagrams import CylindricDiagram, content, generation, random_tableau_stream, window
from cylindric.hooks import (
    arm, covers_of, d_set_window, heap_order_labels, heap_order_on_integers, heap_order_roots, hk, hk_recursive, hkr,
    in_monoid, leg, leq_heap_roots, leq_modified, leq_ordinary, pi_set, pi_step_closure, predominant_weight, to_dot,
)
from cylindric.lattice import leq_cyl, lt_cyl
from cylindric.roots import RootVector
from cylindric.verify import TEST_DIAGRAMS


def hook_by_counting(d, x):
    """Count the hook by scanning planar lifts: same row to the right, same column downward."""
    c = [0] * d.kappa
    a, b = x.a, x.b
    for bb in range(b, d.lam[a - 1] + 1):
        c[content(d, d.cell(a, bb))] += 1
    aa = a + 1
    while d.cell(aa, b) in d:
        c[content(d, d.cell(aa, b))] += 1
        aa += 1
    return RootVector(d.kappa, tuple(c))


def test_worked_example():
    d = CylindricDiagram.make((4, -5), (5, 3, 3, 1))
    x = d.cell(2, -4)
    assert str(hk(d, x)) == "δ + α0 + α1 + α6 + α7 + α8"
    assert hk(d, x) == rt.alpha_interval(-12, 2, 9)


def test_incomparable_pair_example():
    d = CylindricDiagram.make((2, -2), (4, 2))
    x, y = d.cell(1, 2), d.cell(2, 1)
    assert hk(d, x) == rt.delta(4) + rt.simple_root(3, 4)
    assert hk(d, y) == RootVector(4, (1, 0, 1, 1))
    assert leq_ordinary(hk(d, y), hk(d, x))
    assert not leq_modified(d, hk(d, y), hk(d, x))
    assert not leq_heap_roots(d, hk(d, y), hk(d, x))


def test_coincident_neighbours_count_twice():
    d = CylindricDiagram.make((1, -1), (0,))
    x = d.cell(1, -1)
    assert hk(d, x) == RootVector(2, (1, 2))
    assert hk_recursive(d, x) == hk(d, x)
    assert len(arm(d, x)) == len(leg(d, x)) == 1


def test_hook_errors():
    d = CylindricDiagram.make((2, -2), (4, 2))
    with pytest.raises(ValueError):
        hk(d, d.cell(1, 5))
    with pytest.raises(ValueError):
        hkr(d, window(d, 0), d.cell(1, -10))


def test_minimal_bottom_cell_hook_is_simple(diagram):
    d = diagram
    for x in d.bottom.minimal:
        assert hk(d, x) == rt.simple_root(content(d, x), d.kappa)


def test_hooks_against_oracles(diagram):
    d = diagram
    delta = rt.delta(d.kappa)
    cells = window(d, 3)
    for x in cells:
        h = hk(d, x)
        assert h == hook_by_counting(d, x) == hk_recursive(d, x)
        assert rt.is_positive_real_root(h)
        assert rt.null_multiplicity(h) == generation(d, x)
        assert hk(d, x - (0, d.ell)) == hk(d, x - (d.m, 0)) == h + delta
        assert rt.pairing_weight_coroot(predominant_weight(d), h) == -1


def test_hkr_on_random_tableaux(diagram):
    d = diagram
    for seed in range(3):
        stream = random_tableau_stream(d, seed)
        t = [next(stream) for _ in range(15)]
        for x in t:
            assert hkr(d, t, x) == hk(d, x)


def test_d_set_monotone(diagram):
    for depth in range(3):
        assert d_set_window(diagram, depth) <= d_set_window(diagram, depth + 1)


def test_pi_set_examples():
    d = CylindricDiagram.make((4, -5), (9, 7, 7, 5))
    pi = pi_set(d)
    fmt = lambda xs: sorted(str(a) for a in xs)
    assert fmt(pi.pi0) == ["α3", "α5", "α7"]
    assert fmt(pi.pi_arm) == ["α0 + α1", "α2 + α3 + α4", "α6 + α7 + α8"]
    assert fmt(pi.pi_leg) == ["α0 + α8", "α1 + α2", "α4 + α5 + α6"]
    # the same content pattern one generation lower gives the same sets
    assert pi_set(CylindricDiagram.make((4, -5), (0, -2, -2, -4))) == pi


def test_pi_set_of_shape_5442():
    # frozen output for (5,4,4,2); this shape does not give the nine-residue sets above
    d = CylindricDiagram.make((4, -5), (5, 4, 4, 2))
    pi = pi_set(d)
    fmt = lambda xs: sorted(str(a) for a in xs)
    assert fmt(pi.pi0) == ["α0", "α2", "α6"]
    assert fmt(pi.pi_arm) == ["α0 + α1 + α8", "α3 + α4", "α5 + α6 + α7"]
    assert fmt(pi.pi_leg) == ["α1 + α2 + α3", "α4 + α5", "α7 + α8"]
    assert {content(d, x) for x in d.bottom.minimal} == {1, 4, 7}
    assert {content(d, x) for x in d.bottom.maximal} == {3, 5, 8}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pi_set_single_row(n):
    d = CylindricDiagram.make((1, -(n - 1)), (n,))
    pi = pi_set(d)
    assert set(pi.pi_arm) == {rt.delta(n)}
    assert set(pi.pi_leg) == {rt.simple_root(0, n) + rt.simple_root(n - 1, n)}
    assert set(pi.pi0) == {rt.simple_root(i, n) for i in range(1, n - 1)}
    lam = predominant_weight(d)
    assert [i for i, a in enumerate(lam.fund_coeffs) if a] == [0, n - 1]


def test_pi_set_structure(diagram):
    d = diagram
    pi = pi_set(d)
    b = d.bottom
    assert len(pi.members) == d.kappa
    assert len(pi.pi_arm) == len(pi.pi_leg) == len(b.maximal)
    for g in pi.members:
        n = rt.null_multiplicity(g)
        assert rt.is_positive_real_root(g) or g == rt.delta(d.kappa) * n
    for g in pi.pi0:
        s = rt.support(g, b)
        assert not s & b.maximal and not s & b.minimal
    for g in pi.pi_arm + pi.pi_leg:
        s = rt.support(g, b)
        assert len(s & b.maximal) == len(s & b.minimal) == 1


def test_in_monoid():
    gens = [RootVector(3, (1, 1, 0)), RootVector(3, (0, 1, 1))]
    assert in_monoid(RootVector(3, (1, 2, 1)), gens)
    assert not in_monoid(RootVector(3, (1, 1, 1)), gens)
    assert in_monoid(rt.zero(3), gens)
    with pytest.raises(ValueError):
        in_monoid(RootVector(3, (1, 1, 1)), [rt.zero(3)])


@given(st.lists(st.integers(0, 3), min_size=4, max_size=4), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_in_monoid_matches_enumeration(c, target):
    d = CylindricDiagram.make((2, -2), (4, 2))
    gens = list(pi_set(d).members)
    reachable = set()
    for coeffs in itertools.product(range(4), repeat=len(gens)):
        v = rt.zero(4)
        for k, g in zip(coeffs, gens):
            v = v + g * k
        if max(v.coeffs) <= 3:
            reachable.add(v)
    t = RootVector(4, tuple(target))
    assert in_monoid(t, gens) == (t in reachable)


def test_orders_agree_on_small_window(diagram):
    d = diagram
    cells = window(d, 1)
    hks = {x: hk(d, x) for x in cells}
    heap = heap_order_roots(list(hks.values()))
    steps = pi_step_closure(d, list(hks.values()))
    labels = heap_order_labels(d, cells)
    for (i, x), (j, y) in itertools.product(enumerate(cells, 1), repeat=2):
        le = leq_cyl(x, y)
        assert le == leq_modified(d, hks[x], hks[y])
        assert le == ((hks[x], hks[y]) in heap) == ((hks[x], hks[y]) in steps)
        assert le == ((i, j) in labels) == heap_order_on_integers(d, cells, i, j)
        if lt_cyl(x, y):
            assert leq_ordinary(hks[x], hks[y])
            assert rt.null_multiplicity(hks[x]) <= rt.null_multiplicity(hks[y])


def test_heap_label_range():
    d = CylindricDiagram.make((2, -2), (4, 2))
    with pytest.raises(ValueError):
        heap_order_on_integers(d, window(d, 0), 0, 1)


def test_covers_and_dot():
    d = CylindricDiagram.make((2, -3), (5, 4))
    cells = window(d, 1)
    leq = {(x, y) for x in cells for y in cells if leq_cyl(x, y)}
    covers = covers_of(cells, leq)
    for x, y in covers:
        assert (content(d, x) - content(d, y)) % d.kappa in (1, d.kappa - 1)
    dots = {order: to_dot(d, 1, order) for order in ("diagram", "modified", "heap", "tableau")}
    assert all(s.count("->") == len(covers) for s in dots.values())
    assert '"(1,5):4"' in dots["diagram"]
    with pytest.raises(ValueError):
        to_dot(d, 1, "nope")
