import itertools

import pytest
from hypothesis import given, strategies as st

from cylindric import roots as rt
from cylindric.diagrams import CylindricDiagram, window
from cylindric.hooks import hk, predominant_weight
from cylindric.roots import RootVector


def alpha_ij_oracle(kappa, bound):
    """All alpha_ij (i < j, j - i not a multiple of kappa) with coefficients <= bound."""
    out = set()
    for i in range(kappa):
        for j in range(i + 1, i + bound * kappa + 1):
            if (j - i) % kappa:
                a = rt.alpha_interval(i, j, kappa)
                if max(a.coeffs) <= bound:
                    out.add(a)
    return out


def test_cartan():
    assert rt.cartan_matrix(2) == ((2, -2), (-2, 2))
    assert rt.cartan_matrix(4)[0] == (2, -1, 0, -1)
    with pytest.raises(ValueError):
        rt.cartan_matrix(1)


@pytest.mark.parametrize("kappa", [2, 3, 4, 5])
def test_basic_pairings(kappa):
    d = rt.delta(kappa)
    for i in range(kappa):
        a = rt.simple_root(i, kappa)
        assert rt.pairing_root_coroot(a, a) == 2
        assert rt.pairing_root_coroot(d, a) == 0
        assert rt.reflect(a, i) == -a
    assert rt.pairing_weight_coroot(rt.fundamental_weight(0, kappa), rt.simple_root(0, kappa)) == 1


def test_nested_interval_pairing_vanishes():
    k = 5
    for i, kk, l, j in itertools.combinations(range(0, 5), 4):
        a, b = rt.alpha_interval(i, j, k), rt.alpha_interval(kk, l, k)
        assert rt.pairing_root_coroot(a, b) == 0


def test_interval_roots():
    assert rt.alpha_interval(0, 1, 4) == rt.simple_root(0, 4)
    assert rt.alpha_interval(0, 4, 4) == rt.delta(4)
    a = rt.alpha_interval(-12, 2, 9)
    assert str(a) == "δ + α0 + α1 + α6 + α7 + α8"
    assert rt.is_positive_real_root(a)
    with pytest.raises(ValueError):
        rt.alpha_interval(3, 3, 4)


def test_real_root_examples():
    assert rt.is_positive_real_root(rt.simple_root(2, 5))
    assert not rt.is_positive_real_root(rt.delta(5))
    assert rt.is_real_root(-rt.simple_root(1, 3))


def test_null_multiplicity():
    assert rt.null_multiplicity(rt.simple_root(0, 4)) == 0
    assert rt.null_multiplicity(RootVector(4, (1, 1, 1, 2))) == 1
    with pytest.raises(ValueError):
        rt.null_multiplicity(RootVector(3, (1, -1, 0)))


@pytest.mark.parametrize("kappa", [2, 3, 4, 5])
def test_norm_characterization_matches_intervals(kappa):
    bound = 3 if kappa <= 4 else 2
    by_norm = {a for a in rt.bounded_q_plus(kappa, bound) if rt.is_positive_real_root(a)}
    assert by_norm == alpha_ij_oracle(kappa, bound)


@pytest.mark.parametrize("kappa", [2, 3, 4, 5])
def test_positive_root_enumeration(kappa):
    depth = 2
    listed = list(rt.positive_roots_up_to(kappa, depth))
    assert len(listed) == len(set(listed)) == (depth + 1) * kappa * (kappa - 1)
    oracle = {a for a in alpha_ij_oracle(kappa, depth + 1) if rt.null_multiplicity(a) <= depth}
    assert set(listed) == oracle


@pytest.mark.parametrize("kappa", [2, 3, 4, 5])
def test_pairing_two_iff_congruent(kappa):
    bound = 3 if kappa <= 4 else 2
    real = [a for a in rt.bounded_q_plus(kappa, bound) if rt.is_positive_real_root(a)]
    real += [-a for a in real]
    for a, b in itertools.product(real, repeat=2):
        diff = a - b
        congruent = len(set(diff.coeffs)) == 1
        assert (rt.pairing_root_coroot(a, b) == 2) == congruent


@given(st.integers(2, 6), st.data())
def test_adding_delta_keeps_real_roots(kappa, data):
    i = data.draw(st.integers(0, kappa - 1))
    j = data.draw(st.integers(i + 1, i + 3 * kappa).filter(lambda j: (j - i) % kappa))
    k = data.draw(st.integers(-3, 3))
    a = rt.alpha_interval(i, j, kappa)
    assert rt.is_real_root(a + rt.delta(kappa) * k)


@given(st.integers(2, 6), st.data())
def test_reflection_is_involution_and_preserves_norm(kappa, data):
    c = data.draw(st.lists(st.integers(-4, 4), min_size=kappa, max_size=kappa))
    i = data.draw(st.integers(0, kappa - 1))
    a = RootVector(kappa, tuple(c))
    assert rt.reflect(rt.reflect(a, i), i) == a
    assert rt.norm(rt.reflect(a, i)) == rt.norm(a)


def test_json_round_trip():
    a = RootVector.of([1, 0, 2])
    assert RootVector.from_json(a.to_json()) == a
    assert str(rt.zero(3)) == "0"


@pytest.mark.parametrize("shape", [((2, -2), (4, 2)), ((4, -5), (5, 3, 3, 1)), ((4, -5), (9, 7, 7, 5))])
def test_predominance(shape):
    d = CylindricDiagram.make(*shape)
    lam = predominant_weight(d)
    assert sum(lam.fund_coeffs) == 0
    assert rt.pairing_weight_coroot(lam, rt.delta(d.kappa)) == 0
    for a in rt.positive_roots_up_to(d.kappa, 2):
        assert rt.pairing_weight_coroot(lam, a) >= -1


def test_supports():
    d = CylindricDiagram.make((4, -5), (9, 7, 7, 5))
    b = d.bottom
    assert rt.support(rt.delta(9), b) == frozenset(b.cells)
    assert rt.support(rt.simple_root(4, 9), b) == {b[4]}
    for x in window(d, 0):
        s = rt.support(hk(d, x), b)
        assert 0 < len(s) < 9
        # connected: the residues form one cyclic run
        idx = sorted(i for i in range(9) if b[i] in s)
        gaps = sum(1 for i in idx if (i + 1) % 9 not in idx)
        assert gaps == 1
        assert len(s & b.maximal) + 1 == len(s & b.minimal)
