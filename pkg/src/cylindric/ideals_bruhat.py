"""Weyl group elements of order ideals and the ideal / weak Bruhat correspondences.

Every finite ideal ``zeta`` of a cylindric diagram Y gives the element
``w_zeta`` read off any of its standard tableaux.  ``Phi(zeta) = w_zeta`` and
``Psi(w) = R(w)`` are checked to be order isomorphisms on the slice of ideals
of bounded size; every check returns a JSON-ready report.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import roots as rt
from .diagrams import (
    CylindricDiagram, Ideal, content, ideals_by_size, linear_extension, lower_covers,
    random_tableau_stream, standard_tableaux, window,
)
from .hooks import hk, leq_modified, pi_set, predominant_weight
from .lattice import CylCell
from .weyl import (
    WeylElement, bruhat_interval, elements_by_length, inversion_set, is_fully_commutative, is_pluscule,
    reduced_words, weak_bruhat_covers, weak_bruhat_leq,
)


def report(check: str, params: dict, ok: bool, counterexample=None, **extra) -> dict:
    out = {"check": check, "params": params, "pass": bool(ok), "counterexample": counterexample}
    out.update(extra)
    return out


def word_of_tableau(d: CylindricDiagram, tableau: Sequence[CylCell]) -> tuple[int, ...]:
    return tuple(content(d, p) for p in tableau)


@dataclass(frozen=True)
class IdealWord:
    ideal: Ideal
    element: WeylElement
    word: tuple[int, ...]


def word_of_ideal(z: Ideal, seed: int = 0) -> IdealWord:
    """``w_zeta`` from the canonical tableau, cross-checked against a random second tableau."""
    d = z.diagram
    word = word_of_tableau(d, linear_extension(d, z.cells))
    w = WeylElement.from_word(word, d.kappa)
    other = linear_extension(d, z.cells, random.Random(hash((seed, z.key()))))
    if WeylElement.from_word(word_of_tableau(d, other), d.kappa) != w:
        raise AssertionError(f"w_zeta depends on the tableau for {z.key()}")
    if w.length != len(z):
        raise AssertionError(f"word of {z.key()} is not reduced")
    return IdealWord(z, w, word)


@lru_cache(maxsize=64)
def ideal_elements(d: CylindricDiagram, n_max: int) -> tuple[tuple[tuple[Ideal, WeylElement], ...], ...]:
    """``levels[k]`` pairs each ideal of size ``k`` with ``w_zeta``."""
    return tuple(
        tuple((z, word_of_ideal(z).element) for z in level)
        for level in ideals_by_size(d, n_max)
    )


def _cells_json(z) -> list:
    return [[x.a, x.b] for x in sorted(z)]


# ------------------------------------------------------------------- Phi


def phi_iso_check(d: CylindricDiagram, n_max: int) -> dict:
    """``Phi: zeta -> w_zeta`` on ideals of size ``<= n_max``.

    Checked: injectivity, the image is the union of ``[e, w_zeta]`` over the
    largest ideals, ``w_{zeta + x} = w_zeta s(x)`` on every cover, and every
    weak-order cover inside the image comes from adding one cell.
    """
    params = {"diagram": d.to_json(), "n_max": n_max}
    levels = ideal_elements(d, n_max)
    phi = {z.cells: w for level in levels for z, w in level}
    back: dict[WeylElement, frozenset] = {}
    for cells, w in phi.items():
        if w in back:
            return report("phi-iso", params, False, {"ideals": [_cells_json(cells), _cells_json(back[w])]})
        back[w] = cells
    union = set()
    for _, w in levels[-1]:
        union |= bruhat_interval(w)
    if union != set(back):
        extra = sorted(union ^ set(back), key=lambda u: (u.length, u.reduced_word))[0]
        return report("phi-iso", params, False, {"element": extra.to_json()})
    for level in levels[:-1]:
        for z, w in level:
            for x in z.addable():
                w2 = phi[z.cells | {x}]
                if w2 != w.rmul_simple(content(d, x)) or not weak_bruhat_covers(w, w2):
                    return report("phi-iso", params, False, {"ideal": _cells_json(z.cells), "added": [x.a, x.b]})
    for w, cells in back.items():
        if w.length == n_max:
            continue
        for i in range(d.kappa):
            if w.is_right_descent(i):
                continue
            w2 = w.rmul_simple(i)
            if w2 in back and not (cells < back[w2] and len(back[w2]) == len(cells) + 1):
                return report("phi-iso", params, False, {"element": w.to_json(), "letter": i})
    return report("phi-iso", params, True, size=len(back))


# ------------------------------------------------------------------- Psi


def modified_order_ideals(image: Sequence[rt.RootVector], leq, n_max: int) -> set[frozenset]:
    """Order ideals of size ``<= n_max`` of a finite poset given by ``leq``."""
    below = {b: frozenset(a for a in image if a != b and leq(a, b)) for b in image}
    seen = {frozenset()}
    frontier = [frozenset()]
    for _ in range(n_max):
        nxt = []
        for s in frontier:
            for b in image:
                if b not in s and below[b] <= s:
                    t = s | {b}
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return seen


def psi_iso_check(d: CylindricDiagram, n_max: int) -> dict:
    """``Psi: w -> R(w)`` from the interval slice to the ideals of the hook image under the modified order.

    The interval slice is generated on the Weyl side (down-sets of
    ``w_zeta`` for the largest ideals); the ideals of the hook image are
    generated from the modified order alone.
    """
    params = {"diagram": d.to_json(), "n_max": n_max}
    levels = ideal_elements(d, n_max)
    interval = set()
    for _, w in levels[-1]:
        interval |= bruhat_interval(w)
    # an ideal of size n only contains cells with N < n
    image = [hk(d, x) for x in window(d, max(n_max - 1, 0))]
    pi = pi_set(d)
    rel = {(a, b) for a in image for b in image if leq_modified(d, a, b, pi)}
    targets = modified_order_ideals(image, lambda a, b: (a, b) in rel, n_max)
    psi = {w: inversion_set(w) for w in interval}
    if len(set(psi.values())) != len(psi):
        return report("psi-iso", params, False, {"reason": "not injective"})
    if set(psi.values()) != targets:
        bad = sorted(set(psi.values()) ^ targets, key=len)[0]
        return report("psi-iso", params, False, {"roots": [r.to_json() for r in bad]})
    elems = sorted(interval, key=lambda u: (u.length, u.reduced_word))
    for v, w in itertools.product(elems, repeat=2):
        if weak_bruhat_leq(v, w) != (psi[v] <= psi[w]):
            return report("psi-iso", params, False, {"pair": [v.to_json(), w.to_json()]})
        if weak_bruhat_covers(v, w) != (psi[v] < psi[w] and len(psi[w]) == len(psi[v]) + 1):
            return report("psi-iso", params, False, {"cover": [v.to_json(), w.to_json()]})
    return report("psi-iso", params, True, size=len(elems))


# --------------------------------------------------------- interval [e, w_Y)


def interval_membership(d: CylindricDiagram, w: WeylElement) -> bool:
    """Is ``w`` in the semi-infinite interval ``[e, w_Y)``, i.e. ``w = w_zeta`` for an ideal?"""
    n = w.length
    return any(u == w for _, u in ideal_elements(d, n)[n])


def pluscule_characterization_check(d: CylindricDiagram, max_length: int) -> dict:
    """Elements of length ``<= max_length`` that are ``lambda_Y``-pluscule are exactly the ``w_zeta``."""
    params = {"diagram": d.to_json(), "max_length": max_length}
    lam = predominant_weight(d)
    pluscule = {w for level in elements_by_length(d.kappa, max_length) for w in level if is_pluscule(w, lam)}
    ideal_ws = {w for level in ideal_elements(d, max_length) for _, w in level}
    if pluscule != ideal_ws:
        bad = sorted(pluscule ^ ideal_ws, key=lambda u: (u.length, u.reduced_word))[0]
        return report("pluscule-characterization", params, False,
                      {"element": bad.to_json(), "pluscule": bad in pluscule})
    return report("pluscule-characterization", params, True, size=len(pluscule))


# -------------------------------------------------------- tableaux and words


def tableau_of_word(z: Ideal, word: Sequence[int]) -> tuple[CylCell, ...]:
    """Inverse of ``T -> word``: each letter picks the unique available cell of that content."""
    d = z.diagram
    placed: set[CylCell] = set()
    out = []
    for i in word:
        avail = [
            x for x in z.cells
            if x not in placed and content(d, x) == i and all(y in placed for y in lower_covers(d, x))
        ]
        if len(avail) != 1:
            raise ValueError(f"letter {i} does not pick a unique cell")
        placed.add(avail[0])
        out.append(avail[0])
    return tuple(out)


def tableaux_words_bijection_check(z: Ideal, cap: int = 12) -> dict:
    d = z.diagram
    params = {"ideal": z.to_json()}
    w = word_of_ideal(z).element
    words = {}
    for t in standard_tableaux(z):
        word = word_of_tableau(d, t)
        if word in words:
            return report("tableaux-words", params, False, {"word": list(word)})
        if tableau_of_word(z, word) != t:
            return report("tableaux-words", params, False, {"word": list(word), "reason": "no round trip"})
        words[word] = t
    expected = reduced_words(w, max(cap, len(z)))
    if set(words) != expected:
        bad = sorted(set(words) ^ expected)[0]
        return report("tableaux-words", params, False, {"word": list(bad)})
    return report("tableaux-words", params, True, count=len(words))


def find_tableau_for_word(d: CylindricDiagram, word: Sequence[int]) -> tuple[CylCell, ...] | None:
    """A standard tableau of some ideal of size ``len(word)`` whose reading word is ``word``."""
    word = tuple(word)
    for z in ideals_by_size(d, len(word))[len(word)]:
        try:
            return tableau_of_word(z, word)
        except ValueError:
            continue
    return None


# --------------------------------------------------- tableau independence


def _prefix_elements(d: CylindricDiagram, cells: Sequence[CylCell]) -> list[WeylElement]:
    out = [WeylElement.identity(d.kappa)]
    for p in cells:
        out.append(out[-1].rmul_simple(content(d, p)))
    return out


def _dominate(d: CylindricDiagram, t_small: list, stream_big, t_big: list, n: int) -> dict | None:
    """Check ``[e, w_small[k]] inside [e, w_big[r]]`` for ``k <= n`` through the explicit merged tableau."""
    for k in range(1, n + 1):
        target = set(t_small[:k])
        r = k
        while not target <= set(t_big[:r]):
            r += 1
            while len(t_big) < r:
                t_big.append(next(stream_big))
        # the big prefix with the small cells removed still respects the order above them
        rest = [p for p in t_big[:r] if p not in target]
        merged = t_small[:k] + rest
        if word_of_tableau(d, merged[:k]) != word_of_tableau(d, t_small[:k]):
            return {"k": k, "reason": "merged prefix"}
        big = _prefix_elements(d, t_big[:r])[-1]
        if _prefix_elements(d, merged)[-1] != big:
            return {"k": k, "r": r, "reason": "merged element"}
        small = _prefix_elements(d, t_small[:k])[-1]
        if not bruhat_interval(small) <= bruhat_interval(big):
            return {"k": k, "r": r, "reason": "interval inclusion"}
    return None


def interval_independence_check(d: CylindricDiagram, n: int, trials: int = 3, seed: int = 0) -> dict:
    """``[e, w_{Y,T1}) = [e, w_{Y,T2})`` witnessed prefix by prefix for random tableau pairs.

    For each prefix of one tableau a longer prefix of the other is found whose
    interval contains it.  ``agree_to`` reports the largest length up to
    which the two finite unions over prefixes ``<= n`` happen to coincide.
    """
    params = {"diagram": d.to_json(), "n": n, "trials": trials, "seed": seed}
    agree = []
    for t in range(trials):
        s1 = random_tableau_stream(d, seed * 1000 + 2 * t)
        s2 = random_tableau_stream(d, seed * 1000 + 2 * t + 1)
        t1 = [next(s1) for _ in range(n)]
        t2 = [next(s2) for _ in range(n)]
        for small, big_stream, big in ((list(t2), s1, t1), (list(t1), s2, t2)):
            bad = _dominate(d, small, big_stream, big, n)
            if bad:
                return report("interval-independence", params, False, dict(bad, trial=t))
        u1, u2 = set(), set()
        for w in _prefix_elements(d, t1[:n])[1:]:
            u1 |= bruhat_interval(w)
        for w in _prefix_elements(d, t2[:n])[1:]:
            u2 |= bruhat_interval(w)
        diff = [u.length for u in u1 ^ u2]
        agree.append(min(diff) - 1 if diff else n)
    return report("interval-independence", params, True, agree_to=agree)


def ideal_roots_match(z: Ideal) -> bool:
    """``R(w_zeta) = hk(zeta)`` and ``w_zeta`` is fully commutative."""
    w = word_of_ideal(z).element
    return inversion_set(w) == frozenset(hk(z.diagram, x) for x in z.cells) and is_fully_commutative(
        w, max(12, len(z))
    )
