"""Finite skew shapes realized inside a cylinder.

A planar skew shape ``[lam]/[mu]`` with ``m`` rows sits in the cylinder of
period ``(m, -ell)`` as the ideal ``Y_lam minus Y_mu`` once ``ell >= lam_1 - mu_m``.
Shifting contents by ``m - mu_m`` keeps every letter away from ``s_0``, so
the words live in the finite Weyl group of type A_{kappa-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import roots as rt
from .diagrams import CylindricDiagram, Ideal, canonical_tableau, content
from .hooks import hk, leq_modified, leq_ordinary, pi_set
from .lattice import CylCell
from .roots import RootVector
from .weyl import WeylElement, apply_to_root, inversion_set


def _check_partition(p: Sequence[int], name: str) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p) or any(x < y for x, y in zip(p, p[1:])):
        raise ValueError(f"{name} must be a non-increasing sequence of non-negative integers, got {p}")
    return p


@dataclass(frozen=True)
class ClassicalSkew:
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    diagram: CylindricDiagram
    ideal: Ideal

    @property
    def ell(self) -> int:
        return self.diagram.ell

    @property
    def offset(self) -> int:
        return self.diagram.offset


def embed(lam: Sequence[int], mu: Sequence[int] | None = None) -> ClassicalSkew:
    """Smallest cylinder realizing ``[lam]/[mu]``, with contents ``b - a + m - mu_m``."""
    lam = _check_partition(lam, "lambda")
    while len(lam) > 1 and lam[-1] == 0:
        lam = lam[:-1]
    if not lam:
        raise ValueError("lambda must have at least one part")
    mu = _check_partition(mu or (), "mu")
    if len(mu) > len(lam):
        if any(mu[len(lam):]):
            raise ValueError("mu has more non-zero parts than lambda")
        mu = mu[: len(lam)]
    mu = mu + (0,) * (len(lam) - len(mu))
    if any(a < b for a, b in zip(lam, mu)):
        raise ValueError(f"mu={mu} is not contained in lambda={lam}")
    m = len(lam)
    ell = max(1, lam[0] - mu[-1])
    d = CylindricDiagram.make((m, -ell), lam, offset=m - mu[-1])
    cells = frozenset(d.cell(a, b) for a in range(1, m + 1) for b in range(mu[a - 1] + 1, lam[a - 1] + 1))
    return ClassicalSkew(lam, mu, d, Ideal(d, cells))


def grassmannian(lam: Sequence[int]) -> WeylElement:
    """``w_lam = w_{[lam]/[0]} = s(p_1) s(p_2) ... s(p_n)`` for a standard tableau ``(p_1, ..., p_n)``.

    Its inverse is the reversed reading ``s(p_n) ... s(p_1)``, which has a
    single left descent (for non-empty ``lam``).
    """
    sk = embed(lam)
    return reading_element(sk, canonical_tableau(sk.ideal))


def reading_element(sk: ClassicalSkew, tableau: Sequence[CylCell], reverse: bool = False) -> WeylElement:
    letters = [content(sk.diagram, p) for p in tableau]
    if reverse:
        letters.reverse()
    return WeylElement.from_word(letters, sk.diagram.kappa)


def cohk(lam: Sequence[int], tableau: Sequence[CylCell], x: CylCell) -> RootVector:
    """``s(p_n) s(p_{n-1}) ... s(p_{k+1}) alpha(p_k)`` where ``p_k = x``."""
    sk = embed(lam)
    tableau = tuple(tableau)
    if x not in sk.ideal:
        raise ValueError(f"{x!r} is not a cell of {lam}")
    if set(tableau) != set(sk.ideal.cells):
        raise ValueError("tableau must fill the whole diagram")
    d = sk.diagram
    k = tableau.index(x)
    v = rt.simple_root(content(d, x), d.kappa)
    # innermost reflection is s(p_{k+1})
    for p in tableau[k + 1:]:
        v = rt.reflect(v, content(d, p))
    return v


def iota(w_lambda: WeylElement, alpha: RootVector) -> RootVector:
    """``-w_lambda^{-1} alpha``."""
    return -apply_to_root(w_lambda.inverse(), alpha)


def triangle_check(lam: Sequence[int]) -> dict:
    """Every claim about the commuting triangle ``hk``, ``cohk``, ``iota`` for ``[lam]``.

    Returns a dict of named booleans.
    """
    sk = embed(lam)
    d = sk.diagram
    cells = sorted(sk.ideal.cells)
    t = canonical_tableau(sk.ideal)
    w = reading_element(sk, t)
    hks = {x: hk(d, x) for x in cells}
    image = set(hks.values())
    inv_image = inversion_set(w.inverse())
    pi = pi_set(d)
    out = {}
    out["hk_image"] = image == inversion_set(w)
    out["avoids_s0"] = 0 not in w.reduced_word and all(a[0] == 0 for a in image)
    out["reversed_is_inverse"] = reading_element(sk, t, reverse=True) == w.inverse()
    out["grassmannian"] = len(w.right_descents()) <= 1 and len(w.inverse().left_descents()) <= 1
    out["modified_is_ordinary"] = all(
        leq_modified(d, a, b, pi) == leq_ordinary(a, b) for a in image for b in image
    )
    out["cohk_image"] = {cohk(sk.lam, t, x) for x in cells} == inv_image
    out["iota_hk_is_cohk"] = all(iota(w, hks[x]) == cohk(sk.lam, t, x) for x in cells)
    out["iota_bijective"] = {iota(w, a) for a in image} == inv_image and len(image) == len(cells)
    out["iota_reverses_order"] = all(
        leq_modified(d, a, b, pi) == leq_ordinary(iota(w, b), iota(w, a)) for a in image for b in image
    )
    return out
