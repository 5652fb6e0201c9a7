"""Colored hook lengths and the three orders on the hook image.

``hk`` embeds a cylindric diagram Y into the positive real roots; its image
is cut out by the predominant weight ``lambda_Y``.  Pulled back through
``hk``, the diagram order becomes the modified order (differences in the
monoid generated by ``Pi_Y``), which also equals the heap order on roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import roots as rt
from .diagrams import EAST, SOUTH, SOUTHEAST, CylindricDiagram, contains, content, leq_cyl, window
from .lattice import CylCell
from .roots import RootVector, WeightVector


def alpha(d: CylindricDiagram, x: CylCell) -> RootVector:
    """``alpha(x) = alpha_{con(x)}``."""
    return rt.simple_root(content(d, x), d.kappa)


def arm(d: CylindricDiagram, x: CylCell) -> list[CylCell]:
    """Cells ``x + (0, k)`` of Y, ``k >= 1`` (as a list; classes may repeat with the leg)."""
    if not contains(d, x):
        raise ValueError(f"{x!r} is not a cell of {d!r}")
    return [x + (0, k) for k in range(1, d.lam[x.a - 1] - x.b + 1)]


def leg(d: CylindricDiagram, x: CylCell) -> list[CylCell]:
    """Cells ``x + (k, 0)`` of Y, ``k >= 1``."""
    if not contains(d, x):
        raise ValueError(f"{x!r} is not a cell of {d!r}")
    out = []
    k = 1
    while contains(d, (x.a + k, x.b)):
        out.append(x + (k, 0))
        k += 1
    return out


def _sum_alpha(d: CylindricDiagram, cells: Iterable[CylCell]) -> RootVector:
    c = [0] * d.kappa
    for y in cells:
        c[content(d, y)] += 1
    return RootVector(d.kappa, tuple(c))


def hk(d: CylindricDiagram, x: CylCell) -> RootVector:
    """Colored hook length: ``alpha(x)`` plus the colors of the arm and the leg."""
    return _sum_alpha(d, [x, *arm(d, x), *leg(d, x)])


def hk_recursive(d: CylindricDiagram, x: CylCell) -> RootVector:
    """``hk`` through the south/east recurrence, anchored at the bottom set."""
    gamma = set(d.bottom)

    @lru_cache(maxsize=None)
    def rec(y: CylCell) -> RootVector:
        if not contains(d, y):
            return rt.zero(d.kappa)
        s, e = y + SOUTH, y + EAST
        if y not in gamma:
            return rec(s) + rec(e) - rec(y + SOUTHEAST)
        out = alpha(d, y)
        # s and e coincide when m = ell = 1; the hook then counts that cell twice
        for z in (s, e):
            if contains(d, z):
                out = out + rec(z)
        return out

    return rec(x)


def hkr(d: CylindricDiagram, tableau: Sequence[CylCell], x: CylCell) -> RootVector:
    """``s(p_1) ... s(p_{n-1}) alpha(p_n)`` where ``tableau = (p_1, p_2, ...)`` and ``p_n = x``."""
    try:
        n = list(tableau).index(x)
    except ValueError:
        raise ValueError(f"{x!r} is not in the tableau domain") from None
    v = alpha(d, x)
    for p in reversed(tableau[:n]):
        v = rt.reflect(v, content(d, p))
    return v


# -------------------------------------------------------- predominant weight


def predominant_weight(d: CylindricDiagram) -> WeightVector:
    """``lambda_Y``: +1 at residues of maximal bottom cells, -1 at minimal ones."""
    b = d.bottom
    return WeightVector(d.kappa, tuple(b.kind(i) for i in range(d.kappa)))


def d_set_window(d: CylindricDiagram, depth: int) -> frozenset[RootVector]:
    """Positive real roots with ``N <= depth`` pairing to -1 with ``lambda_Y``."""
    lam = predominant_weight(d)
    return frozenset(
        a for a in rt.positive_roots_up_to(d.kappa, depth)
        if rt.pairing_weight_coroot(lam, a) == -1
    )


# ------------------------------------------------------------------- Pi_Y


@dataclass(frozen=True)
class PiSet:
    pi0: tuple[RootVector, ...]
    pi_arm: tuple[RootVector, ...]
    pi_leg: tuple[RootVector, ...]

    @property
    def members(self) -> tuple[RootVector, ...]:
        return self.pi0 + self.pi_arm + self.pi_leg


def pi_set(d: CylindricDiagram) -> PiSet:
    b = d.bottom
    maxima = sorted(b.maximal)
    interior = sorted(x for x in b if x not in b.maximal and x not in b.minimal)
    return PiSet(
        tuple(alpha(d, x) for x in interior),
        tuple(_sum_alpha(d, [x, *arm(d, x)]) for x in maxima),
        tuple(_sum_alpha(d, [x, *leg(d, x)]) for x in maxima),
    )


# ----------------------------------------------------------------- orders


def leq_ordinary(a: RootVector, b: RootVector) -> bool:
    """``a <=or b`` iff ``b - a`` lies in Q_+."""
    return (b - a).is_nonneg()


def in_monoid(target: RootVector, gens: Sequence[RootVector]) -> bool:
    """Is ``target`` a non-negative integer combination of ``gens``?

    Depth-first search over the coefficient of each generator; every
    generator is a nonzero vector in Q_+, so each coefficient is bounded by the
    coordinatewise quotient.
    """
    if not target.is_nonneg():
        return False
    gens = tuple(sorted({g.coeffs for g in gens}, key=lambda g: (-sum(g), g)))
    if any(min(g) < 0 or not any(g) for g in gens):
        raise ValueError("generators must be nonzero elements of Q_+")
    return _cone_search(gens, 0, target.coeffs)


@lru_cache(maxsize=1 << 16)
def _cone_search(gens: tuple[tuple[int, ...], ...], k: int, rest: tuple[int, ...]) -> bool:
    if not any(rest):
        return True
    if k == len(gens):
        return False
    g = gens[k]
    bound = min(r // c for r, c in zip(rest, g) if c)
    for t in range(bound, -1, -1):
        if _cone_search(gens, k + 1, tuple(r - t * c for r, c in zip(rest, g))):
            return True
    return False


def leq_modified(d: CylindricDiagram, a: RootVector, b: RootVector, pi: PiSet | None = None) -> bool:
    """The modified order: ``b - a`` is a non-negative integer combination of ``Pi_Y``."""
    pi = pi or pi_set(d)
    return in_monoid(b - a, pi.members)


def transitive_closure(nodes: Sequence, rel: Callable[[object, object], bool]) -> set[tuple]:
    """Reflexive-transitive closure of ``rel`` on a finite node list."""
    succ = {u: [v for v in nodes if v != u and rel(u, v)] for u in nodes}
    out = set()
    for u in nodes:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.update((u, v) for v in seen)
    return out


def heap_relation(a: RootVector, b: RootVector) -> bool:
    """Generating relation of the root heap order: ``a <=or b`` and ``<a, b^vee> != 0``."""
    return leq_ordinary(a, b) and rt.pairing_root_coroot(a, b) != 0


def heap_order_roots(image: Sequence[RootVector]) -> set[tuple[RootVector, RootVector]]:
    """The heap order on a finite, ``<=or``-downward closed piece of the hook image."""
    return transitive_closure(list(image), heap_relation)


def leq_heap_roots(d: CylindricDiagram, a: RootVector, b: RootVector, depth: int | None = None) -> bool:
    """``a <=hp b``, closing over the window that contains ``b``."""
    if depth is None:
        depth = rt.null_multiplicity(b)
    image = [hk(d, x) for x in window(d, depth)]
    if a not in image or b not in image:
        raise ValueError("roots must lie in the hook image of the window")
    return (a, b) in heap_order_roots(image)


def pi_step_closure(d: CylindricDiagram, image: Sequence[RootVector], pi: PiSet | None = None) -> set[tuple]:
    """Transitive closure of single ``Pi_Y`` steps inside a finite piece of the image."""
    gens = set((pi or pi_set(d)).members)
    return transitive_closure(list(image), lambda a, b: (b - a) in gens)


def heap_order_labels(d: CylindricDiagram, tableau: Sequence[CylCell]) -> set[tuple[int, int]]:
    """The heap order on labels ``1..n`` of a tableau prefix.

    Generated by ``a <= b`` whenever the letters at positions ``a`` and ``b``
    are equal or do not commute.
    """
    cart = rt.cartan_matrix(d.kappa)
    letters = [content(d, p) for p in tableau]
    labels = list(range(1, len(letters) + 1))

    def rel(a, b):
        i, j = letters[a - 1], letters[b - 1]
        return a <= b and (i == j or cart[i][j] != 0)

    return transitive_closure(labels, rel)


def heap_order_on_integers(d: CylindricDiagram, tableau: Sequence[CylCell], a: int, b: int) -> bool:
    n = len(tableau)
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"labels must lie in [1, {n}]")
    return (a, b) in heap_order_labels(d, tableau)


# -------------------------------------------------------------- DOT export


def covers_of(nodes: Sequence, leq: set[tuple]) -> list[tuple]:
    """Covering pairs ``(u, v)``, ``u < v``, of a finite order given as a set of pairs."""
    out = []
    for u in nodes:
        for v in nodes:
            if u == v or (u, v) not in leq:
                continue
            if not any(w != u and w != v and (u, w) in leq and (w, v) in leq for w in nodes):
                out.append((u, v))
    return out


def cell_label(d: CylindricDiagram, x: CylCell) -> str:
    return f"({x.a},{x.b}):{content(d, x)}"


def to_dot(d: CylindricDiagram, depth: int, order: str = "diagram") -> str:
    """Covering graph of one of the four orders on ``window(d, depth)``, labelled by cells.

    ``order`` is one of ``diagram``, ``modified``, ``heap``, ``tableau``.
    """
    cells = window(d, depth)
    hks = {x: hk(d, x) for x in cells}
    if order == "diagram":
        leq = {(x, y) for x in cells for y in cells if leq_cyl(x, y)}
    elif order == "modified":
        pi = pi_set(d)
        leq = {(x, y) for x in cells for y in cells if leq_modified(d, hks[x], hks[y], pi)}
    elif order == "heap":
        back = {v: k for k, v in hks.items()}
        leq = {(back[a], back[b]) for a, b in heap_order_roots(list(hks.values()))}
    elif order == "tableau":
        leq = {(cells[a - 1], cells[b - 1]) for a, b in heap_order_labels(d, cells)}
    else:
        raise ValueError(f"unknown order {order!r}")
    index = {x: k for k, x in enumerate(cells)}
    lines = [f'digraph "{order}" {{', "  rankdir=BT;"]
    for x in cells:
        lines.append(f'  n{index[x]} [label="{cell_label(d, x)}"];')
    for x, y in covers_of(cells, leq):
        lines.append(f"  n{index[x]} -> n{index[y]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
