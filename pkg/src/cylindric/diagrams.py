"""Cylindric diagrams, their contents, bottom sets and order ideals.

A generalized partition ``lam`` of length ``m`` with ``lam[0] - lam[-1] <= ell``
defines the periodic diagram ``{(a, b) : b <= lam_a} + Z omega`` and its image
``Y`` in the cylinder.  ``Y`` is an order filter; its finite order ideals are
the cylindric skew diagrams contained in it.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .lattice import Cell, CylCell, Period, interval_cyl, leq_cyl, lt_cyl, project

SOUTH = (1, 0)
EAST = (0, 1)
SOUTHEAST = (1, 1)


@dataclass(frozen=True)
class CylindricDiagram:
    """The cylindric diagram ``Y_lam`` in the cylinder of period ``(m, -ell)``.

    ``offset`` shifts the content map, ``con(a, b) = b - a + offset``; it is 0
    for every cylindric diagram except the classical embeddings.
    """

    period: Period
    lam: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if len(lam) != self.period.m:
            raise ValueError(f"lambda must have m={self.period.m} parts, got {len(lam)}")
        if any(x < y for x, y in zip(lam, lam[1:])):
            raise ValueError(f"lambda must be non-increasing, got {lam}")
        if lam[0] - lam[-1] > self.period.ell:
            raise ValueError(
                f"lambda_1 - lambda_m = {lam[0] - lam[-1]} exceeds ell = {self.period.ell}"
            )

    @classmethod
    def make(cls, omega, lam: Iterable[int], offset: int = 0) -> "CylindricDiagram":
        return cls(Period.from_omega(omega), tuple(lam), offset)

    @property
    def kappa(self) -> int:
        return self.period.kappa

    @property
    def m(self) -> int:
        return self.period.m

    @property
    def ell(self) -> int:
        return self.period.ell

    def cell(self, a: int, b: int) -> CylCell:
        return project((a, b), self.period)

    def __contains__(self, x) -> bool:
        return contains(self, x)

    def __repr__(self):
        m, ell = self.period.m, self.period.ell
        lam = ",".join(map(str, self.lam))
        return f"Y[({m},-{ell}); ({lam})]"

    def to_json(self) -> dict:
        out = {"omega": [self.period.m, -self.period.ell], "lambda": list(self.lam)}
        if self.offset:
            out["offset"] = self.offset
        return out

    @classmethod
    def from_json(cls, obj) -> "CylindricDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.make(obj["omega"], obj["lambda"], obj.get("offset", 0))

    # cached derived data; the dataclass is frozen so these never go stale
    @cached_property
    def bottom(self) -> "BottomSet":
        return bottom_set(self)


def contains(d: CylindricDiagram, x) -> bool:
    """Membership in Y; ``x`` may be any lift in Z^2 or a CylCell."""
    if not isinstance(x, CylCell):
        x = project(x, d.period)
    elif x.period != d.period:
        raise ValueError("cell lives on a different cylinder")
    return x.b <= d.lam[x.a - 1]


def content(d: CylindricDiagram, x: CylCell) -> int:
    """Residue ``b - a (+ offset) mod kappa``; independent of the lift."""
    if not contains(d, x):
        raise ValueError(f"{x!r} is not a cell of {d!r}")
    return (x.b - x.a + d.offset) % d.kappa


def generation(d: CylindricDiagram, x: CylCell) -> int:
    """``N(x) = max{k : x + k(0, ell) in Y}``."""
    if not contains(d, x):
        raise ValueError(f"{x!r} is not a cell of {d!r}")
    return (d.lam[x.a - 1] - x.b) // d.ell


def lower_covers(d: CylindricDiagram, x: CylCell) -> list[CylCell]:
    """Cells of Y covered by ``x`` (its south and east neighbours, when present)."""
    out = []
    for step in (SOUTH, EAST):
        y = x + step
        if contains(d, y) and y not in out:
            out.append(y)
    return out


def upper_covers(d: CylindricDiagram, x: CylCell) -> list[CylCell]:
    out = []
    for step in (SOUTH, EAST):
        y = x - step
        if y not in out:
            out.append(y)
    return out


def minimal_cells(d: CylindricDiagram) -> list[CylCell]:
    """Minimal elements of Y (cells with no south or east neighbour in Y)."""
    out = []
    for a in range(1, d.m + 1):
        x = d.cell(a, d.lam[a - 1])
        if not lower_covers(d, x):
            out.append(x)
    return out


# ---------------------------------------------------------------- bottom set


@dataclass(frozen=True)
class BottomSet:
    """The bottom set: ``cells[i]`` is the minimum of the content fibre ``con^{-1}(i)``."""

    cells: tuple[CylCell, ...]
    maximal: frozenset[CylCell]
    minimal: frozenset[CylCell]

    def __getitem__(self, i: int) -> CylCell:
        return self.cells[i % len(self.cells)]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[CylCell]:
        return iter(self.cells)

    def kind(self, i: int) -> int:
        """+1 if ``b_i`` is maximal in the bottom set, -1 if minimal, else 0."""
        x = self[i]
        if x in self.maximal:
            return 1
        if x in self.minimal:
            return -1
        return 0


def bottom_set(d: CylindricDiagram) -> BottomSet:
    kappa = d.kappa
    cells = []
    for i in range(kappa):
        # the content-i fibre is the diagonal {(t, t + c)} mod omega; walk it to its low end
        c = i - d.offset
        t = 0
        while not contains(d, (t, t + c)):
            t -= d.m
        while contains(d, (t + 1, t + 1 + c)):
            t += 1
        cells.append(project((t, t + c), d.period))
    gamma = set(cells)
    maximal = frozenset(x for x in gamma if not any(lt_cyl(x, y) for y in gamma))
    minimal = frozenset(x for x in gamma if not any(lt_cyl(y, x) for y in gamma))
    if len(maximal) != len(minimal):
        raise AssertionError(f"bottom set of {d!r} is unbalanced")
    return BottomSet(tuple(cells), maximal, minimal)


# ------------------------------------------------------------------ windows


def window(d: CylindricDiagram, depth: int) -> list[CylCell]:
    """Cells of Y with ``N(x) <= depth``, listed in a canonical linear extension.

    The set is an order ideal of Y.  Minimal available cells are taken first by
    smallest generation, then by smallest canonical representative.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    members = set()
    for a in range(1, d.m + 1):
        top = d.lam[a - 1]
        for b in range(top - (depth + 1) * d.ell + 1, top + 1):
            members.add(d.cell(a, b))
    return linear_extension(d, members)


def linear_extension(d: CylindricDiagram, cells: Iterable[CylCell], rng: random.Random | None = None) -> list[CylCell]:
    """A linear extension of a finite ideal of Y.

    Deterministic (smallest generation, then smallest representative) unless a
    random generator is supplied, in which case each step picks uniformly among
    the available minimal cells.
    """
    remaining = set(cells)
    placed: set[CylCell] = set()
    order = []
    avail = {x for x in remaining if all(y in placed for y in lower_covers(d, x))}
    while avail:
        if rng is None:
            x = min(avail, key=lambda z: (generation(d, z), z.a, z.b))
        else:
            x = rng.choice(sorted(avail, key=lambda z: (z.a, z.b)))
        avail.remove(x)
        remaining.discard(x)
        placed.add(x)
        order.append(x)
        for y in upper_covers(d, x):
            if y in remaining and y not in avail and all(z in placed for z in lower_covers(d, y)):
                avail.add(y)
    if remaining:
        raise ValueError("cells do not form an order ideal of the diagram")
    return order


def random_tableau_stream(d: CylindricDiagram, seed: int) -> Iterator[CylCell]:
    """An endless random standard tableau of Y, yielded cell by cell."""
    rng = random.Random(seed)
    placed: set[CylCell] = set()
    avail = set(minimal_cells(d))
    while True:
        x = rng.choice(sorted(avail, key=lambda z: (z.a, z.b)))
        avail.remove(x)
        placed.add(x)
        yield x
        for y in upper_covers(d, x):
            if all(z in placed for z in lower_covers(d, y)):
                avail.add(y)


# ------------------------------------------------------------------- ideals


@dataclass(frozen=True)
class Ideal:
    """A finite order ideal of a cylindric diagram (a cylindric skew diagram)."""

    diagram: CylindricDiagram
    cells: frozenset[CylCell] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[CylCell]:
        return iter(sorted(self.cells))

    def __contains__(self, x) -> bool:
        return x in self.cells

    def add(self, x: CylCell) -> "Ideal":
        return Ideal(self.diagram, self.cells | {x})

    def addable(self) -> list[CylCell]:
        """Minimal cells of ``Y \\ ideal``; adding any one of them yields an ideal."""
        d = self.diagram
        cand = set(minimal_cells(d))
        for x in self.cells:
            cand.update(upper_covers(d, x))
        return sorted(
            x for x in cand
            if x not in self.cells and contains(d, x)
            and all(y in self.cells for y in lower_covers(d, x))
        )

    def removable(self) -> list[CylCell]:
        """Maximal cells of the ideal."""
        d = self.diagram
        return sorted(
            x for x in self.cells
            if not any(y in self.cells for y in upper_covers(d, x))
        )

    def key(self) -> tuple:
        return tuple((x.a, x.b) for x in sorted(self.cells))

    def to_json(self) -> dict:
        return {"diagram": self.diagram.to_json(), "cells": [list(k) for k in self.key()]}

    @classmethod
    def from_json(cls, obj) -> "Ideal":
        if isinstance(obj, str):
            obj = json.loads(obj)
        d = CylindricDiagram.from_json(obj["diagram"])
        cells = frozenset(d.cell(a, b) for a, b in obj["cells"])
        if not is_ideal(d, cells):
            raise ValueError("cells do not form an order ideal")
        return cls(d, cells)


def is_ideal(d: CylindricDiagram, s: Iterable[CylCell]) -> bool:
    """True iff ``s`` is a subset of Y closed under going down in Y."""
    s = set(s)
    for x in s:
        if not contains(d, x):
            return False
        if any(y not in s for y in lower_covers(d, x)):
            return False
    return True


def upward_closure_diagram(cells: Iterable[CylCell], period: Period) -> CylindricDiagram:
    """The smallest cylindric diagram containing ``cells``."""
    cells = list(cells)
    if not cells:
        raise ValueError("empty set has no upward closure diagram")
    m = period.m
    lam = []
    for a in range(1, m + 1):
        best = None
        for x in cells:
            # smallest shift j putting a lift of x at row >= a; that lift has the largest column
            j = -((x.a - a) // m)
            b = x.b - j * period.ell
            best = b if best is None else max(best, b)
        lam.append(best)
    return CylindricDiagram(period, tuple(lam))


def skew_property(s: Iterable[CylCell]) -> bool:
    """``x, x + (1,1) in s`` implies ``x + (0,1), x + (1,0) in s``."""
    s = set(s)
    for x in s:
        if x + SOUTHEAST in s and (x + EAST not in s or x + SOUTH not in s):
            return False
    return True


def interval_closed(s: Iterable[CylCell]) -> bool:
    """``x, y in s`` implies ``[x, y] subset of s`` (intervals of the cylinder)."""
    s = set(s)
    for x in s:
        for y in s:
            if x != y and leq_cyl(x, y) and not interval_cyl(x, y) <= s:
                return False
    return True


def skew_equivalences(d: CylindricDiagram, s: Iterable[CylCell]) -> dict[str, bool]:
    """Evaluate the skew-diagram characterizations of a finite subset of the cylinder.

    Keys: ``"i"`` (an order ideal of *some* cylindric diagram, namely of the
    upward closure of ``s``), ``"iv"`` (interval closed), ``"v"`` (skew
    property) and ``"ideal_of_d"`` (an order ideal of the given diagram).
    """
    s = frozenset(s)
    if not s:
        return {"i": True, "iv": True, "v": True, "ideal_of_d": True}
    up = upward_closure_diagram(s, d.period)
    return {
        "i": is_ideal(up, s),
        "iv": interval_closed(s),
        "v": skew_property(s),
        "ideal_of_d": is_ideal(d, s),
    }


def enumerate_ideals(d: CylindricDiagram, n: int) -> list[Ideal]:
    """All order ideals of Y with exactly ``n`` cells, sorted by their cell lists."""
    return ideals_by_size(d, n)[n]


def ideals_by_size(d: CylindricDiagram, n_max: int) -> list[list[Ideal]]:
    """``levels[k]`` lists every ideal of size ``k`` for ``k <= n_max`` (BFS on the ideal lattice)."""
    level = {(): Ideal(d)}
    levels = [[Ideal(d)]]
    for _ in range(n_max):
        nxt = {}
        for z in level.values():
            for x in z.addable():
                w = z.add(x)
                nxt.setdefault(w.key(), w)
        level = dict(sorted(nxt.items()))
        levels.append(list(level.values()))
    return levels


def standard_tableaux(z: Ideal) -> Iterator[tuple[CylCell, ...]]:
    """All linear extensions of ``(z, <=)``, each given as the cells in label order."""
    d = z.diagram
    cells = z.cells

    def rec(placed: frozenset, prefix: tuple):
        if len(prefix) == len(cells):
            yield prefix
            return
        for x in sorted(cells - placed):
            if all(y in placed for y in lower_covers(d, x)):
                yield from rec(placed | {x}, prefix + (x,))

    yield from rec(frozenset(), ())


def canonical_tableau(z: Ideal) -> tuple[CylCell, ...]:
    return tuple(linear_extension(z.diagram, z.cells))
