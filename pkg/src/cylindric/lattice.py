"""The lattice Z^2, the cylinder Z^2 / Z(m, -ell) and their partial orders.

Cells of Z^2 are ordered by ``(a, b) <= (a', b')`` iff ``a >= a'`` and
``b >= b'``: moving down (larger row) or right (larger column) makes a cell
*smaller*.  A class of the cylinder is stored by its canonical representative,
the unique lift whose row lies in ``[1, m]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Period:
    """The period ``omega = (m, -ell)`` with ``m, ell >= 1``."""

    m: int
    ell: int

    def __post_init__(self):
        if self.m < 1 or self.ell < 1:
            raise ValueError(f"period needs m >= 1 and ell >= 1, got m={self.m}, ell={self.ell}")

    @property
    def kappa(self) -> int:
        return self.m + self.ell

    @property
    def omega(self) -> tuple[int, int]:
        return (self.m, -self.ell)

    @classmethod
    def from_omega(cls, omega) -> "Period":
        m, neg_ell = omega
        return cls(int(m), -int(neg_ell))


@dataclass(frozen=True, order=True)
class Cell:
    """A point of Z^2 (row ``a``, column ``b``)."""

    a: int
    b: int

    def __add__(self, other) -> "Cell":
        da, db = other
        return Cell(self.a + da, self.b + db)

    def __sub__(self, other) -> "Cell":
        da, db = other
        return Cell(self.a - da, self.b - db)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b


@dataclass(frozen=True, order=True)
class CylCell:
    """A class ``x + Z omega`` of the cylinder, stored by its canonical representative.

    Construct through :func:`project`; the constructor only validates.
    """

    a: int
    b: int
    period: Period

    def __post_init__(self):
        if not 1 <= self.a <= self.period.m:
            raise ValueError(f"canonical row must lie in [1, {self.period.m}], got {self.a}")

    @property
    def rep(self) -> Cell:
        return Cell(self.a, self.b)

    def __add__(self, other) -> "CylCell":
        da, db = other
        return project(Cell(self.a + da, self.b + db), self.period)

    def __sub__(self, other) -> "CylCell":
        da, db = other
        return project(Cell(self.a - da, self.b - db), self.period)

    def lift(self, j: int) -> Cell:
        """The representative ``rep + j * omega``."""
        return Cell(self.a + j * self.period.m, self.b - j * self.period.ell)

    def __repr__(self):
        return f"π({self.a},{self.b})"


def project(c, p: Period) -> CylCell:
    """Natural projection Z^2 -> cylinder.

    >>> project(Cell(6, -9), Period(4, 5))
    π(2,-4)
    >>> project(Cell(-2, 1), Period(4, 5))
    π(2,-4)
    """
    a, b = c
    q, r = divmod(a - 1, p.m)
    return CylCell(r + 1, b + q * p.ell, p)


def leq_cells(x, y) -> bool:
    """``x <= y`` in Z^2, i.e. ``x.a >= y.a`` and ``x.b >= y.b``."""
    (xa, xb), (ya, yb) = x, y
    return xa >= ya and xb >= yb


def _witness_range(x: CylCell, y: CylCell) -> range:
    # shifts j with (x.rep + j*omega) <= y.rep:
    #   x.a + j m >= y.a  and  x.b - j ell >= y.b
    p = x.period
    lo = -((x.a - y.a) // p.m)  # ceil((y.a - x.a) / m)
    hi = (x.b - y.b) // p.ell
    return range(lo, hi + 1)


def leq_cyl(x: CylCell, y: CylCell) -> bool:
    """``x <= y`` on the cylinder: some lift of x lies below the canonical lift of y."""
    if x.period != y.period:
        raise ValueError("cells live on different cylinders")
    return len(_witness_range(x, y)) > 0


def lt_cyl(x: CylCell, y: CylCell) -> bool:
    return x != y and leq_cyl(x, y)


def interval_cyl(x: CylCell, y: CylCell) -> frozenset[CylCell]:
    """All classes ``z`` with ``x <= z <= y``."""
    shifts = _witness_range(x, y)
    if not shifts:
        raise ValueError(f"{x!r} is not below {y!r}")
    p = x.period
    out = set()
    for j in shifts:
        lo = x.lift(j)
        for a in range(y.a, lo.a + 1):
            for b in range(y.b, lo.b + 1):
                out.add(project((a, b), p))
    return frozenset(out)
