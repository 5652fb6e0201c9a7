"""Root lattice of the affine root system of type A_{kappa-1}^{(1)}.

Roots are stored by their coefficients on the simple roots ``alpha_0 ..
alpha_{kappa-1}``; a coroot ``beta^vee`` carries the same coefficients as
``beta``.  Weights are stored by their fundamental-weight coefficients only,
which is all that is needed to pair them with coroots.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@lru_cache(maxsize=None)
def cartan_matrix(kappa: int) -> tuple[tuple[int, ...], ...]:
    """Generalized Cartan matrix ``a_ij = <alpha_j, alpha_i^vee>``.

    >>> cartan_matrix(2)
    ((2, -2), (-2, 2))
    >>> cartan_matrix(3)
    ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    """
    if kappa < 2:
        raise ValueError(f"kappa must be >= 2, got {kappa}")
    if kappa == 2:
        return ((2, -2), (-2, 2))
    rows = []
    for i in range(kappa):
        row = []
        for j in range(kappa):
            d = (i - j) % kappa
            row.append(2 if d == 0 else -1 if d in (1, kappa - 1) else 0)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class RootVector:
    """An element ``sum c_i alpha_i`` of the root lattice Q."""

    kappa: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.kappa:
            raise ValueError(f"expected {self.kappa} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "RootVector":
        coeffs = tuple(int(c) for c in coeffs)
        return cls(len(coeffs), coeffs)

    def _check(self, other: "RootVector"):
        if self.kappa != other.kappa:
            raise ValueError(f"kappa mismatch: {self.kappa} vs {other.kappa}")

    def __add__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(self.kappa, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(self.kappa, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RootVector":
        return RootVector(self.kappa, tuple(-x for x in self.coeffs))

    def __mul__(self, k: int) -> "RootVector":
        return RootVector(self.kappa, tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i % self.kappa]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "RootVector":
        return cls(int(obj["kappa"]), tuple(int(c) for c in obj["coeffs"]))

    def __str__(self):
        terms = []
        n = min(self.coeffs)
        if n > 0:
            terms.append("δ" if n == 1 else f"{n}δ")
        rest = self if n <= 0 else self - delta(self.kappa) * n
        for i, c in enumerate(rest.coeffs):
            if c == 0:
                continue
            terms.append(f"α{i}" if c == 1 else f"{c}α{i}")
        return " + ".join(terms) if terms else "0"


def zero(kappa: int) -> RootVector:
    return RootVector(kappa, (0,) * kappa)


def simple_root(i: int, kappa: int) -> RootVector:
    c = [0] * kappa
    c[i % kappa] = 1
    return RootVector(kappa, tuple(c))


def delta(kappa: int) -> RootVector:
    """The null root ``alpha_0 + ... + alpha_{kappa-1}``."""
    return RootVector(kappa, (1,) * kappa)


def alpha_interval(i: int, j: int, kappa: int) -> RootVector:
    """``alpha_ij = sum_{i <= k < j} alpha_{k mod kappa}`` for integers ``i < j``.

    >>> str(alpha_interval(-12, 2, 9))
    'δ + α0 + α1 + α6 + α7 + α8'
    """
    if i >= j:
        raise ValueError(f"alpha_interval needs i < j, got i={i}, j={j}")
    c = [0] * kappa
    for k in range(i, j):
        c[k % kappa] += 1
    return RootVector(kappa, tuple(c))


def pairing_root_coroot(alpha: RootVector, beta: RootVector) -> int:
    """``<alpha, beta^vee> = sum_{i,j} beta_i alpha_j a_ij``."""
    alpha._check(beta)
    a = cartan_matrix(alpha.kappa)
    total = 0
    for i, bi in enumerate(beta.coeffs):
        if bi:
            row = a[i]
            total += bi * sum(row[j] * cj for j, cj in enumerate(alpha.coeffs) if cj)
    return total


def norm(alpha: RootVector) -> int:
    """``(alpha | alpha) = <alpha, alpha^vee>``."""
    return pairing_root_coroot(alpha, alpha)


def reflect(alpha: RootVector, i: int) -> RootVector:
    """Simple reflection ``s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i``."""
    kappa = alpha.kappa
    i %= kappa
    row = cartan_matrix(kappa)[i]
    p = sum(row[j] * c for j, c in enumerate(alpha.coeffs))
    if not p:
        return alpha
    c = list(alpha.coeffs)
    c[i] -= p
    return RootVector(kappa, tuple(c))


@dataclass(frozen=True)
class WeightVector:
    """A weight ``sum a_i Lambda_i`` known through its pairings with coroots."""

    kappa: int
    fund_coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.fund_coeffs) != self.kappa:
            raise ValueError(f"expected {self.kappa} coefficients, got {len(self.fund_coeffs)}")


def fundamental_weight(i: int, kappa: int) -> WeightVector:
    c = [0] * kappa
    c[i % kappa] = 1
    return WeightVector(kappa, tuple(c))


def pairing_weight_coroot(w: WeightVector, beta: RootVector) -> int:
    """``<w, beta^vee>`` using ``<Lambda_i, alpha_j^vee> = delta_ij``."""
    if w.kappa != beta.kappa:
        raise ValueError(f"kappa mismatch: {w.kappa} vs {beta.kappa}")
    return sum(a * c for a, c in zip(w.fund_coeffs, beta.coeffs))


def is_positive_real_root(alpha: RootVector) -> bool:
    """Positive real roots are the nonzero elements of Q_+ of norm 2."""
    return alpha.is_nonneg() and bool(alpha) and norm(alpha) == 2


def is_real_root(alpha: RootVector) -> bool:
    return norm(alpha) == 2 and (alpha.is_nonneg() or (-alpha).is_nonneg())


def null_multiplicity(alpha: RootVector) -> int:
    """``N(alpha) = max{k : alpha - k delta in Q_+}``, the minimum coefficient."""
    if not alpha.is_nonneg():
        raise ValueError(f"{alpha} is not in Q_+")
    return min(alpha.coeffs)


def support(alpha: RootVector, bottom: Sequence) -> frozenset:
    """Bottom cells ``b_i`` at the residues where ``alpha`` has a positive coefficient.

    ``bottom`` is indexed by residue (``bottom[i] = b_i``).
    """
    if not alpha.is_nonneg():
        raise ValueError(f"{alpha} is not in Q_+")
    return frozenset(bottom[i] for i, c in enumerate(alpha.coeffs) if c > 0)


def positive_roots_up_to(kappa: int, max_null: int) -> Iterator[RootVector]:
    """All positive real roots with ``N(alpha) <= max_null``.

    Uses the decomposition of R_+ into ``alpha_ij + k delta`` and
    ``-alpha_ij + (k+1) delta`` over the finite roots ``1 <= i < j <= kappa``.
    """
    d = delta(kappa)
    finite = [alpha_interval(i, j, kappa) for i, j in itertools.combinations(range(1, kappa + 1), 2)]
    for k in range(max_null + 1):
        for a in finite:
            yield a + d * k
            yield d * (k + 1) - a


def bounded_q_plus(kappa: int, bound: int) -> Iterator[RootVector]:
    """Every element of Q_+ with all coefficients ``<= bound``."""
    for c in itertools.product(range(bound + 1), repeat=kappa):
        yield RootVector(kappa, c)
