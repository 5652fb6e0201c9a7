"""The affine Weyl group of type A_{kappa-1}^{(1)} acting on h^*.

An element is stored as its integer action matrix on the ordered basis
``(alpha_0, ..., alpha_{kappa-1}, Lambda_0)`` together with the inverse
matrix.  The action is faithful, so two elements are equal iff their matrices
are.
"""
from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .roots import RootVector, WeightVector, cartan_matrix, pairing_weight_coroot, simple_root

DEFAULT_WORD_CAP = 12

Word = tuple[int, ...]


class WordCapExceeded(ValueError):
    pass


@lru_cache(maxsize=None)
def _reflection_matrix(i: int, kappa: int) -> np.ndarray:
    a = cartan_matrix(kappa)
    s = np.eye(kappa + 1, dtype=np.int64)
    for j in range(kappa):
        s[i, j] -= a[i][j]
    if i == 0:
        s[0, kappa] -= 1
    s.setflags(write=False)
    return s


class WeylElement:
    __slots__ = ("kappa", "mat", "inv", "_key", "__dict__")

    def __init__(self, kappa: int, mat: np.ndarray, inv: np.ndarray):
        self.kappa = kappa
        mat.setflags(write=False)
        inv.setflags(write=False)
        self.mat = mat
        self.inv = inv
        self._key = mat.tobytes()

    @classmethod
    def identity(cls, kappa: int) -> "WeylElement":
        e = np.eye(kappa + 1, dtype=np.int64)
        return cls(kappa, e, e.copy())

    @classmethod
    def from_word(cls, word: Iterable[int], kappa: int) -> "WeylElement":
        w = cls.identity(kappa)
        for i in word:
            w = w.rmul_simple(i)
        return w

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.kappa == other.kappa and self._key == other._key

    def __hash__(self):
        return hash((self.kappa, self._key))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.kappa != other.kappa:
            raise ValueError(f"kappa mismatch: {self.kappa} vs {other.kappa}")
        return WeylElement(self.kappa, self.mat @ other.mat, other.inv @ self.inv)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.kappa, self.inv.copy(), self.mat.copy())

    def lmul_simple(self, i: int) -> "WeylElement":
        """``s_i * self``."""
        s = _reflection_matrix(i % self.kappa, self.kappa)
        return WeylElement(self.kappa, s @ self.mat, self.inv @ s)

    def rmul_simple(self, i: int) -> "WeylElement":
        """``self * s_i``."""
        s = _reflection_matrix(i % self.kappa, self.kappa)
        return WeylElement(self.kappa, self.mat @ s, s @ self.inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.mat, np.eye(self.kappa + 1, dtype=np.int64)))

    def apply(self, alpha: RootVector) -> RootVector:
        return apply_to_root(self, alpha)

    def _column(self, mat: np.ndarray, i: int) -> tuple[int, ...]:
        return tuple(int(c) for c in mat[: self.kappa, i])

    def is_right_descent(self, i: int) -> bool:
        """``l(w s_i) < l(w)``, i.e. ``w(alpha_i)`` is negative."""
        return any(c < 0 for c in self._column(self.mat, i))

    def is_left_descent(self, i: int) -> bool:
        """``l(s_i w) < l(w)``, i.e. ``w^{-1}(alpha_i)`` is negative."""
        return any(c < 0 for c in self._column(self.inv, i))

    def right_descents(self) -> list[int]:
        return [i for i in range(self.kappa) if self.is_right_descent(i)]

    def left_descents(self) -> list[int]:
        return [i for i in range(self.kappa) if self.is_left_descent(i)]

    @cached_property
    def reduced_word(self) -> Word:
        """Canonical reduced word: strip the smallest left descent until the identity remains."""
        word = []
        w = self
        while True:
            descents = w.left_descents()
            if not descents:
                break
            i = descents[0]
            word.append(i)
            w = w.lmul_simple(i)
        if not w.is_identity():
            raise AssertionError("descent stripping did not reach the identity")
        return tuple(word)

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    def to_json(self) -> list[int]:
        return list(self.reduced_word)

    @classmethod
    def from_json(cls, word: Sequence[int], kappa: int) -> "WeylElement":
        return cls.from_word(word, kappa)

    def __repr__(self):
        if not self.reduced_word:
            return "e"
        return "".join(f"s{i}" for i in self.reduced_word)


def simple_reflection(i: int, kappa: int) -> WeylElement:
    return WeylElement.identity(kappa).rmul_simple(i)


def apply_to_root(w: WeylElement, alpha: RootVector) -> RootVector:
    if w.kappa != alpha.kappa:
        raise ValueError(f"kappa mismatch: {w.kappa} vs {alpha.kappa}")
    v = w.mat[: w.kappa, : w.kappa] @ np.asarray(alpha.coeffs, dtype=np.int64)
    return RootVector(w.kappa, tuple(int(c) for c in v))


def length(w: WeylElement) -> int:
    return w.length


def inversion_set_from_word(word: Sequence[int], kappa: int) -> list[RootVector]:
    """``[alpha_{i1}, s_{i1} alpha_{i2}, s_{i1} s_{i2} alpha_{i3}, ...]`` in word order."""
    out = []
    prefix = WeylElement.identity(kappa)
    for i in word:
        out.append(apply_to_root(prefix, simple_root(i, kappa)))
        prefix = prefix.rmul_simple(i)
    return out


def inversion_set(w: WeylElement) -> frozenset[RootVector]:
    """``R(w) = R_+ cap w R_-``, read off a reduced word."""
    return frozenset(inversion_set_from_word(w.reduced_word, w.kappa))


def is_reduced(word: Sequence[int], kappa: int) -> bool:
    return WeylElement.from_word(word, kappa).length == len(word)


def weak_bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Weak right order: ``l(v) + l(v^{-1} w) = l(w)``."""
    return v.length + (v.inverse() * w).length == w.length


def weak_bruhat_covers(v: WeylElement, w: WeylElement) -> bool:
    """``w = v s_i`` with ``l(w) = l(v) + 1``."""
    return w.length == v.length + 1 and (v.inverse() * w).length == 1


def bruhat_interval(w: WeylElement) -> frozenset[WeylElement]:
    """``[e, w]`` in the weak right order: everything reachable by stripping right descents."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for i in u.right_descents():
                v = u.rmul_simple(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def reduced_words(w: WeylElement, cap: int = DEFAULT_WORD_CAP) -> frozenset[Word]:
    """Every reduced expression of ``w`` (exponential; refuses lengths above ``cap``)."""
    if w.length > cap:
        raise WordCapExceeded(f"length {w.length} exceeds the cap {cap}")
    memo: dict[WeylElement, frozenset[Word]] = {}

    def rec(u: WeylElement) -> frozenset[Word]:
        if u in memo:
            return memo[u]
        descents = u.right_descents()
        if not descents:
            out = frozenset({()})
        else:
            out = frozenset(word + (i,) for i in descents for word in rec(u.rmul_simple(i)))
        memo[u] = out
        return out

    return rec(w)


def commutation_class(word: Sequence[int], kappa: int) -> frozenset[Word]:
    """All words reachable by swapping adjacent commuting letters."""
    a = cartan_matrix(kappa)
    start = tuple(word)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for k in range(len(u) - 1):
            i, j = u[k], u[k + 1]
            if i != j and a[i][j] == 0:
                v = u[:k] + (j, i) + u[k + 2:]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return frozenset(seen)


def is_fully_commutative(w: WeylElement, cap: int = DEFAULT_WORD_CAP) -> bool:
    return commutation_class(w.reduced_word, w.kappa) == reduced_words(w, cap)


def is_pluscule(w: WeylElement, zeta: WeightVector) -> bool:
    return all(pairing_weight_coroot(zeta, a) == -1 for a in inversion_set(w))


def is_minuscule(w: WeylElement, zeta: WeightVector) -> bool:
    return all(pairing_weight_coroot(zeta, a) == 1 for a in inversion_set(w.inverse()))


def elements_by_length(kappa: int, max_length: int) -> list[list[WeylElement]]:
    """``levels[k]`` holds every element of length ``k`` (BFS on right multiplication)."""
    levels = [[WeylElement.identity(kappa)]]
    seen = set(levels[0])
    for _ in range(max_length):
        nxt = []
        for u in levels[-1]:
            for i in range(kappa):
                if u.is_right_descent(i):
                    continue
                v = u.rmul_simple(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        levels.append(nxt)
    return levels
