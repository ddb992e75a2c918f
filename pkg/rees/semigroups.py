"""Monomial modules over the degree-r Veronese subring of ``k[[s, t]]``.

Elements are exponent pairs ``(a, b)`` standing for ``s^a t^b``. The ring
itself is spanned by the pairs whose total degree is divisible by ``r``, so
a module generated by ``gens`` contains ``p`` exactly when ``p - q`` is
non-negative with degree divisible by ``r`` for some generator ``q``.

Two finitely generated modules are equal when each contains the generators of
the other; membership is closed-form, so no degree truncation is involved.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import PreconditionError

Pair = tuple[int, int]


def pair_degree(p: Pair) -> int:
    return p[0] + p[1]


def _add(p: Pair, q: Pair) -> Pair:
    return (p[0] + q[0], p[1] + q[1])


@dataclass(frozen=True)
class SemigroupModule:
    r: int
    gens: frozenset[Pair]

    @classmethod
    def generated_by(cls, r: int, gens: Iterable[Pair]) -> SemigroupModule:
        if r < 1:
            raise PreconditionError(f"The Veronese degree must be at least 1, got {r}.")
        return cls(r, frozenset((int(a), int(b)) for a, b in gens))

    def __contains__(self, p: Pair) -> bool:
        return any(
            p[0] >= q[0] and p[1] >= q[1] and (pair_degree(p) - pair_degree(q)) % self.r == 0
            for q in self.gens
        )

    def _check(self, other: SemigroupModule) -> None:
        if self.r != other.r:
            raise PreconditionError(f"Veronese degrees differ: {self.r} vs {other.r}.")

    def __le__(self, other: SemigroupModule) -> bool:
        self._check(other)
        return all(q in other for q in self.gens)

    def equals(self, other: SemigroupModule) -> bool:
        return self <= other and other <= self

    def __add__(self, other: SemigroupModule) -> SemigroupModule:
        self._check(other)
        return SemigroupModule(self.r, self.gens | other.gens)

    def __mul__(self, other: SemigroupModule) -> SemigroupModule:
        self._check(other)
        return SemigroupModule(self.r, frozenset(_add(p, q) for p in self.gens for q in other.gens))

    def shift(self, element: Pair) -> SemigroupModule:
        """The module ``element * self``."""
        return SemigroupModule(self.r, frozenset(_add(element, q) for q in self.gens))

    def power(self, n: int) -> SemigroupModule:
        result = SemigroupModule(self.r, frozenset({(0, 0)}))
        for _ in range(n):
            result = result * self
        return result


def element_power(p: Pair, n: int) -> Pair:
    return (p[0] * n, p[1] * n)
