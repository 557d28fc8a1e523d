"""
Exponent vectors of standard monomials x^alpha = x1^a1 ... xn^an.
Vetores de expoentes dos monomios padrao.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence, Tuple


@dataclass(frozen=True, slots=True)
class ExponentVector:
    """alpha in N^n. Addition is componentwise, divisibility is componentwise <=."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.entries):
            raise ValueError(f"negative exponent in {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "ExponentVector":
        return cls(tuple(entries))

    @classmethod
    def zero(cls, n: int) -> "ExponentVector":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "ExponentVector":
        entries = [0] * n
        entries[i] = 1
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @property
    def n(self) -> int:
        return len(self.entries)

    def degree(self) -> int:
        """|alpha| = a1 + ... + an."""
        return sum(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _same_n(self, other: "ExponentVector") -> None:
        if len(self.entries) != len(other.entries):
            raise ValueError(f"dimension mismatch: {len(self.entries)} != {len(other.entries)}")

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        self._same_n(other)
        return ExponentVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExponentVector") -> "ExponentVector":
        self._same_n(other)
        return ExponentVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def divides(self, other: "ExponentVector") -> bool:
        """alpha | beta iff alpha_i <= beta_i for all i."""
        self._same_n(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def lcm(self, other: "ExponentVector") -> "ExponentVector":
        self._same_n(other)
        return ExponentVector(tuple(max(a, b) for a, b in zip(self.entries, other.entries)))

    def first_index(self) -> int:
        """Smallest i with a_i > 0 (-1 for the zero vector)."""
        for i, a in enumerate(self.entries):
            if a:
                return i
        return -1

    def last_index(self) -> int:
        """Largest i with a_i > 0 (-1 for the zero vector)."""
        for i in range(len(self.entries) - 1, -1, -1):
            if self.entries[i]:
                return i
        return -1

    def render(self, names: Sequence[str]) -> str:
        """`D1^2*D2`; the zero vector renders as `1`."""
        parts = []
        for name, a in zip(names, self.entries):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"ExponentVector{self.entries}"


def lcm_all(vectors: Sequence[ExponentVector]) -> ExponentVector:
    result = vectors[0]
    for v in vectors[1:]:
        result = result.lcm(v)
    return result


def monomials_up_to(n: int, max_degree: int) -> Iterator[ExponentVector]:
    """All exponent vectors of total degree <= max_degree."""
    for entries in product(range(max_degree + 1), repeat=n):
        if sum(entries) <= max_degree:
            yield ExponentVector(entries)
