"""
Monomial orders on Mon(A) and module orders on Mon(A^m).
Ordens monomiais em Mon(A) e ordens de modulo em Mon(A^m).

Only degree-compatible orders are admitted: deglex and degrevlex, each with a
variable precedence. Module orders are TOP and TOPREV.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .monomials import ExponentVector


LESS = -1
EQUAL = 0
GREATER = 1

ORDER_KINDS = ("deglex", "degrevlex")
MODULE_SCHEMES = ("top", "toprev")


def _sign(a, b) -> int:
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


@dataclass(frozen=True)
class MonomialOrder:
    """
    Degree-compatible order on standard monomials.

    - kind: "deglex" or "degrevlex"
    - precedence: variable indices from highest to lowest
      (deglex D1 > D2 is precedence (0, 1))
    """

    kind: str
    precedence: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            # lex, POT and weighted orders are not degree compatible
            raise ValueError(f"unsupported monomial order '{self.kind}' (use deglex or degrevlex)")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence {self.precedence} is not a permutation")

    @classmethod
    def deglex(cls, n: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls("deglex", tuple(precedence) if precedence is not None else tuple(range(n)))

    @classmethod
    def degrevlex(cls, n: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls("degrevlex", tuple(precedence) if precedence is not None else tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.precedence)

    def key(self, alpha: ExponentVector) -> Tuple[int, ...]:
        """Sort key: a larger key is a larger monomial."""
        if len(alpha) != len(self.precedence):
            raise ValueError(f"dimension mismatch: {len(alpha)} != {len(self.precedence)}")
        entries = alpha.entries
        if self.kind == "deglex":
            return (sum(entries),) + tuple(entries[i] for i in self.precedence)
        return (sum(entries),) + tuple(-entries[i] for i in reversed(self.precedence))

    def compare(self, alpha: ExponentVector, beta: ExponentVector) -> int:
        return _sign(self.key(alpha), self.key(beta))

    def render(self, names: Sequence[str]) -> str:
        return f"{self.kind} " + " > ".join(names[i] for i in self.precedence)


@dataclass(frozen=True)
class ModuleOrder:
    """
    Term-over-position orders on X*e_i.
    TOP breaks ties with the larger index, TOPREV with the smaller one.
    """

    base: MonomialOrder
    scheme: str = "toprev"

    def __post_init__(self):
        if self.scheme not in MODULE_SCHEMES:
            # POT/POTREV are not degree compatible
            raise ValueError(f"unsupported module order '{self.scheme}' (use top or toprev)")

    def key(self, alpha: ExponentVector, index: int) -> Tuple:
        tie = index if self.scheme == "top" else -index
        return (self.base.key(alpha), tie)

    def module_compare(
        self,
        left: Tuple[ExponentVector, int],
        right: Tuple[ExponentVector, int],
        rank: Optional[int] = None,
    ) -> int:
        """Compares (alpha, i) with (beta, j); indices are 1-based."""
        for _, index in (left, right):
            if index < 1 or (rank is not None and index > rank):
                raise IndexError(f"component index {index} out of range 1..{rank if rank is not None else 'm'}")
        return _sign(self.key(*left), self.key(*right))
