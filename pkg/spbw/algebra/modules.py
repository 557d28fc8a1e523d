"""
Free modules A^m and their Groebner machinery.
Modulos livres A^m e sua maquinaria de Groebner.

A ModuleVector is a flat list of (coeff, exponent, index) terms sorted by the
module order, so division, B_F sets and Buchberger in groebner.py work on it
unchanged. Subsets whose leading indices differ have X_F = 0 and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

from spbw.core.errors import MixedPresentationError

from .groebner import (
    BFData,
    DivisionResult,
    GroebnerBasis,
    GroebnerOptions,
    Solver,
    bf_set,
    buchberger,
    common_space,
    divide,
)
from .monomials import ExponentVector
from .order import ModuleOrder
from .poly import NCPolynomial, render_terms
from .presentation import Presentation, add_into

ModuleTerm = Tuple[Any, ExponentVector, int]

# B_F data of a module subset; lcm is None when X_F = 0
ModuleBFData = BFData


@dataclass(frozen=True)
class FreeModule:
    """A^m with a TOP or TOPREV order over the presentation's monomial order."""

    presentation: Presentation
    rank: int
    scheme: str = "toprev"

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")

    @cached_property
    def order(self) -> ModuleOrder:
        return ModuleOrder(self.presentation.order, self.scheme)

    def vector(self, components: Sequence[Any]) -> "ModuleVector":
        """(f_1, ..., f_m) as f_1 e_1 + ... + f_m e_m."""
        if len(components) != self.rank:
            raise MixedPresentationError(f"expected {self.rank} components, got {len(components)}")
        p = self.presentation
        mapping: Dict[Tuple[ExponentVector, int], Any] = {}
        for index, f in enumerate(components, start=1):
            f = p.coerce(f)
            for c, e in f.terms:
                mapping[(e, index)] = c
        return ModuleVector.from_dict(self, mapping)

    def unit(self, index: int) -> "ModuleVector":
        if not 1 <= index <= self.rank:
            raise IndexError(f"component index {index} out of range 1..{self.rank}")
        zero = ExponentVector.zero(self.presentation.n)
        return ModuleVector(self, ((self.presentation.ring.one(), zero, index),))

    def zero(self) -> "ModuleVector":
        return ModuleVector(self, ())


class ModuleVector:
    """Element of A^m in normal form."""

    __slots__ = ("module", "terms", "_hash")

    def __init__(self, module: FreeModule, terms: Tuple[ModuleTerm, ...] = ()):
        self.module = module
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, module: FreeModule, mapping: Dict[Tuple[ExponentVector, int], Any]) -> "ModuleVector":
        key = module.order.key
        items = sorted(((k, c) for k, c in mapping.items() if c), key=lambda kc: key(*kc[0]), reverse=True)
        return cls(module, tuple((c, e, i) for (e, i), c in items))

    def to_dict(self) -> Dict[Tuple[ExponentVector, int], Any]:
        return {(e, i): c for c, e, i in self.terms}

    @property
    def presentation(self) -> Presentation:
        return self.module.presentation

    @property
    def space(self) -> FreeModule:
        return self.module

    @property
    def rank(self) -> int:
        return self.module.rank

    def _check(self, other: "ModuleVector") -> "ModuleVector":
        if not isinstance(other, ModuleVector) or other.module != self.module:
            raise MixedPresentationError("vectors belong to different free modules")
        return other

    # ---------------------------
    # Arithmetic
    # ---------------------------

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        other = self._check(other)
        result = self.to_dict()
        for c, e, i in other.terms:
            current = result.get((e, i))
            total = c if current is None else current + c
            if total:
                result[(e, i)] = total
            else:
                result.pop((e, i), None)
        return ModuleVector.from_dict(self.module, result)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.module, tuple((-c, e, i) for c, e, i in self.terms))

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-self._check(other))

    def mul_left_term(self, coeff: Any, alpha: ExponentVector) -> "ModuleVector":
        """(coeff * x^alpha) * v."""
        p = self.presentation
        coeff = p.ring.coerce(coeff)
        per_index: Dict[int, Dict[ExponentVector, Any]] = {}
        for b, beta, index in self.terms:
            bucket = per_index.setdefault(index, {})
            for eta, c in p.term_product(coeff, alpha, b, beta).items():
                add_into(bucket, eta, c)
        return ModuleVector.from_dict(
            self.module, {(e, i): c for i, bucket in per_index.items() for e, c in bucket.items()}
        )

    def left_mul(self, g: NCPolynomial) -> "ModuleVector":
        """g * v."""
        total = self.zero_like()
        for c, e in g.terms:
            total = total + self.mul_left_term(c, e)
        return total

    def left_scale(self, r: Any) -> "ModuleVector":
        r = self.presentation.ring.coerce(r)
        return ModuleVector.from_dict(self.module, {(e, i): r * c for c, e, i in self.terms})

    def zero_like(self) -> "ModuleVector":
        return ModuleVector(self.module, ())

    # ---------------------------
    # Access
    # ---------------------------

    def component(self, index: int) -> NCPolynomial:
        if not 1 <= index <= self.rank:
            raise IndexError(f"component index {index} out of range 1..{self.rank}")
        return self.presentation.polynomial({e: c for c, e, i in self.terms if i == index})

    def components(self) -> Tuple[NCPolynomial, ...]:
        return tuple(self.component(i) for i in range(1, self.rank + 1))

    def lead(self) -> ModuleTerm:
        if not self.terms:
            raise ValueError("zero vector has no leading term")
        return self.terms[0]

    def lead_key(self):
        _, e, i = self.terms[0]
        return self.module.order.key(e, i)

    def degree(self) -> int:
        return max((e.degree() for _, e, _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def _monomial_text(self, exponent: ExponentVector, index: int) -> str:
        if exponent.is_zero():
            return f"e{index}"
        return f"{exponent.render(self.presentation.variables)}*e{index}"

    def render_lm(self) -> str:
        if not self.terms:
            return "0"
        _, e, i = self.terms[0]
        return self._monomial_text(e, i)

    def render(self) -> str:
        return render_terms(self.presentation.ring, ((c, self._monomial_text(e, i)) for c, e, i in self.terms))

    def render_components(self) -> str:
        return "[" + " ; ".join(f.render() for f in self.components()) + "]"

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return other.module == self.module and other.terms == self.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.module.rank, self.terms))
        return self._hash

    def __repr__(self) -> str:
        return f"ModuleVector({self.render()})"


def _same_module(vectors: Sequence[Any]) -> None:
    if any(not isinstance(v, ModuleVector) for v in vectors):
        raise MixedPresentationError("module operations need ModuleVector operands")
    common_space(list(vectors))


def mod_divide(
    v: ModuleVector, divisors: Sequence[ModuleVector], solver: Optional[Solver] = None, trace: bool = False
) -> DivisionResult:
    """v = sum q_i g_i + r with r reduced; quotients are elements of A."""
    _same_module([v, *divisors])
    return divide(v, divisors, solver=solver, trace=trace)


def mod_bf_set(subset: Sequence[ModuleVector], indices: Optional[Sequence[int]] = None) -> ModuleBFData:
    _same_module(subset)
    return bf_set(subset, indices)


def mod_buchberger(gens: Sequence[ModuleVector], options: Optional[GroebnerOptions] = None) -> GroebnerBasis:
    _same_module(gens)
    return buchberger(gens, options)
