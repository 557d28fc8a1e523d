"""
Canonical PBW normal forms: elements of A as sums c * x^alpha with the
coefficients written on the left.
Formas normais PBW canonicas com coeficientes a esquerda.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Iterable, NamedTuple, Optional, Tuple

from .monomials import ExponentVector
from .presentation import add_into

if TYPE_CHECKING:
    from .coeffring import CoeffRing
    from .presentation import Presentation

Term = Tuple[Any, ExponentVector]


class LeadingData(NamedTuple):
    """(lm, lc, lt); lm is None for the zero polynomial (lm(0) := 0)."""

    monomial: Optional[ExponentVector]
    coefficient: Any
    term: "NCPolynomial"


def render_terms(ring: "CoeffRing", pieces: Iterable[Tuple[Any, str]]) -> str:
    """
    Joins (coefficient, monomial text) pairs: `(3*x2)*D1 - (3*x1*x2)`.
    A monomial text of "1" marks a constant term.
    """
    out = []
    for coeff, mono in pieces:
        negative, magnitude = ring.split_sign(coeff)
        if mono == "1":
            body = ring.render_coefficient(magnitude)
        elif ring.is_one(magnitude):
            body = mono
        else:
            body = f"{ring.render_coefficient(magnitude)}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) if out else "0"


class NCPolynomial:
    """
    Element of a skew PBW extension in normal form.

    terms: ((coeff, exponent), ...) strictly descending under the
    presentation's monomial order, no zero coefficients.
    """

    __slots__ = ("presentation", "terms", "_hash")

    def __init__(self, presentation: "Presentation", terms: Tuple[Term, ...] = ()):
        self.presentation = presentation
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, presentation: "Presentation", mapping: Dict[ExponentVector, Any]) -> "NCPolynomial":
        key = presentation.order.key
        items = sorted(((e, c) for e, c in mapping.items() if c), key=lambda ec: key(ec[0]), reverse=True)
        return cls(presentation, tuple((c, e) for e, c in items))

    def to_dict(self) -> Dict[ExponentVector, Any]:
        return {e: c for c, e in self.terms}

    # ---------------------------
    # Coercion
    # ---------------------------

    def _lift(self, other: Any) -> "NCPolynomial":
        return self.presentation.coerce(other)

    # ---------------------------
    # Arithmetic
    # ---------------------------

    def add(self, other: Any) -> "NCPolynomial":
        other = self._lift(other)
        result = self.to_dict()
        for c, e in other.terms:
            add_into(result, e, c)
        return NCPolynomial.from_dict(self.presentation, result)

    def subtract(self, other: Any) -> "NCPolynomial":
        return self.add(-self._lift(other))

    def negate(self) -> "NCPolynomial":
        return NCPolynomial(self.presentation, tuple((-c, e) for c, e in self.terms))

    def left_scale(self, r: Any) -> "NCPolynomial":
        """r * f with r in R acting on the coefficients."""
        r = self.presentation.ring.coerce(r)
        if not r:
            return self.presentation.zero()
        return NCPolynomial.from_dict(self.presentation, {e: r * c for c, e in self.terms})

    def multiply(self, other: Any) -> "NCPolynomial":
        other = self._lift(other)
        p = self.presentation
        result: Dict[ExponentVector, Any] = {}
        for a, alpha in self.terms:
            for b, beta in other.terms:
                for eta, c in p.term_product(a, alpha, b, beta).items():
                    add_into(result, eta, c)
        return NCPolynomial.from_dict(p, result)

    def mul_left_term(self, coeff: Any, exponent: ExponentVector) -> "NCPolynomial":
        """(coeff * x^exponent) * f."""
        p = self.presentation
        coeff = p.ring.coerce(coeff)
        result: Dict[ExponentVector, Any] = {}
        for b, beta in self.terms:
            for eta, c in p.term_product(coeff, exponent, b, beta).items():
                add_into(result, eta, c)
        return NCPolynomial.from_dict(p, result)

    def left_mul(self, g: "NCPolynomial") -> "NCPolynomial":
        """g * f (left action of A on itself)."""
        return self._lift(g).multiply(self)

    def __add__(self, other):
        return self.add(other)

    def __radd__(self, other):
        return self._lift(other).add(self)

    def __sub__(self, other):
        return self.subtract(other)

    def __rsub__(self, other):
        return self._lift(other).subtract(self)

    def __neg__(self):
        return self.negate()

    def __mul__(self, other):
        return self.multiply(other)

    def __rmul__(self, other):
        return self._lift(other).multiply(self)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)) or not other:
            raise TypeError("NCPolynomial can only be divided by a nonzero rational")
        return self.left_scale(self.presentation.ring.coerce(Fraction(1) / other))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.presentation.one()
        for _ in range(exponent):
            result = result.multiply(self)
        return result

    # ---------------------------
    # Leading data
    # ---------------------------

    def leading_data(self) -> LeadingData:
        if not self.terms:
            return LeadingData(None, self.presentation.ring.zero(), self)
        c, e = self.terms[0]
        return LeadingData(e, c, NCPolynomial(self.presentation, (self.terms[0],)))

    def lead(self) -> Tuple[Any, ExponentVector, int]:
        """(lc, exp(lm), component); the component of a polynomial is always 1."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        c, e = self.terms[0]
        return c, e, 1

    def lead_key(self):
        return self.presentation.order.key(self.terms[0][1])

    def render_lm(self) -> str:
        if not self.terms:
            return "0"
        return self.terms[0][1].render(self.presentation.variables)

    @property
    def space(self) -> "Presentation":
        return self.presentation

    def degree(self) -> int:
        """Largest |alpha| among the terms; -1 for zero."""
        return max((e.degree() for _, e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e.is_zero() for _, e in self.terms)

    def constant_value(self) -> Any:
        """The coefficient of x^0 when f is a constant; zero otherwise."""
        if not self.terms:
            return self.presentation.ring.zero()
        c, e = self.terms[-1]
        return c if e.is_zero() else self.presentation.ring.zero()

    def zero_like(self) -> "NCPolynomial":
        return self.presentation.zero()

    # ---------------------------
    # Protocol
    # ---------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPolynomial):
            return other.presentation is self.presentation and other.terms == self.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return len(self.terms) == 1 and self.terms[0][1].is_zero() and self.terms[0][0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif len(self.terms) == 1 and self.terms[0][1].is_zero():
                self._hash = hash(self.terms[0][0])
            else:
                self._hash = hash(self.terms)
        return self._hash

    def render(self) -> str:
        names = self.presentation.variables
        return render_terms(self.presentation.ring, ((c, e.render(names)) for c, e in self.terms))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NCPolynomial({self.render()})"
