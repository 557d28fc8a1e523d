"""
LGS coefficient rings: exact arithmetic, left-ideal membership with
certificates and syzygy generators.
Aneis de coeficientes LGS: aritmetica exata, pertinencia com certificado e
geradores de sizigias.

Two instances:
- QQ: the rationals (elements are fractions.Fraction)
- PolynomialRing: QQ[t1, ..., tm], self-hosted as the trivial-twist skew
  PBW extension of QQ (elements are NCPolynomial over that presentation)
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple

from .groebner import GroebnerOptions, buchberger, divide, lift
from .poly import NCPolynomial
from .presentation import Presentation

log = logging.getLogger(__name__)

Certificate = Tuple[Any, ...]

# per-ring memo sizes; older entries are evicted first
BASIS_CACHE_SIZE = 256
IMAGE_CACHE_SIZE = 4096


class CoeffRing(ABC):
    """Commutative coefficient ring R with decidable membership and syzygies."""

    generators: Tuple[str, ...] = ()
    is_field: bool = False
    is_domain: bool = True

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Converts ints, fractions and compatible elements into R."""

    @abstractmethod
    def rational_value(self, a: Any) -> Optional[Fraction]:
        """The rational a represents when a is constant; None otherwise."""

    @abstractmethod
    def unit_inverse(self, a: Any) -> Optional[Any]: ...

    @abstractmethod
    def substitute(self, images: Sequence[Any], a: Any) -> Any:
        """Image of a under the endomorphism t_k -> images[k]."""

    @abstractmethod
    def derive(self, sigma_images: Sequence[Any], delta_images: Sequence[Any], a: Any) -> Any:
        """Image of a under the sigma-derivation given on generators."""

    @abstractmethod
    def divide_member(self, a: Any, gens: Sequence[Any]) -> Optional[Certificate]:
        """(b_1..b_m) with a = sum b_i r_i, or None if a is not in <gens>."""

    @abstractmethod
    def syzygy_generators(self, gens: Sequence[Any]) -> List[Certificate]:
        """Generators of {b : sum b_i r_i = 0}."""

    @abstractmethod
    def render(self, a: Any) -> str: ...

    @abstractmethod
    def declaration(self) -> str:
        """`QQ` or `QQ[t1, t2]`."""

    def generator_elements(self) -> Tuple[Any, ...]:
        return ()

    def from_rational(self, q) -> Any:
        return self.coerce(Fraction(q))

    def is_one(self, a: Any) -> bool:
        return a == 1

    def split_sign(self, a: Any) -> Tuple[bool, Any]:
        """(negative, magnitude) used by the renderer."""
        value = self.rational_value(a)
        if value is not None:
            return (value < 0, -a) if value < 0 else (False, a)
        return False, a

    def render_coefficient(self, magnitude: Any) -> str:
        return self.render(magnitude)


# ---------------------------
# Rationals
# ---------------------------

class RationalField(CoeffRing):
    """QQ with Fraction elements."""

    is_field = True

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        if isinstance(value, NCPolynomial) and value.is_constant():
            return self.coerce(value.constant_value())
        raise TypeError(f"cannot convert {value!r} to a rational")

    def rational_value(self, a: Fraction) -> Fraction:
        return a

    def unit_inverse(self, a: Fraction) -> Optional[Fraction]:
        return 1 / a if a else None

    def substitute(self, images, a):
        return a

    def derive(self, sigma_images, delta_images, a):
        return Fraction(0)

    def divide_member(self, a, gens: Sequence[Any]) -> Optional[Certificate]:
        """Leftmost nonzero pivot k: b_k = a / r_k, every other b_i = 0."""
        if not gens:
            raise ValueError("divide_member needs at least one generator")
        a = self.coerce(a)
        gens = [self.coerce(g) for g in gens]
        zeros = [Fraction(0)] * len(gens)
        if not a:
            return tuple(zeros)
        for k, g in enumerate(gens):
            if g:
                zeros[k] = a / g
                return tuple(zeros)
        return None

    def syzygy_generators(self, gens: Sequence[Any]) -> List[Certificate]:
        """
        Pivot p = first nonzero entry; for each j != p the vector with
        b_p = -r_j and b_j = r_p (or e_j when r_j = 0).
        """
        if not gens:
            raise ValueError("syzygy_generators needs at least one generator")
        gens = [self.coerce(g) for g in gens]
        s = len(gens)
        pivot = next((k for k, g in enumerate(gens) if g), None)
        out = []
        for j in range(s):
            if j == pivot:
                continue
            vector = [Fraction(0)] * s
            if pivot is None or not gens[j]:
                vector[j] = Fraction(1)
            else:
                vector[pivot] = -gens[j]
                vector[j] = gens[pivot]
            out.append(tuple(vector))
        return out

    def render(self, a) -> str:
        return str(self.coerce(a))

    def declaration(self) -> str:
        return "QQ"

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


# ---------------------------
# Polynomials over QQ
# ---------------------------

class PolynomialRing(CoeffRing):
    """
    QQ[t1, ..., tm] as the commutative presentation over QQ (deglex in
    declaration order). Membership and syzygies run on the Groebner engine.
    """

    def __init__(self, generators: Sequence[str]):
        generators = tuple(generators)
        if not generators:
            raise ValueError("a polynomial ring needs at least one generator")
        self.generators = generators
        self.base = Presentation.commutative(QQ, generators)
        self._basis = lru_cache(maxsize=BASIS_CACHE_SIZE)(self._compute_basis)
        self._image = lru_cache(maxsize=IMAGE_CACHE_SIZE)(self._compute_image)

    def __repr__(self) -> str:
        return self.declaration()

    def declaration(self) -> str:
        return "QQ[" + ", ".join(self.generators) + "]"

    def zero(self) -> NCPolynomial:
        return self.base.zero()

    def one(self) -> NCPolynomial:
        return self.base.one()

    @cached_property
    def _generator_elements(self) -> Tuple[NCPolynomial, ...]:
        return tuple(self.base.variable(i) for i in range(len(self.generators)))

    def generator_elements(self) -> Tuple[NCPolynomial, ...]:
        return self._generator_elements

    def generator(self, name: str) -> NCPolynomial:
        return self.base.variable(name)

    def coerce(self, value: Any) -> NCPolynomial:
        if isinstance(value, NCPolynomial):
            if value.presentation is self.base:
                return value
            raise TypeError(f"{value!r} does not belong to {self.declaration()}")
        if isinstance(value, (int, Fraction, str)):
            return self.base.constant(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to {self.declaration()}")

    def rational_value(self, a: NCPolynomial) -> Optional[Fraction]:
        return a.constant_value() if a.is_constant() else None

    def unit_inverse(self, a: NCPolynomial) -> Optional[NCPolynomial]:
        value = self.rational_value(a)
        if not value:
            return None
        return self.base.constant(1 / value)

    def split_sign(self, a: NCPolynomial) -> Tuple[bool, NCPolynomial]:
        if a and a.terms[0][0] < 0:
            return True, -a
        return False, a

    def render(self, a: NCPolynomial) -> str:
        return a.render()

    def render_coefficient(self, magnitude: NCPolynomial) -> str:
        value = self.rational_value(magnitude)
        if value is not None:
            return str(value)
        return f"({magnitude.render()})"

    # ---------------------------
    # Twists
    # ---------------------------

    def substitute(self, images: Sequence[NCPolynomial], a: NCPolynomial) -> NCPolynomial:
        images = tuple(images)
        if not a or images == self.generator_elements():
            return a
        return self._image(images, a)

    def _compute_image(self, images: Tuple[NCPolynomial, ...], a: NCPolynomial) -> NCPolynomial:
        total = self.base.zero()
        for c, exponent in a.terms:
            term = self.base.constant(c)
            for k, power in enumerate(exponent):
                if power:
                    term = term * images[k] ** power
            total = total + term
        return total

    def derive(self, sigma_images, delta_images, a: NCPolynomial) -> NCPolynomial:
        """delta(u w) = sigma(u) delta(w) + delta(u) w, applied factor by factor."""
        total = self.base.zero()
        gens = self.generator_elements()
        for c, exponent in a.terms:
            acc_delta = self.base.zero()
            acc_prod = self.base.one()
            factors = [k for k, power in enumerate(exponent) for _ in range(power)]
            for k in reversed(factors):
                acc_delta = sigma_images[k] * acc_delta + delta_images[k] * acc_prod
                acc_prod = gens[k] * acc_prod
            total = total + acc_delta.left_scale(c)
        return total

    # ---------------------------
    # Membership and syzygies
    # ---------------------------

    def _compute_basis(self, gens: Tuple[NCPolynomial, ...]):
        return buchberger(list(gens), GroebnerOptions(pairs_only=True, track_cofactors=True))

    def clear_caches(self) -> None:
        """Drops memoized bases and twist images."""
        self._basis.cache_clear()
        self._image.cache_clear()

    def divide_member(self, a, gens: Sequence[Any]) -> Optional[Certificate]:
        if not gens:
            raise ValueError("divide_member needs at least one generator")
        a = self.coerce(a)
        gens = tuple(self.coerce(g) for g in gens)
        out = [self.zero()] * len(gens)
        if not a:
            return tuple(out)
        support = [i for i, g in enumerate(gens) if g]
        if not support:
            return None
        certificate = lift(a, self._basis(tuple(gens[i] for i in support)))
        if certificate is None:
            return None
        for i, b in zip(support, certificate):
            out[i] = b
        return tuple(out)

    def syzygy_generators(self, gens: Sequence[Any]) -> List[Certificate]:
        """
        Schreyer construction on a Groebner basis with cofactors:
        S-pair syzygies of the basis mapped back through the cofactors, plus
        e_j - D_j C for every generator r_j = D_j G. Zero entries give e_j.
        """
        if not gens:
            raise ValueError("syzygy_generators needs at least one generator")
        gens = tuple(self.coerce(g) for g in gens)
        s = len(gens)
        zero, one = self.zero(), self.one()
        base = self.base

        vectors: List[Certificate] = []
        for j, g in enumerate(gens):
            if not g:
                vectors.append(tuple(one if k == j else zero for k in range(s)))

        support = [i for i, g in enumerate(gens) if g]
        if support:
            gb = self._basis(tuple(gens[i] for i in support))
            elements, cofactors = gb.elements, gb.cofactors

            def embed(row: Sequence[NCPolynomial]) -> Certificate:
                out = [zero] * s
                for pos, i in enumerate(support):
                    out[i] = row[pos]
                return tuple(out)

            def through_cofactors(coeffs: Sequence[NCPolynomial]) -> List[NCPolynomial]:
                row = [zero] * len(support)
                for q, cof in zip(coeffs, cofactors):
                    if q:
                        for pos, entry in enumerate(cof):
                            row[pos] = row[pos] + q * entry
                return row

            for k, l in combinations(range(len(elements)), 2):
                ck, ek, _ = elements[k].lead()
                cl, el, _ = elements[l].lead()
                m = ek.lcm(el)
                uk = base.term(1 / ck, m - ek)
                ul = base.term(1 / cl, m - el)
                spoly = uk * elements[k] - ul * elements[l]
                coeffs = [zero] * len(elements)
                coeffs[k] = uk
                coeffs[l] = -ul
                if spoly:
                    result = divide(spoly, elements)
                    if result.remainder:
                        raise ArithmeticError("S-polynomial of a Groebner basis did not reduce to zero")
                    coeffs = [c - q for c, q in zip(coeffs, result.quotients)]
                vectors.append(embed(through_cofactors(coeffs)))

            for pos, i in enumerate(support):
                result = divide(gens[i], elements)
                row = [-entry for entry in through_cofactors(result.quotients)]
                row[pos] = row[pos] + one
                vectors.append(embed(row))

        out: List[Certificate] = []
        for v in vectors:
            if any(v) and not any(_proportional(w, v) for w in out):
                out.append(v)
        log.debug("syzygies of %d generators: %d vectors", s, len(out))
        return out


def _proportional(v: Certificate, w: Certificate) -> bool:
    """w = q v for a rational q."""
    first = next((i for i, entry in enumerate(v) if entry), None)
    if first is None or not w[first]:
        return False
    q = w[first].terms[0][0] / v[first].terms[0][0]
    return all(b == a.left_scale(q) for a, b in zip(v, w))


@lru_cache(maxsize=None)
def polynomial_ring(generators: Tuple[str, ...]) -> PolynomialRing:
    """Shared ring instance per generator tuple, so elements stay comparable."""
    return PolynomialRing(generators)
