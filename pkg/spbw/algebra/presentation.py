"""
Presentations of bijective skew PBW extensions A = sigma(R)<x1, ..., xn>.
Apresentacoes de extensoes PBW torcidas bijetivas.

The algebra is given by
    x_i r = sigma_i(r) x_i + delta_i(r)          (r in R)
    x_j x_i = c_ij x_i x_j + d_ij                (i < j, d_ij of degree <= 1)

Multiplication of standard monomials is computed here by rewriting and
memoized per presentation. NCPolynomial (poly.py) only merges terms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from spbw.core.errors import InvalidPresentation, MixedPresentationError, UndeclaredIdentifier

from .monomials import ExponentVector
from .order import MonomialOrder

if TYPE_CHECKING:
    from .coeffring import CoeffRing
    from .poly import NCPolynomial

log = logging.getLogger(__name__)

# {exponent: coefficient}; dicts handed out by the kernel are read-only
TermMap = Dict[ExponentVector, Any]
Tail = Tuple[Tuple[Any, ExponentVector], ...]


def add_into(target: TermMap, exponent: ExponentVector, coeff: Any) -> None:
    """target[exponent] += coeff, dropping the entry when it cancels."""
    current = target.get(exponent)
    total = coeff if current is None else current + coeff
    if total:
        target[exponent] = total
    else:
        target.pop(exponent, None)


@dataclass(frozen=True)
class TwistMap:
    """
    sigma_i given by the images of the generators of R.
    inverse_images certifies bijectivity (sigma_i^-1 of each generator).
    """

    images: Tuple[Any, ...]
    inverse_images: Optional[Tuple[Any, ...]] = None

    @classmethod
    def identity(cls, ring: "CoeffRing") -> "TwistMap":
        gens = ring.generator_elements()
        return cls(gens, gens)

    def apply(self, ring: "CoeffRing", r: Any) -> Any:
        return ring.substitute(self.images, r)

    def apply_inverse(self, ring: "CoeffRing", r: Any) -> Any:
        if self.inverse_images is None:
            raise ValueError("twist has no inverse certificate")
        return ring.substitute(self.inverse_images, r)

    def is_identity(self, ring: "CoeffRing") -> bool:
        return tuple(self.images) == ring.generator_elements()


@dataclass(frozen=True)
class SkewDerivation:
    """delta_i given by the images of the generators of R."""

    images: Tuple[Any, ...]

    @classmethod
    def zero(cls, ring: "CoeffRing") -> "SkewDerivation":
        return cls(tuple(ring.zero() for _ in ring.generators))

    def is_zero(self) -> bool:
        return not any(self.images)

    def apply(self, ring: "CoeffRing", twist: TwistMap, r: Any) -> Any:
        return ring.derive(twist.images, self.images, r)


@dataclass
class ValidationReport:
    """Outcome of Presentation.validate()."""

    ok: bool
    failures: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    quasi_commutative: bool = False
    bijective: bool = False

    def render(self) -> List[str]:
        lines = [
            f"status: {'valid' if self.ok else 'invalid'}",
            f"bijective: {'yes' if self.bijective else 'no'}",
            f"quasi-commutative: {'yes' if self.quasi_commutative else 'no'}",
        ]
        lines += [f"failure: {msg}" for msg in self.failures]
        lines += [f"warning: {msg}" for msg in self.warnings]
        return lines


@dataclass(frozen=True, eq=False)
class Presentation:
    """
    A skew PBW extension of `ring` in `variables`.

    constants[(i, j)] is c_ij and tails[(i, j)] is d_ij for i < j (0-based).
    Instances compare by identity: polynomials of two presentations never mix.
    """

    ring: "CoeffRing"
    variables: Tuple[str, ...]
    sigma: Tuple[TwistMap, ...]
    delta: Tuple[SkewDerivation, ...]
    constants: Mapping[Tuple[int, int], Any]
    tails: Mapping[Tuple[int, int], Tail]
    order: MonomialOrder
    _products: Dict[Any, TermMap] = field(default_factory=dict, init=False, repr=False)
    _left_vars: Dict[Any, TermMap] = field(default_factory=dict, init=False, repr=False)
    _twists: Dict[Any, TermMap] = field(default_factory=dict, init=False, repr=False)
    _sigma_powers: Dict[Any, Any] = field(default_factory=dict, init=False, repr=False)

    # ---------------------------
    # Construction
    # ---------------------------

    @classmethod
    def create(
        cls,
        ring: "CoeffRing",
        variables: Sequence[str],
        order: Optional[MonomialOrder] = None,
        sigma: Optional[Mapping[int, Sequence[Any]]] = None,
        sigma_inverse: Optional[Mapping[int, Sequence[Any]]] = None,
        delta: Optional[Mapping[int, Sequence[Any]]] = None,
        relations: Optional[Mapping[Tuple[int, int], Tuple[Any, Mapping[ExponentVector, Any]]]] = None,
    ) -> "Presentation":
        """
        Builds a presentation filling the defaults: sigma = id, delta = 0,
        c_ij = 1, d_ij = 0.

        relations maps (i, j), i < j, to (c_ij, {exponent: coeff}) for d_ij.
        """
        variables = tuple(variables)
        n = len(variables)
        if len(set(variables)) != n:
            raise ValueError(f"duplicate variable names in {variables}")
        sigma = sigma or {}
        sigma_inverse = sigma_inverse or {}
        delta = delta or {}
        relations = relations or {}

        gens = ring.generator_elements()
        twists = []
        derivations = []
        for i in range(n):
            images = tuple(ring.coerce(a) for a in sigma.get(i, gens))
            if i in sigma_inverse:
                inverse = tuple(ring.coerce(a) for a in sigma_inverse[i])
            elif images == gens:
                inverse = gens
            else:
                inverse = None
            twists.append(TwistMap(images, inverse))
            if i in delta:
                derivations.append(SkewDerivation(tuple(ring.coerce(a) for a in delta[i])))
            else:
                derivations.append(SkewDerivation.zero(ring))

        constants = {}
        tails = {}
        for i, j in combinations(range(n), 2):
            c, tail = relations.get((i, j), (ring.one(), {}))
            constants[(i, j)] = ring.coerce(c)
            tails[(i, j)] = tuple(
                (ring.coerce(coeff), exponent)
                for exponent, coeff in sorted(tail.items(), key=lambda kv: order_key(order, n, kv[0]), reverse=True)
                if coeff
            )

        return cls(
            ring=ring,
            variables=variables,
            sigma=tuple(twists),
            delta=tuple(derivations),
            constants=constants,
            tails=tails,
            order=order or MonomialOrder.deglex(n),
        )

    @classmethod
    def commutative(
        cls, ring: "CoeffRing", variables: Sequence[str], order: Optional[MonomialOrder] = None
    ) -> "Presentation":
        """The trivial-twist presentation R[x1, ..., xn]."""
        return cls.create(ring, variables, order=order)

    def with_order(self, order: MonomialOrder) -> "Presentation":
        """Same algebra under another monomial order (a fresh presentation)."""
        if order.n != self.n:
            raise ValueError(f"order has {order.n} variables, presentation has {self.n}")
        return Presentation(
            ring=self.ring,
            variables=self.variables,
            sigma=self.sigma,
            delta=self.delta,
            constants=dict(self.constants),
            tails=dict(self.tails),
            order=order,
        )

    # ---------------------------
    # Structure flags
    # ---------------------------

    @property
    def n(self) -> int:
        return len(self.variables)

    @cached_property
    def quasi_commutative(self) -> bool:
        return all(d.is_zero() for d in self.delta) and not any(self.tails.values())

    @cached_property
    def is_commutative(self) -> bool:
        one = self.ring.one()
        return (
            self.quasi_commutative
            and all(c == one for c in self.constants.values())
            and all(s.is_identity(self.ring) for s in self.sigma)
        )

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UndeclaredIdentifier(name) from None

    # ---------------------------
    # Validation
    # ---------------------------

    def validate(self, overlap_degree: Optional[int] = 3) -> ValidationReport:
        """
        Checks the bijectivity axioms on generators.
        Verifica os axiomas de bijetividade nos geradores.

        Overlap (diamond) defects are reported as warnings only.
        """
        ring = self.ring
        failures: List[str] = []
        gens = ring.generator_elements()
        names = self.variables
        bijective = True

        for (i, j), c in sorted(self.constants.items()):
            if not c or ring.unit_inverse(c) is None:
                failures.append(f"constant c({names[i]},{names[j]}) = {ring.render(c)} not a unit")
                bijective = False
            for _, exponent in self.tails[(i, j)]:
                if exponent.degree() > 1:
                    failures.append(f"tail d({names[i]},{names[j]}) has degree > 1")
                    break

        for i, twist in enumerate(self.sigma):
            if len(twist.images) != len(gens):
                failures.append(f"sigma_{names[i]} must give one image per coefficient generator")
                continue
            if twist.inverse_images is None:
                failures.append(f"sigma_{names[i]} has no inverse certificate")
                bijective = False
            else:
                for t in gens:
                    if twist.apply(ring, twist.apply_inverse(ring, t)) != t or twist.apply_inverse(
                        ring, twist.apply(ring, t)
                    ) != t:
                        failures.append(f"sigma_{names[i]} inverse certificate fails on {ring.render(t)}")
                        bijective = False
                        break
            for a, b in combinations(gens, 2):
                if twist.apply(ring, a * b) != twist.apply(ring, a) * twist.apply(ring, b):
                    failures.append(f"sigma_{names[i]} is not multiplicative on generators")
                    break

        for i, derivation in enumerate(self.delta):
            if len(derivation.images) != len(gens):
                failures.append(f"delta_{names[i]} must give one image per coefficient generator")
                continue
            twist = self.sigma[i]
            for a, b in combinations(gens, 2):
                # R is commutative: delta(ab) and delta(ba) must agree
                ab = twist.apply(ring, a) * derivation.apply(ring, twist, b) + derivation.apply(ring, twist, a) * b
                ba = twist.apply(ring, b) * derivation.apply(ring, twist, a) + derivation.apply(ring, twist, b) * a
                if ab != ba:
                    failures.append(
                        f"delta_{names[i]} violates the sigma-Leibniz rule on "
                        f"{ring.render(a)}*{ring.render(b)}"
                    )
                    break

        warnings = []
        if not failures and overlap_degree:
            warnings = self.check_overlaps()

        report = ValidationReport(
            ok=not failures,
            failures=failures,
            warnings=warnings,
            quasi_commutative=self.quasi_commutative,
            bijective=bijective,
        )
        log.debug("validate: ok=%s failures=%d warnings=%d", report.ok, len(failures), len(warnings))
        return report

    def ensure_valid(self) -> "Presentation":
        report = self.validate(overlap_degree=None)
        if not report.ok:
            raise InvalidPresentation(report.failures)
        return self

    def check_overlaps(self) -> List[str]:
        """
        Diamond check: both bracketings of x_k x_j x_i (k > j > i) and of
        x_j x_i t (t a coefficient generator) must agree.
        """
        defects = []
        xs = [self.variable(i) for i in range(self.n)]
        for i, j, k in combinations(range(self.n), 3):
            left = (xs[k] * xs[j]) * xs[i]
            right = xs[k] * (xs[j] * xs[i])
            if left != right:
                defects.append(
                    f"overlap {self.variables[k]}*{self.variables[j]}*{self.variables[i]} "
                    f"is ambiguous: difference {(left - right).render()}"
                )
        for t in self.ring.generator_elements():
            tc = self.constant(t)
            for i, j in combinations(range(self.n), 2):
                left = (xs[j] * xs[i]) * tc
                right = xs[j] * (xs[i] * tc)
                if left != right:
                    defects.append(
                        f"overlap {self.variables[j]}*{self.variables[i]}*{self.ring.render(t)} "
                        f"is ambiguous: difference {(left - right).render()}"
                    )
        return defects

    # ---------------------------
    # Twists
    # ---------------------------

    def _fixed(self, r: Any) -> bool:
        return self.ring.rational_value(r) is not None

    def twist(self, i: int, r: Any) -> Any:
        """sigma_i(r)."""
        if self._fixed(r):
            return r
        return self.sigma[i].apply(self.ring, r)

    def derivation(self, i: int, r: Any) -> Any:
        """delta_i(r)."""
        if self._fixed(r) or self.delta[i].is_zero():
            return self.ring.zero()
        return self.delta[i].apply(self.ring, self.sigma[i], r)

    def sigma_alpha(self, alpha: ExponentVector, r: Any) -> Any:
        """sigma^alpha(r) = sigma_1^a1 ... sigma_n^an (r); sigma_n acts first."""
        if alpha.is_zero() or self._fixed(r):
            return r
        key = (alpha, r)
        cached = self._sigma_powers.get(key)
        if cached is not None:
            return cached
        value = r
        for i in range(self.n - 1, -1, -1):
            for _ in range(alpha[i]):
                value = self.twist(i, value)
        return self._sigma_powers.setdefault(key, value)

    # ---------------------------
    # Multiplication kernel
    # ---------------------------

    def _unit(self, i: int) -> ExponentVector:
        return ExponentVector.unit(self.n, i)

    def monomial_product(self, alpha: ExponentVector, beta: ExponentVector) -> TermMap:
        """Normal form of x^alpha x^beta."""
        one = self.ring.one()
        if alpha.is_zero() or beta.is_zero() or self.is_commutative:
            return {alpha + beta: one}
        i = alpha.last_index()
        if i <= beta.first_index():
            return {alpha + beta: one}
        key = (alpha, beta)
        cached = self._products.get(key)
        if cached is not None:
            return cached

        # x^alpha x^beta = x^rest (x_i x^beta)
        rest = alpha - self._unit(i)
        result: TermMap = {}
        for gamma, a in self.left_multiply_variable(i, beta).items():
            for eta, b in self.monomial_times_coefficient(rest, a).items():
                for zeta, c in self.monomial_product(eta, gamma).items():
                    add_into(result, zeta, b * c)
        return self._products.setdefault(key, result)

    def left_multiply_variable(self, j: int, delta: ExponentVector) -> TermMap:
        """Normal form of x_j x^delta."""
        if delta.is_zero() or j <= delta.first_index() or self.is_commutative:
            return {delta + self._unit(j): self.ring.one()}
        key = (j, delta)
        cached = self._left_vars.get(key)
        if cached is not None:
            return cached

        k = delta.first_index()
        rest = delta - self._unit(k)
        c = self.constants[(k, j)]
        result: TermMap = {}
        # x_j x_k x^rest = c x_k (x_j x^rest) + d_kj x^rest
        for gamma, a in self.left_multiply_variable(j, rest).items():
            for eta, b in self.left_multiply_variable(k, gamma).items():
                add_into(result, eta, c * self.twist(k, a) * b)
            da = self.derivation(k, a)
            if da:
                add_into(result, gamma, c * da)
        for coeff, epsilon in self.tails[(k, j)]:
            for zeta, b in self.monomial_product(epsilon, rest).items():
                add_into(result, zeta, coeff * b)
        return self._left_vars.setdefault(key, result)

    def monomial_times_coefficient(self, alpha: ExponentVector, r: Any) -> TermMap:
        """Normal form of x^alpha r."""
        if not r:
            return {}
        if alpha.is_zero() or self._fixed(r) or self.is_commutative:
            return {alpha: r}
        key = (alpha, r)
        cached = self._twists.get(key)
        if cached is not None:
            return cached

        k = alpha.last_index()
        rest = alpha - self._unit(k)
        unit_k = self._unit(k)
        result: TermMap = {}
        # x^rest x_k r = x^rest (sigma_k(r) x_k + delta_k(r))
        for gamma, a in self.monomial_times_coefficient(rest, self.twist(k, r)).items():
            for eta, b in self.monomial_product(gamma, unit_k).items():
                add_into(result, eta, a * b)
        d = self.derivation(k, r)
        if d:
            for gamma, a in self.monomial_times_coefficient(rest, d).items():
                add_into(result, gamma, a)
        return self._twists.setdefault(key, result)

    def term_product(self, a: Any, alpha: ExponentVector, b: Any, beta: ExponentVector) -> TermMap:
        """Normal form of (a x^alpha)(b x^beta)."""
        result: TermMap = {}
        for gamma, c in self.monomial_times_coefficient(alpha, b).items():
            ac = a * c
            for eta, d in self.monomial_product(gamma, beta).items():
                add_into(result, eta, ac * d)
        return result

    # ---------------------------
    # Derived structure data
    # ---------------------------

    def structure_constants(self, alpha: ExponentVector, beta: ExponentVector) -> Tuple[Any, "NCPolynomial"]:
        """(c_{alpha,beta}, p_{alpha,beta}) with x^alpha x^beta = c x^(alpha+beta) + p."""
        product = dict(self.monomial_product(alpha, beta))
        c = product.pop(alpha + beta, self.ring.zero())
        return c, self.polynomial(product)

    def associated_quasicommutative(self) -> "Presentation":
        """A^sigma: same sigma_i and c_ij, every delta_i and d_ij set to zero."""
        if self.quasi_commutative:
            return self
        return Presentation(
            ring=self.ring,
            variables=self.variables,
            sigma=self.sigma,
            delta=tuple(SkewDerivation.zero(self.ring) for _ in self.delta),
            constants=dict(self.constants),
            tails={key: () for key in self.tails},
            order=self.order,
        )

    def relation(self, i: int, j: int) -> "NCPolynomial":
        """x_j x_i as c_ij x_i x_j + d_ij (i < j)."""
        return self.variable(j) * self.variable(i)

    def describe(self) -> List[str]:
        """Header, twist and relation lines in the input syntax."""
        ring = self.ring
        names = self.variables
        lines = [f"coeff {ring.declaration()}", "vars " + ", ".join(names), "order " + self.order.render(names)]
        gens = ring.generators
        for i, twist in enumerate(self.sigma):
            if not twist.is_identity(ring):
                lines.append(
                    f"sigma {names[i]}: "
                    + ", ".join(f"{g} -> {ring.render(a)}" for g, a in zip(gens, twist.images))
                )
        for i, derivation in enumerate(self.delta):
            if not derivation.is_zero():
                lines.append(
                    f"delta {names[i]}: "
                    + ", ".join(f"{g} -> {ring.render(a)}" for g, a in zip(gens, derivation.images))
                )
        for i, j in combinations(range(self.n), 2):
            lines.append(f"relation {names[j]}*{names[i]} = {self.relation(i, j).render()}")
        return lines

    # ---------------------------
    # Element builders
    # ---------------------------

    def polynomial(self, mapping: Mapping[ExponentVector, Any]) -> "NCPolynomial":
        from .poly import NCPolynomial

        return NCPolynomial.from_dict(self, mapping)

    def coerce(self, value: Any) -> "NCPolynomial":
        """Integers, fractions and elements of R become constants of A."""
        from .poly import NCPolynomial

        if isinstance(value, NCPolynomial):
            if value.presentation is self:
                return value
            if value.presentation is getattr(self.ring, "base", None):
                return self.constant(value)
            raise MixedPresentationError("polynomials belong to different presentations")
        if isinstance(value, (int, Fraction)):
            return self.constant(value)
        raise TypeError(f"cannot convert {type(value).__name__} to an element of A")

    def term(self, coeff: Any, exponent: ExponentVector) -> "NCPolynomial":
        return self.polynomial({exponent: self.ring.coerce(coeff)})

    def monomial(self, exponent: ExponentVector) -> "NCPolynomial":
        return self.term(self.ring.one(), exponent)

    def variable(self, which: Union[int, str]) -> "NCPolynomial":
        i = self.index_of(which) if isinstance(which, str) else which
        return self.monomial(self._unit(i))

    def constant(self, value: Any) -> "NCPolynomial":
        return self.term(value, ExponentVector.zero(self.n))

    def one(self) -> "NCPolynomial":
        return self.constant(self.ring.one())

    def zero(self) -> "NCPolynomial":
        return self.polynomial({})


def order_key(order: Optional[MonomialOrder], n: int, exponent: ExponentVector):
    return (order or MonomialOrder.deglex(n)).key(exponent)
