"""
Reduction, division, B_F sets and Buchberger's algorithm for left ideals.
Reducao, divisao, conjuntos B_F e algoritmo de Buchberger.

Every function here is generic over the element type: NCPolynomial for left
ideals of A, ModuleVector (modules.py) for submodules of A^m. Elements must
provide lead(), lead_key(), mul_left_term(), degree(), render_lm(), the
`space` they live in, and + / - / bool.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from spbw.core.errors import MixedPresentationError
from spbw.core.guards import UNLIMITED, ResourceGuard

from .monomials import ExponentVector, lcm_all
from .poly import NCPolynomial

log = logging.getLogger(__name__)

# (target lc, scalars) -> certificate aligned with scalars, or None when unsolvable
Solver = Callable[[Any, Sequence[Any]], Optional[Sequence[Any]]]


# ---------------------------
# Helpers
# ---------------------------

def common_space(elements: Sequence[Any]):
    """The presentation (or free module) shared by all elements."""
    if not elements:
        raise ValueError("empty element list")
    space = elements[0].space
    kind = type(elements[0])
    for e in elements[1:]:
        if type(e) is not kind or e.space != space:
            raise MixedPresentationError("elements belong to different algebras or free modules")
    return space


def _presentation(element):
    return element.presentation


def leading_constant(presentation, alpha: ExponentVector, beta: ExponentVector):
    """c_{alpha,beta}: the coefficient of x^(alpha+beta) in x^alpha x^beta."""
    return presentation.monomial_product(alpha, beta).get(alpha + beta, presentation.ring.zero())


def lead_scalar(presentation, alpha: ExponentVector, lc, beta: ExponentVector):
    """sigma^alpha(lc) * c_{alpha,beta}: the leading coefficient of x^alpha (lc x^beta)."""
    return presentation.sigma_alpha(alpha, lc) * leading_constant(presentation, alpha, beta)


def _default_solver(ring) -> Solver:
    return ring.divide_member


# ---------------------------
# Division
# ---------------------------

@dataclass(frozen=True)
class DivisionStep:
    """One reduction step h -> h - sum r_k x^alpha_k f_k."""

    number: int
    monomial: str
    target: Any
    certificate: Tuple[Any, ...]
    offsets: Tuple[Optional[ExponentVector], ...]
    remainder: Any

    def render(self, ring) -> str:
        cert = ", ".join(ring.render(r) for r in self.certificate)
        return (
            f"step {self.number}: lm={self.monomial} lc={ring.render(self.target)} "
            f"r=({cert}) h={self.remainder.render()}"
        )


@dataclass
class DivisionResult:
    """
    f = sum q_i f_i + h with h reduced w.r.t. the divisors.
    f = soma q_i f_i + h com h reduzido.
    """

    quotients: Tuple[NCPolynomial, ...]
    remainder: Any
    trace: Tuple[DivisionStep, ...] = ()

    def render_trace(self) -> List[str]:
        if not self.trace:
            return []
        ring = _presentation(self.remainder).ring
        return [step.render(ring) for step in self.trace]


def _reduction_candidates(h, divisors: Sequence[Any]):
    """Divisors whose leading monomial divides lm(h), with alpha_k and scalars."""
    p = _presentation(h)
    _, exponent, index = h.lead()
    picked = []
    for k, g in enumerate(divisors):
        lc_g, beta, index_g = g.lead()
        if index_g == index and beta.divides(exponent):
            alpha = exponent - beta
            picked.append((k, alpha, lead_scalar(p, alpha, lc_g, beta)))
    return picked


def _reduction(h, divisors: Sequence[Any], solver: Optional[Solver]):
    """
    Solves lc(h) = sum r_k sigma^alpha_k(lc f_k) c_{alpha_k,beta_k}.
    Returns (new h, [(k, r_k, alpha_k)]) or None when h is reduced.
    """
    picked = _reduction_candidates(h, divisors)
    if not picked:
        return None
    ring = _presentation(h).ring
    target = h.lead()[0]
    solve = solver or _default_solver(ring)
    certificate = solve(target, [s for _, _, s in picked])
    if certificate is None:
        return None
    contributions = []
    new_h = h
    for (k, alpha, _), r in zip(picked, certificate):
        r = ring.coerce(r)
        if not r:
            continue
        new_h = new_h - divisors[k].mul_left_term(r, alpha)
        contributions.append((k, r, alpha))
    if new_h and new_h.lead_key() >= h.lead_key():
        raise ArithmeticError(f"reduction did not lower the leading monomial of {h.render()}")
    return new_h, contributions


def reduce_once(f, divisors: Sequence[Any], solver: Optional[Solver] = None):
    """One-step reduction of f by the divisors; None when f is reduced."""
    if not divisors:
        raise ValueError("empty divisor list")
    if any(not g for g in divisors):
        raise ValueError("zero divisor in divisor list")
    common_space([f, *divisors])
    if not f:
        return None
    step = _reduction(f, divisors, solver)
    return None if step is None else step[0]


def divide(f, divisors: Sequence[Any], solver: Optional[Solver] = None, trace: bool = False) -> DivisionResult:
    """
    Division algorithm: reduces while lm(h) is reducible, so the remainder is
    reduced but its lower terms are left untouched.
    """
    if not divisors:
        raise ValueError("empty divisor list")
    if any(not g for g in divisors):
        raise ValueError("zero divisor in divisor list")
    common_space([f, *divisors])
    p = _presentation(f)
    quotients = [dict() for _ in divisors]
    steps: List[DivisionStep] = []
    h = f
    while h:
        step = _reduction(h, divisors, solver)
        if step is None:
            break
        new_h, contributions = step
        for k, r, alpha in contributions:
            q = quotients[k]
            total = q.get(alpha)
            total = r if total is None else total + r
            if total:
                q[alpha] = total
            else:
                q.pop(alpha, None)
        if trace:
            certificate = [p.ring.zero()] * len(divisors)
            offsets: List[Optional[ExponentVector]] = [None] * len(divisors)
            for k, r, alpha in contributions:
                certificate[k] = r
                offsets[k] = alpha
            steps.append(
                DivisionStep(len(steps) + 1, h.render_lm(), h.lead()[0], tuple(certificate), tuple(offsets), new_h)
            )
        log.debug("division step: %s -> %s", h.render_lm(), new_h.render_lm() if new_h else "0")
        h = new_h
    return DivisionResult(tuple(p.polynomial(q) for q in quotients), h, tuple(steps))


# ---------------------------
# B_F sets
# ---------------------------

@dataclass(frozen=True)
class BFData:
    """
    X_F, the offsets gamma_i with gamma_i + beta_i = X_F, the scalars
    sigma^gamma_i(lc g_i) c_{gamma_i,beta_i} and the syzygy generators B_F.
    lcm is None when the leading components differ (X_F = 0).
    """

    indices: Tuple[int, ...]
    lcm: Optional[ExponentVector]
    component: Optional[int]
    offsets: Tuple[ExponentVector, ...] = ()
    scalars: Tuple[Any, ...] = ()
    generators: Tuple[Tuple[Any, ...], ...] = ()

    @property
    def skipped(self) -> bool:
        return self.lcm is None

    def combination(self, elements: Sequence[Any], b: Sequence[Any]):
        """sum b_i x^gamma_i g_i over the subset, g_i taken from elements by index."""
        total = None
        for k, gamma, coeff in zip(self.indices, self.offsets, b):
            if not coeff:
                continue
            piece = elements[k].mul_left_term(coeff, gamma)
            total = piece if total is None else total + piece
        return total if total is not None else elements[self.indices[0]].zero_like()


def bf_set(subset: Sequence[Any], indices: Optional[Sequence[int]] = None) -> BFData:
    """B_F for a subset F of the current basis."""
    if not subset:
        raise ValueError("empty subset")
    if any(not g for g in subset):
        raise ValueError("zero element in subset")
    common_space(list(subset))
    indices = tuple(indices) if indices is not None else tuple(range(len(subset)))
    leads = [g.lead() for g in subset]
    components = {index for _, _, index in leads}
    if len(components) > 1:
        return BFData(indices, None, None)
    p = _presentation(subset[0])
    lcm = lcm_all([beta for _, beta, _ in leads])
    offsets = tuple(lcm - beta for _, beta, _ in leads)
    scalars = tuple(lead_scalar(p, gamma, lc, beta) for gamma, (lc, beta, _) in zip(offsets, leads))
    generators = tuple(
        tuple(b) for b in p.ring.syzygy_generators(list(scalars)) if any(b)
    )
    return BFData(indices, lcm, leads[0][2], offsets, scalars, generators)


# ---------------------------
# Buchberger
# ---------------------------

@dataclass(frozen=True)
class GroebnerOptions:
    """
    - subset_cap: largest subset size enumerated (None = all subsets)
    - pairs_only: same as subset_cap=2 (valid for field coefficients)
    - guard: basis size / degree / round limits
    - track_cofactors: express every basis element through the input
    - interreduce: drop elements whose leading term the others produce
    - solver: coefficient equation solver (default ring.divide_member)
    - trace: keep one line per added element
    """

    subset_cap: Optional[int] = None
    pairs_only: bool = False
    guard: ResourceGuard = UNLIMITED
    track_cofactors: bool = False
    interreduce: bool = False
    solver: Optional[Solver] = None
    trace: bool = False

    @property
    def cap(self) -> Optional[int]:
        if self.pairs_only:
            return 2 if self.subset_cap is None else min(2, self.subset_cap)
        return self.subset_cap


@dataclass
class GroebnerBasis:
    """Output of buchberger(): elements, their cofactors and the input."""

    elements: Tuple[Any, ...]
    generators: Tuple[Any, ...]
    cofactors: Optional[Tuple[Tuple[NCPolynomial, ...], ...]] = None
    rounds: int = 0
    trace: List[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int):
        return self.elements[i]

    def leading_monomials(self) -> List[Tuple[ExponentVector, int]]:
        return [g.lead()[1:] for g in self.elements]


def _subsets(size: int, old_size: int, cap: Optional[int]) -> Iterator[Tuple[int, ...]]:
    """Subsets of range(size) in increasing size that touch an index >= old_size."""
    top = size if cap is None else min(cap, size)
    for k in range(1, top + 1):
        for subset in combinations(range(size), k):
            if subset[-1] >= old_size:
                yield subset


def _unit_row(p, length: int, j: int) -> Tuple[NCPolynomial, ...]:
    return tuple(p.one() if i == j else p.zero() for i in range(length))


def _combine_rows(p, terms: Sequence[Tuple[NCPolynomial, Tuple[NCPolynomial, ...]]], length: int):
    """sum q_k * row_k, products taken in A."""
    out = [p.zero()] * length
    for q, row in terms:
        if not q:
            continue
        for j, entry in enumerate(row):
            if entry:
                out[j] = out[j] + q * entry
    return tuple(out)


def buchberger(generators: Sequence[Any], options: Optional[GroebnerOptions] = None) -> GroebnerBasis:
    """
    Buchberger's algorithm over all subsets of the running basis.
    Algoritmo de Buchberger sobre todos os subconjuntos da base corrente.

    Round 1 enumerates every subset; later rounds only the subsets that touch
    an element added in the previous round. Remainders are computed against
    the running basis and appended immediately.
    """
    options = options or GroebnerOptions()
    gens = tuple(generators)
    if not gens:
        raise ValueError("empty generator list")
    if any(not g for g in gens):
        raise ValueError("zero generator")
    common_space(list(gens))
    p = _presentation(gens[0])
    guard = options.guard
    track = options.track_cofactors

    basis: List[Any] = list(gens)
    cofactors: List[Tuple[NCPolynomial, ...]] = [_unit_row(p, len(gens), j) for j in range(len(gens))]
    trace: List[str] = []
    guard.check_basis(len(basis))

    old_size = 0
    rounds = 0
    while True:
        rounds += 1
        guard.check_rounds(rounds)
        snapshot = len(basis)
        visited = 0
        for subset in _subsets(snapshot, old_size, options.cap):
            data = bf_set([basis[i] for i in subset], subset)
            if data.skipped:
                continue
            visited += 1
            for b in data.generators:
                combo = data.combination(basis, b)
                if not combo:
                    continue
                result = divide(combo, basis, solver=options.solver)
                r = result.remainder
                if options.trace:
                    label = ",".join(str(i + 1) for i in subset)
                    trace.append(f"round {rounds}: F={{{label}}} -> {r.render() if r else '0'}")
                if not r:
                    continue
                guard.check_degree(r.degree())
                basis.append(r)
                if track:
                    pieces = [
                        (p.term(coeff, gamma), cofactors[k])
                        for k, gamma, coeff in zip(data.indices, data.offsets, b)
                        if coeff
                    ]
                    pieces += [(-q, cofactors[u]) for u, q in enumerate(result.quotients) if q]
                    cofactors.append(_combine_rows(p, pieces, len(gens)))
                log.debug("added element %d: %s", len(basis), r.render_lm())
                guard.check_basis(len(basis))
        log.info(
            "buchberger round %d: %d elements, %d subsets, %d added",
            rounds, len(basis), visited, len(basis) - snapshot,
        )
        if len(basis) == snapshot:
            break
        old_size = snapshot

    gb = GroebnerBasis(
        elements=tuple(basis),
        generators=gens,
        cofactors=tuple(cofactors) if track else None,
        rounds=rounds,
        trace=trace,
    )
    if options.interreduce:
        gb = interreduce(gb, solver=options.solver)
    return gb


def interreduce(gb: GroebnerBasis, solver: Optional[Solver] = None) -> GroebnerBasis:
    """Drops elements whose leading term is produced by the remaining ones."""
    elements = list(gb.elements)
    cofactors = list(gb.cofactors) if gb.cofactors is not None else None
    changed = True
    while changed and len(elements) > 1:
        changed = False
        for k in range(len(elements) - 1, -1, -1):
            others = elements[:k] + elements[k + 1:]
            if _reduction(elements[k], others, solver) is not None:
                log.debug("interreduce: dropping %s", elements[k].render_lm())
                del elements[k]
                if cofactors is not None:
                    del cofactors[k]
                changed = True
                break
    return GroebnerBasis(
        elements=tuple(elements),
        generators=gb.generators,
        cofactors=tuple(cofactors) if cofactors is not None else None,
        rounds=gb.rounds,
        trace=list(gb.trace),
    )


# ---------------------------
# Membership
# ---------------------------

def _elements(basis) -> Tuple[Any, ...]:
    return basis.elements if isinstance(basis, GroebnerBasis) else tuple(basis)


def is_member(f, basis, solver: Optional[Solver] = None) -> Tuple[bool, Tuple[NCPolynomial, ...]]:
    """f in <G> iff f reduces to zero by the Groebner basis G; certificate = quotients."""
    elements = _elements(basis)
    if not f:
        return True, tuple(_presentation(f).zero() for _ in elements)
    result = divide(f, elements, solver=solver)
    return not result.remainder, result.quotients


def lift(f, basis: GroebnerBasis, solver: Optional[Solver] = None) -> Optional[Tuple[NCPolynomial, ...]]:
    """Coefficients c_j with f = sum c_j f_j over the original generators, or None."""
    if basis.cofactors is None:
        raise ValueError("lift needs a basis computed with track_cofactors=True")
    p = _presentation(basis.elements[0])
    member, quotients = is_member(f, basis, solver=solver)
    if not member:
        return None
    return _combine_rows(p, [(q, basis.cofactors[k]) for k, q in enumerate(quotients)], len(basis.generators))


@dataclass
class CriterionReport:
    """Buchberger criterion check over subsets up to a given size."""

    subsets: int = 0
    combinations: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        return (
            f"criterion: {self.subsets} subsets, {self.combinations} combinations, "
            f"{len(self.failures)} failures"
        )


def check_criterion(basis, max_subset_size: Optional[int] = 3, solver: Optional[Solver] = None) -> CriterionReport:
    """Every B_F combination over subsets up to max_subset_size must reduce to zero."""
    elements = _elements(basis)
    report = CriterionReport()
    for subset in _subsets(len(elements), 0, max_subset_size):
        data = bf_set([elements[i] for i in subset], subset)
        if data.skipped:
            continue
        report.subsets += 1
        for b in data.generators:
            report.combinations += 1
            combo = data.combination(elements, b)
            if not combo:
                continue
            remainder = divide(combo, elements, solver=solver).remainder
            if remainder:
                label = ",".join(str(i + 1) for i in subset)
                report.failures.append(f"F={{{label}}}: remainder {remainder.render()}")
    log.info("criterion check: %s", report.render())
    return report
