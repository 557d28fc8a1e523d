"""
Turns a parsed file into a Presentation plus its named elements.
Transforma o arquivo em uma Presentation e seus elementos nomeados.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple, Union

import pyparsing as pp

from spbw.algebra.coeffring import QQ, CoeffRing, polynomial_ring
from spbw.algebra.matrixkit import MatrixOverA
from spbw.algebra.modules import FreeModule, ModuleVector
from spbw.algebra.monomials import ExponentVector
from spbw.algebra.order import MODULE_SCHEMES, MonomialOrder
from spbw.algebra.poly import NCPolynomial
from spbw.algebra.presentation import Presentation, add_into
from spbw.core.errors import DslSyntaxError, InputError, UndeclaredIdentifier

from .ast import (
    Atom,
    CoeffDecl,
    CommandDecl,
    MapDecl,
    MatrixDef,
    ModuleOrderDecl,
    Number,
    OrderDecl,
    PolyDef,
    PresentationFile,
    Product,
    RelationDecl,
    Sum,
    VarsDecl,
    VectorDef,
)
from .parser import STATEMENT, parse_expression

log = logging.getLogger(__name__)

Value = Union[NCPolynomial, Tuple[NCPolynomial, ...], MatrixOverA]


def evaluate(expr: Sum, lookup: Callable[[Atom], Any], constant: Callable[[Fraction], Any]) -> Any:
    """Folds a Sum with the +, -, * and ** of whatever lookup returns."""
    total = constant(Fraction(0))
    for sign, product in expr.terms:
        value = None
        for factor in product.factors:
            if isinstance(factor, Number):
                piece = constant(factor.value)
            elif isinstance(factor, Atom):
                piece = lookup(factor) ** factor.power
            else:
                piece = evaluate(factor.expr, lookup, constant) ** factor.power
            value = piece if value is None else value * piece
        total = total - value if sign == "-" else total + value
    return total


def parse_order_clause(text: str) -> OrderDecl:
    """`deglex D2 > D1` as given to --order."""
    try:
        node = STATEMENT.parse_string(f"order {text}", parse_all=True)[0]
    except pp.ParseBaseException:
        node = None
    if not isinstance(node, OrderDecl):
        raise InputError(f"bad order clause '{text}'")
    return node


@dataclass
class Workspace:
    """
    Everything a command needs: the presentation, the module order and the
    named polynomials, vectors and matrices (matrices already transposed
    back from the rows-of-F^T file convention).
    """

    file: PresentationFile
    presentation: Presentation
    module_scheme: str = "toprev"
    polys: Dict[str, NCPolynomial] = field(default_factory=dict)
    vectors: Dict[str, Tuple[NCPolynomial, ...]] = field(default_factory=dict)
    matrices: Dict[str, MatrixOverA] = field(default_factory=dict)

    @property
    def commands(self) -> Tuple[CommandDecl, ...]:
        return self.file.commands

    def module(self, rank: int) -> FreeModule:
        return FreeModule(self.presentation, rank, self.module_scheme)

    def module_vector(self, entries: Tuple[NCPolynomial, ...]) -> ModuleVector:
        return self.module(len(entries)).vector(entries)

    def _lookup(self, line: int):
        p = self.presentation
        ring = p.ring

        def lookup(atom: Atom) -> NCPolynomial:
            name = atom.name
            if name in p.variables:
                return p.variable(name)
            if name in ring.generators:
                return p.constant(ring.generator(name))
            if name in self.polys:
                return self.polys[name]
            raise UndeclaredIdentifier(name, line)

        return lookup

    def polynomial(self, expr: Sum, line: int = 0) -> NCPolynomial:
        return evaluate(expr, self._lookup(line), self.presentation.constant)

    def value(self, arg: str, line: int = 0) -> Value:
        """A defined name, or else a polynomial expression such as `D1^2*D2`."""
        for table in (self.polys, self.vectors, self.matrices):
            if arg in table:
                return table[arg]
        return self.polynomial(parse_expression(arg, line, self.file.source), line)

    def exponent(self, arg: str, line: int = 0) -> ExponentVector:
        """A standard monomial given as text; its coefficient must be 1."""
        f = self.value(arg, line)
        if not isinstance(f, NCPolynomial) or len(f.terms) != 1 or not self.presentation.ring.is_one(f.terms[0][0]):
            raise InputError(f"'{arg}' is not a standard monomial (line {line})")
        return f.terms[0][1]


class _Builder:
    def __init__(self, file: PresentationFile, order: Optional[OrderDecl], module_scheme: Optional[str]):
        self.file = file
        self.order_override = order
        self.scheme_override = module_scheme
        self.names: Dict[str, int] = {}

    def _error(self, message: str, node) -> DslSyntaxError:
        return DslSyntaxError(message, node.span.line, node.span.column, self.file.source)

    def _declare(self, name: str, node) -> None:
        if name == "QQ" or name in self.names:
            raise self._error(f"name '{name}' is already declared", node)
        self.names[name] = node.span.line

    # ---------------------------
    # Header
    # ---------------------------

    def _header(self) -> Tuple[CoeffDecl, VarsDecl, OrderDecl]:
        expected = (CoeffDecl, VarsDecl, OrderDecl)
        words = ("coeff", "vars", "order")
        statements = self.file.statements
        for k, (kind, word) in enumerate(zip(expected, words)):
            if len(statements) <= k:
                raise DslSyntaxError(f"missing '{word}' statement", len(statements) + 1, 1, self.file.source)
            if not isinstance(statements[k], kind):
                raise self._error(f"expected '{word}' statement", statements[k])
        for node in statements[3:]:
            if isinstance(node, expected):
                raise self._error("header statements may appear only once, at the top", node)
        return statements[0], statements[1], statements[2]

    def _ring(self, decl: CoeffDecl) -> CoeffRing:
        for name in decl.generators:
            self._declare(name, decl)
        if not decl.generators:
            return QQ
        return polynomial_ring(tuple(decl.generators))

    def _order(self, decl: OrderDecl, variables: Tuple[str, ...]) -> MonomialOrder:
        if not decl.precedence:
            return MonomialOrder(decl.kind, tuple(range(len(variables))))
        if sorted(decl.precedence) != sorted(variables):
            raise self._error("order must list every variable exactly once", decl)
        return MonomialOrder(decl.kind, tuple(variables.index(v) for v in decl.precedence))

    # ---------------------------
    # Coefficient expressions
    # ---------------------------

    def _ring_value(self, ring: CoeffRing, expr: Sum, node) -> Any:
        def lookup(atom: Atom):
            if atom.name in ring.generators:
                return ring.generator(atom.name)
            raise UndeclaredIdentifier(atom.name, node.span.line)

        return evaluate(expr, lookup, ring.coerce)

    def _maps(self, ring: CoeffRing, variables: Tuple[str, ...]):
        tables: Dict[str, Dict[int, list]] = {"sigma": {}, "sigma_inv": {}, "delta": {}}
        gens = ring.generator_elements()
        for node in self.file.of_type(MapDecl):
            if node.variable not in variables:
                raise UndeclaredIdentifier(node.variable, node.span.line)
            i = variables.index(node.variable)
            table = tables[node.kind]
            if i in table:
                raise self._error(f"{node.kind} {node.variable} given twice", node)
            images = list(gens) if node.kind != "delta" else [ring.zero() for _ in gens]
            seen = set()
            for name, expr in node.images:
                if name not in ring.generators:
                    raise UndeclaredIdentifier(name, node.span.line)
                if name in seen:
                    raise self._error(f"image of '{name}' given twice", node)
                seen.add(name)
                images[ring.generators.index(name)] = self._ring_value(ring, expr, node)
            table[i] = images
        return tables["sigma"], tables["sigma_inv"], tables["delta"]

    def _relations(self, ring: CoeffRing, variables: Tuple[str, ...]):
        n = len(variables)
        relations = {}
        for node in self.file.of_type(RelationDecl):
            for name in (node.left, node.right):
                if name not in variables:
                    raise UndeclaredIdentifier(name, node.span.line)
            j, i = variables.index(node.left), variables.index(node.right)
            if j <= i:
                raise self._error("left side must be x_j x_i with j > i", node)
            if (i, j) in relations:
                raise self._error(f"relation {node.left}*{node.right} given twice", node)
            terms: Dict[ExponentVector, Any] = {}
            for sign, product in node.rhs.terms:
                coeff = ring.one()
                exponent = [0] * n
                last = -1
                for factor in product.factors:
                    if isinstance(factor, Atom) and factor.name in variables:
                        k = variables.index(factor.name)
                        if k < last:
                            raise self._error("relation right side must be in standard form", node)
                        last = k
                        exponent[k] += factor.power
                        continue
                    if last >= 0:
                        raise self._error("coefficients must precede the variables in a relation term", node)
                    piece = Sum((("+", Product((factor,))),))
                    coeff = coeff * self._ring_value(ring, piece, node)
                add_into(terms, ExponentVector.of(*exponent), -coeff if sign == "-" else coeff)
            key = ExponentVector.unit(n, i) + ExponentVector.unit(n, j)
            c = terms.pop(key, ring.zero())
            relations[(i, j)] = (c, terms)
        return relations

    # ---------------------------
    # Definitions
    # ---------------------------

    def build(self) -> Workspace:
        coeff, var_decl, order_decl = self._header()
        ring = self._ring(coeff)
        variables = tuple(var_decl.names)
        for name in variables:
            self._declare(name, var_decl)
        order = self._order(self.order_override or order_decl, variables)

        sigma, sigma_inverse, delta = self._maps(ring, variables)
        presentation = Presentation.create(
            ring,
            variables,
            order=order,
            sigma=sigma,
            sigma_inverse=sigma_inverse,
            delta=delta,
            relations=self._relations(ring, variables),
        )

        scheme = "toprev"
        for node in self.file.of_type(ModuleOrderDecl):
            scheme = node.scheme
        scheme = self.scheme_override or scheme
        if scheme not in MODULE_SCHEMES:
            raise InputError(f"unknown module order '{scheme}'")

        ws = Workspace(self.file, presentation, scheme)
        for node in self.file.statements:
            if isinstance(node, PolyDef):
                self._declare(node.name, node)
                ws.polys[node.name] = ws.polynomial(node.expr, node.span.line)
            elif isinstance(node, VectorDef):
                self._declare(node.name, node)
                ws.vectors[node.name] = tuple(ws.polynomial(e, node.span.line) for e in node.entries)
            elif isinstance(node, MatrixDef):
                self._declare(node.name, node)
                if any(len(row) != len(node.rows[0]) for row in node.rows):
                    raise self._error("matrix rows have different lengths", node)
                literal = MatrixOverA(
                    presentation, [[ws.polynomial(e, node.span.line) for e in row] for row in node.rows]
                )
                ws.matrices[node.name] = literal.transpose()
        log.debug(
            "built %s: %d variables, %d polys, %d vectors, %d matrices",
            self.file.source or "<text>",
            len(variables),
            len(ws.polys),
            len(ws.vectors),
            len(ws.matrices),
        )
        return ws


def build(
    file: PresentationFile, order: Optional[OrderDecl] = None, module_scheme: Optional[str] = None
) -> Workspace:
    """
    Builds the workspace; `order` and `module_scheme` override the file.
    Constroi o workspace; `order` e `module_scheme` sobrescrevem o arquivo.
    """
    return _Builder(file, order, module_scheme).build()
