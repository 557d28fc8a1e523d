"""
Syntax tree of `.spbw` presentation files.
Arvore sintatica dos arquivos de apresentacao `.spbw`.

Nodes are frozen dataclasses; source positions never take part in equality,
so render(parse(text)) parses back to an equal tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union


@dataclass(frozen=True)
class Span:
    line: int
    column: int = 1


# ---------------------------
# Expressions
# ---------------------------

@dataclass(frozen=True)
class Number:
    numerator: int
    denominator: int = 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def render(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class Atom:
    """Identifier with an optional power: `x2`, `D1^3`."""

    name: str
    power: int = 1

    def render(self) -> str:
        return self.name if self.power == 1 else f"{self.name}^{self.power}"


@dataclass(frozen=True)
class Group:
    expr: "Sum"
    power: int = 1

    def render(self) -> str:
        body = f"({self.expr.render()})"
        return body if self.power == 1 else f"{body}^{self.power}"


Factor = Union[Number, Atom, Group]


@dataclass(frozen=True)
class Product:
    factors: Tuple[Factor, ...]

    def render(self) -> str:
        return "*".join(f.render() for f in self.factors)

    def atoms(self) -> Iterator[Atom]:
        for f in self.factors:
            if isinstance(f, Atom):
                yield f
            elif isinstance(f, Group):
                yield from f.expr.atoms()


@dataclass(frozen=True)
class Sum:
    """Signed products; the first sign may be "+" (written as nothing)."""

    terms: Tuple[Tuple[str, Product], ...]

    def render(self) -> str:
        out = []
        for k, (sign, term) in enumerate(self.terms):
            if k == 0:
                out.append(f"-{term.render()}" if sign == "-" else term.render())
            else:
                out.append(f" {sign} {term.render()}")
        return "".join(out)

    def atoms(self) -> Iterator[Atom]:
        for _, term in self.terms:
            yield from term.atoms()


# ---------------------------
# Statements
# ---------------------------

@dataclass(frozen=True)
class CoeffDecl:
    generators: Tuple[str, ...]
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        if not self.generators:
            return "coeff QQ"
        return "coeff QQ[" + ", ".join(self.generators) + "]"


@dataclass(frozen=True)
class VarsDecl:
    names: Tuple[str, ...]
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        return "vars " + ", ".join(self.names)


@dataclass(frozen=True)
class OrderDecl:
    kind: str
    precedence: Tuple[str, ...] = ()
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        tail = (" " + " > ".join(self.precedence)) if self.precedence else ""
        return f"order {self.kind}{tail}"


@dataclass(frozen=True)
class ModuleOrderDecl:
    scheme: str
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        return f"module_order {self.scheme}"


@dataclass(frozen=True)
class MapDecl:
    """sigma / sigma_inv / delta images of the coefficient generators."""

    kind: str
    variable: str
    images: Tuple[Tuple[str, Sum], ...]
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        body = ", ".join(f"{g} -> {e.render()}" for g, e in self.images)
        return f"{self.kind} {self.variable}: {body}"


@dataclass(frozen=True)
class RelationDecl:
    """`relation Xj*Xi = rhs`."""

    left: str
    right: str
    rhs: Sum
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        return f"relation {self.left}*{self.right} = {self.rhs.render()}"


@dataclass(frozen=True)
class PolyDef:
    name: str
    expr: Sum
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        return f"poly {self.name} = {self.expr.render()}"


@dataclass(frozen=True)
class VectorDef:
    name: str
    entries: Tuple[Sum, ...]
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        return f"vector {self.name} = [" + " ; ".join(e.render() for e in self.entries) + "]"


@dataclass(frozen=True)
class MatrixDef:
    """Rows as written; the file convention lists the rows of F^T."""

    name: str
    rows: Tuple[Tuple[Sum, ...], ...]
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        rows = ", ".join("[" + ", ".join(e.render() for e in row) + "]" for row in self.rows)
        return f"matrix {self.name} = [{rows}]"


@dataclass(frozen=True)
class CommandDecl:
    verb: str
    args: Tuple[str, ...] = ()
    divisors: Optional[Tuple[str, ...]] = None
    span: Span = field(default=Span(0), compare=False)

    def render(self) -> str:
        parts = [self.verb, *self.args]
        if self.divisors is not None:
            parts += ["by", *self.divisors]
        return "command " + " ".join(parts)


Statement = Union[
    CoeffDecl, VarsDecl, OrderDecl, ModuleOrderDecl, MapDecl, RelationDecl, PolyDef, VectorDef, MatrixDef, CommandDecl
]


@dataclass(frozen=True)
class PresentationFile:
    statements: Tuple[Statement, ...]
    source: Optional[str] = field(default=None, compare=False)

    def of_type(self, kind) -> Tuple[Statement, ...]:
        return tuple(s for s in self.statements if isinstance(s, kind))

    @property
    def commands(self) -> Tuple[CommandDecl, ...]:
        return self.of_type(CommandDecl)

    def render(self) -> str:
        """Canonical text; comments and blank lines are not kept."""
        return "".join(s.render() + "\n" for s in self.statements)
