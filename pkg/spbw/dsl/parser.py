"""
Line-oriented pyparsing grammar for `.spbw` files.
Gramatica pyparsing, uma instrucao por linha, para arquivos `.spbw`.

    coeff QQ | coeff QQ[t1, t2]
    vars x1, x2
    order deglex x1 > x2
    module_order toprev
    sigma x1: t -> 2*t
    delta x1: t -> 1
    relation x2*x1 = 2*x1*x2 + t*x1
    poly f = x1^2 - 1/2*t*x2
    vector v = [x1 ; 0]
    matrix F = [[1, 0], [1, 0]]
    command divide f by g1 g2
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Optional

import pyparsing as pp

from spbw.core.errors import DslSyntaxError

from .ast import (
    Atom,
    CoeffDecl,
    CommandDecl,
    Group,
    MapDecl,
    MatrixDef,
    ModuleOrderDecl,
    Number,
    OrderDecl,
    PolyDef,
    PresentationFile,
    Product,
    RelationDecl,
    Span,
    Sum,
    VarsDecl,
    VectorDef,
)

pp.ParserElement.enable_packrat()

COMMENT = "#"


def _number(s, loc, toks):
    numerator = int(toks[0])
    denominator = int(toks[1]) if len(toks) > 1 else 1
    if denominator == 0:
        raise pp.ParseFatalException(s, loc, "zero denominator")
    return Number(numerator, denominator)


def _sum(toks):
    items = list(toks)
    return Sum(tuple((items[k], items[k + 1]) for k in range(0, len(items), 2)))


def _ident() -> pp.ParserElement:
    return pp.Word(pp.alphas + "_", pp.alphanums + "_")


def _expression() -> pp.ParserElement:
    expr = pp.Forward()
    power = pp.Optional(pp.Suppress("^") + pp.Word(pp.nums), default="1")
    number = (pp.Word(pp.nums) + pp.Optional(pp.Suppress("/") + pp.Word(pp.nums))).set_parse_action(_number)
    atom = (_ident() + power).set_parse_action(lambda t: Atom(t[0], int(t[1])))
    group = (pp.Suppress("(") + expr + pp.Suppress(")") + power).set_parse_action(
        lambda t: Group(t[0], int(t[1]))
    )
    factor = number | atom | group
    product = (factor + pp.ZeroOrMore(pp.Suppress("*") + factor)).set_parse_action(lambda t: Product(tuple(t)))
    sign = pp.one_of("+ -")
    expr <<= (pp.Optional(sign, default="+") + product + pp.ZeroOrMore(sign + product)).set_parse_action(_sum)
    return expr


EXPRESSION = _expression()


def _statement() -> pp.ParserElement:
    K = pp.Keyword
    ident = _ident()
    ident_list = ident + pp.ZeroOrMore(pp.Suppress(",") + ident)
    expr = EXPRESSION

    coeff = (
        K("coeff").suppress()
        + K("QQ").suppress()
        + pp.Optional(pp.Suppress("[") + pp.Group(ident_list) + pp.Suppress("]"))
    ).set_parse_action(lambda t: CoeffDecl(tuple(t[0]) if t else ()))

    variables = (K("vars").suppress() + pp.Group(ident_list)).set_parse_action(lambda t: VarsDecl(tuple(t[0])))

    order = (
        K("order").suppress()
        + pp.one_of("deglex degrevlex", as_keyword=True)
        + pp.Group(pp.Optional(ident + pp.ZeroOrMore(pp.Suppress(">") + ident)))
    ).set_parse_action(lambda t: OrderDecl(t[0], tuple(t[1])))

    module_order = (K("module_order").suppress() + pp.one_of("top toprev", as_keyword=True)).set_parse_action(
        lambda t: ModuleOrderDecl(t[0])
    )

    mapping = pp.Group(ident + pp.Suppress("->") + expr)
    images = (
        pp.one_of("sigma_inv sigma delta", as_keyword=True)
        + ident
        + pp.Suppress(":")
        + pp.Group(mapping + pp.ZeroOrMore(pp.Suppress(",") + mapping))
    ).set_parse_action(lambda t: MapDecl(t[0], t[1], tuple((m[0], m[1]) for m in t[2])))

    relation = (
        K("relation").suppress() + ident + pp.Suppress("*") + ident + pp.Suppress("=") + expr
    ).set_parse_action(lambda t: RelationDecl(t[0], t[1], t[2]))

    poly = (K("poly").suppress() + ident + pp.Suppress("=") + expr).set_parse_action(
        lambda t: PolyDef(t[0], t[1])
    )

    vector = (
        K("vector").suppress()
        + ident
        + pp.Suppress("=")
        + pp.Suppress("[")
        + pp.Group(expr + pp.ZeroOrMore(pp.Suppress(";") + expr))
        + pp.Suppress("]")
    ).set_parse_action(lambda t: VectorDef(t[0], tuple(t[1])))

    row = pp.Group(pp.Suppress("[") + expr + pp.ZeroOrMore(pp.Suppress(",") + expr) + pp.Suppress("]"))
    matrix = (
        K("matrix").suppress()
        + ident
        + pp.Suppress("=")
        + pp.Suppress("[")
        + pp.Group(row + pp.ZeroOrMore(pp.Suppress(",") + row))
        + pp.Suppress("]")
    ).set_parse_action(lambda t: MatrixDef(t[0], tuple(tuple(r) for r in t[1])))

    arg = pp.Regex(r"[A-Za-z0-9_][A-Za-z0-9_*^/]*")
    command = (
        K("command").suppress()
        + pp.Regex(r"[a-z][a-z-]*")("verb")
        + pp.Group(pp.ZeroOrMore(~K("by") + arg))("args")
        + pp.Optional(K("by").suppress() + pp.Group(pp.OneOrMore(arg))("divisors"))
    ).set_parse_action(
        lambda t: CommandDecl(
            t["verb"], tuple(t["args"]), tuple(t["divisors"]) if "divisors" in t else None
        )
    )

    return coeff | variables | order | module_order | images | relation | poly | vector | matrix | command


STATEMENT = _statement()


def _error_message(exc: pp.ParseBaseException) -> str:
    return exc.msg if exc.msg else "invalid syntax"


def parse(text: str, source: Optional[str] = None) -> PresentationFile:
    """
    Parses the whole file; the first bad line raises DslSyntaxError.
    Faz o parse do arquivo inteiro; a primeira linha invalida gera DslSyntaxError.
    """
    statements = []
    for number, raw in enumerate(text.splitlines(), start=1):
        code = raw.split(COMMENT, 1)[0].rstrip()
        if not code.strip():
            continue
        try:
            node = STATEMENT.parse_string(code, parse_all=True)[0]
        except pp.ParseBaseException as exc:
            raise DslSyntaxError(_error_message(exc), number, exc.column, source) from None
        column = len(code) - len(code.lstrip()) + 1
        statements.append(replace(node, span=Span(number, column)))
    return PresentationFile(tuple(statements), source)


def parse_file(path: Path | str) -> PresentationFile:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), source=path.name)


def parse_expression(text: str, line: int = 0, source: Optional[str] = None) -> Sum:
    """A single polynomial expression, e.g. a command argument `D1^2*D2`."""
    try:
        return EXPRESSION.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise DslSyntaxError(f"bad expression '{text}': {_error_message(exc)}", line, exc.column, source) from None
