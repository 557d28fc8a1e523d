"""
Command runner: executes `command VERB ...` statements on a workspace and
renders the deterministic text report.
Executor de comandos: roda as instrucoes `command VERB ...` e gera o
relatorio de texto deterministico.

Report layout:

    # spbw-report v1
    # file: diffusion.spbw
    # command: divide f by f1 f2 f3
    q1 = ...
    h = 0
    status: ok
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from spbw.algebra.groebner import GroebnerOptions, buchberger, check_criterion, divide, lift
from spbw.algebra.matrixkit import (
    MatrixOverA,
    complete_unimodular_unit_entry,
    extract_free_basis,
    idempotent_diagonalize_division,
    is_unimodular_column,
    left_inverse,
)
from spbw.algebra.modules import ModuleVector, mod_buchberger, mod_divide
from spbw.algebra.poly import NCPolynomial
from spbw.core.errors import (
    EXIT_MATH_FAILURE,
    EXIT_OK,
    InputError,
    MathematicalFailure,
    SpbwError,
    VerificationFailed,
)
from spbw.core.guards import UNLIMITED, ResourceGuard

from .ast import CommandDecl
from .builder import Workspace

log = logging.getLogger(__name__)

REPORT_HEADER = "# spbw-report v1"

VERBS = (
    "validate",
    "mul",
    "divide",
    "member",
    "gb",
    "modgb",
    "moddivide",
    "linv",
    "unimod",
    "idem-diag",
    "complete",
    "free-basis",
    "sc",
    "qc",
)


@dataclass(frozen=True)
class RunOptions:
    """Flags shared by every command of one invocation."""

    trace: bool = False
    pairs_only: bool = False
    subset_cap: Optional[int] = None
    guard: ResourceGuard = UNLIMITED

    def groebner(self, track_cofactors: bool = False) -> GroebnerOptions:
        return GroebnerOptions(
            subset_cap=self.subset_cap,
            pairs_only=self.pairs_only,
            guard=self.guard,
            track_cofactors=track_cofactors,
            trace=self.trace,
        )


@dataclass
class CommandOutcome:
    command: str
    lines: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    @property
    def status(self) -> str:
        return "ok" if self.exit_code == EXIT_OK else f"failed (exit {self.exit_code})"


def command_from_tokens(verb: str, tokens: Sequence[str]) -> CommandDecl:
    """Ad-hoc command from CLI tokens: `f by f1 f2`."""
    tokens = list(tokens)
    if "by" in tokens:
        k = tokens.index("by")
        return CommandDecl(verb, tuple(tokens[:k]), tuple(tokens[k + 1:]))
    return CommandDecl(verb, tuple(tokens))


def _vector_text(entries: Sequence[NCPolynomial]) -> str:
    return "[" + " ; ".join(e.render() for e in entries) + "]"


class CommandRunner:
    """
    Runs commands against one workspace.
    Executa comandos sobre um workspace.
    """

    def __init__(self, workspace: Workspace, options: Optional[RunOptions] = None):
        self.ws = workspace
        self.options = options or RunOptions()
        self._checked = False
        self._handlers: Dict[str, Callable[[CommandDecl], int]] = {
            "validate": self._validate,
            "mul": self._mul,
            "divide": self._divide,
            "member": self._member,
            "gb": self._gb,
            "modgb": self._modgb,
            "moddivide": self._moddivide,
            "linv": self._linv,
            "unimod": self._unimod,
            "idem-diag": self._idem_diag,
            "complete": self._complete,
            "free-basis": self._free_basis,
            "sc": self._sc,
            "qc": self._qc,
        }
        self._out: List[str] = []

    # ---------------------------
    # Entry points
    # ---------------------------

    def run(self, command: CommandDecl) -> CommandOutcome:
        outcome = CommandOutcome(command.render()[len("command "):])
        self._out = outcome.lines
        handler = self._handlers.get(command.verb)
        try:
            if handler is None:
                raise InputError(f"unknown command '{command.verb}'")
            outcome.exit_code = handler(command)
        except SpbwError as exc:
            outcome.lines.append(f"error: {exc}")
            outcome.exit_code = exc.exit_code
        except (ValueError, TypeError) as exc:
            outcome.lines.append(f"error: {exc}")
            outcome.exit_code = InputError.exit_code
        except ArithmeticError as exc:
            # inconsistent presentations surface here during reduction
            outcome.lines.append(f"error: {exc}")
            outcome.exit_code = MathematicalFailure.exit_code
        log.info("command %s: %s", outcome.command, outcome.status)
        return outcome

    def run_all(self, commands: Sequence[CommandDecl]) -> List[CommandOutcome]:
        return [self.run(c) for c in commands]

    # ---------------------------
    # Argument helpers
    # ---------------------------

    def _emit(self, line: str) -> None:
        self._out.append(line)

    def _ready(self) -> None:
        if not self._checked:
            self.ws.presentation.ensure_valid()
            self._checked = True

    def _line(self, command: CommandDecl) -> int:
        return command.span.line

    def _arity(self, command: CommandDecl, count: int, divisors: bool = False) -> None:
        if len(command.args) != count:
            raise InputError(f"'{command.verb}' takes {count} argument(s), got {len(command.args)}")
        if divisors and not command.divisors:
            raise InputError(f"'{command.verb}' needs 'by' followed by at least one element")
        if not divisors and command.divisors is not None:
            raise InputError(f"'{command.verb}' does not take 'by'")

    def _poly(self, arg: str, command: CommandDecl) -> NCPolynomial:
        value = self.ws.value(arg, self._line(command))
        if not isinstance(value, NCPolynomial):
            raise InputError(f"'{arg}' is not a polynomial")
        return value

    def _vector(self, arg: str, command: CommandDecl) -> ModuleVector:
        value = self.ws.value(arg, self._line(command))
        if not isinstance(value, tuple):
            raise InputError(f"'{arg}' is not a vector")
        return self.ws.module_vector(value)

    def _matrix(self, arg: str, command: CommandDecl) -> MatrixOverA:
        value = self.ws.value(arg, self._line(command))
        if not isinstance(value, MatrixOverA):
            raise InputError(f"'{arg}' is not a matrix")
        return value

    def _column(self, arg: str, command: CommandDecl) -> MatrixOverA:
        value = self.ws.value(arg, self._line(command))
        if isinstance(value, tuple):
            return MatrixOverA.column_vector(self.ws.presentation, value)
        if isinstance(value, MatrixOverA):
            return value
        raise InputError(f"'{arg}' is not a vector or a one-column matrix")

    # ---------------------------
    # Presentation commands
    # ---------------------------

    def _validate(self, command: CommandDecl) -> int:
        self._arity(command, 0)
        report = self.ws.presentation.validate()
        for line in report.render():
            self._emit(line)
        return EXIT_OK if report.ok else EXIT_MATH_FAILURE

    def _qc(self, command: CommandDecl) -> int:
        self._arity(command, 0)
        for line in self.ws.presentation.associated_quasicommutative().describe():
            self._emit(line)
        return EXIT_OK

    def _sc(self, command: CommandDecl) -> int:
        self._arity(command, 2)
        self._ready()
        alpha = self.ws.exponent(command.args[0], self._line(command))
        beta = self.ws.exponent(command.args[1], self._line(command))
        c, p = self.ws.presentation.structure_constants(alpha, beta)
        ring = self.ws.presentation.ring
        self._emit(f"c = {ring.render(c)}")
        self._emit(f"p = {p.render()}")
        return EXIT_OK

    def _mul(self, command: CommandDecl) -> int:
        if len(command.args) < 2 or command.divisors is not None:
            raise InputError("'mul' takes at least two polynomials")
        self._ready()
        factors = [self._poly(a, command) for a in command.args]
        self._emit(f"product = {reduce(lambda a, b: a * b, factors).render()}")
        return EXIT_OK

    # ---------------------------
    # Division and bases
    # ---------------------------

    def _divide(self, command: CommandDecl) -> int:
        self._arity(command, 1, divisors=True)
        self._ready()
        f = self._poly(command.args[0], command)
        divisors = [self._poly(a, command) for a in command.divisors]
        result = divide(f, divisors, trace=self.options.trace)
        for line in result.render_trace():
            self._emit(line)
        for k, q in enumerate(result.quotients, start=1):
            self._emit(f"q{k} = {q.render()}")
        self._emit(f"h = {result.remainder.render()}")
        rebuilt = reduce(lambda acc, qg: acc + qg[0] * qg[1], zip(result.quotients, divisors), result.remainder)
        if rebuilt != f:
            raise VerificationFailed("f != sum q_i f_i + h")
        self._emit("check: f = sum q_i f_i + h")
        return EXIT_OK

    def _member(self, command: CommandDecl) -> int:
        self._arity(command, 1, divisors=True)
        self._ready()
        f = self._poly(command.args[0], command)
        gens = [self._poly(a, command) for a in command.divisors]
        basis = buchberger(gens, self.options.groebner(track_cofactors=True))
        certificate = lift(f, basis)
        if certificate is None:
            self._emit("member: no")
            return EXIT_MATH_FAILURE
        self._emit("member: yes")
        for k, c in enumerate(certificate, start=1):
            self._emit(f"c{k} = {c.render()}")
        return EXIT_OK

    def _emit_basis(self, basis, render: Callable[[object], str]) -> None:
        for line in basis.trace:
            self._emit(line)
        self._emit(f"basis: {len(basis)} elements, {basis.rounds} rounds")
        for k, g in enumerate(basis.elements, start=1):
            self._emit(f"g{k} = {render(g)}")
        self._emit("lm: " + ", ".join(g.render_lm() for g in basis.elements))
        report = check_criterion(basis)
        self._emit(report.render())
        if not report.ok:
            for failure in report.failures:
                self._emit(f"failure: {failure}")
            raise VerificationFailed("Buchberger criterion fails on the computed basis")

    def _gb(self, command: CommandDecl) -> int:
        if not command.args or command.divisors is not None:
            raise InputError("'gb' takes one or more polynomials")
        self._ready()
        gens = [self._poly(a, command) for a in command.args]
        basis = buchberger(gens, self.options.groebner())
        self._emit_basis(basis, lambda g: g.render())
        return EXIT_OK

    def _modgb(self, command: CommandDecl) -> int:
        if not command.args or command.divisors is not None:
            raise InputError("'modgb' takes one or more vectors")
        self._ready()
        gens = [self._vector(a, command) for a in command.args]
        basis = mod_buchberger(gens, self.options.groebner())
        self._emit_basis(basis, lambda g: g.render())
        return EXIT_OK

    def _moddivide(self, command: CommandDecl) -> int:
        self._arity(command, 1, divisors=True)
        self._ready()
        v = self._vector(command.args[0], command)
        divisors = [self._vector(a, command) for a in command.divisors]
        result = mod_divide(v, divisors, trace=self.options.trace)
        for line in result.render_trace():
            self._emit(line)
        for k, q in enumerate(result.quotients, start=1):
            self._emit(f"q{k} = {q.render()}")
        self._emit(f"h = {result.remainder.render()}")
        rebuilt = result.remainder
        for q, g in zip(result.quotients, divisors):
            rebuilt = rebuilt + g.left_mul(q)
        if rebuilt != v:
            raise VerificationFailed("v != sum q_i v_i + h")
        self._emit("check: v = sum q_i v_i + h")
        return EXIT_OK

    # ---------------------------
    # Matrices
    # ---------------------------

    def _linv(self, command: CommandDecl) -> int:
        self._arity(command, 1)
        self._ready()
        F = self._matrix(command.args[0], command)
        X = left_inverse(F, self.options.groebner())
        if X is None:
            self._emit("left inverse: none")
            return EXIT_MATH_FAILURE
        self._emit(f"X = {X.render()}")
        self._emit("check: X*F = I")
        return EXIT_OK

    def _unimod(self, command: CommandDecl) -> int:
        self._arity(command, 1)
        self._ready()
        v = self._column(command.args[0], command)
        ok, certificate = is_unimodular_column(v, self.options.groebner())
        if not ok:
            self._emit("unimodular: no")
            return EXIT_MATH_FAILURE
        self._emit("unimodular: yes")
        self._emit("certificate = (" + ", ".join(c.render() for c in certificate) + ")")
        return EXIT_OK

    def _idem_diag(self, command: CommandDecl) -> int:
        self._arity(command, 1)
        self._ready()
        F = self._matrix(command.args[0], command)
        result = idempotent_diagonalize_division(F)
        self._emit(f"rank = {result.rank}")
        self._emit(f"U = {result.U.render()}")
        self._emit(f"U^-1 = {result.U_inverse.render()}")
        self._emit(f"U*F*U^-1 = {(result.U @ F @ result.U_inverse).render()}")
        return EXIT_OK

    def _complete(self, command: CommandDecl) -> int:
        self._arity(command, 1)
        self._ready()
        v = self._column(command.args[0], command)
        U = complete_unimodular_unit_entry(v)
        self._emit(f"U = {U.render()}")
        self._emit("check: U*v = e1")
        return EXIT_OK

    def _free_basis(self, command: CommandDecl) -> int:
        self._arity(command, 2)
        self._ready()
        G1 = self._matrix(command.args[0], command)
        U = self._matrix(command.args[1], command)
        basis = extract_free_basis(G1, U, options=self.options.groebner())
        self._emit(f"basis: {len(basis)} columns")
        for k, c in enumerate(basis, start=1):
            self._emit(f"c{k} = {_vector_text(c.column(0))}")
        return EXIT_OK


def render_report(source: str, outcomes: Sequence[CommandOutcome]) -> str:
    """The report text; byte-identical for identical inputs."""
    lines = [REPORT_HEADER, f"# file: {source}"]
    for outcome in outcomes:
        lines.append(f"# command: {outcome.command}")
        lines.extend(outcome.lines)
        lines.append(f"status: {outcome.status}")
    return "\n".join(lines) + "\n"


def overall_exit(outcomes: Sequence[CommandOutcome]) -> int:
    return max((o.exit_code for o in outcomes), default=EXIT_OK)


def select_commands(ws: Workspace, verb: str, tokens: Sequence[str] = ()) -> Tuple[CommandDecl, ...]:
    """
    `run` takes every command of the file; other verbs take the file's
    statements with that verb, or the ad-hoc tokens when given.
    """
    if tokens:
        if verb == "run":
            raise InputError("'run' does not take arguments")
        return (command_from_tokens(verb, tokens),)
    if verb == "run":
        return ws.commands
    chosen = tuple(c for c in ws.commands if c.verb == verb)
    if chosen:
        return chosen
    if verb in ("validate", "qc"):
        return (CommandDecl(verb),)
    raise InputError(f"no '{verb}' command in {ws.file.source or 'the file'}")
