"""
Exception hierarchy shared by the engine and the command line.
Hierarquia de excecoes compartilhada pelo motor e pela linha de comando.

Every class carries the exit code the CLI maps it to.
Cada classe carrega o codigo de saida usado pela CLI.
"""

from typing import Optional


EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_GUARD = 3


class SpbwError(Exception):
    """Base class for every error the engine reports."""

    exit_code: int = EXIT_INPUT_ERROR


# ---------------------------
# Input errors (exit 2)
# ---------------------------

class InputError(SpbwError):
    """Malformed or inconsistent input."""

    exit_code = EXIT_INPUT_ERROR


class DslSyntaxError(InputError):
    """
    Positioned syntax error in a `.spbw` file.
    Erro de sintaxe posicionado em um arquivo `.spbw`.
    """

    def __init__(self, message: str, line: int, column: int = 1, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class UndeclaredIdentifier(InputError):
    def __init__(self, name: str, line: Optional[int] = None):
        self.name = name
        self.line = line
        suffix = f" (line {line})" if line is not None else ""
        super().__init__(f"undeclared identifier '{name}'{suffix}")


class ShapeError(InputError, ValueError):
    """Matrix or vector dimensions do not fit the requested operation."""


class MixedPresentationError(InputError, ValueError):
    """Operands belong to different algebras or free modules."""


class ConfigError(InputError):
    pass


# ---------------------------
# Mathematical failures (exit 1)
# ---------------------------

class MathematicalFailure(SpbwError):
    """A well-posed question whose answer is negative."""

    exit_code = EXIT_MATH_FAILURE


class InvalidPresentation(MathematicalFailure):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures) or "invalid presentation")


class NoInverseExists(MathematicalFailure):
    pass


class StabilityNotDecided(MathematicalFailure):
    def __init__(self, message: str = "stability not decided"):
        super().__init__(message)


class NotIdempotent(MathematicalFailure, ValueError):
    pass


class VerificationFailed(MathematicalFailure):
    pass


# ---------------------------
# Resource guards (exit 3)
# ---------------------------

class ResourceGuardExceeded(SpbwError):
    """
    A configured limit stopped a computation.
    Um limite configurado interrompeu o calculo.
    """

    exit_code = EXIT_RESOURCE_GUARD

    def __init__(self, limit_name: str, limit: int, observed: int):
        self.limit_name = limit_name
        self.limit = limit
        self.observed = observed
        super().__init__(f"resource guard '{limit_name}' exceeded: {observed} > {limit}")
