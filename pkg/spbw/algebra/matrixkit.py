"""
Matrices over A: idempotents, one-sided inverses, unimodular columns and
free bases of stably free modules.
Matrizes sobre A: idempotentes, inversas laterais, colunas unimodulares e
bases livres de modulos estavelmente livres.

Convention: a homomorphism f: A^r -> A^s is stored as the matrix F whose
columns are the images of the basis, and acts by f(a) = (a^T F^T)^T. Only
left inverses (X F = I) are computed; unknowns always multiply from the left.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from spbw.core.errors import (
    MixedPresentationError,
    NoInverseExists,
    NotIdempotent,
    ShapeError,
    StabilityNotDecided,
    VerificationFailed,
)

from .groebner import GroebnerOptions, buchberger, lift
from .modules import FreeModule
from .poly import NCPolynomial
from .presentation import Presentation

log = logging.getLogger(__name__)


class MatrixOverA:
    """Rectangular array of NCPolynomial entries of one presentation."""

    __slots__ = ("presentation", "rows")

    def __init__(self, presentation: Presentation, rows: Sequence[Sequence[Any]]):
        rows = [list(row) for row in rows]
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ShapeError("matrix rows have different lengths")
        self.presentation = presentation
        self.rows: Tuple[Tuple[NCPolynomial, ...], ...] = tuple(
            tuple(presentation.coerce(entry) for entry in row) for row in rows
        )

    @classmethod
    def identity(cls, presentation: Presentation, n: int) -> "MatrixOverA":
        return cls(presentation, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, presentation: Presentation, r: int, s: int) -> "MatrixOverA":
        return cls(presentation, [[0] * s for _ in range(r)])

    @classmethod
    def column_vector(cls, presentation: Presentation, entries: Sequence[Any]) -> "MatrixOverA":
        return cls(presentation, [[e] for e in entries])

    @classmethod
    def row_vector(cls, presentation: Presentation, entries: Sequence[Any]) -> "MatrixOverA":
        return cls(presentation, [list(entries)])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def is_square(self) -> bool:
        r, s = self.shape
        return r == s

    def column(self, j: int) -> Tuple[NCPolynomial, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "MatrixOverA":
        r, s = self.shape
        return MatrixOverA(self.presentation, [[self.rows[i][j] for i in range(r)] for j in range(s)])

    def __matmul__(self, other: "MatrixOverA") -> "MatrixOverA":
        if other.presentation is not self.presentation:
            raise MixedPresentationError("matrices belong to different presentations")
        r, k = self.shape
        k2, s = other.shape
        if k != k2:
            raise ShapeError(f"cannot multiply {r}x{k} by {k2}x{s}")
        zero = self.presentation.zero()
        out = []
        for i in range(r):
            row = []
            for j in range(s):
                total = zero
                for t in range(k):
                    a = self.rows[i][t]
                    b = other.rows[t][j]
                    if a and b:
                        total = total + a * b
                row.append(total)
            out.append(row)
        return MatrixOverA(self.presentation, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixOverA):
            return NotImplemented
        return other.presentation is self.presentation and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def constant_values(self) -> List[List[Fraction]]:
        """Entries as rationals; every entry must be a rational constant."""
        ring = self.presentation.ring
        out = []
        for row in self.rows:
            values = []
            for entry in row:
                value = ring.rational_value(entry.constant_value()) if entry.is_constant() else None
                if value is None:
                    raise ShapeError(f"entry {entry.render()} is not a rational constant")
                values.append(Fraction(value))
            out.append(values)
        return out

    @classmethod
    def from_values(cls, presentation: Presentation, values: Sequence[Sequence[Fraction]]) -> "MatrixOverA":
        return cls(presentation, [[presentation.constant(v) for v in row] for row in values])

    def render(self) -> str:
        return "[" + ", ".join("[" + ", ".join(e.render() for e in row) + "]" for row in self.rows) + "]"

    def __repr__(self) -> str:
        return f"MatrixOverA({self.render()})"


def _as_column(presentation_or_v, entries=None) -> Tuple[Presentation, Tuple[NCPolynomial, ...]]:
    if isinstance(presentation_or_v, MatrixOverA):
        r, s = presentation_or_v.shape
        if s != 1:
            raise ShapeError(f"expected a column, got a {r}x{s} matrix")
        return presentation_or_v.presentation, presentation_or_v.column(0)
    entries = tuple(presentation_or_v)
    if not entries:
        raise ShapeError("empty column")
    return entries[0].presentation, entries


# ---------------------------
# Idempotents
# ---------------------------

def is_idempotent_transpose(F: MatrixOverA) -> bool:
    """F^T F^T = F^T."""
    if not F.is_square():
        raise ShapeError(f"idempotence needs a square matrix, got {F.shape[0]}x{F.shape[1]}")
    T = F.transpose()
    return T @ T == T


def _identity(n: int) -> List[List[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _mul(A: List[List[Fraction]], B: List[List[Fraction]]) -> List[List[Fraction]]:
    return [[sum((A[i][t] * B[t][j] for t in range(len(B))), Fraction(0)) for j in range(len(B[0]))] for i in range(len(A))]


def _block(corner: Fraction, M: List[List[Fraction]]) -> List[List[Fraction]]:
    """diag(corner, M)."""
    n = len(M) + 1
    out = [[Fraction(0)] * n for _ in range(n)]
    out[0][0] = corner
    for i, row in enumerate(M):
        out[i + 1][1:] = row
    return out


def _kaplansky(F: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[List[Fraction]], int]:
    """
    (U, U^-1, r) with U F U^-1 = diag(0, I_r) for an idempotent F over QQ.

    When f11 is invertible, G = [[1, f11^-1 b], [0, I]] and K = [[1, 0], [-c, I]]
    bring F to diag(1, F'); otherwise 1 - f11 is invertible and the same is
    done with I - F. The first coordinate is finally permuted into place.
    """
    s = len(F)
    if s == 0:
        return [], [], 0
    flip = F[0][0] == 0
    E = [[Fraction(int(i == j)) - F[i][j] for j in range(s)] for i in range(s)] if flip else F
    a = E[0][0]
    b = [x / a for x in E[0][1:]]
    c = [E[i][0] for i in range(1, s)]
    rest = [[E[i][j] - c[i - 1] * b[j - 1] for j in range(1, s)] for i in range(1, s)]

    G, G_inv, K, K_inv = _identity(s), _identity(s), _identity(s), _identity(s)
    for j in range(1, s):
        G[0][j] = b[j - 1]
        G_inv[0][j] = -b[j - 1]
    for i in range(1, s):
        K[i][0] = -c[i - 1]
        K_inv[i][0] = c[i - 1]
    step = _mul(K, G)
    step_inv = _mul(G_inv, K_inv)

    if flip:
        rest = [[Fraction(int(i == j)) - rest[i][j] for j in range(s - 1)] for i in range(s - 1)]
    V, V_inv, sub_rank = _kaplansky(rest)
    W = _mul(_block(Fraction(1), V), step) if V else step
    W_inv = _mul(step_inv, _block(Fraction(1), V_inv)) if V else step_inv
    if flip:
        return W, W_inv, sub_rank

    zeros = s - 1 - sub_rank
    perm = list(range(1, zeros + 1)) + [0] + list(range(zeros + 1, s))
    P = [[Fraction(int(perm[i] == j)) for j in range(s)] for i in range(s)]
    P_t = [[P[j][i] for j in range(s)] for i in range(s)]
    return _mul(P, W), _mul(W_inv, P_t), sub_rank + 1


@dataclass(frozen=True)
class Diagonalization:
    """U F U^-1 = diag(0_{s-r}, I_r)."""

    U: MatrixOverA
    U_inverse: MatrixOverA
    rank: int

    def __iter__(self):
        return iter((self.U, self.rank))


def canonical_idempotent(presentation: Presentation, size: int, rank: int) -> MatrixOverA:
    return MatrixOverA(
        presentation,
        [[1 if i == j and i >= size - rank else 0 for j in range(size)] for i in range(size)],
    )


def idempotent_diagonalize_division(F: MatrixOverA) -> Diagonalization:
    """
    Conjugates an idempotent matrix with rational entries to diag(0, I_r).
    Conjuga uma matriz idempotente racional para diag(0, I_r).
    """
    if not F.is_square():
        raise ShapeError(f"expected a square matrix, got {F.shape[0]}x{F.shape[1]}")
    if F @ F != F:
        raise NotIdempotent("matrix is not idempotent")
    values = F.constant_values()
    U, U_inv, rank = _kaplansky(values)
    p = F.presentation
    s = len(values)
    result = Diagonalization(MatrixOverA.from_values(p, U), MatrixOverA.from_values(p, U_inv), rank)
    if s and (
        result.U @ F @ result.U_inverse != canonical_idempotent(p, s, rank)
        or result.U @ result.U_inverse != MatrixOverA.identity(p, s)
    ):
        raise VerificationFailed("conjugation did not reach the canonical block form")
    log.info("idempotent diagonalized: size %d, rank %d", s, rank)
    return result


# ---------------------------
# Inverses and unimodularity
# ---------------------------

def left_inverse(F: MatrixOverA, options: Optional[GroebnerOptions] = None) -> Optional[MatrixOverA]:
    """
    X with X F = I_s for F of size r x s, or None.

    Row k of X is a certificate that e_k lies in the left submodule of A^s
    generated by the rows of F (module Buchberger with cofactors).
    """
    r, s = F.shape
    if s == 0 or r < s:
        raise ShapeError(f"X F = I is impossible for a {r}x{s} matrix")
    p = F.presentation
    options = options or GroebnerOptions()
    module = FreeModule(p, s)
    support = [i for i, row in enumerate(F.rows) if any(row)]
    if not support:
        return None
    rows = [module.vector(F.rows[i]) for i in support]
    gb = buchberger(rows, GroebnerOptions(
        subset_cap=options.subset_cap,
        pairs_only=options.pairs_only,
        guard=options.guard,
        track_cofactors=True,
    ))
    X = []
    for k in range(1, s + 1):
        certificate = lift(module.unit(k), gb)
        if certificate is None:
            log.info("left inverse: e%d is not in the row module", k)
            return None
        row = [p.zero()] * r
        for i, entry in zip(support, certificate):
            row[i] = entry
        X.append(row)
    result = MatrixOverA(p, X)
    if result @ F != MatrixOverA.identity(p, s):
        raise VerificationFailed("left inverse certificate does not satisfy X F = I")
    return result


def is_unimodular_column(v, options: Optional[GroebnerOptions] = None) -> Tuple[bool, Optional[Tuple[NCPolynomial, ...]]]:
    """
    True iff 1 lies in the left ideal of the entries; the certificate is the
    row (b_1, ..., b_r) with sum b_i v_i = 1.
    """
    p, entries = _as_column(v)
    options = options or GroebnerOptions()
    support = [i for i, e in enumerate(entries) if e]
    if not support:
        return False, None
    gb = buchberger([entries[i] for i in support], GroebnerOptions(
        subset_cap=options.subset_cap,
        pairs_only=options.pairs_only,
        guard=options.guard,
        track_cofactors=True,
    ))
    certificate = lift(p.one(), gb)
    if certificate is None:
        return False, None
    row = [p.zero()] * len(entries)
    for i, b in zip(support, certificate):
        row[i] = b
    return True, tuple(row)


def verify_inverse_pair(U: MatrixOverA, V: MatrixOverA) -> bool:
    """U V = I and V U = I."""
    if not U.is_square() or U.shape != V.shape:
        return False
    n = U.shape[0]
    identity = MatrixOverA.identity(U.presentation, n)
    return U @ V == identity and V @ U == identity


# ---------------------------
# Stably free modules
# ---------------------------

def extract_free_basis(
    G1: MatrixOverA,
    U: MatrixOverA,
    s: Optional[int] = None,
    r: Optional[int] = None,
    options: Optional[GroebnerOptions] = None,
) -> List[MatrixOverA]:
    """
    Free basis of ker(g1) for a splitting g1: A^r -> A^s with matrix G1 (s x r).

    Checks U G1^T = [I_s; 0] and that U^T is invertible, then returns the last
    r - s columns of U^T.
    """
    s_shape, r_shape = G1.shape
    s = s_shape if s is None else s
    r = r_shape if r is None else r
    if (s, r) != (s_shape, r_shape):
        raise ShapeError(f"G1 is {s_shape}x{r_shape}, expected {s}x{r}")
    if U.shape != (r, r):
        raise ShapeError(f"U must be {r}x{r}, got {U.shape[0]}x{U.shape[1]}")
    p = G1.presentation
    G1_t = G1.transpose()

    expected = MatrixOverA(p, [[1 if i == j else 0 for j in range(s)] for i in range(r)])
    if U @ G1_t != expected:
        raise VerificationFailed("U*G1^T is not [I_s; 0]")

    U_t = U.transpose()
    X = left_inverse(U_t, options)
    if X is None or U_t @ X != MatrixOverA.identity(p, r):
        raise NoInverseExists("U^T is not invertible")

    basis = [MatrixOverA.column_vector(p, U_t.column(j)) for j in range(s, r)]
    zero_row = MatrixOverA.zeros(p, 1, s)
    for c in basis:
        if c.transpose() @ G1_t != zero_row:
            raise VerificationFailed("basis column is not in the kernel of g1")
    log.info("free basis extracted: %d columns", len(basis))
    return basis


def complete_unimodular_unit_entry(v) -> MatrixOverA:
    """
    Product of elementary row operations U with U v = e_1, built from the
    first entry of v that is a unit of A (a unit constant of R).
    """
    p, entries = _as_column(v)
    ring = p.ring
    n = len(entries)
    k = None
    for i, e in enumerate(entries):
        if e and e.is_constant() and ring.unit_inverse(e.constant_value()) is not None:
            k = i
            break
    if k is None:
        raise StabilityNotDecided("stability not decided: no unit entry")

    perm = list(range(n))
    perm[0], perm[k] = perm[k], perm[0]
    P = MatrixOverA(p, [[1 if j == perm[i] else 0 for j in range(n)] for i in range(n)])
    swapped = [entries[perm[i]] for i in range(n)]
    inverse = p.constant(ring.unit_inverse(swapped[0].constant_value()))
    D = MatrixOverA(p, [[inverse if i == j == 0 else (1 if i == j else 0) for j in range(n)] for i in range(n)])
    E = MatrixOverA(
        p,
        [[1 if i == j else (-swapped[i] if j == 0 and i > 0 else 0) for j in range(n)] for i in range(n)],
    )
    U = E @ D @ P
    e1 = MatrixOverA.column_vector(p, [1] + [0] * (n - 1))
    if U @ MatrixOverA.column_vector(p, entries) != e1:
        raise VerificationFailed("U*v != e1")
    return U
