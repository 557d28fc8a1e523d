# spbw/core/guards.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .errors import ResourceGuardExceeded

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResourceGuard:
    """
    Limits for the completion loops (ideal and module Buchberger).
    - max_basis: largest basis size allowed (None = unlimited)
    - max_degree: largest total degree of an added element
    - max_rounds: largest number of WHILE rounds
    A tripped limit raises ResourceGuardExceeded; nothing is truncated silently.
    """
    max_basis: Optional[int] = None
    max_degree: Optional[int] = None
    max_rounds: Optional[int] = None

    def check_basis(self, size: int) -> None:
        _check("max_basis", self.max_basis, size)

    def check_degree(self, degree: int) -> None:
        _check("max_degree", self.max_degree, degree)

    def check_rounds(self, rounds: int) -> None:
        _check("max_rounds", self.max_rounds, rounds)

    def merged(self, **overrides: Optional[int]) -> "ResourceGuard":
        """Returns a copy where every non-None override replaces the field."""
        values = {
            "max_basis": self.max_basis,
            "max_degree": self.max_degree,
            "max_rounds": self.max_rounds,
        }
        for key, value in overrides.items():
            if key not in values:
                raise ValueError(f"unknown guard: {key}")
            if value is not None:
                values[key] = value
        return ResourceGuard(**values)


UNLIMITED = ResourceGuard()


def _check(name: str, limit: Optional[int], observed: int) -> None:
    if limit is None or observed <= limit:
        return
    log.warning("[guard] %s tripped: %s > %s", name, observed, limit)
    raise ResourceGuardExceeded(name, limit, observed)
