"""Shared result/report helpers used across modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verification:
    """Outcome of a structural check: truthy iff no violations were found.

    Each violation is a short ``code: detail`` string, stable enough to be
    matched by tools.
    """

    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verification(violations: list[str]) -> Verification:
    return Verification(not violations, tuple(violations))


class ScaleError(ValueError):
    """Raised when an exhaustive routine is asked to exceed its size gate."""
