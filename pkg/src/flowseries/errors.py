"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["DomainError", "DivergenceViolation", "CompatibilityViolation"]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergenceViolation(ValueError):
    """Initial mode data violates k1*B1 + k2*B2 + k3*B3 = 0."""

    def __init__(self, mode, value):
        self.mode = tuple(mode)
        self.value = value
        super().__init__(
            f"mode {self.mode}: k.B = {value} != 0 (divergence-free initial data required)"
        )


class CompatibilityViolation(ValueError):
    """Initial mode data violates lambda1*A1 + lambda2*A2 + lambda3*A3 = 0."""

    def __init__(self, mode, value):
        self.mode = mode
        self.value = value
        super().__init__(
            f"mode {mode}: lambda.A = {value} != 0 (incompatible initial data)"
        )
