"""Coefficient tables: the output of both series solvers.

A table maps each mode k to its four coefficient functions
(T1, T2, T3, T4): the three velocity components and the pressure
coefficient, all exact exponential polynomials.  Euler tables are indexed
by multi-indices of N^3 up to a truncation level; Navier-Stokes tables hold
a finite mode ladder k = 0..n embedded as (k, 0, 0) together with the wave
direction lambda, the viscosity and the forcing coefficients needed to
verify the fields later.

Tables are value objects: built once by a solver, then read by the
evaluation, bound-checking and persistence layers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import Mode, level
from .ring import ExpPoly

__all__ = ["ModeCoefficients", "CoefficientTable", "EULER", "NAVIER_STOKES"]

EULER = "euler"
NAVIER_STOKES = "navier-stokes"

ModeCoefficients = tuple[ExpPoly, ExpPoly, ExpPoly, ExpPoly]

_ZERO = ExpPoly.zero()


@dataclass
class CoefficientTable:
    kind: str
    entries: dict[Mode, ModeCoefficients]
    max_level: int
    zero_mode: tuple[Fraction, Fraction, Fraction]
    spec_hash: str = ""
    epsilon: Fraction | None = None
    nu: Fraction | None = None
    direction: tuple[Fraction, Fraction, Fraction] | None = None
    forcing: dict[int, tuple[ExpPoly, ExpPoly, ExpPoly]] = field(default_factory=dict)

    def modes(self) -> list[Mode]:
        """All stored modes, by level then lexicographic: the canonical order."""
        return sorted(self.entries, key=lambda k: (level(k), k))

    def velocity(self, k: Mode) -> tuple[ExpPoly, ExpPoly, ExpPoly]:
        entry = self.entries.get(k)
        if entry is None:
            return (_ZERO, _ZERO, _ZERO)
        return entry[:3]

    def pressure(self, k: Mode) -> ExpPoly:
        entry = self.entries.get(k)
        return _ZERO if entry is None else entry[3]

    def nonzero_modes(self) -> list[Mode]:
        return [
            k for k in self.modes()
            if any(not f.is_zero() for f in self.entries[k])
        ]

    def truncated(self, max_level: int) -> "CoefficientTable":
        """Restriction to |k| <= max_level.

        The recursion is lower-triangular in the level, so the restriction
        equals the table the solver would have produced at the smaller
        truncation.
        """
        if max_level >= self.max_level:
            return self
        return CoefficientTable(
            kind=self.kind,
            entries={k: v for k, v in self.entries.items() if level(k) <= max_level},
            max_level=max_level,
            zero_mode=self.zero_mode,
            spec_hash=self.spec_hash,
            epsilon=self.epsilon,
            nu=self.nu,
            direction=self.direction,
            forcing=self.forcing,
        )

    def forcing_field(self, k: int) -> tuple[ExpPoly, ExpPoly, ExpPoly]:
        """Forcing coefficients of scalar mode k (Navier-Stokes tables)."""
        return self.forcing.get(k, (_ZERO, _ZERO, _ZERO))
