"""Level-by-level construction of exponential series for the 3D
incompressible Euler Cauchy problem on the positive octant.

The velocity and pressure are sought as

    u_j(x, t) = sum_k T_jk(t) * exp(-k.x),      j = 1, 2, 3,
    p(x, t)   = sum_k T_4k(t) * exp(-k.x),      k in N^3,

with initial data u_j(x, 0) = sum_k B_jk exp(-k.x).  Matching coefficients
of the linearly independent basis functions turns the PDE into one ODE
system per mode, solvable in closed form in increasing level |k|:

    T_j0 = B_j0 (constants),   T_40 = 1 (pressure gauge),

    T_4k = - sum_{k'+k''=k, k',k''>0} (sum_j k''_j T_jk') (sum_i k'_i T_ik'')
           / (k1^2 + k2^2 + k3^2),

    Q_ik = sum_{k'+k''=k, k',k''>0} (sum_j k''_j T_jk') T_ik'' + k_i T_4k,

    P_k(t) = -(sum_j B_j0 k_j) t,

    T_ik = exp(-P_k) * ( int_0^t Q_ik(s) exp(P_k(s)) ds + B_ik ).

All arithmetic is exact, so the per-mode divergence identity
k1*T_1k + k2*T_2k + k3*T_3k = 0 and the mode ODEs hold as exact
exponential-polynomial identities, not merely to a tolerance.

Modes within one level depend only on strictly lower levels (plus their own
pressure coefficient), so a level could be computed concurrently over a
read-only view of the lower levels; the solver here fills levels
sequentially in deterministic order.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivergenceViolation
from .lattice import Mode, ZERO_MODE, is_positive, level, level_modes, splits
from .ring import ExpPoly, Rational, as_fraction
from .tables import EULER, CoefficientTable

__all__ = [
    "EulerProblem",
    "pressure_coefficient",
    "advection_forcing",
    "integrating_exponent",
    "velocity_coefficient",
    "solve",
    "mode_divergence",
    "mode_ode_residual",
]


@dataclass
class EulerProblem:
    """Cauchy data for the Euler series solver.

    zero_mode: the three constant coefficients B_j0 of the spatially
        uniform background flow.
    data: initial coefficients (B_1k, B_2k, B_3k) for modes k > (0,0,0);
        absent modes carry zero data.  Every listed mode must satisfy
        k1*B_1k + k2*B_2k + k3*B_3k = 0.
    epsilon: decay-margin parameter used by the admissibility and bound
        checks; must be positive.
    max_level: truncation level N; all modes with |k| <= N are computed.
    """

    zero_mode: tuple[Rational, Rational, Rational]
    data: dict[Mode, tuple[Rational, Rational, Rational]] = field(default_factory=dict)
    epsilon: Rational = Fraction(1, 2)
    max_level: int = 4

    def __post_init__(self):
        self.zero_mode = tuple(as_fraction(b) for b in self.zero_mode)
        self.data = {
            tuple(int(c) for c in k): tuple(as_fraction(b) for b in v)
            for k, v in self.data.items()
        }
        self.epsilon = as_fraction(self.epsilon)
        self.max_level = int(self.max_level)

    def validate(self) -> None:
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_level < 1:
            raise ValueError(f"max_level must be >= 1, got {self.max_level}")
        for k, b in sorted(self.data.items()):
            if not is_positive(k):
                raise ValueError(f"mode {k} is not > (0,0,0)")
            dot = k[0] * b[0] + k[1] * b[1] + k[2] * b[2]
            if dot != 0:
                raise DivergenceViolation(k, dot)

    def initial(self, k: Mode) -> tuple[Rational, Rational, Rational]:
        if k == ZERO_MODE:
            return self.zero_mode
        return self.data.get(k, (Fraction(0), Fraction(0), Fraction(0)))

    def payload(self) -> dict:
        """Canonical JSON-able form, the basis of the problem digest."""
        return {
            "kind": EULER,
            "zero_mode": [[b.numerator, b.denominator] for b in self.zero_mode],
            "epsilon": [self.epsilon.numerator, self.epsilon.denominator],
            "max_level": self.max_level,
            "modes": [
                {"k": list(k), "B": [[b.numerator, b.denominator] for b in bs]}
                for k, bs in sorted(self.data.items())
            ],
        }

    def digest(self) -> str:
        blob = json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _weighted_component_sum(
    weights: Mode, velocity: tuple[ExpPoly, ExpPoly, ExpPoly]
) -> ExpPoly:
    """sum_j weights_j * velocity_j, skipping zero weights."""
    acc = ExpPoly.zero()
    for w, f in zip(weights, velocity):
        if w and not f.is_zero():
            acc = acc + f * Fraction(w)
    return acc


def pressure_coefficient(k: Mode, table: CoefficientTable) -> ExpPoly:
    """Pressure coefficient T_4k from the already-computed lower levels.

    The double interaction sum factors per split:
        sum_{i,j} k'_i k''_j T_jk' T_ik'' = (sum_j k''_j T_jk')(sum_i k'_i T_ik'').
    """
    if not is_positive(k):
        raise ValueError(f"pressure coefficient needs k > (0,0,0), got {k}")
    num = ExpPoly.zero()
    for part, rest in splits(k):
        v1 = table.velocity(part)
        v2 = table.velocity(rest)
        d1 = _weighted_component_sum(rest, v1)
        if d1.is_zero():
            continue
        d2 = _weighted_component_sum(part, v2)
        if d2.is_zero():
            continue
        num = num + d1 * d2
    denom = Fraction(k[0] ** 2 + k[1] ** 2 + k[2] ** 2)
    return num * (Fraction(-1) / denom)


def advection_forcing(i: int, k: Mode, table: CoefficientTable) -> ExpPoly:
    """Inhomogeneity Q_ik of the mode ODE (axis i in 1..3).

    Requires T_4k for this k to be present in the table already.
    """
    if not is_positive(k):
        raise ValueError(f"forcing needs k > (0,0,0), got {k}")
    if i not in (1, 2, 3):
        raise ValueError(f"axis must be 1..3, got {i}")
    acc = ExpPoly.zero()
    for part, rest in splits(k):
        v1 = table.velocity(part)
        d1 = _weighted_component_sum(rest, v1)
        if d1.is_zero():
            continue
        t_rest = table.velocity(rest)[i - 1]
        if t_rest.is_zero():
            continue
        acc = acc + d1 * t_rest
    if k[i - 1]:
        acc = acc + table.pressure(k) * Fraction(k[i - 1])
    return acc


def integrating_exponent(
    k: Mode, zero_mode: tuple[Rational, Rational, Rational]
) -> ExpPoly:
    """P_k(t) = -(sum_j B_j0 k_j) t; exp(+-P_k) is the integrating factor."""
    slope = -sum(
        (as_fraction(b) * kj for b, kj in zip(zero_mode, k)), Fraction(0)
    )
    if slope == 0:
        return ExpPoly.zero()
    return ExpPoly.term(slope, power=1)


def _drift_slope(k: Mode, zero_mode: tuple[Rational, Rational, Rational]) -> Fraction:
    return -sum((as_fraction(b) * kj for b, kj in zip(zero_mode, k)), Fraction(0))


def velocity_coefficient(
    i: int, k: Mode, table: CoefficientTable, initial: Rational
) -> ExpPoly:
    """Closed-form T_ik = exp(-P_k) (int_0^t Q_ik exp(P_k) ds + B_ik).

    A forcing term whose rate cancels -P_k's slope integrates to a pure
    power of t (resonance); the exact rate arithmetic makes that case an
    ordinary merge rather than a division by zero.
    """
    q = advection_forcing(i, k, table)
    p = _drift_slope(k, table.zero_mode)
    b = as_fraction(initial)
    if q.is_zero():
        if b == 0:
            return ExpPoly.zero()
        return ExpPoly.exponential(-p, b)
    grow = ExpPoly.exponential(p)
    decay = ExpPoly.exponential(-p)
    return decay * ((q * grow).integrate() + ExpPoly.constant(b))


def solve(problem: EulerProblem) -> CoefficientTable:
    """Fill the coefficient table for all |k| <= max_level, by level.

    Raises DivergenceViolation if a listed mode has k.B != 0.
    """
    problem.validate()
    one = ExpPoly.constant(1)
    entries = {
        ZERO_MODE: (
            ExpPoly.constant(problem.zero_mode[0]),
            ExpPoly.constant(problem.zero_mode[1]),
            ExpPoly.constant(problem.zero_mode[2]),
            one,
        )
    }
    table = CoefficientTable(
        kind=EULER,
        entries=entries,
        max_level=problem.max_level,
        zero_mode=problem.zero_mode,
        spec_hash=problem.digest(),
        epsilon=problem.epsilon,
    )
    zero = ExpPoly.zero()
    for l in range(1, problem.max_level + 1):
        for k in level_modes(l):
            t4 = pressure_coefficient(k, table)
            entries[k] = (zero, zero, zero, t4)
            b = problem.initial(k)
            velocity = tuple(
                velocity_coefficient(i, k, table, b[i - 1]) for i in (1, 2, 3)
            )
            entries[k] = (*velocity, t4)
    return table


def mode_divergence(k: Mode, table: CoefficientTable) -> ExpPoly:
    """k1*T_1k + k2*T_2k + k3*T_3k; identically zero for solver output."""
    return _weighted_component_sum(k, table.velocity(k))


def mode_ode_residual(i: int, k: Mode, table: CoefficientTable) -> ExpPoly:
    """T_ik' - (sum_j k_j B_j0) T_ik - Q_ik; identically zero for solver output."""
    t_ik = table.velocity(k)[i - 1]
    drift = -_drift_slope(k, table.zero_mode)
    return t_ik.derivative() - t_ik * drift - advection_forcing(i, k, table)
