"""Closed-form predictions for partial-diffusion search with ``M`` of ``N`` marked.

The rotation angle is fixed by ``cos(theta) = 1 - M/N`` with
``0 < theta <= pi/2``. After ``q`` iterations the probability of measuring a
marked data index is::

    P(q) = (1 - cos theta) * (sin^2((q+1) theta) + sin^2(q theta)) / sin^2(theta)

and the prescribed iteration count is ``floor(pi / (2 theta))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoCommonEntriesError

_OVERSHOOT = 1e-12


@dataclass(frozen=True)
class IterationSchedule:
    n: int
    N: int
    M_c: int
    theta: float
    q_c: int
    predicted_success: float
    q_t_bound: float | None = None
    kappa: int | None = None

    @property
    def predicted_oracle_calls(self) -> int | None:
        if self.kappa is None:
            return None
        return total_oracle_calls(self.kappa, self.q_c)


@dataclass(frozen=True)
class AnalyticState:
    """Per-amplitude values of the three amplitude classes after iteration ``q``.

    ``a_q``: unmarked entries, final ancilla 0. ``b_q``: marked entries,
    final ancilla 0. ``c_q``: marked entries, final ancilla 1.
    """

    q: int
    a_q: float
    b_q: float
    c_q: float
    alpha_mean: float

    def norm_squared(self, N: int, M_c: int) -> float:
        return (N - M_c) * self.a_q ** 2 + M_c * (self.b_q ** 2 + self.c_q ** 2)

    def success_probability(self, M_c: int) -> float:
        return M_c * (self.b_q ** 2 + self.c_q ** 2)


def _check_domain(N: int, M_c: int) -> None:
    if N < 1 or N & (N - 1):
        raise DomainError(f"N={N} is not a power of two")
    if M_c == 0:
        raise NoCommonEntriesError("no common entries: rotation angle is zero")
    if not 1 <= M_c <= N:
        raise DomainError(f"M_c={M_c} outside 1..{N}")


def rotation_angle(N: int, M_c: int) -> float:
    _check_domain(N, M_c)
    # 1 - M_c/N is exact in binary floating point for power-of-two N
    return math.acos(1.0 - M_c / N)


def prescribed_iterations(theta: float) -> int:
    ratio = math.pi / (2.0 * theta)
    nearest = round(ratio)
    # theta = pi/2 must give exactly one iteration despite rounding in acos
    if abs(ratio - nearest) < 1e-9:
        return int(nearest)
    return math.floor(ratio)


def success_probability(N: int, M_c: int, q: int) -> float:
    if q < 0:
        raise DomainError(f"iteration count must be >= 0, got {q}")
    theta = rotation_angle(N, M_c)
    s2 = math.sin(theta) ** 2
    p = (M_c / N) * (math.sin((q + 1) * theta) ** 2 + math.sin(q * theta) ** 2) / s2
    if -_OVERSHOOT <= p < 0.0:
        return 0.0
    if 1.0 < p <= 1.0 + _OVERSHOOT:
        return 1.0
    return p


def oracle_call_bound(kappa: int, N: int, M_c: int) -> float:
    """Upper bound ``kappa * pi / sqrt(2) * sqrt(N / M_c)`` on total oracle calls."""
    _check_domain(N, M_c)
    return kappa * math.pi / math.sqrt(2.0) * math.sqrt(N / M_c)


def make_schedule(N: int, M_c: int, kappa: int | None = None) -> IterationSchedule:
    theta = rotation_angle(N, M_c)
    q_c = prescribed_iterations(theta)
    return IterationSchedule(
        n=N.bit_length() - 1,
        N=N,
        M_c=M_c,
        theta=theta,
        q_c=q_c,
        predicted_success=success_probability(N, M_c, q_c),
        q_t_bound=None if kappa is None else oracle_call_bound(kappa, N, M_c),
        kappa=kappa,
    )


def amplitude_recursion(N: int, M_c: int, iterations: int) -> list[AnalyticState]:
    """Class amplitudes for ``q = 1 .. iterations``.

    Seeded from the uniform start ``a = b = 1/sqrt(N)``, ``c = 0``: the
    oracle swaps the two marked classes, then the diffusion reflects the
    ancilla-0 subspace about its mean and negates the ancilla-1 subspace.
    """
    _check_domain(N, M_c)
    if iterations < 0:
        raise DomainError(f"iterations must be >= 0, got {iterations}")
    frac = M_c / N
    a = b = 1.0 / math.sqrt(N)
    c = 0.0
    out = []
    for q in range(1, iterations + 1):
        alpha = (1.0 - frac) * a + frac * c
        a, b, c = 2.0 * alpha - a, 2.0 * alpha - c, -b
        out.append(AnalyticState(q, a, b, c, alpha))
    return out


def total_oracle_calls(kappa: int, q_c: int) -> int:
    if kappa < 0 or q_c < 0:
        raise DomainError(f"negative kappa={kappa} or q_c={q_c}")
    return 2 * kappa * q_c


def grover_iterations(N: int, M_c: int) -> int:
    """Standard Grover count ``floor(pi/4 * sqrt(N / M_c))``."""
    _check_domain(N, M_c)
    return math.floor(math.pi / 4.0 * math.sqrt(N / M_c))


def grover_success_probability(N: int, M_c: int, q: int) -> float:
    """``sin^2((2q+1) phi)`` with ``sin(phi) = sqrt(M_c/N)``."""
    _check_domain(N, M_c)
    phi = math.asin(math.sqrt(M_c / N))
    return math.sin((2 * q + 1) * phi) ** 2
