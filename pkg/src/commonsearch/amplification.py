"""Diffusion operators and the search loops built on them."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import analytics
from . import statevector as sv
from .errors import CapacityError, InvariantViolation, NoCommonEntriesError, WiringError
from .oracle import InvocationCounter, ProblemInstance, apply_u_hbar
from .reports import RunReport
from .statevector import StateVector

NORM_DRIFT_LIMIT = 1e-8


class AmplifierKind(str, enum.Enum):
    PARTIAL_DIFFUSION = "partial_diffusion"
    GROVER_INVERSION = "grover_inversion"

    @classmethod
    def parse(cls, text: str) -> "AmplifierKind":
        aliases = {"partial": cls.PARTIAL_DIFFUSION, "grover": cls.GROVER_INVERSION}
        if text in aliases:
            return aliases[text]
        return cls(text)


def _check_register(state: StateVector, n: int, kappa: int) -> None:
    if n < 1 or kappa < 0 or state.num_qubits != n + kappa + 1:
        raise WiringError(
            f"state has {state.num_qubits} qubits, expected n + kappa + 1 = {n + kappa + 1}"
        )


def apply_partial_diffusion(state: StateVector, n: int, kappa: int) -> StateVector:
    """Inversion about the mean on the data register, restricted to final ancilla 0.

    Acts on the data qubits and the final ancilla as
    ``(H^n x I)(2|0><0| - I)(H^n x I)``; the database mark qubits are spectators.
    The net effect is a reflection about the mean on the final-ancilla-0
    subspace and a sign flip on the final-ancilla-1 subspace.
    """
    _check_register(state, n, kappa)
    data = range(n)
    shift = kappa + 1
    state = sv.apply_hadamard_layer(state, data)
    # keep |0...0>|anc>|0>, negate everything else
    state = sv.apply_phase_flip(state, lambda idx: ((idx >> shift) != 0) | ((idx & 1) != 0))
    return sv.apply_hadamard_layer(state, data)


def apply_grover_diffusion(state: StateVector, n: int) -> StateVector:
    """Standard inversion about the mean on the first ``n`` qubits."""
    if not 1 <= n <= state.num_qubits:
        raise WiringError(f"n={n} invalid for {state.num_qubits}-qubit state")
    shift = state.num_qubits - n
    state = sv.apply_hadamard_layer(state, range(n))
    state = sv.apply_phase_flip(state, lambda idx: (idx >> shift) != 0)
    return sv.apply_hadamard_layer(state, range(n))


def prepare_uniform(instance: ProblemInstance) -> StateVector:
    if instance.num_qubits > sv.MAX_QUBITS:
        raise CapacityError(
            f"instance needs {instance.num_qubits} qubits, limit is {sv.MAX_QUBITS}"
        )
    return sv.apply_hadamard_layer(sv.make_zero_state(instance.num_qubits), range(instance.n))


def common_branch_predicate(instance: ProblemInstance):
    """Predicate selecting basis states whose data index is a common entry."""
    table = instance.common_mask()
    shift = instance.kappa + 1
    return lambda idx: table[idx >> shift]


@dataclass(frozen=True)
class IterationSnapshot:
    q: int
    after_oracle: StateVector
    after_diffusion: StateVector


def search_trajectory(
    instance: ProblemInstance,
    iterations: int,
    counter: InvocationCounter | None = None,
    amplifier: AmplifierKind = AmplifierKind.PARTIAL_DIFFUSION,
) -> Iterator[IterationSnapshot]:
    """Yield the register after the oracle and after diffusion for each iteration."""
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    n, kappa = instance.n, instance.kappa
    state = prepare_uniform(instance)
    if amplifier is AmplifierKind.PARTIAL_DIFFUSION:
        for q in range(1, iterations + 1):
            marked = apply_u_hbar(state, instance, counter)
            state = apply_partial_diffusion(marked, n, kappa)
            yield IterationSnapshot(q, marked, state)
    else:
        is_common = common_branch_predicate(instance)
        for q in range(1, iterations + 1):
            marked = sv.apply_phase_flip(state, is_common)
            state = apply_grover_diffusion(marked, n)
            yield IterationSnapshot(q, marked, state)


def final_state(instance: ProblemInstance, iterations: int,
                counter: InvocationCounter | None = None,
                amplifier: AmplifierKind = AmplifierKind.PARTIAL_DIFFUSION) -> StateVector:
    state = None
    for snap in search_trajectory(instance, iterations, counter, amplifier):
        state = snap.after_diffusion
    return prepare_uniform(instance) if state is None else state


def _schedule_or_none(instance: ProblemInstance, m_c: int):
    try:
        return analytics.make_schedule(instance.N, m_c, instance.kappa)
    except NoCommonEntriesError:
        return None


def _run(instance: ProblemInstance, iterations: int, shots: int, seed: int,
         amplifier: AmplifierKind) -> RunReport:
    start = time.perf_counter()
    counter = InvocationCounter()
    iterations_done = 0
    state = prepare_uniform(instance)
    max_drift = 0.0
    for snap in search_trajectory(instance, iterations, counter, amplifier):
        state = snap.after_diffusion
        iterations_done += 1
        max_drift = max(max_drift, abs(state.norm() - 1.0))
    if max_drift > NORM_DRIFT_LIMIT:
        raise InvariantViolation(f"norm drifted by {max_drift:.3e} over {iterations} iterations")
    common = instance.common_mask()
    m_c = int(common.sum())
    success = sv.probability_of(state, common_branch_predicate(instance))
    indices = sv.sample_indices(state, shots, seed)
    data = indices >> (instance.kappa + 1)
    values, counts = np.unique(data, return_counts=True)
    frequencies = {int(v): int(c) for v, c in zip(values, counts)}
    if sum(frequencies.values()) != shots:
        raise InvariantViolation("outcome frequencies do not sum to shots")
    if amplifier is AmplifierKind.PARTIAL_DIFFUSION:
        calls = counter.as_dict()
    else:
        calls = {"phase_oracle": iterations_done}
    schedule = _schedule_or_none(instance, m_c)
    predicted = None if m_c == 0 else (
        analytics.success_probability(instance.N, m_c, iterations)
        if amplifier is AmplifierKind.PARTIAL_DIFFUSION
        else analytics.grover_success_probability(instance.N, m_c, iterations)
    )
    return RunReport(
        n=instance.n,
        kappa=instance.kappa,
        labels=instance.labels,
        amplifier=amplifier.value,
        iterations=iterations,
        shots=shots,
        seed=seed,
        common_entries=sorted(int(i) for i in np.flatnonzero(common)),
        schedule=schedule,
        predicted_success=predicted,
        exact_success=min(max(success, 0.0), 1.0),
        frequencies=frequencies,
        common_hits=int(sum(c for v, c in frequencies.items() if common[v])),
        oracle_calls=calls,
        norm_drift=max_drift,
        duration_s=time.perf_counter() - start,
    )


def run_common_entry_search(instance: ProblemInstance, iterations: int, shots: int,
                            seed: int) -> RunReport:
    """Uniform start, ``iterations`` rounds of (composed oracle, partial diffusion), measure."""
    return _run(instance, iterations, shots, seed, AmplifierKind.PARTIAL_DIFFUSION)


def run_grover_baseline(instance: ProblemInstance, iterations: int, shots: int,
                        seed: int) -> RunReport:
    """Same loop with a phase oracle on common entries and standard diffusion."""
    return _run(instance, iterations, shots, seed, AmplifierKind.GROVER_INVERSION)
