"""Batch entry points shared by the command line and the notebooks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

import numpy as np

from . import analytics
from . import statevector as sv
from .amplification import (AmplifierKind, common_branch_predicate, final_state,
                            run_common_entry_search, run_grover_baseline)
from .errors import CapacityError, DomainError
from .instances import random_instance
from .oracle import ProblemInstance
from .reports import RunReport, SweepReport, SweepRow


def run(instance: ProblemInstance, shots: int = 1024, seed: int = 0,
        amplifier: AmplifierKind | str = AmplifierKind.PARTIAL_DIFFUSION,
        iterations: int | None = None) -> RunReport:
    """Run one search, taking the iteration count from the schedule unless overridden.

    Raises :class:`NoCommonEntriesError` when the instance has no common
    entry and ``iterations`` is not given.
    """
    if isinstance(amplifier, str):
        amplifier = AmplifierKind.parse(amplifier)
    if instance.num_qubits > sv.MAX_QUBITS:
        raise CapacityError(
            f"instance needs {instance.num_qubits} qubits, limit is {sv.MAX_QUBITS}"
        )
    m_c = int(instance.common_mask().sum())
    if iterations is None:
        if amplifier is AmplifierKind.PARTIAL_DIFFUSION:
            iterations = analytics.make_schedule(instance.N, m_c, instance.kappa).q_c
        else:
            iterations = analytics.grover_iterations(instance.N, m_c)
    if amplifier is AmplifierKind.PARTIAL_DIFFUSION:
        return run_common_entry_search(instance, iterations, shots, seed)
    return run_grover_baseline(instance, iterations, shots, seed)


def analyze(N: int, M_c: int, kappa: int | None = None) -> dict:
    s = analytics.make_schedule(N, M_c, kappa)
    out = {
        "n": s.n, "N": s.N, "M_c": s.M_c, "theta": s.theta, "q_c": s.q_c,
        "predicted_success": s.predicted_success,
        "grover_iterations": analytics.grover_iterations(N, M_c),
        "grover_success": analytics.grover_success_probability(
            N, M_c, analytics.grover_iterations(N, M_c)),
    }
    if kappa is not None:
        out["kappa"] = kappa
        out["q_t"] = s.predicted_oracle_calls
        out["q_t_bound"] = s.q_t_bound
    return out


def _sweep_row(n: int, kappa: int, m_c: int, seed: int, grover: bool) -> SweepRow:
    N = 1 << n
    instance = random_instance(n, kappa, m_c, sv.make_rng(seed))
    schedule = analytics.make_schedule(N, m_c, kappa)
    state = final_state(instance, schedule.q_c)
    row = SweepRow(
        n=n, N=N, M_c=m_c, q=schedule.q_c,
        analytic_success=schedule.predicted_success,
        simulated_success=sv.probability_of(state, common_branch_predicate(instance)),
    )
    if grover:
        g_iter = analytics.grover_iterations(N, m_c)
        g_state = final_state(instance, g_iter, amplifier=AmplifierKind.GROVER_INVERSION)
        row.grover_iterations = g_iter
        row.grover_success = sv.probability_of(g_state, common_branch_predicate(instance))
    return row


def sweep(n_values: Iterable[int], m_c_values: Sequence[int] | None = None, kappa: int = 2,
          grover: bool = False, seed: int = 0, workers: int = 1) -> SweepReport:
    """Simulate the scheduled search for every ``(n, M_c)`` configuration.

    ``m_c_values=None`` means every ``M_c`` in ``1..2**n``; values above
    ``2**n`` are skipped for that ``n``. Each configuration gets a random
    instance drawn from its own seed, so rows do not depend on ``workers``.
    """
    configs = []
    for n in n_values:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        if n + kappa + 1 > sv.MAX_QUBITS:
            raise CapacityError(f"n={n}, kappa={kappa} exceeds {sv.MAX_QUBITS} qubits")
        N = 1 << n
        ms = range(1, N + 1) if m_c_values is None else m_c_values
        for m in ms:
            if m < 1:
                raise DomainError(f"M_c must be >= 1 in a sweep, got {m}")
            if m <= N:
                configs.append((n, m))
    seeds = np.random.SeedSequence(seed).generate_state(len(configs), dtype=np.uint64) \
        if configs else []
    args = [(n, kappa, m, int(s), grover) for (n, m), s in zip(configs, seeds)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(lambda a: _sweep_row(*a), args))
    else:
        rows = [_sweep_row(*a) for a in args]
    return SweepReport(rows)
