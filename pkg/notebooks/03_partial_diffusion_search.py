"""
Partial-diffusion search and its closed form
============================================

Runs the full loop (composed oracle, then partial diffusion) and compares
the simulated success probability at each iteration against the closed
form and the three-class amplitude recursion.
"""

# %%
import numpy as np

from commonsearch import analytics
from commonsearch import statevector as sv
from commonsearch.amplification import common_branch_predicate, search_trajectory
from commonsearch.harness import run
from commonsearch.instances import random_instance

# %% One instance: 64 entries, 3 databases, 5 common entries
rng = np.random.default_rng(1)
n, kappa, m_c = 6, 3, 5
N = 1 << n
instance = random_instance(n, kappa, m_c, rng)
schedule = analytics.make_schedule(N, m_c, kappa)
print(f"theta = {schedule.theta:.4f}, q_c = {schedule.q_c}, "
      f"predicted P_s = {schedule.predicted_success:.4f}")

# %% Iteration by iteration
recursion = analytics.amplitude_recursion(N, m_c, schedule.q_c + 3)
is_common = common_branch_predicate(instance)
print(" q   simulated    closed form  recursion")
for snap, rec in zip(search_trajectory(instance, schedule.q_c + 3), recursion):
    p = sv.probability_of(snap.after_diffusion, is_common)
    print(f"{snap.q:2d}   {p:.10f}  {analytics.success_probability(N, m_c, snap.q):.10f}"
          f"  {rec.success_probability(m_c):.10f}")

# %% A measured run at the prescribed count
report = run(instance, shots=2000, seed=5)
print("exact success :", report.exact_success)
print("observed      :", report.observed_success)
print("oracle calls  :", report.oracle_calls, "bound", round(schedule.q_t_bound, 2))

# %% The 2/3 floor over every (N, M_c) with N <= 4096
worst = min((analytics.make_schedule(1 << k, m).predicted_success, 1 << k, m)
            for k in range(1, 13) for m in range(1, (1 << k) + 1))
print("minimum scheduled success %.4f at N=%d, M_c=%d" % worst)
