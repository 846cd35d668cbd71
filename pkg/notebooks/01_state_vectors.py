"""
State vectors, gates and seeded sampling
========================================

The simulator stores ``2**q`` complex amplitudes with qubit 0 as the most
significant bit. Everything the search needs is built from four kernels:
Hadamard layers, predicate-controlled bit flips, predicate sign flips and
inverse-CDF sampling.
"""

# %%
import numpy as np

from commonsearch import statevector as sv

# %% A Bell pair from H and a controlled flip
state = sv.make_zero_state(2)
state = sv.apply_hadamard_layer(state, {0})
state = sv.apply_controlled_flip(state, lambda idx: (idx >> 1) & 1 == 1, target=1)
print("Bell amplitudes:", np.round(state.amplitudes.real, 4))

# %% Predicates are vectorised over basis indices, or given as boolean masks
print("P(qubit 0 = 1) =", sv.probability_of(state, lambda idx: (idx >> 1) == 1))
flipped = sv.apply_phase_flip(state, np.array([False, False, False, True]))
print("after sign flip on |11>:", np.round(flipped.amplitudes.real, 4))

# %% Sampling is reproducible: same state, shots and seed give the same draws
draws = sv.sample_indices(state, shots=10, seed=123)
print("draws:", draws.tolist())
assert np.array_equal(draws, sv.sample_indices(state, shots=10, seed=123))

# %% Splitting a sample into data and ancilla bits
(m,) = sv.sample_measurement(sv.make_zero_state(5), shots=1, seed=0, num_ancillas=3)
print(m)
