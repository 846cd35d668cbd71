"""
Marking common entries
======================

Each database contributes one bit-flip oracle writing into its own mark
qubit. An AND gate copies the conjunction of the marks onto the final
ancilla, and a second pass of the database oracles clears the marks again.
This walks through that sequence on two databases of four entries.
"""

# %%
from pathlib import Path

import numpy as np

from commonsearch import (InvocationCounter, OracleWiring, apply_black_box, apply_u_kappa,
                          classical_common_entries, common_solution_set, load_instance,
                          verify_ancilla_reset)
from commonsearch.amplification import prepare_uniform
from commonsearch.oracle import apply_u_hbar, marked_branches

HERE = Path(__file__).resolve().parent
instance = load_instance(HERE / "data" / "two_databases.json")
n, kappa = instance.n, instance.kappa


def show(label, state):
    nz = np.flatnonzero(np.abs(state.amplitudes) > 1e-12)
    terms = [f"{state.amplitudes[i].real:+.3f}|{i >> (kappa + 1)}>|{i & ((1 << (kappa + 1)) - 1):0{kappa + 1}b}>"
             for i in nz]
    print(f"{label:<18}", " ".join(terms))


# %% Step through the composed oracle
counter = InvocationCounter()
state = prepare_uniform(instance)
show("uniform", state)
for j, box in enumerate(instance.black_boxes):
    state = apply_black_box(state, box, OracleWiring.for_database(n, j), counter)
    show(f"after {box.label}", state)
print("mass with all marks cleared:", verify_ancilla_reset(state, n, kappa))
state = apply_u_kappa(state, kappa, counter)
show("after AND", state)
for j, box in enumerate(instance.black_boxes):
    state = apply_black_box(state, box, OracleWiring.for_database(n, j), counter)
show("after uncompute", state)
print("mass with all marks cleared:", verify_ancilla_reset(state, n, kappa))
print("calls:", counter.as_dict())

# %% Three ways to get the common set agree
three = load_instance(HERE / "data" / "three_databases.json")
print("set intersection :", sorted(common_solution_set(three)))
print("classical scan   :", classical_common_entries(three))
print("marked branches  :", sorted(marked_branches(apply_u_hbar(prepare_uniform(three), three), three.n)))
