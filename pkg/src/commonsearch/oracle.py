"""Database black boxes and the composed common-entry oracle.

A search register for ``kappa`` databases of ``N = 2**n`` entries has
``n + kappa + 1`` qubits::

    qubits 0 .. n-1            data register |i>
    qubits n .. n+kappa-1      one mark qubit per database
    qubit  n+kappa             final mark (AND of all database marks)

Database ``j`` always writes to qubit ``n + j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import statevector as sv
from .errors import WiringError
from .statevector import StateVector


@dataclass(frozen=True)
class BlackBox:
    """Membership function of one database, held as its explicit solution set."""

    n: int
    solutions: frozenset[int]
    label: str = ""

    def __init__(self, n: int, solutions: Iterable[int], label: str = ""):
        sols = frozenset(int(s) for s in solutions)
        if n < 1:
            raise ValueError(f"input width must be >= 1, got {n}")
        bad = [s for s in sols if not 0 <= s < 1 << n]
        if bad:
            raise ValueError(f"solutions {sorted(bad)} outside [0, {1 << n}) for {label!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "solutions", sols)
        object.__setattr__(self, "label", label)

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise ValueError(f"query {x} outside [0, {self.size})")
        return int(x in self.solutions)

    def truth_table(self) -> np.ndarray:
        table = np.zeros(self.size, dtype=bool)
        if self.solutions:
            table[np.fromiter(self.solutions, dtype=np.int64)] = True
        return table


@dataclass(frozen=True)
class ProblemInstance:
    n: int
    black_boxes: tuple[BlackBox, ...]

    def __init__(self, n: int, black_boxes: Sequence[BlackBox]):
        boxes = tuple(black_boxes)
        if len(boxes) < 2:
            raise ValueError(f"need at least two databases, got {len(boxes)}")
        widths = {b.n for b in boxes}
        if widths != {n}:
            raise ValueError(f"all black boxes must have n={n}, got widths {sorted(widths)}")
        labels = [b.label for b in boxes]
        if len(set(labels)) != len(labels):
            # counters are keyed by label
            raise ValueError(f"black box labels must be unique, got {labels}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "black_boxes", boxes)

    @classmethod
    def from_solution_sets(cls, n: int, solution_sets: Sequence[Iterable[int]],
                           labels: Sequence[str] | None = None) -> "ProblemInstance":
        if labels is None:
            labels = [chr(ord("A") + j) if j < 26 else f"L{j}" for j in range(len(solution_sets))]
        return cls(n, [BlackBox(n, s, lab) for s, lab in zip(solution_sets, labels)])

    @property
    def kappa(self) -> int:
        return len(self.black_boxes)

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def num_qubits(self) -> int:
        return self.n + self.kappa + 1

    @property
    def labels(self) -> list[str]:
        return [b.label for b in self.black_boxes]

    def common_mask(self) -> np.ndarray:
        """Truth table of the AND of all membership functions."""
        mask = np.ones(self.N, dtype=bool)
        for box in self.black_boxes:
            mask &= box.truth_table()
        return mask


@dataclass(frozen=True)
class OracleWiring:
    """Controls ``control_range`` (inclusive bounds) and XOR target of one oracle."""

    control_range: tuple[int, int]
    target: int

    def __post_init__(self):
        lo, hi = self.control_range
        if lo > hi:
            raise WiringError(f"empty control range {self.control_range}")
        if lo <= self.target <= hi:
            raise WiringError(f"target {self.target} inside control range {self.control_range}")

    @classmethod
    def for_database(cls, n: int, j: int) -> "OracleWiring":
        return cls((0, n - 1), n + j)


@dataclass
class InvocationCounter:
    per_black_box_calls: Counter = field(default_factory=Counter)
    u_kappa_calls: int = 0

    def total_black_box_calls(self) -> int:
        return sum(self.per_black_box_calls.values())

    def as_dict(self) -> dict[str, int]:
        out = {k: int(v) for k, v in sorted(self.per_black_box_calls.items())}
        out["U_kappa"] = self.u_kappa_calls
        return out


def common_solution_set(instance: ProblemInstance) -> set[int]:
    return {int(i) for i in np.flatnonzero(instance.common_mask())}


def _split_register(state: StateVector, n: int) -> int:
    """Return kappa for a state holding an ``n``-qubit data register."""
    kappa = state.num_qubits - n - 1
    if n < 1 or kappa < 1:
        raise WiringError(f"{state.num_qubits}-qubit state cannot hold n={n} plus ancillas")
    return kappa


def apply_black_box(state: StateVector, box: BlackBox, wiring: OracleWiring,
                    counter: InvocationCounter | None = None) -> StateVector:
    """XOR ``f(i)`` into the wiring's target for every data index ``i``."""
    n = box.n
    kappa = _split_register(state, n)
    if wiring.control_range != (0, n - 1):
        raise WiringError(f"controls {wiring.control_range} do not match data register 0..{n - 1}")
    if not n <= wiring.target < n + kappa:
        raise WiringError(f"target {wiring.target} is not a database mark qubit ({n}..{n + kappa - 1})")
    table = box.truth_table()
    shift = kappa + 1
    out = sv.apply_controlled_flip(state, lambda idx: table[idx >> shift], wiring.target)
    if counter is not None:
        counter.per_black_box_calls[box.label] += 1
    return out


def apply_u_kappa(state: StateVector, kappa: int,
                  counter: InvocationCounter | None = None) -> StateVector:
    """Flip the final ancilla wherever all ``kappa`` database marks are 1."""
    if kappa < 1 or state.num_qubits < kappa + 2:
        raise WiringError(f"{state.num_qubits}-qubit state cannot hold kappa={kappa} marks")
    full = (1 << kappa) - 1
    out = sv.apply_controlled_flip(
        state, lambda idx: ((idx >> 1) & full) == full, state.num_qubits - 1
    )
    if counter is not None:
        counter.u_kappa_calls += 1
    return out


def apply_u_hbar(state: StateVector, instance: ProblemInstance,
                 counter: InvocationCounter | None = None,
                 order: Sequence[int] | None = None) -> StateVector:
    """Mark common entries on the final ancilla and uncompute the database marks.

    Applies every database oracle, the AND gate, then every database oracle
    again. ``order`` permutes the database oracles inside both groups; they
    commute, so it exists only to let tests confirm that.
    """
    if state.num_qubits != instance.num_qubits:
        raise WiringError(
            f"state has {state.num_qubits} qubits, instance needs {instance.num_qubits}"
        )
    order = range(instance.kappa) if order is None else order
    if sorted(order) != list(range(instance.kappa)):
        raise WiringError(f"order {list(order)} is not a permutation of 0..{instance.kappa - 1}")
    wirings = [OracleWiring.for_database(instance.n, j) for j in range(instance.kappa)]
    for j in order:
        state = apply_black_box(state, instance.black_boxes[j], wirings[j], counter)
    state = apply_u_kappa(state, instance.kappa, counter)
    for j in order:
        state = apply_black_box(state, instance.black_boxes[j], wirings[j], counter)
    return state


def middle_ancillas_clear(kappa: int):
    """Predicate: all database mark qubits are 0."""
    full = (1 << kappa) - 1
    return lambda idx: ((idx >> 1) & full) == 0


def verify_ancilla_reset(state: StateVector, n: int, kappa: int) -> float:
    """Probability mass on basis states whose database mark qubits are all 0."""
    if state.num_qubits != n + kappa + 1:
        raise WiringError(f"state has {state.num_qubits} qubits, expected {n + kappa + 1}")
    return sv.probability_of(state, middle_ancillas_clear(kappa))


def marked_branches(state: StateVector, n: int, threshold: float = 1e-12) -> set[int]:
    """Data indices carrying non-negligible weight with the final ancilla set."""
    probs = state.probabilities().reshape(1 << n, -1)
    weight = probs[:, 1::2].sum(axis=1)
    return {int(i) for i in np.flatnonzero(weight > threshold)}
