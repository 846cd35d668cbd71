"""Dense state-vector representation and the handful of gates the search needs.

Layout convention: qubit 0 is the most significant bit of the basis index and
qubit ``num_qubits - 1`` the least significant. For a search register of
``n`` data qubits and ``kappa + 1`` ancillas, the ancillas therefore occupy the
low ``kappa + 1`` bits, and every data index ``i`` owns one contiguous block
of ``2**(kappa + 1)`` amplitudes.

All operations are pure: they return a new :class:`StateVector` and leave
their input untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from .errors import CapacityError, InvalidStateError, WiringError

MAX_QUBITS = 30
NORM_ATOL = 1e-10

#: A basis predicate is either a boolean mask over basis indices or a
#: vectorised callable mapping an index array to a boolean array.
Predicate = Union[np.ndarray, Callable[[np.ndarray], np.ndarray]]

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm vector of ``2**num_qubits`` complex128 amplitudes."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.shape[0] != 1 << self.num_qubits:
            raise WiringError(
                f"expected {1 << self.num_qubits} amplitudes for "
                f"{self.num_qubits} qubits, got shape {amps.shape}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def indices(self) -> np.ndarray:
        return np.arange(self.dim, dtype=np.int64)

    def _replace(self, amps: np.ndarray) -> "StateVector":
        return StateVector(self.num_qubits, amps)


@dataclass(frozen=True)
class MeasurementSample:
    basis_index: int
    first_n_bits: int
    ancilla_bits: int


def _check_width(num_qubits: int) -> None:
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise CapacityError(
            f"register of {num_qubits} qubits outside supported range 1..{MAX_QUBITS}"
        )


def bit_of(num_qubits: int, qubit: int) -> int:
    """Return the index bit mask that corresponds to ``qubit``."""
    if not 0 <= qubit < num_qubits:
        raise WiringError(f"qubit {qubit} out of range for {num_qubits} qubits")
    return 1 << (num_qubits - 1 - qubit)


def predicate_mask(state: StateVector, predicate: Predicate) -> np.ndarray:
    """Evaluate ``predicate`` on every basis index of ``state``."""
    if callable(predicate):
        mask = np.asarray(predicate(state.indices()), dtype=bool)
        if mask.shape == ():
            mask = np.full(state.dim, bool(mask))
    else:
        mask = np.asarray(predicate, dtype=bool)
    if mask.shape != (state.dim,):
        raise WiringError(f"predicate mask has shape {mask.shape}, expected ({state.dim},)")
    return mask


def from_amplitudes(amplitudes: Iterable[complex], atol: float = NORM_ATOL) -> StateVector:
    """Wrap explicit amplitudes, checking length is a power of two and norm is one."""
    if not isinstance(amplitudes, np.ndarray):
        amplitudes = list(amplitudes)
    amps = np.asarray(amplitudes, dtype=np.complex128)
    dim = amps.shape[0]
    num_qubits = dim.bit_length() - 1
    if dim < 2 or 1 << num_qubits != dim:
        raise WiringError(f"amplitude count {dim} is not a power of two >= 2")
    _check_width(num_qubits)
    norm = np.sqrt(np.sum(np.abs(amps) ** 2))
    if abs(norm - 1.0) > atol:
        raise InvalidStateError(f"state norm {norm!r} differs from 1")
    return StateVector(num_qubits, amps)


def make_zero_state(num_qubits: int) -> StateVector:
    _check_width(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def apply_hadamard_layer(state: StateVector, qubits: Iterable[int]) -> StateVector:
    """Apply ``H`` to each listed qubit.

    Qubits are processed in ascending order and each butterfly is a fixed
    two-term sum, so results are bitwise reproducible.
    """
    qubits = sorted(qubits)
    if len(set(qubits)) != len(qubits):
        raise WiringError(f"duplicate qubits in Hadamard layer: {qubits}")
    amps = state.amplitudes.copy()
    for q in qubits:
        bit_of(state.num_qubits, q)
        view = amps.reshape(1 << q, 2, -1)
        lo = view[:, 0, :].copy()
        hi = view[:, 1, :]
        view[:, 0, :] = (lo + hi) * _INV_SQRT2
        view[:, 1, :] = (lo - hi) * _INV_SQRT2
    return state._replace(amps)


def apply_controlled_flip(state: StateVector, predicate: Predicate, target: int) -> StateVector:
    """Flip ``target`` on every basis index where ``predicate`` holds.

    The predicate must not depend on the target bit; this is checked by
    requiring the mask to be invariant under flipping that bit.
    """
    tbit = bit_of(state.num_qubits, target)
    mask = predicate_mask(state, predicate)
    idx = state.indices()
    partner = idx ^ tbit
    if not np.array_equal(mask, mask[partner]):
        raise WiringError(f"predicate reads target qubit {target}")
    amps = state.amplitudes.copy()
    amps[mask] = state.amplitudes[partner[mask]]
    return state._replace(amps)


def apply_phase_flip(state: StateVector, predicate: Predicate) -> StateVector:
    mask = predicate_mask(state, predicate)
    amps = state.amplitudes.copy()
    amps[mask] = -amps[mask]
    return state._replace(amps)


def probability_of(state: StateVector, predicate: Predicate) -> float:
    mask = predicate_mask(state, predicate)
    return float(np.sum(state.probabilities()[mask]))


def make_rng(seed: int) -> np.random.Generator:
    """The generator behind every seeded draw: numpy's 64-bit PCG64."""
    return np.random.Generator(np.random.PCG64(seed))


def sample_indices(state: StateVector, shots: int, seed: int) -> np.ndarray:
    """Draw ``shots`` basis indices by inverse CDF over ascending index order.

    One ``Generator.random()`` double per shot is mapped to the first index
    whose cumulative probability exceeds it. Indices with zero probability
    are never returned.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    total = float(np.sum(probs))
    if not np.isfinite(total) or total <= 0.0:
        raise InvalidStateError("cannot sample from a zero-norm state")
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    u = make_rng(seed).random(shots)
    return np.searchsorted(cdf, u, side="right").astype(np.int64)


def sample_measurement(
    state: StateVector, shots: int, seed: int, num_ancillas: int = 0
) -> list[MeasurementSample]:
    """Sample full-register measurements and split each into data and ancilla bits.

    ``num_ancillas`` is the number of low-order qubits treated as ancillas
    (``kappa + 1`` for a search register).
    """
    if not 0 <= num_ancillas < state.num_qubits:
        raise WiringError(f"num_ancillas={num_ancillas} invalid for {state.num_qubits} qubits")
    low = (1 << num_ancillas) - 1
    return [
        MeasurementSample(int(i), int(i) >> num_ancillas, int(i) & low)
        for i in sample_indices(state, shots, seed)
    ]
