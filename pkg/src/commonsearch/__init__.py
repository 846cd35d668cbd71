"""Simulation and analysis of quantum search for entries common to several databases."""

from .amplification import (AmplifierKind, apply_grover_diffusion, apply_partial_diffusion,
                            run_common_entry_search, run_grover_baseline, search_trajectory)
from .analytics import (AnalyticState, IterationSchedule, amplitude_recursion, make_schedule,
                        success_probability, total_oracle_calls)
from .classical import OccurrenceTable, classical_common_entries
from .errors import (CapacityError, CommonSearchError, DomainError, InstanceParseError,
                     InvalidStateError, NoCommonEntriesError, WiringError)
from .instances import load_instance, random_instance, save_instance
from .oracle import (BlackBox, InvocationCounter, OracleWiring, ProblemInstance,
                     apply_black_box, apply_u_hbar, apply_u_kappa, common_solution_set,
                     verify_ancilla_reset)
from .reports import RunReport, SweepReport, SweepRow
from .statevector import (MeasurementSample, StateVector, apply_controlled_flip,
                          apply_hadamard_layer, apply_phase_flip, make_zero_state,
                          probability_of, sample_measurement)

__version__ = "0.1.0"
