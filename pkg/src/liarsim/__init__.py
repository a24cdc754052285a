"""Quantum state-vector models of liar-type self-referential sentence systems.

Compiles sentence systems written in a small pointer DSL into
finite-dimensional Hilbert-space models: superposition truth states,
projective measurement collapse, a discrete reading-step operator, the
Hamiltonian lifted from its principal logarithm, and the continuous
Schrödinger evolution that produces the paradox's true/false oscillation.
"""

from .compiler import compile_system, model_summary
from .dsl import (
    CONSISTENT,
    PARADOXICAL,
    ParseError,
    PointedAssignment,
    ReadingOrbit,
    SentenceSystem,
    TopologyError,
    classify,
    parse_system,
    reading_step,
)
from .linalg import (
    DEFAULT_MAX_DIM,
    TOL,
    CapacityError,
    CycleDecomposition,
    LinalgError,
    Operator,
    StateVector,
    Tolerances,
    UnsupportedOperatorError,
    basis_outer,
    cycle_eigendecompose,
    evolution_matrix,
    evolve,
    kappa_index,
    principal_log_hamiltonian,
    tensor_product,
)
from .measurement import (
    ImpossibleHypothesisError,
    MeasurementOutcome,
    ProbabilitySeries,
    ScheduleError,
    Trajectory,
    TrajectoryEvent,
    born_weights,
    evolve_state,
    hypothesize,
    probability_series,
    replay_events,
    run_schedule,
    sample_measure,
    write_series_csv,
)
from .models import (
    DOUBLE_LIAR_CYCLE,
    DOUBLE_LIAR_SUBSPACE,
    HAMILTONIAN_SCALE,
    OUTCOME_FALSE,
    OUTCOME_LATENT,
    OUTCOME_TRUE,
    STEP_TIME,
    FixtureReport,
    LiarModel,
    NormalizationError,
    SentenceBasis,
    case_b_aligned,
    case_c_singlet,
    double_liar_model,
    lift_subspace_operator,
    pair_model,
    pair_projectors,
    single_liar_state,
    subspace_block,
    truth_projectors,
    verify_reference_matrices,
)

__version__ = "0.1.0"
