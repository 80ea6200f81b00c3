"""Four-qubit Bell-type inequality toolkit.

Quantum correlator values, exhaustive LHV bounds, four-tangle
entanglement measures, seesaw measurement-setting optimization, and
Born-rule shot sampling, with a CLI front end (``bell4q``).
"""

from .accel import backend_name
from .bell import (
    BellExpression,
    DeterministicStrategy,
    MeasurementSettings,
    StabilizerCheck,
    bell_operator_matrix,
    generic_family_value,
    lhv_bound,
    lhv_bound_with_witness,
    quantum_value,
    reference_expression,
    reference_settings,
    spectral_cap,
    verify_stabilizers,
)
from .quantum import (
    BlochVector,
    ConsistencyError,
    NormalizationError,
    StateVector,
    apply_pauli_string,
    expectation,
    observable_from_bloch,
)
from .sampling import (
    Estimate,
    ShotRecord,
    estimate_bell,
    estimate_from_record,
    outcome_probabilities,
    sample_bell,
    sample_term,
)
from .seesaw import SeesawConfig, SeesawResult, effective_bloch, seesaw
from .states import NAMED_STATE_TAGS, GabcdParams, g_abcd, named_state
from .tangle import bell_value_from_tangle, four_tangle, genuine_four_tangle

__version__ = "0.1.0"

__all__ = [
    "BellExpression",
    "BlochVector",
    "ConsistencyError",
    "DeterministicStrategy",
    "Estimate",
    "GabcdParams",
    "MeasurementSettings",
    "NAMED_STATE_TAGS",
    "NormalizationError",
    "SeesawConfig",
    "SeesawResult",
    "ShotRecord",
    "StabilizerCheck",
    "StateVector",
    "apply_pauli_string",
    "backend_name",
    "bell_operator_matrix",
    "bell_value_from_tangle",
    "effective_bloch",
    "estimate_bell",
    "estimate_from_record",
    "expectation",
    "four_tangle",
    "g_abcd",
    "generic_family_value",
    "genuine_four_tangle",
    "lhv_bound",
    "lhv_bound_with_witness",
    "named_state",
    "observable_from_bloch",
    "outcome_probabilities",
    "quantum_value",
    "reference_expression",
    "reference_settings",
    "sample_bell",
    "sample_term",
    "seesaw",
    "spectral_cap",
    "verify_stabilizers",
    "__version__",
]
