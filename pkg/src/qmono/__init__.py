"""qmono: monogamy scores of quantum-correlation measures on random multiqubit states."""

__version__ = "0.1.0"

from .linalg import (
    EigenSystem,
    binary_entropy,
    hermitian_eigensystem,
    psd_sqrt,
    trace_norm_hermitian,
    von_neumann_entropy,
)
from .states import (
    DensityMatrix,
    PureState,
    apply_local_unitary,
    dump_states,
    load_states,
    named_state,
    partial_trace,
    partial_transpose,
    permute_qubits,
    sample_haar_pure,
    sample_w_class,
)
from .measures import (
    Measure,
    MeasurementSetting,
    concurrence_2q,
    concurrence_2q_from_r,
    discord_2q,
    eof_2q,
    log_negativity,
    negativity,
    optimal_qubit_measurement,
    pure_bipartite_value,
    two_qubit_value,
    work_deficit_2q,
)
from .monogamy import ALPHA_MAX, MonogamyRecord, alpha_crossing, measure_state, score
from .ensemble import (
    EnsembleError,
    EnsembleSpec,
    EnsembleSummary,
    Moments,
    build_f_curve,
    crossing_grid,
    default_alpha_grid,
    distribution_stats,
    estimate_alpha_c,
    estimate_alpha_c_scan,
    estimate_alpha_p,
    fraction_nonmonogamous,
    histogram,
    integrate_m,
    run_ensemble,
    scores_at,
    summarize,
    summary_to_dict,
    write_scores_csv,
    write_summary_csv,
    write_summary_json,
)

__all__ = [
    "__version__",
    # linalg
    "EigenSystem", "hermitian_eigensystem", "psd_sqrt", "von_neumann_entropy",
    "binary_entropy", "trace_norm_hermitian",
    # states
    "PureState", "DensityMatrix", "sample_haar_pure", "sample_w_class",
    "named_state", "partial_trace", "partial_transpose", "apply_local_unitary",
    "permute_qubits", "dump_states", "load_states",
    # measures
    "Measure", "MeasurementSetting", "concurrence_2q", "concurrence_2q_from_r",
    "eof_2q", "negativity", "log_negativity", "optimal_qubit_measurement",
    "discord_2q", "work_deficit_2q", "pure_bipartite_value", "two_qubit_value",
    # monogamy
    "MonogamyRecord", "measure_state", "score", "alpha_crossing", "ALPHA_MAX",
    # ensembles
    "EnsembleSpec", "EnsembleSummary", "EnsembleError", "Moments",
    "default_alpha_grid", "crossing_grid", "run_ensemble", "scores_at",
    "fraction_nonmonogamous", "build_f_curve", "estimate_alpha_p",
    "estimate_alpha_c", "estimate_alpha_c_scan", "integrate_m",
    "distribution_stats", "histogram", "summarize", "summary_to_dict",
    "write_summary_json", "write_summary_csv", "write_scores_csv",
]
