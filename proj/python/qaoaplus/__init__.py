"""QAOA+ for the minimum exact cover problem, backed by an exact C++ statevector."""

from ._core import (  # noqa: F401
    CompiledAnsatz,
    DomainError,
    GenerationError,
    InstanceError,
    Lambdas,
    LevelResult,
    MecInstance,
    OptimizationError,
    OracleReport,
    Params,
    PreconditionError,
    Strategy,
    TailInstance,
    TailLambdas,
    Variant,
    compile_ansatz,
    compile_tail_ansatz,
    conflict_edges,
    default_lambdas,
    default_tail_lambdas,
    emit_plot,
    evolve,
    f_p,
    generate,
    is_exact_cover,
    multistart,
    objective_value,
    parameter_fixing_schedule,
    parse_instance,
    parse_tail_instance,
    phase_coefficients,
    run_solve,
    serialize_instance,
    serialize_tail_instance,
    solve,
    success_probability,
    tail_objective_value,
    verify_lambda_lemma,
)

__version__ = "0.1.0"
