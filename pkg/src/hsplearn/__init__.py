"""Simulator and inference toolkit for hidden subgroups of finite abelian groups.

The package covers the classical simulation side of the problem: explicit
groups and characters, coset-state ensembles and Fourier sampling, the
standard kernel-intersection solver, overlap-based subgroup inference from
labeled data, leakage diagnostics for partial data, and the PAC-learning
view with its dimension audit.
"""

from .groups import (
    CosetTable,
    EnumerationBoundError,
    Group,
    GroupElement,
    GroupMismatchError,
    Subgroup,
    annihilator,
    character_kernel,
    coset_table,
    decompose_prime_power,
    element_order,
    enumerate_subgroups,
    full_subgroup,
    iter_abelian_factorizations,
    subgroup_from_generators,
    subgroup_intersection,
    trivial_subgroup,
)
from .characters import Character, char_sum, chi_eval
from .states import (
    MixtureComponent,
    PartialCosetMixture,
    StateVector,
    SwapEstimate,
    TrainingSet,
    TrainingState,
    coset_state,
    fidelity_mixture,
    fourier_sampling_distribution,
    partial_coset_mixture,
    qft_apply,
    sample_measurement,
    swap_test_estimate,
    training_set,
    training_set_with_replacement,
    training_state,
    uniform_superposition,
)
from .solver import (
    FourierSampler,
    SolverRun,
    fourier_sample_label,
    kernel_intersection_solve,
    recommended_samples,
    solve_hsp,
)
from .dao import (
    BiasTerms,
    DaoReport,
    InferenceResult,
    SweepPoint,
    annihilator_state,
    bias_terms,
    complete_data_overlap,
    dao_cost,
    dao_vector,
    default_penalty,
    infer_subgroup,
    lambda_window,
    sweep_lambda,
)
from .pac import (
    AuditRow,
    BinaryExample,
    SampleComplexity,
    VcReport,
    binary_examples,
    conjecture_audit,
    independent_elements,
    max_shattered_size,
    sample_complexity,
    shattering_check,
    vc_dimension,
    vc_report,
)
from .leakage import (
    FalseSignalRow,
    LeakageReport,
    annihilator_mass,
    false_signal_mass,
    leakage_report,
    snr,
)
from .experiments import (
    PRESET_NAMES,
    ConfigError,
    ExperimentConfig,
    ExperimentResult,
    NuisanceConfig,
    NuisanceReport,
    default_nuisance_config,
    load_config,
    nuisance_report_json,
    preset_description,
    run_experiment,
    run_nuisance_demo,
    run_preset,
    sample_training_set,
)
from .serialize import (
    SCHEMA_VERSION,
    dao_report_json,
    element_json,
    group_json,
    inference_json,
    leakage_report_json,
    solver_run_json,
    subgroup_json,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    # groups
    "Group",
    "GroupElement",
    "Subgroup",
    "CosetTable",
    "GroupMismatchError",
    "EnumerationBoundError",
    "element_order",
    "subgroup_from_generators",
    "trivial_subgroup",
    "full_subgroup",
    "enumerate_subgroups",
    "coset_table",
    "subgroup_intersection",
    "annihilator",
    "character_kernel",
    "decompose_prime_power",
    "iter_abelian_factorizations",
    # characters
    "Character",
    "chi_eval",
    "char_sum",
    # states
    "StateVector",
    "TrainingSet",
    "TrainingState",
    "MixtureComponent",
    "PartialCosetMixture",
    "SwapEstimate",
    "qft_apply",
    "uniform_superposition",
    "coset_state",
    "training_set",
    "training_set_with_replacement",
    "training_state",
    "partial_coset_mixture",
    "fourier_sampling_distribution",
    "sample_measurement",
    "fidelity_mixture",
    "swap_test_estimate",
    # solver
    "FourierSampler",
    "SolverRun",
    "fourier_sample_label",
    "kernel_intersection_solve",
    "solve_hsp",
    "recommended_samples",
    # dao
    "DaoReport",
    "BiasTerms",
    "InferenceResult",
    "SweepPoint",
    "annihilator_state",
    "dao_vector",
    "dao_cost",
    "complete_data_overlap",
    "bias_terms",
    "infer_subgroup",
    "sweep_lambda",
    "lambda_window",
    "default_penalty",
    # pac
    "BinaryExample",
    "VcReport",
    "AuditRow",
    "SampleComplexity",
    "binary_examples",
    "vc_dimension",
    "independent_elements",
    "shattering_check",
    "max_shattered_size",
    "vc_report",
    "conjecture_audit",
    "sample_complexity",
    # leakage
    "FalseSignalRow",
    "LeakageReport",
    "annihilator_mass",
    "snr",
    "false_signal_mass",
    "leakage_report",
    # experiments
    "ConfigError",
    "ExperimentConfig",
    "ExperimentResult",
    "NuisanceConfig",
    "NuisanceReport",
    "load_config",
    "sample_training_set",
    "run_experiment",
    "run_nuisance_demo",
    "run_preset",
    "PRESET_NAMES",
    "default_nuisance_config",
    "nuisance_report_json",
    "preset_description",

    "SCHEMA_VERSION",
    "group_json",
    "element_json",
    "subgroup_json",
    "dao_report_json",
    "inference_json",
    "solver_run_json",
    "leakage_report_json",
]
