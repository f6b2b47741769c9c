"""Experiment orchestration: config parsing, pipelines, presets, output files.

A JSON config fully determines an experiment; runs with the same config are
byte-identical because all randomness flows from the seed through spawned
generator streams and no timestamps are written.  Output files land in the
directory given explicitly, or in the config, or in $HSPLEARN_OUTPUT_DIR.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .dao import (
    InferenceResult,
    annihilator_state,
    infer_subgroup,
    lambda_window,
    sweep_lambda,
)
from .groups import (
    Group,
    Subgroup,
    coset_table,
    subgroup_from_generators,
    trivial_subgroup,
)
from .leakage import LeakageReport, annihilator_mass, leakage_report, snr
from .serialize import (
    SCHEMA_VERSION,
    group_json,
    inference_json,
    leakage_report_json,
    solver_run_json,
    subgroup_json,
)
from .solver import FourierSampler, SolverRun, kernel_intersection_solve
from .states import (
    PartialCosetMixture,
    TrainingSet,
    fourier_sampling_distribution,
    partial_coset_mixture,
    sample_measurement,
    swap_test_estimate,
    training_set,
    training_set_with_replacement,
)

__all__ = [
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
    "preset_description",
]


class ConfigError(ValueError):
    """Raised when an experiment configuration is malformed."""


_SAMPLING_MODES = ("without_replacement", "with_replacement")
_SOLVER_METHODS = ("direct", "simulate")
_SOLVER_SOURCES = ("ensemble", "training")


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment parameters; see ``load_config`` for the JSON shape."""

    factors: Tuple[int, ...]
    hidden_generators: Tuple[Tuple[int, ...], ...]
    n_samples: int
    seed: int
    sampling: str = "without_replacement"
    distribution: Union[str, Tuple[float, ...]] = "uniform"
    lam: Optional[float] = None
    lambda_grid: Optional[Tuple[float, ...]] = None
    shots: int = 0
    solver_enabled: bool = True
    solver_c: int = 8
    solver_max_steps: int = 256
    solver_method: str = "direct"
    solver_source: str = "ensemble"
    output_dir: Optional[str] = None

    def group(self) -> Group:
        return Group(self.factors)

    def hidden(self) -> Subgroup:
        group = self.group()
        if not self.hidden_generators:
            return trivial_subgroup(group)
        return subgroup_from_generators(group, [list(g) for g in self.hidden_generators])

    def echo(self) -> Dict[str, Any]:
        """Plain-dict form, suitable for embedding in summaries."""
        return {
            "factors": list(self.factors),
            "hidden_generators": [list(g) for g in self.hidden_generators],
            "n_samples": self.n_samples,
            "seed": self.seed,
            "sampling": self.sampling,
            "distribution": self.distribution
            if isinstance(self.distribution, str)
            else list(self.distribution),
            "lam": self.lam,
            "lambda_grid": None if self.lambda_grid is None else list(self.lambda_grid),
            "shots": self.shots,
            "solver": {
                "enabled": self.solver_enabled,
                "c": self.solver_c,
                "max_steps": self.solver_max_steps,
                "method": self.solver_method,
                "source": self.solver_source,
            },
            "output_dir": self.output_dir,
        }


def _require(data: Dict[str, Any], key: str) -> Any:
    if key not in data:
        raise ConfigError(f"missing required config field {key!r}")
    return data[key]


def _int_field(value: Any, key: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"config field {key!r} must be an integer")
    if value < minimum:
        raise ConfigError(f"config field {key!r} must be at least {minimum}")
    return value


def load_config(data: Union[Dict[str, Any], str, Path]) -> ExperimentConfig:
    """Parse and validate an experiment config from a dict or a JSON file path.

    Unknown fields are rejected so typos fail loudly; error messages name
    the offending field.
    """
    if isinstance(data, (str, Path)):
        path = Path(data)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")

    known = {
        "factors",
        "hidden_generators",
        "n_samples",
        "seed",
        "sampling",
        "distribution",
        "lam",
        "lambda_grid",
        "shots",
        "solver",
        "output_dir",
    }
    for key in data:
        if key not in known:
            raise ConfigError(f"unknown config field {key!r}")

    raw_factors = _require(data, "factors")
    if not isinstance(raw_factors, list) or not raw_factors:
        raise ConfigError("config field 'factors' must be a nonempty list of integers")
    try:
        group = Group(raw_factors)
    except ValueError as exc:
        raise ConfigError(f"config field 'factors' is invalid: {exc}") from exc

    raw_gens = _require(data, "hidden_generators")
    if not isinstance(raw_gens, list):
        raise ConfigError("config field 'hidden_generators' must be a list of residue lists")
    gens = []
    for g in raw_gens:
        if not isinstance(g, list) or len(g) != len(group.factors):
            raise ConfigError(
                "config field 'hidden_generators' entries must be residue lists of"
                f" length {len(group.factors)} (factors of 1 are dropped)"
            )
        try:
            gens.append(tuple(group.element(g).residues))
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"config field 'hidden_generators' is invalid: {exc}") from exc

    n_samples = _int_field(_require(data, "n_samples"), "n_samples", 1)
    seed = _int_field(_require(data, "seed"), "seed", 0)
    shots = _int_field(data.get("shots", 0), "shots", 0)

    sampling = data.get("sampling", "without_replacement")
    if sampling not in _SAMPLING_MODES:
        raise ConfigError(
            f"config field 'sampling' must be one of {_SAMPLING_MODES}, got {sampling!r}"
        )

    distribution = data.get("distribution", "uniform")
    if distribution != "uniform":
        if not isinstance(distribution, list) or len(distribution) != group.order:
            raise ConfigError(
                f"config field 'distribution' must be 'uniform' or a list of {group.order} weights"
            )
        weights = []
        for w in distribution:
            if not isinstance(w, (int, float)) or isinstance(w, bool) or w < 0:
                raise ConfigError("config field 'distribution' weights must be nonnegative numbers")
            weights.append(float(w))
        if sum(weights) <= 0:
            raise ConfigError("config field 'distribution' weights must have positive sum")
        distribution = tuple(weights)

    lam = data.get("lam")
    if lam is not None:
        if not isinstance(lam, (int, float)) or isinstance(lam, bool) or lam < 0:
            raise ConfigError("config field 'lam' must be a nonnegative number or null")
        lam = float(lam)

    grid = data.get("lambda_grid")
    if grid is not None:
        if not isinstance(grid, list) or not grid:
            raise ConfigError("config field 'lambda_grid' must be a nonempty list of numbers")
        cleaned = []
        for v in grid:
            if not isinstance(v, (int, float)) or isinstance(v, bool) or v < 0:
                raise ConfigError("config field 'lambda_grid' entries must be nonnegative numbers")
            cleaned.append(float(v))
        grid = tuple(cleaned)

    solver = data.get("solver", {})
    if not isinstance(solver, dict):
        raise ConfigError("config field 'solver' must be an object")
    for key in solver:
        if key not in {"enabled", "c", "max_steps", "method", "source"}:
            raise ConfigError(f"unknown config field 'solver.{key}'")
    enabled = solver.get("enabled", True)
    if not isinstance(enabled, bool):
        raise ConfigError("config field 'solver.enabled' must be a boolean")
    solver_c = _int_field(solver.get("c", 8), "solver.c", 1)
    max_steps = _int_field(solver.get("max_steps", 256), "solver.max_steps", 1)
    method = solver.get("method", "direct")
    if method not in _SOLVER_METHODS:
        raise ConfigError(
            f"config field 'solver.method' must be one of {_SOLVER_METHODS}, got {method!r}"
        )
    source = solver.get("source", "ensemble")
    if source not in _SOLVER_SOURCES:
        raise ConfigError(
            f"config field 'solver.source' must be one of {_SOLVER_SOURCES}, got {source!r}"
        )

    output_dir = data.get("output_dir")
    if output_dir is not None and not isinstance(output_dir, str):
        raise ConfigError("config field 'output_dir' must be a string or null")

    return ExperimentConfig(
        factors=group.factors,
        hidden_generators=tuple(gens),
        n_samples=n_samples,
        seed=seed,
        sampling=sampling,
        distribution=distribution,
        lam=lam,
        lambda_grid=grid,
        shots=shots,
        solver_enabled=enabled,
        solver_c=solver_c,
        solver_max_steps=max_steps,
        solver_method=method,
        solver_source=source,
        output_dir=output_dir,
    )


def sample_training_set(
    group: Group,
    hidden: Subgroup,
    n_samples: int,
    rng: np.random.Generator,
    sampling: str = "without_replacement",
    distribution: Union[str, Sequence[float]] = "uniform",
) -> TrainingSet:
    """Draw labeled samples; labels are the flat index of each coset's representative."""
    if sampling not in _SAMPLING_MODES:
        raise ValueError(f"unknown sampling mode {sampling!r}")
    if distribution == "uniform":
        probs = np.full(group.order, 1.0 / group.order)
    else:
        probs = np.asarray(list(distribution), dtype=np.float64)
        if probs.shape != (group.order,):
            raise ValueError(f"distribution needs {group.order} weights")
        probs = probs / probs.sum()
    replace = sampling == "with_replacement"
    if not replace and n_samples > int(np.count_nonzero(probs)):
        raise ValueError(
            f"cannot draw {n_samples} distinct samples from "
            f"{int(np.count_nonzero(probs))} elements with positive weight"
        )
    draws = rng.choice(group.order, size=n_samples, replace=replace, p=probs)
    table = coset_table(hidden)
    pairs = [(int(x), table.representative_of(int(x)).index) for x in draws]
    if replace:
        return training_set_with_replacement(group, pairs, hidden=hidden)
    return training_set(group, pairs, hidden=hidden)


@dataclass(frozen=True)
class ExperimentResult:
    """Everything one pipeline run produced, plus any files it wrote."""

    config: ExperimentConfig
    training: TrainingSet
    inference: InferenceResult
    leakage: LeakageReport
    solver_run: Optional[SolverRun]
    sweep_window: Optional[Tuple[float, float]]
    summary: Dict[str, Any]
    paths: Dict[str, str] = field(default_factory=dict)


def _resolve_output_dir(
    explicit: Optional[Union[str, Path]], config_dir: Optional[str]
) -> Optional[Path]:
    for choice in (explicit, config_dir, os.environ.get("HSPLEARN_OUTPUT_DIR")):
        if choice:
            return Path(choice)
    return None


def _write_json(path: Path, payload: Dict[str, Any]) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _write_csv(path: Path, header: List[str], rows: List[List[Any]]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _elements_str(subgroup: Subgroup) -> str:
    return ";".join(str(e) for e in subgroup.elements)


def _run_pipeline(
    config: ExperimentConfig,
    training: TrainingSet,
    output_dir: Optional[Union[str, Path]] = None,
) -> ExperimentResult:
    """Shared pipeline: solver, leakage, inference, optional files."""
    group = training.group
    hidden = training.hidden if training.hidden is not None else config.hidden()
    seq = np.random.SeedSequence(config.seed)
    _, rng_solver, rng_meas, rng_swap = [
        np.random.default_rng(child) for child in seq.spawn(4)
    ]

    mixture = partial_coset_mixture(training)

    solver_run = None
    if config.solver_enabled:
        if config.solver_source == "ensemble":
            sampler = FourierSampler(hidden, config.solver_method)
        else:
            dist = fourier_sampling_distribution(mixture)
            dist = dist / dist.sum()

            def sampler(rng: np.random.Generator, _dist=dist):
                return group.element_at(int(rng.choice(group.order, p=_dist)))

        solver_run = kernel_intersection_solve(
            group,
            sampler,
            rng_solver,
            c=config.solver_c,
            max_steps=config.solver_max_steps,
            truth=hidden,
        )

    leak = leakage_report(training, hidden)
    inference = infer_subgroup(training, lam=config.lam)

    window = None
    sweep = None
    if config.lambda_grid is not None:
        sweep = sweep_lambda(training, lambdas=config.lambda_grid)
        window = lambda_window(sweep, hidden)

    measurements: Optional[np.ndarray] = None
    swap_rows: Dict[Tuple[int, ...], Tuple[float, float]] = {}
    if config.shots > 0:
        measurements = sample_measurement(mixture, rng_meas, config.shots)
        for report in inference.reports:
            est = swap_test_estimate(
                mixture, annihilator_state(report.candidate), rng_swap, config.shots
            )
            swap_rows[report.candidate.elements] = (est.estimate, est.stderr)

    summary: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "config": config.echo(),
        "group": group_json(group),
        "hidden": subgroup_json(hidden),
        "training": {
            "n_distinct": training.n_distinct,
            "total_count": training.total_count,
            "labels": [str(label) for label in training.labels()],
            "samples": [
                [x.index, str(label), m]
                for (x, label), m in zip(training.samples, training.multiplicities)
            ],
        },
        "solver": None if solver_run is None else solver_run_json(solver_run),
        "leakage": leakage_report_json(leak),
        "inference": inference_json(inference),
        "lambda_window": None if window is None else [window[0], window[1]],
        "shots": config.shots,
    }

    paths: Dict[str, str] = {}
    out = _resolve_output_dir(output_dir, config.output_dir)
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        _write_json(out / "summary.json", summary)
        paths["summary"] = str(out / "summary.json")

        dao_header = [
            "rank",
            "candidate_elements",
            "candidate_order",
            "annihilator_size",
            "beta_norm",
            "fidelity",
            "lam",
            "cost",
            "swap_estimate",
            "swap_stderr",
        ]
        dao_rows = []
        for rank, report in enumerate(inference.reports):
            swap = swap_rows.get(report.candidate.elements)
            dao_rows.append(
                [
                    rank,
                    _elements_str(report.candidate),
                    report.candidate.order,
                    report.annihilator_size,
                    repr(report.beta_norm),
                    repr(report.beta_norm**2),
                    repr(report.lam),
                    repr(report.cost),
                    "" if swap is None else repr(swap[0]),
                    "" if swap is None else repr(swap[1]),
                ]
            )
        _write_csv(out / "dao_table.csv", dao_header, dao_rows)
        paths["dao_table"] = str(out / "dao_table.csv")

        leak_header = ["candidate_elements", "candidate_order", "exact", "approx"]
        leak_rows = [
            [_elements_str(row.candidate), row.candidate.order, repr(row.exact), repr(row.approx)]
            for row in leak.rows
        ]
        _write_csv(out / "leakage.csv", leak_header, leak_rows)
        paths["leakage"] = str(out / "leakage.csv")

        if measurements is not None:
            meas_rows = [
                [config.seed, shot, int(label)]
                for shot, label in enumerate(measurements)
            ]
            _write_csv(out / "measurements.csv", ["seed", "shot", "label_index"], meas_rows)
            paths["measurements"] = str(out / "measurements.csv")

    return ExperimentResult(
        config=config,
        training=training,
        inference=inference,
        leakage=leak,
        solver_run=solver_run,
        sweep_window=window,
        summary=summary,
        paths=paths,
    )


def run_experiment(
    config: Union[ExperimentConfig, Dict[str, Any], str, Path],
    output_dir: Optional[Union[str, Path]] = None,
) -> ExperimentResult:
    """Sample a training set per the config and run the full pipeline."""
    if not isinstance(config, ExperimentConfig):
        config = load_config(config)
    group = config.group()
    hidden = config.hidden()
    rng_sample = np.random.default_rng(np.random.SeedSequence(config.seed).spawn(4)[0])
    try:
        training = sample_training_set(
            group,
            hidden,
            config.n_samples,
            rng_sample,
            sampling=config.sampling,
            distribution=config.distribution,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return _run_pipeline(config, training, output_dir)


# ---------------------------------------------------------------------------
# Nuisance-structure demo


@dataclass(frozen=True)
class NuisanceConfig:
    """World of state-preparation settings scored by a noisy binary statistic.

    ``scores`` holds the true acceptance probability of each world state; the
    demo estimates each queried score with ``n_flips`` coin flips, clusters
    the estimates with single-linkage at ``threshold``, and feeds the cluster
    labels to subgroup inference over the prior group.
    """

    scores: Tuple[float, ...]
    prior_factors: Tuple[int, ...] = (12,)
    n_flips: int = 10_000
    threshold: float = 0.05
    n_queries: Optional[int] = None
    queries: Optional[Tuple[int, ...]] = None
    lam: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        world = math.prod(self.prior_factors)
        if len(self.scores) != world:
            raise ConfigError(
                f"got {len(self.scores)} scores for a world of {world} states"
            )
        for s in self.scores:
            if not 0.0 <= s <= 1.0:
                raise ConfigError(f"score {s} is not a probability")
        if self.n_flips < 1:
            raise ConfigError("n_flips must be at least 1")
        if self.threshold <= 0:
            raise ConfigError("threshold must be positive")
        if self.queries is not None:
            for q in self.queries:
                if not 0 <= q < world:
                    raise ConfigError(f"query {q} outside the world [0, {world})")
            if len(set(self.queries)) != len(self.queries):
                raise ConfigError("queries must be distinct")


def default_nuisance_config(seed: int = 0) -> NuisanceConfig:
    """Dodecagon demo: even states score 0.5, odd states 0.3, full query sweep."""
    scores = tuple(0.5 if w % 2 == 0 else 0.3 for w in range(12))
    return NuisanceConfig(scores=scores, prior_factors=(12,), seed=seed)


@dataclass(frozen=True)
class NuisanceReport:
    """Queried states, their estimated scores, clusters, and the inferred subgroup."""

    config: NuisanceConfig
    queries: Tuple[int, ...]
    estimates: Tuple[float, ...]
    cluster_labels: Tuple[int, ...]
    inferred: Subgroup
    inference: InferenceResult
    unstable: bool


def run_nuisance_demo(config: Optional[NuisanceConfig] = None) -> NuisanceReport:
    """Estimate scores, cluster them, and infer the invariance subgroup.

    Clusters are the connected components of adjacent estimates within the
    threshold on the sorted score line, numbered in ascending score order.
    The instability flag trips when the binomial noise scale 1/(2 sqrt(M))
    exceeds half the clustering threshold.
    """
    if config is None:
        config = default_nuisance_config()
    world = math.prod(config.prior_factors)
    rng = np.random.default_rng(np.random.SeedSequence(config.seed))

    if config.queries is not None:
        queries = tuple(config.queries)
    elif config.n_queries is None or config.n_queries >= world:
        queries = tuple(range(world))
    else:
        queries = tuple(
            int(q) for q in rng.choice(world, size=config.n_queries, replace=False)
        )

    estimates = tuple(
        float(rng.binomial(config.n_flips, config.scores[q]) / config.n_flips)
        for q in queries
    )

    order = sorted(range(len(queries)), key=lambda i: (estimates[i], queries[i]))
    cluster_of = [0] * len(queries)
    cluster = 0
    for pos in range(1, len(order)):
        if estimates[order[pos]] - estimates[order[pos - 1]] > config.threshold:
            cluster += 1
        cluster_of[order[pos]] = cluster
    cluster_labels = tuple(cluster_of)

    group = Group(config.prior_factors)
    pairs = [(q, cluster_labels[i]) for i, q in enumerate(queries)]
    training = training_set(group, pairs)
    inference = infer_subgroup(training, lam=config.lam)

    unstable = 1.0 / (2.0 * math.sqrt(config.n_flips)) > config.threshold / 2.0
    return NuisanceReport(
        config=config,
        queries=queries,
        estimates=estimates,
        cluster_labels=cluster_labels,
        inferred=inference.winner,
        inference=inference,
        unstable=unstable,
    )


def nuisance_report_json(report: NuisanceReport) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "prior_factors": list(report.config.prior_factors),
        "n_flips": report.config.n_flips,
        "threshold": report.config.threshold,
        "seed": report.config.seed,
        "queries": list(report.queries),
        "estimates": list(report.estimates),
        "cluster_labels": list(report.cluster_labels),
        "inferred": subgroup_json(report.inferred),
        "unstable": report.unstable,
    }


# ---------------------------------------------------------------------------
# Presets


def _preset_z12_training(output_dir: Optional[Path]) -> ExperimentResult:
    """Three-sample partial-data walkthrough on Z12 with hidden subgroup 2Z12."""
    config = ExperimentConfig(
        factors=(12,),
        hidden_generators=((2,),),
        n_samples=3,
        seed=0,
        solver_enabled=False,
    )
    group = config.group()
    hidden = config.hidden()
    training = training_set(
        group, [(0, "cyan"), (2, "cyan"), (3, "lime")], hidden=hidden
    )
    return _run_pipeline(config, training, output_dir)


def _preset_z12_walkthrough(output_dir: Optional[Path]) -> ExperimentResult:
    """Complete-data walkthrough on Z12: every element labeled by its coset."""
    config = ExperimentConfig(
        factors=(12,),
        hidden_generators=((2,),),
        n_samples=12,
        seed=0,
        lambda_grid=tuple(float(v) for v in np.logspace(-4.0, 0.0, 13)),
        shots=2048,
    )
    group = config.group()
    hidden = config.hidden()
    table = coset_table(hidden)
    pairs = [(g, table.representative_of(g).index) for g in range(group.order)]
    training = training_set(group, pairs, hidden=hidden)
    return _run_pipeline(config, training, output_dir)


def _preset_standard_fails(output_dir: Optional[Path]) -> ExperimentResult:
    """Degenerate transversal data (one sample per coset) starves the solver.

    Fourier sampling of this training mixture is uniform over all labels, so
    the kernel intersection collapses past the hidden subgroup; the run is
    recorded with success False and the overlap table shows the tie it
    leaves behind.
    """
    config = ExperimentConfig(
        factors=(12,),
        hidden_generators=((2,),),
        n_samples=2,
        seed=0,
        solver_source="training",
    )
    group = config.group()
    hidden = config.hidden()
    training = training_set(group, [(0, "even"), (1, "odd")], hidden=hidden)
    return _run_pipeline(config, training, output_dir)


def _preset_leak_curve(output_dir: Optional[Path]) -> Dict[str, Any]:
    """Annihilator mass and SNR versus sample count on Z12, averaged over seeds."""
    group = Group([12])
    hidden = subgroup_from_generators(group, [(2,)])
    n_seeds = 200
    rows: List[List[Any]] = []
    for n in range(1, group.order + 1):
        masses = []
        snrs = []
        for i in range(n_seeds):
            rng = np.random.default_rng(np.random.SeedSequence((7, n, i)))
            training = sample_training_set(group, hidden, n, rng)
            masses.append(annihilator_mass(training))
            snrs.append(snr(training))
        mean_mass = sum(masses) / n_seeds
        mean_snr = (
            math.inf if any(math.isinf(s) for s in snrs) else sum(snrs) / n_seeds
        )
        rows.append(
            [n, repr(mean_mass), repr(min(masses)), repr(max(masses)), repr(mean_snr), n_seeds]
        )
    summary = {
        "schema_version": SCHEMA_VERSION,
        "group": group_json(group),
        "hidden": subgroup_json(hidden),
        "n_seeds": n_seeds,
        "n_samples_grid": list(range(1, group.order + 1)),
    }
    paths: Dict[str, str] = {}
    if output_dir is not None:
        output_dir.mkdir(parents=True, exist_ok=True)
        _write_csv(
            output_dir / "leak_curve.csv",
            ["n_samples", "p_mean", "p_min", "p_max", "snr_mean", "n_seeds"],
            rows,
        )
        _write_json(output_dir / "summary.json", summary)
        paths["leak_curve"] = str(output_dir / "leak_curve.csv")
        paths["summary"] = str(output_dir / "summary.json")
    return {"summary": summary, "paths": paths, "rows": rows}


_PRESETS = {
    "z12-training": (
        "Three-sample partial-data walkthrough on Z12 (hidden subgroup 2Z12)",
        _preset_z12_training,
    ),
    "z12-walkthrough": (
        "Complete-data walkthrough on Z12 with lambda sweep and SWAP estimates",
        _preset_z12_walkthrough,
    ),
    "standard-fails": (
        "Transversal-only data defeats the standard solver but not the overlap table",
        _preset_standard_fails,
    ),
    "leak-curve": (
        "Annihilator mass and SNR versus sample count on Z12 (200 seeds per point)",
        _preset_leak_curve,
    ),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset_description(name: str) -> str:
    if name not in _PRESETS:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    return _PRESETS[name][0]


def run_preset(name: str, output_dir: Optional[Union[str, Path]] = None):
    """Run a named preset; returns its result object."""
    if name not in _PRESETS:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    resolved = _resolve_output_dir(output_dir, None)
    return _PRESETS[name][1](resolved)
