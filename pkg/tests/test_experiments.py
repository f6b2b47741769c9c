"""Config validation, the experiment pipeline, presets, and the nuisance demo."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from hsplearn import (
    ConfigError,
    Group,
    NuisanceConfig,
    PRESET_NAMES,
    default_nuisance_config,
    load_config,
    nuisance_report_json,
    preset_description,
    run_experiment,
    run_nuisance_demo,
    run_preset,
    subgroup_from_generators,
)
from hsplearn.experiments import sample_training_set

MINIMAL = {
    "factors": [12],
    "hidden_generators": [[2]],
    "n_samples": 4,
    "seed": 7,
}


def make_config(**overrides: object) -> dict:
    data = dict(MINIMAL)
    data.update(overrides)
    return data


class TestLoadConfig:
    def test_minimal_defaults(self) -> None:
        config = load_config(make_config())
        assert config.factors == (12,)
        assert config.hidden().elements == (0, 2, 4, 6, 8, 10)
        assert config.sampling == "without_replacement"
        assert config.solver_enabled is True
        assert config.solver_c == 8
        assert config.lam is None

    def test_file_round_trip(self, tmp_path: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text(json.dumps(make_config()))
        assert load_config(path) == load_config(make_config())

    def test_echo_matches_json_shape(self) -> None:
        config = load_config(make_config(lam=0.01, shots=16))
        echo = config.echo()
        assert echo["solver"] == {
            "enabled": True,
            "c": 8,
            "max_steps": 256,
            "method": "direct",
            "source": "ensemble",
        }
        assert load_config(echo) == config

    @pytest.mark.parametrize(
        "overrides, message",
        [
            ({"factors": []}, "factors"),
            ({"factors": "twelve"}, "factors"),
            ({"factors": [0]}, "factors"),
            ({"hidden_generators": [[2, 0]]}, "hidden_generators"),
            ({"hidden_generators": 2}, "hidden_generators"),
            ({"n_samples": 0}, "n_samples"),
            ({"n_samples": True}, "n_samples"),
            ({"n_samples": "four"}, "n_samples"),
            ({"sampling": "bootstrapped"}, "sampling"),
            ({"distribution": [1.0, 2.0]}, "distribution"),
            ({"distribution": [-1.0] + [1.0] * 11}, "distribution"),
            ({"distribution": [0.0] * 12}, "distribution"),
            ({"lam": -0.5}, "lam"),
            ({"lambda_grid": []}, "lambda_grid"),
            ({"lambda_grid": [0.1, -0.2]}, "lambda_grid"),
            ({"shots": -1}, "shots"),
            ({"solver": {"c": 0}}, "solver.c"),
            ({"solver": {"method": "oracle"}}, "solver.method"),
            ({"solver": {"source": "psychic"}}, "solver.source"),
            ({"solver": {"enabled": 1}}, "solver.enabled"),
            ({"solver": {"budget": 3}}, "solver.budget"),
            ({"output_dir": 7}, "output_dir"),
            ({"mystery": 1}, "mystery"),
        ],
    )
    def test_rejections_name_the_field(self, overrides: dict, message: str) -> None:
        with pytest.raises(ConfigError, match=message.replace(".", r"\.")):
            load_config(make_config(**overrides))

    def test_missing_required_field(self) -> None:
        data = make_config()
        del data["seed"]
        with pytest.raises(ConfigError, match="seed"):
            load_config(data)

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "absent.json")

    def test_invalid_json_file(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="not valid JSON"):
            load_config(path)


class TestSampleTrainingSet:
    def test_labels_are_coset_representatives(self, z12, even_z12) -> None:
        rng = np.random.default_rng(3)
        data = sample_training_set(z12, even_z12, 8, rng)
        for x, label in data.samples:
            rep = z12.element_at(int(label))
            assert (x - rep).index in even_z12.member_set

    def test_without_replacement_is_distinct(self, z12, even_z12) -> None:
        data = sample_training_set(z12, even_z12, 12, np.random.default_rng(5))
        assert data.n_distinct == 12
        assert set(data.multiplicities) == {1}

    def test_overdraw_rejected(self, z12, even_z12) -> None:
        with pytest.raises(ValueError, match="distinct"):
            sample_training_set(z12, even_z12, 13, np.random.default_rng(0))

    def test_with_replacement_folds(self, z12, even_z12) -> None:
        data = sample_training_set(
            z12, even_z12, 60, np.random.default_rng(1), sampling="with_replacement"
        )
        assert data.total_count == 60
        assert data.n_distinct < 60

    def test_custom_distribution_support(self, z12, even_z12) -> None:
        weights = [1.0 if g < 4 else 0.0 for g in range(12)]
        data = sample_training_set(
            z12, even_z12, 4, np.random.default_rng(2), distribution=weights
        )
        assert {x.index for x, _ in data.samples} == {0, 1, 2, 3}


class TestRunExperiment:
    def test_summary_shape_and_determinism(self) -> None:
        first = run_experiment(make_config())
        second = run_experiment(make_config())
        assert first.summary == second.summary
        assert first.summary["schema_version"] == 1
        assert first.summary["group"]["order"] == 12
        assert first.summary["hidden"]["elements"] == [0, 2, 4, 6, 8, 10]
        assert first.summary["training"]["total_count"] == 4
        assert first.summary["solver"] is not None

    def test_writes_expected_files(self, tmp_path: Path) -> None:
        result = run_experiment(make_config(shots=32, lambda_grid=[1e-4, 1e-2]), tmp_path)
        names = {Path(p).name for p in result.paths.values()}
        assert names == {
            "summary.json",
            "dao_table.csv",
            "leakage.csv",
            "measurements.csv",
        }
        for path in result.paths.values():
            assert Path(path).exists()
        table = Path(result.paths["dao_table"]).read_text().splitlines()
        assert table[0].startswith("rank,candidate_elements")
        assert len(table) == 1 + 6

    def test_no_measurements_without_shots(self, tmp_path: Path) -> None:
        result = run_experiment(make_config(), tmp_path)
        assert "measurements" not in result.paths

    def test_solver_disabled(self) -> None:
        result = run_experiment(make_config(solver={"enabled": False}))
        assert result.solver_run is None
        assert result.summary["solver"] is None

    def test_sweep_window_recorded(self) -> None:
        result = run_experiment(
            make_config(n_samples=12, lambda_grid=[1e-6, 1e-4, 1e-2, 1.0])
        )
        assert result.sweep_window is not None
        assert result.summary["lambda_window"] == list(result.sweep_window)

    def test_config_error_propagates(self) -> None:
        with pytest.raises(ConfigError):
            run_experiment(make_config(n_samples=13))


class TestPresets:
    def test_registry(self) -> None:
        assert PRESET_NAMES == ("leak-curve", "standard-fails", "z12-training", "z12-walkthrough")
        for name in PRESET_NAMES:
            assert preset_description(name)
        with pytest.raises(ConfigError, match="unknown preset"):
            preset_description("z13-training")
        with pytest.raises(ConfigError, match="unknown preset"):
            run_preset("z13-training")

    def test_walkthrough_recovers_hidden(self, tmp_path: Path) -> None:
        result = run_preset("z12-walkthrough", tmp_path / "out")
        assert result.inference.winner.elements == (0, 2, 4, 6, 8, 10)
        assert result.sweep_window is not None
        assert result.solver_run.success is True
        assert (tmp_path / "out" / "summary.json").exists()

    def test_training_preset_is_honest_about_sparse_data(self) -> None:
        result = run_preset("z12-training")
        assert result.training.total_count == 3
        assert result.inference.winner.elements == (0,)
        assert result.leakage.p_true == pytest.approx(5 / 18, abs=1e-12)

    def test_standard_fails_preset(self) -> None:
        result = run_preset("standard-fails")
        assert result.solver_run.success is False
        assert result.solver_run.result.order < 12

    def test_leak_curve_rows(self) -> None:
        result = run_preset("leak-curve")
        rows = result["rows"]
        assert len(rows) == 12
        assert [row[0] for row in rows] == list(range(1, 13))
        assert float(rows[0][1]) < 1.0
        assert rows[-1][1] == repr(1.0)
        assert rows[-1][4] == repr(math.inf)
        assert result["paths"] == {}


class TestNuisanceDemo:
    def test_default_demo_recovers_even_subgroup(self, z12) -> None:
        report = run_nuisance_demo()
        even = subgroup_from_generators(z12, [2])
        assert report.inferred.elements == even.elements
        assert report.queries == tuple(range(12))
        assert len(report.estimates) == 12
        assert report.unstable is False
        evens = {report.cluster_labels[q] for q in range(0, 12, 2)}
        odds = {report.cluster_labels[q] for q in range(1, 12, 2)}
        assert len(evens) == 1 and len(odds) == 1 and evens != odds
        # Clusters are numbered upward along the score line; odds score lower.
        assert odds == {0} and evens == {1}

    def test_seeded_determinism(self) -> None:
        first = run_nuisance_demo(default_nuisance_config(seed=3))
        second = run_nuisance_demo(default_nuisance_config(seed=3))
        assert first.estimates == second.estimates
        assert nuisance_report_json(first) == nuisance_report_json(second)

    def test_query_subset(self) -> None:
        config = NuisanceConfig(
            scores=default_nuisance_config().scores, queries=(0, 1, 2), n_flips=500
        )
        report = run_nuisance_demo(config)
        assert report.queries == (0, 1, 2)
        assert len(report.estimates) == 3

    def test_coarse_flip_budget_flags_instability(self) -> None:
        config = NuisanceConfig(
            scores=default_nuisance_config().scores, n_flips=100
        )
        assert run_nuisance_demo(config).unstable is True

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"scores": (0.5,) * 11},
            {"scores": (0.5,) * 11 + (1.5,)},
            {"scores": (0.5,) * 12, "n_flips": 0},
            {"scores": (0.5,) * 12, "threshold": 0.0},
            {"scores": (0.5,) * 12, "queries": (0, 0)},
            {"scores": (0.5,) * 12, "queries": (12,)},
        ],
    )
    def test_config_validation(self, kwargs: dict) -> None:
        with pytest.raises(ConfigError):
            NuisanceConfig(**kwargs)
