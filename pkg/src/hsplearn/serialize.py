"""Stable JSON-friendly views of groups, subgroups, and report objects.

Every top-level payload carries ``schema_version`` so downstream consumers
can detect format changes.  Dictionaries use plain lists and scalars only;
subgroups appear as sorted flat-index lists, which is their canonical form.
"""

from __future__ import annotations

from typing import Any, Dict

from .dao import DaoReport, InferenceResult
from .groups import Group, GroupElement, Subgroup
from .leakage import LeakageReport
from .solver import SolverRun

__all__ = [
    "SCHEMA_VERSION",
    "group_json",
    "element_json",
    "subgroup_json",
    "dao_report_json",
    "inference_json",
    "solver_run_json",
    "leakage_report_json",
]

SCHEMA_VERSION = 1


def group_json(group: Group) -> Dict[str, Any]:
    return {"factors": list(group.factors), "order": group.order}


def element_json(element: GroupElement) -> Dict[str, Any]:
    return {"residues": list(element.residues), "index": element.index}


def subgroup_json(subgroup: Subgroup) -> Dict[str, Any]:
    return {
        "order": subgroup.order,
        "elements": [int(e) for e in subgroup.elements],
        "generators": [g.index for g in subgroup.generators],
    }


def dao_report_json(report: DaoReport) -> Dict[str, Any]:
    return {
        "candidate": subgroup_json(report.candidate),
        "labels": [str(label) for label in report.labels],
        "beta_real": [float(b.real) for b in report.beta],
        "beta_imag": [float(b.imag) for b in report.beta],
        "beta_norm": report.beta_norm,
        "annihilator_size": report.annihilator_size,
        "lam": report.lam,
        "cost": report.cost,
    }


def inference_json(result: InferenceResult) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "winner": subgroup_json(result.winner),
        "lam": result.lam,
        "method": result.method,
        "reports": [dao_report_json(r) for r in result.reports],
    }


def solver_run_json(run: SolverRun) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_json(run.group),
        "result": subgroup_json(run.result),
        "stabilized": run.stabilized,
        "steps": run.steps,
        "samples": [s.index for s in run.samples],
        "kernel_orders": [k.order for k in run.kernels],
        "success": run.success,
    }


def leakage_report_json(report: LeakageReport) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_json(report.group),
        "hidden": subgroup_json(report.hidden),
        "total_count": report.total_count,
        "class_weights": list(report.class_weights),
        "p_true": report.p_true,
        "snr": None if report.snr == float("inf") else report.snr,
        "snr_infinite": report.snr == float("inf"),
        "rows": [
            {
                "candidate": subgroup_json(row.candidate),
                "exact": row.exact,
                "approx": row.approx,
            }
            for row in report.rows
        ],
    }
