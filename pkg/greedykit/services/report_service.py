"""
Report Service - machine-readable run reports

JSON reports follow report.schema.json (generated from RunReport). Wall time
lives in the metadata block, which is excluded from determinism guarantees.
"""

import csv
import io
import json
import math
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel

from greedykit import __version__
from greedykit.core.exceptions import DomainError
from greedykit.services.instance_service import InstanceFile
from greedykit.services.oracle_service import OracleResult
from greedykit.services.solver_service import GapDiagnostic, SolveResult, SolverService, StepRecord

SCHEMA_VERSION = "1.0"


class InstanceDescriptor(BaseModel):
    path: str
    kind: str
    m: int
    n: int
    checksum: str


class OracleSummary(BaseModel):
    """Exact optimum and how the run compares to it"""

    value: float
    best_set: List[int]
    sets_evaluated: int
    ratio: float
    bound: Optional[float] = None
    meets_bound: Optional[bool] = None
    gap: GapDiagnostic


class RunMetadata(BaseModel):
    wall_time_seconds: float
    version: str = __version__


class RunReport(BaseModel):
    """One solve, as emitted by `greedykit solve`"""

    schema_version: str = SCHEMA_VERSION
    instance: InstanceDescriptor
    algorithm: str
    k: int
    seed: Optional[int] = None
    sample_size: Optional[int] = None
    epsilon: Optional[float] = None
    objective: float
    picks: List[int]
    labels: List[str]
    trace: List[StepRecord]
    evaluations: int
    oracle: Optional[OracleSummary] = None
    metadata: RunMetadata


class TrialRow(BaseModel):
    kind: str = "trial"
    algorithm: str
    trial: int
    objective: float
    evaluations: int
    picks: List[int]
    ratio: Optional[float] = None


class BenchRow(BaseModel):
    """Per-algorithm summary over all trials"""

    kind: str = "summary"
    algorithm: str
    n: int
    k: int
    trials: int
    seed: Optional[int] = None
    sample_size: Optional[int] = None
    epsilon: Optional[float] = None
    objective_mean: float
    objective_min: float
    objective_max: float
    objective_stderr: float
    evaluations_mean: float
    evaluations_min: int
    evaluations_max: int
    predicted_evaluations: Optional[int] = None
    oracle_value: Optional[float] = None
    ratio_mean: Optional[float] = None
    ratio_min: Optional[float] = None
    bound: Optional[float] = None
    meets_bound: Optional[bool] = None


def describe_instance(instance: InstanceFile) -> InstanceDescriptor:
    return InstanceDescriptor(
        path=instance.path,
        kind=instance.kind,
        m=instance.m,
        n=instance.n,
        checksum=instance.checksum,
    )


def optimum_ratio(objective: float, optimum: float) -> float:
    """objective / optimum; an all-zero instance counts as solved exactly"""
    if optimum == 0.0:
        return 1.0
    return objective / optimum


def summarize_oracle(result: SolveResult, oracle: OracleResult, gap: GapDiagnostic) -> OracleSummary:
    ratio = optimum_ratio(result.objective, oracle.best_value)
    bound = SolverService.guarantee(result.algorithm, result.epsilon)
    return OracleSummary(
        value=oracle.best_value,
        best_set=oracle.best_set,
        sets_evaluated=oracle.sets_evaluated,
        ratio=ratio,
        bound=bound,
        meets_bound=None if bound is None else ratio >= bound - 1e-9,
        gap=gap,
    )


def build_run_report(
    instance: InstanceFile,
    result: SolveResult,
    wall_time: float,
    oracle: Optional[OracleSummary] = None,
) -> RunReport:
    ground = instance.function.ground_set
    return RunReport(
        instance=describe_instance(instance),
        algorithm=result.algorithm,
        k=result.k,
        seed=result.seed,
        sample_size=result.sample_size,
        epsilon=result.epsilon,
        objective=result.objective,
        picks=result.picks,
        labels=[ground.label(element) for element in result.picks],
        trace=result.trace,
        evaluations=result.evaluations,
        oracle=oracle,
        metadata=RunMetadata(wall_time_seconds=wall_time),
    )


def assert_finite(payload: Any, where: str = "report"):
    """Reject NaN or infinite numbers anywhere in a JSON payload"""
    if isinstance(payload, float):
        if not math.isfinite(payload):
            raise DomainError(f"non-finite number in {where}")
    elif isinstance(payload, dict):
        for key, value in payload.items():
            assert_finite(value, f"{where}.{key}")
    elif isinstance(payload, list):
        for i, value in enumerate(payload):
            assert_finite(value, f"{where}[{i}]")


def to_json(model: BaseModel, indent: Optional[int] = 2) -> str:
    payload = model.model_dump(mode="json")
    assert_finite(payload)
    return json.dumps(payload, indent=indent)


def to_json_lines(rows: Iterable[BaseModel]) -> str:
    return "".join(to_json(row, indent=None) + "\n" for row in rows)


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def to_csv(rows: List[Dict[str, Any]]) -> str:
    """CSV with float cells in the same round-trip form JSON uses"""
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _csv_value(value) for key, value in row.items()})
    return buffer.getvalue()


def run_report_rows(report: RunReport) -> List[Dict[str, Any]]:
    """One CSV row per greedy step"""
    rows = []
    for step, label in zip(report.trace, report.labels):
        rows.append({
            "algorithm": report.algorithm,
            "k": report.k,
            "seed": report.seed,
            "sample_size": report.sample_size,
            "epsilon": report.epsilon,
            "step": step.step,
            "element": step.element,
            "label": label,
            "gain": step.gain,
            "objective": step.objective,
            "evaluations": step.evaluations,
            "oracle_value": report.oracle.value if report.oracle else None,
            "ratio": report.oracle.ratio if report.oracle else None,
        })
    return rows
