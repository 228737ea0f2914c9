"""Construction and canonical serialization of CLI result records.

Records are flat JSON objects written one per line with sorted keys, so
identical computations produce identical bytes; wall-clock timings live
under the single ``timings`` key that consumers may strip before
comparing.
"""

from __future__ import annotations

import hashlib
import json

from .convexity import HullTrace
from .domination import SolverResult
from .graph import vertices_of
from .recognition import ForbiddenWitness

SCHEMA = "convdom.result/v1"


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def base_record(command: str, input_path: str | None, input_bytes: bytes | None) -> dict:
    record: dict = {"schema": SCHEMA, "command": command, "status": "ok"}
    if input_path is not None:
        record["input"] = str(input_path)
        record["input_sha256"] = digest(input_bytes if input_bytes is not None else b"")
    return record


def witness_field(mask: int) -> list[int]:
    return list(vertices_of(mask))


def solver_fields(result: SolverResult) -> dict:
    fields: dict = {
        "value": result.value,
        "witness": witness_field(result.witness),
        "method": result.method,
        "certificate": {
            "dominating": result.certificate.dominating,
            "convex": result.certificate.convex,
            "isometric": result.certificate.isometric,
        },
    }
    if result.seed is not None:
        fields["seed"] = witness_field(result.seed)
    if result.trace is not None:
        fields["hull_rounds"] = trace_field(result.trace)
    if result.stage is not None:
        fields["stage"] = result.stage
    return fields


def trace_field(trace: HullTrace) -> list[list[int]]:
    rounds = [witness_field(trace.seed)]
    rounds.extend(list(added) for added in trace.added_per_round())
    return rounds


def witness_record(witness: ForbiddenWitness) -> dict:
    return {
        "family": witness.family,
        "index": witness.index,
        "embedding": list(witness.embedding),
    }


def to_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"
