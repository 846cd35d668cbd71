"""Run and sweep report records and their JSON / CSV serialisation."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .analytics import IterationSchedule


@dataclass
class RunReport:
    n: int
    kappa: int
    labels: list[str]
    amplifier: str
    iterations: int
    shots: int
    seed: int
    common_entries: list[int]
    schedule: IterationSchedule | None
    predicted_success: float | None
    exact_success: float
    frequencies: dict[int, int]
    common_hits: int
    oracle_calls: dict[str, int]
    norm_drift: float = 0.0
    duration_s: float = 0.0

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def M_c(self) -> int:
        return len(self.common_entries)

    @property
    def observed_success(self) -> float:
        return self.common_hits / self.shots

    def to_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        d["N"] = self.N
        d["M_c"] = self.M_c
        # JSON object keys must be strings
        d["frequencies"] = {str(k): v for k, v in sorted(self.frequencies.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass
class SweepRow:
    n: int
    N: int
    M_c: int
    q: int
    analytic_success: float
    simulated_success: float
    grover_iterations: int | None = None
    grover_success: float | None = None

    @property
    def abs_error(self) -> float:
        return abs(self.analytic_success - self.simulated_success)


@dataclass
class SweepReport:
    rows: list[SweepRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def min_success(self) -> SweepRow | None:
        return min(self.rows, key=lambda r: r.simulated_success, default=None)

    def grover_worse_rows(self) -> list[SweepRow]:
        return [r for r in self.rows
                if r.grover_success is not None and r.grover_success < r.simulated_success]

    def to_dict(self) -> dict[str, Any]:
        return {"rows": [dataclasses.asdict(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = [f.name for f in dataclasses.fields(SweepRow)]
        writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        writer.writeheader()
        for r in self.rows:
            writer.writerow(dataclasses.asdict(r))
        return buf.getvalue()
