"""Run reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


def sig12(x: float) -> float:
    """Round to 12 significant digits for display."""
    return float(f"{x:.12g}")


@dataclass
class TrialReport:
    kind: int
    parameters: dict[str, str] = field(default_factory=dict)
    seed: int = 0
    algorithm_id: str = "pcg64"
    trials: int = 0
    successes: int = 0
    max_trace_distance: float | None = None
    notes: str = ""

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError(f"successes={self.successes} outside [0, trials={self.trials}]")

    @property
    def success_fraction(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    @property
    def all_succeeded(self) -> bool:
        return self.trials > 0 and self.successes == self.trials

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> TrialReport:
        return cls(
            kind=int(d["kind"]),
            parameters={str(k): str(v) for k, v in d.get("parameters", {}).items()},
            seed=int(d["seed"]),
            algorithm_id=str(d["algorithm_id"]),
            trials=int(d["trials"]),
            successes=int(d["successes"]),
            max_trace_distance=None if d.get("max_trace_distance") is None else float(d["max_trace_distance"]),
            notes=str(d.get("notes", "")),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> TrialReport:
        return cls.from_dict(json.loads(text))
