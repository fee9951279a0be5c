"""Reference example values, recomputed and compared exactly."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ldic.converse import capacity_region, perfect_level
from ldic.gains import feedback_thresholds, gain_report
from ldic.geometry import fmt
from ldic.model import validate


def _metric_cases():
    reference = {
        (20, 15, 12, 13, 15, 14): ("2", "2", "0"),
        (20, 15, 12, 13, 20, 15): ("7", "7/2", "0"),
        (10, 10, 3, 8, 9, 4): ("1", "1", "1"),
        (10, 10, 3, 8, 10, 10): ("2", "2", "1"),
        (10, 20, 6, 12, 10, 11): ("3/2", "2", "0"),
        (10, 20, 6, 12, 10, 20): ("3", "6", "0"),
        (7, 8, 15, 13, 11, 9): ("2", "3", "0"),
        (7, 8, 15, 13, 15, 13): ("6", "5", "0"),
    }
    for params, values in reference.items():
        for name, value in zip(("delta1", "delta2", "sigma"), values):
            label = ",".join(map(str, params))
            yield {"id": f"{name}({label})", "kind": "metric", "params": list(params),
                   "field": name, "expected": value}


def _threshold_cases():
    table = {
        (20, 15, 12, 13): ("13", "12"),
        (10, 10, 3, 8): ("8", "3"),
        (10, 20, 6, 12): ("never", "8"),
        (7, 8, 15, 13): ("8", "7"),
    }
    for base, values in table.items():
        label = ",".join(map(str, base))
        for side, value in zip((1, 2), values):
            yield {"id": f"threshold{side}({label})", "kind": "threshold", "base": list(base),
                   "side": side, "expected": value}
    for side in (1, 2):
        yield {"id": f"exclusive{side}(7,8,15,13)", "kind": "exclusive",
               "base": [7, 8, 15, 13], "side": side, "expected": "true"}


GOLDEN: list[dict] = [
    *_metric_cases(),
    {"id": "equal(10,9,2,15,0,0;10,9,2,15,10,15)", "kind": "equal",
     "params": [10, 9, 2, 15, 0, 0], "other": [10, 9, 2, 15, 10, 15], "expected": "true"},
    *_threshold_cases(),
]


def _exclusive(base, side) -> bool:
    """Above the threshold, feedback on ``side`` helps only the other user."""
    t = feedback_thresholds(base, side)
    if t is None:
        return False
    top = perfect_level(validate((*base, 0, 0)), side)
    other = 2 if side == 1 else 1
    for fb in range(t + 1, top + 1):
        r = gain_report(validate((*base, *((fb, 0) if side == 1 else (0, fb)))))
        if r.metric(f"delta{side}") != 0 or r.metric(f"delta{other}") <= 0:
            return False
    return True


def evaluate(case: dict) -> str:
    kind = case["kind"]
    if kind == "metric":
        return fmt(gain_report(validate(case["params"])).metric(case["field"]))
    if kind == "equal":
        same = capacity_region(validate(case["params"])) == capacity_region(validate(case["other"]))
        return "true" if same else "false"
    if kind == "threshold":
        t = feedback_thresholds(case["base"], case["side"])
        return "never" if t is None else str(t)
    if kind == "exclusive":
        return "true" if _exclusive(case["base"], case["side"]) else "false"
    raise ValueError(f"unknown golden assertion kind {kind!r}")


@dataclass(frozen=True)
class Outcome:
    id: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"id": self.id, "expected": self.expected, "actual": self.actual,
                "pass": self.passed}


def run(cases: list[dict] | None = None) -> list[Outcome]:
    cases = GOLDEN if cases is None else cases
    return [Outcome(c["id"], str(c["expected"]), evaluate(c)) for c in cases]


def load(path: str) -> list[dict]:
    with open(path) as fh:
        cases = json.load(fh)
    if not isinstance(cases, list):
        raise ValueError("golden file must hold a JSON list of assertions")
    return cases
