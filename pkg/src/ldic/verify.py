"""Exhaustive consistency checks over small parameter ranges."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ldic.achievability import achievable_region_fm, sumrate_simplification_valid, theta_table
from ldic.converse import capacity_region, perfect_level
from ldic.geometry import subset
from ldic.model import validate
from ldic.simulator import decomposition_dims, dims_oracle

CHECKS = (
    "achievability_equals_converse",
    "theta_identities",
    "sumrate_three_term_bound",
    "feedback_monotonicity",
    "feedback_saturation",
    "index_symmetry",
    "decomposition_oracle",
)


def theta_identities_hold(p) -> bool:
    t = theta_table(p)
    for i, j in ((1, 2), (2, 1)):
        if t(1, i) + t(3, i) != p.cross(i, j):
            return False
        if t(5, i) != max(t(4, i), t(3, i)) or t(7, i) != max(t(3, i), t(6, i)):
            return False
        if any(t(l, i) < 0 for l in range(1, 8)):
            return False
    return True


def check_tuple(tup) -> list[str]:
    """Names of the checks that fail for one parameter tuple."""
    p = validate(tup)
    c = capacity_region(p)
    failed = []
    t = theta_table(p)
    if achievable_region_fm(t) != c:
        failed.append("achievability_equals_converse")
    if not theta_identities_hold(p):
        failed.append("theta_identities")
    if not sumrate_simplification_valid(t):
        failed.append("sumrate_three_term_bound")
    more1 = capacity_region(p.with_feedback(p.n11_fb + 1, p.n22_fb))
    more2 = capacity_region(p.with_feedback(p.n11_fb, p.n22_fb + 1))
    if not (subset(c, more1) and subset(c, more2)):
        failed.append("feedback_monotonicity")
    top1, top2 = perfect_level(p, 1), perfect_level(p, 2)
    if ((p.n11_fb >= top1 and more1 != c) or (p.n22_fb >= top2 and more2 != c)):
        failed.append("feedback_saturation")
    if capacity_region(p.swapped()) != c.mirrored():
        failed.append("index_symmetry")
    if any(decomposition_dims(p, i) != dims_oracle(p, i) for i in (1, 2)):
        failed.append("decomposition_oracle")
    return failed


@dataclass
class VerifyReport:
    max_param: int
    tuples: int = 0
    failures: dict = field(default_factory=lambda: {name: [] for name in CHECKS})

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return {
            "kind": "verify",
            "max_param": self.max_param,
            "tuples": self.tuples,
            "checks": {name: {"failures": len(v), "examples": [list(t) for t in v[:10]]}
                       for name, v in self.failures.items()},
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [f"{self.tuples} tuples in {{0..{self.max_param}}}^6"]
        for name, bad in self.failures.items():
            status = "pass" if not bad else f"FAIL ({len(bad)})"
            lines.append(f"  {name:<32} {status}")
            for tup in bad[:10]:
                lines.append(f"      counterexample {','.join(map(str, tup))}")
        return "\n".join(lines) + "\n"


def run_verify(max_param: int, workers: int = 1) -> VerifyReport:
    if max_param < 0:
        raise ValueError("max_param must be non-negative")
    tuples = list(itertools.product(range(max_param + 1), repeat=6))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check_tuple, tuples, chunksize=256))
    else:
        results = [check_tuple(t) for t in tuples]
    report = VerifyReport(max_param, len(tuples))
    for tup, failed in zip(tuples, results):
        for name in failed:
            report.failures[name].append(tup)
    return report
