"""Feedback gain metrics relative to the same channel without feedback."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ldic.converse import capacity_region, no_feedback, perfect_level
from ldic.geometry import RateRegion, boundary_max, breakpoints, sup_linear
from ldic.model import ChannelParams, validate

METRICS = ("delta1", "delta2", "sigma", "any")


@dataclass(frozen=True)
class GainReport:
    delta1: Fraction
    delta2: Fraction
    sigma: Fraction
    argmax_rj_for_delta1: Fraction
    argmax_rj_for_delta2: Fraction
    baseline: ChannelParams
    subject: ChannelParams

    def metric(self, name: str) -> Fraction:
        if name == "any":
            return max(self.delta1, self.delta2, self.sigma)
        return getattr(self, name)


def sum_gain(subject: ChannelParams, *, _regions=None) -> Fraction:
    with_fb, without = _regions or _pair(subject)
    return sup_linear(with_fb, 1, 1) - sup_linear(without, 1, 1)


def _pair(subject: ChannelParams) -> tuple[RateRegion, RateRegion]:
    return capacity_region(subject), capacity_region(no_feedback(subject))


def gain_profile(with_fb: RateRegion, without: RateRegion, i: int):
    """Candidate points ``(v, g(v))`` of the individual-rate gain for user ``i``.

    ``g(v)`` is the increase of the largest ``R_i`` at fixed ``R_j = v``.
    Only slices that are nonempty without feedback are considered; ``g`` is
    piecewise linear there, so its maximum sits on a candidate.
    """
    j = 2 if i == 1 else 1
    v_max = without.axis_max(j)
    cands = {Fraction(0), v_max}
    for v in breakpoints(with_fb, j) + breakpoints(without, j):
        if 0 <= v <= v_max:
            cands.add(v)
    return [(v, boundary_max(with_fb, j, v) - boundary_max(without, j, v))
            for v in sorted(cands)]


def individual_gain(subject: ChannelParams, i: int, *, _regions=None) -> tuple[Fraction, Fraction]:
    """Largest gain in ``R_i`` over the other user's rate, with a witness rate.

    The witness is the smallest positive ``R_j`` attaining the maximum; it is
    ``0`` only when the supremum is approached as ``R_j -> 0+``.
    """
    if i not in (1, 2):
        raise ValueError(f"user index must be 1 or 2, got {i}")
    with_fb, without = _regions or _pair(subject)
    profile = gain_profile(with_fb, without, i)
    best = max(g for _, g in profile)
    hits = [v for v, g in profile if g == best]
    positive = [v for v in hits if v > 0]
    return best, (positive[0] if positive else hits[0])


def gain_report(subject: ChannelParams) -> GainReport:
    regions = _pair(subject)
    d1, w1 = individual_gain(subject, 1, _regions=regions)
    d2, w2 = individual_gain(subject, 2, _regions=regions)
    return GainReport(
        delta1=d1, delta2=d2, sigma=sum_gain(subject, _regions=regions),
        argmax_rj_for_delta1=w1, argmax_rj_for_delta2=w2,
        baseline=no_feedback(subject), subject=subject,
    )


def _report_at(args):
    base, fb1, fb2 = args
    return gain_report(validate((*base, fb1, fb2)))


def gain_surface(base: Sequence[int], fb1_range: range, fb2_range: range,
                 workers: int = 1) -> list[list[GainReport]]:
    """Reports on the ``(fb1, fb2)`` grid, row-major by ``fb1``."""
    base = tuple(base)
    validate((*base, 0, 0))
    jobs = [(base, a, b) for a in fb1_range for b in fb2_range]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(_report_at, jobs, chunksize=16))
    else:
        flat = [_report_at(job) for job in jobs]
    width = len(fb2_range)
    return [flat[k:k + width] for k in range(0, len(flat), width)]


def metric_curve(base: Sequence[int], side: int, metric: str,
                 other_fb: int = 0) -> list[Fraction]:
    """Metric values as side ``side``'s feedback goes from 0 to its perfect level."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")
    top = perfect_level(validate((*base, 0, 0)), side)
    out = []
    for fb in range(top + 1):
        fbs = (fb, other_fb) if side == 1 else (other_fb, fb)
        out.append(gain_report(validate((*base, *fbs))).metric(metric))
    return out


def feedback_thresholds(base: Sequence[int], side: int, metric: str = "any") -> int | None:
    """Last feedback strength with zero gain before gains turn positive for good.

    Returns ``None`` when the metric never becomes positive, or when the sweep
    does not split into a zero prefix followed by a positive suffix.
    """
    curve = metric_curve(base, side, metric)
    if not any(v > 0 for v in curve):
        return None
    t = max(k for k, v in enumerate(curve) if v == 0)
    if all(v > 0 for v in curve[t + 1:]) and all(v == 0 for v in curve[:t + 1]):
        return t
    return None
