"""Outer bounds and the exact capacity region for given channel parameters."""

from __future__ import annotations

from dataclasses import dataclass

from ldic.geometry import HalfPlane, RateRegion, from_halfplanes
from ldic.model import ChannelParams


def pos(x: int) -> int:
    return x if x > 0 else 0


@dataclass(frozen=True)
class ConverseBounds:
    """Scalar right-hand sides of the capacity inequalities.

    ``r1_bound``/``r2_bound`` already take the minimum of the cut-set
    single-user bound and the feedback-dependent single-user bound.
    """

    r1_bound: int
    r2_bound: int
    sum_bound_cutset: int
    sum_bound_fb: int
    two_r1_plus_r2: int
    r1_plus_two_r2: int

    def halfplanes(self) -> list[HalfPlane]:
        return [
            HalfPlane(1, 0, self.r1_bound),
            HalfPlane(0, 1, self.r2_bound),
            HalfPlane(1, 1, self.sum_bound_cutset),
            HalfPlane(1, 1, self.sum_bound_fb),
            HalfPlane(2, 1, self.two_r1_plus_r2),
            HalfPlane(1, 2, self.r1_plus_two_r2),
        ]


def _users(p: ChannelParams, i: int):
    j = 2 if i == 1 else 1
    return (p.direct(i), p.direct(j), p.cross(i, j), p.cross(j, i),
            p.feedback(i), p.feedback(j))


def single_user_bounds(p: ChannelParams, i: int) -> tuple[int, int]:
    """The two single-rate bounds on ``R_i`` (cut-set, feedback-aided)."""
    nii, njj, nij, nji, _, fbj = _users(p, i)
    cutset = min(max(nii, nji), max(nii, nij))
    # fbj - (njj - nji)^+ may go negative; max with nii absorbs it
    with_fb = min(max(nii, nji), max(nii, fbj - pos(njj - nji)))
    return cutset, with_fb


def _fb_term(njj: int, nji: int, nij: int, fbj: int) -> int:
    return max(pos(njj - nji), nij, njj - pos(max(njj, nji) - fbj))


def weighted_bound(p: ChannelParams, i: int) -> int:
    """Right-hand side of the ``2 R_i + R_j`` bound."""
    nii, njj, nij, nji, _, fbj = _users(p, i)
    return max(nii, nji) + pos(nii - nij) + _fb_term(njj, nji, nij, fbj)


def converse_bounds(p: ChannelParams) -> ConverseBounds:
    n11, n22, n12, n21 = p.n11_fwd, p.n22_fwd, p.n12, p.n21
    sum_cutset = min(max(n22, n12) + pos(n11 - n12), max(n11, n21) + pos(n22 - n21))
    sum_fb = (max(pos(n11 - n12), n21, n11 - pos(max(n11, n12) - p.n11_fb))
              + max(pos(n22 - n21), n12, n22 - pos(max(n22, n21) - p.n22_fb)))
    return ConverseBounds(
        r1_bound=min(single_user_bounds(p, 1)),
        r2_bound=min(single_user_bounds(p, 2)),
        sum_bound_cutset=sum_cutset,
        sum_bound_fb=sum_fb,
        two_r1_plus_r2=weighted_bound(p, 1),
        r1_plus_two_r2=weighted_bound(p, 2),
    )


def capacity_region(p: ChannelParams) -> RateRegion:
    return from_halfplanes(converse_bounds(p).halfplanes())


def perfect_level(p: ChannelParams, i: int) -> int:
    """Smallest feedback strength that carries receiver ``i``'s whole output."""
    j = 2 if i == 1 else 1
    return max(p.direct(i), p.cross(i, j))


def no_feedback(p: ChannelParams) -> ChannelParams:
    return p.with_feedback(0, 0)


def perfect_feedback(p: ChannelParams) -> ChannelParams:
    return p.with_feedback(perfect_level(p, 1), perfect_level(p, 2))


def one_sided_perfect(p: ChannelParams, i: int) -> ChannelParams:
    if i == 1:
        return p.with_feedback(perfect_level(p, 1), 0)
    if i == 2:
        return p.with_feedback(0, perfect_level(p, 2))
    raise ValueError(f"user index must be 1 or 2, got {i}")


def outer_box(p: ChannelParams) -> tuple[int, int]:
    """Axis extents that always contain the capacity region."""
    return max(p.n11_fwd, p.n21), max(p.n22_fwd, p.n12)


__all__ = [
    "ConverseBounds", "converse_bounds", "capacity_region", "no_feedback",
    "perfect_feedback", "one_sided_perfect", "perfect_level", "outer_box",
    "single_user_bounds", "weighted_bound",
]
