"""Achievable region of the rate-splitting / superposition scheme.

Each receiver contributes seven rate constraints whose right-hand sides
(``theta[l][i]``) have closed forms in the channel parameters. The region
is obtained either from the closed-form eliminated system or by projecting
the six split rates with a generic Fourier-Motzkin elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from ldic.converse import pos
from ldic.geometry import HalfPlane, RateRegion, from_halfplanes
from ldic.model import ChannelParams


@dataclass(frozen=True)
class ThetaTable:
    """``values[(l, i)]`` for ``l`` in 1..7 and receiver ``i`` in 1, 2."""

    values: dict

    def __call__(self, l: int, i: int) -> int:
        return self.values[(l, i)]

    def rows(self) -> list[tuple[int, int]]:
        return [(self(l, 1), self(l, 2)) for l in range(1, 8)]


def _hidden(p: ChannelParams, i: int) -> int:
    """Levels of receiver ``i``'s output below its feedback noise floor."""
    j = 2 if i == 1 else 1
    return pos(max(p.direct(i), p.cross(i, j)) - p.feedback(i))


def theta_table(p: ChannelParams) -> ThetaTable:
    t = {}
    for i, j in ((1, 2), (2, 1)):
        nii = p.direct(i)
        nij, nji = p.cross(i, j), p.cross(j, i)
        gi = _hidden(p, i)
        gj = _hidden(p, j)
        t[(1, i)] = pos(nij - gi)
        t[(2, i)] = max(nii, nij)
        t[(3, i)] = min(nij, gi)
        t[(4, i)] = pos(nii - nji)
        t[(5, i)] = max(pos(nii - nji), min(nij, gi))
        # common bits of user i that both receivers see, minus those hidden at j
        ha = min(nji, gj) - min(pos(nji - nii), gj)
        t[(6, i)] = ha + pos(nii - nji)
        t[(7, i)] = max(min(nij, gi), ha + pos(nii - nji))
    return ThetaTable(t)


def fm_bounds(t: ThetaTable) -> dict[str, int]:
    """Closed-form bounds after eliminating the split rates."""
    th = t
    return {
        "r1": min(th(2, 1), th(6, 1) + th(1, 2), th(4, 1) + th(1, 2) + th(3, 2)),
        "r2": min(th(2, 2), th(1, 1) + th(6, 2), th(1, 1) + th(3, 1) + th(4, 2)),
        "sum": min(th(2, 1) + th(4, 2), th(4, 1) + th(2, 2),
                   th(1, 1) + th(5, 1) + th(1, 2) + th(5, 2)),
        "2r1+r2": min(th(2, 1) + th(4, 1) + th(1, 2) + th(7, 2),
                      th(1, 1) + th(4, 1) + th(7, 1) + 2 * th(1, 2) + th(5, 2),
                      th(2, 1) + th(4, 1) + th(1, 2) + th(5, 2)),
        "r1+2r2": min(th(1, 1) + th(5, 1) + th(2, 2) + th(4, 2),
                      th(1, 1) + th(7, 1) + th(2, 2) + th(4, 2),
                      2 * th(1, 1) + th(5, 1) + th(1, 2) + th(4, 2) + th(7, 2)),
    }


def achievable_region_fm(t: ThetaTable) -> RateRegion:
    b = fm_bounds(t)
    return from_halfplanes([
        HalfPlane(1, 0, b["r1"]),
        HalfPlane(0, 1, b["r2"]),
        HalfPlane(1, 1, b["sum"]),
        HalfPlane(2, 1, b["2r1+r2"]),
        HalfPlane(1, 2, b["r1+2r2"]),
    ])


def dropped_sum_terms(t: ThetaTable) -> list[int]:
    """The seven sum-rate terms left out of the simplified sum bound."""
    th = t
    return [
        th(2, 1) + th(6, 2),
        th(6, 1) + th(2, 2),
        th(1, 1) + th(3, 1) + th(4, 1) + th(1, 2) + th(5, 2),
        th(1, 1) + th(7, 1) + th(1, 2) + th(5, 2),
        th(1, 1) + th(4, 1) + th(1, 2) + th(7, 2),
        th(1, 1) + th(5, 1) + th(1, 2) + th(3, 2) + th(4, 2),
        th(1, 1) + th(7, 1) + th(1, 2) + th(4, 2),
    ]


def kept_sum_terms(t: ThetaTable) -> list[int]:
    th = t
    return [th(2, 1) + th(4, 2), th(4, 1) + th(2, 2),
            th(1, 1) + th(5, 1) + th(1, 2) + th(5, 2)]


def sumrate_simplification_holds(t: ThetaTable) -> bool:
    """Every retained sum-rate term is at most every dropped one.

    This is strictly stronger than what the three-term sum bound needs and
    fails on many parameter tuples, e.g. ``(0, 0, 0, 1, 0, 0)``.
    """
    return max(kept_sum_terms(t)) <= min(dropped_sum_terms(t))


def sumrate_simplification_valid(t: ThetaTable) -> bool:
    """The three-term sum bound equals the full ten-term minimum."""
    return min(kept_sum_terms(t)) <= min(dropped_sum_terms(t))


# --- generic projection -------------------------------------------------

# Column order of the split system; R1 and R2 are the kept coordinates.
SPLIT_VARS = ("R1C1", "R1C2", "R1P", "R2C1", "R2C2", "R2P")
_COLS = ("R1C1", "R1C2", "R2C1", "R2C2", "R1", "R2")
DEFAULT_ORDER = ("R1C2", "R2C2", "R1C1", "R2C1")

Row = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class SplitRateSystem:
    """``sum(coef[v] * v) <= rhs`` over the six split rates (all >= 0)."""

    rows: tuple[tuple[dict, int], ...]

    def __iter__(self):
        return iter(self.rows)


def split_rate_system(t: ThetaTable) -> SplitRateSystem:
    rows = []
    for i, j in ((1, 2), (2, 1)):
        ic1, ic2, ip = f"R{i}C1", f"R{i}C2", f"R{i}P"
        jc1, jc2 = f"R{j}C1", f"R{j}C2"
        rows += [
            ({jc1: 1}, t(1, i)),
            ({ic1: 1, ic2: 1, ip: 1, jc1: 1, jc2: 1}, t(2, i)),
            ({jc2: 1}, t(3, i)),
            ({ip: 1}, t(4, i)),
            ({ip: 1, jc2: 1}, t(5, i)),
            ({ic2: 1, ip: 1}, t(6, i)),
            ({ic2: 1, ip: 1, jc2: 1}, t(7, i)),
        ]
    return SplitRateSystem(tuple(rows))


def _to_sum_coordinates(coef: dict) -> tuple[int, ...]:
    """Rewrite ``R_iP = R_i - R_iC1 - R_iC2`` and return a column vector."""
    out = dict.fromkeys(_COLS, 0)
    for name, c in coef.items():
        if name.endswith("P"):
            i = name[1]
            out[f"R{i}"] += c
            out[f"R{i}C1"] -= c
            out[f"R{i}C2"] -= c
        else:
            out[name] += c
    return tuple(out[c] for c in _COLS)


def _normalize(row: Row) -> Row:
    a, b = row
    g = gcd(*a, b)
    if g > 1:
        a, b = tuple(x // g for x in a), b // g
    return a, b


def _prune(rows: list[Row], protected: set[Row]) -> list[Row]:
    """Drop duplicates and rows implied coefficient-wise by another row.

    ``protected`` holds a sign row ``-x_k <= 0`` for every live column, so
    ``a.x <= b`` follows from ``a'.x <= b'`` whenever ``a' >= a`` entrywise
    and ``b' <= b``.
    """
    uniq = sorted(set(rows))
    keep = []
    for a, b in uniq:
        if (a, b) in protected:
            keep.append((a, b))
            continue
        dominated = any(
            (a2, b2) != (a, b) and b2 <= b and all(x2 >= x for x, x2 in zip(a, a2))
            for a2, b2 in uniq
        )
        if not dominated:
            keep.append((a, b))
    return keep


def eliminate(rows: list[Row], col: int) -> list[Row]:
    """One Fourier-Motzkin step removing column ``col``."""
    zero, plus, minus = [], [], []
    for a, b in rows:
        (zero if a[col] == 0 else plus if a[col] > 0 else minus).append((a, b))
    out = list(zero)
    for ap, bp in plus:
        for am, bm in minus:
            cp, cm = ap[col], -am[col]
            a = tuple(cm * x + cp * y for x, y in zip(ap, am))
            out.append(_normalize((a, cm * bp + cp * bm)))
    return out


def _unit(k: int, n: int) -> tuple[int, ...]:
    return tuple(-1 if m == k else 0 for m in range(n))


def fm_project(s: SplitRateSystem, order: Sequence[str] = DEFAULT_ORDER) -> RateRegion:
    """Project the split-rate polytope onto ``(R1, R2)``."""
    rows = [_normalize((_to_sum_coordinates(coef), rhs)) for coef, rhs in s]
    # the six split rates are non-negative; so are their sums R1, R2
    rows += [_normalize((_to_sum_coordinates({name: -1}), 0)) for name in SPLIT_VARS]
    live = list(_COLS)
    rows += [(_unit(k, len(live)), 0) for k in range(len(live))]
    if sorted(order) != sorted(DEFAULT_ORDER):
        raise ValueError(f"elimination order {order!r} must cover the four split parts")
    for name in order:
        col = live.index(name)
        rows = eliminate(rows, col)
        rows = [(a[:col] + a[col + 1:], b) for a, b in rows]
        live.pop(col)
        signs = {(_unit(k, len(live)), 0) for k in range(len(live))}
        rows = _prune([r for r in rows if any(r[0])], signs)
    return from_halfplanes(HalfPlane(a[0], a[1], b) for (a, b) in rows)
