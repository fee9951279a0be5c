"""Bit-exact simulator of the channel over GF(2).

Words are stored as Python ints. Level 1 is the most significant bit-pipe:
in a word of length ``q``, level ``m`` is bit ``q - m`` of the integer, so
the lower shift ``S^k`` is a right shift by ``k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ldic.converse import pos
from ldic.model import ChannelParams


@dataclass(frozen=True)
class BitWord:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 0 or not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} levels")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitWord:
        v = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0/1, got {b!r}")
            v = (v << 1) | b
        return cls(v, len(bits))

    @classmethod
    def parse(cls, text: str) -> BitWord:
        if text == "-":
            return cls(0, 0)
        return cls.from_bits([int(c) for c in text])

    @classmethod
    def zeros(cls, length: int) -> BitWord:
        return cls(0, length)

    @classmethod
    def unit(cls, level: int, length: int) -> BitWord:
        if not 1 <= level <= length:
            raise ValueError(f"level {level} outside 1..{length}")
        return cls(1 << (length - level), length)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - m)) & 1 for m in range(1, self.length + 1))

    def level(self, m: int) -> int:
        return (self.value >> (self.length - m)) & 1

    def levels_set(self) -> list[int]:
        return [m for m in range(1, self.length + 1) if self.level(m)]

    def __xor__(self, other: BitWord) -> BitWord:
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitWord(self.value ^ other.value, self.length)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return "".join(map(str, self.bits)) if self.length else "-"


def shift_apply(k: int, w: BitWord) -> BitWord:
    """Multiply by ``S^k``: every level moves ``k`` steps down."""
    if not 0 <= k <= w.length:
        raise ValueError(f"shift {k} outside 0..{w.length}")
    return BitWord(w.value >> k, w.length)


def forward(x1: BitWord, x2: BitWord, p: ChannelParams) -> tuple[BitWord, BitWord]:
    q = p.q
    if x1.length != q or x2.length != q:
        raise ValueError(f"input words must have length q={q}")
    y1 = shift_apply(q - p.n11_fwd, x1) ^ shift_apply(q - p.n12, x2)
    y2 = shift_apply(q - p.n22_fwd, x2) ^ shift_apply(q - p.n21, x1)
    return y1, y2


def signal_levels(p: ChannelParams, i: int) -> int:
    j = 2 if i == 1 else 1
    return max(p.direct(i), p.cross(i, j))


def feedback_window(p: ChannelParams, i: int) -> range:
    """Output levels of receiver ``i`` that reach transmitter ``i``."""
    m = signal_levels(p, i)
    f = min(p.feedback(i), m)
    start = p.q - m + 1
    return range(start, start + f)


def feedback_signal(y: BitWord, p: ChannelParams, i: int) -> BitWord:
    """Top ``min(fb_i, M_i)`` signal levels of receiver ``i``'s output.

    Feedback noise removes the bottom of the output, so the fragment is the
    upper part of the ``M_i = max(n_ii, n_ij)`` signal levels.
    """
    m = signal_levels(p, i)
    f = min(p.feedback(i), m)
    return BitWord((y.value >> (m - f)) & ((1 << f) - 1), f)


def pad_feedback(fragment: BitWord, q: int) -> BitWord:
    """Prefix a fragment with zeros up to length ``q``."""
    return BitWord(fragment.value, q)


# --- signal decomposition --------------------------------------------------

INPUT_PARTS = ("C", "P", "D", "Q", "DF", "DG", "CF", "CG", "U")
OUTPUT_PARTS = ("YQ", "YFB", "YG")


@dataclass(frozen=True)
class Decomposition:
    """Level ranges (1-based, MSB first) of user ``i``'s input and output.

    ``CF``/``CG`` split the common part by visibility in the *other*
    receiver's feedback link; ``DF``/``DG`` do the same for ``D``.
    """

    user: int
    q: int
    ranges: dict = field(default_factory=dict)

    def dims(self) -> dict[str, int]:
        return {k: len(r) for k, r in self.ranges.items()}

    def labels(self, level: int) -> list[str]:
        return [k for k in INPUT_PARTS if level in self.ranges[k]]


def decomposition_dims(p: ChannelParams, i: int) -> dict[str, int]:
    """Closed-form dimensions of each part for user ``i``."""
    j = 2 if i == 1 else 1
    nii, njj = p.direct(i), p.direct(j)
    nij, nji = p.cross(i, j), p.cross(j, i)
    fbi, fbj = p.feedback(i), p.feedback(j)
    q = p.q
    c = min(nii, nji)
    d = pos(nji - nii)
    df = min(d, pos(fbj - nii - min(pos(njj - nji), nij) - pos(pos(njj - nij) - nji)))
    cf_df = pos(min(fbj, max(njj, nji)) - pos(njj - nji))
    cf = cf_df - df
    mi = max(nii, nij)
    return {
        "C": c,
        "P": pos(nii - nji),
        "D": d,
        "Q": q - max(nii, nji),
        "DF": df,
        "DG": d - df,
        "CF": cf,
        "CG": c - cf,
        "U": min(njj, nij) - min(pos(njj - nji), nij) + pos(nji - njj),
        "YQ": q - mi,
        "YFB": min(fbi, mi),
        "YG": pos(mi - fbi),
    }


def decompose(p: ChannelParams, i: int) -> Decomposition:
    if i not in (1, 2):
        raise ValueError(f"user index must be 1 or 2, got {i}")
    d = decomposition_dims(p, i)
    q = p.q
    c = d["C"]
    top = q - d["YQ"]
    ranges = {
        "C": range(1, c + 1),
        "P": range(c + 1, c + d["P"] + 1),
        "D": range(c + 1, c + d["D"] + 1),
        "Q": range(q - d["Q"] + 1, q + 1),
        "CF": range(1, d["CF"] + 1),
        "CG": range(d["CF"] + 1, c + 1),
        "DF": range(c + 1, c + d["DF"] + 1),
        "DG": range(c + d["DF"] + 1, c + d["D"] + 1),
        "U": range(1, d["U"] + 1),
        "YQ": range(1, d["YQ"] + 1),
        "YFB": range(q - top + 1, q - top + d["YFB"] + 1),
        "YG": range(q - d["YG"] + 1, q + 1),
    }
    return Decomposition(i, q, ranges)


def _inject(p: ChannelParams, i: int, level: int) -> tuple[BitWord, BitWord]:
    """Outputs at (own receiver, other receiver) for a unit input of user ``i``."""
    q = p.q
    x = BitWord.unit(level, q)
    z = BitWord.zeros(q)
    y1, y2 = forward(x, z, p) if i == 1 else forward(z, x, p)
    return (y1, y2) if i == 1 else (y2, y1)


def _common_levels(p: ChannelParams, i: int) -> set[int]:
    out = set()
    for m in range(1, p.q + 1):
        own, other = _inject(p, i, m)
        if own and other:
            out.add(m)
    return out


def dims_oracle(p: ChannelParams, i: int) -> dict[str, int]:
    """Dimensions measured by tracing unit inputs through the channel."""
    j = 2 if i == 1 else 1
    q = p.q
    counts = dict.fromkeys(INPUT_PARTS + OUTPUT_PARTS, 0)

    # where user j's levels land at receiver j, and which of them are common
    j_positions = {}
    for m in range(1, q + 1):
        own, _ = _inject(p, j, m)
        if own:
            j_positions[m] = own.levels_set()[0]
    j_common = {j_positions[m] for m in _common_levels(p, j) if m in j_positions}
    j_any = set(j_positions.values())

    for m in range(1, q + 1):
        own, other = _inject(p, i, m)
        seen_fb = bool(feedback_signal(other, p, j))
        if own and other:
            counts["C"] += 1
            counts["CF" if seen_fb else "CG"] += 1
        elif own:
            counts["P"] += 1
        elif other:
            counts["D"] += 1
            counts["DF" if seen_fb else "DG"] += 1
        else:
            counts["Q"] += 1
        if other:
            level = other.levels_set()[0]
            if level in j_common or level not in j_any:
                counts["U"] += 1

    # receiver i's output levels reached by either transmitter
    reached = set()
    for user in (1, 2):
        for m in range(1, q + 1):
            own, other = _inject(p, user, m)
            y = own if user == i else other
            if y:
                reached.add(y.levels_set()[0])
    visible = {lv for lv in reached
               if feedback_signal(BitWord.unit(lv, q), p, i)}
    counts["YFB"] = len(visible)
    counts["YG"] = len(reached) - len(visible)
    counts["YQ"] = q - len(reached)
    return counts


# --- sessions ----------------------------------------------------------------

Policy = Callable[[int, Sequence[BitWord]], BitWord]


@dataclass(frozen=True)
class TraceStep:
    n: int
    x1: BitWord
    x2: BitWord
    y1: BitWord
    y2: BitWord
    fb1: BitWord
    fb2: BitWord


@dataclass
class SessionTrace:
    """Per-use record; ``fb*`` at use ``n`` is what arrived from use ``n - 1``."""

    params: ChannelParams
    steps: list[TraceStep] = field(default_factory=list)

    HEADER = "# n\tx1\tx2\ty1\ty2\tfb1\tfb2"

    def dump(self) -> str:
        lines = [self.HEADER]
        for s in self.steps:
            lines.append("\t".join([str(s.n)] + [str(w) for w in
                                                  (s.x1, s.x2, s.y1, s.y2, s.fb1, s.fb2)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, params: ChannelParams, text: str) -> SessionTrace:
        trace = cls(params)
        for line in text.splitlines():
            if not line or line.startswith("#"):
                continue
            n, *words = line.split("\t")
            trace.steps.append(TraceStep(int(n), *(BitWord.parse(w) for w in words)))
        return trace


def run_session(policy1: Policy, policy2: Policy, p: ChannelParams, uses: int) -> SessionTrace:
    """Drive both encoders for ``uses`` channel uses with one-use feedback delay.

    Each policy is called as ``policy(n, fragments)`` where ``fragments`` are
    the feedback words from uses ``1 .. n-1``.
    """
    if uses < 1:
        raise ValueError("need at least one channel use")
    q = p.q
    trace = SessionTrace(p)
    seen = {1: [], 2: []}
    fb = {i: BitWord.zeros(len(feedback_window(p, i))) for i in (1, 2)}
    for n in range(1, uses + 1):
        xs = {}
        for i, policy in ((1, policy1), (2, policy2)):
            x = policy(n, tuple(seen[i]))
            if not isinstance(x, BitWord) or x.length != q:
                raise ValueError(f"policy {i} returned a word of the wrong length at use {n}")
            xs[i] = x
        y1, y2 = forward(xs[1], xs[2], p)
        trace.steps.append(TraceStep(n, xs[1], xs[2], y1, y2, fb[1], fb[2]))
        fb = {1: feedback_signal(y1, p, 1), 2: feedback_signal(y2, p, 2)}
        seen[1].append(fb[1])
        seen[2].append(fb[2])
    return trace


def zero_policy(q: int) -> Policy:
    return lambda n, fragments: BitWord.zeros(q)


def impulse_policy(q: int, level: int = 1, at_use: int = 1) -> Policy:
    """A single 1 at ``level`` during use ``at_use``; silence otherwise."""
    if q and not 1 <= level <= q:
        raise ValueError(f"impulse level {level} outside 1..{q}")

    def policy(n, fragments):
        return BitWord.unit(level, q) if n == at_use and q else BitWord.zeros(q)
    return policy


def random_policy(q: int, seed: int) -> Policy:
    rng = random.Random(seed)
    return lambda n, fragments: BitWord(rng.getrandbits(q) if q else 0, q)


def echo_policy(q: int, first: BitWord) -> Policy:
    """Send ``first``, then resend the latest feedback fragment on the top levels."""
    if first.length != q:
        raise ValueError("first word must have length q")

    def policy(n, fragments):
        if not fragments:
            return first
        frag = fragments[-1]
        return BitWord(frag.value << (q - frag.length), q)
    return policy


POLICIES = ("zero", "impulse", "random", "echo")


def make_policy(name: str, q: int, user: int, seed: int = 0, level: int = 1) -> Policy:
    """Built-in policy by name; ``seed`` is offset by user so both differ."""
    if name == "zero":
        return zero_policy(q)
    if name == "impulse":
        return impulse_policy(q, level)
    if name == "random":
        return random_policy(q, seed * 2 + user)
    if name == "echo":
        rng = random.Random(seed * 2 + user)
        return echo_policy(q, BitWord(rng.getrandbits(q) if q else 0, q))
    raise ValueError(f"unknown policy {name!r}; choose from {', '.join(POLICIES)}")
