"""Channel parameters of the two-user linear deterministic IC with noisy feedback."""

from __future__ import annotations

import enum
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from numbers import Integral

FIELD_NAMES = ("n11_fwd", "n22_fwd", "n12", "n21", "n11_fb", "n22_fb")


@dataclass(frozen=True)
class ChannelParams:
    """Bit-pipe counts: direct links, cross links, feedback links."""

    n11_fwd: int
    n22_fwd: int
    n12: int
    n21: int
    n11_fb: int
    n22_fb: int

    @property
    def q(self) -> int:
        return max(self.n11_fwd, self.n22_fwd, self.n12, self.n21)

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def direct(self, i: int) -> int:
        return self.n11_fwd if i == 1 else self.n22_fwd

    def cross(self, i: int, j: int) -> int:
        """Bit-pipes from transmitter ``j`` to receiver ``i`` (``n_ij``)."""
        if (i, j) == (1, 2):
            return self.n12
        if (i, j) == (2, 1):
            return self.n21
        raise ValueError(f"no cross link {i}{j}")

    def feedback(self, i: int) -> int:
        return self.n11_fb if i == 1 else self.n22_fb

    def swapped(self) -> ChannelParams:
        """Relabel users 1 <-> 2."""
        return ChannelParams(self.n22_fwd, self.n11_fwd, self.n21, self.n12,
                             self.n22_fb, self.n11_fb)

    def with_feedback(self, fb1: int, fb2: int) -> ChannelParams:
        return validate((self.n11_fwd, self.n22_fwd, self.n12, self.n21, fb1, fb2))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


def validate(raw) -> ChannelParams:
    """Build a :class:`ChannelParams` from six non-negative integers.

    Raises ``ValueError`` naming the offending field (1-based position).
    """
    values = tuple(raw)
    if len(values) != 6:
        raise ValueError(f"expected 6 parameters, got {len(values)}")
    for pos, (name, v) in enumerate(zip(FIELD_NAMES, values), start=1):
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise ValueError(f"field {pos} ({name}) must be an integer, got {v!r}")
        if v < 0:
            raise ValueError(f"field {pos} ({name}) must be non-negative, got {v}")
    return ChannelParams(*(int(v) for v in values))


def parse_params(text: str, count: int = 6) -> tuple[int, ...]:
    """Parse ``"a,b,c,..."`` into ``count`` integers (no sign checks)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"non-integer value in {text!r}") from None


def to_dict(p: ChannelParams) -> dict[str, int]:
    return {f.name: getattr(p, f.name) for f in fields(p)}


def from_dict(d: dict) -> ChannelParams:
    missing = [n for n in FIELD_NAMES if n not in d]
    if missing:
        raise ValueError(f"missing parameter fields: {', '.join(missing)}")
    return validate(tuple(d[n] for n in FIELD_NAMES))


def effective_q(p: ChannelParams) -> int:
    return p.q


class Regime(enum.Enum):
    VERY_WEAK = "VeryWeak"
    WEAK = "Weak"
    MODERATE = "Moderate"
    STRONG = "Strong"
    VERY_STRONG = "VeryStrong"
    UNDEFINED = "Undefined"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RegimePair:
    regime_1: Regime
    regime_2: Regime
    alpha_1: Fraction | None
    alpha_2: Fraction | None


# right-closed bin edges on alpha = n_ij / n_ii
_BINS = (
    (Fraction(1, 2), Regime.VERY_WEAK),
    (Fraction(2, 3), Regime.WEAK),
    (Fraction(1), Regime.MODERATE),
    (Fraction(2), Regime.STRONG),
)


def _regime(alpha: Fraction | None) -> Regime:
    if alpha is None:
        return Regime.UNDEFINED
    for edge, label in _BINS:
        if alpha <= edge:
            return label
    return Regime.VERY_STRONG


def classify_regimes(p: ChannelParams) -> RegimePair:
    """Label each receiver's interference regime from ``n_ij / n_ii``."""
    a1 = Fraction(p.n12, p.n11_fwd) if p.n11_fwd else None
    a2 = Fraction(p.n21, p.n22_fwd) if p.n22_fwd else None
    return RegimePair(_regime(a1), _regime(a2), a1, a2)
