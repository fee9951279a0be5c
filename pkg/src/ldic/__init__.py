"""Capacity regions of the two-user linear deterministic interference channel
with noisy channel-output feedback, computed in exact rational arithmetic."""

from ldic.achievability import achievable_region_fm, fm_project, split_rate_system, theta_table
from ldic.converse import capacity_region, converse_bounds
from ldic.gains import feedback_thresholds, gain_report
from ldic.geometry import HalfPlane, RateRegion, from_halfplanes
from ldic.kernels import BACKEND
from ldic.model import ChannelParams, classify_regimes, validate

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ChannelParams", "HalfPlane", "RateRegion", "achievable_region_fm",
    "capacity_region", "classify_regimes", "converse_bounds", "feedback_thresholds",
    "fm_project", "from_halfplanes", "gain_report", "split_rate_system", "theta_table",
    "validate",
]
