from .cc import CcSpec, build_cc, firing_interval, greedy_cover, simulate_cc
from .counts import BoundKind, Bounds, format_big, mss_upper, state_bounds
from .lm import LmSpec, build_lm, simulate_lm
from .reflection import ReflectionSpec, build_reflection, simulate_reflection
from .signals import SimOutcome
