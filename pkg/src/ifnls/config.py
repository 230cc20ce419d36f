"""Tolerances and evaluation grids shared by the approximate checks.

Quantifiers like "for all t > 0" and "there exists n0" cannot be decided
from finite data; every check in this package replaces them with finite
grids and tail windows drawn from a ToleranceConfig.  Verdicts are only
ever claimed at the resolution these knobs provide.
"""

from dataclasses import dataclass, asdict

# Single far sample standing in for the t -> infinity limits.
T_LARGE = 1e9
# Cap for exponential bracketing when extracting level norms.
T_BRACKET_MAX = 1e12
# Largest t tried while hunting a boundedness witness.
BOUNDED_SEARCH_CAP = 1e9
# Pivot floor below which a basis matrix counts as degenerate.
PIVOT_FLOOR = 1e-12
# Step of the unit-interval grid used by witness searches.
WITNESS_GRID_STEP = 1.0 / 1024.0
# Iteration budget for bisections on monotone scalar maps.
BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class ToleranceConfig:
    """All numeric tolerances, grids and tail-window sizes in one place.

    eps_degree   comparison slack for values in [0, 1]
    eps_limit    slack for "tends to 0 / tends to 1" style statements
    eps_bisect   absolute width of the final bisection bracket
    t_grid       finite stand-in for "for all t > 0"
    tail_window  number of trailing terms a clean tail must cover
    r_levels     finite stand-in for "for all 0 < r < 1"
    """

    eps_degree: float = 1e-9
    eps_limit: float = 1e-6
    eps_bisect: float = 1e-10
    t_grid: tuple[float, ...] = (0.01, 0.1, 1.0, 10.0, 100.0)
    tail_window: int = 10
    r_levels: tuple[float, ...] = (0.5, 0.1, 0.01)

    def __post_init__(self):
        if self.eps_degree <= 0 or self.eps_limit <= 0 or self.eps_bisect <= 0:
            raise ValueError("tolerances must be positive")
        if not self.t_grid or any(t <= 0 for t in self.t_grid):
            raise ValueError("t_grid must be non-empty and strictly positive")
        if self.tail_window < 1:
            raise ValueError("tail_window must be at least 1")
        if not self.r_levels or any(not 0.0 < r < 1.0 for r in self.r_levels):
            raise ValueError("r_levels must lie strictly inside (0, 1)")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["t_grid"] = list(self.t_grid)
        d["r_levels"] = list(self.r_levels)
        return d


DEFAULT_CONFIG = ToleranceConfig()
