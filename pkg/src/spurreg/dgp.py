"""Data-generating processes for trending series.

Two families, each with an optional structural-break variant:

* trend stationary (``ts``): level + linear trend + AR(1) noise started
  from its stationary distribution, optionally with level breaks (a jump of
  ``magnitude`` after the break date) and slope breaks (an extra trend of
  ``magnitude * (t - location)`` after the break date);
* integrated (``i1``): a random walk with drift, where level breaks shift
  the drift of the increments after the break date.

A series is a plain 1-D float64 numpy array indexed t = 1..T. Generation
is pure given ``(spec, T, rng)``: the same seed and stream id reproduce the
series bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from spurreg.errors import ParameterError
from spurreg.rng import RngStream

TS = "ts"
TS_BREAK = "ts-break"
I1 = "i1"
I1_BREAK = "i1-break"

_CASES = (TS, TS_BREAK, I1, I1_BREAK)

LEVEL = "level"
SLOPE = "slope"


@dataclass(frozen=True)
class BreakSpec:
    """One structural break.

    ``location`` is either an integer date 1 <= T_b < T, or a float
    fraction in (0, 1) resolved to floor(fraction * T) at generation time.
    """

    kind: str
    location: int | float
    magnitude: float

    def __post_init__(self):
        if self.kind not in (LEVEL, SLOPE):
            raise ParameterError(f"break kind must be 'level' or 'slope', got {self.kind!r}")
        if isinstance(self.location, float) and not self.location.is_integer():
            if not 0.0 < self.location < 1.0:
                raise ParameterError(
                    f"fractional break location must lie in (0, 1), got {self.location}"
                )
        elif int(self.location) < 1:
            raise ParameterError(f"integer break location must be >= 1, got {self.location}")

    def resolve(self, T: int) -> int:
        """Break date as an integer index, validated against the sample size."""
        if isinstance(self.location, float) and not self.location.is_integer():
            loc = int(math.floor(self.location * T))
        else:
            loc = int(self.location)
        if not 1 <= loc < T:
            raise ParameterError(f"break location {loc} outside 1 <= T_b < T for T={T}")
        return loc


@dataclass(frozen=True)
class DgpSpec:
    """Full description of one generating process.

    ``beta`` is the linear-trend slope for ``ts`` cases and the drift of
    the increments for ``i1`` cases; ``mu`` and ``phi`` apply to ``ts``
    cases only.
    """

    case: str
    mu: float = 0.0
    beta: float = 0.0
    phi: float = 0.0
    sigma: float = 1.0
    breaks: tuple[BreakSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "breaks", tuple(self.breaks))
        if self.case not in _CASES:
            raise ParameterError(f"unknown case {self.case!r}, expected one of {_CASES}")
        if self.is_ts and not abs(self.phi) < 1.0:
            raise ParameterError(f"AR coefficient must satisfy |phi| < 1, got {self.phi}")
        # sigma == 0 is allowed as the degenerate noiseless process.
        if self.sigma < 0:
            raise ParameterError(f"innovation sd must be >= 0, got {self.sigma}")
        if self.case in (TS, I1) and self.breaks:
            raise ParameterError(f"case {self.case!r} does not admit breaks")
        if self.case == I1_BREAK:
            bad = [b for b in self.breaks if b.kind != LEVEL]
            if bad:
                raise ParameterError(
                    "integrated processes admit only level (drift) breaks, "
                    f"got {bad[0].kind!r}"
                )

    @property
    def is_ts(self) -> bool:
        return self.case in (TS, TS_BREAK)


def as_series(values, name: str = "series") -> np.ndarray:
    """Validate and return a 1-D float64 series of length >= 2."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ParameterError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 2:
        raise ParameterError(f"{name} must have length >= 2, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{name} contains non-finite values")
    return arr


def _split_breaks(breaks, T):
    du = [(b.resolve(T), b.magnitude) for b in breaks if b.kind == LEVEL]
    dt = [(b.resolve(T), b.magnitude) for b in breaks if b.kind == SLOPE]

    def arrays(pairs):
        loc = np.asarray([p[0] for p in pairs], dtype=np.int64)
        mag = np.asarray([p[1] for p in pairs], dtype=np.float64)
        return loc, mag

    return arrays(du) + arrays(dt)


def generate(spec: DgpSpec, T: int, rng: RngStream) -> np.ndarray:
    """Simulate one series of length T from the given process."""
    if T < 2:
        raise ParameterError(f"sample size must be >= 2, got {T}")
    du_loc, du_mag, dt_loc, dt_mag = _split_breaks(spec.breaks, T)
    if spec.is_ts:
        return rng.kernel.ar1_series(
            T, spec.mu, spec.beta, spec.phi, spec.sigma, du_loc, du_mag, dt_loc, dt_mag
        )
    return rng.kernel.i1_series(T, spec.beta, spec.sigma, du_loc, du_mag)
