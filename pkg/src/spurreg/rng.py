"""Seeded, stream-splittable random numbers.

A :class:`RngStream` is identified by ``(seed, stream_id)``. The same pair
always yields the same draw sequence, independent of process, thread count,
or how many other streams exist; distinct stream ids give statistically
independent sequences. Monte Carlo code assigns one stream per simulated
series (replication ``r`` uses streams ``2r`` and ``2r+1``), which makes
every experiment reproducible and embarrassingly parallel.

Algorithms (fixed; see also the kernel backends): uniforms come from
xoshiro256++ whose four state words are derived from ``(seed, stream_id)``
via the SplitMix64 finalizer; standard normals use the Marsaglia polar
method with the second value of each accepted pair cached. Determinism is
within-platform: the same libm supplies ``log``/``sqrt`` to both backends.
"""

from __future__ import annotations

from spurreg import kernels

_MASK = 0xFFFFFFFFFFFFFFFF


class RngStream:
    """One deterministic random stream, keyed by (seed, stream_id)."""

    __slots__ = ("seed", "stream_id", "_k")

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = seed & _MASK
        self.stream_id = stream_id & _MASK
        self._k = kernels.Rng(self.seed, self.stream_id)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def uniform(self) -> float:
        """Uniform draw in [0, 1)."""
        return self._k.uniform()

    def standard_normal(self) -> float:
        """One N(0, 1) draw."""
        return self._k.normal()

    def standard_normals(self, n: int):
        """Array of n independent N(0, 1) draws."""
        return self._k.normals(n)

    @property
    def kernel(self):
        """Backend state object consumed by the generation kernels."""
        return self._k


def standard_normal(rng: RngStream) -> float:
    """Draw one standard normal from the given stream."""
    return rng.standard_normal()
