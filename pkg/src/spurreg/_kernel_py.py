"""Pure-Python kernel backend.

Implements the exact algorithms of the compiled backend (``_kernel_cy``) so
that both produce bit-identical streams on the same platform:

* uniform generator: xoshiro256++ (Blackman & Vigna), state words derived
  from ``(seed, stream_id)`` through the SplitMix64 finalizer;
* standard normals: Marsaglia polar method with the spare value cached;
* series recursions and Wiener-path accumulations as plain sequential
  double-precision loops.

Everything here is deliberately loop-based: the compiled twin mirrors each
floating-point operation in the same order.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_STREAM_SALT = 0x5851F42D4C957F2D
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


def _mix(z: int) -> int:
    """SplitMix64 finalizer (Stafford variant 13)."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class Rng:
    """xoshiro256++ stream keyed by (seed, stream_id), with polar normals."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3", "_has_spare", "_spare")

    def __init__(self, seed: int, stream_id: int = 0):
        key = _mix(seed & _MASK) ^ _mix((stream_id & _MASK) ^ _STREAM_SALT)
        s = key
        words = []
        for _ in range(4):
            s = (s + _GOLDEN) & _MASK
            words.append(_mix(s))
        if not any(words):  # all-zero state is invalid for xoshiro
            words[0] = _GOLDEN
        self._s0, self._s1, self._s2, self._s3 = words
        self._has_spare = False
        self._spare = 0.0

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        x = (s0 + s3) & _MASK
        result = (((x << 23) | (x >> 41)) + s0) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * _INV_2_53

    def normal(self) -> float:
        """Standard normal via the polar method; the pair partner is cached."""
        if self._has_spare:
            self._has_spare = False
            return self._spare
        while True:
            u = 2.0 * self.uniform() - 1.0
            v = 2.0 * self.uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                break
        f = math.sqrt(-2.0 * math.log(s) / s)
        self._spare = v * f
        self._has_spare = True
        return u * f

    def normals(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=np.float64)
        normal = self.normal
        for i in range(n):
            out[i] = normal()
        return out

    def ar1_series(self, T, mu, beta, phi, sigma, du_loc, du_mag, dt_loc, dt_mag):
        """Trend-stationary series: deterministic part plus AR(1) noise.

        The AR state starts from its stationary law. Level breaks add their
        magnitude for t > loc; slope breaks add magnitude*(t - loc).
        """
        out = np.empty(T, dtype=np.float64)
        n_du = len(du_loc)
        n_dt = len(dt_loc)
        u = math.sqrt(sigma * sigma / (1.0 - phi * phi)) * self.normal()
        for i in range(T):
            t = i + 1
            tf = float(t)
            u = phi * u + sigma * self.normal()
            det = mu
            for j in range(n_du):
                if t > du_loc[j]:
                    det += du_mag[j]
            det = det + beta * tf
            for j in range(n_dt):
                if t > dt_loc[j]:
                    det += dt_mag[j] * (tf - float(dt_loc[j]))
            out[i] = det + u
        return out

    def i1_series(self, T, beta, sigma, du_loc, du_mag):
        """Random walk with drift; level breaks shift the drift for t > loc."""
        out = np.empty(T, dtype=np.float64)
        n_du = len(du_loc)
        x = 0.0
        for i in range(T):
            t = i + 1
            inc = beta
            for j in range(n_du):
                if t > du_loc[j]:
                    inc += du_mag[j]
            eps = self.normal()
            x = x + inc + sigma * eps
            out[i] = x
        return out

    def wiener_path(self, n_steps: int) -> np.ndarray:
        """Discretized standard Wiener path: n_steps+1 values, starts at 0."""
        out = np.empty(n_steps + 1, dtype=np.float64)
        sdt = math.sqrt(1.0 / n_steps)
        w = 0.0
        out[0] = 0.0
        for i in range(n_steps):
            w = w + sdt * self.normal()
            out[i + 1] = w
        return out

    def wiener_sums(self, n_steps: int):
        """Fused pass over two fresh independent paths W, V.

        Returns left-endpoint Riemann sums
        (intW, int_tW, intW2, W1, intV, V1, itoWV); per step the W increment
        is drawn before the V increment.
        """
        dt = 1.0 / n_steps
        sdt = math.sqrt(dt)
        w = 0.0
        v = 0.0
        int_w = 0.0
        int_tw = 0.0
        int_w2 = 0.0
        int_v = 0.0
        ito = 0.0
        for i in range(n_steps):
            ti = i * dt
            int_w += w * dt
            int_tw += ti * w * dt
            int_w2 += w * w * dt
            int_v += v * dt
            dw = sdt * self.normal()
            dv = sdt * self.normal()
            ito += w * dv
            w += dw
            v += dv
        return (int_w, int_tw, int_w2, w, int_v, v, ito)
