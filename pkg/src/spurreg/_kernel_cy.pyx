# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Bit-compatible twin of ``_kernel_py``: same xoshiro256++ / SplitMix64
seeding, same polar normals, same sequential double-precision recursions.
Keep the floating-point operation order in both files in lockstep; the
build disables FP contraction so results match the interpreter exactly.
"""

from libc.math cimport log, sqrt
from libc.stdint cimport int64_t, uint64_t

import numpy as np

BACKEND = "cython"

cdef uint64_t _GOLDEN = 0x9E3779B97F4A7C15ULL
cdef uint64_t _STREAM_SALT = 0x5851F42D4C957F2DULL
cdef double _INV_2_53 = 1.0 / 9007199254740992.0


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef class Rng:
    """xoshiro256++ stream keyed by (seed, stream_id), with polar normals."""

    cdef uint64_t s0, s1, s2, s3
    cdef bint has_spare
    cdef double spare

    def __init__(self, seed, stream_id=0):
        cdef uint64_t sd = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
        cdef uint64_t st = <uint64_t> (stream_id & 0xFFFFFFFFFFFFFFFF)
        cdef uint64_t key = _mix(sd) ^ _mix(st ^ _STREAM_SALT)
        cdef uint64_t s = key
        cdef uint64_t w[4]
        cdef int i
        for i in range(4):
            s = s + _GOLDEN
            w[i] = _mix(s)
        if w[0] == 0 and w[1] == 0 and w[2] == 0 and w[3] == 0:
            w[0] = _GOLDEN
        self.s0, self.s1, self.s2, self.s3 = w[0], w[1], w[2], w[3]
        self.has_spare = False
        self.spare = 0.0

    cdef uint64_t _next(self) nogil:
        cdef uint64_t result = _rotl(self.s0 + self.s3, 23) + self.s0
        cdef uint64_t t = self.s1 << 17
        self.s2 ^= self.s0
        self.s3 ^= self.s1
        self.s1 ^= self.s2
        self.s0 ^= self.s3
        self.s2 ^= t
        self.s3 = _rotl(self.s3, 45)
        return result

    cdef double _uniform(self) nogil:
        return <double> (self._next() >> 11) * _INV_2_53

    cdef double _normal(self) nogil:
        cdef double u, v, s, f
        if self.has_spare:
            self.has_spare = False
            return self.spare
        while True:
            u = 2.0 * self._uniform() - 1.0
            v = 2.0 * self._uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                break
        f = sqrt(-2.0 * log(s) / s)
        self.spare = v * f
        self.has_spare = True
        return u * f

    def next_uint64(self):
        return self._next()

    def uniform(self):
        return self._uniform()

    def normal(self):
        return self._normal()

    def normals(self, n):
        out = np.empty(n, dtype=np.float64)
        cdef double[::1] o = out
        cdef Py_ssize_t i
        for i in range(<Py_ssize_t> n):
            o[i] = self._normal()
        return out

    def ar1_series(self, T, mu, beta, phi, sigma, du_loc, du_mag, dt_loc, dt_mag):
        out = np.empty(T, dtype=np.float64)
        cdef double[::1] o = out
        cdef int64_t[::1] dul = du_loc
        cdef double[::1] dum = du_mag
        cdef int64_t[::1] dtl = dt_loc
        cdef double[::1] dtm = dt_mag
        cdef double c_mu = mu, c_beta = beta, c_phi = phi, c_sigma = sigma
        cdef Py_ssize_t n = T, n_du = dul.shape[0], n_dt = dtl.shape[0]
        cdef Py_ssize_t i, j
        cdef int64_t t
        cdef double tf, u, det
        u = sqrt(c_sigma * c_sigma / (1.0 - c_phi * c_phi)) * self._normal()
        for i in range(n):
            t = i + 1
            tf = <double> t
            u = c_phi * u + c_sigma * self._normal()
            det = c_mu
            for j in range(n_du):
                if t > dul[j]:
                    det += dum[j]
            det = det + c_beta * tf
            for j in range(n_dt):
                if t > dtl[j]:
                    det += dtm[j] * (tf - <double> dtl[j])
            o[i] = det + u
        return out

    def i1_series(self, T, beta, sigma, du_loc, du_mag):
        out = np.empty(T, dtype=np.float64)
        cdef double[::1] o = out
        cdef int64_t[::1] dul = du_loc
        cdef double[::1] dum = du_mag
        cdef double c_beta = beta, c_sigma = sigma
        cdef Py_ssize_t n = T, n_du = dul.shape[0]
        cdef Py_ssize_t i, j
        cdef int64_t t
        cdef double x = 0.0, inc, eps
        for i in range(n):
            t = i + 1
            inc = c_beta
            for j in range(n_du):
                if t > dul[j]:
                    inc += dum[j]
            eps = self._normal()
            x = x + inc + c_sigma * eps
            o[i] = x
        return out

    def wiener_path(self, n_steps):
        out = np.empty(n_steps + 1, dtype=np.float64)
        cdef double[::1] o = out
        cdef Py_ssize_t n = n_steps
        cdef Py_ssize_t i
        cdef double sdt = sqrt(1.0 / n_steps)
        cdef double w = 0.0
        o[0] = 0.0
        for i in range(n):
            w = w + sdt * self._normal()
            o[i + 1] = w
        return out

    def wiener_sums(self, n_steps):
        cdef Py_ssize_t n = n_steps
        cdef Py_ssize_t i
        cdef double dt = 1.0 / n_steps
        cdef double sdt = sqrt(dt)
        cdef double w = 0.0, v = 0.0
        cdef double int_w = 0.0, int_tw = 0.0, int_w2 = 0.0, int_v = 0.0, ito = 0.0
        cdef double ti, dw, dv
        for i in range(n):
            ti = i * dt
            int_w += w * dt
            int_tw += ti * w * dt
            int_w2 += w * w * dt
            int_v += v * dt
            dw = sdt * self._normal()
            dv = sdt * self._normal()
            ito += w * dv
            w += dw
            v += dv
        return (int_w, int_tw, int_w2, w, int_v, v, ito)
