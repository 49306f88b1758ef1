"""Monic orthogonal polynomial machinery on the real line.

The three-term recurrence

    P_{n+1}(x) = (x - b_{n+1}) P_n(x) - d_n P_{n-1}(x),   P_{-1} = 0, P_0 = 1,

with d_0 = 1 fixed by convention, is the single evaluation engine; every
perturbed family in this package is expressed as a transform of the
coefficient sequences (b, d) and then evaluated through it.

Indexing follows the recurrence exactly: b and d are 1-based, and d_0 = 1
is never stored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientCoefficients, InvalidPrepend, NonPositiveD
from .polyhom import P_ONE, P_ZERO, Poly

Scalar = complex


@dataclass(frozen=True)
class RealRecurrence:
    """Recurrence coefficient pair (b_1..b_N, d_1..d_N), both 1-based."""

    b: tuple[float, ...]
    d: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        object.__setattr__(self, "d", tuple(float(x) for x in self.d))
        for n, dn in enumerate(self.d, start=1):
            if dn == 0.0:
                raise NonPositiveD(f"d_{n} = 0 is not allowed")

    def __len__(self) -> int:
        return min(len(self.b), len(self.d))

    def b_at(self, n: int) -> float:
        """b_n, 1-based."""
        if not 1 <= n <= len(self.b):
            raise InsufficientCoefficients(n, len(self.b), "b coefficients")
        return self.b[n - 1]

    def d_at(self, n: int) -> float:
        """d_n, 1-based; d_0 = 1 by convention."""
        if n == 0:
            return 1.0
        if not 1 <= n <= len(self.d):
            raise InsufficientCoefficients(n, len(self.d), "d coefficients")
        return self.d[n - 1]

    def require(self, nb: int, nd: int) -> None:
        if len(self.b) < nb:
            raise InsufficientCoefficients(nb, len(self.b), "b coefficients")
        if len(self.d) < nd:
            raise InsufficientCoefficients(nd, len(self.d), "d coefficients")


def chebyshev_t(n: int = 64) -> "RealRecurrence":
    """First-kind Chebyshev coefficients b == 0, d_1 = 1/2, d_n = 1/4: the
    standard test fixture."""
    return RealRecurrence((0.0,) * n, (0.5,) + (0.25,) * (n - 1))


def chebyshev_u(n: int = 64) -> "RealRecurrence":
    """Second-kind Chebyshev coefficients b == 0, d == 1/4."""
    return RealRecurrence((0.0,) * n, (0.25,) * n)


def oprl_eval(rc: RealRecurrence, n: int, x: Scalar) -> list[Scalar]:
    """Values [P_0(x), ..., P_n(x)] of the monic polynomials at x."""
    if n >= 1:
        rc.require(n, n - 1)
    vals = [1.0 + 0j]
    prev, cur = 0j, 1.0 + 0j
    for k in range(n):
        nxt = (x - rc.b_at(k + 1)) * cur - rc.d_at(k) * prev
        vals.append(nxt)
        prev, cur = cur, nxt
    return vals


def oprl_polys(rc: RealRecurrence, n: int) -> list[Poly]:
    """Coefficient-form [P_0, ..., P_n] via the same recurrence."""
    if n >= 1:
        rc.require(n, n - 1)
    polys = [P_ONE]
    prev, cur = P_ZERO, P_ONE
    for k in range(n):
        nxt = cur.shift_up() - cur.scale(rc.b_at(k + 1)) - prev.scale(rc.d_at(k))
        polys.append(nxt)
        prev, cur = cur, nxt
    return polys


@dataclass(frozen=True)
class JacobiMatrix:
    """Leading N x N section of the monic Jacobi matrix (superdiagonal of ones)."""

    order: int
    diagonal: tuple[float, ...]
    subdiagonal: tuple[float, ...]

    def dense(self) -> np.ndarray:
        m = np.zeros((self.order, self.order))
        for i in range(self.order):
            m[i, i] = self.diagonal[i]
            if i + 1 < self.order:
                m[i, i + 1] = 1.0
                m[i + 1, i] = self.subdiagonal[i]
        return m


def jacobi_matrix(rc: RealRecurrence, n: int) -> JacobiMatrix:
    """Leading n x n section; det(xI - J_n) = P_n(x)."""
    rc.require(n, max(n - 1, 0))
    return JacobiMatrix(n, rc.b[:n], rc.d[: n - 1])


def shift_coefficients(rc: RealRecurrence, k: int) -> RealRecurrence:
    """Coefficients of the order-k associated family: b_{n+k}, d_{n+k}."""
    if k < 0:
        raise ValueError("shift order must be >= 0")
    if k > min(len(rc.b), len(rc.d)):
        raise InsufficientCoefficients(k, min(len(rc.b), len(rc.d)))
    return RealRecurrence(rc.b[k:], rc.d[k:])


def prepend_coefficients(rc: RealRecurrence, pre_b, pre_d) -> RealRecurrence:
    """Coefficients of the order-k anti-associated family.

    The k new pairs occupy indices 1..k (pre_b[0] becomes the new b_1) and
    the original ones follow at indices k+1, k+2, ...
    """
    pre_b = tuple(float(x) for x in pre_b)
    pre_d = tuple(float(x) for x in pre_d)
    if len(pre_b) != len(pre_d):
        raise InvalidPrepend("prepended b and d lists must have equal length")
    for dn in pre_d:
        if dn == 0.0:
            raise InvalidPrepend("prepended d entries must be nonzero")
    return RealRecurrence(pre_b + rc.b, pre_d + rc.d)


def orthonormal_scale(rc: RealRecurrence, n: int) -> float:
    """Leading coefficient gamma_n = (d_1 ... d_n)^{-1/2} of the orthonormal
    polynomial p_n = gamma_n P_n (gamma_0 = 1)."""
    rc.require(0, n)
    acc = 1.0
    for m in range(1, n + 1):
        dm = rc.d_at(m)
        if dm <= 0.0:
            raise NonPositiveD(f"d_{m} = {dm} must be positive")
        acc *= dm
    return acc ** -0.5
