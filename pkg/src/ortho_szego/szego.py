"""The bridge between coefficient data on [-1, 1] and on the unit circle.

A probability measure on [-1, 1] maps to one on the circle by folding,
and the two coefficient sequences determine each other:

    d_{n+1} = (1/4) (1 - a_{2n-1}) (1 - a_{2n}^2) (1 + a_{2n+1})
    b_{n+1} = (1/2) [a_{2n} (1 - a_{2n-1}) - a_{2n-2} (1 + a_{2n-1})]

with the conventions a_{-1} = -1 and a_{-2} = 0 (the latter is always
multiplied by 1 + a_{-1} = 0, so any finite value would do; 0 keeps the
code total).  The inverse direction solves the same pair for the a's.

The auxiliary sequence v_k = (1/2)(1 + a_k)(1 - a_{k-1}) carries the LU
factorization of J + I and a continued-fraction route from (b, d) to the
circle coefficients that bypasses the quadratic inversion entirely.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import (
    DivisionDegenerate,
    InsufficientCoefficients,
    SupportViolation,
    ZeroArgument,
)
from .oprl import RealRecurrence, jacobi_matrix, oprl_eval, orthonormal_scale
from .opuc import VerblunskySeq, kappa, opuc_eval

Scalar = complex

# A computed coefficient with |a| >= 1 - SUPPORT_TOL is rejected: downstream
# formulas divide by 1 -/+ a, so near-boundary values are garbage anyway.
SUPPORT_TOL = 1e-12

_PIVOT_TOL = 1e-13


def _alpha_conv(alpha: tuple[float, ...], n: int) -> float:
    """alpha_n with the bridge conventions at negative indices."""
    if n == -1:
        return -1.0
    if n == -2:
        return 0.0
    return alpha[n]


def _emit_checked(value: float, index: int) -> float:
    if abs(value) >= 1.0 - SUPPORT_TOL:
        raise SupportViolation(index, value)
    return value


@dataclass(frozen=True)
class VSeq:
    """LU pivot sequence v_0, v_1, ...; v_{-1} = 0 is implied."""

    v: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(float(x) for x in self.v))

    def __len__(self) -> int:
        return len(self.v)

    def at(self, k: int) -> float:
        if k == -1:
            return 0.0
        if not 0 <= k < len(self.v):
            raise InsufficientCoefficients(k + 1, len(self.v), "v entries")
        return self.v[k]


def geronimus_forward(vs: VerblunskySeq, n: int) -> RealRecurrence:
    """Recurrence pairs (b_1..b_n, d_1..d_n) of the folded measure on [-1, 1].

    Needs the real coefficients a_0 .. a_{2n-1}.
    """
    alpha = vs.real_view()
    if len(alpha) < 2 * n:
        raise InsufficientCoefficients(2 * n, len(alpha), "alpha coefficients")
    b, d = [], []
    for m in range(n):
        am1 = _alpha_conv(alpha, 2 * m - 1)
        am2 = _alpha_conv(alpha, 2 * m - 2)
        a_even = _alpha_conv(alpha, 2 * m)
        a_next = _alpha_conv(alpha, 2 * m + 1)
        d.append(0.25 * (1.0 - am1) * (1.0 - a_even**2) * (1.0 + a_next))
        b.append(0.5 * (a_even * (1.0 - am1) - am2 * (1.0 + am1)))
    return RealRecurrence(tuple(b), tuple(d))


def geronimus_inverse(rc: RealRecurrence, n: int) -> VerblunskySeq:
    """Circle coefficients a_0 .. a_{2n-1} of the unfolded measure.

    Solves the forward relations step by step, seeded with a_{-1} = -1 and
    a_{-2} = 0.  Raises SupportViolation as soon as a coefficient leaves
    (-1, 1): the line measure then cannot sit inside [-1, 1].
    """
    rc.require(n, n)
    alpha: list[float] = []

    def a(j: int) -> float:
        return _alpha_conv(tuple(alpha), j)

    for m in range(n):
        den = 1.0 - a(2 * m - 1)
        if abs(den) < _PIVOT_TOL:
            raise DivisionDegenerate(f"1 - a_{2 * m - 1} vanished")
        even = (2.0 * rc.b_at(m + 1) + (1.0 + a(2 * m - 1)) * a(2 * m - 2)) / den
        alpha.append(_emit_checked(even, 2 * m))
        den2 = den * (1.0 - even**2)
        if abs(den2) < _PIVOT_TOL:
            raise DivisionDegenerate(f"(1 - a_{2 * m - 1})(1 - a_{2 * m}^2) vanished")
        odd = -1.0 + 4.0 * rc.d_at(m + 1) / den2
        alpha.append(_emit_checked(odd, 2 * m + 1))
    return VerblunskySeq(tuple(alpha))


def v_from_alpha(vs: VerblunskySeq, n: int | None = None) -> VSeq:
    """v_k = (1/2)(1 + a_k)(1 - a_{k-1}) for k = 0..n-1 (so v_0 = 1 + a_0)."""
    alpha = vs.real_view()
    if n is None:
        n = len(alpha)
    if len(alpha) < n:
        raise InsufficientCoefficients(n, len(alpha), "alpha coefficients")
    return VSeq(tuple(
        0.5 * (1.0 + alpha[k]) * (1.0 - _alpha_conv(alpha, k - 1)) for k in range(n)
    ))


def alpha_from_v(v: VSeq, n: int | None = None) -> VerblunskySeq:
    """Invert v_from_alpha: a_k = -1 + 2 v_k / (1 - a_{k-1}), a_{-1} = -1."""
    if n is None:
        n = len(v)
    prev = -1.0
    alpha = []
    for k in range(n):
        den = 1.0 - prev
        if abs(den) < _PIVOT_TOL:
            raise DivisionDegenerate(f"1 - a_{k - 1} vanished")
        ak = -1.0 + 2.0 * v.at(k) / den
        alpha.append(_emit_checked(ak, k))
        prev = ak
    return VerblunskySeq(tuple(alpha))


def v_from_recurrence(rc: RealRecurrence, n: int) -> VSeq:
    """v_0 .. v_{n-1} straight from (b, d) by peeling the continued fraction:

        v_{2k} = b_{k+1} + 1 - v_{2k-1},    v_{2k+1} = d_{k+1} / v_{2k}.

    DivisionDegenerate signals a vanishing pivot, i.e. J + I has no LU
    factorization and the support is not admissible.
    """
    out: list[float] = []
    for j in range(n):
        if j % 2 == 0:
            k = j // 2
            prev_odd = out[j - 1] if j >= 1 else 0.0
            out.append(rc.b_at(k + 1) + 1.0 - prev_odd)
        else:
            k = (j - 1) // 2
            piv = out[j - 1]
            dk = rc.d_at(k + 1)
            if abs(piv) < _PIVOT_TOL * (1.0 + abs(dk)):
                raise DivisionDegenerate(f"pivot v_{j - 1} vanished")
            out.append(dk / piv)
    return VSeq(tuple(out))


@dataclass(frozen=True)
class LuCheckResult:
    """Entrywise comparison of J + I against the bidiagonal product."""

    ok: bool
    max_abs_error: float
    mismatches: tuple[tuple[int, int, float, float], ...]  # (row, col, got, want)

    def __bool__(self) -> bool:
        return self.ok


def lu_check(rc: RealRecurrence, v: VSeq, n: int, tol: float = 1e-12) -> LuCheckResult:
    """Verify (J + I)_n = L_n U_n entrywise.

    L is unit lower bidiagonal with subdiagonal v_1, v_3, v_5, ...; U is
    upper bidiagonal with diagonal v_0, v_2, v_4, ... and unit superdiagonal.
    """
    if len(v) < 2 * n - 1:
        raise InsufficientCoefficients(2 * n - 1, len(v), "v entries")
    jm = jacobi_matrix(rc, n).dense() + np.eye(n)
    lo = np.eye(n)
    up = np.zeros((n, n))
    for i in range(n):
        up[i, i] = v.at(2 * i)
        if i + 1 < n:
            lo[i + 1, i] = v.at(2 * i + 1)
            up[i, i + 1] = 1.0
    prod = lo @ up
    diff = prod - jm
    mism = []
    for i in range(n):
        for j in range(n):
            if abs(diff[i, j]) > tol:
                mism.append((i, j, float(prod[i, j]), float(jm[i, j])))
    worst = float(np.max(np.abs(diff))) if n else 0.0
    return LuCheckResult(not mism, worst, tuple(mism))


def map_x_to_z(x: Scalar) -> Scalar:
    """The root z of z^2 - 2xz + 1 = 0 inside the closed unit disc.

    On the cut x in (-1, 1) both roots sit on the circle; the one with
    nonnegative imaginary part is returned.
    """
    x = complex(x)
    w = cmath.sqrt(x - 1.0) * cmath.sqrt(x + 1.0)
    z1, z2 = x - w, x + w
    if abs(abs(z1) - abs(z2)) <= 1e-12 * (abs(z1) + abs(z2)):
        return z1 if z1.imag >= z2.imag else z2
    return z1 if abs(z1) < abs(z2) else z2


def map_z_to_x(z: Scalar) -> Scalar:
    """x = (z + 1/z) / 2."""
    z = complex(z)
    if z == 0:
        raise ZeroArgument("z = 0 has no finite image")
    return 0.5 * (z + 1.0 / z)


def check_rel(rc: RealRecurrence, vs: VerblunskySeq, n: int, theta: float) -> float:
    """Residual of the line/circle polynomial identity at z = e^{i theta}:

        gamma_n P_n(cos theta)
            = kappa_{2n} / sqrt(2 (1 - a_{2n-1})) * (z^{-n} Phi_{2n}(z)
                                                     + z^n Phi_{2n}(1/z)).

    The pair (rc, vs) must describe the same measure (vs from
    geronimus_inverse(rc)); a_{-1} = -1 covers the n = 0 case.
    """
    alpha = vs.real_view()
    if len(alpha) < 2 * n:
        raise InsufficientCoefficients(2 * n, len(alpha), "alpha coefficients")
    z = cmath.exp(1j * theta)
    x = z.real  # cos(theta)
    lhs = orthonormal_scale(rc, n) * oprl_eval(rc, n, x)[n]
    a_prev = _alpha_conv(alpha, 2 * n - 1)
    factor = kappa(vs, 2 * n) / cmath.sqrt(2.0 * (1.0 - a_prev))
    phi_z, _ = opuc_eval(vs, 2 * n, z)
    phi_zinv, _ = opuc_eval(vs, 2 * n, 1.0 / z)
    rhs = factor * (z ** (-n) * phi_z[2 * n] + z**n * phi_zinv[2 * n])
    return abs(lhs - rhs)
