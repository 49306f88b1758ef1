"""Perturbation families as coefficient-level transforms.

Every closed-form result is implemented twice:

* the CLOSED_FORM path evaluates the stated formulas verbatim;
* the ORACLE path perturbs the coefficients first and then runs the
  generic bridge direction (brute force).

The two must agree wherever both are defined; the verification suites and
the test suite enforce that.  The single documented exception is the LU
shortcut for a dilation (``perturbed_v`` / ``perturbed_alpha_lu``): its
stated prefix-preservation clashes with the genuinely perturbed LU data
when the dilation factor differs from 1, so those two operations expose a
"default" (consistent) path and a "shortcut" path plus a structured
discrepancy report instead of a silent choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEta, OrthoError, SupportViolation
from .oprl import RealRecurrence, prepend_coefficients, shift_coefficients
from .opuc import VerblunskySeq, prepend_verblunsky, shift_verblunsky
from .szego import (
    VSeq,
    alpha_from_v,
    geronimus_forward,
    geronimus_inverse,
    v_from_alpha,
    v_from_recurrence,
)

CLOSED_FORM = "closed_form"
ORACLE = "oracle"

DEFAULT = "default"
SHORTCUT = "shortcut"


def _check_path(path: str) -> None:
    if path not in (CLOSED_FORM, ORACLE):
        raise ValueError(f"path must be {CLOSED_FORM!r} or {ORACLE!r}, got {path!r}")


def _emit(value: float, index: int) -> float:
    if abs(value) >= 1.0 - 1e-12:
        raise SupportViolation(index, value)
    return value


# ---------------------------------------------------------------------------
# Perturbation descriptions


@dataclass(frozen=True)
class CoDilated:
    """Multiply d_k by lam (k >= 1: d_0 is never used by the recurrence,
    so dilating it would be a silent no-op and is rejected)."""

    k: int
    lam: float

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("co-dilation index must be >= 1")
        if not self.lam > 0:
            raise ValueError("co-dilation factor must be positive")

    kind = "co_dilated"


@dataclass(frozen=True)
class CoRecursive:
    """Add tau to b_{k+1} (k >= 0)."""

    k: int
    tau: float

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("co-recursion index must be >= 0")

    kind = "co_recursive"


@dataclass(frozen=True)
class KModification:
    """Replace the circle coefficient at index k by eta, |eta| < 1."""

    k: int
    eta: complex

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("modification index must be >= 0")
        if abs(self.eta) >= 1.0:
            raise InvalidEta(f"|eta| = {abs(self.eta)} >= 1")

    kind = "k_modification"


@dataclass(frozen=True)
class Associated:
    """Drop the first k coefficient entries (index shift)."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("association order must be >= 0")

    kind = "associated"


@dataclass(frozen=True)
class AntiAssociated:
    """Prepend new coefficients: (pre_b, pre_d) on the line, xi on the circle."""

    pre_b: tuple[float, ...] = ()
    pre_d: tuple[float, ...] = ()
    xi: tuple[complex, ...] = ()

    kind = "anti_associated"


@dataclass(frozen=True)
class Sieve:
    """Spread circle coefficients: original entry m-1 lands at index m*ell - 1,
    zeros elsewhere."""

    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("sieve stride must be >= 1")

    kind = "sieve"


# ---------------------------------------------------------------------------
# Direct coefficient transforms


def coprl_apply(rc: RealRecurrence, specs) -> RealRecurrence:
    """Apply co-dilations/co-recursions: d_k -> lam * d_k, b_{k+1} -> b_{k+1} + tau.

    At most one spec of each kind per index; order is immaterial because the
    touched entries are disjoint per spec.
    """
    b = list(rc.b)
    d = list(rc.d)
    seen = set()
    for spec in specs:
        key = (type(spec), spec.k)
        if key in seen:
            raise ValueError(f"duplicate perturbation for index {spec.k}")
        seen.add(key)
        if isinstance(spec, CoDilated):
            rc.require(0, spec.k)
            d[spec.k - 1] *= spec.lam
        elif isinstance(spec, CoRecursive):
            rc.require(spec.k + 1, 0)
            b[spec.k] += spec.tau
        else:
            raise ValueError(f"not a line-side single-entry perturbation: {spec!r}")
    return RealRecurrence(tuple(b), tuple(d))


def copuc_apply(vs: VerblunskySeq, k: int, eta: complex) -> VerblunskySeq:
    """Replace the coefficient at index k by eta (overwrite semantics:
    eta == alpha_k is allowed and is the identity)."""
    if abs(eta) >= 1.0:
        raise InvalidEta(f"|eta| = {abs(eta)} >= 1")
    vs.require(k + 1)
    alpha = list(vs.alpha)
    alpha[k] = complex(eta)
    return VerblunskySeq(tuple(alpha))


# ---------------------------------------------------------------------------
# Single-entry line perturbations seen from the circle


def coprl_verblunsky(rc: RealRecurrence, k: int, lam: float, tau: float,
                     n: int, vs: VerblunskySeq | None = None,
                     path: str = CLOSED_FORM) -> VerblunskySeq:
    """Circle coefficients a-hat_0 .. a-hat_{2n-1} of the measure with
    d_k -> lam d_k and b_{k+1} -> b_{k+1} + tau.

    The closed form keeps a_j for j < 2k-1, shifts a_{2k-1} by

        M = 4 (lam - 1) d_k / ((1 - a_{2k-3}) (1 - a_{2k-2}^2)),

    recombines a_{2k} from (a_{2k}, tau, M), and continues with the generic
    inversion on the untouched tail.  k = 0 is the pure co-recursive case
    and requires lam = 1.
    """
    _check_path(path)
    if k == 0 and lam != 1.0:
        raise ValueError("dilating d_0 never changes any polynomial; use k >= 1")
    if n < k + 1:
        raise ValueError("need n >= k + 1 output pairs to cover the perturbed entries")
    specs = []
    if lam != 1.0:
        specs.append(CoDilated(k, lam))
    if tau != 0.0:
        specs.append(CoRecursive(k, tau))
    if path == ORACLE:
        return geronimus_inverse(coprl_apply(rc, specs), n)

    if vs is None:
        vs = geronimus_inverse(rc, n)
    alpha = vs.real_view()

    def a(j: int) -> float:
        if j == -1:
            return -1.0
        if j == -2:
            return 0.0
        return alpha[j]

    if k == 0:
        m_shift = 0.0
    else:
        m_shift = 4.0 * (lam - 1.0) * rc.d_at(k) / ((1.0 - a(2 * k - 3)) * (1.0 - a(2 * k - 2) ** 2))

    out: list[float] = list(alpha[: max(2 * k - 1, 0)])

    def ah(j: int) -> float:
        if j == -1:
            return -1.0
        if j == -2:
            return 0.0
        return out[j]

    if 2 * k - 1 >= 0:
        out.append(_emit(a(2 * k - 1) + m_shift, 2 * k - 1))
    num = (1.0 - a(2 * k - 1)) * a(2 * k) + 2.0 * tau + m_shift * a(2 * k - 2)
    out.append(_emit(num / (1.0 - a(2 * k - 1) - m_shift), 2 * k))
    j = 2 * k + 1
    while j < 2 * n:
        if j % 2 == 1:
            m = (j - 1) // 2
            val = -1.0 + 4.0 * rc.d_at(m + 1) / ((1.0 - ah(2 * m - 1)) * (1.0 - ah(2 * m) ** 2))
        else:
            m = j // 2
            val = (2.0 * rc.b_at(m + 1) + (1.0 + ah(2 * m - 1)) * ah(2 * m - 2)) / (1.0 - ah(2 * m - 1))
        out.append(_emit(val, j))
        j += 1
    return VerblunskySeq(tuple(out[: 2 * n]))


# ---------------------------------------------------------------------------
# Associated / anti-associated, line data seen from the circle


def assoc_oprl_to_verblunsky(rc: RealRecurrence, k: int, n: int,
                             path: str = CLOSED_FORM) -> VerblunskySeq:
    """Circle coefficients of the order-k associated line family:
    the inversion recursion fed with b_{n+k}, d_{n+k}."""
    _check_path(path)
    if path == ORACLE:
        return geronimus_inverse(shift_coefficients(rc, k), n)
    rc.require(n + k, n + k)
    out: list[float] = []

    def ah(j: int) -> float:
        if j == -1:
            return -1.0
        if j == -2:
            return 0.0
        return out[j]

    for m in range(n):
        even = (2.0 * rc.b_at(m + k + 1) + (1.0 + ah(2 * m - 1)) * ah(2 * m - 2)) / (1.0 - ah(2 * m - 1))
        out.append(_emit(even, 2 * m))
        odd = -1.0 + 4.0 * rc.d_at(m + k + 1) / ((1.0 - ah(2 * m - 1)) * (1.0 - even**2))
        out.append(_emit(odd, 2 * m + 1))
    return VerblunskySeq(tuple(out))


def antiassoc_oprl_to_verblunsky(rc: RealRecurrence, pre_b, pre_d, n: int,
                                 path: str = CLOSED_FORM) -> VerblunskySeq:
    """Circle coefficients of the order-k anti-associated line family
    (k = len(pre_b)): the inversion recursion fed with the prepended window
    for indices <= k and b_{n-k}, d_{n-k} beyond it."""
    _check_path(path)
    if path == ORACLE:
        return geronimus_inverse(prepend_coefficients(rc, pre_b, pre_d), n)
    merged = prepend_coefficients(rc, pre_b, pre_d)
    out: list[float] = []

    def ah(j: int) -> float:
        if j == -1:
            return -1.0
        if j == -2:
            return 0.0
        return out[j]

    for m in range(n):
        even = (2.0 * merged.b_at(m + 1) + (1.0 + ah(2 * m - 1)) * ah(2 * m - 2)) / (1.0 - ah(2 * m - 1))
        out.append(_emit(even, 2 * m))
        odd = -1.0 + 4.0 * merged.d_at(m + 1) / ((1.0 - ah(2 * m - 1)) * (1.0 - even**2))
        out.append(_emit(odd, 2 * m + 1))
    return VerblunskySeq(tuple(out))


# ---------------------------------------------------------------------------
# Associated / anti-associated, circle data seen from the line


def assoc_opuc_to_recurrence(vs: VerblunskySeq, k: int, n: int,
                             path: str = CLOSED_FORM) -> RealRecurrence:
    """Recurrence pairs of the order-k associated circle family.

    Odd k = 2m-1 reweights through the pivot sequence:

        d-hat_1     = (1 + a_{2m-1}) / v_{2m+1} * d_{m+1}
        d-hat_{n+1} = v_{2(n+m)-1} / v_{2(n+m)+1} * d_{n+m+1}
        b-hat_1     = a_{2m-1}
        b-hat_{n+1} = b_{n+m+1} + v_{2(n+m)-2} - v_{2(n+m)}

    Even k = 2m only rescales the first entry, with lam = 2 / (1 - a_{2m-1}):

        d-hat_1 = lam d_{m+1},  d-hat_{n+1} = d_{n+m+1}
        b-hat_1 = a_{2m},       b-hat_{n+1} = b_{n+m+1}.
    """
    _check_path(path)
    if path == ORACLE:
        return geronimus_forward(shift_verblunsky(vs, k), n)
    alpha = vs.real_view()
    need = 2 * n + k
    if len(alpha) < need:
        raise OrthoError(f"need {need} circle coefficients, have {len(alpha)}")

    def a(j: int) -> float:
        return -1.0 if j == -1 else alpha[j]

    rc = geronimus_forward(vs, (len(alpha)) // 2)
    v = v_from_alpha(vs)
    b_out: list[float] = []
    d_out: list[float] = []
    if k % 2 == 1:
        m = (k + 1) // 2
        d_out.append((1.0 + a(2 * m - 1)) / v.at(2 * m + 1) * rc.d_at(m + 1))
        b_out.append(a(2 * m - 1))
        for j in range(1, n):
            d_out.append(v.at(2 * (j + m) - 1) / v.at(2 * (j + m) + 1) * rc.d_at(j + m + 1))
            b_out.append(rc.b_at(j + m + 1) + v.at(2 * (j + m) - 2) - v.at(2 * (j + m)))
    else:
        m = k // 2
        lam = 2.0 / (1.0 - a(2 * m - 1))
        d_out.append(lam * rc.d_at(m + 1))
        b_out.append(a(2 * m) if k > 0 else rc.b_at(1))
        for j in range(1, n):
            d_out.append(rc.d_at(j + m + 1))
            b_out.append(rc.b_at(j + m + 1))
    return RealRecurrence(tuple(b_out), tuple(d_out))


def antiassoc_opuc_to_recurrence(vs: VerblunskySeq, xi, n: int,
                                 path: str = CLOSED_FORM) -> RealRecurrence:
    """Recurrence pairs of the order-k anti-associated circle family,
    k = len(xi), via the four-branch boundary tables (pure-prepend rows,
    the mixed rows where the prepended window meets the original data, and
    the stable tail)."""
    _check_path(path)
    xi = tuple(float(x) for x in xi)
    k = len(xi)
    if path == ORACLE:
        return geronimus_forward(prepend_verblunsky(vs, xi), n)
    if k == 0:
        return geronimus_forward(vs, n)
    alpha = vs.real_view()

    def a(j: int) -> float:
        return -1.0 if j == -1 else alpha[j]

    def x_at(j: int) -> float:
        # xi with the same convention slot at -1 (only reached for odd k = 1)
        return -1.0 if j == -1 else xi[j]

    b_out: list[float] = []
    d_out: list[float] = []
    if k % 2 == 1:
        m = (k + 1) // 2
        for j in range(n):
            if j <= m - 2:
                if j == 0:
                    d_out.append(0.5 * (1.0 - xi[0] ** 2) * (1.0 + xi[1]))
                else:
                    d_out.append(0.25 * (1.0 - xi[2 * j - 1]) * (1.0 - xi[2 * j] ** 2) * (1.0 + xi[2 * j + 1]))
            elif j == m - 1:
                d_out.append(0.25 * (1.0 - x_at(2 * j - 1)) * (1.0 - xi[2 * j] ** 2) * (1.0 + a(2 * (j - m) + 2)))
            else:
                d_out.append(0.25 * (1.0 - a(2 * (j - m))) * (1.0 - a(2 * (j - m) + 1) ** 2) * (1.0 + a(2 * (j - m) + 2)))
            if j == 0:
                b_out.append(xi[0])
            elif j <= m - 1:
                b_out.append(0.5 * ((1.0 - xi[2 * j - 1]) * xi[2 * j] - (1.0 + xi[2 * j - 1]) * xi[2 * j - 2]))
            elif j == m:
                b_out.append(0.5 * ((1.0 - a(2 * (j - m))) * a(2 * (j - m) + 1) - (1.0 + a(2 * (j - m))) * xi[2 * j - 2]))
            else:
                b_out.append(0.5 * ((1.0 - a(2 * (j - m))) * a(2 * (j - m) + 1) - (1.0 + a(2 * (j - m))) * a(2 * (j - m) - 1)))
    else:
        m = k // 2
        rc = geronimus_forward(vs, max(n - m, 1))
        for j in range(n):
            if j == 0:
                d_out.append(0.5 * (1.0 - xi[0] ** 2) * (1.0 + xi[1]))
            elif j <= m - 1:
                d_out.append(0.25 * (1.0 - xi[2 * j - 1]) * (1.0 - xi[2 * j] ** 2) * (1.0 + xi[2 * j + 1]))
            elif j == m:
                d_out.append(0.25 * (1.0 - xi[2 * m - 1]) * (1.0 - a(0) ** 2) * (1.0 + a(1)))
            else:
                d_out.append(rc.d_at(j - m + 1))
            if j == 0:
                b_out.append(xi[0])
            elif j <= m - 1:
                b_out.append(0.5 * ((1.0 - xi[2 * j - 1]) * xi[2 * j] - (1.0 + xi[2 * j - 1]) * xi[2 * j - 2]))
            elif j == m:
                b_out.append(0.5 * ((1.0 - xi[2 * m - 1]) * a(0) - (1.0 + xi[2 * m - 1]) * xi[2 * m - 2]))
            else:
                b_out.append(rc.b_at(j - m + 1))
    return RealRecurrence(tuple(b_out), tuple(d_out))


# ---------------------------------------------------------------------------
# LU shortcut for single-entry line perturbations


@dataclass(frozen=True)
class PathDiscrepancy:
    """Structured report of a default-vs-shortcut disagreement."""

    op: str
    k: int
    lam: float
    tau: float
    index: int
    default_value: float
    shortcut_value: float

    def describe(self) -> str:
        return (f"{self.op}: paths first differ at index {self.index}: "
                f"default {self.default_value!r} vs shortcut {self.shortcut_value!r} "
                f"(k={self.k}, lam={self.lam}, tau={self.tau})")


def perturbed_v(rc: RealRecurrence, k: int, lam: float, tau: float, n: int,
                path: str = DEFAULT) -> VSeq:
    """Pivot sequence after d_k -> lam d_k, b_{k+1} -> b_{k+1} + tau.

    "default" peels the continued fraction of the genuinely perturbed
    coefficients (always consistent with the LU factorization).  "shortcut"
    applies the closed-form pivot update: copy v_0..v_{2k-1}, set
    v~_{2k} = v_{2k} + (1 - lam) v_{2k-1} + tau, then continue the
    two-term tail recursion.  For lam != 1 the copied prefix disagrees
    with the perturbed LU data at index 2k-1; see path_discrepancy_report.
    """
    if path == DEFAULT:
        specs = []
        if lam != 1.0:
            specs.append(CoDilated(k, lam))
        if tau != 0.0:
            specs.append(CoRecursive(k, tau))
        return v_from_recurrence(coprl_apply(rc, specs), n)
    if path != SHORTCUT:
        raise ValueError(f"path must be {DEFAULT!r} or {SHORTCUT!r}, got {path!r}")
    v = v_from_recurrence(rc, max(n, 2 * k + 1))
    out = [v.at(j) for j in range(min(2 * k, n))]
    if 2 * k < n:
        out.append(v.at(2 * k) + (1.0 - lam) * v.at(2 * k - 1) + tau)
    j = 2 * k + 1
    while j < n:
        if j % 2 == 1:
            m = (j - 1) // 2
            out.append(rc.d_at(m + 1) / out[j - 1])
        else:
            m = (j - 2) // 2
            out.append(rc.b_at(m + 2) + 1.0 - out[j - 1])
        j += 1
    return VSeq(tuple(out))


def perturbed_alpha_lu(rc: RealRecurrence, k: int, lam: float, tau: float, n: int,
                       path: str = DEFAULT) -> VerblunskySeq:
    """Perturbed circle coefficients through the LU pivots.

    "default" runs alpha_from_v on the consistent pivot sequence and always
    agrees with coprl_verblunsky.  "shortcut" applies the closed-form update:
    keep a_0..a_{2k-1}, shift a_{2k} by 2[(1 - lam) v_{2k-1} + tau] /
    (1 - a_{2k-1}), then continue with the shortcut pivot tail.
    """
    if path == DEFAULT:
        return alpha_from_v(perturbed_v(rc, k, lam, tau, 2 * n, DEFAULT))
    if path != SHORTCUT:
        raise ValueError(f"path must be {DEFAULT!r} or {SHORTCUT!r}, got {path!r}")
    alpha = geronimus_inverse(rc, n).real_view()
    v = v_from_recurrence(rc, 2 * n)
    vt = perturbed_v(rc, k, lam, tau, 2 * n, SHORTCUT)
    out = list(alpha[: min(2 * k, 2 * n)])
    if 2 * k < 2 * n:
        den = (1.0 - alpha[2 * k - 1]) if k > 0 else 2.0
        shift = 2.0 * ((1.0 - lam) * v.at(2 * k - 1) + tau) / den
        out.append(_emit(alpha[2 * k] + shift, 2 * k))
    for j in range(2 * k + 1, 2 * n):
        out.append(_emit(-1.0 + 2.0 * vt.at(j) / (1.0 - out[j - 1]), j))
    return VerblunskySeq(tuple(out[: 2 * n]))


def path_discrepancy_report(rc: RealRecurrence, k: int, lam: float, tau: float,
                            n: int, tol: float = 1e-11) -> PathDiscrepancy | None:
    """Compare the two pivot paths entrywise; None when they agree to tol."""
    dv = perturbed_v(rc, k, lam, tau, n, DEFAULT)
    pv = perturbed_v(rc, k, lam, tau, n, SHORTCUT)
    for j in range(n):
        if abs(dv.at(j) - pv.at(j)) > tol * (1.0 + abs(dv.at(j))):
            return PathDiscrepancy("perturbed_v", k, lam, tau, j, dv.at(j), pv.at(j))
    return None


# ---------------------------------------------------------------------------
# Sieving and symmetric families


def sieve(vs: VerblunskySeq, ell: int) -> VerblunskySeq:
    """Sieved coefficients: entry m-1 moves to index m*ell - 1, zeros fill
    the gaps; ell = 1 is the identity."""
    if ell < 1:
        raise ValueError("sieve stride must be >= 1")
    out = []
    for n in range(len(vs) * ell):
        out.append(vs.at((n + 1) // ell - 1) if (n + 1) % ell == 0 else 0.0)
    return VerblunskySeq(tuple(out))


def sieve2_recurrence(vs: VerblunskySeq, n: int, path: str = CLOSED_FORM) -> RealRecurrence:
    """Recurrence pairs of the stride-2 sieved family:
    b == 0 and d_{n+1} = (1/4)(1 - a_{n-1})(1 + a_n) (so d_1 = (1+a_0)/2)."""
    _check_path(path)
    if path == ORACLE:
        return geronimus_forward(sieve(vs, 2), n)
    alpha = vs.real_view()
    if len(alpha) < n:
        raise OrthoError(f"need {n} circle coefficients, have {len(alpha)}")

    def a(j: int) -> float:
        return -1.0 if j == -1 else alpha[j]

    d = tuple(0.25 * (1.0 - a(j - 1)) * (1.0 + a(j)) for j in range(n))
    return RealRecurrence((0.0,) * n, d)


def sieved_kmod_recurrence(vs: VerblunskySeq, k: int, eta: float, n: int,
                           path: str = CLOSED_FORM) -> RealRecurrence:
    """Stride-2 sieved family after replacing a_k by eta: exactly the two
    entries d_{k+1} and d_{k+2} pick up the factors (1+eta)/(1+a_k) and
    (1-eta)/(1-a_k)."""
    _check_path(path)
    if not -1.0 < eta < 1.0:
        raise InvalidEta(f"eta = {eta} outside (-1, 1)")
    if path == ORACLE:
        return geronimus_forward(sieve(copuc_apply(vs, k, eta), 2), n)
    base = sieve2_recurrence(vs, n, CLOSED_FORM)
    ak = vs.real_view()[k]
    d = list(base.d)
    if k < n:
        d[k] *= (1.0 + eta) / (1.0 + ak)
    if k + 1 < n:
        d[k + 1] *= (1.0 - eta) / (1.0 - ak)
    return RealRecurrence(base.b, tuple(d))


def symmetric_verblunsky(d, n: int | None = None, path: str = CLOSED_FORM) -> VerblunskySeq:
    """Circle coefficients of a symmetric line family (b == 0):
    even entries vanish and g_{2n+1} = -1 + 4 d_{n+1} / (1 - g_{2n-1})."""
    _check_path(path)
    d = tuple(float(x) for x in d)
    if n is None:
        n = len(d)
    rc = RealRecurrence((0.0,) * len(d), d)
    if path == ORACLE:
        return geronimus_inverse(rc, n)
    out: list[float] = []
    prev_odd = -1.0
    for m in range(n):
        out.append(0.0)
        g = -1.0 + 4.0 * rc.d_at(m + 1) / (1.0 - prev_odd)
        out.append(_emit(g, 2 * m + 1))
        prev_odd = g
    return VerblunskySeq(tuple(out))


def symmetric_codilated_verblunsky(d, k: int, lam: float, n: int | None = None,
                                   path: str = CLOSED_FORM) -> VerblunskySeq:
    """Symmetric family after d_k -> lam d_k: odd entries below 2k-1 are
    kept, g_{2k-1} shifts by 4 (lam - 1) d_k / (1 - g_{2k-3}), and every
    later odd entry follows the symmetric recursion."""
    _check_path(path)
    if k < 1:
        raise ValueError("co-dilation index must be >= 1")
    d = tuple(float(x) for x in d)
    if n is None:
        n = len(d)
    if path == ORACLE:
        rc = coprl_apply(RealRecurrence((0.0,) * len(d), d), [CoDilated(k, lam)])
        return geronimus_inverse(rc, n)
    gamma = symmetric_verblunsky(d, n, CLOSED_FORM).real_view()

    def g(j: int) -> float:
        return -1.0 if j == -1 else gamma[j]

    out: list[float] = []
    prev_odd = -1.0
    for m in range(n):
        out.append(0.0)
        if m < k - 1:
            odd = gamma[2 * m + 1]
        elif m == k - 1:
            odd = gamma[2 * k - 1] + 4.0 * (lam - 1.0) * d[k - 1] / (1.0 - g(2 * k - 3))
        else:
            odd = -1.0 + 4.0 * d[m] / (1.0 - prev_odd)
        out.append(_emit(odd, 2 * m + 1))
        prev_odd = odd
    return VerblunskySeq(tuple(out))
