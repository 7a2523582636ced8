"""Numerical evaluation of Dedekind zeta functions on a half-plane rectangle.

The workhorse is Euler--Maclaurin continuation of the Hurwitz zeta function.
A Dirichlet L-function for a character of period q is assembled from the q
Hurwitz components L(s, chi) = q^{-s} * sum_a chi(a) * zeta(s, a/q); expanding
every component with the same Euler--Maclaurin cutoffs (N, K) and regrouping
by the integer m = n*q + a turns that into three plain sums over m:

    L(s, chi) =   sum_{m <= N*q} chi(m) m^{-s}                        (head)
                + sum_{m in W} chi(m) m^{1-s} / (q (s-1))             (pole)
                + sum_{m in W} chi(m) m^{-s} / 2                      (boundary)
                + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} q^{2k-1}
                      * sum_{m in W} chi(m) m^{-s-2k+1}               (tail)

where W = (N*q, (N+1)*q] is one full period.  All four pieces are dot
products of the character table against power tables of m, which is what
makes large parameter sweeps cheap: the power tables are cached per s and
shared across every character evaluated at that point.

For non-principal chi (the table sums to zero) the pole piece is finite at
s = 1; near the pole it is evaluated in the manifestly stable form

    -(1/q) * sum_{m in W} chi(m) log(m) * phi1((1-s) log m),
    phi1(x) = (e^x - 1)/x,

which has no 0/0 cancellation and yields the regulator-grade accuracy the
experiments need when they divide by s - 1 or differentiate at s = 1.

Truncation control is certified: the first omitted Euler--Maclaurin term is
bounded in closed form and (N, K) are chosen to push that bound below the
requested precision target at minimal cost.  Floating-point accumulation
noise (~1e-13 relative) is on top of that and is documented, not hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import bernoulli_numbers
from ._chartable import DirichletCharacter, chi_kronecker_table, dirichlet_characters
from .numberfield import (
    Cyclotomic,
    FieldDescriptor,
    Quadratic,
    UnsupportedKindError,
    field_invariants,
    is_fundamental_discriminant,
)

__all__ = [
    "EvalPoint",
    "CentralData",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "NumericalConsistencyError",
    "hurwitz_zeta",
    "dirichlet_L",
    "dedekind_zeta",
    "dedekind_zeta_pole_removed",
    "euler_kronecker",
    "central_data",
    "RE_MIN",
    "IM_MAX",
]

# Supported evaluation rectangle: a compact window with s = 1/2 interior.
RE_MIN = 0.4
IM_MAX = 50.0

_EULER_GAMMA = float(np.euler_gamma)

# |s - 1| below which the pole piece switches to the series-stabilized form.
_POLE_SWITCH = 0.02


class DomainError(ValueError):
    """Evaluation point outside the supported rectangle."""


class PoleError(ValueError):
    """Evaluation at a pole of the requested function."""


class ConvergenceError(ArithmeticError):
    """Euler--Maclaurin tail failed to reach the precision target."""


class NumericalConsistencyError(ArithmeticError):
    """Two independent evaluation paths disagree beyond tolerance."""


# --------------------------------------------------------------------------
# evaluation points and central-point results
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EvalPoint:
    """A point s in the supported rectangle plus a truncation target.

    ``precision_target`` bounds the first omitted Euler--Maclaurin term
    (relative scale); float64 accumulation adds ~1e-13 relative on top.
    """

    s: complex
    precision_target: float = 1e-12

    def __post_init__(self):
        s = complex(self.s)
        object.__setattr__(self, "s", s)
        if not (s.real > RE_MIN and abs(s.imag) <= IM_MAX):
            raise DomainError(
                f"s={s} outside supported rectangle Re s > {RE_MIN}, |Im s| <= {IM_MAX}"
            )
        if not 1e-15 <= self.precision_target <= 1e-6:
            raise ValueError("precision_target must lie in [1e-15, 1e-6]")


@dataclass(frozen=True)
class CentralData:
    """Vanishing order and leading Taylor coefficient of zeta_K at s = 1/2.

    ``r`` is the detected order of vanishing (0 unless flagged); ``rho`` is
    the leading coefficient, equal to zeta_K(1/2) when r = 0 and NaN when
    the central value is too small to certify a sign (``flag_near_zero``).
    """

    r: int
    rho: float
    flag_near_zero: bool

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("vanishing order must be >= 0")
        if not self.flag_near_zero and not (self.rho != 0 and math.isfinite(self.rho)):
            raise ValueError("rho must be finite nonzero when not flagged")


def _as_point(pt: EvalPoint | complex | float) -> EvalPoint:
    if isinstance(pt, EvalPoint):
        return pt
    return EvalPoint(complex(pt))


# --------------------------------------------------------------------------
# Bernoulli / factorial coefficient tables (exact, converted to float once)
# --------------------------------------------------------------------------

_B2K = bernoulli_numbers(27)  # B_2 .. B_54, exact fractions


def _b2k_over_fact(k: int) -> float:
    """B_{2k} / (2k)! as a float (k >= 1)."""
    return float(_B2K[k - 1] / Fraction(math.factorial(2 * k)))


_B_OVER_FACT = [0.0] + [_b2k_over_fact(k) for k in range(1, 28)]

# Maclaurin coefficients of phi1(x) = (e^x - 1)/x and of its derivative
# phi2(x) = (e^x (x - 1) + 1)/x^2 = sum_j x^j (j+1)/(j+2)!.
_PHI1_COEFF = np.array([1.0 / math.factorial(j + 1) for j in range(14)])
_PHI2_COEFF = np.array([(j + 1) / math.factorial(j + 2) for j in range(14)])


def _phi1(x: np.ndarray) -> np.ndarray:
    """(e^x - 1)/x by Maclaurin series; accurate to ~1e-16 for |x| <= 0.5."""
    acc = np.full_like(x, _PHI1_COEFF[-1])
    for c in _PHI1_COEFF[-2::-1]:
        np.multiply(acc, x, out=acc)
        np.add(acc, c, out=acc)
    return acc


def _phi2(x: np.ndarray) -> np.ndarray:
    """d/dx phi1 = (e^x (x-1) + 1)/x^2 by Maclaurin series for |x| <= 0.5."""
    acc = np.full_like(x, _PHI2_COEFF[-1])
    for c in _PHI2_COEFF[-2::-1]:
        np.multiply(acc, x, out=acc)
        np.add(acc, c, out=acc)
    return acc


# --------------------------------------------------------------------------
# scalar Hurwitz zeta (the per-component engine, also the Riemann factor)
# --------------------------------------------------------------------------


def _check_rectangle(s: complex) -> None:
    if not (s.real > RE_MIN and abs(s.imag) <= IM_MAX):
        raise DomainError(
            f"s={s} outside supported rectangle Re s > {RE_MIN}, |Im s| <= {IM_MAX}"
        )


def _hurwitz_em(
    s: complex,
    a: float,
    precision_target: float,
    pole_removed: bool = False,
) -> complex:
    """Euler--Maclaurin for zeta(s, a); optionally the stable (s-1)*zeta(s, a).

    N follows the fixed rule max(50, ceil(10|s|)); K grows until the next
    tail term drops below the target, raising if the asymptotic series turns
    before getting there (K capped at 25).
    """
    N = max(50, math.ceil(10 * abs(s)))
    n = np.arange(N, dtype=np.float64) + a
    if s.imag == 0:
        head = float(np.sum(n ** (-s.real)))
    else:
        head = complex(np.sum(np.exp(-s * np.log(n))))
    X = N + a
    lx = math.log(X)
    x_pow_1ms = np.exp((1 - s) * lx) if s.imag else X ** (1 - s.real)
    x_pow_ms = x_pow_1ms / X

    # tail terms: B_{2k}/(2k)! * (s)_{2k-1} * X^{-s-2k+1}
    tail = 0.0 + 0.0j if s.imag else 0.0
    rising = s if s.imag else s.real  # (s)_1
    xp = x_pow_1ms  # X^{-s+1-2(k-1)} going in; multiply by X^-2 per step
    x2 = X * X
    prev_mag = math.inf
    converged = False
    for k in range(1, 26):
        if k > 1:
            rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2))
            if s.imag == 0:
                rising = rising.real if isinstance(rising, complex) else rising
        xp = xp / x2
        term = _B_OVER_FACT[k] * rising * xp
        mag = abs(term)
        if mag >= prev_mag:
            raise ConvergenceError(
                f"Euler-Maclaurin tail diverged before reaching {precision_target} at s={s}"
            )
        tail = tail + term
        if mag < precision_target:
            converged = True
            break
        prev_mag = mag
    if not converged:
        raise ConvergenceError(
            f"Euler-Maclaurin tail did not reach {precision_target} within 25 terms at s={s}"
        )

    sm1 = s - 1 if s.imag else s.real - 1
    if pole_removed:
        return sm1 * head + x_pow_1ms + sm1 * (0.5 * x_pow_ms + tail)
    return head + x_pow_1ms / sm1 + 0.5 * x_pow_ms + tail


def hurwitz_zeta(
    s: complex | float,
    a: float,
    precision_target: float = 1e-12,
) -> complex | float:
    """zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued by Euler--Maclaurin.

    Supported for Re s > 0.4, |Im s| <= 50, 0 < a <= 1, s != 1.  Returns a
    float for real s, complex otherwise.
    """
    sc = complex(s)
    _check_rectangle(sc)
    if sc == 1:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    if not 0 < a <= 1:
        raise DomainError("a must lie in (0, 1]")
    val = _hurwitz_em(sc, float(a), precision_target)
    if isinstance(s, complex) and s.imag != 0:
        return complex(val)
    return float(np.real(val))


def _zeta_pole_removed(s: complex | float, precision_target: float = 1e-12) -> complex | float:
    """(s - 1) * zeta(s), analytic across s = 1 (value 1 at the pole)."""
    sc = complex(s)
    _check_rectangle(sc)
    val = _hurwitz_em(sc, 1.0, precision_target, pole_removed=True)
    if isinstance(s, complex) and s.imag != 0:
        return complex(val)
    return float(np.real(val))


# --------------------------------------------------------------------------
# cached power tables (shared across all characters at a given s)
# --------------------------------------------------------------------------

_MAX_CACHED_POINTS = 12

_pow_cache: dict[complex, np.ndarray] = {}
_log_cache: np.ndarray = np.zeros(1)


def _grown(M: int) -> int:
    """Round a table length up by ~25% so ascending-|D| sweeps amortize
    rebuilds instead of regrowing every cached table once per field.
    Entries are elementwise in m, so a longer table is value-identical."""
    return M + (M >> 2)


def _log_table(M: int) -> np.ndarray:
    """log m for m = 0..M (entry 0 is 0)."""
    global _log_cache
    if _log_cache.size <= M:
        t = np.arange(_grown(M) + 1, dtype=np.float64)
        t[0] = 1.0
        _log_cache = np.log(t)
    return _log_cache


def _pow_table(s: complex, M: int) -> np.ndarray:
    """m^{-s} for m = 0..M (entry 0 is 0), cached per s."""
    tbl = _pow_cache.get(s)
    if tbl is not None and tbl.size > M:
        return tbl
    if len(_pow_cache) >= _MAX_CACHED_POINTS:
        _pow_cache.pop(next(iter(_pow_cache)))
    Mg = _grown(M)
    if s.imag == 0:
        t = np.arange(Mg + 1, dtype=np.float64)
        t[0] = 1.0
        tbl = t ** (-s.real)
    else:
        tbl = np.exp(-s * _log_table(Mg)[: Mg + 1])
    tbl[0] = 0.0
    _pow_cache[s] = tbl
    return tbl


def clear_caches() -> None:
    """Drop the cached power/log tables (mainly for memory-sensitive callers)."""
    global _log_cache
    _pow_cache.clear()
    _log_cache = np.zeros(1)


# --------------------------------------------------------------------------
# certified (N, K) selection for the regrouped L evaluation
# --------------------------------------------------------------------------


def _abs_rising(s: complex, j: int) -> float:
    """|s (s+1) ... (s+j-1)|."""
    acc = 1.0
    for i in range(j):
        acc *= abs(s + i)
    return acc


def _tail_bound(s: complex, q: int, N: int, K: int) -> float:
    """Bound on the total omitted Euler--Maclaurin remainder.

    The per-component remainder after the k = K term is at most
    |B_{2K+2}/(2K+2)!| |(s)_{2K+1}| (N+a/q)^{-sigma-2K-1} |s+2K+1|/(sigma+2K+1);
    summing the q components and pulling out the q-scaling gives the
    q^{1-sigma} prefactor.
    """
    sigma = s.real
    return (
        q ** (1.0 - sigma)
        * abs(_B_OVER_FACT[K + 1])
        * _abs_rising(s, 2 * K + 1)
        * N ** (-sigma - 2 * K - 1)
        * abs(s + 2 * K + 1)
        / (sigma + 2 * K + 1)
    )


def _choose_NK(s: complex, q: int, target: float) -> tuple[int, int]:
    """Cheapest (N, K) whose certified remainder bound is below target."""
    sigma = s.real
    best: tuple[float, int, int] | None = None
    for K in range(1, 13):
        expo = sigma + 2 * K + 1
        coef = (
            q ** (1.0 - sigma)
            * abs(_B_OVER_FACT[K + 1])
            * _abs_rising(s, 2 * K + 1)
            * abs(s + 2 * K + 1)
            / expo
        )
        if coef <= target:
            N = 1
        else:
            N = max(1, math.ceil((coef / target) ** (1.0 / expo)))
        if N > 64:
            continue
        cost = (N + 1) * q + 3 * K * q  # head dot + K tail passes over the window
        if best is None or cost < best[0]:
            best = (cost, N, K)
    if best is None:
        raise ConvergenceError(
            f"no certified Euler-Maclaurin parameters reach {target} at s={s}, q={q}"
        )
    return best[1], best[2]


# --------------------------------------------------------------------------
# the regrouped L-evaluation engine
# --------------------------------------------------------------------------


def _L_from_table(
    table: np.ndarray,
    s: complex,
    precision_target: float = 1e-12,
    deriv: bool = False,
) -> complex | tuple[complex, complex]:
    """L(s, chi) for the period-q sequence chi(m) = table[m mod q].

    The table must sum to zero (non-principal character), which makes the
    pole piece finite; near s = 1 it is evaluated by the series-stabilized
    form.  With ``deriv`` the derivative dL/ds is returned as well.
    """
    q = table.shape[0]
    if q < 2:
        raise ValueError("table must have period >= 2")
    tot = complex(table.sum())
    if abs(tot) > 1e-9:
        raise ValueError("character table must sum to zero (non-principal)")

    N, K = _choose_NK(s, q, precision_target)
    M = (N + 1) * q
    A = _pow_table(s, M)
    logm = _log_table(M)

    is_complex_chi = np.iscomplexobj(table)
    chi = table.astype(np.complex128 if is_complex_chi else np.float64)
    # chi(m) for m = 1, 2, ..., running over whole periods: roll the table so
    # index 0 holds chi(1)
    chi_rolled = np.concatenate([chi[1:], chi[:1]])
    chi_head = np.tile(chi_rolled, N)

    head = chi_head @ A[1 : N * q + 1]

    # window W: m = Nq+1 .. (N+1)q, chi values are again chi_rolled
    w0 = N * q + 1
    Aw = A[w0 : w0 + q]
    Lw = logm[w0 : w0 + q]
    chiw = chi_rolled

    half = 0.5 * (chiw @ Aw)

    sm1 = s - 1
    chi_logw = chiw * Lw
    if abs(sm1) <= _POLE_SWITCH:
        x = (1 - s) * Lw
        pole = -(chi_logw @ _phi1(x)) / q
    else:
        mw = np.arange(w0, w0 + q, dtype=np.float64)
        Bw = Aw * mw  # m^{1-s}
        pole = (chiw @ Bw) / (q * sm1)

    # tail: sum_k B_{2k}/(2k)! (s)_{2k-1} q^{2k-1} sum_W chi(m) m^{-s-2k+1}
    inv_m = 1.0 / np.arange(w0, w0 + q, dtype=np.float64)
    inv_m2 = inv_m * inv_m
    T = Aw * inv_m  # m^{-s-1}; note m^{-s-2k+1} = m^{-s-1} * m^{-2(k-1)}
    tail = 0.0 + 0.0j
    tail_d = 0.0 + 0.0j
    rising = complex(s)
    qpow = float(q)
    sum_recip = 0.0 + 0.0j  # sum_{i=0}^{2k-2} 1/(s+i) for d/ds of the rising factorial
    for k in range(1, K + 1):
        if k > 1:
            rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2))
            qpow *= q * q
            T = T * inv_m2
            if deriv:
                sum_recip += 1.0 / (s + (2 * k - 3)) + 1.0 / (s + (2 * k - 2))
        else:
            sum_recip = 1.0 / s
        ck = _B_OVER_FACT[k] * rising * qpow
        Sk = chiw @ T
        tail += ck * Sk
        if deriv:
            Sk_d = -(chi_logw @ T)
            tail_d += ck * (sum_recip * Sk + Sk_d)

    value = head + pole + half + tail
    if not deriv:
        return complex(value)

    head_d = -(chi_head @ (A[1 : N * q + 1] * logm[1 : N * q + 1]))
    half_d = -0.5 * (chi_logw @ Aw)
    if abs(sm1) <= _POLE_SWITCH:
        x = (1 - s) * Lw
        pole_d = ((chiw * Lw * Lw) @ _phi2(x)) / q
    else:
        mw = np.arange(w0, w0 + q, dtype=np.float64)
        Bw = Aw * mw
        SB = chiw @ Bw
        SBlog = chi_logw @ Bw
        pole_d = -SBlog / (q * sm1) - SB / (q * sm1 * sm1)
    deriv_val = head_d + pole_d + half_d + tail_d
    return complex(value), complex(deriv_val)


def _kronecker_table(D: int) -> np.ndarray:
    """One period of the Kronecker character chi_D (index m = 0..|D|-1)."""
    q = abs(D)
    return chi_kronecker_table(D, q - 1)


_table_cache: dict[int, np.ndarray] = {}


def _chi_table_cached(D: int) -> np.ndarray:
    tbl = _table_cache.get(D)
    if tbl is None:
        if len(_table_cache) >= 16:
            _table_cache.pop(next(iter(_table_cache)))
        tbl = _kronecker_table(D)
        _table_cache[D] = tbl
    return tbl


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------


def dirichlet_L(
    s: complex | float,
    D: int,
    precision_target: float = 1e-12,
    deriv: bool = False,
) -> complex | float | tuple:
    """L(s, chi_D) for a fundamental discriminant D (D = 1 gives zeta(s)).

    Assembled as |D|^{-s} sum_a chi_D(a) zeta(s, a/|D|) with every Hurwitz
    component continued by Euler--Maclaurin; regrouped over integers for
    speed.  Well-defined at s = 1 for D != 1.  With ``deriv`` returns
    (L, dL/ds); real inputs give real outputs.
    """
    if D != 1 and not is_fundamental_discriminant(D):
        raise ValueError(f"D={D} is not a fundamental discriminant")
    sc = complex(s)
    _check_rectangle(sc)
    want_complex = isinstance(s, complex) and s.imag != 0
    if D == 1:
        if sc == 1:
            raise PoleError("L(s, chi_1) = zeta(s) has a pole at s = 1")
        val = hurwitz_zeta(sc if want_complex else sc.real, 1.0, precision_target)
        if deriv:
            raise ValueError("derivative mode is only supported for D != 1")
        return val
    out = _L_from_table(_chi_table_cached(D), sc, precision_target, deriv=deriv)
    if deriv:
        v, d = out
        if want_complex:
            return complex(v), complex(d)
        return v.real, d.real
    return complex(out) if want_complex else out.real


def _cyclotomic_factors(n: int) -> list[DirichletCharacter]:
    """Non-principal characters mod n, one per conductor-f primitive factor."""
    return [ch for ch in dirichlet_characters(n) if not ch.is_principal]


def _dedekind_zeta_eval(
    F: FieldDescriptor,
    pt: EvalPoint,
    pole_removed: bool,
) -> complex:
    s = pt.s
    if isinstance(F, Quadratic):
        D = field_invariants(F).discriminant
        factors = [_chi_table_cached(D)]
    elif isinstance(F, Cyclotomic):
        factors = [ch.primitive for ch in _cyclotomic_factors(F.n)]
    else:
        raise UnsupportedKindError(
            "dedekind_zeta supports Quadratic and Cyclotomic descriptors only"
        )
    per_factor = pt.precision_target / (len(factors) + 1)
    if pole_removed:
        riemann = _hurwitz_em(s, 1.0, per_factor, pole_removed=True)
    else:
        if s == 1:
            raise PoleError("zeta_K has a pole at s = 1; use the pole-removed form")
        riemann = _hurwitz_em(s, 1.0, per_factor)
    value = complex(riemann)
    for tbl in factors:
        value *= _L_from_table(tbl, s, per_factor)
    return value


def _real_result(s_in, value: complex) -> complex | float:
    if isinstance(s_in, complex) and s_in.imag != 0:
        return value
    return value.real


def dedekind_zeta(F: FieldDescriptor, pt: EvalPoint | complex | float) -> complex | float:
    """zeta_K(s) for quadratic/cyclotomic K, via the character factorization.

    Quadratic: zeta(s) L(s, chi_D).  Cyclotomic(n): product of L(s, chi) over
    the primitive characters inducing the characters mod n (the principal one
    contributing zeta(s)); conductors multiply to |disc|.  Raises PoleError
    at s = 1; see dedekind_zeta_pole_removed for the stable form there.
    """
    p = _as_point(pt)
    value = _dedekind_zeta_eval(F, p, pole_removed=False)
    return _real_result(pt if not isinstance(pt, EvalPoint) else pt.s, value)


def dedekind_zeta_pole_removed(
    F: FieldDescriptor, pt: EvalPoint | complex | float
) -> complex | float:
    """(s - 1) * zeta_K(s), analytic across s = 1 where it equals kappa_K."""
    p = _as_point(pt)
    value = _dedekind_zeta_eval(F, p, pole_removed=True)
    return _real_result(pt if not isinstance(pt, EvalPoint) else pt.s, value)


def _ek_closed_form(F: FieldDescriptor, precision_target: float = 1e-13) -> float:
    """gamma_K = gamma + sum over non-principal factors of L'/L at s = 1."""
    if isinstance(F, Quadratic):
        D = field_invariants(F).discriminant
        tables = [_chi_table_cached(D)]
    elif isinstance(F, Cyclotomic):
        tables = [ch.primitive for ch in _cyclotomic_factors(F.n)]
    else:
        raise UnsupportedKindError("euler_kronecker supports Quadratic and Cyclotomic")
    acc = 0.0 + 0.0j
    for tbl in tables:
        v, d = _L_from_table(tbl, 1.0 + 0.0j, precision_target, deriv=True)
        acc += d / v
    if abs(acc.imag) > 1e-9:
        raise NumericalConsistencyError(
            f"imaginary residue {acc.imag:.3e} in the L'/L sum (should cancel)"
        )
    return _EULER_GAMMA + acc.real


def _ek_laurent_limit(zeta_pole_removed, kappa: float) -> float:
    """lim_{s->1} ((s-1) zeta_K(s) - kappa) / (kappa (s-1)), by Richardson.

    Symmetric differences at h = 1e-2 and 1e-3 kill the odd error orders;
    one Richardson step on the h^2 term leaves ~h1^4 + roundoff.
    """

    def sym(h: float) -> float:
        up = (zeta_pole_removed(1.0 + h) - kappa) / (kappa * h)
        dn = (zeta_pole_removed(1.0 - h) - kappa) / (kappa * (-h))
        return 0.5 * (up + dn)

    g1 = sym(1e-2)
    g2 = sym(1e-3)
    return (100.0 * g2 - g1) / 99.0


def euler_kronecker(F: FieldDescriptor) -> float:
    """The Euler--Kronecker constant gamma_K = c_0/c_{-1} of the Laurent
    expansion of zeta_K at s = 1.

    Evaluated twice: (a) gamma + sum of L'/L(1) over the non-principal
    character factors (differentiated Euler--Maclaurin), and (b) a Richardson
    limit of ((s-1) zeta_K(s) - kappa)/(kappa (s-1)).  Returns (a) after
    checking |a - b| < 1e-6; disagreement raises NumericalConsistencyError.
    """
    a = _ek_closed_form(F)
    kappa = float(np.real(_dedekind_zeta_eval(F, EvalPoint(1.0), pole_removed=True)))

    def z(s: float) -> float:
        return float(np.real(_dedekind_zeta_eval(F, EvalPoint(s), pole_removed=True)))

    b = _ek_laurent_limit(z, kappa)
    if abs(a - b) >= 1e-6:
        raise NumericalConsistencyError(
            f"Euler-Kronecker paths disagree: closed form {a!r} vs Laurent limit {b!r}"
        )
    return a


_NEAR_ZERO = 1e-8


def central_data(F: FieldDescriptor) -> CentralData:
    """Order of vanishing and leading coefficient of zeta_K at s = 1/2.

    For quadratic K: zeta_K(1/2) = zeta(1/2) L(1/2, chi_D).  When
    |L(1/2, chi_D)| exceeds 1e-8 the order is certifiably 0 and rho is the
    central value itself; otherwise the result is flagged and the order is
    estimated from sign changes of L across 1/2 (reported, never trusted).
    """
    if not isinstance(F, Quadratic):
        raise UnsupportedKindError("central_data supports Quadratic descriptors only")
    D = field_invariants(F).discriminant
    L_half = dirichlet_L(0.5, D)
    if abs(L_half) > _NEAR_ZERO:
        zeta_half = hurwitz_zeta(0.5, 1.0)
        return CentralData(r=0, rho=zeta_half * L_half, flag_near_zero=False)
    h = 1e-3
    below = dirichlet_L(0.5 - h, D)
    above = dirichlet_L(0.5 + h, D)
    r_est = 1 if (below < 0) != (above < 0) else 2
    return CentralData(r=r_est, rho=float("nan"), flag_near_zero=True)
