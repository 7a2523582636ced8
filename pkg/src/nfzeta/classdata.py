"""Class numbers, regulators, root-of-unity counts, and the residue kappa_K.

Two independent class-number paths cross-validate each other: imaginary
quadratic h comes from exact reduced-form counting, real quadratic h from
the analytic class number formula with the continued-fraction regulator as
exact input.  kappa_K assembles 2^r1 (2pi)^r2 h R / (w sqrt|D|), the residue
of zeta_K at s = 1, and must agree with L(1, chi_D) for quadratic fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import DomainError, dirichlet_L
from .arith import fundamental_unit
from .numberfield import (
    Cyclotomic,
    FieldDescriptor,
    FieldInvariants,
    Ingested,
    Quadratic,
    UnsupportedKindError,
    field_invariants,
    is_fundamental_discriminant,
)

__all__ = [
    "ClassData",
    "ResidueValue",
    "RoundingGapError",
    "INGESTED_RTOL",
    "class_number_imaginary",
    "class_data_imaginary",
    "class_data_real",
    "roots_of_unity_count",
    "residue_kappa",
    "brauer_siegel_ratio",
    "class_data_discrepancy",
]

# Relative tolerance when validating ingested (h, R, w) against the analytic
# class number formula.
INGESTED_RTOL = 1e-3


class RoundingGapError(ArithmeticError):
    """The analytic class number landed too far from an integer.

    Signals insufficient L-value precision; retry with a tighter target.
    """


@dataclass(frozen=True)
class ClassData:
    """Class number h, regulator R (1 for imaginary quadratic), torsion w."""

    h: int
    R: float
    w: int
    source: str = "computed"

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("class number must be >= 1")
        if not self.R > 0:
            raise ValueError("regulator must be positive")
        if self.w < 2 or self.w % 2:
            raise ValueError("root-of-unity count must be even and >= 2")
        if self.source not in ("computed", "ingested"):
            raise ValueError("source must be 'computed' or 'ingested'")


@dataclass(frozen=True)
class ResidueValue:
    """kappa_K = 2^r1 (2pi)^r2 h R / (w sqrt|D|) plus the inputs it came from.

    ``components`` is (phi_R, phi_C, h, R, w, |D|); recomputing the formula
    from them reproduces ``kappa`` bit-identically.
    """

    kappa: float
    components: tuple

    def __post_init__(self):
        if self.kappa != _kappa_formula(*self.components):
            raise ValueError("kappa does not match its components")

    @property
    def log_kappa(self) -> float:
        return math.log(self.kappa)


def _kappa_formula(phi_R: int, phi_C: int, h: int, R: float, w: int, absD: int) -> float:
    return 2.0**phi_R * (2.0 * math.pi) ** phi_C * h * R / (w * math.sqrt(float(absD)))


# --------------------------------------------------------------------------
# imaginary quadratic: exact reduced-form counting
# --------------------------------------------------------------------------


def class_number_imaginary(D: int) -> int:
    """Exact class number of the imaginary quadratic field of discriminant D.

    Counts reduced binary quadratic forms ax^2 + bxy + cy^2 of discriminant
    b^2 - 4ac = D with |b| <= a <= c and b >= 0 whenever |b| = a or a = c.
    """
    if D >= 0 or not is_fundamental_discriminant(D):
        raise DomainError(f"D={D} is not a negative fundamental discriminant")
    absD = -D
    h = 0
    b_max = math.isqrt(absD // 3)
    for b in range(absD & 1, b_max + 1, 2):
        n = (b * b + absD) >> 2  # = a*c, exact since b^2 = D mod 4
        if b == 0:
            a = np.arange(1, math.isqrt(n) + 1, dtype=np.int64)
        else:
            a = np.arange(b, math.isqrt(n) + 1, dtype=np.int64)
        if a.size == 0:
            continue
        divides = a[n % a == 0]
        if b == 0:
            h += divides.size  # (a, 0, c) with a <= c: one form each
        else:
            # b < a < c contributes both signs of b; a = b or a = c only +b
            boundary = (divides == b) | (divides * divides == n)
            h += 2 * divides.size - int(np.count_nonzero(boundary))
    return h


def roots_of_unity_count(F: FieldDescriptor) -> int:
    """Number of roots of unity w_K (hardcoded per field kind)."""
    if isinstance(F, Quadratic):
        inv = field_invariants(F)
        if inv.discriminant == -3:
            w = 6
        elif inv.discriminant == -4:
            w = 4
        else:
            w = 2
    elif isinstance(F, Cyclotomic):
        w = F.n if F.n % 2 == 0 else 2 * F.n  # lcm(2, n)
    elif isinstance(F, Ingested):
        if F.torsion_w is not None:
            w = F.torsion_w
        elif F.signature[0] > 0:
            w = 2  # a real embedding leaves only +-1
        else:
            raise UnsupportedKindError(
                f"record {F.label} has no torsion data and no real embedding"
            )
    else:
        raise UnsupportedKindError("roots_of_unity_count needs a non-Monogenic kind")
    degree = field_invariants(F).degree
    assert w <= 4 * degree * degree, "w_K exceeds the O(n_K^2) sanity bound"
    return w


def class_data_imaginary(D: int) -> ClassData:
    """ClassData for an imaginary quadratic field: counted h, R = 1, w rule."""
    h = class_number_imaginary(D)
    w = 6 if D == -3 else 4 if D == -4 else 2
    return ClassData(h=h, R=1.0, w=w, source="computed")


# --------------------------------------------------------------------------
# real quadratic: regulator from the fundamental unit, h from L(1, chi)
# --------------------------------------------------------------------------


def class_data_real(D: int, precision_target: float = 1e-12) -> ClassData:
    """ClassData for a real quadratic field of fundamental discriminant D > 1.

    R is the exact continued-fraction regulator; h is recovered from
    h = sqrt(D) L(1, chi_D) / (2R) and must land within 0.1 of an integer,
    else RoundingGapError (retry with a tighter precision_target).
    """
    if D <= 1 or not is_fundamental_discriminant(D):
        raise DomainError(f"D={D} is not a real fundamental discriminant")
    m = D if D % 4 == 1 else D // 4
    R = fundamental_unit(m).regulator
    L1 = dirichlet_L(1.0, D, precision_target)
    h_exact = math.sqrt(D) * L1 / (2.0 * R)
    h = round(h_exact)
    if abs(h_exact - h) > 0.1:
        raise RoundingGapError(
            f"analytic class number {h_exact} for D={D} is {abs(h_exact - h):.3g} "
            "from an integer; insufficient L-value precision"
        )
    return ClassData(h=h, R=R, w=2, source="computed")


# --------------------------------------------------------------------------
# residue and ratio assembly
# --------------------------------------------------------------------------


def residue_kappa(inv: FieldInvariants, cd: ClassData) -> ResidueValue:
    """kappa_K = 2^{phi_R} (2 pi)^{phi_C} h R / (w sqrt|D|)."""
    phi_R, phi_C = inv.signature
    absD = abs(inv.discriminant)
    kappa = _kappa_formula(phi_R, phi_C, cd.h, cd.R, cd.w, absD)
    return ResidueValue(kappa=kappa, components=(phi_R, phi_C, cd.h, cd.R, cd.w, absD))


def brauer_siegel_ratio(inv: FieldInvariants, cd: ClassData) -> float:
    """log(h R) / g_K, the per-field Brauer--Siegel statistic."""
    if not inv.genus > 0:
        raise ValueError("genus must be positive")
    return math.log(cd.h * cd.R) / inv.genus


def class_data_discrepancy(
    inv: FieldInvariants, cd: ClassData, precision_target: float = 1e-12
) -> float:
    """Relative disagreement between (h, R, w) and the analytic formula.

    For quadratic fields kappa_K must equal L(1, chi_D); the returned value
    is |kappa - L(1, chi_D)| / L(1, chi_D).  Ingested degree-2 records are
    accepted when this is at most INGESTED_RTOL, flagged otherwise; records
    of higher degree cannot be checked this way (UnsupportedKindError).
    """
    if inv.degree != 2:
        raise UnsupportedKindError("analytic-formula validation requires degree 2")
    D = inv.discriminant
    kappa = residue_kappa(inv, cd).kappa
    L1 = dirichlet_L(1.0, D, precision_target)
    return abs(kappa - L1) / abs(L1)
