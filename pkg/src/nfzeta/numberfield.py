"""Field descriptors and exact local data: discriminants, signatures, genus,
splitting profiles Phi_q, and Dirichlet-series coefficients of zeta_K.

Splitting rules implemented exactly:
  quadratic  -- Kronecker symbol: split / inert / ramified;
  cyclotomic -- multiplicative order of p mod n (mod the p-free part when p | n);
  monogenic  -- degrees of the irreducible factors of the defining polynomial
                mod p, valid for p not dividing the polynomial discriminant
                (those p land on an exclusion list instead of being guessed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import sympy

from .arith import (
    euler_phi,
    factorize,
    is_squarefree,
    log_of_big,
    multiplicative_order,
    primes_up_to,
    squarefree_part,
)
from ._chartable import chi_kronecker_table

__all__ = [
    "Quadratic",
    "Cyclotomic",
    "Monogenic",
    "Ingested",
    "FieldDescriptor",
    "FieldInvariants",
    "SplittingProfile",
    "field_invariants",
    "splitting_profile",
    "dirichlet_coefficients",
    "euler_product_coefficients",
    "fundamental_discriminant",
    "is_fundamental_discriminant",
    "fundamental_discriminants_in",
    "field_id",
    "UnsupportedKindError",
]


class UnsupportedKindError(TypeError):
    """Raised when an operation does not support the descriptor kind."""


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quadratic:
    """Q(sqrt(m)) for squarefree m not in {0, 1}."""

    m: int

    def __post_init__(self) -> None:
        if self.m in (0, 1) or not is_squarefree(self.m):
            raise ValueError(f"Quadratic needs squarefree m != 0, 1; got {self.m}")


@dataclass(frozen=True)
class Cyclotomic:
    """Q(zeta_n) with n >= 3 normalized so n != 2 mod 4."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.n % 4 == 2:
            raise ValueError(f"Cyclotomic needs n >= 3 with n != 2 mod 4; got {self.n}")


@dataclass(frozen=True)
class Monogenic:
    """Field defined by a monic irreducible polynomial (ascending coefficients).

    coeffs = (c0, c1, ..., 1) encodes x^n + c_{n-1} x^{n-1} + ... + c0.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if len(c) < 3 or c[-1] != 1:
            raise ValueError("Monogenic needs a monic polynomial of degree >= 2")
        if not _poly(c).is_irreducible:
            raise ValueError("Monogenic polynomial must be irreducible over Q")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Ingested:
    """A database record turned into a descriptor; invariants carried verbatim."""

    label: str
    degree: int
    discriminant: int
    signature: tuple[int, int]
    coeffs: tuple[int, ...] | None = None
    h: int | None = None
    regulator: float | None = None
    torsion_w: int | None = None

    def __post_init__(self) -> None:
        r1, r2 = self.signature
        if r1 + 2 * r2 != self.degree:
            raise ValueError("signature inconsistent with degree")
        if abs(self.discriminant) <= 1:
            raise ValueError("|discriminant| must exceed 1")
        if self.coeffs is not None:
            object.__setattr__(self, "coeffs", tuple(int(v) for v in self.coeffs))


FieldDescriptor = Quadratic | Cyclotomic | Monogenic | Ingested


def field_id(F: FieldDescriptor) -> str:
    """Stable human-readable identifier used in tables and reports."""
    if isinstance(F, Quadratic):
        return f"Q(sqrt({F.m}))"
    if isinstance(F, Cyclotomic):
        return f"Q(zeta{F.n})"
    if isinstance(F, Monogenic):
        return "poly[" + ",".join(str(c) for c in F.coeffs) + "]"
    return F.label


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldInvariants:
    degree: int
    discriminant: int
    genus: float
    signature: tuple[int, int]
    disc_exact: bool = True

    def __post_init__(self) -> None:
        if abs(self.discriminant) <= 1:
            raise ValueError("every field other than Q has |D| > 1")
        r1, r2 = self.signature
        if r1 + 2 * r2 != self.degree:
            raise ValueError("signature must satisfy r1 + 2 r2 = degree")


def _poly(coeffs: tuple[int, ...]) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")


def fundamental_discriminant(m: int) -> int:
    """Fundamental discriminant of Q(sqrt(m)) for squarefree m."""
    return m if m % 4 == 1 else 4 * m


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def fundamental_discriminants_in(lo: int, hi: int) -> list[int]:
    """All fundamental discriminants D with lo <= D <= hi, ascending.

    Squarefree-ness is sieved on the window (marking multiples of p^2),
    so million-scale windows cost milliseconds.
    """
    if lo > hi:
        return []
    out: list[int] = []
    span = np.arange(lo, hi + 1, dtype=np.int64)
    sf = _squarefree_mask(lo, hi)
    mask1 = (np.mod(span, 4) == 1) & sf & (span != 1)
    # D = 4m with m = 2, 3 mod 4 squarefree
    mlo, mhi = -(-lo // 4), hi // 4
    if mlo <= mhi:
        mspan = np.arange(mlo, mhi + 1, dtype=np.int64)
        msf = _squarefree_mask(mlo, mhi)
        mask4 = (np.mod(mspan, 4) >= 2) & msf
        d4 = (4 * mspan[mask4]).tolist()
    else:
        d4 = []
    out = sorted(span[mask1].tolist() + d4)
    return out


def _squarefree_mask(lo: int, hi: int) -> np.ndarray:
    """Boolean mask over [lo, hi] marking squarefree integers (0 not squarefree)."""
    n = hi - lo + 1
    mask = np.ones(n, dtype=bool)
    top = max(abs(lo), abs(hi))
    for p_ in primes_up_to(math.isqrt(top) + 1):
        p2 = int(p_) ** 2
        start = -(-lo // p2) * p2  # smallest multiple of p^2 >= lo
        mask[start - lo :: p2] = False
    if lo <= 0 <= hi:
        mask[0 - lo] = False
    return mask


def field_invariants(F: FieldDescriptor) -> FieldInvariants:
    """Degree, exact discriminant, genus g = log sqrt|D|, and signature."""
    if isinstance(F, Quadratic):
        D = fundamental_discriminant(F.m)
        sig = (2, 0) if F.m > 0 else (0, 1)
        return FieldInvariants(2, D, 0.5 * log_of_big(abs(D)), sig)
    if isinstance(F, Cyclotomic):
        n = F.n
        phi = euler_phi(n)
        denom = 1
        for p, _ in factorize(n).factors:
            denom *= p ** (phi // (p - 1))
        D = (-1) ** (phi // 2) * n**phi // denom
        return FieldInvariants(phi, D, 0.5 * log_of_big(abs(D)), (0, phi // 2))
    if isinstance(F, Monogenic):
        return _monogenic_invariants(F)
    if isinstance(F, Ingested):
        return FieldInvariants(
            F.degree, F.discriminant, 0.5 * log_of_big(abs(F.discriminant)), F.signature
        )
    raise UnsupportedKindError(f"unknown descriptor {F!r}")


def _monogenic_invariants(F: Monogenic) -> FieldInvariants:
    p = _poly(F.coeffs)
    disc = int(p.discriminant())
    deg = F.degree
    r1 = len(sympy.real_roots(p))
    sig = (r1, (deg - r1) // 2)
    if deg == 2:
        # exact: reduce to the fundamental-discriminant rule
        D = fundamental_discriminant(squarefree_part(disc))
        return FieldInvariants(deg, D, 0.5 * log_of_big(abs(D)), sig)
    if is_squarefree(disc):
        # index^2 divides disc, so squarefree disc forces index 1
        return FieldInvariants(deg, disc, 0.5 * log_of_big(abs(disc)), sig)
    # the true D_K = disc/index^2 needs the index, which is out of scope here
    return FieldInvariants(deg, disc, 0.5 * log_of_big(abs(disc)), sig, disc_exact=False)


# ---------------------------------------------------------------------------
# splitting profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplittingProfile:
    """Phi_q for prime powers q <= bound_X, plus the infinite places.

    counts[q] is the number of prime ideals of norm exactly q; q > bound_X is
    undefined (never zero-filled).  For monogenic/inested polynomial fields,
    primes dividing the polynomial discriminant are listed in ``excluded``
    and absent from counts.
    """

    bound_X: int
    counts: dict[int, int]
    phi_R: int
    phi_C: int
    excluded: tuple[int, ...] = field(default=())

    def norm_degrees_at(self, p: int) -> int:
        """sum of f * Phi_{p^f} over prime powers p^f <= bound_X."""
        total = 0
        q, f = p, 1
        while q <= self.bound_X:
            total += f * self.counts.get(q, 0)
            q *= p
            f += 1
        return total


def splitting_profile(F: FieldDescriptor, X: int) -> SplittingProfile:
    if X < 1:
        raise ValueError("X must be >= 1")
    inv = field_invariants(F)
    if isinstance(F, Quadratic):
        counts = _quadratic_counts(inv.discriminant, X)
        return SplittingProfile(X, counts, *inv.signature)
    if isinstance(F, Cyclotomic):
        counts = _cyclotomic_counts(F.n, X)
        return SplittingProfile(X, counts, *inv.signature)
    if isinstance(F, Monogenic):
        counts, excluded = _poly_counts(F.coeffs, X)
        return SplittingProfile(X, counts, *inv.signature, excluded=excluded)
    if isinstance(F, Ingested):
        if F.coeffs is None:
            raise UnsupportedKindError(
                "ingested record has no defining polynomial; splitting unavailable"
            )
        counts, excluded = _poly_counts(F.coeffs, X)
        return SplittingProfile(X, counts, *inv.signature, excluded=excluded)
    raise UnsupportedKindError(f"unknown descriptor {F!r}")


def _quadratic_counts(D: int, X: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    chi = chi_kronecker_table(D, max(2, X)) if X >= 2 else None
    for p_ in primes_up_to(X):
        p = int(p_)
        v = int(chi[p])
        if v == 1:
            counts[p] = counts.get(p, 0) + 2
        elif v == 0:
            counts[p] = counts.get(p, 0) + 1
        elif p * p <= X:
            counts[p * p] = counts.get(p * p, 0) + 1
    return counts


def _cyclotomic_counts(n: int, X: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p_ in primes_up_to(X):
        p = int(p_)
        if n % p:
            f = multiplicative_order(p, n)
            g = euler_phi(n) // f
        else:
            m = n
            while m % p == 0:
                m //= p
            f = multiplicative_order(p, m) if m > 1 else 1
            g = euler_phi(m) // f
        q = p**f
        if q <= X:
            counts[q] = counts.get(q, 0) + g
    return counts


def _poly_counts(coeffs: tuple[int, ...], X: int) -> tuple[dict[int, int], tuple[int, ...]]:
    disc = int(_poly(coeffs).discriminant())
    counts: dict[int, int] = {}
    excluded: list[int] = []
    deg = len(coeffs) - 1
    for p_ in primes_up_to(X):
        p = int(p_)
        if disc % p == 0:
            excluded.append(p)
            continue
        for f, mult in _distinct_degree_counts(coeffs, p).items():
            q = p**f
            if q <= X:
                counts[q] = counts.get(q, 0) + mult
    return counts, tuple(excluded)


# dense polynomial arithmetic over GF(p); coefficients ascending


def _pm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        if c:
            for i, bc in enumerate(b):
                a[i + shift] = (a[i + shift] - c * bc) % p
        a.pop()
        _pm_trim(a)
        if not a:
            break
    return a


def _pm_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pm_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pm_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pm_rem(_pm_trim(out), mod, p)


def _pm_xpow_pmod(e: int, mod: list[int], p: int) -> list[int]:
    """x^e mod (mod, p) by square and multiply."""
    result = [1]
    base = [0, 1] if len(mod) > 2 else _pm_rem([0, 1], mod, p)
    while e:
        if e & 1:
            result = _pm_mulmod(result, base, mod, p)
        base = _pm_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _distinct_degree_counts(coeffs: tuple[int, ...], p: int) -> dict[int, int]:
    """{f: number of irreducible degree-f factors} of the squarefree poly mod p."""
    g = _pm_trim([c % p for c in coeffs])
    counts: dict[int, int] = {}
    d = 0
    xp = None  # x^(p^d) mod g, maintained incrementally
    while len(g) - 1 >= 1:
        d += 1
        if 2 * d > len(g) - 1:
            # remainder is a single irreducible factor
            counts[len(g) - 1] = counts.get(len(g) - 1, 0) + 1
            break
        if xp is None:
            xp = _pm_xpow_pmod(p, g, p)
            for _ in range(d - 1):
                xp = _pm_xpow_pmod_on(xp, p, g, p)
        else:
            xp = _pm_xpow_pmod_on(xp, p, g, p)
        sub = xp[:]
        # x^(p^d) - x
        while len(sub) < 2:
            sub.append(0)
        sub[1] = (sub[1] - 1) % p
        h = _pm_gcd(g, _pm_trim(sub), p)
        if len(h) - 1 >= 1:
            counts[d] = counts.get(d, 0) + (len(h) - 1) // d
            g = _pm_quotient(g, h, p)
            xp = _pm_rem(xp, g, p) if len(g) > 1 else None
            if len(g) == 1:
                break
    return counts


def _pm_xpow_pmod_on(base_xp: list[int], p: int, mod: list[int], pr: int) -> list[int]:
    """Given y = x^(p^d) mod f, return y^p = x^(p^(d+1)) mod f."""
    result = [1]
    b = base_xp[:]
    e = p
    while e:
        if e & 1:
            result = _pm_mulmod(result, b, mod, pr)
        b = _pm_mulmod(b, b, mod, pr)
        e >>= 1
    return result


def _pm_quotient(a: list[int], b: list[int], p: int) -> list[int]:
    """Exact quotient a / b over GF(p)."""
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        out[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - c * bc) % p
        a.pop()
        _pm_trim(a)
    return _pm_trim(out)


# ---------------------------------------------------------------------------
# Dirichlet coefficients of zeta_K
# ---------------------------------------------------------------------------


def dirichlet_coefficients(F: FieldDescriptor, M: int) -> np.ndarray:
    """a_1..a_M with a_m = number of integral ideals of norm m (index 0 unused).

    Quadratic fields use the divisor sum a_m = sum_{d | m} chi_D(d); cyclotomic
    fields assemble the Euler product from the splitting profile.
    """
    if not 1 <= M <= 10**6:
        raise ValueError("M must satisfy 1 <= M <= 10^6")
    if isinstance(F, Quadratic):
        D = fundamental_discriminant(F.m)
        chi = chi_kronecker_table(D, M)
        a = np.zeros(M + 1, dtype=np.int64)
        for d in range(1, M + 1):
            v = int(chi[d])
            if v:
                a[d::d] += v
        return a
    if isinstance(F, Cyclotomic):
        return euler_product_coefficients(splitting_profile(F, M), M)
    raise UnsupportedKindError("dirichlet_coefficients supports Quadratic and Cyclotomic only")


def euler_product_coefficients(profile: SplittingProfile, M: int) -> np.ndarray:
    """Expand prod_q (1 - q^{-s})^{-Phi_q} into Dirichlet coefficients a_1..a_M.

    Requires profile.bound_X >= M so every contributing prime power is known.
    """
    if profile.bound_X < M:
        raise ValueError("profile bound_X must cover M")
    if profile.excluded and any(p <= M for p in profile.excluded):
        raise ValueError("profile has excluded primes <= M; coefficients undefined")
    a = np.zeros(M + 1, dtype=np.int64)
    a[1] = 1
    for p_ in primes_up_to(M):
        p = int(p_)
        # local factor prod_f (1 - x^f)^{-c_f} as a power series in x = p^{-s}
        kmax = 0
        q = p
        while q <= M:
            kmax += 1
            q *= p
        local = [0] * (kmax + 1)
        local[0] = 1
        q, f = p, 1
        while q <= M:
            c = profile.counts.get(q, 0)
            if c:
                # multiply by (1 - x^f)^{-c}: coefficients C(c-1+j, j) at x^{f j}
                new = [0] * (kmax + 1)
                for base in range(0, kmax + 1):
                    if local[base] == 0:
                        continue
                    j = 0
                    while base + f * j <= kmax:
                        new[base + f * j] += local[base] * math.comb(c - 1 + j, j)
                        j += 1
                local = new
            q *= p
            f += 1
        if kmax >= 1 and all(v == 0 for v in local[1:]):
            continue
        # multiplicative assembly: a[n * p^k] gets local[k] * a[n] for p-free n
        pk = [1]
        while pk[-1] * p <= M:
            pk.append(pk[-1] * p)
        for n in range(1, M // p + 1):
            if n % p == 0 or a[n] == 0:
                continue
            base = a[n]
            for k in range(1, len(pk)):
                if n * pk[k] > M:
                    break
                a[n * pk[k]] = base * local[k]
    return a
