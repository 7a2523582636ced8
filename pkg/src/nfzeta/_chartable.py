"""Character tables: Kronecker characters chi_D and Dirichlet groups mod n.

The Kronecker table is built by an additive parity sieve: chi_D is completely
multiplicative with values in {-1, 0, 1}, so chi_D(m) is (-1)^t(m) on m coprime
to D, where t(m) counts prime-power divisors p^e | m with chi_D(p) = -1 --
a completely additive quantity that numpy can sieve with slice XORs.

Dirichlet groups decompose (Z/nZ)^* into cyclic components via primitive
roots (and the <-1, 5> presentation at powers of two); characters are stored
as exact phase numerators so conductor computations need no float compares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
import numpy as np

from .arith import euler_phi, factorize, primes_up_to

__all__ = ["chi_kronecker_table", "DirichletCharacter", "dirichlet_characters"]


def chi_kronecker_table(D: int, limit: int) -> np.ndarray:
    """chi_D(m) for m = 0..limit as int8; chi_D(m) = kronecker(D, m).

    Completely multiplicative in m and, for fundamental D, periodic mod |D|.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    parity = np.zeros(limit + 1, dtype=np.uint8)
    kron = gmpy2.kronecker
    small_cut = max(64, limit >> 3)  # below this, slice per prime power
    big_minus: list[int] = []
    zero_primes: list[int] = []
    for p_ in primes_up_to(limit):
        p = int(p_)
        v = kron(D, p)
        if v == 1:
            continue
        if v == 0:
            zero_primes.append(p)
        elif p <= small_cut:
            pe = p
            while pe <= limit:
                parity[pe::pe] ^= 1
                pe *= p
        else:
            big_minus.append(p)
    if big_minus:
        # p > limit/8: only the first power matters and the multiples k*p
        # (k < 8 < p) are distinct across distinct primes, so one scatter works
        bp = np.asarray(big_minus, dtype=np.int64)
        kmax = limit // bp[0] + 1
        mults = bp[:, None] * np.arange(1, kmax + 1, dtype=np.int64)[None, :]
        idx = mults[mults <= limit]
        parity[idx] ^= 1
    chi = np.where(parity == 0, np.int8(1), np.int8(-1))
    for p in zero_primes:
        chi[p::p] = 0
    chi[0] = 0
    return chi


# ---------------------------------------------------------------------------
# Dirichlet characters mod n
# ---------------------------------------------------------------------------


def _primitive_root_mod_pe(p: int, e: int) -> int:
    """A generator of (Z/p^e Z)^* for odd prime p."""
    phi_p = p - 1
    fac = [q for q, _ in factorize(phi_p).factors]
    g = 2
    while True:
        if all(pow(g, phi_p // q, p) != 1 for q in fac):
            break
        g += 1
    if e == 1:
        return g
    # lift: g works mod p^e unless g^(p-1) = 1 mod p^2
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _cyclic_components(n: int) -> list[tuple[int, int, int]]:
    """(modulus p^e, generator, order) components of (Z/nZ)^* under CRT."""
    comps: list[tuple[int, int, int]] = []
    for p, e in factorize(n).factors:
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                comps.append((4, 3, 2))
            else:
                comps.append((pe, pe - 1, 2))
                comps.append((pe, 5, 2 ** (e - 2)))
        else:
            comps.append((pe, _primitive_root_mod_pe(p, e), euler_phi(pe)))
    return comps


@dataclass(frozen=True)
class DirichletCharacter:
    """One character mod n, plus the primitive character inducing it.

    ``phase_num[x]`` holds the exact numerator of the phase: the character
    value at x coprime to n is exp(2*pi*i*phase_num[x]/phase_den); -1 marks
    non-coprime x.  ``conductor`` and the induced primitive table ``primitive``
    (complex values on 0..conductor-1, zeros off the units) are precomputed.
    """

    modulus: int
    index: tuple[int, ...]
    phase_den: int
    phase_num: np.ndarray
    conductor: int
    primitive: np.ndarray

    @property
    def is_principal(self) -> bool:
        return self.conductor == 1

    @property
    def is_real(self) -> bool:
        return bool(np.all((self.primitive.imag == 0)))

    def values(self) -> np.ndarray:
        """Character values chi(0..n-1) of the character mod n itself."""
        out = np.zeros(self.modulus, dtype=np.complex128)
        ok = self.phase_num >= 0
        out[ok] = np.exp(2j * np.pi * self.phase_num[ok] / self.phase_den)
        return out


@lru_cache(maxsize=64)
def dirichlet_characters(n: int) -> tuple[DirichletCharacter, ...]:
    """All phi(n) Dirichlet characters mod n with conductors and primitives."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    comps = _cyclic_components(n)
    orders = [d for _, _, d in comps]
    # discrete logs of every unit in each cyclic component
    xs = np.arange(n, dtype=np.int64)
    coprime = np.array([math.gcd(int(x), n) == 1 for x in xs])
    dlogs = np.zeros((len(comps), n), dtype=np.int64)
    for i, (pe, g, d) in enumerate(comps):
        table: dict[int, int] = {}
        if pe % 2 == 0 and pe >= 8:
            # <-1, 5> presentation of (Z/2^e)^*: x = (-1)^s 5^k uniquely,
            # with s = 0 iff x = 1 mod 4 and k read off the 5-power table
            if g == 5:
                pow5: dict[int, int] = {}
                acc = 1
                for k in range(d):
                    pow5[acc] = k
                    acc = acc * 5 % pe
                for r in range(1, pe, 2):
                    table[r] = pow5[r if r % 4 == 1 else pe - r]
            else:  # the sign component, order 2
                for r in range(1, pe, 2):
                    table[r] = 0 if r % 4 == 1 else 1
        else:
            acc = 1
            for k in range(d):
                table[acc] = k
                acc = acc * g % pe
        for x in range(n):
            if coprime[x]:
                dlogs[i, x] = table[x % pe]
    den = math.lcm(*orders) if orders else 1
    divisors = sorted(d for d in range(1, n + 1) if n % d == 0)
    out: list[DirichletCharacter] = []
    for flat in range(max(1, math.prod(orders))):
        idx = []
        rem = flat
        for d in orders:
            idx.append(rem % d)
            rem //= d
        index = tuple(idx)
        phase = np.full(n, -1, dtype=np.int64)
        if len(comps) == 0:
            phase[coprime] = 0
        else:
            acc = np.zeros(n, dtype=np.int64)
            for i, d in enumerate(orders):
                acc += (den // d) * (index[i] * dlogs[i])
            phase[coprime] = acc[coprime] % den
        conductor = n
        for f in divisors:
            ok = True
            for x in range(1, n, f):
                if coprime[x] and phase[x] != 0:
                    ok = False
                    break
            if ok:
                conductor = f
                break
        prim = np.zeros(conductor, dtype=np.complex128)
        for b in range(conductor):
            if math.gcd(b, conductor) != 1:
                continue
            x = b
            while math.gcd(x, n) != 1:
                x += conductor
            prim[b] = np.exp(2j * np.pi * phase[x % n] / den)
        # snap exactly-real values (quadratic and principal characters)
        if np.allclose(prim.imag, 0.0, atol=1e-14):
            prim = prim.real.round().astype(np.complex128)
        out.append(DirichletCharacter(n, index, den, phase, conductor, prim))
    return tuple(out)
