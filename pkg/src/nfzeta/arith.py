"""Exact integer and elementary number-theory primitives.

Everything here is pure integer/rational arithmetic: Kronecker symbols,
factorization (trial division + deterministic Miller-Rabin + Pollard rho),
prime sieves, fundamental units of real quadratic orders via continued
fractions, and exact Bernoulli numbers for Euler-Maclaurin tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
import numpy as np

__all__ = [
    "Factorization",
    "ContinuedFractionUnit",
    "kronecker_symbol",
    "factorize",
    "prime_power_split",
    "fundamental_unit",
    "bernoulli_numbers",
    "primes_up_to",
    "is_prime",
    "is_squarefree",
    "squarefree_part",
    "euler_phi",
    "multiplicative_order",
    "log_of_big",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with primes strictly increasing and exponents >= 1."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last_p = 1
        for p, e in self.factors:
            if p <= last_p or e < 1:
                raise ValueError("factors must be (prime, exponent>=1), primes increasing")
            prod *= p**e
            last_p = p
        if prod != self.value:
            raise ValueError(f"factor list does not reconstruct {self.value}")


@dataclass(frozen=True)
class ContinuedFractionUnit:
    """Minimal unit of the maximal order of Q(sqrt(d)), d squarefree.

    For d = 1 mod 4 the unit is (x + y*sqrt(d))/2 and (x, y) is the minimal
    positive solution of x^2 - d y^2 = +-4; otherwise the unit is x + y*sqrt(d)
    and x^2 - d y^2 = +-1.  ``norm_rhs`` records the signed right-hand side.
    """

    d: int
    x: int
    y: int
    period: int
    norm_rhs: int

    @property
    def regulator(self) -> float:
        """log of the unit as a positive real, overflow-safe for huge x, y."""
        r = log_of_big(self.x) + math.log1p(math.sqrt(_big_ratio(self.y * self.y * self.d, self.x * self.x)))
        if self.d % 4 == 1:
            r -= _LN2
        return r


def log_of_big(n: int) -> float:
    """Natural log of a positive integer of any size (bit-length + mantissa)."""
    if n <= 0:
        raise ValueError("log_of_big needs a positive integer")
    b = n.bit_length()
    if b <= 900:
        return math.log(n)
    shift = b - 64
    return math.log(n >> shift) + shift * _LN2


def _big_ratio(num: int, den: int) -> float:
    """num/den as a float for arbitrary-size positive integers of similar size."""
    if num == 0:
        return 0.0
    return float((num << 80) // den) / 2.0**80


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) in {-1, 0, 1}, defined for all n != 0.

    Conventions: (a|2) is 0 for even a, +1 for a = +-1 mod 8, -1 otherwise;
    (a|1) = 1; (a|-1) = 1 for a >= 0 and -1 for a < 0, so the symbol is
    fully multiplicative in n over the factorization n = sign * 2^e * odd.
    """
    if n == 0:
        raise ValueError("kronecker_symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out twos from n
    t = (n & -n).bit_length() - 1  # 2-adic valuation of n
    n >>= t
    if t:
        if a & 1 == 0:
            return 0
        if t & 1 and a % 8 in (3, 5):
            result = -result
    # now n is odd and positive: Jacobi symbol with reciprocity
    a %= n
    while a:
        while a & 1 == 0:
            a >>= 1
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# ---------------------------------------------------------------------------
# primality and factorization
# ---------------------------------------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic < 3.3e24


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the 64-bit range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> Factorization:
    """Exact factorization for 1 <= n < 2^63."""
    if not 1 <= n < 2**63:
        raise ValueError("factorize supports 1 <= n < 2^63")
    value = n
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < 4096:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) & 7
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(value, tuple(sorted(out.items())))


def prime_power_split(q: int) -> tuple[int, int] | None:
    """(p, f) with p^f = q when q >= 2 is a prime power, else None."""
    if q < 2:
        raise ValueError("prime_power_split needs q >= 2")
    fac = factorize(q).factors
    if len(fac) == 1:
        return fac[0]
    return None


# ---------------------------------------------------------------------------
# prime sieve (shared, grow-on-demand)
# ---------------------------------------------------------------------------

_sieve_primes = np.array([2, 3, 5, 7], dtype=np.int64)
_sieve_limit = 10


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (cached, grown geometrically)."""
    global _sieve_primes, _sieve_limit
    if n > _sieve_limit:
        limit = max(n, 2 * _sieve_limit, 1 << 10)
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        _sieve_primes = np.flatnonzero(flags).astype(np.int64)
        _sieve_limit = limit
    return _sieve_primes[: np.searchsorted(_sieve_primes, n, side="right")]


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    return all(e == 1 for _, e in factorize(n).factors)


def squarefree_part(n: int) -> int:
    """n divided by its largest square divisor, sign preserved (Q(sqrt n) = Q(sqrt part))."""
    if n == 0:
        raise ValueError("squarefree_part undefined at 0")
    sign = -1 if n < 0 else 1
    k = 1
    for p, e in factorize(abs(n)).factors:
        if e & 1:
            k *= p
    return sign * k


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    phi = n
    for p, _ in factorize(n).factors:
        phi -= phi // p
    return phi


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)^*; requires gcd(a, n) = 1."""
    if n < 1 or math.gcd(a, n) != 1:
        raise ValueError("multiplicative_order needs gcd(a, n) = 1, n >= 1")
    if n == 1:
        return 1
    t = euler_phi(n)
    for p, _ in factorize(t).factors:
        while t % p == 0 and pow(a, t // p, n) == 1:
            t //= p
    return t


# ---------------------------------------------------------------------------
# fundamental units
# ---------------------------------------------------------------------------


def fundamental_unit(d: int) -> ContinuedFractionUnit:
    """Minimal unit > 1 of the maximal order of Q(sqrt(d)) for squarefree d >= 2.

    The continued fraction of sqrt(d) yields the minimal solution of
    x^2 - d y^2 = +-1.  For d = 1 mod 4 the maximal order Z[(1+sqrt(d))/2]
    may contain a smaller half-integral unit; it exists iff t^3 -+ 3t = 2x
    has an integer root t with (t^2 -+ 4)/d a perfect square (the Z[sqrt(d)]
    unit is then the cube of the half-unit), which is checked exactly.
    Python integers never overflow, so no fallback path is needed: the same
    exact arithmetic covers famously long periods (d = 94, 151, ...).
    """
    if d < 2 or not is_squarefree(d):
        raise ValueError("fundamental_unit needs squarefree d >= 2")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError("d must not be a perfect square")
    # PQa loop: sqrt(d) = [a0; a1, a2, ...], convergents h/k; the period ends
    # at the first index i >= 1 with Q_i = 1, where h^2 - d k^2 = (-1)^i
    h_prev2, h_prev1 = 1, a0
    k_prev2, k_prev1 = 0, 1
    p_cur, q_cur = a0, d - a0 * a0
    period = 0
    while True:
        period += 1
        if q_cur == 1:
            x1, y1 = h_prev1, k_prev1
            break
        a = (p_cur + a0) // q_cur
        p_next = a * q_cur - p_cur
        q_next = (d - p_next * p_next) // q_cur
        h_prev2, h_prev1 = h_prev1, a * h_prev1 + h_prev2
        k_prev2, k_prev1 = k_prev1, a * k_prev1 + k_prev2
        p_cur, q_cur = p_next, q_next
    n1 = x1 * x1 - d * y1 * y1  # +-1 by construction
    if d % 4 != 1:
        return ContinuedFractionUnit(d, x1, y1, period, n1)
    # maximal-order refinement: look for (t + u*sqrt(d))/2 with t^2 - d u^2 = 4*n1
    two_x = 2 * x1
    t0, exact = gmpy2.iroot(two_x, 3)
    for t in (int(t0) - 1, int(t0), int(t0) + 1):
        if t < 1:
            continue
        if t * t * t - 3 * n1 * t == two_x:
            num = t * t - 4 * n1
            if num % d == 0:
                u2 = num // d
                u = math.isqrt(u2)
                if u * u == u2 and u >= 1:
                    return ContinuedFractionUnit(d, t, u, period, 4 * n1)
    return ContinuedFractionUnit(d, 2 * x1, 2 * y1, period, 4 * n1)


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_all(m_max: int) -> tuple[Fraction, ...]:
    """B_0..B_{m_max} by the defining recurrence, B_1 = -1/2 convention."""
    b: list[Fraction] = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli_numbers(k_max: int) -> list[Fraction]:
    """Exact [B_2, B_4, ..., B_{2*k_max}]; k_max <= 30."""
    if not 1 <= k_max <= 30:
        raise ValueError("bernoulli_numbers supports 1 <= k_max <= 30")
    table = _bernoulli_all(2 * k_max)
    return [table[2 * k] for k in range(1, k_max + 1)]
