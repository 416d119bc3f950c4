"""Exact integer and rational helpers.

Everything in the package runs on arbitrary-precision integers and
`fractions.Fraction`; there are no floats anywhere.  This module collects the
number-theoretic primitives the pipelines share: nonnegative gcds, p-parts,
generators of rational subgroups, and surjection counts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import AllZero, NotPrime, ZeroArgument

# The package-wide exact rational type.  fractions.Fraction already keeps
# values in lowest terms with positive denominators and raises on division
# by zero, which is exactly the contract the pipelines rely on.
Rational = Fraction


def gcd_nonneg(a: int, b: int) -> int:
    """Nonnegative generator of the ideal a*Z + b*Z, with gcd(0, 0) == 0."""
    return math.gcd(a, b)


def is_prime(p: int) -> bool:
    """Trial-division primality test; fine for the prime sizes used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def p_exponent(a: int, p: int) -> int:
    """Exponent r of the exact power p**r dividing a (a nonzero, p prime)."""
    if a == 0:
        raise ZeroArgument("p-adic exponent of 0 is undefined")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    a = abs(a)
    r = 0
    while a % p == 0:
        a //= p
        r += 1
    return r


def p_part(a: int, p: int) -> int:
    """The p-part of a: the power p**r itself, not the exponent.

    p**r divides a and p**(r+1) does not.  Always a positive integer; use
    p_exponent for the exponent r.
    """
    return p ** p_exponent(a, p)


def frac_gcd(values: Iterable[Fraction | int]) -> Fraction:
    """Positive generator of the additive subgroup of Q spanned by values.

    Every input is an integer multiple of the result, and the result is an
    integer combination of the inputs.  Computed by clearing denominators:
    the gcd of the scaled numerators over the lcm of the denominators.
    Raises AllZero when no nonzero value is supplied.
    """
    vals = [Fraction(v) for v in values]
    nonzero = [v for v in vals if v != 0]
    if not nonzero:
        raise AllZero("frac_gcd needs at least one nonzero value")
    denom = math.lcm(*(v.denominator for v in nonzero))
    num = math.gcd(*(v.numerator * (denom // v.denominator) for v in nonzero))
    return Fraction(num, denom)


def surjections(m: int, k: int) -> int:
    """Number of surjections from an m-element set onto a k-element set.

    Inclusion-exclusion: sum_{j=0..k} (-1)^j C(k,j) (k-j)^m.  Equals
    k! * Stirling2(m, k), and is 0 whenever k > m.
    """
    if m < 1 or k < 1:
        raise ValueError("surjections requires m >= 1 and k >= 1")
    total = 0
    for j in range(k + 1):
        term = math.comb(k, j) * (k - j) ** m
        total += -term if j & 1 else term
    return total
