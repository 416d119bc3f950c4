"""Image of the comparison map from symplectic K-theory to top cohomology.

The image of a degree-(4n+2) class group under the comparison map is a
subgroup of Z; its generators come from scaling the tabulated top
coefficients by (2n+1)!.  The order of the Samelson product of the bottom
cell with the rank-n quasi-projective inclusion is the index of that image,
computed along two independent routes (plain gcd, and element order in a
Smith-form cokernel) that must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd

from .arith import is_prime, p_part
from .chdata import phi_generator_tops
from .errors import GuardFailed, NonIntegralGenerator, NotPrime, OracleMismatch
from .lattice import IntMatrix, element_order_in_coker


def closed_form_order(n: int) -> int:
    """The closed form 4n(2n+1) that the pipeline output is checked against."""
    return 4 * n * (2 * n + 1)


@dataclass(frozen=True)
class PhiResult:
    """Image data for rank n.

    lower_gen is the scaled doubled-line anchor (always 4n(2n+1)); the image
    is generated by upper_gens.  pinned_order is their gcd when it coincides
    with lower_gen, which pins the image exactly; None means the two bounds
    left a gap (the order is not pinned).
    """

    n: int
    backend: str
    lower_gen: int
    upper_gens: tuple[int, ...]
    pinned_order: int | None


def phi_image(n: int, backend: str = "series") -> PhiResult:
    """Compute the image subgroup data for rank n.

    Each generator is (2n+1)! times a tabulated top coefficient and must be
    an integer; a non-integral product means the coefficient convention is
    broken and raises NonIntegralGenerator.  Signs are dropped, since a
    subgroup of Z does not see them.
    """
    if n < 1:
        raise GuardFailed("rank must be a positive integer")
    scale = factorial(2 * n + 1)
    gens = []
    for top in phi_generator_tops(n, backend):
        val = scale * top
        if val.denominator != 1:
            raise NonIntegralGenerator(
                f"(2n+1)! * {top} is not an integer at n={n}"
            )
        gens.append(abs(int(val)))
    lower = gens[0]
    g = 0
    for x in gens:
        g = gcd(g, x)
    return PhiResult(
        n=n,
        backend=backend,
        lower_gen=lower,
        upper_gens=tuple(gens),
        pinned_order=g if g == lower else None,
    )


def samelson_order(n: int) -> int:
    """Order of the Samelson product of the bottom cell with the rank-n
    quasi-projective inclusion.

    Runs the series-backend image pipeline, reads the order both as the gcd
    of the image generators and as the order of the fundamental class in the
    cokernel of the image presentation, and checks both against the closed
    form 4n(2n+1).  Any disagreement raises OracleMismatch.
    """
    result = phi_image(n, "series")
    if result.pinned_order is None:
        raise OracleMismatch(
            f"series-backend image at n={n} failed to pin the order"
        )
    direct = result.pinned_order
    presentation = IntMatrix.from_rows([list(result.upper_gens)])
    via_coker = element_order_in_coker(presentation, [1])
    if via_coker != direct:
        raise OracleMismatch(
            f"gcd route gave {direct} but cokernel route gave {via_coker} at n={n}"
        )
    if direct != closed_form_order(n):
        raise OracleMismatch(
            f"pipeline order {direct} differs from closed form "
            f"{closed_form_order(n)} at n={n}"
        )
    return direct


def identity_samelson_p_part(n: int, p: int) -> int:
    """p-part of the order of the Samelson product of the bottom cell with
    the identity map, valid under the retractibility guard.

    Requires p prime and (p-1)^2 + 1 >= 2n; outside the guard the underlying
    theorem says nothing and GuardFailed is raised.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (p - 1) ** 2 + 1 < 2 * n:
        raise GuardFailed(
            f"retractibility guard (p-1)^2+1 >= 2n fails for n={n}, p={p}"
        )
    return p_part(closed_form_order(n), p)
