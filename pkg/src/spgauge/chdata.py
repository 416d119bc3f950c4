"""Chern-character data for the named K/KSp generators.

Tables for the rank-2 quasi-projective space pin complete coefficient
vectors (the theta pair on the single suspension, the rho pair on the
5-fold suspension); for the rank-n family only leading and top-degree
coefficients are tabulated, which is all the image computations consume.
Suspension indices reduce mod 8 for KSp queries, with coefficients carried
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .errors import OutOfRange, Unsupported
from .series import top_coeff


class SpaceFamily(Enum):
    SUSP_QN = "susp_qn"
    SUSP_Q2 = "susp_q2"


@dataclass(frozen=True)
class Space:
    """A suspension of a quasi-projective space.

    The reduced cohomology in the relevant odd degrees is free on classes
    y_(4j-1), j = 1..rank, each shifted by the suspension count.
    """

    family: SpaceFamily
    rank: int
    susp: int

    def __post_init__(self):
        if self.rank < 1:
            raise OutOfRange("rank must be a positive integer")
        if self.susp < 0:
            raise OutOfRange("suspension count must be nonnegative")
        if self.family is SpaceFamily.SUSP_Q2 and self.rank != 2:
            raise OutOfRange("the Q2 family has rank 2")

    def basis_degree(self, j: int) -> int:
        """Topological degree of the suspended basis class indexed by j."""
        if not 1 <= j <= self.rank:
            raise OutOfRange(f"basis index {j} outside 1..{self.rank}")
        return 4 * j - 1 + self.susp


def susp_q2(susp: int) -> Space:
    return Space(SpaceFamily.SUSP_Q2, 2, susp)


def susp_qn(rank: int, susp: int) -> Space:
    return Space(SpaceFamily.SUSP_QN, rank, susp)


@dataclass(frozen=True)
class ChVector:
    """Chern-character coefficients on a space's basis; absent index means 0.

    u_power counts Bott-class factors attached to the underlying K-class.
    Dividing by the Bott class is pure bookkeeping (a u_power shift); it
    never changes the stored coefficients.
    """

    space: Space
    entries: tuple[tuple[int, Fraction], ...]
    u_power: int = 0

    def __post_init__(self):
        seen = set()
        for j, c in self.entries:
            if not 1 <= j <= self.space.rank:
                raise OutOfRange(f"coefficient index {j} outside 1..{self.space.rank}")
            if j in seen:
                raise OutOfRange(f"duplicate coefficient index {j}")
            seen.add(j)

    @classmethod
    def from_dict(cls, space: Space, coeffs, u_power: int = 0) -> "ChVector":
        items = tuple(sorted((j, Fraction(c)) for j, c in coeffs.items()))
        return cls(space, items, u_power)

    def coeff(self, j: int) -> Fraction:
        if not 1 <= j <= self.space.rank:
            raise OutOfRange(f"coefficient index {j} outside 1..{self.space.rank}")
        for idx, c in self.entries:
            if idx == j:
                return c
        return Fraction(0)

    def shift_u(self, delta: int) -> "ChVector":
        """Multiply or divide by Bott classes: only the bookkeeping moves."""
        return ChVector(self.space, self.entries, self.u_power + delta)


@dataclass(frozen=True)
class Generator:
    """A named free generator of a K/KSp group with its tabulated ch data.

    ch is the full coefficient vector when the tables pin every entry, and
    None when only the leading coefficient is known.
    """

    name: str
    space: Space
    leading_index: int
    leading_coeff: Fraction
    ch: ChVector | None


def _q2_pair(susp: int, tables) -> list[Generator]:
    out = []
    for name, lead_idx, lead, coeffs in tables:
        space = susp_q2(susp)
        out.append(
            Generator(name, space, lead_idx, Fraction(lead),
                      ChVector.from_dict(space, coeffs))
        )
    return out


# Full coefficient vectors on the rank-2 space; index 1 is y_3, index 2 is y_7.
_THETA_TABLE = (
    ("theta1", 1, 1, {1: Fraction(1), 2: Fraction(-1, 6)}),
    ("theta2", 2, 2, {2: Fraction(2)}),
)
_RHO_TABLE = (
    ("rho1", 1, 2, {1: Fraction(2), 2: Fraction(1, 3)}),
    ("rho2", 2, 1, {2: Fraction(1)}),
)


def zeta_leading(i: int) -> int:
    """Leading coefficient of the i-th rank-n symplectic generator: 1 for
    even i, 2 for odd i."""
    if i < 1:
        raise OutOfRange("generator index must be positive")
    return 1 if i % 2 == 0 else 2


def zeta1_top(n: int) -> Fraction:
    """Top-degree coefficient of the first symplectic generator in rank n.

    The first generator is the symplectification of the doubled Hopf line,
    so its top coefficient is 2/(2n-1)!.
    """
    if n < 1:
        raise OutOfRange("rank must be positive")
    return Fraction(2, factorial(2 * n - 1))


def ksp_basis(space: Space) -> list[Generator]:
    """Free basis of the reduced symplectic K-group of the space.

    Suspension indices reduce mod 8 (Bott periodicity).  Rank-2 suspensions
    congruent to 1 return the theta pair, congruent to 5 the rho pair, and
    congruent to 0 mod 4 the zero group (empty list).  The rank-n family is
    tabulated at suspensions congruent to 5, where the group is free on
    generators zeta_1..zeta_n with leading coefficients 2,1,2,1,...; only
    those leading entries are pinned, so ch is None there.  Everything else
    raises Unsupported.
    """
    if space.susp == 0:
        raise Unsupported("unsuspended spaces are not tabulated")
    r = space.susp % 8
    if space.family is SpaceFamily.SUSP_Q2:
        if r == 1:
            return _q2_pair(space.susp, _THETA_TABLE)
        if r == 5:
            return _q2_pair(space.susp, _RHO_TABLE)
        if r % 4 == 0:
            return []
        raise Unsupported(f"rank-2 suspension {space.susp} is not tabulated")
    if r == 5:
        return [
            Generator(f"zeta{i}", space, i, Fraction(zeta_leading(i)), None)
            for i in range(1, space.rank + 1)
        ]
    raise Unsupported(
        f"rank-{space.rank} family tabulated only at suspensions 5 mod 8"
    )


def phi_generator_tops(n: int, backend: str = "series") -> list[Fraction]:
    """Top-degree coefficients of a generating set for the comparison-map
    domain's image in cohomology, rank n.

    The symplectification of the group splits off the doubled-line anchor
    2/(2n-1)! (from zeta_1); the remaining generators land in the span of
    the k-th Hopf powers for k = 2..n, whose top coefficients come from
    top_coeff.  Length n.
    """
    if n < 1:
        raise OutOfRange("rank must be positive")
    return [zeta1_top(n)] + [top_coeff(n, k, backend) for k in range(2, n + 1)]


def generator_table_json() -> dict:
    """The tabulated full coefficient vectors as a JSON-ready document.

    All numbers are numerator/denominator string pairs, so the export is
    exact and round-trippable.
    """
    gens = []
    for susp, table in ((1, _THETA_TABLE), (5, _RHO_TABLE)):
        for gen in _q2_pair(susp, table):
            gens.append({
                "name": gen.name,
                "family": gen.space.family.value,
                "rank": str(gen.space.rank),
                "susp": str(gen.space.susp),
                "u_power": str(gen.ch.u_power),
                "leading_index": str(gen.leading_index),
                "coeffs": {
                    str(j): [str(c.numerator), str(c.denominator)]
                    for j, c in gen.ch.entries
                },
            })
    return {
        "generators": gens,
        "zeta_leading": {"even_index": "1", "odd_index": "2"},
    }
