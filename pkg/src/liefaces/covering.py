"""Lower bounds for the covering type ct(X), and hence for the vertex count f_0.

Every bound here comes from a nonzero cup product x_1 ... x_L of positive
degree classes with degrees i_1 <= ... <= i_L:

    ct(X) >= L + 1 + sum_k k * i_k        (+1 when the degrees are not all equal)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import GradedPresentation
from .errors import DomainError, EmptyPresentation, ParityError, RankError


class Source(enum.Enum):
    WEIGHTED_LENGTH = "WeightedLength"
    RATIONAL_TYPE = "RationalType"
    RANK_DIM = "RankDim"
    CLASSICAL_FORMULA = "ClassicalFormula"
    KAHLER = "Kahler"


@dataclass(frozen=True)
class CtBound:
    value: int
    source: Source
    refined: bool = False
    # set when a closed form evaluated to a non-integer and was rounded up
    nonintegral: bool = False
    exact: Fraction | None = None

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class RationalType:
    """Exponents (m_1 <= ... <= m_l); the group has exterior generators in degrees 2m_j + 1."""

    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        if any(x < 0 for x in m):
            raise ValueError(f"rational type entries must be >= 0: {m}")
        if list(m) != sorted(m):
            raise ValueError(f"rational type must be nondecreasing: {m}")
        object.__setattr__(self, "m", m)

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "RationalType":
        if any(d % 2 == 0 or d < 1 for d in degrees):
            raise ValueError(f"rational generators have odd positive degrees: {list(degrees)}")
        return cls(tuple(sorted((d - 1) // 2 for d in degrees)))

    @property
    def l(self) -> int:
        return len(self.m)

    @property
    def d(self) -> int:
        return self.l + 2 * sum(self.m)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(2 * x + 1 for x in self.m)


def factor_degrees(pres: GradedPresentation) -> list[int]:
    """Degrees of the longest product of generator powers, ascending."""
    out: list[int] = []
    for g in pres.generators:
        out.extend([g.degree] * g.height)
    out.sort()
    return out


def weighted_sum(degrees: Sequence[int]) -> int:
    """sum_k k * i_k with k counted from 1."""
    return sum(k * i for k, i in enumerate(degrees, start=1))


def weighted_length_bound(pres: GradedPresentation) -> CtBound:
    """Covering-type bound from the top product of all generator powers.

    Each generator contributes its degree ``height`` times; sorting ascending
    maximizes the weighted sum by the rearrangement inequality.
    """
    degs = factor_degrees(pres)
    if not degs:
        raise EmptyPresentation(f"presentation {pres.name!r} has no generators")
    refined = len(set(degs)) > 1
    value = len(degs) + 1 + weighted_sum(degs) + (1 if refined else 0)
    return CtBound(value, Source.WEIGHTED_LENGTH, refined=refined)


def rational_type_bound(rt: RationalType) -> CtBound:
    """l + 1 + sum_j j (2 m_j + 1), taken verbatim without the +1 refinement."""
    value = rt.l + 1 + weighted_sum(rt.degrees)
    return CtBound(value, Source.RATIONAL_TYPE)


def rank_dim_bound(d: int, l: int) -> CtBound:
    """Minimum of the rational-type bound over all types of dimension d and rank l.

    With M = (d - l)/2 = q l + r the minimizing type is as balanced as possible
    and the bound is (l+1)(l+2)/2 + 2 l M - q l (l-1) - r (r-1).
    """
    if l < 1 or d < l:
        raise RankError(f"need d >= l >= 1, got d={d}, l={l}")
    if (d - l) % 2:
        raise ParityError(f"d - l must be even, got d={d}, l={l}")
    big_m = (d - l) // 2
    q, r = divmod(big_m, l)
    value = (l + 1) * (l + 2) // 2 + 2 * l * big_m - q * l * (l - 1) - r * (r - 1)
    return CtBound(value, Source.RANK_DIM)


def rank_dim_partial_sums(d: int, l: int) -> list[int]:
    """The upper bounds N_1..N_l on the partial sums m_1 + ... + m_k.

    N_l = (d - l)/2 and N_k = floor(k N_{k+1} / (k+1)).
    """
    if l < 1 or d < l or (d - l) % 2:
        raise RankError(f"invalid (d, l) = ({d}, {l})")
    n = [0] * (l + 1)
    n[l] = (d - l) // 2
    for k in range(l - 1, 0, -1):
        n[k] = (k * n[k + 1]) // (k + 1)
    return n[1:]


def _ceil_bound(exact: Fraction, source: Source) -> CtBound:
    value = math.ceil(exact)
    return CtBound(value, source, nonintegral=exact.denominator != 1, exact=exact)


CLASSICAL_FAMILIES = ("Torus", "U", "SU", "Sp", "SO")


def classical_ct_bound(family: str, n: int) -> CtBound:
    """Closed-form cubic covering-type bounds for the classical families.

    Non-integral values are rounded up and flagged ``nonintegral``; the Sp
    cubic is non-integral whenever n = 1 (mod 3).
    """
    if family not in CLASSICAL_FAMILIES:
        raise DomainError(f"unknown classical family {family!r}; expected one of {CLASSICAL_FAMILIES}")
    if n < 1 or (family == "SO" and n < 2):
        raise DomainError(f"{family}(n) needs n >= {2 if family == 'SO' else 1}, got {n}")
    if family == "Torus":
        exact = Fraction((n + 1) * (n + 2), 2)
    elif family in ("U", "SO"):
        exact = Fraction(4 * n**3 + 3 * n**2 + 5 * n + 12, 6)
    elif family == "SU":
        exact = Fraction(4 * n**3 - 3 * n**2 + 5 * n + 6, 6)
    else:
        exact = Fraction(8 * n**3 + 13 * n**2 + 11 * n + 12, 6)
    return _ceil_bound(exact, Source.CLASSICAL_FORMULA)


def kahler_ct_bound(m: int) -> CtBound:
    """(m+1)^2 for a closed Kahler or symplectic manifold of real dimension 2m."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    # m copies of the degree-2 symplectic class: all equal, no refinement
    return CtBound((m + 1) ** 2, Source.KAHLER)
