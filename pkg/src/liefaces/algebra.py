"""Graded algebras presented as exterior (x) truncated polynomial algebras.

A presentation is a list of generators, each with a cohomological degree and
a *height*: the largest power of the generator that survives.  An exterior
generator has height 1; a truncated generator with relation ``x**a = 0`` has
height ``a - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidGenerator
from .exact import IntPoly, poly_product

FIELD_LABELS = ("F2", "F3", "F5", "Q")


@dataclass(frozen=True, order=True)
class Generator:
    degree: int
    height: int = 1

    @property
    def top_degree(self) -> int:
        """Degree of the highest nonzero power."""
        return self.degree * self.height


@dataclass(frozen=True)
class GradedPresentation:
    name: str
    field_label: str = "custom"
    generators: tuple[Generator, ...] = ()
    citation: str = ""

    def __post_init__(self):
        gens = tuple(
            g if isinstance(g, Generator) else Generator(*g) for g in self.generators
        )
        object.__setattr__(self, "generators", gens)

    def pairs(self) -> list[tuple[int, int]]:
        return [(g.degree, g.height) for g in self.generators]


def presentation(
    name: str, field_label: str, gens: Iterable[tuple[int, int]], citation: str = ""
) -> GradedPresentation:
    """Build and validate a presentation from ``(degree, height)`` pairs."""
    pres = GradedPresentation(name, field_label, tuple(Generator(d, h) for d, h in gens), citation)
    return validate_presentation(pres)


def exterior(*degrees: int) -> list[tuple[int, int]]:
    return [(d, 1) for d in degrees]


def validate_presentation(pres: GradedPresentation) -> GradedPresentation:
    """Check every generator and return a copy sorted by (degree, height).

    Raises InvalidGenerator naming the first offending index (in input order).
    """
    for idx, g in enumerate(pres.generators):
        if not isinstance(g.degree, int) or not isinstance(g.height, int):
            raise InvalidGenerator(idx, g.degree, g.height)
        if g.degree < 1 or g.height < 1:
            raise InvalidGenerator(idx, g.degree, g.height)
    return GradedPresentation(
        pres.name, pres.field_label, tuple(sorted(pres.generators)), pres.citation
    )


def generator_factor(g: Generator) -> IntPoly:
    """``1 + t^deg + t^(2 deg) + ... + t^(height deg)``."""
    return IntPoly.from_exponents(k * g.degree for k in range(g.height + 1))


def poincare_polynomial(pres: GradedPresentation) -> IntPoly:
    """Poincare polynomial of the presented algebra (the point gives 1)."""
    return poly_product([generator_factor(g) for g in pres.generators])


def formal_dimension(pres: GradedPresentation) -> int:
    """Top nonzero degree, i.e. the sum of height * degree."""
    return sum(g.top_degree for g in pres.generators)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers beta_0..beta_d of a connected space (beta_0 = 0)."""

    d: int
    betti: tuple[int, ...] = field(default=())

    def __post_init__(self):
        b = tuple(int(x) for x in self.betti)
        if len(b) != self.d + 1:
            raise ValueError(f"betti vector must have length d+1={self.d + 1}, got {len(b)}")
        if any(x < 0 for x in b):
            raise ValueError("betti numbers must be nonnegative")
        # reduced convention for a connected space
        object.__setattr__(self, "betti", (0,) + b[1:])

    def __getitem__(self, j: int) -> int:
        return self.betti[j]

    def __len__(self) -> int:
        return len(self.betti)

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> "BettiVector":
        return cls(len(values) - 1, tuple(values))


def betti_vector(pp: IntPoly) -> BettiVector:
    """Reduced Betti numbers read off a Poincare polynomial with constant term 1."""
    if pp[0] != 1:
        raise ValueError(f"Poincare polynomial of a connected space has constant term 1, got {pp[0]}")
    d = pp.degree
    return BettiVector(d, (0,) + tuple(abs(pp[j]) for j in range(1, d + 1)))


def betti_of(pres: GradedPresentation) -> BettiVector:
    return betti_vector(poincare_polynomial(pres))
