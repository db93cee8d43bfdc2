"""Exact integer combinatorics and dense integer polynomials.

Everything here works on Python ``int`` so nothing overflows; face bounds for
E8 run to more than 120 decimal digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@lru_cache(maxsize=None)
def _comb(n: int, k: int) -> int:
    return math.comb(n, k)


def binomial(n: int, k: int) -> int:
    """Return C(n, k), or 0 when ``k`` lies outside ``0..n``.

    The zero convention is load-bearing: the generalized lower bound sums
    run over index ranges where the lower argument may exceed the upper.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _comb(n, k)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with exact integer coefficients, lowest degree first.

    Trailing zeros are stripped on construction, so the zero polynomial is
    ``IntPoly(())`` and equality is coefficient-wise.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPoly":
        """Sum of ``t**e`` over ``exponents`` (repeats accumulate)."""
        exps = list(exponents)
        if not exps:
            return cls(())
        out = [0] * (max(exps) + 1)
        for e in exps:
            out[e] += 1
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        """Index of the leading coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul(self, other)

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ONE = IntPoly((1,))


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact convolution product of two dense polynomials."""
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPoly(())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_eval(p: IntPoly, x: int) -> int:
    """Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_product(factors: Sequence[IntPoly]) -> IntPoly:
    out = ONE
    for f in factors:
        out = poly_mul(out, f)
    return out
