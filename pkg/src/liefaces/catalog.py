"""Built-in cohomology presentations of compact Lie groups.

Exceptional groups carry fixed presentations over F2, F3, F5 and Q.  The
classical families are parametric in n:

    Torus    T^n                   U        U(n)
    SU       SU(n), n >= 2         Sp       Sp(n)
    SO_odd   SO(2n+1)              SO_even  SO(2n)
    SO_mod2  SO(n) over F2, n >= 3

Truncated generators are written with their height (relation exponent - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import FIELD_LABELS, GradedPresentation, exterior, presentation
from .covering import CtBound, RationalType, rational_type_bound, weighted_length_bound
from .errors import DomainError, MissingParameter, UnknownField, UnknownGroup

EXCEPTIONAL_DATA: dict[str, dict[str, list[tuple[int, int]]]] = {
    "G2": {
        "F2": [(3, 3)] + exterior(5),
        "F3": exterior(3, 11),
        "F5": exterior(3, 11),
        "Q": exterior(3, 11),
    },
    "F4": {
        "F2": [(3, 3)] + exterior(5, 15, 23),
        "F3": [(8, 2)] + exterior(3, 7, 11, 15),
        "F5": exterior(3, 11, 15, 23),
        "Q": exterior(3, 11, 15, 23),
    },
    "E6": {
        "F2": [(3, 3)] + exterior(5, 9, 15, 17, 23),
        "F3": [(8, 2)] + exterior(3, 7, 9, 11, 15, 17),
        "F5": exterior(3, 9, 11, 15, 17, 23),
        "Q": exterior(3, 9, 11, 15, 17, 23),
    },
    "E7": {
        "F2": [(3, 3), (5, 3), (9, 3)] + exterior(15, 17, 23, 27),
        "F3": [(8, 2)] + exterior(3, 7, 11, 15, 19, 27, 35),
        "F5": exterior(3, 11, 15, 19, 23, 27, 35),
        "Q": exterior(3, 11, 15, 19, 23, 27, 35),
    },
    "E8": {
        "F2": [(3, 15), (5, 7), (9, 3), (15, 3)] + exterior(17, 23, 27, 29),
        "F3": [(8, 2), (20, 2)] + exterior(3, 7, 15, 19, 27, 35, 39, 47),
        "F5": [(12, 4)] + exterior(3, 11, 15, 23, 27, 35, 39, 47),
        "Q": exterior(3, 15, 23, 27, 35, 39, 47, 59),
    },
}

EXCEPTIONAL_DIM_RANK = {"G2": (14, 2), "F4": (52, 4), "E6": (78, 6), "E7": (133, 7), "E8": (248, 8)}


def so_mod2_heights(n: int) -> GradedPresentation:
    """Mod 2 presentation of SO(n): generators x_i, i = 1, 3, ..., 2 floor(n/2) - 1.

    x_i has height alpha_i - 1 where alpha_i is the least power of two with
    i * alpha_i >= n.
    """
    if n < 3:
        raise DomainError(f"SO_mod2 needs n >= 3, got {n}")
    gens = []
    for i in range(1, 2 * (n // 2), 2):
        alpha = 1
        while i * alpha < n:
            alpha *= 2
        gens.append((i, alpha - 1))
    return presentation(f"SO({n})", "F2", gens, describe(gens, "F2"))


def _torus(n):
    return exterior(*([1] * n))


def _u(n):
    return exterior(*range(1, 2 * n, 2))


def _su(n):
    return exterior(*range(3, 2 * n, 2))


def _sp(n):
    return exterior(*range(3, 4 * n, 4))


def _so_odd(n):
    return exterior(*range(3, 4 * n, 4))


def _so_even(n):
    return exterior(*range(3, 4 * n - 4, 4), 2 * n - 1)


@dataclass(frozen=True)
class GroupRecord:
    name: str
    parametric: bool
    fields: tuple[str, ...]
    dim_of: Callable[[int | None], int]
    rank_of: Callable[[int | None], int]
    gens_of: Callable[[str, int | None], list[tuple[int, int]]]
    rational_of: Callable[[int | None], RationalType]
    min_n: int = 1
    label: Callable[[int | None], str] = lambda n: ""
    simple_sc: Callable[[int | None], bool] = lambda n: False

    @property
    def family_kind(self) -> str:
        return "ClassicalParametric" if self.parametric else "Exceptional"


def _exceptional(name: str) -> GroupRecord:
    d, l = EXCEPTIONAL_DIM_RANK[name]
    data = EXCEPTIONAL_DATA[name]
    return GroupRecord(
        name=name,
        parametric=False,
        fields=FIELD_LABELS,
        dim_of=lambda n: d,
        rank_of=lambda n: l,
        gens_of=lambda f, n: data[f],
        rational_of=lambda n: RationalType.from_degrees([g for g, _ in data["Q"]]),
        label=lambda n: name,
        simple_sc=lambda n: True,
    )


def _classical(name, fields, gens, dim, rank, min_n, label, simple_sc=lambda n: False):
    def rational_of(n):
        return RationalType.from_degrees([deg for deg, _ in gens(n)])

    return GroupRecord(
        name=name,
        parametric=True,
        fields=fields,
        dim_of=dim,
        rank_of=rank,
        gens_of=lambda f, n: gens(n),
        rational_of=rational_of,
        min_n=min_n,
        label=label,
        simple_sc=simple_sc,
    )


def _so_rational(k: int) -> RationalType:
    gens = _so_odd(k // 2) if k % 2 else _so_even(k // 2)
    return RationalType.from_degrees([deg for deg, _ in gens])


_SO_MOD2 = GroupRecord(
    name="SO_mod2",
    parametric=True,
    fields=("F2",),
    dim_of=lambda n: n * (n - 1) // 2,
    rank_of=lambda n: n // 2,
    gens_of=lambda f, n: so_mod2_heights(n).pairs(),
    rational_of=_so_rational,
    min_n=3,
    label=lambda n: f"SO({n})",
)

_RECORDS: dict[str, GroupRecord] = {name: _exceptional(name) for name in EXCEPTIONAL_DATA}
_RECORDS.update(
    {
        "Torus": _classical("Torus", ("Q",), _torus, lambda n: n, lambda n: n, 1, lambda n: f"T^{n}"),
        "U": _classical("U", ("Q",), _u, lambda n: n * n, lambda n: n, 1, lambda n: f"U({n})"),
        "SU": _classical(
            "SU", ("Q",), _su, lambda n: n * n - 1, lambda n: n - 1, 2, lambda n: f"SU({n})",
            simple_sc=lambda n: True,
        ),
        "Sp": _classical(
            "Sp", ("Q",), _sp, lambda n: n * (2 * n + 1), lambda n: n, 1, lambda n: f"Sp({n})",
            simple_sc=lambda n: True,
        ),
        "SO_odd": _classical(
            "SO_odd", ("Q",), _so_odd, lambda n: n * (2 * n + 1), lambda n: n, 1,
            lambda n: f"SO({2 * n + 1})",
        ),
        "SO_even": _classical(
            "SO_even", ("Q",), _so_even, lambda n: n * (2 * n - 1), lambda n: n, 1,
            lambda n: f"SO({2 * n})",
        ),
        "SO_mod2": _SO_MOD2,
    }
)

EXCEPTIONAL = tuple(EXCEPTIONAL_DATA)


def record(group: str) -> GroupRecord:
    try:
        return _RECORDS[group]
    except KeyError:
        raise UnknownGroup(f"unknown group {group!r}; known: {', '.join(_RECORDS)}") from None


def _check_n(rec: GroupRecord, n: int | None) -> None:
    if rec.parametric:
        if n is None:
            raise MissingParameter(f"group {rec.name} is parametric; supply n")
        if n < rec.min_n:
            raise DomainError(f"{rec.name} needs n >= {rec.min_n}, got {n}")
    elif n is not None:
        raise DomainError(f"group {rec.name} takes no parameter n")


def describe(gens: list[tuple[int, int]], field_label: str) -> str:
    """Human-readable algebra, e.g. ``F2[x3]/(x3^4) (x) Lambda(x5)``."""
    trunc = [(d, h) for d, h in gens if h > 1]
    ext = [d for d, h in gens if h == 1]
    ring = field_label if field_label in FIELD_LABELS else "k"
    parts = []
    if trunc:
        names = ",".join(f"x{d}" for d, _ in trunc)
        rels = ",".join(f"x{d}^{h + 1}" for d, h in trunc)
        parts.append(f"{ring}[{names}]/({rels})")
    if ext:
        parts.append("Lambda(" + ",".join(f"x{d}" for d in ext) + ")")
    return " (x) ".join(parts) if parts else ring


def presentation_of(group: str, field_label: str, n: int | None = None) -> GradedPresentation:
    """The pinned presentation of ``group`` over ``field_label``."""
    rec = record(group)
    if field_label not in rec.fields:
        raise UnknownField(
            f"group {group} has no presentation over {field_label!r}; available: {', '.join(rec.fields)}"
        )
    _check_n(rec, n)
    gens = rec.gens_of(field_label, n)
    return presentation(rec.label(n), field_label, gens, describe(gens, field_label))


def group_data(group: str, n: int | None = None) -> tuple[int, int, RationalType]:
    """(dimension, rank, rational type), checked for 2 sum(m) = d - l."""
    rec = record(group)
    _check_n(rec, n)
    d, l, rt = rec.dim_of(n), rec.rank_of(n), rec.rational_of(n)
    if rt.l != l or rt.d != d:
        raise AssertionError(f"inconsistent catalog data for {group} n={n}: {(d, l)} vs {(rt.d, rt.l)}")
    return d, l, rt


def is_simple_simply_connected(group: str, n: int | None = None) -> bool:
    rec = record(group)
    _check_n(rec, n)
    return rec.simple_sc(n)


def is_degenerate(group: str, n: int | None = None) -> bool:
    """True for SO(2) and SO(4), the non-simple members of the SO_even family."""
    return group == "SO_even" and n is not None and n <= 2


@dataclass(frozen=True)
class CatalogEntry:
    group: str
    fields: tuple[str, ...]
    parametric: bool

    def __str__(self) -> str:
        fields = "[" + ",".join(self.fields) + "]"
        if self.parametric:
            return f"{self.group} (parametric n) {fields}"
        return f"{self.group} {fields}"


def list_entries() -> list[CatalogEntry]:
    return [CatalogEntry(r.name, r.fields, r.parametric) for r in _RECORDS.values()]


def classical_dim_rank(family: str, n: int) -> tuple[int, int]:
    rec = record(family)
    return rec.dim_of(n), rec.rank_of(n)


def best_ct_bound(group: str, n: int | None = None) -> CtBound:
    """Largest covering-type bound among the group's presentations and rational type."""
    rec = record(group)
    _check_n(rec, n)
    candidates = [weighted_length_bound(presentation_of(group, f, n)) for f in rec.fields]
    candidates.append(rational_type_bound(rec.rational_of(n)))
    return max(candidates, key=lambda b: b.value)


def so_derived_ct_bound(n: int) -> CtBound:
    """Covering-type bound for SO(n) from the full mod 2 product of generator powers."""
    return weighted_length_bound(so_mod2_heights(n))
