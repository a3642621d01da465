"""
Splittability structures of links.

A link enters either as a declared family of nonsplittable sublinks (taken
as ground truth) or as a matrix of pairwise linking numbers, which only
yields a lower approximation: two components with nonzero linking number
cannot be split apart, but linking number zero proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import core
from .core import ConnectivitySpace, PointSetLike
from .errors import InconsistentLinkDescription, InvalidLinkingMatrix


@dataclass(frozen=True)
class LinkDescription:
    """Component count plus declared nonsplittable sublinks (singletons implied)."""

    m: int
    nonsplittable: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        core._check_n(self.m)
        family = frozenset(core.as_mask(s, self.m) for s in self.nonsplittable)
        if 0 in family:
            raise ValueError("the empty sublink cannot be declared nonsplittable")
        object.__setattr__(self, "nonsplittable", family)

    @classmethod
    def of(cls, m: int, sublinks: Iterable[PointSetLike] = ()) -> "LinkDescription":
        return cls(m, frozenset(core.as_mask(s, m) for s in sublinks))


def splittability_space(link: LinkDescription, close: bool = False) -> ConnectivitySpace:
    """Connectivity space whose connected sets are the nonsplittable sublinks.

    A declared family missing the union of two intersecting members is an
    error unless ``close`` is set, in which case the closure is returned.
    """
    if close:
        return core.generate(link.m, link.nonsplittable)
    family = set(link.nonsplittable)
    family.update(1 << i for i in range(link.m))
    report = core.validate_structure(link.m, family)
    for v in report.violations:
        if v.kind == "missing-union":
            raise InconsistentLinkDescription(*v.sets)
    return ConnectivitySpace(link.m, frozenset(family))


def connectivity_order_of_link(link: LinkDescription, close: bool = False) -> int:
    return core.order(splittability_space(link, close=close))


class LinkingMatrix:
    """Symmetric integer matrix of pairwise linking numbers with zero diagonal."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise InvalidLinkingMatrix("linking matrix must be square")
        for i in range(m):
            if rows[i][i] != 0:
                raise InvalidLinkingMatrix(f"diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, expected 0")
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidLinkingMatrix(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
        self.rows = rows

    @property
    def m(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, LinkingMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LinkingMatrix({[list(r) for r in self.rows]})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)


def linking_lower_bound(matrix: LinkingMatrix | Sequence[Sequence[int]]) -> ConnectivitySpace:
    """Structure generated by the pairs with nonzero linking number.

    Every member is nonsplittable in any link with this matrix; the true
    splittability structure may be larger (Borromean rings: all zeros).
    """
    if not isinstance(matrix, LinkingMatrix):
        matrix = LinkingMatrix(matrix)
    m = matrix.m
    pairs = [(1 << i) | (1 << j) for i in range(m) for j in range(i) if matrix[i, j]]
    return core.generate(m, pairs)
