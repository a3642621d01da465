"""
Finite integral connectivity spaces.

Point sets are plain ``int`` bit masks: point ``i`` (1-based) is bit ``i - 1``.
A space is the ground-set size ``n`` together with its family of connected
subsets, which must contain every singleton and be closed under unions of
intersecting members.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError, InvalidStructure, OutOfRange, UnsupportedGroundSet

MAX_POINTS = 64

PointSet = int
PointSetLike = Union[int, Iterable[int]]


def pointset(labels: Iterable[int]) -> PointSet:
    mask = 0
    for i in labels:
        if i < 1:
            raise OutOfRange(f"point label {i} is not positive")
        mask |= 1 << (i - 1)
    return mask


def labels(mask: PointSet) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def fmt(mask: PointSet) -> str:
    return "{" + ",".join(map(str, labels(mask))) + "}"


def set_key(mask: PointSet):
    """Sort key: by size, then by label list."""
    return (mask.bit_count(), labels(mask))


def full_mask(n: int) -> PointSet:
    return (1 << n) - 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_POINTS:
        raise UnsupportedGroundSet(f"ground-set size must be in 1..{MAX_POINTS}, got {n!r}")


def as_mask(x: PointSetLike, n: int) -> PointSet:
    """Coerce a mask or an iterable of labels to a mask inside ``{1..n}``."""
    mask = x if isinstance(x, int) else pointset(x)
    if mask < 0 or mask >> n:
        raise OutOfRange(f"{fmt(mask) if mask >= 0 else mask} is not a subset of {{1..{n}}}")
    return mask


@dataclass(frozen=True)
class Violation:
    kind: str  # "empty", "missing-singleton", "missing-union"
    sets: tuple[PointSet, ...]

    def __str__(self):
        if self.kind == "empty":
            return "empty set is not allowed as a connected subset"
        if self.kind == "missing-singleton":
            return f"missing singleton {fmt(self.sets[0])}"
        a, b, u = self.sets
        return f"missing union {fmt(u)} for intersecting pair ({fmt(a)}, {fmt(b)})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def _violations(n: int, family: frozenset[PointSet]) -> list[Violation]:
    found = []
    if 0 in family:
        found.append(Violation("empty", (0,)))
    for i in range(n):
        if (1 << i) not in family:
            found.append(Violation("missing-singleton", (1 << i,)))
    members = sorted((m for m in family if m), key=set_key)
    for x, a in enumerate(members):
        for b in members[x + 1:]:
            if a & b:
                u = a | b
                if u not in family:
                    found.append(Violation("missing-union", (a, b, u)))
    return found


def validate_structure(n: int, sets: Iterable[PointSetLike]) -> ValidationReport:
    """Check a family against the axioms of a finite integral connectivity space.

    The union axiom is checked in its pairwise form, which is equivalent to the
    subfamily form for finite families.
    """
    _check_n(n)
    family = frozenset(as_mask(s, n) for s in sets)
    return ValidationReport(tuple(_violations(n, family)))


@dataclass(frozen=True)
class ConnectivitySpace:
    """Immutable finite integral connectivity space on points ``1..n``."""

    n: int
    structure: frozenset[PointSet]

    def __post_init__(self):
        _check_n(self.n)
        structure = frozenset(as_mask(s, self.n) for s in self.structure)
        object.__setattr__(self, "structure", structure)
        bad = _violations(self.n, structure)
        if bad:
            raise InvalidStructure(bad)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[PointSetLike] = ()) -> "ConnectivitySpace":
        """Build a space from a family; singletons are added implicitly."""
        _check_n(n)
        family = {as_mask(s, n) for s in sets}
        family.update(1 << i for i in range(n))
        return cls(n, frozenset(family))

    @classmethod
    def _trusted(cls, n: int, structure: frozenset[PointSet]) -> "ConnectivitySpace":
        # skips validation; callers guarantee the axioms hold
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "structure", structure)
        return self

    @property
    def ground(self) -> PointSet:
        return full_mask(self.n)

    def members(self) -> list[PointSet]:
        return sorted(self.structure, key=set_key)

    def __contains__(self, mask):
        return mask in self.structure

    def __len__(self):
        return len(self.structure)

    @cached_property
    def _irreducibles(self) -> tuple[PointSet, ...]:
        members = self.members()
        irr = []
        for k in members:
            if k.bit_count() <= 2:
                irr.append(k)
                continue
            subs = [a for a in members if a != k and a & k == a]
            # reducible iff two maximal proper connected subsets intersect
            maximal = []
            for a in reversed(subs):
                if not any(a & m == a for m in maximal):
                    maximal.append(a)
            seen = 0
            for m in maximal:
                if seen & m:
                    break
                seen |= m
            else:
                irr.append(k)
        return tuple(irr)

    @cached_property
    def _orders(self) -> dict[PointSet, int]:
        orders: dict[PointSet, int] = {}
        for k in self._irreducibles:
            below = [orders[a] for a in orders if a != k and a & k == a]
            orders[k] = 1 + max(below) if below else 0
        return orders

    def relabel(self, perm: Mapping[int, int] | Sequence[int]) -> "ConnectivitySpace":
        """Image of the space under a bijection of labels.

        ``perm`` maps old label to new label; a sequence is read as
        ``perm[i - 1]`` being the image of ``i``.
        """
        if not isinstance(perm, Mapping):
            perm = {i + 1: p for i, p in enumerate(perm)}
        if sorted(perm) != list(range(1, self.n + 1)) or sorted(perm.values()) != list(
            range(1, self.n + 1)
        ):
            raise ValueError("relabeling must be a permutation of 1..n")
        image = frozenset(pointset(perm[i] for i in labels(m)) for m in self.structure)
        return ConnectivitySpace._trusted(self.n, image)

    def __repr__(self):
        sets = " ".join(fmt(m) for m in self.members() if m.bit_count() > 1)
        return f"ConnectivitySpace(n={self.n}, [{sets}])"


def generate(n: int, generators: Iterable[PointSetLike] = ()) -> ConnectivitySpace:
    """Smallest connectivity structure on ``1..n`` containing the generators."""
    _check_n(n)
    family = set(1 << i for i in range(n))
    pending = []
    for g in generators:
        m = as_mask(g, n)
        if m == 0:
            raise ValueError("generators must be nonempty")
        if m not in family:
            family.add(m)
            pending.append(m)
    while pending:
        a = pending.pop()
        for b in list(family):
            if a & b:
                u = a | b
                if u not in family:
                    family.add(u)
                    pending.append(u)
    return ConnectivitySpace._trusted(n, frozenset(family))


def is_connected(space: ConnectivitySpace, a: PointSetLike) -> bool:
    return as_mask(a, space.n) in space.structure


def connected_components(space: ConnectivitySpace, a: PointSetLike) -> list[PointSet]:
    """Partition of ``a`` into its maximal connected subsets."""
    a = as_mask(a, space.n)
    inside = sorted((k for k in space.structure if k & a == k), key=set_key, reverse=True)
    blocks = []
    covered = 0
    for k in inside:
        # maximal members of a union-closed family are pairwise disjoint
        if k & covered == 0:
            blocks.append(k)
            covered |= k
    return sorted(blocks, key=lambda m: labels(m)[0])


def irreducibles(space: ConnectivitySpace) -> tuple[PointSet, ...]:
    return space._irreducibles


def is_irreducible(space: ConnectivitySpace, k: PointSetLike) -> bool:
    return as_mask(k, space.n) in space._orders


def order_of_subset(space: ConnectivitySpace, k: PointSetLike) -> int:
    k = as_mask(k, space.n)
    if k not in space.structure:
        raise DomainError(f"{fmt(k)} is not connected")
    try:
        return space._orders[k]
    except KeyError:
        raise DomainError(f"{fmt(k)} is reducible") from None


def order(space: ConnectivitySpace) -> int:
    return max(space._orders.values())


def is_totally_disconnected(space: ConnectivitySpace) -> bool:
    return len(space.structure) == space.n


@dataclass(frozen=True)
class GenericGraph:
    vertices: tuple[PointSet, ...]
    edges: tuple[tuple[PointSet, PointSet], ...]
    longest_path: int

    def sources(self) -> list[PointSet]:
        targets = {b for _, b in self.edges}
        return [v for v in self.vertices if v not in targets]

    def children(self, v: PointSet) -> list[PointSet]:
        return [a for a, b in self.edges if b == v]

    def to_dot(self, name: str = "generic") -> str:
        def node(m):
            return '"' + ",".join(map(str, labels(m))) + '"'

        lines = [f"digraph {name} {{"]
        lines += [f"  {node(v)};" for v in self.vertices]
        lines += [f"  {node(a)} -> {node(b)};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def covering_children(vertices: Sequence[PointSet], top: PointSet) -> list[PointSet]:
    """Maximal members of ``vertices`` strictly inside ``top``, in sorted order."""
    below = sorted((a for a in vertices if a != top and a & top == a), key=set_key, reverse=True)
    maximal = []
    for a in below:
        if not any(a & m == a for m in maximal):
            maximal.append(a)
    return sorted(maximal, key=set_key)


def generic_graph(space: ConnectivitySpace) -> GenericGraph:
    """Covering graph of the irreducibles, with its longest path length."""
    vertices = irreducibles(space)
    edges = []
    for b in vertices:
        edges.extend((a, b) for a in covering_children(vertices, b))
    edges.sort(key=lambda e: (set_key(e[1]), set_key(e[0])))
    depth = {v: 0 for v in vertices}
    # vertices are size-sorted, so every edge goes forward in this order
    incoming: dict[PointSet, list[PointSet]] = {}
    for a, b in edges:
        incoming.setdefault(b, []).append(a)
    for v in vertices:
        if v in incoming:
            depth[v] = 1 + max(depth[a] for a in incoming[v])
    return GenericGraph(tuple(vertices), tuple(edges), max(depth.values()))


def make_An(n: int) -> ConnectivitySpace:
    """The space whose non-singleton connected sets are the prefixes ``{1..k}``."""
    _check_n(n)
    family = {1 << i for i in range(n)}
    family.update(full_mask(k) for k in range(2, n + 1))
    return ConnectivitySpace._trusted(n, frozenset(family))


def totally_disconnected(n: int) -> ConnectivitySpace:
    return generate(n)
