"""
Signed planar-diagram (PD) codes.

Each crossing lists its four arc labels counterclockwise starting from the
incoming under-strand, together with an explicit sign.  With under-strand
``a -> c``, the over-strand runs ``d -> b`` on a positive crossing and
``b -> d`` on a negative one.  Components map an id to the cyclic sequence of
arcs met when walking along the component; a crossing-free component is a
single arc that appears in no crossing.

Text format::

    # comment
    X[+](1,4,2,3)
    X[-](3,2,4,1)
    C1: 1 2
    C2: 3 4
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import MalformedPD
from .links import LinkingMatrix


class Crossing(NamedTuple):
    sign: int
    arcs: tuple[int, int, int, int]

    @property
    def under(self) -> tuple[int, int]:
        return self.arcs[0], self.arcs[2]

    @property
    def over(self) -> tuple[int, int]:
        """(incoming, outgoing) arcs of the over-strand."""
        if self.sign > 0:
            return self.arcs[3], self.arcs[1]
        return self.arcs[1], self.arcs[3]


def _successors(crossings: Iterable[Crossing]) -> dict[int, int]:
    nxt = {}
    for x in crossings:
        for a, b in (x.under, x.over):
            if a in nxt:
                raise MalformedPD(f"arc {a} enters more than one crossing")
            nxt[a] = b
    return nxt


def _trace(nxt: Mapping[int, int], start: int) -> list[int]:
    seq = [start]
    a = nxt[start]
    while a != start:
        if len(seq) > len(nxt):
            raise MalformedPD(f"walk from arc {start} does not close up")
        seq.append(a)
        a = nxt[a]
    return seq


@dataclass(frozen=True, eq=True)
class PDCode:
    crossings: tuple[Crossing, ...]
    components: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        crossings = tuple(Crossing(int(s), tuple(a)) for s, a in self.crossings)
        components = {int(c): tuple(arcs) for c, arcs in sorted(self.components.items())}
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "components", components)
        _check(crossings, components)

    __hash__ = None

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_ids(self) -> list[int]:
        return sorted(self.components)

    def component_of_arc(self) -> dict[int, int]:
        return {a: c for c, arcs in self.components.items() for a in arcs}

    def crossing_components(self, x: Crossing, owner=None) -> tuple[int, int]:
        """(under component, over component) of a crossing."""
        owner = owner or self.component_of_arc()
        return owner[x.arcs[0]], owner[x.over[0]]

    def to_text(self) -> str:
        return format_pd(self)


def _check(crossings, components):
    counts: dict[int, int] = {}
    for x in crossings:
        if x.sign not in (1, -1):
            raise MalformedPD(f"crossing sign must be +1 or -1, got {x.sign}")
        if len(x.arcs) != 4:
            raise MalformedPD("a crossing needs exactly four arcs")
        for a in x.arcs:
            if not isinstance(a, int) or a < 1:
                raise MalformedPD(f"arc labels must be positive integers, got {a!r}")
            counts[a] = counts.get(a, 0) + 1
    for a, k in counts.items():
        if k != 2:
            raise MalformedPD(f"arc {a} appears {k} times, expected 2")
    nxt = _successors(crossings)
    listed = set()
    for cid, arcs in components.items():
        if not arcs:
            raise MalformedPD(f"component {cid} has no arcs")
        if listed.intersection(arcs) or len(set(arcs)) != len(arcs):
            raise MalformedPD(f"component {cid} repeats an arc")
        listed.update(arcs)
        if len(arcs) == 1 and arcs[0] not in counts:
            continue
        for i, a in enumerate(arcs):
            if a not in nxt:
                raise MalformedPD(f"arc {a} of component {cid} is not in any crossing")
            if nxt[a] != arcs[(i + 1) % len(arcs)]:
                raise MalformedPD(
                    f"component {cid}: arc {a} continues as {nxt[a]}, "
                    f"listed {arcs[(i + 1) % len(arcs)]}"
                )
    missing = set(counts) - listed
    if missing:
        raise MalformedPD(f"arcs {sorted(missing)} belong to no component")


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, a):
        root = a
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while a != root:
            self.parent[a], a = root, self.parent.get(a, a)
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _assemble(crossings, components, uf: _UnionFind | None = None) -> PDCode:
    """Apply arc identifications, retrace components and relabel arcs 1, 2, ...

    ``components`` maps id -> arcs in walking order (old labels); the first
    surviving arc of each component becomes its new first arc.
    """
    find = uf.find if uf else (lambda a: a)
    crossings = [Crossing(s, tuple(find(a) for a in arcs)) for s, arcs in crossings]
    nxt = _successors(crossings)
    relabel: dict[int, int] = {}
    new_components = {}
    for cid in sorted(components):
        start = find(components[cid][0])
        seq = _trace(nxt, start) if start in nxt else [start]
        for a in seq:
            relabel[a] = len(relabel) + 1
        new_components[cid] = tuple(relabel[a] for a in seq)
    new_crossings = tuple(Crossing(s, tuple(relabel[a] for a in arcs)) for s, arcs in crossings)
    return PDCode(new_crossings, new_components)


def normalize(pd: PDCode) -> PDCode:
    """Relabel arcs consecutively along components in id order."""
    return _assemble(pd.crossings, pd.components)


def linking_matrix_of_pd(pd: PDCode) -> LinkingMatrix:
    """Half the signed count of crossings between each pair of components.

    Rows and columns follow :attr:`PDCode.component_ids`.
    """
    ids = pd.component_ids
    index = {c: i for i, c in enumerate(ids)}
    owner = pd.component_of_arc()
    m = len(ids)
    twice = [[0] * m for _ in range(m)]
    for x in pd.crossings:
        u, o = pd.crossing_components(x, owner)
        if u != o:
            i, j = index[u], index[o]
            twice[i][j] += x.sign
            twice[j][i] += x.sign
    rows = []
    for i in range(m):
        for j in range(m):
            if twice[i][j] % 2:
                raise MalformedPD(
                    f"odd signed crossing count between components {ids[i]} and {ids[j]}"
                )
        rows.append([v // 2 for v in twice[i]])
    return LinkingMatrix(rows)


def delete_component(pd: PDCode, c: int) -> PDCode:
    """Erase component ``c`` and every crossing it takes part in."""
    if c not in pd.components:
        raise KeyError(f"unknown component {c}")
    owner = pd.component_of_arc()
    uf = _UnionFind()
    kept = []
    for x in pd.crossings:
        u, o = pd.crossing_components(x, owner)
        if u != c and o != c:
            kept.append(x)
            continue
        if u != c:
            uf.union(*x.under)
        if o != c:
            uf.union(*x.over)
    components = {k: v for k, v in pd.components.items() if k != c}
    return _assemble(kept, components, uf)


def _endpoints(crossings):
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        for pos, a in enumerate(x.arcs):
            where.setdefault(a, []).append((ci, pos))
    return where


def find_moves(pd: PDCode) -> list[tuple[int, ...]]:
    """Available R1 and R2 moves as tuples of crossing indices.

    R1: an arc joins two neighbouring positions of one crossing (a kink).
    R2: two crossings are joined by two arcs bounding a bigon face, with the
    same strand passing over at both.
    """
    moves: list[tuple[int, ...]] = []
    xs = pd.crossings
    for ci, x in enumerate(xs):
        if any(x.arcs[i] == x.arcs[(i + 1) % 4] for i in range(4)):
            moves.append((ci,))
    where = _endpoints(xs)
    seen = set()
    for p, ends in where.items():
        (c1, i), (c2, j) = ends
        if c1 == c2 or i % 2 != j % 2:
            continue
        for step in (1, -1):
            k = (i + step) % 4
            q = xs[c1].arcs[k]
            if q == p:
                continue
            other = [e for e in where[q] if e != (c1, k)]
            if other == [(c2, (j - step) % 4)]:
                pair = (min(c1, c2), max(c1, c2))
                if pair not in seen:
                    seen.add(pair)
                    moves.append(pair)
    return moves


def apply_move(pd: PDCode, move: tuple[int, ...]) -> PDCode:
    uf = _UnionFind()
    for ci in move:
        x = pd.crossings[ci]
        uf.union(*x.under)
        uf.union(*x.over)
    kept = [x for ci, x in enumerate(pd.crossings) if ci not in move]
    return _assemble(kept, pd.components, uf)


def reduce_pd(pd: PDCode, rng: random.Random | None = None) -> PDCode:
    """Greedy Reidemeister I/II simplification until no move applies.

    Moves are taken in scan order, or at random when ``rng`` is given.  Zero
    crossings in the result certifies a split union of unknots; anything
    else certifies nothing.
    """
    while True:
        moves = find_moves(pd)
        if not moves:
            return pd
        move = rng.choice(moves) if rng else moves[0]
        pd = apply_move(pd, move)


def faces(pd: PDCode) -> int:
    """Number of faces of the diagram graph (crossing-free circles ignored)."""
    where = _endpoints(pd.crossings)
    seen = set()
    count = 0
    for ci in range(len(pd.crossings)):
        for pos in range(4):
            if (ci, pos) in seen:
                continue
            count += 1
            dart = (ci, pos)
            while dart not in seen:
                seen.add(dart)
                a = pd.crossings[dart[0]].arcs[dart[1]]
                (c2, j), = [e for e in where[a] if e != dart]
                dart = (c2, (j - 1) % 4)
    return count


def diagram_pieces(pd: PDCode) -> int:
    """Connected pieces of the diagram graph that contain crossings."""
    uf = _UnionFind()
    owner = pd.component_of_arc()
    for x in pd.crossings:
        u, o = pd.crossing_components(x, owner)
        uf.union(u, o)
    return len({uf.find(owner[x.arcs[0]]) for x in pd.crossings})


def is_planar(pd: PDCode) -> bool:
    """Euler check for the 4-valent diagram graph.

    Faces are traced piece by piece, so each of the ``P`` pieces must satisfy
    V - E + F = 2 on its own sphere.
    """
    v = len(pd.crossings)
    if v == 0:
        return True
    return v - 2 * v + faces(pd) == 2 * diagram_pieces(pd)


_CROSSING = re.compile(r"^X\[([+-])\]\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_COMPONENT = re.compile(r"^C(\d+):((?:\s+\d+)+)$")


def parse_pd(text: str) -> PDCode:
    crossings = []
    components = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _CROSSING.match(line):
            sign = 1 if m.group(1) == "+" else -1
            crossings.append((sign, tuple(int(g) for g in m.groups()[1:])))
        elif m := _COMPONENT.match(line):
            cid = int(m.group(1))
            if cid in components:
                raise MalformedPD(f"line {lineno}: component {cid} listed twice")
            components[cid] = tuple(int(t) for t in m.group(2).split())
        else:
            raise MalformedPD(f"line {lineno}: cannot parse {raw!r}")
    return PDCode(tuple(crossings), components)


def format_pd(pd: PDCode) -> str:
    lines = [
        f"X[{'+' if x.sign > 0 else '-'}]({','.join(map(str, x.arcs))})" for x in pd.crossings
    ]
    lines += [f"C{c}: {' '.join(map(str, pd.components[c]))}" for c in pd.component_ids]
    return "\n".join(lines) + "\n"
