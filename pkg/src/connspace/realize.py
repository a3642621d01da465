"""
Diagram-level realization of tree-like connectivity structures by links.

Every diagram built here is the closure of a pure braid, one strand per link
component, so planarity and component bookkeeping come for free:

* a block on ``k`` strands is a Brunnian pure braid (Hopf clasp for ``k = 2``);
* an irreducible node with ``k`` covering children instantiates ``block(k)``
  with each block strand cabled into as many parallel strands as the child
  has leaves, so one block crossing becomes a grid of crossings of the same
  sign;
* the child's own braid is inserted on its cable ahead of the block, where
  the cable strands run parallel without crossings.

Closing a braid word whose crossings between some pair of strands cancel
letter by letter gives a diagram that R2 moves alone unravel, which is what
makes the Brunnian property checkable with :func:`connspace.pd.reduce_pd`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import core
from .core import ConnectivitySpace, PointSet, labels
from .errors import NotTreeLike
from .pd import PDCode, _assemble, _UnionFind, Crossing

MAX_BLOCK = 16

Letter = tuple[int, int]  # (position i, exponent): sigma_i swaps positions i and i+1


def invert(word: Sequence[Letter]) -> list[Letter]:
    return [(i, -e) for i, e in reversed(word)]


def block_word(k: int) -> list[Letter]:
    """Pure braid word of the ``k``-strand block.

    ``k = 3`` is the six-crossing Borromean braid ``(s1 s2^-1)^3``; larger
    blocks are iterated commutators ``[block(k-1), s_{k-1}^2]``.
    """
    if not 1 <= k <= MAX_BLOCK:
        raise ValueError(f"block size must be in 1..{MAX_BLOCK}, got {k}")
    if k == 1:
        return []
    if k == 2:
        return [(0, 1), (0, 1)]
    if k == 3:
        return [(0, 1), (1, -1)] * 3
    inner = block_word(k - 1)
    clasp = [(k - 2, 1), (k - 2, 1)]
    return inner + clasp + invert(inner) + invert(clasp)


def braid_permutation(word: Sequence[Letter], strands: int) -> list[int]:
    order = list(range(strands))
    for i, _ in word:
        order[i], order[i + 1] = order[i + 1], order[i]
    return order


def braid_to_pd(word: Sequence[Letter], strand_ids: Sequence[int]) -> PDCode:
    """Closure of a pure braid; the strand starting at position ``p`` is
    component ``strand_ids[p]``."""
    n = len(strand_ids)
    if braid_permutation(word, n) != list(range(n)):
        raise ValueError("only pure braids close up to one component per strand")
    start = list(range(1, n + 1))
    current = list(start)
    fresh = n
    crossings = []
    for i, e in word:
        if not 0 <= i < n - 1:
            raise ValueError(f"generator position {i} out of range for {n} strands")
        left, right = current[i], current[i + 1]
        new_left, new_right = fresh + 1, fresh + 2  # new arcs of the left/right strand
        fresh += 2
        if e > 0:
            # left strand passes over, moving right
            crossings.append(Crossing(1, (right, new_left, new_right, left)))
        else:
            # right strand passes over, moving left
            crossings.append(Crossing(-1, (left, right, new_left, new_right)))
        current[i], current[i + 1] = new_right, new_left
    uf = _UnionFind()
    for p in range(n):
        uf.union(current[p], start[p])
    components = {strand_ids[p]: (start[p],) for p in range(n)}
    return _assemble(crossings, components, uf)


def brunnian_block(k: int) -> PDCode:
    """Unknot, Hopf link, or a ``k``-component Brunnian diagram (``k >= 3``)."""
    return braid_to_pd(block_word(k), list(range(1, k + 1)))


@dataclass(frozen=True)
class AssemblyTree:
    node: PointSet
    children: tuple["AssemblyTree", ...] = ()
    virtual: bool = False  # split union of the children, no block

    def leaves(self) -> list[int]:
        if not self.children:
            return list(labels(self.node))
        return [x for c in self.children for x in c.leaves()]

    def nodes(self) -> Iterator["AssemblyTree"]:
        yield self
        for c in self.children:
            yield from c.nodes()

    def blocks(self) -> Iterator["AssemblyTree"]:
        """Nodes that carry a block (at least two children, not virtual)."""
        for t in self.nodes():
            if t.children and not t.virtual:
                yield t

    def __str__(self):
        if not self.children:
            return core.fmt(self.node)
        head = "*" if self.virtual else core.fmt(self.node)
        return head + "[" + " ".join(str(c) for c in self.children) + "]"


def _child_key(m):
    return labels(m)


def assembly_from_space(space: ConnectivitySpace) -> AssemblyTree:
    """Tree of irreducibles under covering inclusion; raises if not tree-like.

    When the space has several maximal irreducibles they hang from a virtual
    root whose node is the whole ground set.
    """
    irr = core.irreducibles(space)
    ground = space.ground

    def check(node, kids):
        for a, b in combinations(kids, 2):
            if a & b:
                raise NotTreeLike(node, a, b)

    def build(node):
        kids = sorted(core.covering_children(irr, node), key=_child_key)
        check(node, kids)
        return AssemblyTree(node, tuple(build(k) for k in kids))

    if ground in irr:
        return build(ground)
    tops = [m for m in irr if not any(m != o and m & o == m for o in irr)]
    tops.sort(key=_child_key)
    check(ground, tops)
    return AssemblyTree(ground, tuple(build(t) for t in tops), virtual=True)


def check_tree_like(tree: AssemblyTree) -> None:
    for t in tree.nodes():
        if not t.children:
            if t.node.bit_count() != 1:
                raise ValueError(f"leaf {core.fmt(t.node)} is not a singleton")
            continue
        for a, b in combinations(t.children, 2):
            if a.node & b.node:
                raise NotTreeLike(t.node, a.node, b.node)
        union = 0
        for c in t.children:
            union |= c.node
        if union != t.node:
            raise ValueError(f"children of {core.fmt(t.node)} do not cover it")


def is_tree_like(space: ConnectivitySpace) -> bool:
    try:
        assembly_from_space(space)
    except NotTreeLike:
        return False
    return True


def _cable(word: Sequence[Letter], widths: Sequence[int]) -> list[Letter]:
    """Replace block strand ``j`` by ``widths[j]`` parallel strands."""
    slots = list(range(len(widths)))  # block strand at each block position
    out = []
    for j, e in word:
        start = sum(widths[s] for s in slots[:j])
        a, b = widths[slots[j]], widths[slots[j + 1]]
        if e > 0:
            for t in reversed(range(a)):
                out.extend((start + t + s, 1) for s in range(b))
        else:
            for t in range(b):
                out.extend((start + a + t - 1 - s, -1) for s in range(a))
        slots[j], slots[j + 1] = slots[j + 1], slots[j]
    return out


def assembly_braid(tree: AssemblyTree) -> tuple[list[Letter], list[int]]:
    """Pure braid word realizing the assembly, and the leaf at each position."""
    if not tree.children:
        return [], list(labels(tree.node))
    word: list[Letter] = []
    order: list[int] = []
    widths = []
    for child in tree.children:
        w, o = assembly_braid(child)
        word.extend((i + len(order), e) for i, e in w)
        order.extend(o)
        widths.append(len(o))
    if not tree.virtual:
        word.extend(_cable(block_word(len(widths)), widths))
    return word, order


def pd_emit(tree: AssemblyTree) -> PDCode:
    """Signed PD code with one component per leaf (component id = leaf label)."""
    check_tree_like(tree)
    word, order = assembly_braid(tree)
    return braid_to_pd(word, order)


def predicted_structure(tree: AssemblyTree) -> ConnectivitySpace:
    """Splittability structure the emitted link is designed to have."""
    leaves = tree.leaves()
    n = len(leaves)
    if sorted(leaves) != list(range(1, n + 1)):
        raise ValueError("assembly leaves must be exactly 1..n")
    return core.generate(n, [t.node for t in tree.nodes() if not t.virtual])


def predicted_linking_matrix(tree: AssemblyTree) -> list[list[int]]:
    """Linking numbers implied by the assembly: the Hopf clasp sign between
    leaves whose lowest common block is a two-strand block, else zero."""
    n = len(tree.leaves())
    rows = [[0] * n for _ in range(n)]
    for t in tree.blocks():
        if len(t.children) == 2:
            for a in t.children[0].leaves():
                for b in t.children[1].leaves():
                    rows[a - 1][b - 1] = rows[b - 1][a - 1] = 1
    return rows


def predicted_crossing_count(tree: AssemblyTree) -> int:
    """Crossings of the emitted diagram, from per-pair crossing counts of the
    block diagrams and the cable widths."""
    total = 0
    for t in tree.blocks():
        block = brunnian_block(len(t.children))
        owner = block.component_of_arc()
        widths = [len(c.leaves()) for c in t.children]
        for x in block.crossings:
            u, o = block.crossing_components(x, owner)
            total += widths[u - 1] * widths[o - 1]
    return total


def realize(space: ConnectivitySpace) -> PDCode:
    return pd_emit(assembly_from_space(space))
