"""
Canonical forms of connectivity spaces.

Points are colored by iterated refinement on how they sit in the structure;
ties are broken by individualizing one point of the smallest ambiguous cell
and refining again.  Every branch of that search is explored except those
related by a transposition automorphism (twin points), and the canonical form
is the least sorted mask family over all discrete leaves.
"""

from __future__ import annotations

from .core import ConnectivitySpace, PointSet, labels


def _refine(colors, member_points, point_members):
    n = len(colors)
    ncells = len(set(colors))
    while True:
        sigs = []
        for p in range(n):
            around = sorted(
                (len(member_points[m]), tuple(sorted(colors[q] for q in member_points[m])))
                for m in point_members[p]
            )
            sigs.append((colors[p], tuple(around)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncells:
            return colors
        ncells = len(ranks)


def _twins(n, structure):
    """Union-find style map point -> smallest twin (swap is an automorphism)."""
    rep = list(range(n))
    for a in range(n):
        if rep[a] != a:
            continue
        for b in range(a + 1, n):
            if rep[b] != b:
                continue
            ba, bb = 1 << a, 1 << b
            swapped = set()
            for m in structure:
                if bool(m & ba) != bool(m & bb):
                    m ^= ba | bb
                swapped.add(m)
            if swapped == structure:
                rep[b] = a
    return rep


def _relabeled(masks, colors):
    out = []
    for m in masks:
        image = 0
        p = 0
        while m:
            if m & 1:
                image |= 1 << colors[p]
            m >>= 1
            p += 1
        out.append(image)
    out.sort()
    return tuple(out)


def canonical_masks(space: ConnectivitySpace) -> tuple[PointSet, ...]:
    """Least sorted mask family over the search tree; an isomorphism invariant."""
    n = space.n
    masks = sorted(space.structure)
    member_points = {m: [i - 1 for i in labels(m)] for m in masks}
    point_members = [[m for m in masks if m >> p & 1] for p in range(n)]
    twin = _twins(n, space.structure)
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(colors, member_points, point_members)
        cells: dict[int, list[int]] = {}
        for p, c in enumerate(colors):
            cells.setdefault(c, []).append(p)
        if len(cells) == n:
            leaf = _relabeled(masks, colors)
            if best is None or leaf < best:
                best = leaf
            return
        target = min((len(v), c) for c, v in cells.items() if len(v) > 1)[1]
        tried = set()
        for v in cells[target]:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            search([2 * c + (c == target and p != v) for p, c in enumerate(colors)])

    search([0] * n)
    return best


def canonical_form(space: ConnectivitySpace) -> bytes:
    """Byte encoding equal for two spaces iff they are isomorphic."""
    family = canonical_masks(space)
    return (
        bytes([space.n])
        + len(family).to_bytes(2, "big")
        + b"".join(m.to_bytes(8, "big") for m in family)
    )


def encode_labeled(space: ConnectivitySpace) -> bytes:
    """Same byte layout as :func:`canonical_form` without canonicalizing."""
    family = sorted(space.structure)
    return bytes([space.n]) + len(family).to_bytes(2, "big") + b"".join(
        m.to_bytes(8, "big") for m in family
    )


def decode(encoding: bytes) -> ConnectivitySpace:
    n = encoding[0]
    count = int.from_bytes(encoding[1:3], "big")
    body = encoding[3:]
    if len(body) != 8 * count:
        raise ValueError("truncated space encoding")
    family = frozenset(int.from_bytes(body[8 * i : 8 * i + 8], "big") for i in range(count))
    return ConnectivitySpace(n, family)


def are_isomorphic(a: ConnectivitySpace, b: ConnectivitySpace) -> bool:
    if a.n != b.n or len(a.structure) != len(b.structure):
        return False
    return canonical_masks(a) == canonical_masks(b)
