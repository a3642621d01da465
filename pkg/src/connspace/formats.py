"""Plain-text file formats: space files and linking-matrix files.

Space file::

    # comment
    points 4
    set 1 2
    set 1 2 3

Singletons are implied; duplicate ``set`` lines are merged.
"""

from __future__ import annotations

from .core import MAX_POINTS, ConnectivitySpace, labels
from .links import LinkingMatrix


class FormatError(ValueError):
    """Input text does not follow the expected layout."""


def parse_space_family(text: str) -> tuple[int, frozenset[int]]:
    """Parse a space file into ``(n, family)`` without checking the union axiom."""
    n = None
    family = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head, args = line[0], line[1:]
        if head == "points":
            if n is not None:
                raise FormatError(f"line {lineno}: repeated 'points' header")
            if len(args) != 1 or not args[0].isdigit():
                raise FormatError(f"line {lineno}: expected 'points N'")
            n = int(args[0])
            if not 1 <= n <= MAX_POINTS:
                raise FormatError(f"line {lineno}: point count must be in 1..{MAX_POINTS}")
        elif head == "set":
            if n is None:
                raise FormatError(f"line {lineno}: 'set' before 'points'")
            if not args or not all(a.isdigit() for a in args):
                raise FormatError(f"line {lineno}: expected 'set i1 i2 ...'")
            mask = 0
            for a in args:
                i = int(a)
                if not 1 <= i <= n:
                    raise FormatError(f"line {lineno}: label {i} out of range 1..{n}")
                mask |= 1 << (i - 1)
            family.add(mask)
        else:
            raise FormatError(f"line {lineno}: unknown directive {head!r}")
    if n is None:
        raise FormatError("missing 'points N' header")
    family.update(1 << i for i in range(n))
    return n, frozenset(family)


def parse_space(text: str) -> ConnectivitySpace:
    n, family = parse_space_family(text)
    return ConnectivitySpace(n, family)


def format_space(space: ConnectivitySpace, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"points {space.n}")
    for m in space.members():
        if m.bit_count() > 1:
            lines.append("set " + " ".join(map(str, labels(m))))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> LinkingMatrix:
    """Matrix file: ``N`` then ``N`` rows of ``N`` integers (``#`` comments)."""
    rows = []
    n = None
    for raw in text.splitlines():
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise FormatError(f"non-integer entry in {raw!r}") from None
        if n is None:
            if len(values) != 1 or values[0] < 1:
                raise FormatError("first line must be the component count N")
            n = values[0]
            continue
        if len(values) != n:
            raise FormatError(f"row {len(rows) + 1} has {len(values)} entries, expected {n}")
        rows.append(values)
    if n is None or len(rows) != n:
        raise FormatError(f"expected {n} rows, got {len(rows)}")
    return LinkingMatrix(rows)


def format_matrix(matrix: LinkingMatrix) -> str:
    lines = [str(matrix.m)] + [" ".join(map(str, r)) for r in matrix.rows]
    return "\n".join(lines) + "\n"
