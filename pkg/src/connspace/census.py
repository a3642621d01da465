"""
Exhaustive census of integral connectivity structures on a few points.

Non-singleton subsets are decided one at a time in size-lexicographic order.
A union of two members is strictly larger than both unless one contains the
other, so it is always decided later; when its turn comes it is either forced
in or free.  Every branch of the search therefore ends in a valid structure,
and no candidate family is ever materialized and rejected.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import core
from .canon import canonical_form, decode, encode_labeled
from .core import ConnectivitySpace
from .errors import CensusCapExceeded
from .realize import is_tree_like

DEFAULT_CAP = 6


@dataclass(frozen=True)
class CensusReport:
    n: int
    labeled: bool
    labeled_count: int
    classes: tuple[tuple[bytes, int, bool], ...]  # (encoding, order, tree-like), sorted

    @property
    def iso_classes(self) -> list[bytes]:
        return [c[0] for c in self.classes]

    @property
    def order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for _, w, _ in self.classes:
            hist[w] = hist.get(w, 0) + 1
        return dict(sorted(hist.items()))

    @property
    def tree_like_count(self) -> int:
        return sum(1 for c in self.classes if c[2])

    def spaces(self) -> list[ConnectivitySpace]:
        return [decode(c[0]) for c in self.classes]

    def to_table(self) -> str:
        lines = [f"{w}\t{c}" for w, c in self.order_histogram.items()]
        lines.append(f"structures\t{self.labeled_count}")
        lines.append(f"classes\t{len(self.classes)}")
        lines.append(f"tree-like\t{self.tree_like_count}")
        return "\n".join(lines) + "\n"


def candidate_subsets(n: int) -> list[int]:
    subs = [m for m in range(1, 1 << n) if m.bit_count() >= 2]
    subs.sort(key=core.set_key)
    return subs


def _walk(subs, i, included, forced) -> Iterator[tuple[int, ...]]:
    if i == len(subs):
        yield included
        return
    s = subs[i]
    if s not in forced:
        yield from _walk(subs, i + 1, included, forced)
    grown = set(forced)
    grown.update(s | t for t in included if s & t)
    yield from _walk(subs, i + 1, included + (s,), frozenset(grown))


def structures(n: int) -> Iterator[ConnectivitySpace]:
    """Every labeled structure on ``1..n`` (deterministic order)."""
    core._check_n(n)
    singletons = [1 << i for i in range(n)]
    for fam in _walk(candidate_subsets(n), 0, (), frozenset()):
        yield ConnectivitySpace._trusted(n, frozenset(singletons + list(fam)))


def _prefixes(subs, depth):
    """Branch states after deciding the first ``depth`` subsets."""
    states = [((), frozenset())]
    for s in subs[:depth]:
        nxt = []
        for included, forced in states:
            if s not in forced:
                nxt.append((included, forced))
            grown = set(forced)
            grown.update(s | t for t in included if s & t)
            nxt.append((included + (s,), frozenset(grown)))
        states = nxt
    return states


def _survey(n, labeled, start, included, forced):
    subs = candidate_subsets(n)
    singletons = [1 << i for i in range(n)]
    found: dict[bytes, tuple[int, bool]] = {}
    count = 0
    for fam in _walk(subs, start, included, forced):
        count += 1
        space = ConnectivitySpace._trusted(n, frozenset(singletons + list(fam)))
        key = encode_labeled(space) if labeled else canonical_form(space)
        if key not in found:
            found[key] = (core.order(space), is_tree_like(space))
    return count, found


def enumerate_structures(
    n: int, labeled: bool = False, cap: int = DEFAULT_CAP, workers: int = 1
) -> CensusReport:
    """Census of structures on ``n`` points.

    With ``labeled`` false the classes are isomorphism classes keyed by
    canonical form; with ``labeled`` true every labeled structure is its own
    class.  The report is identical for any number of workers.
    """
    if n > cap:
        raise CensusCapExceeded(n, cap)
    core._check_n(n)
    total = 0
    merged: dict[bytes, tuple[int, bool]] = {}
    if workers <= 1:
        total, merged = _survey(n, labeled, 0, (), frozenset())
    else:
        subs = candidate_subsets(n)
        depth = min(len(subs), 6)
        jobs = [(n, labeled, depth, inc, forced) for inc, forced in _prefixes(subs, depth)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for count, found in pool.map(_survey, *zip(*jobs)):
                total += count
                merged.update(found)
    classes = tuple((k, w, t) for k, (w, t) in sorted(merged.items()))
    return CensusReport(n, labeled, total, classes)


@dataclass(frozen=True)
class ExtremalResult:
    holds: bool
    witnesses: tuple[ConnectivitySpace, ...]


def extremal_check(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> ExtremalResult:
    """Is there exactly one class of order ``n - 1``, and is it ``A_n``?"""
    report = enumerate_structures(n, cap=cap, workers=workers)
    top = [k for k, w, _ in report.classes if w == n - 1]
    holds = len(top) == 1 and top[0] == canonical_form(core.make_An(n))
    return ExtremalResult(holds, tuple(decode(k) for k in top))
