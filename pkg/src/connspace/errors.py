"""Exception hierarchy shared by all modules."""


def _fmt(mask):
    if isinstance(mask, int):
        labels = [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]
        return "{" + ",".join(map(str, labels)) + "}"
    return str(mask)


class ConnSpaceError(Exception):
    pass


class UnsupportedGroundSet(ConnSpaceError, ValueError):
    """Ground-set size outside 1..64."""


class OutOfRange(ConnSpaceError, ValueError):
    """A point label lies outside the ground set."""


class InvalidStructure(ConnSpaceError, ValueError):
    """A family of sets violates the connectivity axioms."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DomainError(ConnSpaceError, ValueError):
    """An operation was called outside its domain (e.g. order of a reducible set)."""


class InconsistentLinkDescription(ConnSpaceError, ValueError):
    def __init__(self, a, b, union):
        self.pair = (a, b)
        self.union = union
        super().__init__(
            f"nonsplittable sublinks {_fmt(a)} and {_fmt(b)} intersect, "
            f"so {_fmt(union)} must also be nonsplittable"
        )


class NotTreeLike(ConnSpaceError):
    """Covering children of an assembly node overlap."""

    def __init__(self, node, first, second):
        self.node = node
        self.pair = (first, second)
        super().__init__(
            f"node {_fmt(node)} has overlapping children {_fmt(first)} and {_fmt(second)}"
        )


class InvalidLinkingMatrix(ConnSpaceError, ValueError):
    """Matrix is not square, not symmetric, or has a nonzero diagonal."""


class MalformedPD(ConnSpaceError, ValueError):
    pass


class CensusCapExceeded(ConnSpaceError, ValueError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"census refused for n={n}: cap is {cap}")
