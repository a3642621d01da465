"""Finite integral connectivity spaces and the connectivity order of links."""

from .canon import are_isomorphic, canonical_form
from .core import (
    ConnectivitySpace,
    GenericGraph,
    connected_components,
    generate,
    generic_graph,
    irreducibles,
    is_connected,
    make_An,
    order,
    order_of_subset,
    pointset,
    validate_structure,
)
from .links import LinkDescription, LinkingMatrix, connectivity_order_of_link, linking_lower_bound, splittability_space

__all__ = [
    "ConnectivitySpace",
    "GenericGraph",
    "LinkDescription",
    "LinkingMatrix",
    "are_isomorphic",
    "canonical_form",
    "connected_components",
    "connectivity_order_of_link",
    "generate",
    "generic_graph",
    "irreducibles",
    "is_connected",
    "linking_lower_bound",
    "make_An",
    "order",
    "order_of_subset",
    "pointset",
    "splittability_space",
    "validate_structure",
]
