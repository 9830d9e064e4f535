"""Phylogenetic semigroups on multigraphs."""

from ._core import (
    Betti2Tag,
    GeneratorReport,
    Graph,
    Labeling,
    MembershipReport,
    check_membership,
    classify_betti2,
    cycle_edges,
    cycle_legs,
    decompose_full,
    default_cap,
    enumerate_degree,
    enumerate_networks,
    family,
    family_names,
    first_betti_number,
    generator_tag,
    is_indecomposable,
    is_member,
    minimal_generators,
    parse_graph,
    parse_labeling,
    serialize_graph,
    serialize_labeling,
)

__all__ = [
    "Betti2Tag",
    "GeneratorReport",
    "Graph",
    "Labeling",
    "MembershipReport",
    "check_membership",
    "classify_betti2",
    "cycle_edges",
    "cycle_legs",
    "decompose_full",
    "default_cap",
    "enumerate_degree",
    "enumerate_networks",
    "family",
    "family_names",
    "first_betti_number",
    "generator_tag",
    "is_indecomposable",
    "is_member",
    "minimal_generators",
    "parse_graph",
    "parse_labeling",
    "serialize_graph",
    "serialize_labeling",
]
