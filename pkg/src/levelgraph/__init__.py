"""Exact level numbers, hamiltonian level numbers and related invariants of abstract graphs."""

from .crossings import CrossRelation, LayeringOutcome, level_partition_from_crossings, reduce_witness
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    add_apex,
    generate,
    is_outerplanar,
    is_planar,
    parse_edge_list,
    parse_family,
)
from .invariants import (
    CyclicOrder,
    InvariantReport,
    SizeGateError,
    book_thickness,
    expected_values,
    thickness,
    validate_inequalities,
)
from .leveling import (
    INFINITE,
    LevelCertificate,
    LevelResult,
    brute_force_min_levels,
    hamiltonian_level_number,
    has_leveled_embedding,
    level_number,
    relayer,
    spine_level_number,
    verify_certificate,
)
from .spine import (
    ConflictGraph,
    Fragment,
    Spine,
    conflict_graph,
    conflicts,
    enumerate_cycles,
    enumerate_hamiltonian_cycles,
    fragment_disk_embeddable,
    fragments,
    jointly_disk_embeddable,
)

__version__ = "0.1.0"

__all__ = [
    "add_apex",
    "book_thickness",
    "brute_force_min_levels",
    "conflict_graph",
    "ConflictGraph",
    "conflicts",
    "CrossRelation",
    "CyclicOrder",
    "enumerate_cycles",
    "enumerate_hamiltonian_cycles",
    "expected_values",
    "FamilySpec",
    "Fragment",
    "fragment_disk_embeddable",
    "fragments",
    "generate",
    "Graph",
    "GraphError",
    "hamiltonian_level_number",
    "has_leveled_embedding",
    "INFINITE",
    "InvariantReport",
    "is_outerplanar",
    "is_planar",
    "jointly_disk_embeddable",
    "LayeringOutcome",
    "level_number",
    "level_partition_from_crossings",
    "LevelCertificate",
    "LevelResult",
    "parse_edge_list",
    "parse_family",
    "reduce_witness",
    "relayer",
    "SizeGateError",
    "Spine",
    "spine_level_number",
    "thickness",
    "validate_inequalities",
    "verify_certificate",
]
