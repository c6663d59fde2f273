"""Laplacian vs adjacency continuous-time quantum walk equivalence."""

from ._ctqw import (
    CosineSignature,
    EquivalenceReport,
    FamilyInstance,
    Generator,
    Graph,
    MixingMatrix,
    ScanHit,
    ScanSummary,
    SpectralDecomposition,
    StartClassification,
    VertexWitness,
    WalkState,
    adjacency_matrix,
    canonical_min_code,
    cartesian_product,
    classify_start_vertices,
    cosine_signature,
    decompose,
    degree_profile,
    enumerate_connected,
    evolve,
    family,
    graph6_decode,
    graph6_encode,
    is_connected,
    laplacian,
    mixing_matrix,
    probabilities,
    read_graph6_lines,
    scan_file,
    signatures_equal,
)

__all__ = [
    "CosineSignature",
    "EquivalenceReport",
    "FamilyInstance",
    "Generator",
    "Graph",
    "MixingMatrix",
    "ScanHit",
    "ScanSummary",
    "SpectralDecomposition",
    "StartClassification",
    "VertexWitness",
    "WalkState",
    "adjacency_matrix",
    "canonical_min_code",
    "cartesian_product",
    "classify_start_vertices",
    "cosine_signature",
    "decompose",
    "degree_profile",
    "enumerate_connected",
    "evolve",
    "family",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "laplacian",
    "mixing_matrix",
    "probabilities",
    "read_graph6_lines",
    "scan_file",
    "signatures_equal",
]
