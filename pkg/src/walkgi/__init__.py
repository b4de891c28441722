"""Exact walk-count and local-complement invariants for graph isomorphism
screening, with a staged pairwise distinguisher and group partitioning
tooling for strongly regular graph datasets.
"""

from .graph import (
    MAX_VERTICES,
    Graph,
    SrgParams,
    build_graph,
    degree_sequence,
    local_complement,
    srg_parameters,
)
from .linalg import (
    IntMatrix,
    adjacency_matrix,
    determinant,
    distinct_eigenvalue_count,
    mat_mul,
    mat_pow,
)
from .invariants import (
    DetProfile,
    LcWalkSignature,
    WalkSignature,
    default_m,
    lc_determinant_profile,
    lc_walk_signature,
    walk_signature,
)
from .isotest import (
    DEFAULT_ORACLE_CAP,
    STAGES,
    CertificateError,
    OracleLimitError,
    PartitionReport,
    Verdict,
    brute_force_isomorphic,
    distinguish_pair,
    partition_group,
)
from .formats import (
    CATALOG_HEADER,
    CatalogError,
    CatalogRecord,
    DatasetError,
    Graph6Error,
    ParseFailure,
    catalog_read,
    catalog_write,
    make_catalog_record,
    parse_graph6,
    read_dataset,
    write_graph6,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "SrgParams",
    "build_graph",
    "degree_sequence",
    "local_complement",
    "srg_parameters",
    "IntMatrix",
    "adjacency_matrix",
    "determinant",
    "distinct_eigenvalue_count",
    "mat_mul",
    "mat_pow",
    "DetProfile",
    "LcWalkSignature",
    "WalkSignature",
    "default_m",
    "lc_determinant_profile",
    "lc_walk_signature",
    "walk_signature",
    "DEFAULT_ORACLE_CAP",
    "STAGES",
    "CertificateError",
    "OracleLimitError",
    "PartitionReport",
    "Verdict",
    "brute_force_isomorphic",
    "distinguish_pair",
    "partition_group",
    "CATALOG_HEADER",
    "CatalogError",
    "CatalogRecord",
    "DatasetError",
    "Graph6Error",
    "ParseFailure",
    "catalog_read",
    "catalog_write",
    "make_catalog_record",
    "parse_graph6",
    "read_dataset",
    "write_graph6",
    "__version__",
]
