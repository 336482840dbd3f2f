"""Exact K-theory invariants of Leavitt path algebras of finite graphs.

The toolkit computes K0 groups as cokernels over the integers, relates the
shift-graph family to Fibonacci and Haselgrove sequences, cross-checks the
results against a brute-force graph-monoid oracle, and emits identification
certificates for the purely infinite simple cases.
"""

from .classify import (
    K0Report,
    KPCertificate,
    RealizationDescriptor,
    StepsResult,
    k0_report,
    kp_certificate,
    realization,
    verify_cyclic_criterion,
    verify_steps,
    verify_theorem_c2,
)
from .errors import (
    GraphK0Error,
    GroupMismatch,
    InternalError,
    InvalidGraph,
    InvalidParameter,
    NotApplicable,
    OutOfRegion,
    ResourceLimit,
    ShapeError,
    Unsupported,
)
from .graphs import (
    Graph,
    StructuralReport,
    cayley_graph,
    en_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    incidence_matrix,
    k0_matrix,
    make_graph,
    rose_graph,
    rose_tail_graph,
    structural_report,
)
from .intlinalg import (
    AbelianGroup,
    Cokernel,
    GroupElement,
    IntMatrix,
    SmithDecomposition,
    circulant_det_float,
    cokernel,
    determinant,
    element_order,
    exact_div,
    generates,
    project,
    smith_normal_form,
)
from .monoid import (
    DEFAULT_BUDGET,
    MonoidTable,
    consistent_with_cokernel,
    default_cap,
    enumerate_classes,
)
from .seqs import (
    GcdInvariants,
    IdentityReport,
    d_closed,
    d_gcd,
    fib,
    gcd_invariants,
    h2_recursive,
    haselgrove,
    identity_suite,
)

__all__ = [
    "AbelianGroup",
    "Cokernel",
    "DEFAULT_BUDGET",
    "GcdInvariants",
    "Graph",
    "GraphK0Error",
    "GroupElement",
    "GroupMismatch",
    "IdentityReport",
    "IntMatrix",
    "InternalError",
    "InvalidGraph",
    "InvalidParameter",
    "K0Report",
    "KPCertificate",
    "MonoidTable",
    "NotApplicable",
    "OutOfRegion",
    "RealizationDescriptor",
    "ResourceLimit",
    "ShapeError",
    "SmithDecomposition",
    "StepsResult",
    "StructuralReport",
    "Unsupported",
    "cayley_graph",
    "circulant_det_float",
    "cokernel",
    "consistent_with_cokernel",
    "d_closed",
    "d_gcd",
    "default_cap",
    "determinant",
    "element_order",
    "en_graph",
    "enumerate_classes",
    "exact_div",
    "fib",
    "gcd_invariants",
    "generates",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "h2_recursive",
    "haselgrove",
    "identity_suite",
    "incidence_matrix",
    "k0_matrix",
    "k0_report",
    "kp_certificate",
    "make_graph",
    "project",
    "realization",
    "rose_graph",
    "rose_tail_graph",
    "smith_normal_form",
    "structural_report",
    "verify_cyclic_criterion",
    "verify_steps",
    "verify_theorem_c2",
]
