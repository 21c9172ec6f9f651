"""infgon: exact cluster combinatorics of the infinity-gon.

Triangulations of the infinity-gon with finite descriptions, diagonal flips,
exchange quivers with Fomin-Zelevinsky mutation, and exact verification of
the induced classical and quantum cluster structures on the coordinate ring
of the doubly-infinite Grassmannian of planes.
"""

from .arcs import Edge, PassSide, crosses, pass_side, passes_over, side
from .errors import (
    BadEdge,
    BadIndexOrder,
    BudgetExceeded,
    CertificateFailed,
    FrozenArc,
    FrozenVertex,
    InfgonError,
    InvalidDescriptor,
    NoCover,
    NotAdjacentCover,
    NotAFountain,
    NotEquivalent,
    NotInTriangulation,
    NotLocallyFinite,
    NotQuasiCommuting,
    RelationCheckFailed,
    WindowTooLarge,
)
from .plucker import (
    ClusterState,
    ExchangeRelation,
    LaurentPoly,
    MatrixPoly,
    RationalExpr,
    exchange_flip,
    laurent_expand,
    plucker_expand,
    reachable_variable_closure,
    subalgebra_generators,
    verify_short_plucker,
)
from .quantum import (
    LaurentHalfQ,
    QElement,
    QTorusElement,
    compatibility_check,
    l_entry,
    normal_form,
    qplucker,
    quantum_mutate,
    toric_monomial,
    verify_quantum_plucker,
    verify_quasi_commute,
)
from .quiver import (
    IceQuiver,
    b_entry,
    build_exchange_quiver,
    component_count,
    export_dot,
    finite_component_empty,
    same_component,
)
from .triangulation import (
    BaseFamily,
    Fountain,
    FountainAt,
    Leapfrog,
    LocallyFinite,
    Quadrilateral,
    SplitFountain,
    SplitFountainAt,
    TriangulationClass,
    TriangulationDesc,
    arcs_in_window,
    classify,
    contains,
    find_flip_sequence,
    flip,
    fountain_arc_sequence,
    minimal_arc_chain,
    minimal_arc_over,
    mutation_equivalent,
    quadrilateral_of,
    validate_descriptor,
    validate_window,
)

__version__ = "0.1.0"
