"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP service can surface library failures without translation tables.
"""


class InfgonError(Exception):
    code = "error"


class BadEdge(InfgonError):
    """Edge endpoints rejected (left >= right, non-integers, out of range)."""

    code = "bad_edge"


class BadIndexOrder(InfgonError):
    code = "bad_index_order"


class NotAdjacentCover(InfgonError):
    """pass_side called on a cover that is not a minimal cover of the inner edge."""

    code = "not_adjacent_cover"


class NotInTriangulation(InfgonError):
    code = "not_in_triangulation"


class FrozenArc(InfgonError):
    code = "frozen_arc"


class NoCover(InfgonError):
    """No realized arc passes over the edge (split-fountain bridge only)."""

    code = "no_cover"


class WindowTooLarge(InfgonError):
    code = "window_too_large"


class NotAFountain(InfgonError):
    code = "not_a_fountain"


class NotLocallyFinite(InfgonError):
    code = "not_locally_finite"


class NotEquivalent(InfgonError):
    code = "not_equivalent"


class InvalidDescriptor(InfgonError):
    code = "invalid_descriptor"


class FrozenVertex(InfgonError):
    code = "frozen_vertex"


class NotQuasiCommuting(InfgonError):
    code = "not_quasi_commuting"


class RelationCheckFailed(InfgonError):
    """An exchange relation failed its polynomial identity check; internal bug."""

    code = "relation_check_failed"


class CertificateFailed(InfgonError):
    """A quantum mutation certificate failed to verify; internal bug."""

    code = "certificate_failed"


class BudgetExceeded(InfgonError):
    code = "budget_exceeded"
