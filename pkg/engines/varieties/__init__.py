from .cases import CASES, CaseId, CaseInfo, case_info
from .ideals import DualModel, build_dual_ideal, genus6c_cubic, segre_ideal, segre_ring
from .bundles import bundle_chern_data, minus_canonical
from .fibers import (
    FiberPoint,
    containment_check,
    fiber_orthogonality,
    fiber_sample,
    g4_fiber,
    g5_fiber,
    g5_vertex_point,
    g8_fiber,
    random_lambda,
)
from .probes import (
    cone_contains_component,
    cor63_probe,
    cubic_identity_check,
    generic_cubic_point,
    gradient_nonzero_at,
    lemma42_probe,
    sing_gradient_check,
    special_lambda,
)
from .sections import (
    cor46_round_trip,
    cor46_section,
    dual_hilbert,
    linear_section_invariants,
    random_cor46_input,
)

__all__ = [
    "CASES",
    "CaseId",
    "CaseInfo",
    "case_info",
    "DualModel",
    "build_dual_ideal",
    "genus6c_cubic",
    "segre_ideal",
    "segre_ring",
    "bundle_chern_data",
    "minus_canonical",
    "FiberPoint",
    "containment_check",
    "fiber_orthogonality",
    "fiber_sample",
    "g4_fiber",
    "g5_fiber",
    "g5_vertex_point",
    "g8_fiber",
    "random_lambda",
    "cone_contains_component",
    "cor63_probe",
    "cubic_identity_check",
    "generic_cubic_point",
    "gradient_nonzero_at",
    "lemma42_probe",
    "sing_gradient_check",
    "special_lambda",
    "cor46_round_trip",
    "cor46_section",
    "dual_hilbert",
    "linear_section_invariants",
    "random_cor46_input",
]
