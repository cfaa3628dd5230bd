from typing import Any, Dict

from engines.multigraded import CISpec, canonical_quadric_count, ci_curve_invariants, hyperelliptic_genus, restricted_degree, rr_h0
from utils.errors import DualKeyError, ClaimExecutionError
from utils.routing import OperationContext, OperationRouter

router = OperationRouter(prefix="multigraded", tags=["multigraded"])


@router.operation("ci_curve_invariants")
def curve_invariants(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, Any]]:
    """Bidegree and genus of named complete-intersection curves"""
    try:
        result = {}
        for name, raw in params["curves"].items():
            d1, d2, genus = ci_curve_invariants(CISpec(**raw))
            result[name] = {"d1": d1, "d2": d2, "genus": genus, "canonical_sum": d1 + d2 == 2 * genus - 2}
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute curve invariants: {str(e)}", e)


@router.operation("restricted_degree")
def degree_of_restriction(params: Dict[str, Any], context: OperationContext) -> int:
    try:
        return restricted_degree(CISpec(**params["curve"]), params["a"], params["b"])
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute restricted degree: {str(e)}", e)


@router.operation("riemann_roch")
def riemann_roch(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Sections of a non-special bundle and quadrics through the canonical curve"""
    try:
        genus = params["genus"]
        return {
            "h0": rr_h0(params["degree"], genus),
            "canonical_quadrics": canonical_quadric_count(genus),
        }
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to evaluate Riemann-Roch counts: {str(e)}", e)


@router.operation("hyperelliptic_genus")
def double_cover_genus(params: Dict[str, Any], context: OperationContext) -> int:
    try:
        return hyperelliptic_genus(params["branch_points"])
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute double cover genus: {str(e)}", e)
