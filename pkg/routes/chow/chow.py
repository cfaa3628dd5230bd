import logging
from typing import Any, Dict, List

from engines.chow import ac_hat_identities, canonical_class, exact_sequence_check, projective_bundle_dim, pushforward_degree
from engines.varieties import bundle_chern_data, minus_canonical
from utils.errors import DualKeyError, ClaimExecutionError
from utils.routing import OperationContext, OperationRouter

logger = logging.getLogger(__name__)

router = OperationRouter(prefix="chow", tags=["chow"])

ALL_CASES = ["G4", "G5", "G6Q", "G6C", "G8"]


@router.operation("pushforward_degrees")
def pushforward_degrees(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Degree of the image of P(E-perp) for each case"""
    try:
        return {case: pushforward_degree(bundle_chern_data(case)[1]) for case in params.get("cases", ALL_CASES)}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute pushforward degrees: {str(e)}", e)


@router.operation("chern_product")
def chern_product(params: Dict[str, Any], context: OperationContext) -> str:
    """Total Chern class of the dual of E-perp"""
    try:
        _, E_perp = bundle_chern_data(params.get("case", "G8"))
        return str(E_perp.dual_chern)
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute Chern product: {str(e)}", e)


@router.operation("canonical_classes")
def canonical_classes(params: Dict[str, Any], context: OperationContext) -> Dict[str, List[Any]]:
    """-K of P(E-perp) as [multiple of H, base class]"""
    try:
        result = {}
        for case in params.get("cases", ALL_CASES):
            _, E_perp = bundle_chern_data(case)
            coefficient, base_class = canonical_class(E_perp, minus_canonical(case))
            result[case] = [coefficient, str(base_class)]
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute canonical classes: {str(e)}", e)


@router.operation("ac_hat_identities")
def ac_hat(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    try:
        return ac_hat_identities()
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to evaluate AC_hat identities: {str(e)}", e)


@router.operation("self_duality")
def self_duality(params: Dict[str, Any], context: OperationContext) -> Dict[str, Any]:
    """Pushforward degrees of P(E) and P(E-perp) agree; the common degree is reported"""
    try:
        case = params.get("case", "G6Q")
        E, E_perp = bundle_chern_data(case)
        degree_E, degree_perp = pushforward_degree(E), pushforward_degree(E_perp)
        logger.info(f"{case} pushforward degrees: E {degree_E}, E-perp {degree_perp}")
        return {"equal": degree_E == degree_perp, "degree": degree_E}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compare pushforward degrees: {str(e)}", e)


@router.operation("bundle_checks")
def bundle_checks(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, Any]]:
    """Exact sequence identity and dim P(E) per case"""
    try:
        result = {}
        for case in params.get("cases", ALL_CASES):
            E, E_perp = bundle_chern_data(case)
            result[case] = {
                "exact_sequence": exact_sequence_check(E, E_perp),
                "projective_bundle_dim": projective_bundle_dim(E),
            }
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to check bundle data: {str(e)}", e)
