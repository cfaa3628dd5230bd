from typing import Any, Dict

from engines.polycore import RingSpec, format_poly, normalize, parse_poly
from utils.errors import DualKeyError, ClaimExecutionError
from utils.routing import OperationContext, OperationRouter

router = OperationRouter(prefix="polycore", tags=["polycore"])


@router.operation("normalize")
def normalized_form(params: Dict[str, Any], context: OperationContext) -> str:
    """Parse, normalize and print a polynomial"""
    try:
        spec = RingSpec(params["variables"], context.field)
        return format_poly(normalize(parse_poly(params["polynomial"], spec)))
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to normalize polynomial: {str(e)}", e)
