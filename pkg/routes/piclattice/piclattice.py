from typing import Any, Dict

from engines.piclattice import SurfaceLattice, genus_of_class, prop73_suite, rem45_suite
from utils.errors import DualKeyError, ClaimExecutionError
from utils.routing import OperationContext, OperationRouter

router = OperationRouter(prefix="piclattice", tags=["piclattice"])


@router.operation("lattice_suites")
def lattice_suites(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, int]]:
    try:
        return {"quintic_del_pezzo": prop73_suite(), "cubic_surface": rem45_suite()}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to run lattice suites: {str(e)}", e)


@router.operation("genus_of_class")
def class_genus(params: Dict[str, Any], context: OperationContext) -> int:
    """Adjunction genus of m*line - sum mult_i*e_i on a blow-up in k points"""
    try:
        lattice = SurfaceLattice(int(params["k"]))
        return genus_of_class(lattice.cls(int(params["m"]), params.get("multiplicities", 0)))
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute class genus: {str(e)}", e)
