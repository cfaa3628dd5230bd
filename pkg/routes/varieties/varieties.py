import logging
from collections import Counter
from typing import Any, Dict

from engines.multigraded import CISpec, ci_curve_invariants
from engines.varieties import (
    cone_contains_component,
    containment_check,
    cor46_round_trip,
    cor63_probe,
    cubic_identity_check,
    generic_cubic_point,
    gradient_nonzero_at,
    lemma42_probe,
    linear_section_invariants,
    random_cor46_input,
    sing_gradient_check,
)
from utils.errors import DualKeyError, ClaimExecutionError
from utils.rng import derive_seed
from utils.routing import OperationContext, OperationRouter, warn_if_not_generic

logger = logging.getLogger(__name__)

router = OperationRouter(prefix="varieties", tags=["varieties"])

# the curve cut on P^2 x P^3 by three (1,1) forms and one (1,2) form
SECTION_CURVE = CISpec(m=2, n=3, bidegrees=[(1, 1), (1, 1), (1, 1), (1, 2)])


def _histogram(values, label: str) -> Dict[str, int]:
    histogram = {str(value): count for value, count in sorted(Counter(values).items(), key=lambda item: str(item[0]))}
    warn_if_not_generic(histogram, label)
    return histogram


@router.operation("linear_sections")
def linear_sections(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, Any]]:
    """Invariants of random linear sections, repeated over independent seeds"""
    try:
        trials = int(params.get("trials", 3))
        result = {}
        for case, codim in params["sections"].items():
            runs = [
                linear_section_invariants(case, codim, derive_seed(context.seed, case, k), context.field, context.limits)
                for k in range(trials)
            ]
            first = dict(runs[0])
            first["trials_agree"] = all(run == runs[0] for run in runs)
            if not first["trials_agree"]:
                logger.warning(f"Linear sections of {case} disagree across seeds: {runs}")
            result[case] = first
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute linear sections: {str(e)}", e)


@router.operation("cor46_round_trip")
def section_round_trip(params: Dict[str, Any], context: OperationContext) -> Dict[str, Any]:
    """Curve section of the genus-5 dual variety from random (1,1) and (1,2) forms"""
    try:
        eta, xi = random_cor46_input(context.field, context.seed)
        result = cor46_round_trip(eta, xi, context.limits)
        d1, d2, genus = ci_curve_invariants(SECTION_CURVE)
        result["matches_complete_intersection"] = result["degree"] == d1 + d2 and result["genus"] == genus
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to run the curve section round trip: {str(e)}", e)


@router.operation("singular_loci")
def singular_loci(params: Dict[str, Any], context: OperationContext) -> Dict[str, bool]:
    """Symbolic checks on the singular locus of the genus-6 C-type cubic"""
    try:
        field = context.field
        point = generic_cubic_point(context.seed, field)
        return {
            "cubic_identity": cubic_identity_check(field, context.seed),
            "q=0": sing_gradient_check("G6C", "q=0", field),
            "S_F": sing_gradient_check("G6C", "S_F", field),
            "cone_contains_S_F": cone_contains_component(field),
            "generic_gradient_nonzero": gradient_nonzero_at(point, field),
        }
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to check singular loci: {str(e)}", e)


@router.operation("cor63_probe")
def cubic_section_probe(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, int]]:
    """Singular points of the cubic on random P^5's, over several seeds"""
    try:
        runs = [
            cor63_probe(context.trial_seed(i), context.field, context.limits)
            for i in range(int(params.get("trials", 5)))
        ]
        return {
            key: _histogram((run[key] for run in runs), f"Cubic sections, {key}")
            for key in ("sing_count", "on_q0_component", "affine_hessian_rank")
        }
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to probe cubic sections: {str(e)}", e)


@router.operation("lemma42_probes")
def segre_probes(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, int]]:
    """Intersection degrees of P^2 x P^3 with lines and planes spanned by its points"""
    try:
        trials = int(params.get("trials", 10))
        result = {}
        for kind in params.get("kinds", ["line2", "plane3"]):
            degrees = [
                lemma42_probe(kind, derive_seed(context.seed, kind, i), context.field, limits=context.limits)
                for i in range(trials)
            ]
            result[kind] = _histogram(degrees, f"Segre probe {kind}")
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to run Segre probes: {str(e)}", e)


@router.operation("containment")
def containment(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Fiber samples off the explicit dual ideal, per case"""
    try:
        samples = int(params.get("samples", context.samples))
        return {
            case: containment_check(case, samples, context.seed, context.field)
            for case in params.get("cases", ["G4", "G5"])
        }
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to check fiber containment: {str(e)}", e)
