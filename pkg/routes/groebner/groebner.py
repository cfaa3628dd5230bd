from collections import Counter
from typing import Any, Dict

from engines.groebner import buchberger, hilbert_data, jacobian_rank_at, s_pair_certificate
from engines.polycore import RingSpec, parse_poly
from engines.varieties import CaseId, build_dual_ideal, dual_hilbert, fiber_sample, g5_vertex_point
from utils.errors import DualKeyError, ClaimExecutionError, PreconditionError
from utils.rng import derive_seed
from utils.routing import OperationContext, OperationRouter, warn_if_not_generic

router = OperationRouter(prefix="groebner", tags=["groebner"])


@router.operation("dual_hilbert")
def dual_variety_hilbert(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Projective dimension and degree of a dual variety's ideal"""
    try:
        data = dual_hilbert(params["case"], context.field, context.limits)
        return {"projective_dim": data.projective_dim, "degree": data.degree}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute dual Hilbert data: {str(e)}", e)


@router.operation("hilbert_data")
def ideal_hilbert_data(params: Dict[str, Any], context: OperationContext) -> Dict[str, Any]:
    """Hilbert data of an ideal given as polynomial strings"""
    try:
        spec = RingSpec(params["variables"], context.field)
        generators = [parse_poly(text, spec) for text in params["generators"]]
        gb = buchberger(generators, limits=context.limits)
        result = hilbert_data(gb).summary()
        result["certificate"] = s_pair_certificate(gb)
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to compute Hilbert data: {str(e)}", e)


def _rank_histogram(case: CaseId, kind: str, samples: int, context: OperationContext) -> Dict[str, int]:
    if kind == "vertex" and case != CaseId.G5:
        raise PreconditionError(f"Vertex points are only sampled for G5, not {case.value}")
    model = build_dual_ideal(case, context.field)
    ranks: Counter = Counter()
    for i in range(samples):
        seed = derive_seed(context.seed, f"{case.value}:{kind}", i)
        if kind == "vertex":
            point = g5_vertex_point(context.field, seed)
        else:
            point = fiber_sample(case, seed, context.field).point
        ranks[jacobian_rank_at(model.generators, point)] += 1
    histogram = {str(rank): count for rank, count in sorted(ranks.items())}
    warn_if_not_generic(histogram, f"Jacobian ranks at {kind} points of {case.value}")
    return histogram


@router.operation("rank_probes")
def rank_probes(params: Dict[str, Any], context: OperationContext) -> Dict[str, Dict[str, int]]:
    """Histograms of Jacobian ranks at sampled points, keyed '<case>:<vertex|generic>'"""
    try:
        samples = int(params.get("samples", context.samples))
        result = {}
        for case, kind in params["probes"]:
            result[f"{case}:{kind}"] = _rank_histogram(CaseId(case), kind, samples, context)
        return result
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to run rank probes: {str(e)}", e)


@router.operation("span_defects")
def span_defects(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Independent linear forms in each dual ideal"""
    try:
        return {
            case: dual_hilbert(case, context.field, context.limits).span_defect
            for case in params.get("cases", ["G4", "G5", "G6C"])
        }
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to measure span defects: {str(e)}", e)
