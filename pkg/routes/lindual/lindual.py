import logging
from typing import Any, Dict

from engines.lindual import jump_histogram, lemma22_verify, random_subspace
from engines.varieties import case_info, fiber_orthogonality, fiber_sample, random_lambda
from utils.errors import DualKeyError, ClaimExecutionError
from utils.rng import derive_seed, make_rng
from utils.routing import OperationContext, OperationRouter

logger = logging.getLogger(__name__)

router = OperationRouter(prefix="lindual", tags=["lindual"])


@router.operation("duality_suite")
def duality_suite(params: Dict[str, Any], context: OperationContext) -> Dict[str, Any]:
    """The intersection-dimension identity on random pairs, then fiber orthogonality per case"""
    try:
        configurations = int(params.get("configurations", 1000))
        ambient = int(params.get("ambient", 12))
        samples = int(params.get("samples", context.samples))
        rng = make_rng(context.seed)

        failures = 0
        for i in range(configurations):
            dim_E, dim_Lambda = (int(d) for d in rng.integers(0, ambient + 1, size=2))
            E_s = random_subspace(dim_E, ambient, context.field, derive_seed(context.seed, "E", i))
            Lambda = random_subspace(dim_Lambda, ambient, context.field, derive_seed(context.seed, "Lambda", i))
            lhs, rhs, holds = lemma22_verify(E_s, Lambda)
            if not holds:
                failures += 1
                logger.error(f"Duality identity failed on configuration {i}: {lhs} != {rhs}")

        orthogonality = {
            case: fiber_orthogonality(case, samples, context.seed, context.field)
            for case in params.get("cases", ["G4", "G5", "G8"])
        }
        return {"identity_failures": failures, "orthogonality_failures": orthogonality}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to run the duality suite: {str(e)}", e)


@router.operation("jump_histogram")
def jump_locus(params: Dict[str, Any], context: OperationContext) -> Dict[str, int]:
    """Histogram of dim(E_s ∩ Λ-perp) over sampled fibers for one random Λ"""
    try:
        case = params["case"]
        info = case_info(case)
        Lambda = random_lambda(case, int(params["lambda_dim"]), context.seed, context.field, info.section_dim)
        histogram = jump_histogram(
            lambda seed: fiber_sample(case, seed, context.field).E_s,
            Lambda,
            int(params.get("samples", context.samples)),
            context.seed,
        )
        return {str(k): v for k, v in histogram.items()}
    except DualKeyError:
        raise
    except Exception as e:
        raise ClaimExecutionError(f"Failed to build the jump histogram: {str(e)}", e)
