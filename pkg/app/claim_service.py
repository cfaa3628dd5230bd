import asyncio
import json
import logging
import time
from typing import Any, Dict, List, Optional

from config.settings import Settings
from engines.chow import pushforward_degree
from engines.groebner.buchberger import GroebnerLimits
from engines.polycore.scalars import Field
from engines.varieties import bundle_chern_data, dual_hilbert
from models.claims import ClaimManifest, ClaimRecord
from models.reports import ClaimReport
from routes import (
    chow_router,
    groebner_router,
    lindual_router,
    multigraded_router,
    piclattice_router,
    polycore_router,
    varieties_router,
)
from utils.errors import LimitExceededError, UnknownOperationError
from utils.routing import OperationContext, OperationRegistry

logger = logging.getLogger(__name__)


def build_registry() -> OperationRegistry:
    registry = OperationRegistry()
    registry.include_router(polycore_router)
    registry.include_router(groebner_router)
    registry.include_router(multigraded_router)
    registry.include_router(chow_router)
    registry.include_router(lindual_router)
    registry.include_router(varieties_router)
    registry.include_router(piclattice_router)
    return registry


def _plain(value: Any) -> Any:
    """The value as it reads back from json, so tuples and lists compare equal"""
    return json.loads(json.dumps(value))


class ClaimService:
    def __init__(self, registry: Optional[OperationRegistry] = None):
        self.registry = registry or build_registry()

    def context_for(self, claim: ClaimRecord, manifest: ClaimManifest, field: Field, samples: int) -> OperationContext:
        caps = claim.caps or manifest.caps
        return OperationContext(field, manifest.seed, claim.id, samples, caps.limits())

    def run_claim(self, claim: ClaimRecord, manifest: ClaimManifest, samples: Optional[int] = None) -> ClaimReport:
        """Run one claim; every failure is captured in the report"""
        field = manifest.field.build()
        context = self.context_for(claim, manifest, field, samples or Settings.SAMPLES)
        logger.info(f"Running claim {claim.id} ({claim.op})")
        started = time.perf_counter()
        computed = None
        detail = None
        try:
            handler = self.registry.get(claim.op)
            computed = _plain(handler(claim.params, context))
            if claim.report_only:
                status = "report-only"
                if claim.recorded_expectation is not None:
                    matched = computed == _plain(claim.recorded_expectation)
                    detail = f"recorded expectation {'matched' if matched else 'not matched'}"
            else:
                status = "pass" if computed == _plain(claim.expected) else "fail"
        except LimitExceededError as e:
            status = "limit"
            detail = str(e)
            logger.warning(f"Claim {claim.id} hit a resource limit: {e}")
        except UnknownOperationError as e:
            status = "fail"
            detail = str(e)
            logger.error(f"Claim {claim.id} names an unknown operation: {e.name}")
        except Exception as e:
            status = "fail"
            detail = str(e)
            logger.error(f"Claim {claim.id} failed: {e}")

        elapsed_ms = int((time.perf_counter() - started) * 1000)
        logger.info(f"Claim {claim.id} finished with status {status} in {elapsed_ms} ms")
        return ClaimReport(
            id=claim.id,
            status=status,
            expected=claim.expected,
            computed=computed,
            elapsed_ms=elapsed_ms,
            seed=context.seed,
            op=claim.op,
            anchor=claim.anchor,
            detail=detail,
        )

    async def run_manifest(
        self,
        manifest: ClaimManifest,
        parallelism: int = 1,
        samples: Optional[int] = None,
    ) -> List[ClaimReport]:
        """Reports in manifest order, claims run on at most `parallelism` worker threads"""
        if parallelism < 1:
            raise ValueError(f"Parallelism must be at least 1, got {parallelism}")
        semaphore = asyncio.Semaphore(parallelism)

        async def run_one(claim: ClaimRecord) -> ClaimReport:
            async with semaphore:
                return await asyncio.to_thread(self.run_claim, claim, manifest, samples)

        logger.info(f"Running {len(manifest.claims)} claims of {manifest.name} with parallelism {parallelism}")
        return list(await asyncio.gather(*(run_one(claim) for claim in manifest.claims)))

    async def validate_cross_engine(self, field: Field, limits: Optional[GroebnerLimits] = None) -> Dict[str, Dict[str, Any]]:
        """Gröbner degree of the dual ideal against the Chow pushforward degree"""
        result = {}
        for case in ("G4", "G5"):
            data = await asyncio.to_thread(dual_hilbert, case, field, limits)
            degree = pushforward_degree(bundle_chern_data(case)[1])
            result[case] = {"groebner": data.degree, "chow": degree, "match": data.degree == degree}
            if data.degree != degree:
                logger.error(f"Engines disagree on {case}: Gröbner {data.degree}, Chow {degree}")
        return result


claim_service = ClaimService()
