import logging
from typing import Any, Callable, Dict, List, Optional

from config.settings import Settings
from engines.groebner.buchberger import GroebnerLimits
from engines.polycore.scalars import Field
from utils.errors import UnknownOperationError
from utils.rng import derive_seed, generic_share

logger = logging.getLogger(__name__)


class OperationContext:
    """Per-claim execution context handed to every operation handler"""

    def __init__(
        self,
        field: Field,
        global_seed: int,
        claim_id: str,
        samples: int,
        limits: Optional[GroebnerLimits] = None,
    ):
        self.field = field
        self.global_seed = global_seed
        self.claim_id = claim_id
        self.samples = samples
        self.limits = limits or GroebnerLimits()

    @property
    def seed(self) -> int:
        return derive_seed(self.global_seed, self.claim_id)

    def trial_seed(self, index: int) -> int:
        return derive_seed(self.global_seed, self.claim_id, index)


Handler = Callable[[Dict[str, Any], OperationContext], Any]


class OperationRouter:
    """Named operations of one engine, registered as '<prefix>.<name>'"""

    def __init__(self, prefix: str, tags: Optional[List[str]] = None):
        self.prefix = prefix
        self.tags = tags or []
        self.operations: Dict[str, Handler] = {}

    def operation(self, name: str) -> Callable[[Handler], Handler]:
        def register(handler: Handler) -> Handler:
            self.operations[f"{self.prefix}.{name}"] = handler
            return handler

        return register


class OperationRegistry:
    def __init__(self):
        self._operations: Dict[str, Handler] = {}

    def include_router(self, router: OperationRouter) -> None:
        for name, handler in router.operations.items():
            if name in self._operations:
                raise ValueError(f"Operation {name} registered twice")
            self._operations[name] = handler
        logger.info(f"Registered {len(router.operations)} operations from {router.prefix}")

    def get(self, name: str) -> Handler:
        if name not in self._operations:
            raise UnknownOperationError(name)
        return self._operations[name]

    def __contains__(self, name: str) -> bool:
        return name in self._operations

    def names(self) -> List[str]:
        return sorted(self._operations)


def warn_if_not_generic(histogram: Dict[Any, int], label: str) -> None:
    """Log the exceptional samples when the generic value falls below the configured share"""
    value, share = generic_share(histogram)
    if share < Settings.GENERIC_SHARE:
        exceptional = {k: v for k, v in histogram.items() if k != value}
        logger.warning(f"{label}: generic value {value} on {share:.0%} of samples, exceptional {exceptional}")
