from .polycore import router as polycore_router
from .groebner import router as groebner_router
from .multigraded import router as multigraded_router
from .chow import router as chow_router
from .lindual import router as lindual_router
from .varieties import router as varieties_router
from .piclattice import router as piclattice_router

__all__ = [
    "polycore_router",
    "groebner_router",
    "multigraded_router",
    "chow_router",
    "lindual_router",
    "varieties_router",
    "piclattice_router",
]
