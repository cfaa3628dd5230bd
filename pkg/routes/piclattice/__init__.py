from .piclattice import router

__all__ = ["router"]
