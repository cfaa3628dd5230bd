from .groebner import router

__all__ = ["router"]
