from .lindual import router

__all__ = ["router"]
