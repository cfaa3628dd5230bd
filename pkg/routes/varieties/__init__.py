from .varieties import router

__all__ = ["router"]
