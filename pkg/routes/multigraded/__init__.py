from .multigraded import router

__all__ = ["router"]
