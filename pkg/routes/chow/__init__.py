from .chow import router

__all__ = ["router"]
