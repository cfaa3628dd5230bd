from .polycore import router

__all__ = ["router"]
