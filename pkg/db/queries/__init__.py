from .claims import ClaimQueries

__all__ = ["ClaimQueries"]
