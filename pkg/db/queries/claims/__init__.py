from .claim_queries import ClaimQueries

__all__ = ["ClaimQueries"]
