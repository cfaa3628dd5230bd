from .pool import manifest_store
from .queries import ClaimQueries

__all__ = ["manifest_store", "ClaimQueries"]
