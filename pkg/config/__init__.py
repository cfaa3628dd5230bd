# Workbench configuration read from DUALKEY_* environment variables
from .settings import Settings

__all__ = ["Settings"]
