import os
from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Workbench settings configuration"""

    # Field used by every engine unless a manifest overrides it
    CHARACTERISTIC = os.getenv("DUALKEY_CHARACTERISTIC", "p")
    PRIME = int(os.getenv("DUALKEY_PRIME", "32003"))

    # Randomness and sampling
    SEED = int(os.getenv("DUALKEY_SEED", "1"))
    SAMPLES = int(os.getenv("DUALKEY_SAMPLES", "100"))

    # Gröbner resource caps
    MAX_PAIR_DEGREE = int(os.getenv("DUALKEY_MAX_PAIR_DEGREE", "30"))
    MAX_BASIS_SIZE = int(os.getenv("DUALKEY_MAX_BASIS_SIZE", "20000"))

    # Runner
    FORMAT = os.getenv("DUALKEY_FORMAT", "text")
    PARALLELISM = int(os.getenv("DUALKEY_PARALLELISM", "1"))
    MANIFEST = os.getenv("DUALKEY_MANIFEST", "core")
    LOG_LEVEL = os.getenv("DUALKEY_LOG_LEVEL", "WARNING")

    # Share of samples that must show the generic value in probabilistic checks
    GENERIC_SHARE = float(os.getenv("DUALKEY_GENERIC_SHARE", "0.95"))

    # Application settings
    APP_NAME = "Dual Key Variety Workbench"
    APP_VERSION = "1.0.0"
    APP_DESCRIPTION = "Exact verification of dual key variety claims with cross-validating engines"

    @classmethod
    def default_caps(cls) -> dict:
        """Get the default Gröbner resource caps"""
        return {"max_pair_degree": cls.MAX_PAIR_DEGREE, "max_basis_size": cls.MAX_BASIS_SIZE}
