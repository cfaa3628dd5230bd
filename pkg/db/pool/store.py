import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from models.claims import ClaimManifest

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# other names the built-in manifests answer to
ALIASES = {"paper-core": "core"}


class ManifestStore:
    """Loads claim manifests from the shipped data directory or from json files"""

    def __init__(self, data_dir: Path = DATA_DIR):
        self.data_dir = data_dir
        self._cache: Dict[str, ClaimManifest] = {}

    def builtin_names(self) -> List[str]:
        return sorted(path.stem for path in self.data_dir.glob("*.json"))

    def resolve(self, name_or_path: Union[str, Path]) -> Path:
        """A built-in manifest name or a path to a json file"""
        candidate = Path(name_or_path)
        if candidate.suffix == ".json" or candidate.exists():
            return candidate
        name = ALIASES.get(str(name_or_path), str(name_or_path))
        return self.data_dir / f"{name}.json"

    def load(self, name_or_path: Union[str, Path]) -> ClaimManifest:
        path = self.resolve(name_or_path)
        key = str(path.resolve())
        if key in self._cache:
            return self._cache[key]
        try:
            with open(path, "r", encoding="utf-8") as handle:
                raw = json.load(handle)
            manifest = ClaimManifest(**raw)
        except FileNotFoundError:
            logger.error(f"Manifest not found: {path}")
            raise
        except (json.JSONDecodeError, ValidationError) as e:
            logger.error(f"Malformed manifest {path}: {e}")
            raise ValueError(f"Malformed manifest {path}: {str(e)}")
        logger.info(f"Loaded manifest {manifest.name} with {len(manifest.claims)} claims from {path}")
        self._cache[key] = manifest
        return manifest

    def save(self, manifest: ClaimManifest, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(manifest.model_dump_json(indent=2))

    def clear(self, name_or_path: Optional[Union[str, Path]] = None) -> None:
        if name_or_path is None:
            self._cache.clear()
        else:
            self._cache.pop(str(self.resolve(name_or_path).resolve()), None)


manifest_store = ManifestStore()
