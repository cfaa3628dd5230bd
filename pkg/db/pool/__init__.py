from .store import ManifestStore, manifest_store

__all__ = ["ManifestStore", "manifest_store"]
