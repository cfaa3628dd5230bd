from .piclattice import DivisorClass, SurfaceLattice, genus_of_class, pairing, prop73_suite, rem45_suite

__all__ = ["DivisorClass", "SurfaceLattice", "genus_of_class", "pairing", "prop73_suite", "rem45_suite"]
