import pytest

from engines.multigraded import hyperelliptic_genus
from engines.piclattice import SurfaceLattice, genus_of_class, pairing, prop73_suite, rem45_suite
from utils.errors import DimensionMismatchError


def test_exceptional_curves():
    L = SurfaceLattice(4)
    e = L.exceptional(2)
    assert pairing(e, e) == -1
    assert pairing(e, L.canonical()) == -1
    assert pairing(e, L.exceptional(3)) == 0
    assert genus_of_class(e) == 0


def test_plane_curves_without_base_points():
    L = SurfaceLattice(0)
    assert genus_of_class(L.cls(3)) == 1
    assert genus_of_class(L.cls(4)) == 3
    assert pairing(L.canonical(), L.canonical()) == 9


def test_class_arithmetic():
    L = SurfaceLattice(2)
    C = L.cls(3, [1, 0])
    assert C + L.exceptional(1) == L.cls(3, [0, 0])
    assert 2 * L.line() - L.line() == L.line()
    assert -C == L.cls(-3, [-1, 0])
    assert str(C) == "3m -1e1"


def test_lattices_do_not_mix():
    with pytest.raises(DimensionMismatchError):
        pairing(SurfaceLattice(1).line(), SurfaceLattice(2).line())
    with pytest.raises(DimensionMismatchError):
        SurfaceLattice(2).exceptional(3)


def test_quintic_del_pezzo_suite():
    assert prop73_suite() == {
        "C^2": 9,
        "C.K": -7,
        "genus": 2,
        "delta_degree": 7,
        "anticanonical_degree": 5,
        "line_degree": 5,
        "canonical_degree": 2,
    }


def test_cubic_surface_suite():
    assert rem45_suite() == {"genus": 9, "C.conic": 2, "cubic_surface_degree": 3, "curve_degree": 9}


def test_double_cover_genus_matches_the_quintic():
    assert hyperelliptic_genus(6) == prop73_suite()["genus"]
