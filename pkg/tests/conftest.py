import pytest

from engines.polycore import Field, RingSpec


@pytest.fixture
def fp():
    return Field(32003)


@pytest.fixture
def qq():
    return Field(0)


@pytest.fixture
def xyz(fp):
    return RingSpec(("x", "y", "z"), fp)


@pytest.fixture
def twisted_cubic(fp):
    """The twisted cubic in P^3, cut out by the 2x2 minors of [[a,b,c],[b,c,d]]"""
    from engines.polycore import parse_poly

    spec = RingSpec(("a", "b", "c", "d"), fp)
    return [parse_poly(text, spec) for text in ("a*c - b^2", "a*d - b*c", "b*d - c^2")]
