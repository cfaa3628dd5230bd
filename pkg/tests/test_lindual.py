import pytest

from engines.lindual import (
    Subspace,
    annihilator,
    contains,
    intersect,
    intersect_dim,
    jump_histogram,
    lemma22_verify,
    pairing_zero,
    random_subspace,
    span_sum,
)
from engines.polycore import Field
from utils.errors import DimensionMismatchError, FieldMismatchError


def unit(i, n=4):
    return [int(i == j) for j in range(n)]


def test_echelon_form_is_canonical(fp):
    a = Subspace(fp, 4, [unit(0), unit(1)])
    b = Subspace(fp, 4, [[1, 1, 0, 0], [1, -1, 0, 0]])
    assert a == b
    assert hash(a) == hash(b)


def test_dependent_vectors_collapse(fp):
    s = Subspace(fp, 3, [[1, 2, 3], [2, 4, 6], [0, 0, 0]])
    assert s.dim == 1


def test_annihilator_of_coordinate_plane(fp):
    plane = Subspace(fp, 4, [unit(0), unit(1)])
    assert annihilator(plane) == Subspace(fp, 4, [unit(2), unit(3)])
    assert annihilator(Subspace.zero(fp, 4)) == Subspace.full(fp, 4)
    assert annihilator(Subspace.full(fp, 4)).dim == 0


def test_intersection_and_sum(fp):
    a = Subspace(fp, 4, [unit(0), unit(1)])
    b = Subspace(fp, 4, [unit(1), unit(2)])
    assert intersect(a, b) == Subspace(fp, 4, [unit(1)])
    assert intersect_dim(a, b) == 1
    assert span_sum(a, b).dim == 3
    assert contains(a, [3, 5, 0, 0])
    assert not contains(a, [0, 0, 1, 0])


def test_pairing_with_annihilator(qq):
    s = Subspace(qq, 5, [[1, 2, 0, -1, 3], [0, 1, 1, 1, 0]])
    assert pairing_zero(s, annihilator(s))
    assert not pairing_zero(s, s)


def test_annihilator_is_an_involution(fp):
    s = random_subspace(4, 9, fp, seed=11)
    assert annihilator(annihilator(s)) == s
    assert annihilator(s).dim == 5


@pytest.mark.parametrize("dim_E, dim_Lambda", [(0, 0), (3, 5), (7, 2), (9, 12), (12, 12)])
def test_intersection_dimension_identity(fp, dim_E, dim_Lambda):
    E_s = random_subspace(dim_E, 12, fp, seed=dim_E)
    Lambda = random_subspace(dim_Lambda, 12, fp, seed=100 + dim_Lambda)
    lhs, rhs, holds = lemma22_verify(E_s, Lambda)
    assert holds
    assert lhs == rhs


def test_identity_on_special_position(fp):
    E_s = Subspace(fp, 4, [unit(0), unit(1)])
    Lambda = Subspace(fp, 4, [unit(0), unit(2), unit(3)])
    # E_s ∩ Λ⊥ = span(e2), E_s⊥ ∩ Λ = span(e3, e4)
    assert lemma22_verify(E_s, Lambda) == (1, 1, True)


def test_random_subspace_is_reproducible(fp):
    assert random_subspace(3, 7, fp, seed=5) == random_subspace(3, 7, fp, seed=5)
    with pytest.raises(DimensionMismatchError):
        random_subspace(8, 7, fp, seed=5)


def test_jump_histogram_of_generic_fibers(fp):
    Lambda = random_subspace(2, 6, fp, seed=1)
    histogram = jump_histogram(lambda seed: random_subspace(3, 6, fp, seed), Lambda, 10, seed=3)
    assert histogram == {1: 10}


def test_mixing_fields_or_ambients_fails(fp):
    other = Field(7)
    with pytest.raises(FieldMismatchError):
        span_sum(Subspace.full(fp, 2), Subspace.full(other, 2))
    with pytest.raises(DimensionMismatchError):
        intersect(Subspace.full(fp, 2), Subspace.full(fp, 3))


def test_jump_histogram_with_zero_lambda_is_concentrated(fp):
    histogram = jump_histogram(lambda seed: random_subspace(3, 6, fp, seed), Subspace.zero(fp, 6), 8, seed=2)
    assert histogram == {3: 8}
