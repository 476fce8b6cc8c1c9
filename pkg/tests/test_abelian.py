import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import invariant_factors_by_minors
from schreierkit.abelian import (
    AbelianInvariants,
    IntMatrix,
    abelian_invariants,
    relation_matrix,
    smith_normal_form,
)
from schreierkit.errors import InvalidArgument
from schreierkit.presentation import Presentation, twin_group
from schreierkit.rschreier import derived_subgroup_presentation
from schreierkit.twin import theorem1_presentation


def test_relation_matrix_examples():
    assert relation_matrix(twin_group(3)).to_rows() == [[2, 0], [0, 2]]
    assert relation_matrix(Presentation(("a", "b"), ((1, 2, -1, -2),))).to_rows() == [[0, 0]]
    m = relation_matrix(theorem1_presentation(3))
    assert (m.rows, m.cols) == (1, 6)


def test_snf_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 2]])) == [2, 2]
    rows = [[1, 2], [3, 4]]
    assert invariant_factors_by_minors(rows) == [1, 2]
    assert smith_normal_form(IntMatrix.from_rows(rows)) == [1, 2]
    assert smith_normal_form(IntMatrix.from_rows([[0, 0, 0]])) == [0]
    assert abelian_invariants(Presentation(("a", "b", "c"), ((1, -1),))) == AbelianInvariants(3, ())


def test_int_matrix_shape():
    with pytest.raises(InvalidArgument):
        IntMatrix(2, 2, (1, 2, 3))


def test_abelian_invariants_examples():
    assert abelian_invariants(twin_group(4)) == AbelianInvariants(0, (2, 2, 2))
    assert abelian_invariants(derived_subgroup_presentation(twin_group(6))) == AbelianInvariants(7, ())
    assert abelian_invariants(Presentation(("a",))) == AbelianInvariants(1, ())


def test_mixed_torsion():
    # Z/4 + Z/6 = Z/2 + Z/12
    p = Presentation(("a", "b"), ((1,) * 4, (2,) * 6))
    assert abelian_invariants(p) == AbelianInvariants(0, (2, 12))


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_minor_oracle(rows):
    assert smith_normal_form(IntMatrix.from_rows(rows)) == invariant_factors_by_minors(rows)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_divisibility_chain(rows):
    d = smith_normal_form(IntMatrix.from_rows(rows))
    nz = [x for x in d if x]
    assert d == nz + [0] * (len(d) - len(nz))
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(x > 0 for x in nz)
