import pytest
from hypothesis import given, settings, strategies as st

from schreierkit.abelian import abelian_invariants
from schreierkit.errors import InvalidArgument, NotEliminable
from schreierkit.presentation import Presentation, twin_group
from schreierkit.rschreier import derived_subgroup_presentation
from schreierkit.tietze import (
    SimplificationBudget,
    eliminate,
    remove_redundant,
    simplify,
    solve_for,
)
from schreierkit.words import cyclic_key

A, B = 1, 2


def test_eliminate_examples():
    q = eliminate(Presentation(("a", "b"), ((A, B),)), B, 0)
    assert q == Presentation(("a",), ())
    p = Presentation(("a", "b"), ((A, B, A),))
    assert solve_for(p.relators[0], B) == (-A, -A)
    assert eliminate(p, B, 0) == Presentation(("a",), ())


def test_eliminate_alpha_by_beta_inverse():
    # alpha * beta = 1 turns alpha into beta^-1 everywhere else
    p = Presentation(("alpha", "beta", "x"), ((1, 2), (1, 3, -1, -3)))
    q = eliminate(p, 1, 0)
    assert q.generator_names == ("beta", "x")
    assert q.relators == ((-1, 2, 1, -2),)


def test_eliminate_errors():
    p = Presentation(("a", "b"), ((A, A, B),))
    with pytest.raises(NotEliminable):
        eliminate(p, A, 0)
    with pytest.raises(NotEliminable):
        eliminate(Presentation(("a", "b"), ((A,),)), B, 0)
    with pytest.raises(InvalidArgument):
        eliminate(p, 3, 0)


def test_remove_redundant_examples():
    x, y = A, B
    p = Presentation(("x", "y"), ((x, y, x, y), (y, x, y, x)))
    assert len(remove_redundant(p).relators) == 1
    p = Presentation(("x", "y"), ((x, y, y), (-y, -y, -x)))
    assert len(remove_redundant(p).relators) == 1
    assert remove_redundant(Presentation(("x",), ((),))).relators == ()


@pytest.mark.parametrize("n, gens", [(4, 3), (5, 5)])
def test_simplify_small_twin(n, gens):
    res = simplify(derived_subgroup_presentation(twin_group(n)))
    assert (res.presentation.n_generators, len(res.presentation.relators)) == (gens, 0)
    assert not res.exhausted


def test_simplify_fixed_point():
    p = Presentation(("a",))
    assert simplify(p).presentation == p


def test_simplify_budget_flag():
    p = derived_subgroup_presentation(twin_group(5))
    res = simplify(p, SimplificationBudget(max_passes=3))
    assert res.exhausted
    assert len(res.eliminations) == 3
    assert abelian_invariants(res.presentation) == abelian_invariants(p)


def test_length_cap_blocks_growth():
    # b occurs once in a long relator; substituting it would create long words
    p = Presentation(("a", "b", "c"), ((2, 1, 1, 1, 1, 1), (2, 3, 2, 3, 2, 3, 2, 3)))
    capped = simplify(p, SimplificationBudget(max_relator_length=10)).presentation
    assert capped.n_generators == 3
    free = simplify(p, SimplificationBudget(max_relator_length=100)).presentation
    assert free.n_generators == 2


def test_simplify_deterministic():
    p = derived_subgroup_presentation(twin_group(6))
    assert simplify(p) == simplify(p)


def test_budget_validation():
    with pytest.raises(InvalidArgument):
        SimplificationBudget(max_passes=0)


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 4, -4]), min_size=1, max_size=7).map(tuple)
presentations = st.lists(words, min_size=1, max_size=5).map(
    lambda rels: Presentation(("a", "b", "c", "d"), tuple(rels))
)


@settings(max_examples=150, deadline=None)
@given(presentations)
def test_eliminate_preserves_abelian_invariants(p):
    for ri, r in enumerate(p.relators):
        for g in range(1, 5):
            if sum(abs(x) == g for x in r) == 1:
                q = eliminate(p, g, ri)
                assert abelian_invariants(q) == abelian_invariants(p)
                return


@settings(max_examples=150, deadline=None)
@given(presentations)
def test_simplify_preserves_abelian_invariants_stepwise(p):
    before = abelian_invariants(p)
    steps = []
    res = simplify(p, on_step=lambda q: steps.append(abelian_invariants(q)))
    assert all(s == before for s in steps)
    assert abelian_invariants(res.presentation) == before
    assert len(set(cyclic_key(r) for r in res.presentation.relators)) == len(res.presentation.relators)
