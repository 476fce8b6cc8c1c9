import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from schreierkit.errors import InvalidArgument
from schreierkit.presentation import CommutationGraph, twin_group
from schreierkit.racg import (
    RacgContext,
    is_identity,
    is_identity_matrix,
    normal_form,
    tits_matrix,
)
from schreierkit.words import conjugate


def ctx_twin(n):
    return RacgContext.from_presentation(twin_group(n))


def test_normal_form_examples():
    assert normal_form(ctx_twin(5), (1, 3, 1, 3)) == ()
    assert normal_form(ctx_twin(3), (1, 1)) == ()
    w = (1, 2, 1, 2)
    nf = normal_form(ctx_twin(3), w)
    assert len(nf) == 4
    assert tits_matrix(ctx_twin(3), nf) == tits_matrix(ctx_twin(3), w)


def test_tw3_square_has_no_shorter_representative():
    # exhaustive over words of length <= 3 with the reflection representation
    ctx = ctx_twin(3)
    target = tits_matrix(ctx, (1, 2, 1, 2))
    for k in range(4):
        for w in product((1, 2), repeat=k):
            assert tits_matrix(ctx, w) != target


def test_is_identity_examples():
    assert is_identity(ctx_twin(4), ())
    assert not is_identity(ctx_twin(3), (1, 2))
    assert not is_identity_matrix(tits_matrix(ctx_twin(3), (1, 2)))


def test_tits_matrix_examples():
    ctx = ctx_twin(3)
    assert tits_matrix(ctx, ()) == ((1, 0), (0, 1))
    assert tits_matrix(ctx, (1,)) == ((-1, 2), (0, 1))
    m = tits_matrix(ctx, (1, 2, 1, 2))
    s1 = [[-1, 2], [0, 1]]
    s2 = [[1, 0], [2, -1]]

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]

    expected = mul(mul(mul(s1, s2), s1), s2)
    assert m == tuple(map(tuple, expected))
    assert not is_identity_matrix(m)


def test_inverse_letters_are_involutions():
    ctx = ctx_twin(4)
    assert normal_form(ctx, (-1, 2, -3)) == normal_form(ctx, (1, 2, 3))


def test_out_of_range_letter():
    with pytest.raises(InvalidArgument):
        normal_form(ctx_twin(3), (3,))


def test_canonical_is_lex_least():
    # 1 and 3 commute in TW5: both spellings give the lexicographically least one
    ctx = ctx_twin(5)
    assert normal_form(ctx, (3, 1)) == (1, 3)
    assert normal_form(ctx, (3, 2, 1)) == (3, 2, 1)


@st.composite
def graph_and_word(draw, max_len=20):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = CommutationGraph.from_edges(n, [p for p, b in zip(pairs, mask) if b])
    w = tuple(draw(st.lists(st.integers(1, n), max_size=max_len)))
    return RacgContext(g), w


@settings(max_examples=300)
@given(graph_and_word())
def test_engines_agree(cw):
    ctx, w = cw
    assert is_identity(ctx, w) == is_identity_matrix(tits_matrix(ctx, w))


@settings(max_examples=200)
@given(graph_and_word())
def test_normal_form_properties(cw):
    ctx, w = cw
    nf = normal_form(ctx, w)
    assert normal_form(ctx, nf) == nf
    assert len(nf) <= len(w)
    assert tits_matrix(ctx, nf) == tits_matrix(ctx, w)
    for s in range(1, ctx.rank + 1):
        assert is_identity(ctx, (s, s))
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if ctx.commute(a, b):
            swapped = w[:i] + (b, a) + w[i + 2:]
            assert normal_form(ctx, swapped) == nf


@settings(max_examples=200)
@given(graph_and_word(max_len=8), st.data())
def test_conjugation_preserves_identity(cw, data):
    ctx, w = cw
    u = tuple(data.draw(st.lists(st.integers(1, ctx.rank), max_size=6)))
    rel = w + w[::-1]  # w * w^-1 with involutive letters
    assert is_identity(ctx, rel)
    assert is_identity(ctx, conjugate(rel, u))


def test_canonical_form_separates_elements():
    # distinct normal forms <=> distinct matrices, on all short words of TW5
    ctx = ctx_twin(5)
    by_nf = {}
    for k in range(6):
        for w in product(range(1, 5), repeat=k):
            by_nf.setdefault(normal_form(ctx, w), set()).add(tits_matrix(ctx, w))
    assert all(len(ms) == 1 for ms in by_nf.values())
    mats = [next(iter(ms)) for ms in by_nf.values()]
    assert len(set(mats)) == len(mats)


def _commutation_class(ctx, w):
    seen = {w}
    stack = [w]
    while stack:
        u = stack.pop()
        for i in range(len(u) - 1):
            if u[i] != u[i + 1] and ctx.commute(u[i], u[i + 1]):
                v = u[:i] + (u[i + 1], u[i]) + u[i + 2:]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return seen


@settings(max_examples=200)
@given(graph_and_word(max_len=10))
def test_normal_form_is_least_in_commutation_class(cw):
    ctx, w = cw
    nf = normal_form(ctx, w)
    assert nf == min(_commutation_class(ctx, nf))
