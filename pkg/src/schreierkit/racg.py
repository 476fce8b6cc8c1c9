"""Word problem in right-angled Coxeter groups.

Two independent engines:

* :func:`normal_form` -- Tits-style cancellation (a letter cancels against an
  earlier copy of itself when everything in between commutes with it),
  followed by the lexicographically least rearrangement under commutations.
* :func:`tits_matrix` -- the integer reflection representation, which is
  faithful, so a word is trivial iff its matrix is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Tuple

from .errors import InvalidArgument
from .presentation import CommutationGraph, Presentation, as_racg
from .words import Word

ReflectionMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class RacgContext:
    graph: CommutationGraph
    _nbrs: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_nbrs", {v: frozenset(s) for v, s in self.graph.neighbors().items()})

    @classmethod
    def from_presentation(cls, p: Presentation) -> "RacgContext":
        return cls(as_racg(p))

    @property
    def rank(self) -> int:
        return self.graph.n_vertices

    def commute(self, a: int, b: int) -> bool:
        return b in self._nbrs[a]

    def bilinear(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return 0 if self.commute(i, j) else -1

    def positive(self, w: Sequence[int]) -> list:
        """Drop signs (generators are involutions) and range-check."""
        n = self.rank
        out = []
        for x in w:
            g = abs(x)
            if x == 0 or g > n:
                raise InvalidArgument(f"letter {x} out of range for {n} generators")
            out.append(g)
        return out


def reduce_word(ctx: RacgContext, w: Sequence[int]) -> list:
    """Return a geodesic word for ``w`` (not yet canonical)."""
    out = []
    for s in ctx.positive(w):
        for i in range(len(out) - 1, -1, -1):
            t = out[i]
            if t == s:
                del out[i]
                break
            if not ctx.commute(s, t):
                out.append(s)
                break
        else:
            out.append(s)
    return out


def _lex_least(ctx: RacgContext, w: list) -> Word:
    # Greedy: repeatedly emit the smallest letter that can be commuted to the front.
    rest = list(w)
    out = []
    while rest:
        best = None
        for i, s in enumerate(rest):
            if best is not None and s >= rest[best]:
                continue
            if all(ctx.commute(s, rest[k]) for k in range(i)):
                best = i
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(ctx: RacgContext, w: Sequence[int]) -> Word:
    """Canonical geodesic representative: equal outputs iff equal group elements."""
    return _lex_least(ctx, reduce_word(ctx, w))


def is_identity(ctx: RacgContext, w: Sequence[int]) -> bool:
    return not reduce_word(ctx, w)


def tits_matrix(ctx: RacgContext, w: Sequence[int]) -> ReflectionMatrix:
    """Product of reflection matrices in word order (exact integers)."""
    n = ctx.rank
    letters = ctx.positive(w)
    b = [[ctx.bilinear(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for s in letters:
        s -= 1
        col = [row[s] for row in m]
        coeffs = [2 * b[s][j] for j in range(n)]
        for row, c in zip(m, col):
            if c:
                for j, k in enumerate(coeffs):
                    if k:
                        row[j] -= k * c
    return tuple(tuple(row) for row in m)


def is_identity_matrix(m: ReflectionMatrix) -> bool:
    return all(v == (i == j) for i, row in enumerate(m) for j, v in enumerate(row))


def tits_is_identity(ctx: RacgContext, w: Sequence[int]) -> bool:
    return is_identity_matrix(tits_matrix(ctx, w))
