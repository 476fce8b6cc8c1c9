"""Reidemeister-Schreier for kernels of the exponent-parity map.

For a presentation on ``k`` generators whose relators have even exponent sum
in every generator, the map ``g_i -> e_i`` onto ``(Z/2)^k`` is well defined.
Its kernel is the commutator subgroup whenever the abelianization is
``(Z/2)^k``, e.g. for every right-angled Coxeter group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import IndexTooLarge, NotInSubgroup, QuotientIllDefined
from .presentation import Presentation
from .words import Word, cyclic_key, cyclic_reduce, exponent_sums, format_word, free_reduce, invert

DEFAULT_MAX_INDEX = 1024


@dataclass(frozen=True)
class CosetTable:
    """Coset action of the parity quotient with a Schreier transversal.

    ``action[c][a - 1]`` is the coset reached from ``c`` by generator ``a``;
    ``parity[c]`` is the bitmask of the coset (bit ``a - 1`` for generator ``a``).
    Coset 0 is the subgroup itself and ``transversal[0]`` is the empty word.
    """

    n_generators: int
    action: Tuple[Tuple[int, ...], ...]
    transversal: Tuple[Word, ...]
    parity: Tuple[int, ...]

    @property
    def n_cosets(self) -> int:
        return len(self.transversal)

    def act(self, c: int, x: int) -> int:
        # every generator acts as an involution, so the sign is irrelevant
        return self.action[c][abs(x) - 1]

    def coset_of(self, w: Sequence[int], start: int = 0) -> int:
        c = start
        for x in w:
            c = self.action[c][abs(x) - 1]
        return c


@dataclass(frozen=True)
class SchreierGenerator:
    coset: int
    gen: int
    word: Word

    @property
    def name(self) -> str:
        return f"S_{self.coset}_{self.gen}"


def mod2_coset_table(p: Presentation, max_index: int = DEFAULT_MAX_INDEX) -> CosetTable:
    k = p.n_generators
    for r in p.relators:
        if any(s % 2 for s in exponent_sums(r, k)):
            raise QuotientIllDefined(f"relator {format_word(r)} has odd exponent sum in some generator")
    if 2 ** k > max_index:
        raise IndexTooLarge(f"index 2^{k} exceeds max_index={max_index}")

    # BFS from the identity, generators in ascending order: the transversal of
    # the parity set {i1 < ... < is} comes out as g_i1 g_i2 ... g_is.
    coset_of_parity = {0: 0}
    parity = [0]
    transversal: List[Word] = [()]
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for a in range(1, k + 1):
            q = parity[c] ^ (1 << (a - 1))
            if q not in coset_of_parity:
                coset_of_parity[q] = len(parity)
                parity.append(q)
                transversal.append(transversal[c] + (a,))
                queue.append(coset_of_parity[q])
    action = tuple(
        tuple(coset_of_parity[parity[c] ^ (1 << (a - 1))] for a in range(1, k + 1))
        for c in range(len(parity))
    )
    return CosetTable(k, action, tuple(transversal), tuple(parity))


def schreier_word(t: CosetTable, coset: int, gen: int) -> Word:
    """``(lambda a)(overline{lambda a})^-1``, freely reduced."""
    target = t.act(coset, gen)
    return free_reduce(t.transversal[coset] + (gen,) + invert(t.transversal[target]))


def schreier_generators(t: CosetTable) -> List[SchreierGenerator]:
    """Freely nontrivial Schreier generators, ordered by (coset, generator)."""
    out = []
    for c in range(t.n_cosets):
        for a in range(1, t.n_generators + 1):
            w = schreier_word(t, c, a)
            if w:
                out.append(SchreierGenerator(c, a, w))
    return out


def symbol_index(gens: Sequence[SchreierGenerator]) -> Dict[Tuple[int, int], int]:
    """Map ``(coset, gen)`` to the 1-based symbol number of a retained generator."""
    return {(s.coset, s.gen): i for i, s in enumerate(gens, start=1)}


def rewrite(
    t: CosetTable,
    gens: Sequence[SchreierGenerator],
    w: Sequence[int],
    start: int = 0,
    index: Optional[Dict[Tuple[int, int], int]] = None,
) -> Word:
    """Rewrite a kernel element as a word in the Schreier symbols.

    With ``start = c`` the result is the rewrite of ``transversal[c] w transversal[c]^-1``;
    the transversal parts contribute only freely trivial symbols.
    """
    if index is None:
        index = symbol_index(gens)
    c = start
    out = []
    for x in w:
        a = abs(x)
        if x > 0:
            s = index.get((c, a))
            c = t.action[c][a - 1]
            if s is not None:
                out.append(s)
        else:
            c = t.action[c][a - 1]
            s = index.get((c, a))
            if s is not None:
                out.append(-s)
    if c != start:
        raise NotInSubgroup(f"word {format_word(w)} does not lie in the subgroup")
    return tuple(out)


def expand(gens: Sequence[SchreierGenerator], w: Sequence[int]) -> Word:
    """Substitute Schreier words for symbols and freely reduce."""
    out = []
    for x in w:
        sw = gens[abs(x) - 1].word
        out.extend(sw if x > 0 else invert(sw))
    return free_reduce(out)


def derived_subgroup_presentation(p: Presentation, max_index: int = DEFAULT_MAX_INDEX) -> Presentation:
    """Presentation of the parity kernel (the commutator subgroup for RACGs).

    Relators are the rewrites of every relator conjugated by every transversal
    element, cyclically reduced and deduplicated up to rotation and inversion,
    in (relator, coset) order.
    """
    t = mod2_coset_table(p, max_index)
    gens = schreier_generators(t)
    index = symbol_index(gens)
    seen = set()
    rels = []
    for r in p.relators:
        for c in range(t.n_cosets):
            rw = cyclic_reduce(rewrite(t, gens, r, start=c, index=index))
            if not rw:
                continue
            key = cyclic_key(rw)
            if key not in seen:
                seen.add(key)
                rels.append(rw)
    return Presentation(tuple(s.name for s in gens), tuple(rels))
