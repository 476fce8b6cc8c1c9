"""Tietze simplification by single-occurrence generator elimination."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .errors import InvalidArgument, NotEliminable
from .presentation import Presentation
from .words import Word, cyclic_key, cyclic_reduce, format_word, invert

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplificationBudget:
    max_passes: int = 100_000
    max_relator_length: int = 1_000

    def __post_init__(self):
        if self.max_passes < 1 or self.max_relator_length < 1:
            raise InvalidArgument("budget limits must be >= 1")


@dataclass(frozen=True)
class Elimination:
    """Generator ``name`` was replaced by ``value`` (a word in the generators of that moment)."""

    name: str
    value: str


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    exhausted: bool = False
    eliminations: Tuple[Elimination, ...] = field(default=())


def solve_for(r: Word, gen: int) -> Word:
    """Given a relator with exactly one occurrence of ``gen``, return ``w`` with ``gen = w``."""
    hits = [i for i, x in enumerate(r) if abs(x) == gen]
    if len(hits) != 1:
        raise NotEliminable(f"generator {gen} occurs {len(hits)} times in {format_word(r)}")
    i = hits[0]
    rest = r[i + 1:] + r[:i]
    # gen * rest = 1  =>  gen = rest^-1 ;  gen^-1 * rest = 1  =>  gen = rest
    return invert(rest) if r[i] > 0 else rest


def substitute(w: Word, gen: int, value: Word) -> Word:
    out = []
    inv = None
    for x in w:
        if x == gen:
            out.extend(value)
        elif x == -gen:
            if inv is None:
                inv = invert(value)
            out.extend(inv)
        else:
            out.append(x)
    return cyclic_reduce(out)


def _renumber(w: Word, gen: int) -> Word:
    return tuple(x - 1 if x > gen else x + 1 if x < -gen else x for x in w)


def eliminate(p: Presentation, gen: int, relator: int) -> Presentation:
    """Remove generator ``gen`` (1-based) using relator number ``relator`` (0-based)."""
    if not 1 <= gen <= p.n_generators:
        raise InvalidArgument(f"no generator {gen}")
    if not 0 <= relator < len(p.relators):
        raise InvalidArgument(f"no relator {relator}")
    value = solve_for(p.relators[relator], gen)
    rels = []
    for i, r in enumerate(p.relators):
        if i != relator:
            rels.append(_renumber(substitute(r, gen, value), gen))
    names = p.generator_names[:gen - 1] + p.generator_names[gen:]
    return Presentation(names, tuple(rels))


def remove_redundant(p: Presentation) -> Presentation:
    """Drop empty relators and repeats up to cyclic rotation and inversion."""
    seen = set()
    rels = []
    for r in p.relators:
        key = cyclic_key(r)
        if key and key not in seen:
            seen.add(key)
            rels.append(cyclic_reduce(r))
    return Presentation(p.generator_names, tuple(rels))


class _State:
    """Mutable working copy: relators by stable id, generators by original number."""

    def __init__(self, p: Presentation):
        self.names = p.generator_names
        self.alive = set(range(1, p.n_generators + 1))
        self.rels: Dict[int, Word] = {}
        self.keys: Dict[Word, int] = {}
        self.occ: Dict[int, set] = {g: set() for g in self.alive}
        for i, r in enumerate(p.relators):
            self._add(i, cyclic_reduce(r))

    def _add(self, rid: int, r: Word) -> None:
        if not r:
            return
        key = cyclic_key(r)
        other = self.keys.get(key)
        if other is not None:
            if other < rid:
                return
            self._drop(other)
        self.keys[key] = rid
        self.rels[rid] = r
        for x in r:
            self.occ[abs(x)].add(rid)

    def _drop(self, rid: int) -> None:
        r = self.rels.pop(rid)
        key = cyclic_key(r)
        if self.keys.get(key) == rid:
            del self.keys[key]
        for x in r:
            self.occ[abs(x)].discard(rid)

    def candidates(self):
        for rid in sorted(self.rels, key=lambda i: (len(self.rels[i]), i)):
            r = self.rels[rid]
            counts: Dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g in sorted(g for g, c in counts.items() if c == 1):
                yield rid, g

    def try_eliminate(self, rid: int, gen: int, max_len: int) -> Optional[Word]:
        value = solve_for(self.rels[rid], gen)
        targets = sorted(self.occ[gen] - {rid})
        new = {t: substitute(self.rels[t], gen, value) for t in targets}
        if any(len(w) > max_len for w in new.values()):
            return None
        self._drop(rid)
        for t in targets:
            self._drop(t)
        for t in targets:
            self._add(t, new[t])
        self.alive.discard(gen)
        del self.occ[gen]
        return value

    def presentation(self) -> Presentation:
        order = sorted(self.alive)
        num = {g: i for i, g in enumerate(order, start=1)}
        rels = tuple(
            tuple(num[x] if x > 0 else -num[-x] for x in self.rels[rid]) for rid in sorted(self.rels)
        )
        return Presentation(tuple(self.names[g - 1] for g in order), rels)

    def spell(self, w: Word) -> str:
        if not w:
            return "1"
        return " ".join(self.names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w)


def simplify(
    p: Presentation,
    budget: SimplificationBudget = SimplificationBudget(),
    on_step: Optional[Callable[[Presentation], None]] = None,
) -> SimplifyResult:
    """Eliminate generators until no relator has a generator occurring exactly once.

    Each pass reduces and deduplicates relators, then eliminates the generator
    occurring once in the shortest eligible relator (ties: lowest relator
    position, then lowest generator).  Substitutions that would exceed
    ``budget.max_relator_length`` are skipped.  ``on_step`` sees the presentation
    after every elimination.
    """
    st = _State(p)
    done: List[Elimination] = []
    for _ in range(budget.max_passes):
        for rid, gen in st.candidates():
            name = st.names[gen - 1]
            value = st.try_eliminate(rid, gen, budget.max_relator_length)
            if value is not None:
                done.append(Elimination(name, st.spell(value)))
                log.debug("eliminated %s = %s", name, done[-1].value)
                if on_step is not None:
                    on_step(st.presentation())
                break
        else:
            return SimplifyResult(st.presentation(), False, tuple(done))
    exhausted = next(iter(st.candidates()), None) is not None
    return SimplifyResult(st.presentation(), exhausted, tuple(done))
