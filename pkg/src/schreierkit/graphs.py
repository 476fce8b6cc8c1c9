"""Chordality and induced squares of commutation graphs.

For a right-angled Coxeter group W with commutation graph G:

* W' is free iff G is chordal (Panov-Veryovkin);
* W is word-hyperbolic iff G has no induced 4-cycle (Moussong);
* W is virtually free iff it contains no surface group (Gordon-Long-Reid).

The last two are reported as derived flags, not proved here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .presentation import CommutationGraph, Presentation, as_racg


def lex_bfs(g: CommutationGraph) -> List[int]:
    """Lexicographic breadth-first order by partition refinement (ties: smallest vertex)."""
    nbrs = g.neighbors()
    parts = [set(range(1, g.n_vertices + 1))] if g.n_vertices else []
    order = []
    while parts:
        v = min(parts[0])
        parts[0].discard(v)
        order.append(v)
        refined = []
        for part in parts:
            inside = part & nbrs[v]
            outside = part - nbrs[v]
            refined.extend(s for s in (inside, outside) if s)
        parts = refined
    return order


def is_perfect_elimination_order(g: CommutationGraph, order: List[int]) -> bool:
    nbrs = g.neighbors()
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in nbrs[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(u != parent and u not in nbrs[parent] for u in later):
            return False
    return True


def canonical_cycle(cycle: List[int]) -> Tuple[int, ...]:
    """Rotate to start at the least vertex, then traverse towards its smaller neighbour."""
    i = cycle.index(min(cycle))
    c = cycle[i:] + cycle[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def is_chordless_cycle(g: CommutationGraph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a, b in combinations(range(k), 2):
        consecutive = b - a == 1 or (a == 0 and b == k - 1)
        if g.adjacent(cycle[a], cycle[b]) != consecutive:
            return False
    return True


def find_chordless_cycle(g: CommutationGraph) -> Optional[Tuple[int, ...]]:
    """A chordless cycle of length >= 4, or None if the graph is chordal.

    For a vertex v with non-adjacent neighbours a, b, a shortest a-b path
    avoiding the rest of N[v] closes up into a chordless cycle through v; every
    chordless cycle arises this way.
    """
    nbrs = g.neighbors()
    for v in range(1, g.n_vertices + 1):
        for a, b in combinations(sorted(nbrs[v]), 2):
            if b in nbrs[a]:
                continue
            banned = (nbrs[v] | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in sorted(nbrs[x]):
                    if y not in prev and y not in banned:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = [b]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                cycle = canonical_cycle([v] + path[::-1])
                assert is_chordless_cycle(g, cycle)
                return cycle
    return None


def is_chordal(g: CommutationGraph) -> Tuple[bool, Tuple[int, ...]]:
    """``(True, perfect elimination order)`` or ``(False, chordless cycle)``."""
    peo = lex_bfs(g)[::-1]
    if is_perfect_elimination_order(g, peo):
        return True, tuple(peo)
    cycle = find_chordless_cycle(g)
    assert cycle is not None
    return False, cycle


def has_induced_square(g: CommutationGraph) -> Optional[Tuple[int, ...]]:
    for quad in combinations(range(1, g.n_vertices + 1), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if is_chordless_cycle(g, cyc):
                return canonical_cycle(list(cyc))
    return None


def coxeter_graph(p: Presentation) -> CommutationGraph:
    return as_racg(p)


def commutator_free(p: Presentation) -> bool:
    """Whether the commutator subgroup of the RACG ``p`` is free."""
    return is_chordal(as_racg(p))[0]


@dataclass(frozen=True)
class StructureReport:
    chordal: bool
    chordless_cycle_witness: Optional[Tuple[int, ...]]
    perfect_elimination_order: Optional[Tuple[int, ...]]
    commutator_free: bool
    hyperbolic: bool
    contains_surface_group: bool
    virtually_free: bool
    induced_square: Optional[Tuple[int, ...]] = None
    criterion: str = "racg-graph"

    def to_dict(self) -> dict:
        def lst(x):
            return None if x is None else list(x)

        return {
            "chordal": self.chordal,
            "chordless_cycle_witness": lst(self.chordless_cycle_witness),
            "perfect_elimination_order": lst(self.perfect_elimination_order),
            "commutator_free": self.commutator_free,
            "hyperbolic": self.hyperbolic,
            "induced_square": lst(self.induced_square),
            "contains_surface_group": self.contains_surface_group,
            "virtually_free": self.virtually_free,
            "criterion": self.criterion,
            "notes": {
                "commutator_free": "commutator subgroup free iff the commutation graph is chordal (Panov-Veryovkin)",
                "hyperbolic": "no induced 4-cycle in the commutation graph (Moussong), cited not proved",
                "contains_surface_group": "negation of virtually_free (Gordon-Long-Reid), cited not proved",
            },
        }


def structure_report(p: Presentation) -> StructureReport:
    g = as_racg(p)
    chordal, witness = is_chordal(g)
    square = has_induced_square(g)
    return StructureReport(
        chordal=chordal,
        chordless_cycle_witness=None if chordal else witness,
        perfect_elimination_order=witness if chordal else None,
        commutator_free=chordal,
        hyperbolic=square is None,
        contains_surface_group=not chordal,
        virtually_free=chordal,
        induced_square=square,
    )
