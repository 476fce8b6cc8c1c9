"""Finitely presented groups, the twin-group family, and RACG structure."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, Sequence, Tuple

from .errors import InvalidArgument, NotRACG, ParseError
from .words import Word, check_alphabet, cyclic_reduce, format_word


@dataclass(frozen=True)
class Presentation:
    """Generators (by display name) and relators over signed 1-based letters.

    Relators are cyclically reduced on construction; duplicates are kept
    (see :func:`schreierkit.tietze.remove_redundant`).
    """

    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        if any(not isinstance(g, str) or not g for g in names):
            raise InvalidArgument("generator names must be nonempty strings")
        if len(set(names)) != len(names):
            raise InvalidArgument("generator names must be unique")
        rels = tuple(cyclic_reduce(r) for r in self.relators)
        for r in rels:
            check_alphabet(r, len(names))
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", rels)

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)

    def to_dict(self) -> dict:
        return {"generators": list(self.generator_names), "relators": [list(r) for r in self.relators]}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, doc) -> "Presentation":
        if not isinstance(doc, dict):
            raise ParseError("presentation document must be a JSON object")
        for key in ("generators", "relators"):
            if key not in doc:
                raise ParseError(f"missing field {key!r}")
        gens = doc["generators"]
        if not isinstance(gens, list):
            raise ParseError("field 'generators' must be a list")
        for i, g in enumerate(gens):
            if not isinstance(g, str) or not g:
                raise ParseError(f"field 'generators[{i}]' must be a nonempty string")
        if len(set(gens)) != len(gens):
            raise ParseError("field 'generators' has duplicate names")
        rels = doc["relators"]
        if not isinstance(rels, list):
            raise ParseError("field 'relators' must be a list")
        out = []
        for i, r in enumerate(rels):
            if not isinstance(r, list):
                raise ParseError(f"field 'relators[{i}]' must be a list of signed indices")
            for k, x in enumerate(r):
                if isinstance(x, bool) or not isinstance(x, int) or x == 0 or abs(x) > len(gens):
                    raise ParseError(f"field 'relators[{i}][{k}]' = {x!r} is not a letter over {len(gens)} generators")
            out.append(tuple(r))
        return cls(tuple(gens), tuple(out))

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        return cls.from_dict(doc)

    def describe(self) -> str:
        lines = [f"< {', '.join(self.generator_names)} |"]
        for r in self.relators:
            lines.append("    " + format_word(r, self.generator_names))
        lines.append(">")
        return "\n".join(lines)


@dataclass(frozen=True)
class CommutationGraph:
    """Vertices 1..n_vertices; an edge joins two commuting generators."""

    n_vertices: int
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for i, j in self.edges:
            if i == j:
                raise InvalidArgument(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n_vertices and 1 <= j <= self.n_vertices):
                raise InvalidArgument(f"edge ({i}, {j}) outside 1..{self.n_vertices}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self) -> dict:
        nbrs = {v: set() for v in range(1, self.n_vertices + 1)}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "CommutationGraph":
        return cls(n, frozenset(tuple(e) for e in edges))


def twin_group(n: int) -> Presentation:
    """The twin group on ``n`` arcs, as a right-angled Coxeter presentation."""
    if n < 2:
        raise InvalidArgument(f"twin_group needs n >= 2, got {n}")
    k = n - 1
    rels = [(i, i) for i in range(1, k + 1)]
    rels += [(i, j, i, j) for i, j in combinations(range(1, k + 1), 2) if j - i > 1]
    return Presentation(tuple(f"t{i}" for i in range(1, k + 1)), tuple(rels))


def cartographical_group(m: int) -> Presentation:
    if m < 1:
        raise InvalidArgument(f"cartographical_group needs m >= 1, got {m}")
    return twin_group(m + 2)


def racg_presentation(graph: CommutationGraph) -> Presentation:
    n = graph.n_vertices
    rels = [(i, i) for i in range(1, n + 1)]
    rels += [(i, j, i, j) for i, j in sorted(graph.edges)]
    return Presentation(tuple(f"s{i}" for i in range(1, n + 1)), tuple(rels))


def as_racg(p: Presentation) -> CommutationGraph:
    """Read off the commutation graph of a RACG presentation.

    Relators may be written with inverse letters (``g^-2``, ``[g, h]``): once every
    generator has a square relator, signs do not matter.
    """
    squares = set()
    edges = set()
    for r in p.relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        gens = [abs(x) for x in r]
        if len(gens) == 2 and gens[0] == gens[1]:
            squares.add(gens[0])
            continue
        if len(gens) == 4 and gens[0] == gens[2] and gens[1] == gens[3] and gens[0] != gens[1]:
            edges.add((min(gens[0], gens[1]), max(gens[0], gens[1])))
            continue
        raise NotRACG(f"relator {format_word(r)} is neither a square nor a commutation", relator=r)
    missing = set(range(1, p.n_generators + 1)) - squares
    if missing:
        g = min(missing)
        raise NotRACG(f"generator {p.generator_names[g - 1]} has no square relator")
    return CommutationGraph(p.n_generators, frozenset(edges))
