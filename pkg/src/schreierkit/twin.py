"""Named generators of the commutator subgroup of a twin group.

``beta(i1, ..., is; j)`` is the conjugate of ``t_{j+1} t_j t_{j+1} t_j`` by
``t_i1 ... t_is`` (ascending indices, all below ``j``).  Every such symbol
equals a normal form ``beta_p(j) = beta(j-p, ..., j-1; j)``.  The twin group
on ``m + 2`` arcs has commutator subgroup generated by the ``beta_p(j)`` with
``0 <= p < j <= m``, and by ``2m - 1`` of them after eliminating ``p >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .abelian import AbelianInvariants, abelian_invariants
from .errors import InvalidArgument
from .graphs import commutator_free
from .presentation import Presentation, twin_group
from .racg import RacgContext, is_identity, tits_is_identity
from .rschreier import derived_subgroup_presentation, schreier_generators, mod2_coset_table
from .tietze import SimplificationBudget, remove_redundant, simplify
from .words import Word, cyclic_reduce, free_reduce, invert


@dataclass(frozen=True)
class BetaSymbol:
    prefix: Tuple[int, ...]
    j: int

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if self.j < 1:
            raise InvalidArgument(f"top index must be >= 1, got {self.j}")
        if any(a >= b for a, b in zip(prefix, prefix[1:])):
            raise InvalidArgument(f"prefix {prefix} is not strictly increasing")
        if prefix and (prefix[0] < 1 or prefix[-1] >= self.j):
            raise InvalidArgument(f"prefix {prefix} must lie in 1..{self.j - 1}")
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def normal(cls, p: int, j: int) -> "BetaSymbol":
        if not 0 <= p < j:
            raise InvalidArgument(f"beta_{p}({j}) needs 0 <= p < j")
        return cls(tuple(range(j - p, j)), j)

    @property
    def normal_p(self) -> Optional[int]:
        p = len(self.prefix)
        return p if self.prefix == tuple(range(self.j - p, self.j)) else None

    @property
    def name(self) -> str:
        p = self.normal_p
        if p is not None:
            return f"beta_{p}({self.j})"
        return f"beta({','.join(map(str, self.prefix))};{self.j})"


def _conjugated_core(prefix: Tuple[int, ...], core: Word, j: int, n: int) -> Word:
    if j + 1 > n - 1:
        raise InvalidArgument(f"symbol with top index {j} needs n >= {j + 2}, got n={n}")
    return tuple(prefix) + core + tuple(reversed(prefix))


def beta_word(b: BetaSymbol, n: int) -> Word:
    """``t_i1 .. t_is (t_{j+1} t_j t_{j+1} t_j) t_is .. t_i1`` in the twin group on ``n`` arcs."""
    j = b.j
    return _conjugated_core(b.prefix, (j + 1, j, j + 1, j), j, n)


def alpha_word(b: BetaSymbol, n: int) -> Word:
    j = b.j
    return _conjugated_core(b.prefix, (j, j + 1, j, j + 1), j, n)


def beta_normal_form(b: BetaSymbol) -> BetaSymbol:
    """Delete prefix entries ``e`` with ``e + 1`` absent (and ``e <= j - 2``) until none remain.

    What survives is the longest run of consecutive integers ending at ``j - 1``.
    """
    prefix = list(b.prefix)
    while True:
        present = set(prefix) | {b.j}
        drop = [e for e in prefix if e + 1 not in present and e <= b.j - 2]
        if not drop:
            return BetaSymbol(tuple(prefix), b.j)
        prefix.remove(max(drop))


# --- Theorem presentation -------------------------------------------------


def theorem1_generators(m: int) -> List[Tuple[int, int]]:
    """``(p, j)`` pairs, ordered by ``j`` then ``p``."""
    return [(p, j) for j in range(1, m + 1) for p in range(j)]


def _theorem1_relations(m: int) -> Iterator[Tuple[str, Tuple[Tuple[int, int, int], ...]]]:
    """Yield (label, relator) with relator letters ``(p, j, sign)``.

    Index ranges are restricted to those naming actual generators
    (``0 <= p < j``); for ``m <= 3`` the commutation family is empty.
    """
    for j in range(1, m + 1):
        for t in range(j + 2, m + 1):
            for k in range(1, j + 1):
                x = (j - k, j)
                for l in range(3, t - j + 1):
                    y = (t - (j + l), t)
                    yield (
                        f"commute j={j} k={k} l={l} t={t}",
                        ((*x, 1), (*y, 1), (*x, -1), (*y, -1)),
                    )
            for k in range(1, j + 1):
                lhs = (t - k, t)
                c = (j - k, j)
                mid = (t - (j + 1), t)
                # lhs * (c^-1 mid c)^-1
                yield (
                    f"conjugate j={j} k={k} t={t}",
                    ((*lhs, 1), (*c, -1), (*mid, -1), (*c, 1)),
                )


def theorem1_presentation(m: int) -> Presentation:
    if m < 1:
        raise InvalidArgument(f"theorem1_presentation needs m >= 1, got {m}")
    gens = theorem1_generators(m)
    idx = {g: i for i, g in enumerate(gens, start=1)}
    rels = [tuple(idx[(p, j)] * s for p, j, s in rel) for _, rel in _theorem1_relations(m)]
    names = tuple(BetaSymbol.normal(p, j).name for p, j in gens)
    return remove_redundant(Presentation(names, tuple(rels)))


# --- Minimal presentation -------------------------------------------------


def minimal_generators(m: int) -> List[Tuple[int, int]]:
    return [(0, 1)] + [(p, j) for j in range(2, m + 1) for p in (0, 1)]


def minimal_substitution(m: int) -> Dict[Tuple[int, int], Word]:
    """Each ``beta_p(j)`` as a word in the minimal generators.

    For ``p >= 2``: ``beta_p(j) = C^-1 beta_1(j) C`` with
    ``C = beta_0(j-2) beta_0(j-3) ... beta_0(j-p)``.
    """
    idx = {g: i for i, g in enumerate(minimal_generators(m), start=1)}
    sub = {}
    for p, j in theorem1_generators(m):
        if p <= 1:
            sub[(p, j)] = (idx[(p, j)],)
        else:
            c = tuple(idx[(0, i)] for i in range(j - 2, j - p - 1, -1))
            sub[(p, j)] = free_reduce(invert(c) + (idx[(1, j)],) + c)
    return sub


def minimal_presentation(m: int) -> Presentation:
    if m < 1:
        raise InvalidArgument(f"minimal_presentation needs m >= 1, got {m}")
    sub = minimal_substitution(m)
    rels = []
    for _, rel in _theorem1_relations(m):
        w = []
        for p, j, s in rel:
            w.extend(sub[(p, j)] if s > 0 else invert(sub[(p, j)]))
        rels.append(cyclic_reduce(w))
    names = tuple(BetaSymbol.normal(p, j).name for p, j in minimal_generators(m))
    return remove_redundant(Presentation(names, tuple(rels)))


def expand_to_twin(w: Word, symbols: List[Tuple[int, int]], n: int) -> Word:
    """Replace each ``beta_p(j)`` letter by its word in the twin generators."""
    out = []
    for x in w:
        p, j = symbols[abs(x) - 1]
        bw = beta_word(BetaSymbol.normal(p, j), n)
        out.extend(bw if x > 0 else invert(bw))
    return tuple(out)


# --- Verification ---------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    m: int
    checks: Tuple[Check, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.m + 2,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "anchor": c.anchor, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def relators_valid(p: Presentation, symbols: List[Tuple[int, int]], n: int) -> Tuple[int, int, int]:
    """Count relators trivial in the twin group under each engine: (total, rewriting, matrix)."""
    ctx = RacgContext.from_presentation(twin_group(n))
    ok_rw = ok_mat = 0
    for r in p.relators:
        w = expand_to_twin(r, symbols, n)
        ok_rw += is_identity(ctx, w)
        ok_mat += tits_is_identity(ctx, w)
    return len(p.relators), ok_rw, ok_mat


def verify_paper_claims(m: int, budget: SimplificationBudget = SimplificationBudget()) -> VerificationReport:
    if m < 1:
        raise InvalidArgument(f"verify needs m >= 1, got {m}")
    n = m + 2
    checks = []
    expected = AbelianInvariants(2 * m - 1, ())

    def add(name, anchor, passed, detail=""):
        checks.append(Check(name, anchor, bool(passed), detail))

    thm = theorem1_presentation(m)
    mini = minimal_presentation(m)
    tw = twin_group(n)

    add("theorem1-generator-count", "theorem:presentation",
        thm.n_generators == m * (m + 1) // 2, f"{thm.n_generators} generators")
    add("minimal-generator-count", "lemma:2n-5-generators",
        mini.n_generators == 2 * m - 1, f"{mini.n_generators} generators")

    for label, pres, syms in (("theorem1", thm, theorem1_generators(m)), ("minimal", mini, minimal_generators(m))):
        total, ok_rw, ok_mat = relators_valid(pres, syms, n)
        add(f"{label}-relators-valid", "theorem:presentation",
            ok_rw == total and ok_mat == total,
            f"{total} relators; rewriting engine {ok_rw}/{total}, reflection matrix {ok_mat}/{total}")

    derived = derived_subgroup_presentation(tw)
    table = mod2_coset_table(tw)
    n_schreier = len(schreier_generators(table))
    add("nielsen-schreier-count", "lemma:generating-set",
        n_schreier == 1 + 2 ** (n - 1) * (n - 2), f"{n_schreier} Schreier generators")

    for label, pres in (("theorem1", thm), ("minimal", mini), ("reidemeister-schreier", derived)):
        inv = abelian_invariants(pres)
        add(f"abelianization-{label}", "theorem:rank", inv == expected, f"{inv} (expected {expected})")

    free = commutator_free(tw)
    add("chordality", "prop:not-free-for-n>=6", free == (m <= 3), f"commutator_free={free}")

    simp = simplify(derived, budget).presentation
    add("simplify-freeness", "cor:free-iff-m<=3",
        (len(simp.relators) == 0) == (m <= 3),
        f"{simp.n_generators} generators, {len(simp.relators)} relators after simplification")

    return VerificationReport(m, tuple(checks))
