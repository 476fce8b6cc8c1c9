"""Relation matrices, Smith normal form and abelian invariants."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .errors import InvalidArgument
from .presentation import Presentation


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise InvalidArgument("entry count must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise InvalidArgument("ragged matrix")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/t1 + Z/t2 + ...`` with ``t1 | t2 | ...``."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def sparse_relation_rows(p: Presentation) -> List[Dict[int, int]]:
    rows = []
    for r in p.relators:
        row: Dict[int, int] = {}
        for x in r:
            j = abs(x) - 1
            row[j] = row.get(j, 0) + (1 if x > 0 else -1)
        row = {j: v for j, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def relation_matrix(p: Presentation) -> IntMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    dense = []
    for r in p.relators:
        row = [0] * p.n_generators
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        dense.append(row)
    return IntMatrix.from_rows(dense, cols=p.n_generators)


def _diagonalize(rows: List[Dict[int, int]]) -> List[int]:
    """Reduce a sparse integer matrix to diagonal form; return the nonzero pivots.

    Pivot on the entry of least absolute value (fill-in as tie-break).  Row
    operations clear the pivot column; once it is clear, column operations only
    touch the pivot row, so they reduce to taking remainders there.
    """
    rows = {i: dict(r) for i, r in enumerate(rows) if r}
    col_rows: Dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)

    def set_entry(i, j, v):
        r = rows[i]
        if v:
            r[j] = v
            col_rows.setdefault(j, set()).add(i)
        else:
            r.pop(j, None)
            s = col_rows.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del col_rows[j]

    pivots = []
    while rows:
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                key = (abs(v), len(r) * len(col_rows[j]))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best is not None and best[0] == (1, 1):
                break
        _, pi, pj = best
        prow = rows[pi]
        v = prow[pj]
        clean = True
        for i in sorted(col_rows[pj] - {pi}):
            q = rows[i][pj] // v
            for j, x in list(prow.items()):
                set_entry(i, j, rows[i].get(j, 0) - q * x)
            if pj in rows[i]:
                clean = False
            if not rows[i]:
                del rows[i]
        if not clean:
            continue
        for j in [j for j in prow if j != pj]:
            set_entry(pi, j, prow[j] % v)
        if len(prow) == 1:
            pivots.append(abs(v))
            set_entry(pi, pj, 0)
            del rows[pi]
    return pivots


def _invariant_factors(diag: List[int]) -> List[int]:
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(m: IntMatrix) -> List[int]:
    """Invariant factors ``d1 | d2 | ... | dk``, ``k = min(rows, cols)``, zeros last."""
    rows = []
    for r in m.to_rows():
        rows.append({j: v for j, v in enumerate(r) if v})
    factors = _invariant_factors(_diagonalize(rows))
    return factors + [0] * (min(m.rows, m.cols) - len(factors))


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    factors = _invariant_factors(_diagonalize(sparse_relation_rows(p)))
    return AbelianInvariants(
        free_rank=p.n_generators - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )
