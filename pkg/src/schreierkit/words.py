"""Free-group words.

A word is a tuple of nonzero ints: ``k`` is generator ``k`` (1-based) and
``-k`` its formal inverse.  The empty tuple is the identity.  Generator names
live on :class:`~schreierkit.presentation.Presentation`, never inside words.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional, Sequence, Tuple

from .errors import InvalidArgument, ParseError

Word = Tuple[int, ...]

IDENTITY: Word = ()


def letter(gen: int, sign: int = 1) -> int:
    if gen < 1:
        raise InvalidArgument(f"generator index must be >= 1, got {gen}")
    if sign not in (1, -1):
        raise InvalidArgument(f"sign must be +1 or -1, got {sign}")
    return gen * sign


def check_alphabet(w: Sequence[int], alphabet_size: int) -> None:
    for x in w:
        if x == 0 or abs(x) > alphabet_size:
            raise InvalidArgument(f"letter {x} outside alphabet of size {alphabet_size}")


def free_reduce(w: Iterable[int]) -> Word:
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    r = free_reduce(w)
    i, j = 0, len(r)
    while j - i >= 2 and r[i] == -r[j - 1]:
        i += 1
        j -= 1
    return r[i:j]


def invert(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def concat(*words: Sequence[int]) -> Word:
    out = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """Return ``by * w * by^-1``, freely reduced."""
    return concat(by, w, invert(by))


def commutator(a: Sequence[int], b: Sequence[int]) -> Word:
    return concat(a, b, invert(a), invert(b))


def rotations(w: Word):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def cyclic_key(w: Sequence[int]) -> Word:
    """Least rotation of ``w`` or of its inverse, after cyclic reduction.

    Two relators define the same normal closure condition trivially when their
    keys agree, so this is the deduplication key for relator sets.
    """
    r = cyclic_reduce(w)
    if not r:
        return r
    return min(min(rotations(r)), min(rotations(invert(r))))


def exponent_sums(w: Iterable[int], alphabet_size: int) -> list:
    sums = [0] * alphabet_size
    for x in w:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


_TOKEN = re.compile(r"^g(\d+)(?:\^(-?\d+))?$")
_NAMED = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def parse_word(text: str, names: Optional[Sequence[str]] = None) -> Word:
    """Parse ``"g1 g3^-1 g2^2"``; ``"1"`` (or blank) is the empty word.

    With ``names``, tokens may also use those generator names (``"t1 t4^-1"``).
    """
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return IDENTITY
    lookup = {nm: i for i, nm in enumerate(names or (), start=1)}
    out = []
    for tok in tokens:
        m = _NAMED.match(tok)
        if m is not None and m.group(1) in lookup:
            gen = lookup[m.group(1)]
        else:
            m = _TOKEN.match(tok)
            if m is None or int(m.group(1)) < 1:
                raise ParseError(f"bad word token {tok!r}")
            gen = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([gen if power > 0 else -gen] * abs(power))
    return tuple(out)


def format_word(w: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    if not w:
        return "1"

    def name(x):
        return names[x - 1] if names else f"g{x}"

    return " ".join(name(x) if x > 0 else f"{name(-x)}^-1" for x in w)
