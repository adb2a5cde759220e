"""Fooling-set lower bounds for NFA and cover-NFA state complexity.

A fooling set is a list of pairs ``(x_i, y_i)`` with every ``x_i y_i`` in the
language such that distinct pairs "fool" each other.  Any NFA (or cover NFA,
in the cover modes) needs at least as many states as there are pairs.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .clique import max_clique
from .errors import DomainError

POOL_LIMIT = 2000


class FoolingMode(str, Enum):
    NFA_PLAIN = "NFA_PLAIN"
    NFA_EXTENDED = "NFA_EXTENDED"
    COVER_PLAIN = "COVER_PLAIN"
    COVER_EXTENDED = "COVER_EXTENDED"

    @property
    def is_cover(self):
        return self in (FoolingMode.COVER_PLAIN, FoolingMode.COVER_EXTENDED)


@dataclass(frozen=True)
class FoolingSet:
    pairs: Tuple[Tuple[str, str], ...]
    mode: FoolingMode

    def __init__(self, pairs, mode):
        pairs = tuple((str(x), str(y)) for x, y in pairs)
        if not pairs:
            raise DomainError("a fooling set needs at least one pair")
        if len(set(pairs)) != len(pairs):
            raise DomainError("duplicate pairs in fooling set")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "mode", FoolingMode(mode))

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class BoundVerdict:
    valid: bool
    bound: int
    violation: Optional[Tuple[int, int, str]] = None


def _fooled(L, mode, p, q):
    """Whether pairs ``p`` and ``q`` are compatible in ``mode``; ``None`` if so, else the failed clause."""
    (x1, y1), (x2, y2) = p, q
    w12, w21 = x1 + y2, x2 + y1
    in12, in21 = w12 in L.wordset, w21 in L.wordset
    if mode is FoolingMode.NFA_PLAIN:
        if in12:
            return "x_i y_j in L"
        if in21:
            return "x_j y_i in L"
        return None
    if mode is FoolingMode.NFA_EXTENDED:
        return "x_i y_j and x_j y_i both in L" if in12 and in21 else None
    short12, short21 = len(w12) <= L.ell, len(w21) <= L.ell
    if mode is FoolingMode.COVER_PLAIN:
        if short12 and in12:
            return "x_i y_j in L within ell"
        if short21 and in21:
            return "x_j y_i in L within ell"
        return None
    if (short12 and not in12) or (short21 and not in21):
        return None
    return "neither x_i y_j nor x_j y_i is a short non-member"


def verify_fooling_set(L, S):
    """Check the fooling conditions of ``S.mode``; a valid set bounds the measure by ``len(S)``."""
    mode = FoolingMode(S.mode)
    pairs = S.pairs
    for i, (x, y) in enumerate(pairs):
        if x + y not in L.wordset:
            return BoundVerdict(False, 0, (i, i, "x_i y_i not in L"))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            clause = _fooled(L, mode, pairs[i], pairs[j])
            if clause is not None:
                return BoundVerdict(False, 0, (i, j, clause))
    return BoundVerdict(True, len(pairs))


def splittings(L):
    """All pairs ``(x, y)`` with ``x + y`` in ``L``, in shortlex order of the word then by ``len(x)``."""
    return [(w[:k], w[k:]) for w in L.words for k in range(len(w) + 1)]


def max_fooling_set(L, mode, pool=None):
    """A maximum fooling set of ``mode`` drawn from ``pool`` (default: all splittings of member words).

    Pairs whose concatenation is not in ``L`` are discarded, and an exact
    maximum clique of the compatibility graph is returned.  Returns ``None``
    when no pair qualifies (the empty language).
    """
    mode = FoolingMode(mode)
    pool = splittings(L) if pool is None else list(dict.fromkeys((str(x), str(y)) for x, y in pool))
    if not pool and L.words:
        raise DomainError("empty candidate pool for a non-empty language")
    if len(pool) > POOL_LIMIT:
        raise DomainError(f"candidate pool of {len(pool)} pairs exceeds the limit of {POOL_LIMIT}")
    cand = [p for p in pool if p[0] + p[1] in L.wordset]
    if not cand:
        return None
    adjacency = [0] * len(cand)
    for i in range(len(cand)):
        for j in range(i + 1, len(cand)):
            if _fooled(L, mode, cand[i], cand[j]) is None:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return FoolingSet([cand[i] for i in max_clique(adjacency)], mode)


def fooling_bound(L, mode):
    """Size of a maximum fooling set, 0 if there is none."""
    S = max_fooling_set(L, mode)
    return 0 if S is None else len(S)
