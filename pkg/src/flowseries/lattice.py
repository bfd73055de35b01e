"""Multi-index bookkeeping on N^3.

A mode is a triple k = (k1, k2, k3) of nonnegative integers; its level is
|k| = k1 + k2 + k3.  The solvers walk the lattice level by level, and the
quadratic (advection) interaction at a mode k is indexed by its splits:
ordered pairs (k', k'') of nonzero modes with k' + k'' = k componentwise.
Pairs are ordered because the interaction weights the two factors
asymmetrically.
"""

from __future__ import annotations

from itertools import product

__all__ = ["Mode", "ZERO_MODE", "level", "level_modes", "splits", "is_positive"]

Mode = tuple[int, int, int]

ZERO_MODE: Mode = (0, 0, 0)


def level(k: Mode) -> int:
    """Total degree |k| = k1 + k2 + k3."""
    return k[0] + k[1] + k[2]


def is_positive(k: Mode) -> bool:
    """k > (0,0,0): all components nonnegative, not all zero."""
    return min(k) >= 0 and k != ZERO_MODE


def level_modes(l: int) -> list[Mode]:
    """All modes with |k| = l, in lexicographic order.

    There are (l+1)(l+2)/2 of them.
    """
    if l < 0:
        raise ValueError(f"level must be nonnegative, got {l}")
    return [
        (k1, k2, l - k1 - k2)
        for k1 in range(l + 1)
        for k2 in range(l - k1 + 1)
    ]


def splits(k: Mode) -> list[tuple[Mode, Mode]]:
    """All ordered pairs (k', k'') of nonzero modes with k' + k'' = k.

    Requires k > (0,0,0).  The count is (k1+1)(k2+1)(k3+1) - 2: every
    componentwise decomposition except the two with a zero part.  The list
    is symmetric, (k', k'') appears iff (k'', k') does, and is emitted in
    lexicographic order of k'.
    """
    if not is_positive(k):
        raise ValueError(f"splits require a mode > (0,0,0), got {k}")
    out = []
    for part in product(range(k[0] + 1), range(k[1] + 1), range(k[2] + 1)):
        if part == ZERO_MODE or part == k:
            continue
        out.append((part, (k[0] - part[0], k[1] - part[1], k[2] - part[2])))
    return out
