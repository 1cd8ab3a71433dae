"""Window-level subshift utilities: the agreement metric and sliding-block
recoding by cylinder partitions."""

from __future__ import annotations

import math

from .fixedpoint import Window


def agreement_radius(x: Window, y: Window) -> float:
    """N(x, y): the largest N with x_n = y_n for all |n| <= N.

    Computed on the overlap of the two windows; -1 when the centers
    already differ, math.inf when the windows agree throughout their
    common span (the windows cannot tell the sequences apart).
    """
    lo = max(x.lo, y.lo)
    hi = min(x.hi, y.hi)
    if lo > 0 or hi < 0:
        raise ValueError("windows must overlap around position 0")
    n = 0
    while -n >= lo and n <= hi:
        if x.letter(n) != y.letter(n) or x.letter(-n) != y.letter(-n):
            return n - 1
        n += 1
    return math.inf


def metric_distance(x: Window, y: Window) -> float:
    """d(x, y) = exp(-N(x, y)); 0 exactly when the windows are
    indistinguishable on their common span."""
    n = agreement_radius(x, y)
    return 0.0 if n == math.inf else math.exp(-n)


def higher_block_coding(window: Window, radius: int) -> Window:
    """Recode by the clopen partition into cylinders of the given radius.

    The letter at position m becomes the (2*radius+1)-block centered at
    m; the window shrinks by `radius` on each side.  radius 0 recodes
    each letter to the singleton block, the identity recoding up to
    renaming.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if len(window.word) < 2 * radius + 1:
        raise ValueError("window too small for this radius")
    blocks = tuple(
        tuple(window.word[i - radius : i + radius + 1])
        for i in range(radius, len(window.word) - radius)
    )
    return Window(blocks, window.lo + radius)
