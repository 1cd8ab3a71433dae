"""Two-sided sequences fixed by shift-then-substitute, via finite windows.

A fixed point x satisfies x[j] = theta(x[q])[r] where j + 1 = L*q + r,
0 <= r < L.  Expanding a germ word repeatedly produces nested windows;
every expansion is checked to extend the previous one exactly.

For L >= 3 the germ is the bare seed letter at position 0 and the k-th
window covers [-(L^k - 1)/(L - 1), (L-2)(L^k - 1)/(L - 1)], matching the
usual dot-anchored iteration pictures.  For L = 2 the right tail is not
determined by the seed (position 1 satisfies the self-referential
x[1] = theta(x[1])[0]), so construction requires a unique right seed u
with theta(u)[0] = u forming an admissible 2-word with the seed; the
germ is then (seed, u) at positions (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, PreconditionError
from .substitution import Substitution, fixed_point_seeds


@dataclass(frozen=True)
class Window:
    """A finite piece of a bi-infinite sequence: word[k] sits at position lo + k."""

    word: tuple[str, ...]
    lo: int

    @property
    def hi(self) -> int:
        return self.lo + len(self.word) - 1

    def __contains__(self, m: int) -> bool:
        return self.lo <= m <= self.hi

    def letter(self, m: int) -> str:
        if m not in self:
            raise IndexError(f"position {m} outside window [{self.lo}, {self.hi}]")
        return self.word[m - self.lo]

    def shifted(self, n: int) -> Window:
        """The window of sigma^n x: (sigma^n x)[m] = x[m + n]."""
        return Window(self.word, self.lo - n)

    def render(self) -> str:
        """Plain text with a dot before position 0, e.g. 'a.acaa'."""
        parts = [str(a) for a in self.word]
        sep = "" if all(len(p) == 1 for p in parts) else " "
        left = sep.join(parts[: -self.lo]) if self.lo < 0 else ""
        right = sep.join(parts[max(0, -self.lo):])
        return left + "." + right


def expand_window(subst: Substitution, window: Window) -> Window:
    word = subst.apply(window.word)
    return Window(word, subst.length * window.lo - 1)


def right_seed_for_length_two(subst: Substitution, seed: str) -> str:
    candidates = [
        u for u in subst.alphabet
        if subst.rule(u)[0] == u and (seed, u) in subst.two_block_language
    ]
    if len(candidates) != 1:
        raise PreconditionError(
            "length-2 substitution: right tail of the fixed point is "
            f"{'nonexistent' if not candidates else 'ambiguous'} for seed "
            f"{seed!r} (right-seed candidates: {candidates})"
        )
    return candidates[0]


class FixedPoint:
    """The fixed point with the given seed, expanded lazily and memoized."""

    def __init__(self, subst: Substitution, seed: str):
        if seed not in fixed_point_seeds(subst):
            raise PreconditionError(f"{seed!r} is not a fixed-point seed")
        self.subst = subst
        self.seed = seed
        if subst.length == 2 and len(subst.alphabet) > 1:
            germ = Window((seed, right_seed_for_length_two(subst, seed)), 0)
        else:
            germ = Window((seed,), 0)
        self._levels = [germ]

    def window(self, k: int) -> Window:
        while len(self._levels) <= k:
            prev = self._levels[-1]
            cur = expand_window(self.subst, prev)
            for m in range(prev.lo, prev.hi + 1):
                if cur.letter(m) != prev.letter(m):
                    raise ConsistencyError(
                        f"window expansion inconsistent at position {m}"
                    )
            self._levels.append(cur)
        return self._levels[k]

    def covering_window(self, lo: int, hi: int) -> Window:
        k = len(self._levels) - 1
        while not (self.window(k).lo <= lo and hi <= self.window(k).hi):
            k += 1
        return self.window(k)

    def __getitem__(self, m: int) -> str:
        return self.covering_window(m, m).letter(m)

    def rendered(self, k: int) -> str:
        return self.window(k).render()
