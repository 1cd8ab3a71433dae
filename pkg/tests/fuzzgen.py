"""Seeded random substitution corpus for the fuzz suites.

A draw qualifies when it is primitive, has fixed-point seeds, its fixed
points are representable (length-2 right tails determined), and the
fiber shadow is a transformation semigroup of the seed set.  Skip
reasons are counted so the tests can report what was filtered.
"""

import random
from collections import Counter

from ellisem.errors import PreconditionError, ShadowUndefinedError
from ellisem.fiber import build_fiber_semigroup
from ellisem.substitution import Substitution, fixed_point_seeds

LETTERS = "abcd"


def random_substitution(rng, max_letters=4, max_length=4):
    n = rng.randint(2, max_letters)
    length = rng.randint(2, max_length)
    alphabet = tuple(LETTERS[:n])
    rules = tuple(
        tuple(rng.choice(alphabet) for _ in range(length)) for _ in alphabet
    )
    return Substitution(alphabet, rules)


def qualifying_corpus(count, seed=20240501, max_letters=4, max_length=4):
    """(substitution, fiber) pairs plus the skip tally."""
    rng = random.Random(seed)
    out = []
    skips = Counter()
    attempts = 0
    while len(out) < count:
        attempts += 1
        assert attempts < 1000 * count, "qualification rate collapsed"
        subst = random_substitution(rng, max_letters, max_length)
        if not subst.is_primitive:
            skips["not_primitive"] += 1
            continue
        if not fixed_point_seeds(subst):
            skips["no_seeds"] += 1
            continue
        try:
            fib = build_fiber_semigroup(subst)
        except ShadowUndefinedError:
            skips["shadow_outside_seed_model"] += 1
            continue
        except PreconditionError:
            skips["length2_right_tail_undetermined"] += 1
            continue
        out.append((subst, fib))
    skips["attempts"] = attempts
    return out, skips
