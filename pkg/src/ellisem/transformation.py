"""Total maps on a finite point set {0, ..., n-1}.

The multiplicative convention throughout the package is

    f * g  =  f o g      (apply g first),

so products read left-to-right like function composition.  All structure
computations downstream (closures, Green's relations, fiber semigroups)
inherit this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True, order=True)
class Transformation:
    """A total map on {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ValueError("degree 0 transformation rejected")
        for x in self.images:
            if not (0 <= x < n):
                raise ValueError(f"image {x} out of range for degree {n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Transformation) -> Transformation:
        return compose(self, other)

    def image(self) -> frozenset[int]:
        return frozenset(self.images)

    def is_idempotent(self) -> bool:
        return compose(self, self) == self

    def is_constant(self) -> bool:
        return len(set(self.images)) == 1

    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.degree

    def word(self, alphabet) -> str:
        """Render as the image word over `alphabet`, e.g. phi on (a,b,c) -> 'aab'."""
        return "".join(str(alphabet[i]) for i in self.images)


def identity(n: int) -> Transformation:
    return Transformation(tuple(range(n)))


def constant(n: int, value: int) -> Transformation:
    return Transformation((value,) * n)


def compose(f: Transformation, g: Transformation) -> Transformation:
    """f o g: x -> f(g(x)).  Degrees must match."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} != {g.degree}")
    return Transformation(tuple(f.images[y] for y in g.images))


def all_transformations(n: int):
    """All n^n transformations of degree n, in lexicographic image order."""
    if not (1 <= n):
        raise ValueError("degree must be >= 1")
    for images in product(range(n), repeat=n):
        yield Transformation(images)


def restriction_to_image_is_bijective(f: Transformation) -> bool:
    """Injectivity of f on im f; on a finite set this is bijectivity."""
    img = sorted(f.image())
    values = [f.images[x] for x in img]
    return len(set(values)) == len(img)


def image_stable(f: Transformation) -> bool:
    """im f == im f^2 (equivalent to the restriction test on finite sets)."""
    return f.image() == compose(f, f).image()


def restricted_inverse_square(f: Transformation) -> Transformation | None:
    """The commuting generalised inverse of f, when f is bijective on its image.

    Writing ft for the restriction of f to its image (a bijection there),
    the inverse is  x -> ft^-1(ft^-1(f(x))).  Returns None when f is not
    bijective on its image.
    """
    if not restriction_to_image_is_bijective(f):
        return None
    inv = {f.images[x]: x for x in f.image()}
    return Transformation(tuple(inv[inv[f.images[x]]] for x in range(f.degree)))
