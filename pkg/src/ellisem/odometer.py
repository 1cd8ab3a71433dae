"""Base-L adding machine, truncated to K digits (least significant first)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OdometerElement:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("odometer base must be >= 2")
        if not self.digits:
            raise ValueError("truncation depth must be >= 1")
        for d in self.digits:
            if not (0 <= d < self.base):
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @property
    def depth(self) -> int:
        return len(self.digits)

    def to_int(self) -> int:
        value = 0
        for d in reversed(self.digits):
            value = value * self.base + d
        return value

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.digits) + ")"


def from_int(value: int, base: int, depth: int) -> OdometerElement:
    value %= base ** depth
    digits = []
    for _ in range(depth):
        value, d = divmod(value, base)
        digits.append(d)
    return OdometerElement(base, tuple(digits))


def zeros(base: int, depth: int) -> OdometerElement:
    return OdometerElement(base, (0,) * depth)


def ones(base: int, depth: int) -> OdometerElement:
    return OdometerElement(base, (1,) * depth)


def odometer_add(z: OdometerElement, n: int) -> OdometerElement:
    """Digit-wise addition with carry, i.e. arithmetic mod base^depth."""
    return from_int(z.to_int() + n, z.base, z.depth)
