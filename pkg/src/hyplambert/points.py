"""Point types for the disk and half-plane models and the extended plane."""

from __future__ import annotations

import math
from dataclasses import dataclass

from hyplambert.errors import DomainError


class _Infinity:
    """The point at infinity of the extended plane (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@dataclass(frozen=True)
class DiskPoint:
    """Point of the open unit disk."""

    x1: float
    x2: float

    def __post_init__(self):
        x1, x2 = float(self.x1), float(self.x2)
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise DomainError(f"non-finite disk point ({x1}, {x2})")
        if x1 * x1 + x2 * x2 >= 1.0:
            raise DomainError(f"({x1}, {x2}) is not inside the unit disk")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    def __iter__(self):
        yield self.x1
        yield self.x2

    @property
    def norm(self) -> float:
        return math.hypot(self.x1, self.x2)

    def one_minus_norm_sq(self) -> float:
        """1 - |x|^2, factored to limit cancellation near the boundary."""
        n = self.norm
        return (1.0 - n) * (1.0 + n)

    @classmethod
    def polar(cls, radius: float, angle: float) -> DiskPoint:
        return cls(radius * math.cos(angle), radius * math.sin(angle))


@dataclass(frozen=True)
class HalfPlanePoint:
    """Point of the upper half-plane, x2 > 0."""

    x1: float
    x2: float

    def __post_init__(self):
        x1, x2 = float(self.x1), float(self.x2)
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise DomainError(f"non-finite half-plane point ({x1}, {x2})")
        if x2 <= 0.0:
            raise DomainError(f"half-plane point needs x2 > 0, got {x2}")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    def __iter__(self):
        yield self.x1
        yield self.x2


def as_pair(p) -> tuple[float, float]:
    """Coordinates of a finite point given as a point object or a 2-sequence."""
    x1, x2 = p
    x1, x2 = float(x1), float(x2)
    if not (math.isfinite(x1) and math.isfinite(x2)):
        raise DomainError(f"non-finite point ({x1}, {x2})")
    return x1, x2


def as_disk_point(p) -> DiskPoint:
    return p if isinstance(p, DiskPoint) else DiskPoint(*p)
