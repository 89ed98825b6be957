"""Integer partitions and their shifted-partition coefficient polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .polycore import RationalPoly


@dataclass(frozen=True, order=True)
class PartitionX:
    """A partition of ``d`` as a non-increasing tuple of positive parts."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, label) -> "PartitionX":
        """Accept ``"[31]"``, ``"31"``, ``"0"``/``""`` (empty) or a sequence of ints."""
        if isinstance(label, PartitionX):
            return label
        if isinstance(label, str):
            s = label.strip().strip("[]")
            if s in ("", "0"):
                return cls(())
            return cls(tuple(int(ch) for ch in s))
        return cls(tuple(label))

    @property
    def d(self) -> int:
        return sum(self.parts)

    def x(self, i: int) -> int:
        """``x_i`` with 1-based index, zero-padded past the last part."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def y(self) -> tuple:
        """Associated shifted partition ``y_i = x_i + d - i`` for i = 1..d."""
        d = self.d
        return tuple(self.x(i) + d - i for i in range(1, d + 1))

    @property
    def label(self) -> str:
        return "[" + "".join(str(p) for p in self.parts) + "]" if self.parts else "[0]"

    def __str__(self):
        return self.label


def enumerate_partitions(d: int) -> list:
    """All partitions of ``d`` in reverse-lexicographic order.

    >>> [p.label for p in enumerate_partitions(3)]
    ['[3]', '[21]', '[111]']
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(PartitionX(tuple(prefix)))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def coeff_c(X: PartitionX) -> RationalPoly:
    """``c_{X,d} = (1/d!) prod_i (q - y_i)``."""
    X = PartitionX.parse(X)
    return RationalPoly.from_roots(X.y) / factorial(X.d)
