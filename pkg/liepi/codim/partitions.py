"""Partitions, hook lengths and irreducible characters of the symmetric group."""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from ..exceptions import InvalidPartition, SizeMismatch


@dataclass(frozen=True, order=True)
class Partition:
    """λ = (λ_1 ≥ λ_2 ≥ ... ≥ λ_s > 0)."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(
                f"Parts {list(parts)} are not weakly decreasing positive integers",
                parts=list(parts),
            )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> "Partition":
        parts: List[int] = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def tail(self, d: int) -> int:
        """Σ_{k>d} λ_k, the number of boxes below the first d rows."""
        return sum(self.parts[d:])

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions(n: int) -> List[Partition]:
    """All partitions of n, largest first part first."""
    if n < 0:
        raise InvalidPartition(f"Cannot partition a negative number {n}", n=n)
    if n == 0:
        return [Partition(())]
    # sympy reuses the yielded dict
    found = [Partition.from_multiplicities(dict(m)) for m in sympy_partitions(n)]
    return sorted(found, reverse=True)


def hook_dim(shape: Partition) -> int:
    """n! / Π hook lengths."""
    conjugate = shape.conjugate().parts
    hooks = prod(
        (row - j - 1) + (conjugate[j] - i - 1) + 1
        for i, row in enumerate(shape.parts)
        for j in range(row)
    )
    return factorial(shape.n) // hooks


def class_size(cycle_type: Partition) -> int:
    """Number of permutations of the given cycle type."""
    denominator = prod(
        (part ** count) * factorial(count) for part, count in cycle_type.multiplicities().items()
    )
    return factorial(cycle_type.n) // denominator


def representative(cycle_type: Partition) -> Tuple[int, ...]:
    """A permutation of {0, ..., n-1} with consecutive cycles of the given lengths."""
    image = list(range(cycle_type.n))
    start = 0
    for length in cycle_type.parts:
        for offset in range(length):
            image[start + offset] = start + (offset + 1) % length
        start += length
    return tuple(image)


def _beta_set(parts: Sequence[int]) -> Tuple[int, ...]:
    s = len(parts)
    return tuple(p + s - 1 - i for i, p in enumerate(parts))


def _from_beta(beta: Sequence[int]) -> Tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    s = len(ordered)
    return tuple(p for p in (b - (s - 1 - i) for i, b in enumerate(ordered)) if p > 0)


@lru_cache(maxsize=None)
def _mn(parts: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not parts else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(parts)
    members = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in members:
            continue
        # rim hook of size r; its height is the number of beads jumped over
        height = sum(1 for c in beta if target < c < b)
        shifted = [target if c == b else c for c in beta]
        total += (-1) ** height * _mn(_from_beta(shifted), rest)
    return total


def mn_character(shape: Partition, cycle_type: Partition) -> int:
    """χ_λ(μ) by the Murnaghan-Nakayama rule."""
    if shape.n != cycle_type.n:
        raise SizeMismatch(
            f"Partitions of different sizes: |λ| = {shape.n}, |μ| = {cycle_type.n}",
            shape=list(shape.parts), cycle_type=list(cycle_type.parts),
        )
    return _mn(shape.parts, cycle_type.parts)
