"""Finite ground sets and subsets encoded as bit masks.

A ground set with ``m`` atoms has atoms canonically labeled ``0 .. m-1``; a
subset is an integer in ``[0, 2**m)`` whose bit ``i`` is set iff atom ``i``
is a member.  An argument tuple ``(X1, ..., Xn)`` of subsets is addressed by
a single radix-``2**m`` index with ``X1`` in the least significant position.
Because each component occupies its own bit field, the componentwise
intersection of two tuples is the plain integer AND of their indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, ResourceGuardError

#: Largest supported number of atoms in a ground set.
M_MAX = 4

#: Cap on m*n: a transformation table has 2**(m*n) entries, so this keeps
#: the worst case at 4096 entries.
MN_MAX = 12


def check_shape(m: int, n: int) -> None:
    """Validate a (ground set size, arity) pair against the resource guards."""
    if not 1 <= m:
        raise DomainError(f"ground set must have at least one atom, got m={m}")
    if not 1 <= n:
        raise DomainError(f"arity must be at least 1, got n={n}")
    if m > M_MAX:
        raise ResourceGuardError(f"m={m} exceeds M_MAX={M_MAX}")
    if m * n > MN_MAX:
        raise ResourceGuardError(f"m*n={m * n} exceeds the table guard {MN_MAX}")


@dataclass(frozen=True)
class GroundSet:
    """The finite ambient set; atoms are the anonymous integers 0 .. m-1."""

    m: int

    def __post_init__(self) -> None:
        if not 1 <= self.m:
            raise DomainError(f"ground set must have at least one atom, got m={self.m}")
        if self.m > M_MAX:
            raise ResourceGuardError(f"m={self.m} exceeds M_MAX={M_MAX}")

    @property
    def full(self) -> int:
        """Mask of the whole set."""
        return (1 << self.m) - 1

    def subsets(self) -> Iterator[int]:
        """All subset masks in ascending order."""
        return iter(range(1 << self.m))


def full_mask(m: int) -> int:
    return (1 << m) - 1


def check_mask(mask: int, m: int) -> None:
    if not 0 <= mask < (1 << m):
        raise DomainError(f"mask {mask} out of range for m={m}")


def encode(components: tuple[int, ...] | list[int], m: int) -> int:
    """Pack subset masks (X1, ..., Xn) into the canonical little-endian index."""
    idx = 0
    for i, x in enumerate(components):
        check_mask(x, m)
        idx |= x << (m * i)
    return idx


def decode(idx: int, m: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`encode`."""
    if not 0 <= idx < (1 << (m * n)):
        raise DomainError(f"tuple index {idx} out of range for m={m}, n={n}")
    mask = full_mask(m)
    return tuple((idx >> (m * i)) & mask for i in range(n))


def intersect_all(components: tuple[int, ...] | list[int], m: int) -> int:
    """X1 ∩ ... ∩ Xn as a mask."""
    meet = full_mask(m)
    for x in components:
        check_mask(x, m)
        meet &= x
    return meet


def meet_of_index(idx: int, m: int, n: int) -> int:
    """Intersection of the components of a packed tuple index."""
    mask = full_mask(m)
    meet = mask
    for i in range(n):
        meet &= (idx >> (m * i)) & mask
    return meet
