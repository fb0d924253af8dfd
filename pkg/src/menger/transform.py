"""n-place transformations of a finite power set.

A transformation is stored as a dense table of ``2**(m*n)`` subset masks,
indexed by the canonical packed argument tuple.  This module provides Menger
superposition, the pointwise inclusion order, and the property predicates
(contractive, idempotent, isotone, the distributivities) together with the
structural checks used by the law verifiers.

Every predicate returns a :class:`Witness`; a failing witness carries the
least counterexample under that predicate's canonical enumeration order, so
re-evaluating the condition at the witness always reproduces the failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from . import _kernels as K
from . import setcore
from .errors import DomainError

__all__ = [
    "NPlaceTransformation",
    "KernelTransformation",
    "Witness",
    "superpose",
    "diagonal_star",
    "preceq",
    "is_contractive",
    "is_idempotent",
    "is_isotone",
    "is_isotone_naive",
    "is_interior",
    "is_union_distributive",
    "is_intersection_distributive",
    "is_full_union_distributive",
    "is_full_intersection_distributive",
    "full_union_distributive_oracle",
    "full_intersection_distributive_oracle",
    "satisfies_eq2",
    "satisfies_eq6",
    "kernel_of",
    "satisfies_eq8",
]


@dataclass(frozen=True)
class Witness:
    """Outcome of a single property check.

    ``indices`` holds the packed argument-tuple indices of the counterexample
    (one or two of them, depending on the check); ``coord`` is the offending
    coordinate (0-based) for single-slot laws.
    """

    check: str
    passed: bool
    indices: tuple[int, ...] = ()
    coord: Optional[int] = None

    @classmethod
    def ok(cls, check: str) -> "Witness":
        return cls(check, True)

    @classmethod
    def fail(cls, check: str, *indices: int, coord: Optional[int] = None) -> "Witness":
        return cls(check, False, tuple(indices), coord)

    def to_json(self) -> dict:
        d: dict = {"check": self.check, "passed": self.passed}
        if not self.passed:
            d["indices"] = list(self.indices)
            if self.coord is not None:
                d["coord"] = self.coord
        return d


@dataclass(frozen=True)
class NPlaceTransformation:
    """A total map from n-tuples of subsets to subsets, as a dense table."""

    m: int
    n: int
    table: bytes

    def __post_init__(self) -> None:
        setcore.check_shape(self.m, self.n)
        size = 1 << (self.m * self.n)
        if len(self.table) != size:
            raise DomainError(
                f"table has {len(self.table)} entries, expected {size} for m={self.m}, n={self.n}"
            )
        top = 1 << self.m
        for idx, v in enumerate(self.table):
            if v >= top:
                raise DomainError(f"table entry {v} at index {idx} out of range for m={self.m}")

    @classmethod
    def from_entries(cls, m: int, n: int, entries: Iterable[int]) -> "NPlaceTransformation":
        return cls(m, n, bytes(entries))

    @classmethod
    def constant(cls, m: int, n: int, value: int) -> "NPlaceTransformation":
        setcore.check_mask(value, m)
        return cls(m, n, bytes([value]) * (1 << (m * n)))

    @classmethod
    def identity(cls, m: int) -> "NPlaceTransformation":
        """The identity transformation (n=1 only)."""
        return cls(m, 1, bytes(range(1 << m)))

    @property
    def size(self) -> int:
        return 1 << (self.m * self.n)

    def at(self, idx: int) -> int:
        return self.table[idx]

    def apply(self, args: tuple[int, ...]) -> int:
        if len(args) != self.n:
            raise DomainError(f"expected {self.n} arguments, got {len(args)}")
        return self.table[setcore.encode(args, self.m)]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "table": list(self.table)}

    @classmethod
    def from_json(cls, data: dict) -> "NPlaceTransformation":
        try:
            m, n, table = int(data["m"]), int(data["n"]), list(data["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed transformation object: {exc}") from exc
        return cls.from_entries(m, n, table)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class KernelTransformation:
    """The structured form (X1, ..., Xn) ↦ K ∩ X1 ∩ ... ∩ Xn."""

    m: int
    n: int
    kernel: int

    def __post_init__(self) -> None:
        setcore.check_shape(self.m, self.n)
        setcore.check_mask(self.kernel, self.m)

    def expand(self) -> NPlaceTransformation:
        meets = K.meet_table(self.m, self.n)
        return NPlaceTransformation(
            self.m, self.n, bytes(self.kernel & v for v in meets)
        )


def _require_same_shape(f: NPlaceTransformation, *gs: NPlaceTransformation) -> None:
    for g in gs:
        if (g.m, g.n) != (f.m, f.n):
            raise DomainError(
                f"shape mismatch: ({f.m},{f.n}) vs ({g.m},{g.n})"
            )


def superpose(f: NPlaceTransformation, gs: list[NPlaceTransformation]) -> NPlaceTransformation:
    """Menger superposition f[g1 ... gn]."""
    if len(gs) != f.n:
        raise DomainError(f"superposition needs {f.n} inner transformations, got {len(gs)}")
    _require_same_shape(f, *gs)
    table = K.superpose_tables(f.table, [g.table for g in gs], f.m, f.n)
    return NPlaceTransformation(f.m, f.n, table)


def diagonal_star(f: NPlaceTransformation, g: NPlaceTransformation) -> NPlaceTransformation:
    """f ∗ g = f[g ... g]."""
    _require_same_shape(f, g)
    return superpose(f, [g] * f.n)


def preceq(f: NPlaceTransformation, g: NPlaceTransformation) -> bool:
    """Pointwise inclusion: f(X) ⊆ g(X) for every argument tuple."""
    _require_same_shape(f, g)
    return all(a & ~b == 0 for a, b in zip(f.table, g.table))


# ---------------------------------------------------------------------------
# property predicates


def is_contractive(f: NPlaceTransformation) -> Witness:
    idx = K.first_noncontractive(f.table, f.m, f.n)
    if idx < 0:
        return Witness.ok("contractive")
    return Witness.fail("contractive", idx)


def is_idempotent(f: NPlaceTransformation) -> Witness:
    idx = K.first_nonidempotent(f.table, f.m, f.n)
    if idx < 0:
        return Witness.ok("idempotent")
    return Witness.fail("idempotent", idx)


def is_isotone(f: NPlaceTransformation) -> Witness:
    hit = K.first_nonisotone(f.table, f.m, f.n)
    if hit is None:
        return Witness.ok("isotone")
    coord, lo, hi = hit
    return Witness.fail("isotone", lo, hi, coord=coord)


def is_isotone_naive(f: NPlaceTransformation) -> Witness:
    """All-pairs isotonicity check; the oracle for :func:`is_isotone`."""
    size = f.size
    full = size - 1
    t = f.table
    for ix in range(size):
        for iy in range(size):
            if ix & ~iy & full:
                continue  # not componentwise subset
            if t[ix] & ~t[iy]:
                return Witness.fail("isotone-naive", ix, iy)
    return Witness.ok("isotone-naive")


def is_interior(f: NPlaceTransformation) -> Witness:
    for pred in (is_contractive, is_idempotent, is_isotone):
        w = pred(f)
        if not w.passed:
            return Witness("interior:" + w.check, False, w.indices, w.coord)
    return Witness.ok("interior")


def _frames(f: NPlaceTransformation, i: int):
    """All packed indices whose slot i is empty."""
    mask = (1 << f.m) - 1
    shift = f.m * i
    for idx in range(f.size):
        if (idx >> shift) & mask:
            continue
        yield idx


def _binary_distributive(f: NPlaceTransformation, check: str, combine) -> Witness:
    mask = (1 << f.m) - 1
    t = f.table
    for i in range(f.n):
        shift = f.m * i
        for frame in _frames(f, i):
            for x in range(mask + 1):
                fx = t[frame | (x << shift)]
                for y in range(mask + 1):
                    lhs = t[frame | (combine(x, y) << shift)]
                    if lhs != combine(fx, t[frame | (y << shift)]):
                        return Witness.fail(
                            check, frame | (x << shift), frame | (y << shift), coord=i
                        )
    return Witness.ok(check)


def is_union_distributive(f: NPlaceTransformation) -> Witness:
    return _binary_distributive(f, "union-distributive", lambda a, b: a | b)


def is_intersection_distributive(f: NPlaceTransformation) -> Witness:
    return _binary_distributive(f, "intersection-distributive", lambda a, b: a & b)


def is_full_union_distributive(f: NPlaceTransformation) -> Witness:
    """Full (arbitrary-family) ∪-distributivity, finitely reduced.

    Over a finite ground set every family is finite, so the law follows from
    the binary case by induction once the empty family holds: an empty union
    is ∅, forcing f(..., ∅, ...) = ∅.
    """
    check = "full-union-distributive"
    for i in range(f.n):
        for frame in _frames(f, i):
            if f.table[frame] != 0:
                return Witness.fail(check, frame, coord=i)
    w = is_union_distributive(f)
    if not w.passed:
        return Witness(check, False, w.indices, w.coord)
    return Witness.ok(check)


def is_full_intersection_distributive(f: NPlaceTransformation) -> Witness:
    """Full ∩-distributivity over nonempty families, finitely reduced.

    The empty family is excluded on the ∩ side: reading the empty
    intersection as the ambient set would force f(..., A, ...) = A and make
    even kernel-form transformations fail, contradicting the fact that
    ∪-distributive interior operations are ∩-distributive in the full sense.
    Singleton families are trivial, so the binary law carries the induction.
    """
    check = "full-intersection-distributive"
    w = is_intersection_distributive(f)
    if not w.passed:
        return Witness(check, False, w.indices, w.coord)
    return Witness.ok(check)


def _full_distributive_oracle(f: NPlaceTransformation, combine, empty, include_empty):
    """Check the family law directly over every family of subsets, per slot.

    Returns None on success, else the least (coord, frame_index, family_mask)
    counterexample.  Guarded to m <= 2; exists solely to validate the reduced
    checkers.
    """
    if f.m > 2:
        raise DomainError("all-families oracle is limited to m <= 2")
    nsub = 1 << f.m
    t = f.table
    for i in range(f.n):
        shift = f.m * i
        for frame in _frames(f, i):
            for fam in range(0 if include_empty else 1, 1 << nsub):
                arg = empty
                rhs = empty
                for x in range(nsub):
                    if fam >> x & 1:
                        arg = combine(arg, x)
                        rhs = combine(rhs, t[frame | (x << shift)])
                if t[frame | (arg << shift)] != rhs:
                    return (i, frame, fam)
    return None


def full_union_distributive_oracle(f: NPlaceTransformation):
    return _full_distributive_oracle(f, lambda a, b: a | b, 0, include_empty=True)


def full_intersection_distributive_oracle(f: NPlaceTransformation):
    return _full_distributive_oracle(
        f, lambda a, b: a & b, (1 << f.m) - 1, include_empty=False
    )


# ---------------------------------------------------------------------------
# structural characterizations


def satisfies_eq2(f: NPlaceTransformation) -> Witness:
    """The single-inclusion characterization of interior operations."""
    hit = K.first_eq2_violation(f.table, f.m, f.n)
    if hit is None:
        return Witness.ok("eq2")
    return Witness.fail("eq2", *hit)


def satisfies_eq6(f: NPlaceTransformation) -> Witness:
    """Kernel form: f(X) = f(A,...,A) ∩ X1 ∩ ... ∩ Xn."""
    kernel = f.table[f.size - 1]
    meets = K.meet_table(f.m, f.n)
    for idx in range(f.size):
        if f.table[idx] != kernel & meets[idx]:
            return Witness.fail("eq6", idx)
    return Witness.ok("eq6")


def kernel_of(f: NPlaceTransformation) -> KernelTransformation:
    """The kernel K = f(A, ..., A) of a transformation in kernel form."""
    w = satisfies_eq6(f)
    if not w.passed:
        raise DomainError(f"transformation is not in kernel form (witness index {w.indices[0]})")
    return KernelTransformation(f.m, f.n, f.table[f.size - 1])


def satisfies_eq8(f: NPlaceTransformation, gs: list[NPlaceTransformation]) -> Witness:
    """The closure condition gi[f...f][g1...gn] = f[g1...gn] for every i."""
    if len(gs) != f.n:
        raise DomainError(f"expected {f.n} inner transformations, got {len(gs)}")
    _require_same_shape(f, *gs)
    rhs = superpose(f, gs)
    for i, g in enumerate(gs):
        lhs = superpose(superpose(g, [f] * f.n), gs)
        for idx in range(f.size):
            if lhs.table[idx] != rhs.table[idx]:
                return Witness.fail("eq8", idx, coord=i)
    return Witness.ok("eq8")
