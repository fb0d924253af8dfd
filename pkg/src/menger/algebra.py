"""Finite Menger algebras, diagonal semigroups, and the representation build.

Carriers are ``0 .. q-1``.  The (n+1)-ary operation of a rank-n algebra is a
dense table of ``q**(n+1)`` entries with the outer element most significant:
``op[((x*q + y1)*q + y2)...]`` is ``x[y1 ... yn]``.

The representation construction maps each carrier element to the kernel
transformation whose kernel is its upset in the natural semilattice order of
the diagonal semigroup, and re-verifies the construction (interior images,
homomorphism, injectivity) by exhaustion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional

from .errors import DomainError, PreconditionError
from .laws import LawReport
from .transform import KernelTransformation, Witness, is_interior, superpose

__all__ = [
    "MengerAlgebra",
    "DiagonalSemigroup",
    "OmegaOrder",
    "Representation",
    "check_superassociative",
    "check_identities",
    "diagonal",
    "is_semilattice",
    "derive_from_semigroup",
    "is_derived",
    "omega_order",
    "check_eq13",
    "represent",
    "verify_representation",
    "semigroup_isomorphic",
]


@dataclass(frozen=True)
class MengerAlgebra:
    """Finite carrier with an (n+1)-ary operation table."""

    q: int
    n: int
    op: bytes

    def __post_init__(self) -> None:
        if self.q < 1 or self.n < 1:
            raise DomainError(f"need q >= 1 and n >= 1, got q={self.q}, n={self.n}")
        expected = self.q ** (self.n + 1)
        if len(self.op) != expected:
            raise DomainError(f"op table has {len(self.op)} entries, expected {expected}")
        if any(v >= self.q for v in self.op):
            raise DomainError("op table entry out of carrier range")

    @classmethod
    def from_entries(cls, q: int, n: int, entries) -> "MengerAlgebra":
        return cls(q, n, bytes(entries))

    def apply(self, x: int, ys: tuple[int, ...]) -> int:
        idx = x
        for y in ys:
            idx = idx * self.q + y
        return self.op[idx]

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "op": list(self.op)}

    @classmethod
    def from_json(cls, data: dict) -> "MengerAlgebra":
        try:
            q, n, op = int(data["q"]), int(data["n"]), list(data["op"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed algebra object: {exc}") from exc
        return cls.from_entries(q, n, op)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class DiagonalSemigroup:
    """Binary table x∗y, row-major (x is the row)."""

    q: int
    table: bytes

    def __post_init__(self) -> None:
        if self.q < 1:
            raise DomainError(f"need q >= 1, got q={self.q}")
        if len(self.table) != self.q * self.q:
            raise DomainError(f"table has {len(self.table)} entries, expected {self.q * self.q}")
        if any(v >= self.q for v in self.table):
            raise DomainError("table entry out of carrier range")

    @classmethod
    def from_entries(cls, q: int, entries) -> "DiagonalSemigroup":
        return cls(q, bytes(entries))

    def star(self, x: int, y: int) -> int:
        return self.table[x * self.q + y]

    def to_json(self) -> dict:
        return {"q": self.q, "table": list(self.table)}

    @classmethod
    def from_json(cls, data: dict) -> "DiagonalSemigroup":
        try:
            q, table = int(data["q"]), list(data["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed semigroup object: {exc}") from exc
        return cls.from_entries(q, table)


@dataclass(frozen=True)
class OmegaOrder:
    """The relation {(x, y) | x∗y = y}; row x is the upset of x as a bitmask."""

    q: int
    rows: tuple[int, ...]

    def upset(self, x: int) -> int:
        return self.rows[x]

    def holds(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)


@dataclass(frozen=True)
class Representation:
    """Carrier element ↦ kernel transformation over a ground set of size q."""

    algebra: MengerAlgebra
    omega: OmegaOrder
    kernels: tuple[KernelTransformation, ...]

    def to_json(self) -> dict:
        return {
            "q": self.algebra.q,
            "n": self.algebra.n,
            "omega": [[(row >> y) & 1 for y in range(self.algebra.q)] for row in self.omega.rows],
            "kernels": [k.kernel for k in self.kernels],
        }


# ---------------------------------------------------------------------------
# checks on raw tables


def check_superassociative(alg: MengerAlgebra) -> Witness:
    """The defining law, by exhaustion over all (f, g1..gn, h1..hn)."""
    rng = range(alg.q)
    n = alg.n
    for combo in product(rng, repeat=2 * n + 1):
        f = combo[0]
        gs = combo[1 : n + 1]
        hs = combo[n + 1 :]
        lhs = alg.apply(alg.apply(f, gs), hs)
        rhs = alg.apply(f, tuple(alg.apply(g, hs) for g in gs))
        if lhs != rhs:
            return Witness.fail("superassociative", *combo)
    return Witness.ok("superassociative")


def check_identities(alg: MengerAlgebra) -> tuple[Witness, Witness, Witness]:
    """The three representation identities, one verdict each.

    (9)  x[x...x] = x
    (10) x[y...y] = y[x...x]
    (11) x[y1...yn] = x[y1...y1]...[yn...yn]
    """
    rng = range(alg.q)
    n = alg.n

    w9 = Witness.ok("identity-9")
    for x in rng:
        if alg.apply(x, (x,) * n) != x:
            w9 = Witness.fail("identity-9", x)
            break

    w10 = Witness.ok("identity-10")
    for x, y in product(rng, repeat=2):
        if alg.apply(x, (y,) * n) != alg.apply(y, (x,) * n):
            w10 = Witness.fail("identity-10", x, y)
            break

    w11 = Witness.ok("identity-11")
    for combo in product(rng, repeat=n + 1):
        x, ys = combo[0], combo[1:]
        acc = x
        for y in ys:
            acc = alg.apply(acc, (y,) * n)
        if alg.apply(x, ys) != acc:
            w11 = Witness.fail("identity-11", *combo)
            break

    return w9, w10, w11


def diagonal(alg: MengerAlgebra) -> DiagonalSemigroup:
    """The binary operation x∗y = x[y...y]."""
    q, n = alg.q, alg.n
    table = bytes(alg.apply(x, (y,) * n) for x in range(q) for y in range(q))
    return DiagonalSemigroup(q, table)


def _first_nonassociative(sgrp: DiagonalSemigroup) -> Optional[tuple[int, int, int]]:
    for x, y, z in product(range(sgrp.q), repeat=3):
        if sgrp.star(sgrp.star(x, y), z) != sgrp.star(x, sgrp.star(y, z)):
            return (x, y, z)
    return None


def is_semilattice(sgrp: DiagonalSemigroup) -> Witness:
    """Idempotent + commutative + associative, by exhaustion."""
    for x in range(sgrp.q):
        if sgrp.star(x, x) != x:
            return Witness.fail("semilattice:idempotent", x)
    for x, y in product(range(sgrp.q), repeat=2):
        if sgrp.star(x, y) != sgrp.star(y, x):
            return Witness.fail("semilattice:commutative", x, y)
    bad = _first_nonassociative(sgrp)
    if bad is not None:
        return Witness.fail("semilattice:associative", *bad)
    return Witness.ok("semilattice")


def derive_from_semigroup(sgrp: DiagonalSemigroup, n: int) -> MengerAlgebra:
    """The rank-n algebra with x[y1...yn] = x∗y1∗...∗yn."""
    bad = _first_nonassociative(sgrp)
    if bad is not None:
        raise PreconditionError(f"not a semigroup: associativity fails at {bad}")
    q = sgrp.q
    entries = bytearray()
    for combo in product(range(q), repeat=n + 1):
        acc = combo[0]
        for y in combo[1:]:
            acc = sgrp.star(acc, y)
        entries.append(acc)
    return MengerAlgebra(q, n, bytes(entries))


def is_derived(alg: MengerAlgebra) -> Witness:
    """Does the algebra equal the one derived from its own diagonal?"""
    derived = derive_from_semigroup(diagonal(alg), alg.n)
    for idx, (a, b) in enumerate(zip(alg.op, derived.op)):
        if a != b:
            return Witness.fail("derived", idx)
    return Witness.ok("derived")


def omega_order(sgrp: DiagonalSemigroup) -> OmegaOrder:
    """The natural order of a semilattice, with rows as upset bitmasks."""
    w = is_semilattice(sgrp)
    if not w.passed:
        raise PreconditionError(f"omega_order requires a semilattice ({w.check} fails at {w.indices})")
    q = sgrp.q
    rows = tuple(
        sum(1 << y for y in range(q) if sgrp.star(x, y) == y) for x in range(q)
    )
    order = OmegaOrder(q, rows)
    _validate_partial_order(order)
    return order


def _validate_partial_order(order: OmegaOrder) -> None:
    q, rows = order.q, order.rows
    for x in range(q):
        if not rows[x] >> x & 1:
            raise PreconditionError(f"omega not reflexive at {x}")
        for y in range(q):
            if rows[x] >> y & 1:
                if x != y and rows[y] >> x & 1:
                    raise PreconditionError(f"omega not antisymmetric at ({x},{y})")
                if rows[y] & ~rows[x]:
                    raise PreconditionError(f"omega not transitive at ({x},{y})")


def check_eq13(alg: MengerAlgebra) -> Witness:
    """upset(x[y1...yn]) = upset(x) ∩ upset(y1) ∩ ... ∩ upset(yn)."""
    _require_representable(alg)
    order = omega_order(diagonal(alg))
    for combo in product(range(alg.q), repeat=alg.n + 1):
        x, ys = combo[0], combo[1:]
        expected = order.upset(x)
        for y in ys:
            expected &= order.upset(y)
        if order.upset(alg.apply(x, ys)) != expected:
            return Witness.fail("eq13", *combo)
    return Witness.ok("eq13")


def _require_representable(alg: MengerAlgebra) -> None:
    w = check_superassociative(alg)
    if not w.passed:
        raise PreconditionError(f"superassociativity fails at {w.indices}")
    for w in check_identities(alg):
        if not w.passed:
            raise PreconditionError(f"{w.check} fails at {w.indices}")


def represent(alg: MengerAlgebra) -> Representation:
    """The concrete model: element g ↦ kernel transformation with K = upset(g)."""
    _require_representable(alg)
    order = omega_order(diagonal(alg))
    kernels = tuple(
        KernelTransformation(alg.q, alg.n, order.upset(g)) for g in range(alg.q)
    )
    return Representation(alg, order, kernels)


def verify_representation(rep: Representation) -> LawReport:
    """Re-verify the constructed model: interior images, homomorphism, injectivity."""
    alg = rep.algebra
    witnesses: list[Witness] = []
    expansions = [k.expand() for k in rep.kernels]

    for g, t in enumerate(expansions):
        w = is_interior(t)
        if not w.passed:
            witnesses.append(Witness.fail("representation:interior", g))

    for combo in product(range(alg.q), repeat=alg.n + 1):
        g, gs = combo[0], combo[1:]
        image = superpose(expansions[g], [expansions[h] for h in gs])
        direct = expansions[alg.apply(g, gs)]
        if image.table != direct.table:
            witnesses.append(Witness.fail("representation:homomorphism", *combo))
            break

    seen: dict[int, int] = {}
    for g, k in enumerate(rep.kernels):
        if k.kernel in seen:
            witnesses.append(Witness.fail("representation:injective", seen[k.kernel], g))
            break
        seen[k.kernel] = g

    return LawReport("T4", {"algebra": alg.to_json()}, not witnesses, witnesses)


# ---------------------------------------------------------------------------
# isomorphism search


def _row_profile(sgrp: DiagonalSemigroup, x: int) -> tuple:
    q = sgrp.q
    row = sorted(sgrp.star(x, y) == y for y in range(q))
    return (
        sgrp.star(x, x) == x,
        tuple(sorted(sgrp.table[x * q : (x + 1) * q].count(v) for v in range(q))),
        tuple(row),
    )


def semigroup_isomorphic(
    s1: DiagonalSemigroup, s2: DiagonalSemigroup
) -> Optional[tuple[int, ...]]:
    """A carrier bijection transporting s1's table onto s2's, or None.

    Searches bijections in lexicographic order, pruned by cheap per-element
    invariants (idempotency, row value multiset, fixed-point pattern);
    carriers are tiny, so completeness beats sophistication.
    """
    if s1.q != s2.q:
        return None
    q = s1.q
    p1 = [_row_profile(s1, x) for x in range(q)]
    p2 = [_row_profile(s2, x) for x in range(q)]
    if sorted(p1) != sorted(p2):
        return None

    for perm in permutations(range(q)):
        if any(p1[x] != p2[perm[x]] for x in range(q)):
            continue
        phi = list(perm)
        ok = True
        for x in range(q):
            for y in range(q):
                if phi[s1.star(x, y)] != s2.star(phi[x], phi[y]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return perm
    return None
