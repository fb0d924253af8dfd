"""Exhaustive and seeded-random generators, plus census counting.

Exhaustive generators emit in lexicographic order of the serialized table so
golden files stay stable.  The pruned interior-operation generator has a
naive filter oracle (enumerate everything, keep what passes the predicate);
tests require the two routes to produce identical sorted output wherever
both are feasible.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from . import _kernels as K
from . import setcore
from .algebra import DiagonalSemigroup, MengerAlgebra, check_identities, check_superassociative, is_semilattice
from .errors import ResourceGuardError
from .transform import KernelTransformation, NPlaceTransformation, is_interior

__all__ = [
    "EXHAUST_MAX",
    "CensusRecord",
    "all_transformations",
    "all_interior",
    "all_interior_naive",
    "all_kernel",
    "all_semilattices",
    "all_identity_algebras",
    "random_transformation",
    "random_interior",
    "census",
    "standard_census",
]

#: Default cap on the number of candidate tables an exhaustive generator
#: may enumerate.
EXHAUST_MAX = 1 << 20


def _budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("MENGER_BUDGET")
    return int(env) if env else EXHAUST_MAX


@dataclass(frozen=True)
class CensusRecord:
    klass: str
    m_or_q: int
    n: Optional[int]
    count: int

    def csv_line(self) -> str:
        n = "" if self.n is None else str(self.n)
        return f"{self.klass},{self.m_or_q},{n},{self.count}"


# ---------------------------------------------------------------------------
# exhaustive generators


def all_transformations(m: int, n: int, budget: Optional[int] = None) -> Iterator[NPlaceTransformation]:
    """Every n-place transformation table, in lexicographic order."""
    setcore.check_shape(m, n)
    size = 1 << (m * n)
    total = (1 << m) ** size
    if total > _budget(budget):
        raise ResourceGuardError(
            f"all_transformations(m={m}, n={n}) would enumerate {total} tables"
        )
    for entries in product(range(1 << m), repeat=size):
        yield NPlaceTransformation(m, n, bytes(entries))


def all_interior_naive(m: int, n: int, budget: Optional[int] = None) -> Iterator[NPlaceTransformation]:
    """Filter oracle for :func:`all_interior`."""
    for f in all_transformations(m, n, budget):
        if is_interior(f).passed:
            yield f


def all_interior(m: int, n: int) -> Iterator[NPlaceTransformation]:
    """Every interior operation, by pruned depth-first table assignment.

    Entries are assigned in canonical index order.  Componentwise-subset
    predecessors always have smaller indices, so contractivity and
    isotonicity prune partial assignments; idempotence is filtered at the
    leaves.  Ascending candidate order makes the emission lexicographic.
    """
    setcore.check_shape(m, n)
    if m > 3 or n > 3:
        raise ResourceGuardError(f"all_interior is limited to m <= 3, n <= 3, got ({m},{n})")
    size = 1 << (m * n)
    mask = (1 << m) - 1
    meets = K.meet_table(m, n)

    # Immediate predecessors: drop one atom from one coordinate.
    preds: list[list[int]] = []
    for idx in range(size):
        ps = []
        for j in range(n):
            shift = m * j
            x = (idx >> shift) & mask
            b = x
            while b:
                bit = b & -b
                ps.append(idx ^ (bit << shift))
                b ^= bit
        preds.append(ps)

    table = bytearray(size)

    def rec(idx: int) -> Iterator[NPlaceTransformation]:
        if idx == size:
            if K.first_nonidempotent(bytes(table), m, n) < 0:
                yield NPlaceTransformation(m, n, bytes(table))
            return
        lo = 0
        for p in preds[idx]:
            lo |= table[p]
        hi = meets[idx]
        if lo & ~hi:
            return
        free = hi & ~lo
        c = 0
        while True:
            table[idx] = lo | c
            yield from rec(idx + 1)
            c = (c - free) & free
            if c == 0:
                break

    yield from rec(0)


def all_kernel(m: int, n: int) -> Iterator[KernelTransformation]:
    """One kernel transformation per subset of the ground set."""
    setcore.check_shape(m, n)
    for kernel in range(1 << m):
        yield KernelTransformation(m, n, kernel)


def all_semilattices(q: int, budget: Optional[int] = None) -> Iterator[DiagonalSemigroup]:
    """All labeled semilattice tables on q elements, lexicographic."""
    if q < 1:
        raise ResourceGuardError(f"need q >= 1, got {q}")
    total = q ** (q * q)
    if q > 3 or total > _budget(budget):
        raise ResourceGuardError(f"all_semilattices is limited to q <= 3, got q={q}")
    for entries in product(range(q), repeat=q * q):
        sgrp = DiagonalSemigroup(q, bytes(entries))
        if is_semilattice(sgrp).passed:
            yield sgrp


def all_identity_algebras(q: int, n: int, budget: Optional[int] = None) -> Iterator[MengerAlgebra]:
    """All op tables satisfying superassociativity plus the three identities."""
    size = q ** (n + 1)
    total = q ** size
    if total > _budget(budget):
        raise ResourceGuardError(
            f"all_identity_algebras(q={q}, n={n}) would enumerate {total} tables"
        )
    for entries in product(range(q), repeat=size):
        alg = MengerAlgebra(q, n, bytes(entries))
        if not check_superassociative(alg).passed:
            continue
        if all(w.passed for w in check_identities(alg)):
            yield alg


# ---------------------------------------------------------------------------
# seeded random generation


def _random_table(rng: random.Random, m: int, n: int) -> bytes:
    size = 1 << (m * n)
    bits = rng.getrandbits(m * size)
    mask = (1 << m) - 1
    return bytes((bits >> (m * k)) & mask for k in range(size))


def random_transformation(m: int, n: int, seed: int) -> NPlaceTransformation:
    """Uniform table entries, deterministic per seed."""
    setcore.check_shape(m, n)
    return NPlaceTransformation(m, n, _random_table(random.Random(seed), m, n))


def _isotone_minorant(table: bytes, m: int, n: int) -> bytes:
    """Greatest isotone transformation pointwise below the input."""
    size = 1 << (m * n)
    mask = (1 << m) - 1
    out = bytearray(table)
    # Descending pass: each entry meets its immediate successors, which by
    # induction covers all componentwise supersets.
    for idx in range(size - 1, -1, -1):
        v = out[idx]
        for j in range(n):
            shift = m * j
            x = (idx >> shift) & mask
            free = mask & ~x
            b = free
            while b:
                bit = b & -b
                v &= out[idx | (bit << shift)]
                b ^= bit
        out[idx] = v
    return bytes(out)


def random_interior(m: int, n: int, seed: int) -> NPlaceTransformation:
    """A deterministic seeded interior operation.

    Draws a random contractive table (each entry masked into the argument
    meet), then repairs downward to a fixed point: take the greatest isotone
    minorant, meet the table with its own diagonal superposition, repeat.
    The descent is bounded below by the constant-∅ map, and its fixed point
    is contractive, isotone, and idempotent.
    """
    setcore.check_shape(m, n)
    rng = random.Random(seed)
    meets = K.meet_table(m, n)
    table = bytes(v & meets[i] for i, v in enumerate(_random_table(rng, m, n)))
    while True:
        nxt = _isotone_minorant(table, m, n)
        sup = K.superpose_tables(nxt, [nxt] * n, m, n)
        nxt = bytes(a & b for a, b in zip(nxt, sup))
        if nxt == table:
            break
        table = nxt
    result = NPlaceTransformation(m, n, table)
    assert is_interior(result).passed
    return result


# ---------------------------------------------------------------------------
# census


def census(klass: str, m_or_q: int, n: Optional[int] = None, budget: Optional[int] = None) -> CensusRecord:
    """Count one generator class at one parameter point."""
    if klass == "transformations":
        count = sum(1 for _ in all_transformations(m_or_q, n, budget))
    elif klass == "interior":
        count = sum(1 for _ in all_interior(m_or_q, n))
    elif klass == "kernel":
        count = sum(1 for _ in all_kernel(m_or_q, n))
    elif klass == "semilattices":
        count = sum(1 for _ in all_semilattices(m_or_q, budget))
        n = None
    elif klass == "menger-identities":
        count = sum(1 for _ in all_identity_algebras(m_or_q, n, budget))
    else:
        raise ValueError(f"unknown census class {klass!r}")
    return CensusRecord(klass, m_or_q, n, count)


def standard_census(budget: Optional[int] = None) -> list[CensusRecord]:
    """The pinned desk-scale census suite (interior counts + semilattices)."""
    records = [census("interior", 1, 1), census("interior", 1, 2), census("interior", 1, 3), census("interior", 2, 1)]
    records += [census("semilattices", q, budget=budget) for q in (1, 2, 3)]
    return records
