"""Pure-Python kernels for the hot verification loops.

Tables are ``bytes`` of length ``2**(m*n)``; entry ``idx`` is the value of
the transformation at the packed argument tuple ``idx`` (see
:mod:`menger.setcore` for the encoding).  The compiled twin in
``_kernels_c.pyx`` implements the same contract; backend selection happens
in :mod:`menger._kernels`.

All search loops run in ascending index order, so a reported counterexample
is the least one under that enumeration.
"""

from __future__ import annotations

BACKEND = "python"


def meet_table(m: int, n: int) -> bytes:
    """Per-index intersection of tuple components."""
    mask = (1 << m) - 1
    size = 1 << (m * n)
    out = bytearray(size)
    for idx in range(size):
        meet = mask
        x = idx
        for _ in range(n):
            meet &= x & mask
            x >>= m
        out[idx] = meet
    return bytes(out)


def superpose_tables(f: bytes, gs: list[bytes], m: int, n: int) -> bytes:
    """Table of X ↦ f(g1(X), ..., gn(X))."""
    size = 1 << (m * n)
    out = bytearray(size)
    for idx in range(size):
        a = 0
        shift = 0
        for g in gs:
            a |= g[idx] << shift
            shift += m
        out[idx] = f[a]
    return bytes(out)


def first_noncontractive(t: bytes, m: int, n: int) -> int:
    """Least index where t(X) is not a subset of X1 ∩ ... ∩ Xn, or -1."""
    mask = (1 << m) - 1
    size = 1 << (m * n)
    for idx in range(size):
        meet = mask
        x = idx
        for _ in range(n):
            meet &= x & mask
            x >>= m
        if t[idx] & ~meet & mask:
            return idx
    return -1


def first_nonidempotent(t: bytes, m: int, n: int) -> int:
    """Least index where t[t...t] differs from t, or -1."""
    s = superpose_tables(t, [t] * n, m, n)
    for idx in range(1 << (m * n)):
        if s[idx] != t[idx]:
            return idx
    return -1


def first_nonisotone(t: bytes, m: int, n: int):
    """Least single-coordinate monotonicity violation.

    Returns ``(coord, idx, idx_sup)`` where ``idx_sup`` grows coordinate
    ``coord`` of ``idx`` to a strict superset and t(idx) is not contained in
    t(idx_sup); ``None`` if t is isotone.  Enumeration order: idx ascending,
    coordinate ascending, superset ascending.
    """
    mask = (1 << m) - 1
    size = 1 << (m * n)
    for idx in range(size):
        v = t[idx]
        for j in range(n):
            shift = m * j
            x = (idx >> shift) & mask
            free = mask & ~x
            c = free and (0 - free) & free
            while c:
                idx2 = idx | (c << shift)
                if v & ~t[idx2] & mask:
                    return (j, idx, idx2)
                c = (c - free) & free
    return None


def first_eq2_violation(t: bytes, m: int, n: int):
    """Least pair (idxX, idxY) violating the interior-characterizing inclusion.

    The inclusion checked: t(X ∩ Y) ⊆ t(tX, ..., tX) ∩ t(Y) ∩ Y1 ∩ ... ∩ Yn
    with tX = t(X), componentwise intersection X ∩ Y.  Returns None when it
    holds everywhere.
    """
    mask = (1 << m) - 1
    size = 1 << (m * n)
    meets = meet_table(m, n)
    rep = 0
    for i in range(n):
        rep |= 1 << (m * i)
    for ix in range(size):
        ffx = t[t[ix] * rep]
        for iy in range(size):
            rhs = ffx & t[iy] & meets[iy]
            if t[ix & iy] & ~rhs & mask:
                return (ix, iy)
    return None
