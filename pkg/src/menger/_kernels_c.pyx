# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot verification loops.

Same contract as menger._kernels_py; see that module for documentation.
"""

BACKEND = "c"


def meet_table(int m, int n):
    cdef int mask = (1 << m) - 1
    cdef int size = 1 << (m * n)
    cdef int idx, i, meet, x
    out = bytearray(size)
    cdef unsigned char[::1] o = out
    for idx in range(size):
        meet = mask
        x = idx
        for i in range(n):
            meet &= x & mask
            x >>= m
        o[idx] = <unsigned char>meet
    return bytes(out)


def superpose_tables(bytes f, list gs, int m, int n):
    cdef int size = 1 << (m * n)
    cdef int idx, i, a
    # Pack g1..gn into one contiguous buffer for fast indexing.
    cdef bytes packed = b"".join(gs)
    cdef const unsigned char[::1] G = packed
    cdef const unsigned char[::1] F = f
    out = bytearray(size)
    cdef unsigned char[::1] o = out
    for idx in range(size):
        a = 0
        for i in range(n):
            a |= G[i * size + idx] << (m * i)
        o[idx] = F[a]
    return bytes(out)


def first_noncontractive(bytes t, int m, int n):
    cdef const unsigned char[::1] T = t
    cdef int mask = (1 << m) - 1
    cdef int size = 1 << (m * n)
    cdef int idx, i, meet, x
    for idx in range(size):
        meet = mask
        x = idx
        for i in range(n):
            meet &= x & mask
            x >>= m
        if T[idx] & ~meet & mask:
            return idx
    return -1


def first_nonidempotent(bytes t, int m, int n):
    cdef bytes s = superpose_tables(t, [t] * n, m, n)
    cdef const unsigned char[::1] T = t
    cdef const unsigned char[::1] S = s
    cdef int size = 1 << (m * n)
    cdef int idx
    for idx in range(size):
        if S[idx] != T[idx]:
            return idx
    return -1


def first_nonisotone(bytes t, int m, int n):
    cdef const unsigned char[::1] T = t
    cdef int mask = (1 << m) - 1
    cdef int size = 1 << (m * n)
    cdef int idx, j, shift, x, free, c, v, idx2
    for idx in range(size):
        v = T[idx]
        for j in range(n):
            shift = m * j
            x = (idx >> shift) & mask
            free = mask & ~x
            if free == 0:
                continue
            c = (0 - free) & free
            while c:
                idx2 = idx | (c << shift)
                if v & ~T[idx2] & mask:
                    return (j, idx, idx2)
                c = (c - free) & free
    return None


def first_eq2_violation(bytes t, int m, int n):
    cdef const unsigned char[::1] T = t
    cdef bytes mt = meet_table(m, n)
    cdef const unsigned char[::1] M = mt
    cdef int mask = (1 << m) - 1
    cdef int size = 1 << (m * n)
    cdef int rep = 0
    cdef int i, ix, iy, ffx, rhs
    for i in range(n):
        rep |= 1 << (m * i)
    for ix in range(size):
        ffx = T[T[ix] * rep]
        for iy in range(size):
            rhs = ffx & T[iy] & M[iy]
            if T[ix & iy] & ~rhs & mask:
                return (ix, iy)
    return None
