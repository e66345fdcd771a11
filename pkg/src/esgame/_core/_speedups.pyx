# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel lane: subset scans over orientation-sign tables.

Must match _pure.py bit for bit (same enumeration order, same
witnesses); tests enforce the equivalence.
"""


cdef inline int _sgn(const signed char[:, :, ::1] s3,
                     const signed char[:, ::1] s2,
                     int n, int a, int b, int c) nogil:
    if a == n:
        return s2[b, c]
    if b == n:
        return s2[c, a]
    if c == n:
        return s2[a, b]
    return s3[a, b, c]


cdef bint _convex_position(const signed char[:, :, ::1] s3,
                           const signed char[:, ::1] s2,
                           int n, int* idx, int k) nogil:
    cdef int qi, q, ref
    cdef int rest[4]
    cdef int m, i, a, b, c, x, y, z
    for qi in range(k):
        q = idx[qi]
        m = 0
        for i in range(k):
            if i != qi:
                rest[m] = idx[i]
                m += 1
        # all triples of the remaining k-1 points
        for x in range(m):
            a = rest[x]
            for y in range(x + 1, m):
                b = rest[y]
                for z in range(y + 1, m):
                    c = rest[z]
                    ref = _sgn(s3, s2, n, a, b, c)
                    if (_sgn(s3, s2, n, a, b, q) == ref and
                            _sgn(s3, s2, n, b, c, q) == ref and
                            _sgn(s3, s2, n, c, a, q) == ref):
                        return False
    return True


cdef bint _gon_empty(const signed char[:, :, ::1] s3,
                     const signed char[:, ::1] s2,
                     int n, int* idx, int k,
                     int* others, int m) nogil:
    cdef int oi, q, x, y, z, a, b, c, ref
    for oi in range(m):
        q = others[oi]
        for x in range(k):
            a = idx[x]
            for y in range(x + 1, k):
                b = idx[y]
                for z in range(y + 1, k):
                    c = idx[z]
                    ref = _sgn(s3, s2, n, a, b, c)
                    if (_sgn(s3, s2, n, a, b, q) == ref and
                            _sgn(s3, s2, n, b, c, q) == ref and
                            _sgn(s3, s2, n, c, a, q) == ref):
                        return False
    return True


cdef bint _next_combination(int* comb, int k, int n) nogil:
    # lexicographic successor; returns False when exhausted
    cdef int i = k - 1
    while i >= 0 and comb[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    comb[i] += 1
    cdef int j
    for j in range(i + 1, k):
        comb[j] = comb[j - 1] + 1
    return True


def find_convex_gon(const signed char[:, :, ::1] s3, int n, int k):
    """First k-subset (lex order) in convex position, or None."""
    cdef int idx[5]
    cdef int i
    if n < k:
        return None
    for i in range(k):
        idx[i] = i
    while True:
        if _convex_position(s3, None, -1, idx, k):
            return tuple(idx[i] for i in range(k))
        if not _next_combination(idx, k, n):
            return None


def find_empty_convex_gon(const signed char[:, :, ::1] s3, int n, int k):
    """First k-subset (lex order) in convex position with no other input
    point strictly inside, or None."""
    cdef int idx[5]
    cdef int others[16]
    cdef int i, q, m
    cdef bint member
    if n < k:
        return None
    for i in range(k):
        idx[i] = i
    while True:
        if _convex_position(s3, None, -1, idx, k):
            m = 0
            for q in range(n):
                member = False
                for i in range(k):
                    if idx[i] == q:
                        member = True
                        break
                if not member:
                    others[m] = q
                    m += 1
            if _gon_empty(s3, None, -1, idx, k, others, m):
                return tuple(idx[i] for i in range(k))
        if not _next_combination(idx, k, n):
            return None


def losing_addition(const signed char[:, :, ::1] s3,
                    const signed char[:, ::1] s2,
                    int n, int k, bint empty):
    """Does adding the extra point (index n, signs in s2) complete a
    convex k-gon (empty k-gon when `empty`)?  Returns the k-1 base
    indices of the first witness, or None."""
    cdef int base[4]
    cdef int idx[5]
    cdef int others[16]
    cdef int i, q, m, km1
    cdef bint member
    km1 = k - 1
    if n < km1:
        return None
    for i in range(km1):
        base[i] = i
    while True:
        for i in range(km1):
            idx[i] = base[i]
        idx[km1] = n
        if _convex_position(s3, s2, n, idx, k):
            if not empty:
                return tuple(base[i] for i in range(km1))
            m = 0
            for q in range(n):
                member = False
                for i in range(km1):
                    if base[i] == q:
                        member = True
                        break
                if not member:
                    others[m] = q
                    m += 1
            if _gon_empty(s3, s2, n, idx, k, others, m):
                return tuple(base[i] for i in range(km1))
        if not _next_combination(base, km1, n):
            return None
