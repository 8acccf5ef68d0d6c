# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Henkin kernels.  Same API and mask layout as ``_kernels_py``."""

IMPLEMENTATION = "cython"

DEF MAXN = 5


cdef inline unsigned int _row(int n, unsigned long long R, int a) nogil:
    return <unsigned int>((R >> (a * n)) & ((1ULL << n) - 1))


cdef bint _functions(int n, unsigned int T, unsigned int B, unsigned long long K) nogil:
    cdef int f[MAXN]
    cdef int g[MAXN]
    cdef unsigned int krow[MAXN]
    cdef unsigned int cols, full = (1U << n) - 1
    cdef int i, x, y, ok
    for i in range(n):
        krow[i] = _row(n, K, i)
        f[i] = 0
    while True:
        cols = full
        for x in range(n):
            if (T >> x) & 1:
                cols &= krow[f[x]]
        for i in range(n):
            g[i] = 0
        while True:
            ok = 1
            for y in range(n):
                if (B >> y) & 1 and not ((cols >> g[y]) & 1):
                    ok = 0
                    break
            if ok:
                return 1
            i = 0
            while i < n:
                g[i] += 1
                if g[i] < n:
                    break
                g[i] = 0
                i += 1
            if i == n:
                break
        i = 0
        while i < n:
            f[i] += 1
            if f[i] < n:
                break
            f[i] = 0
            i += 1
        if i == n:
            return 0


cdef bint _left_total(int n, unsigned int S, unsigned long long R, unsigned int *img) nogil:
    cdef int x
    cdef unsigned int r, acc = 0
    for x in range(n):
        if (S >> x) & 1:
            r = _row(n, R, x)
            if r == 0:
                return 0
            acc |= r
    img[0] = acc
    return 1


cdef bint _relations(int n, unsigned int T, unsigned int B, unsigned long long K) nogil:
    cdef unsigned long long F, G, top = 1ULL << (n * n)
    cdef unsigned int imgf, imgg, cols
    cdef int xp
    F = 0
    while F < top:
        if _left_total(n, T, F, &imgf):
            cols = (1U << n) - 1
            for xp in range(n):
                if (imgf >> xp) & 1:
                    cols &= _row(n, K, xp)
            G = 0
            while G < top:
                if _left_total(n, B, G, &imgg) and (imgg & ~cols) == 0:
                    return 1
                G += 1
        F += 1
    return 0


cdef bint _linear_first(int n, unsigned int T, unsigned int B, unsigned long long K) nogil:
    cdef int x, xp, y, found, good
    for x in range(n):
        found = 0
        for xp in range(n):
            good = 1
            for y in range(n):
                if (T >> x) & 1 and (B >> y) & 1 and _row(n, K, xp) == 0:
                    good = 0
                    break
            if good:
                found = 1
                break
        if not found:
            return 0
    return 1


cdef bint _linear_second(int n, unsigned int T, unsigned int B, unsigned long long K) nogil:
    cdef int y, yp, x, xp, found, good, hit
    for y in range(n):
        found = 0
        for yp in range(n):
            good = 1
            for x in range(n):
                if (T >> x) & 1 and (B >> y) & 1:
                    hit = 0
                    for xp in range(n):
                        if (K >> (xp * n + yp)) & 1:
                            hit = 1
                            break
                    if not hit:
                        good = 0
                        break
            if good:
                found = 1
                break
        if not found:
            return 0
    return 1


def _check(int n):
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled kernels support sizes 1..{MAXN}")


def henkin_functions(int n, unsigned int T, unsigned int B, unsigned long long K):
    _check(n)
    return bool(_functions(n, T, B, K))


def henkin_relations(int n, unsigned int T, unsigned int B, unsigned long long K):
    _check(n)
    if n > 4:
        raise ValueError("relations mode supports sizes up to 4")
    return bool(_relations(n, T, B, K))


def linear_first(int n, unsigned int T, unsigned int B, unsigned long long K):
    _check(n)
    return bool(_linear_first(n, T, B, K))


def linear_second(int n, unsigned int T, unsigned int B, unsigned long long K):
    _check(n)
    return bool(_linear_second(n, T, B, K))


def separator_search(int min_size, int max_size):
    cdef int n
    cdef unsigned int T, B
    cdef unsigned long long K, ktop
    for n in range(min_size, max_size + 1):
        _check(n)
        ktop = 1ULL << (n * n)
        with nogil:
            for T in range(1U << n):
                for B in range(1U << n):
                    K = 0
                    while K < ktop:
                        if _linear_first(n, T, B, K) and _linear_second(n, T, B, K) and not _functions(n, T, B, K):
                            with gil:
                                return (n, T, B, K)
                        K += 1
    return None


def henkin_table(int n, str mode):
    _check(n)
    cdef bint rel = mode != "functions"
    if rel and n > 4:
        raise ValueError("relations mode supports sizes up to 4")
    cdef unsigned int T, B
    cdef unsigned long long K, ktop = 1ULL << (n * n)
    cdef Py_ssize_t i = 0
    out = bytearray(1 << (2 * n + n * n))
    cdef unsigned char[:] view = out
    with nogil:
        for T in range(1U << n):
            for B in range(1U << n):
                K = 0
                while K < ktop:
                    view[i] = _relations(n, T, B, K) if rel else _functions(n, T, B, K)
                    i += 1
                    K += 1
    return bytes(out)
