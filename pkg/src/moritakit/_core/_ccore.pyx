# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled elimination kernel.

Same contract as ``_pycore.rref_rows``.  Rational input is scaled to primitive
integer rows and eliminated fraction-free in 64-bit integers with checked
arithmetic; on overflow the call falls back to the pure-Python kernel.  Prime
fields use dense modular elimination.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

from gmpy2 import mpq

from moritakit._core import _pycore

cdef extern from *:
    """
    static inline int mk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int mk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int mk_mul_ovf(long long a, long long b, long long *r) nogil
    int mk_sub_ovf(long long a, long long b, long long *r) nogil

cdef long long LIM = 1LL << 61
# below this many entries the conversion overhead is not worth it
cdef Py_ssize_t SMALL = 400
cdef Py_ssize_t HUGE = 40000000


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _ff_eliminate(long long* a, int nr, int nc, int* piv) nogil:
    cdef int rank = 0
    cdef int c, r, best, j
    cdef long long pv, b, g, pa, pb, t1, t2, bestabs, x, cont
    cdef long long* prow
    cdef long long* row
    for c in range(nc):
        if rank == nr:
            break
        best = -1
        bestabs = 0
        for r in range(rank, nr):
            x = a[<Py_ssize_t>r * nc + c]
            if x != 0:
                if x < 0:
                    x = -x
                if best < 0 or x < bestabs:
                    best = r
                    bestabs = x
                    if x == 1:
                        break
        if best < 0:
            continue
        if best != rank:
            for j in range(nc):
                t1 = a[<Py_ssize_t>best * nc + j]
                a[<Py_ssize_t>best * nc + j] = a[<Py_ssize_t>rank * nc + j]
                a[<Py_ssize_t>rank * nc + j] = t1
        prow = a + <Py_ssize_t>rank * nc
        pv = prow[c]
        for r in range(nr):
            if r == rank:
                continue
            row = a + <Py_ssize_t>r * nc
            b = row[c]
            if b == 0:
                continue
            g = _gcd(pv, b)
            pa = pv // g
            pb = b // g
            cont = 0
            for j in range(nc):
                if mk_mul_ovf(pa, row[j], &t1):
                    return -1
                if prow[j] != 0:
                    if mk_mul_ovf(pb, prow[j], &t2):
                        return -1
                    if mk_sub_ovf(t1, t2, &t1):
                        return -1
                if t1 > LIM or t1 < -LIM:
                    return -1
                row[j] = t1
                if t1 != 0 and cont != 1:
                    cont = _gcd(cont, t1)
            if cont > 1:
                for j in range(nc):
                    row[j] = row[j] // cont
        piv[rank] = c
        rank += 1
    return rank


cdef int _mod_eliminate(long long* a, int nr, int nc, int* piv, long long p) nogil:
    cdef int rank = 0
    cdef int c, r, best, j
    cdef long long inv, f, x, e, base, t
    cdef long long* prow
    cdef long long* row
    for c in range(nc):
        if rank == nr:
            break
        best = -1
        for r in range(rank, nr):
            if a[<Py_ssize_t>r * nc + c] != 0:
                best = r
                break
        if best < 0:
            continue
        if best != rank:
            for j in range(nc):
                t = a[<Py_ssize_t>best * nc + j]
                a[<Py_ssize_t>best * nc + j] = a[<Py_ssize_t>rank * nc + j]
                a[<Py_ssize_t>rank * nc + j] = t
        prow = a + <Py_ssize_t>rank * nc
        # modular inverse by exponentiation
        inv = 1
        base = prow[c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(nc):
            prow[j] = prow[j] * inv % p
        for r in range(nr):
            if r == rank:
                continue
            row = a + <Py_ssize_t>r * nc
            f = row[c]
            if f == 0:
                continue
            for j in range(nc):
                if prow[j] != 0:
                    x = (row[j] - f * prow[j]) % p
                    if x < 0:
                        x += p
                    row[j] = x
        piv[rank] = c
        rank += 1
    return rank


def rref_rows(rows, int ncols, long long p=0):
    cdef Py_ssize_t nr = 0
    cdef Py_ssize_t i, k
    cdef int rank, c
    cdef long long* a
    cdef int* piv
    cdef long long den, x, pv
    live = [r for r in rows if r]
    nr = len(live)
    if nr == 0 or ncols == 0 or nr * ncols < SMALL or nr * ncols > HUGE or p >= (1LL << 31):
        return _pycore.rref_rows(live, ncols, p)
    a = <long long*> calloc(nr * ncols, sizeof(long long))
    piv = <int*> malloc((min(nr, ncols) + 1) * sizeof(int))
    if a == NULL or piv == NULL:
        free(a)
        free(piv)
        raise MemoryError()
    try:
        if p:
            for i in range(nr):
                for c, v in (<dict> live[i]).items():
                    a[i * ncols + c] = (<long long> v) % p
            with nogil:
                rank = _mod_eliminate(a, <int> nr, ncols, piv, p)
            out = []
            pivots = []
            for i in range(rank):
                row = {}
                for k in range(ncols):
                    x = a[i * ncols + k]
                    if x:
                        row[k] = int(x)
                out.append(row)
                pivots.append(piv[i])
            return out, pivots
        for i in range(nr):
            r = <dict> live[i]
            d = 1
            for v in r.values():
                q = v.denominator
                if q != 1:
                    d = d * q // _pygcd(d, q)
            for c, v in r.items():
                n = v.numerator * (d // v.denominator)
                if n > LIM or n < -LIM:
                    return _pycore.rref_rows(live, ncols, p)
                a[i * ncols + c] = <long long> n
        with nogil:
            rank = _ff_eliminate(a, <int> nr, ncols, piv)
        if rank < 0:
            return _pycore.rref_rows(live, ncols, p)
        out = []
        pivots = []
        for i in range(rank):
            pv = a[i * ncols + piv[i]]
            row = {}
            for k in range(ncols):
                x = a[i * ncols + k]
                if x:
                    row[k] = mpq(x, pv)
            out.append(row)
            pivots.append(piv[i])
        return out, pivots
    finally:
        free(a)
        free(piv)


def _pygcd(a, b):
    while b:
        a, b = b, a % b
    return a
