# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels: 64-bit moduli with 128-bit intermediates.

Mirror of ``pure`` — same signatures, bit-identical results.  Callers
guarantee m < 2**63 and canonical integer inputs in [0, m).
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"
    ctypedef long long i128 "__int128"


cdef inline u64 mulmod(u64 a, u64 b, u64 m) noexcept nogil:
    return <u64>((<u128>a * b) % m)


cdef u64 invmod(u64 a, u64 m) noexcept nogil:
    # extended Euclid; a coprime to m
    cdef i128 t = 0, newt = 1, r = <i128>m, newr = <i128>a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <i128>m
    return <u64>t


cdef u64* _inverse_table(u64 p, u64 m, Py_ssize_t n):
    cdef u64* inv = <u64*>malloc((n + 1) * sizeof(u64))
    cdef u64* prefix = <u64*>malloc((n + 1) * sizeof(u64))
    cdef u64 acc = 1, acc_inv
    cdef Py_ssize_t i
    if inv == NULL or prefix == NULL:
        free(inv)
        free(prefix)
        raise MemoryError()
    inv[0] = 0
    prefix[0] = 1
    for i in range(1, n + 1):
        acc = mulmod(acc, <u64>i, m)
        prefix[i] = acc
    if n > 0:
        acc_inv = invmod(acc, m)
        for i in range(n, 0, -1):
            inv[i] = mulmod(acc_inv, prefix[i - 1], m)
            acc_inv = mulmod(acc_inv, <u64>i, m)
    free(prefix)
    return inv


cdef int _fact_tables(u64 p, u64 m, Py_ssize_t n, u64** fact_out, u64** inv_fact_out) except -1:
    cdef u64* fact = <u64*>malloc((n + 1) * sizeof(u64))
    cdef u64* inv_fact = <u64*>malloc((n + 1) * sizeof(u64))
    cdef Py_ssize_t i
    if fact == NULL or inv_fact == NULL:
        free(fact)
        free(inv_fact)
        raise MemoryError()
    fact[0] = 1 % m
    for i in range(1, n + 1):
        fact[i] = mulmod(fact[i - 1], <u64>i, m)
    inv_fact[n] = invmod(fact[n], m)
    for i in range(n, 0, -1):
        inv_fact[i - 1] = mulmod(inv_fact[i], <u64>i, m)
    fact_out[0] = fact
    inv_fact_out[0] = inv_fact
    return 0


cdef list _to_list(u64* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


def inverse_table(p, m, n):
    """Inverses of 1..n modulo m (slot 0 unused), n <= p-1."""
    if n >= p:
        raise ValueError(f"inverse table needs n < p, got n={n}, p={p}")
    cdef u64* inv = _inverse_table(<u64>p, <u64>m, <Py_ssize_t>n)
    try:
        return _to_list(inv, n + 1)
    finally:
        free(inv)


def factorial_tables(p, m, n):
    """(k! mod m, (k!)^-1 mod m) for k = 0..n, n <= p-1."""
    if n >= p:
        raise ValueError(f"factorial tables need n < p, got n={n}, p={p}")
    cdef u64* fact = NULL
    cdef u64* inv_fact = NULL
    _fact_tables(<u64>p, <u64>m, <Py_ssize_t>n, &fact, &inv_fact)
    try:
        return _to_list(fact, n + 1), _to_list(inv_fact, n + 1)
    finally:
        free(fact)
        free(inv_fact)


def franel_table(p, m, length):
    """Cubed-binomial row sums f_0..f_{length-1} mod m by recurrence."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if length <= 0:
        return []
    cdef Py_ssize_t n, ln = <Py_ssize_t>length
    cdef u64 mm = <u64>m, t, iv
    cdef u64* inv = _inverse_table(<u64>p, mm, ln - 1)
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if out == NULL:
        free(inv)
        raise MemoryError()
    out[0] = 1 % mm
    if ln > 1:
        out[1] = 2 % mm
    for n in range(1, ln - 1):
        t = (mulmod(<u64>(7 * n * n + 7 * n + 2), out[n], mm)
             + mulmod(<u64>(8 * n * n), out[n - 1], mm)) % mm
        iv = inv[n + 1]
        out[n + 1] = mulmod(mulmod(t, iv, mm), iv, mm)
    try:
        return _to_list(out, ln)
    finally:
        free(inv)
        free(out)


def central_binom_table(p, m, length):
    """binom(2k,k) mod m for k = 0..length-1."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if length <= 0:
        return []
    cdef Py_ssize_t k, ln = <Py_ssize_t>length
    cdef u64 mm = <u64>m
    cdef u64* inv = _inverse_table(<u64>p, mm, ln - 1)
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if out == NULL:
        free(inv)
        raise MemoryError()
    out[0] = 1 % mm
    for k in range(ln - 1):
        out[k + 1] = mulmod(mulmod(out[k], <u64>(2 * (2 * k + 1)), mm), inv[k + 1], mm)
    try:
        return _to_list(out, ln)
    finally:
        free(inv)
        free(out)


def binom_shift_table(p, m, rbar, length):
    """binom(k+r,k) mod m for k = 0..length-1, r given as residue rbar."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if length <= 0:
        return []
    cdef Py_ssize_t j, ln = <Py_ssize_t>length
    cdef u64 mm = <u64>m, rb = <u64>rbar
    cdef u64* inv = _inverse_table(<u64>p, mm, ln - 1)
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if out == NULL:
        free(inv)
        raise MemoryError()
    out[0] = 1 % mm
    for j in range(1, ln):
        out[j] = mulmod(mulmod(out[j - 1], (rb + <u64>j) % mm, mm), inv[j], mm)
    try:
        return _to_list(out, ln)
    finally:
        free(inv)
        free(out)


def fpoly_table(p, m, x, length):
    """Table of sum_k binom(l,k) binom(k,l-k) binom(2k,k) x^k for l < length."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if length <= 0:
        return []
    cdef Py_ssize_t l, a, k, ln = <Py_ssize_t>length
    cdef u64 mm = <u64>m, xx = <u64>x, acc, t
    cdef u64* fact = NULL
    cdef u64* inv_fact = NULL
    cdef u64* inv = _inverse_table(<u64>p, mm, ln - 1)
    cdef u64* central = <u64*>malloc(ln * sizeof(u64))
    cdef u64* xpw = <u64*>malloc(ln * sizeof(u64))
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if central == NULL or xpw == NULL or out == NULL:
        free(inv); free(central); free(xpw); free(out)
        raise MemoryError()
    _fact_tables(<u64>p, mm, ln - 1, &fact, &inv_fact)
    central[0] = 1 % mm
    for k in range(ln - 1):
        central[k + 1] = mulmod(mulmod(central[k], <u64>(2 * (2 * k + 1)), mm), inv[k + 1], mm)
    xpw[0] = 1 % mm
    for k in range(1, ln):
        xpw[k] = mulmod(xpw[k - 1], xx, mm)
    with nogil:
        for l in range(ln):
            acc = 0
            for a in range(l // 2 + 1):
                k = l - a
                t = mulmod(mulmod(inv_fact[a], inv_fact[a], mm), inv_fact[l - 2 * a], mm)
                acc = (acc + mulmod(mulmod(t, central[k], mm), xpw[k], mm)) % mm
            out[l] = mulmod(acc, fact[l], mm)
    try:
        return _to_list(out, ln)
    finally:
        free(inv); free(fact); free(inv_fact); free(central); free(xpw); free(out)


def genfranel_table(p, m, r, length):
    """Row sums of r-th binomial powers, sum_j binom(k,j)^r, for k < length."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if r < 1:
        raise ValueError(f"power must be >= 1, got {r}")
    if length <= 0:
        return []
    cdef Py_ssize_t k, j, i, ln = <Py_ssize_t>length
    cdef int rr = <int>r
    cdef u64 mm = <u64>m, acc, b, bp
    cdef u64* fact = NULL
    cdef u64* inv_fact = NULL
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if out == NULL:
        raise MemoryError()
    _fact_tables(<u64>p, mm, ln - 1, &fact, &inv_fact)
    with nogil:
        for k in range(ln):
            acc = 0
            for j in range(k + 1):
                b = mulmod(mulmod(fact[k], inv_fact[j], mm), inv_fact[k - j], mm)
                bp = 1 % mm
                for i in range(rr):
                    bp = mulmod(bp, b, mm)
                acc = (acc + bp) % mm
            out[k] = acc
    try:
        return _to_list(out, ln)
    finally:
        free(fact); free(inv_fact); free(out)


def weighted_cube_table(p, m, w, length):
    """sum_k binom(n,k)^3 w^k for n < length (w = 1 gives franel_table)."""
    if length > p:
        raise ValueError(f"length must be <= p, got {length} > {p}")
    if length <= 0:
        return []
    cdef Py_ssize_t n, k, ln = <Py_ssize_t>length
    cdef u64 mm = <u64>m, ww = <u64>w, acc, b
    cdef u64* fact = NULL
    cdef u64* inv_fact = NULL
    cdef u64* wpw = <u64*>malloc(ln * sizeof(u64))
    cdef u64* out = <u64*>malloc(ln * sizeof(u64))
    if wpw == NULL or out == NULL:
        free(wpw); free(out)
        raise MemoryError()
    _fact_tables(<u64>p, mm, ln - 1, &fact, &inv_fact)
    wpw[0] = 1 % mm
    for k in range(1, ln):
        wpw[k] = mulmod(wpw[k - 1], ww, mm)
    with nogil:
        for n in range(ln):
            acc = 0
            for k in range(n + 1):
                b = mulmod(mulmod(fact[n], inv_fact[k], mm), inv_fact[n - k], mm)
                acc = (acc + mulmod(mulmod(mulmod(b, b, mm), b, mm), wpw[k], mm)) % mm
            out[n] = acc
    try:
        return _to_list(out, ln)
    finally:
        free(fact); free(inv_fact); free(wpw); free(out)


def triangle_weighted_sums(p, m):
    """binom(2k,k) * sum_{n=k}^{p-1} (2n+1) binom(n+k,2k) mod m, k = 0..p-2."""
    cdef Py_ssize_t k, n, pp = <Py_ssize_t>p
    cdef u64 mm = <u64>m, acc, b
    cdef u64* inv = _inverse_table(<u64>p, mm, pp - 1)
    cdef u64* central = <u64*>malloc(pp * sizeof(u64))
    cdef u64* out = <u64*>malloc((pp - 1) * sizeof(u64))
    if central == NULL or out == NULL:
        free(inv); free(central); free(out)
        raise MemoryError()
    central[0] = 1 % mm
    for k in range(pp - 1):
        central[k + 1] = mulmod(mulmod(central[k], <u64>(2 * (2 * k + 1)), mm), inv[k + 1], mm)
    with nogil:
        for k in range(pp - 1):
            b = 1 % mm
            acc = 0
            for n in range(k, pp):
                acc = (acc + mulmod(<u64>(2 * n + 1), b, mm)) % mm
                if n + 1 < pp:
                    b = mulmod(mulmod(b, <u64>(n + 1 + k), mm), inv[n + 1 - k], mm)
            out[k] = mulmod(acc, central[k], mm)
    try:
        return _to_list(out, pp - 1)
    finally:
        free(inv); free(central); free(out)
