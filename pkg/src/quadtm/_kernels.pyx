# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the `_pure` hot loops.  Same API, same semantics."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy
from cpython.bytes cimport PyBytes_FromStringAndSize

IMPL = "c"

DEF BLANK = 2
DEF NO_RULE = 5


def run_encoded(int start, const unsigned char[::1] act, const int[::1] nxt,
                const unsigned char[::1] tape, long long fuel):
    """See `_pure.run_encoded`."""
    cdef Py_ssize_t n = tape.shape[0]
    cdef Py_ssize_t cap = n + 64
    cdef unsigned char *buf = <unsigned char *> malloc(cap)
    cdef unsigned char *newbuf
    if buf == NULL:
        raise MemoryError()
    memset(buf, BLANK, cap)
    if n:
        memcpy(buf + 32, &tape[0], n)
    cdef Py_ssize_t lo = -32
    cdef Py_ssize_t head = 0, idx
    cdef long long steps = 0
    cdef int state = start
    cdef unsigned char a
    cdef bint halted = 0
    while True:
        idx = state * 3 + buf[head - lo]
        a = act[idx]
        if a == NO_RULE:
            halted = 1
            break
        if steps >= fuel:
            break
        if a < 3:
            buf[head - lo] = a
        elif a == 3:
            head -= 1
            if head < lo:
                newbuf = <unsigned char *> malloc(2 * cap)
                if newbuf == NULL:
                    free(buf)
                    raise MemoryError()
                memset(newbuf, BLANK, cap)
                memcpy(newbuf + cap, buf, cap)
                free(buf)
                buf = newbuf
                lo -= cap
                cap = 2 * cap
        else:
            head += 1
            if head - lo >= cap:
                newbuf = <unsigned char *> malloc(2 * cap)
                if newbuf == NULL:
                    free(buf)
                    raise MemoryError()
                memcpy(newbuf, buf, cap)
                memset(newbuf + cap, BLANK, cap)
                free(buf)
                buf = newbuf
                cap = 2 * cap
        state = nxt[idx]
        steps += 1
    out = PyBytes_FromStringAndSize(<char *> buf, cap)
    free(buf)
    return bool(halted), state, head, steps, out, lo


cdef bint _code_ok(unsigned long long v, int length) noexcept nogil:
    cdef int i = 0, ones, s, r, rem, f, k, c, next_new, p, j
    cdef unsigned char used[128]

    ones = 0
    while i < length and (v >> (length - 1 - i)) & 1:
        ones += 1
        i += 1
    if i >= length:
        return 0
    i += 1
    if i + ones > length or ones > 30:
        return 0
    c = 0
    for j in range(ones):
        c = c << 1 | <int> ((v >> (length - 1 - i)) & 1)
        i += 1
    s = (1 << ones) - 1 + c

    ones = 0
    while i < length and (v >> (length - 1 - i)) & 1:
        ones += 1
        i += 1
    if i >= length:
        return 0
    i += 1
    if i + ones > length or ones > 30:
        return 0
    c = 0
    for j in range(ones):
        c = c << 1 | <int> ((v >> (length - 1 - i)) & 1)
        i += 1
    r = (1 << ones) - 1 + c

    rem = length - i
    if s < 1 or s > rem // 4:
        return 0
    if r < 1 or r > rem // (4 * s):
        return 0
    if 4 * r * s != rem:
        return 0

    memset(used, 0, 128)
    next_new = 5
    p = 0
    for f in range(4 * r):
        c = 0
        for j in range(s):
            c = c << 1 | <int> ((v >> (length - 1 - i)) & 1)
            i += 1
        k = f & 3
        if k == 0 or k == 3:
            if c < 5 or c > next_new:
                return 0
            if c == next_new:
                next_new += 1
            if k == 0:
                p = c
        elif k == 1:
            if c > 2:
                return 0
            j = (p - 5) * 3 + c
            if j >= 128 or used[j]:
                return 0
            used[j] = 1
        else:
            if c > 4:
                return 0
    # minimal width: s == bit_length(next_new - 1)
    c = 0
    j = next_new - 1
    while j:
        c += 1
        j >>= 1
    return s == c


def code_bits_valid(v, length):
    """See `_pure.code_bits_valid`."""
    return bool(_code_ok(v, length))


def scan_valid_codes(int max_len):
    """See `_pure.scan_valid_codes`."""
    if max_len > 62:
        raise ValueError("compiled scan supports lengths up to 62")
    out = []
    cdef int length
    cdef unsigned long long v, top
    for length in range(1, max_len + 1):
        top = (<unsigned long long> 1) << length
        v = 0
        while v < top:
            if _code_ok(v, length):
                out.append(format(v, "0{}b".format(length)))
            v += 1
    return out


cdef int _reach_rec(const int *indptr, const int *indices,
                    unsigned char *tthr, unsigned char *fthr,
                    int n, int a, int b, int j, int depth,
                    int *maxd) noexcept nogil:
    cdef int e, m, res
    cdef Py_ssize_t key
    if depth > maxd[0]:
        maxd[0] = depth
    if a == b:
        return 1
    key = (<Py_ssize_t> a) * n + b
    if tthr[key] != 255 and j >= tthr[key]:
        return 1
    if fthr[key] != 255 and j <= fthr[key]:
        return 0
    if j == 0:
        res = 0
        for e in range(indptr[a], indptr[a + 1]):
            if indices[e] == b:
                res = 1
                break
    else:
        res = _reach_rec(indptr, indices, tthr, fthr, n, a, b, j - 1, depth + 1, maxd)
        if not res:
            for m in range(n):
                if m == a or m == b:
                    continue
                if _reach_rec(indptr, indices, tthr, fthr, n, a, m, j - 1, depth + 1, maxd) \
                        and _reach_rec(indptr, indices, tthr, fthr, n, m, b, j - 1, depth + 1, maxd):
                    res = 1
                    break
    if res:
        if tthr[key] == 255 or j < tthr[key]:
            tthr[key] = <unsigned char> j
    else:
        if fthr[key] == 255 or j > fthr[key]:
            fthr[key] = <unsigned char> j
    return res


def reach_accepts(const int[::1] indptr, const int[::1] indices,
                  int start, int target, int j0):
    """See `_pure.reach_accepts`."""
    cdef int n = indptr.shape[0] - 1
    if j0 > 250:
        raise ValueError("path exponent out of range")
    cdef Py_ssize_t sz = (<Py_ssize_t> n) * n
    cdef unsigned char *tthr = <unsigned char *> malloc(sz)
    cdef unsigned char *fthr = <unsigned char *> malloc(sz)
    if tthr == NULL or fthr == NULL:
        free(tthr)
        free(fthr)
        raise MemoryError()
    memset(tthr, 255, sz)
    memset(fthr, 255, sz)
    cdef const int *idx_ptr = NULL
    if indices.shape[0] > 0:
        idx_ptr = &indices[0]
    cdef int maxd = 0
    cdef int ok
    with nogil:
        ok = _reach_rec(&indptr[0], idx_ptr, tthr, fthr, n, start, target, j0, 1, &maxd)
    free(tthr)
    free(fthr)
    return bool(ok), maxd
