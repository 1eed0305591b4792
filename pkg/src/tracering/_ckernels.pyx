# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse polynomial kernels; same contract as ``_pykernels``.

Products are accumulated in a C open-addressing table with 64-bit
coefficients.  Any overflow (or an input coefficient that does not fit in
64 bits) sends the call to the exact Python-object path, so results are
always exact.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    static inline int tr_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int tr_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline Py_ssize_t tr_slot(long long key, Py_ssize_t mask) {
        unsigned long long h = (unsigned long long)key * 0x9E3779B97F4A7C15ULL;
        return (Py_ssize_t)(h >> 29) & mask;
    }
    """
    int tr_mul_ovf(long long a, long long b, long long *r) nogil
    int tr_add_ovf(long long a, long long b, long long *r) nogil
    Py_ssize_t tr_slot(long long key, Py_ssize_t mask) nogil

cdef enum:
    SHIFT = 20
    MASK = 1048575

cdef long long EMPTY = -1


cdef class _Table:
    """Open-addressing map long long key -> long long value (keys >= 0)."""

    cdef long long *keys
    cdef long long *vals
    cdef Py_ssize_t cap
    cdef Py_ssize_t used

    def __cinit__(self, Py_ssize_t hint):
        cdef Py_ssize_t cap = 16
        while cap < 2 * hint:
            cap <<= 1
        self._alloc(cap)

    cdef void _alloc(self, Py_ssize_t cap):
        cdef Py_ssize_t i
        self.keys = <long long *> malloc(cap * sizeof(long long))
        self.vals = <long long *> malloc(cap * sizeof(long long))
        if self.keys == NULL or self.vals == NULL:
            raise MemoryError()
        for i in range(cap):
            self.keys[i] = EMPTY
        self.cap = cap
        self.used = 0

    def __dealloc__(self):
        free(self.keys)
        free(self.vals)

    cdef int _grow(self) except -1:
        cdef long long *ok = self.keys
        cdef long long *ov = self.vals
        cdef Py_ssize_t oc = self.cap, i
        self._alloc(oc * 2)
        for i in range(oc):
            if ok[i] != EMPTY:
                self._insert_new(ok[i], ov[i])
        free(ok)
        free(ov)
        return 0

    cdef inline void _insert_new(self, long long key, long long val):
        cdef Py_ssize_t mask = self.cap - 1
        cdef Py_ssize_t i = tr_slot(key, mask)
        while self.keys[i] != EMPTY:
            i = (i + 1) & mask
        self.keys[i] = key
        self.vals[i] = val
        self.used += 1

    cdef int accumulate(self, long long key, long long val) except -1:
        """Add val at key; returns 1 on overflow, 0 otherwise."""
        cdef Py_ssize_t mask, i
        cdef long long s
        if 2 * (self.used + 1) > self.cap:
            self._grow()
        mask = self.cap - 1
        i = tr_slot(key, mask)
        while True:
            if self.keys[i] == key:
                if tr_add_ovf(self.vals[i], val, &s):
                    return 1
                self.vals[i] = s
                return 0
            if self.keys[i] == EMPTY:
                self.keys[i] = key
                self.vals[i] = val
                self.used += 1
                return 0
            i = (i + 1) & mask

    cdef dict to_dict(self):
        cdef dict out = {}
        cdef Py_ssize_t i
        for i in range(self.cap):
            if self.keys[i] != EMPTY and self.vals[i] != 0:
                out[self.keys[i]] = self.vals[i]
        return out


cdef bint _load(dict d, long long *ks, long long *cs):
    """Copy a dict into C arrays; False if some coefficient needs more than 64 bits."""
    cdef Py_ssize_t i = 0
    try:
        for k, c in d.items():
            ks[i] = k
            cs[i] = c
            i += 1
    except OverflowError:
        return False
    return True


cdef object _mul_fast(dict a, dict b, dict minus):
    """a*b - minus with 64-bit coefficients, or None on overflow."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long *ka = <long long *> malloc((na + 1) * sizeof(long long))
    cdef long long *ca = <long long *> malloc((na + 1) * sizeof(long long))
    cdef long long *kb = <long long *> malloc((nb + 1) * sizeof(long long))
    cdef long long *cb = <long long *> malloc((nb + 1) * sizeof(long long))
    cdef long long prod, key, cval
    cdef _Table table
    try:
        if not (_load(a, ka, ca) and _load(b, kb, cb)):
            return None
        table = _Table(na + nb + len(minus))
        try:
            for k, c in minus.items():
                key = k
                cval = c
                if cval == -9223372036854775807 - 1:
                    return None
                table.accumulate(key, -cval)
        except OverflowError:
            return None
        for j in range(nb):
            for i in range(na):
                if tr_mul_ovf(ca[i], cb[j], &prod):
                    return None
                if table.accumulate(ka[i] + kb[j], prod):
                    return None
        return table.to_dict()
    finally:
        free(ka)
        free(ca)
        free(kb)
        free(cb)


cdef dict _mul_slow(dict a, dict b, dict minus):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = {k: -v for k, v in minus.items()}
    cdef object prev
    for kb_, cb_ in b.items():
        for ka_, ca_ in a.items():
            k = ka_ + kb_
            prev = out.get(k)
            out[k] = ca_ * cb_ if prev is None else prev + ca_ * cb_
    return {k: v for k, v in out.items() if v}


def mul(dict a, dict b):
    if not a or not b:
        return {}
    out = _mul_fast(a, b, {})
    return _mul_slow(a, b, {}) if out is None else out


def mul_sub(dict a, dict b, dict c):
    if not a or not b:
        return {k: -v for k, v in c.items()}
    out = _mul_fast(a, b, c)
    return _mul_slow(a, b, c) if out is None else out


def add(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = a.copy()
    cdef object s
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def sub(dict a, dict b):
    cdef dict out = a.copy()
    cdef object s
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(dict a, object c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def evaluate(dict a, x, y, z):
    if not a:
        return 0
    cdef long long key
    cdef long long i, j, k, di = 0, dj = 0, dk = 0
    for ko in a:
        key = ko
        i = key >> (2 * SHIFT)
        j = (key >> SHIFT) & MASK
        k = key & MASK
        if i > di:
            di = i
        if j > dj:
            dj = j
        if k > dk:
            dk = k
    cdef list px = _powers(x, di)
    cdef list py = _powers(y, dj)
    cdef list pz = _powers(z, dk)
    total = 0
    for ko, c in a.items():
        key = ko
        total += c * px[key >> (2 * SHIFT)] * py[(key >> SHIFT) & MASK] * pz[key & MASK]
    return total


cdef list _powers(object v, long long d):
    cdef list out = [1] * (d + 1)
    cdef long long e
    for e in range(1, d + 1):
        out[e] = out[e - 1] * v
    return out
