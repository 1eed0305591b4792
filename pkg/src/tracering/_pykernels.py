"""Pure-Python sparse polynomial kernels.

Polynomials are dicts mapping a packed exponent key to a nonzero int
coefficient.  The key for x^i y^j z^k is ``(i << 40) | (j << 20) | k``, so
monomial multiplication is key addition as long as every exponent stays
below 2**20.

The compiled module ``_ckernels`` exposes the same functions.
"""

SHIFT = 20
MASK = (1 << SHIFT) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def sub(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def mul_sub(a, b, c):
    """Return a*b - c in one pass over the product."""
    if len(a) < len(b):
        a, b = b, a
    out = {k: -v for k, v in c.items()}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def evaluate(a, x, y, z):
    if not a:
        return 0
    di = dj = dk = 0
    for key in a:
        i = key >> (2 * SHIFT)
        j = (key >> SHIFT) & MASK
        k = key & MASK
        if i > di:
            di = i
        if j > dj:
            dj = j
        if k > dk:
            dk = k
    px = _powers(x, di)
    py = _powers(y, dj)
    pz = _powers(z, dk)
    total = 0
    for key, c in a.items():
        total += c * px[key >> (2 * SHIFT)] * py[(key >> SHIFT) & MASK] * pz[key & MASK]
    return total


def _powers(v, d):
    out = [1] * (d + 1)
    for e in range(1, d + 1):
        out[e] = out[e - 1] * v
    return out
