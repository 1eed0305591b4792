"""Exact polynomial arithmetic.

:class:`Poly` is a sparse polynomial in Z[x, y, z] with arbitrary-precision
integer coefficients.  :class:`UniPoly` is a dense univariate polynomial over
the rationals, used for Chebyshev polynomials and the square-free and
perfect-square tests.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels

_S = kernels.SHIFT
_M = kernels.MAX_EXPONENT
VARS = ("x", "y", "z")


def _pack(i: int, j: int, k: int) -> int:
    if min(i, j, k) < 0 or max(i, j, k) > _M:
        raise ValueError(f"exponent out of range: {(i, j, k)}")
    return (i << (2 * _S)) | (j << _S) | k


def _unpack(key: int) -> tuple[int, int, int]:
    return key >> (2 * _S), (key >> _S) & _M, key & _M


def _grlex(key: int):
    i, j, k = _unpack(key)
    return (i + j + k, i, j, k)


class Poly:
    """Sparse polynomial in Z[x, y, z].

    Instances are immutable.  Equality is structural, which coincides with
    polynomial equality because zero coefficients are never stored.

    >>> x, y, z = Poly.gens()
    >>> (x + z) * (x - z)
    Poly('x^2 - z^2')
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        t = {}
        if terms:
            for (i, j, k), c in terms.items():
                if not isinstance(c, int):
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = c.numerator
                    else:
                        raise TypeError(f"coefficient must be an integer, got {c!r}")
                if c:
                    key = _pack(i, j, k)
                    t[key] = t.get(key, 0) + c
                    if not t[key]:
                        del t[key]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "Poly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, c: int = 1) -> "Poly":
        return cls._raw({_pack(i, j, k): c} if c else {})

    @classmethod
    def gens(cls) -> tuple["Poly", "Poly", "Poly"]:
        return X, Y, Z

    # -- inspection -------------------------------------------------------
    def terms(self) -> dict[tuple[int, int, int], int]:
        """Exponent triple -> coefficient, in canonical (graded lex) order."""
        return {_unpack(k): self._t[k] for k in self._sorted_keys()}

    def _sorted_keys(self) -> list[int]:
        return sorted(self._t, key=_grlex, reverse=True)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._t:
            return -1
        return max(sum(_unpack(k)) for k in self._t)

    def degree_in(self, var: str) -> int:
        idx = VARS.index(var)
        if not self._t:
            return -1
        return max(_unpack(k)[idx] for k in self._t)

    def coefficient(self, i: int = 0, j: int = 0, k: int = 0) -> int:
        return self._t.get(_pack(i, j, k), 0)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return Poly.const(other.numerator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(kernels.add(self._t, o._t))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(kernels.sub(self._t, o._t))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(kernels.sub(o._t, self._t))

    def __neg__(self):
        return Poly._raw({k: -v for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly._raw(kernels.scale(self._t, other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._raw(kernels.mul(self._t, o._t))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_sub(self, other: "Poly", minus: "Poly") -> "Poly":
        """``self * other - minus`` computed in a single pass."""
        return Poly._raw(kernels.mul_sub(self._t, other._t, minus._t))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- evaluation -------------------------------------------------------
    def evaluate(self, at: Iterable) -> int | Fraction:
        """Exact value at the point ``at = (x, y, z)``."""
        x, y, z = at
        return kernels.evaluate(self._t, x, y, z)

    def subs(self, x=None, y=None, z=None) -> "Poly":
        """Substitute integer values for any subset of the variables."""
        vals = (x, y, z)
        out: dict[tuple[int, int, int], int] = {}
        for key, c in self._t.items():
            e = list(_unpack(key))
            for idx, v in enumerate(vals):
                if v is not None:
                    c = c * v ** e[idx]
                    e[idx] = 0
            t = tuple(e)
            out[t] = out.get(t, 0) + c
        return Poly(out)

    def diff(self, var: str) -> "Poly":
        idx = VARS.index(var)
        out = {}
        for key, c in self._t.items():
            e = list(_unpack(key))
            if e[idx]:
                c *= e[idx]
                e[idx] -= 1
                out[tuple(e)] = c
        return Poly(out)

    def to_uni(self, var: str = "y") -> "UniPoly":
        """View a polynomial that only involves ``var`` as a UniPoly."""
        idx = VARS.index(var)
        coeffs: dict[int, int] = {}
        for key, c in self._t.items():
            e = _unpack(key)
            if any(e[i] for i in range(3) if i != idx):
                raise ValueError(f"polynomial involves variables other than {var}")
            coeffs[e[idx]] = c
        dense = [0] * (max(coeffs, default=-1) + 1)
        for d, c in coeffs.items():
            dense[d] = c
        return UniPoly(dense, var)

    # -- text and JSON ----------------------------------------------------
    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for key in self._sorted_keys():
            c = self._t[key]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, _unpack(key)) if e
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(VARS),
            "terms": [
                {"c": str(self._t[k]), "e": list(_unpack(k))} for k in self._sorted_keys()
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        if list(data.get("vars", [])) != list(VARS):
            raise ValueError(f"expected vars {list(VARS)}")
        return cls({tuple(t["e"]): int(t["c"]) for t in data["terms"]})

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse an integer polynomial expression in x, y, z.

        Accepts ``+ - *``, ``^`` (or ``**``) with nonnegative integer
        exponents, parentheses, and implicit nothing else.
        """
        return _PolyParser(text).parse()


ZERO = Poly._raw({})
ONE = Poly.const(1)
X = Poly.monomial(1, 0, 0)
Y = Poly.monomial(0, 1, 0)
Z = Poly.monomial(0, 0, 1)

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*^()])|([xyz]))")


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                raise ValueError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
            if m.group(1):
                self.toks.append(("int", m.group(1), m.start(1)))
            elif m.group(2):
                op = "^" if m.group(2) == "**" else m.group(2)
                self.toks.append(("op", op, m.start(2)))
            else:
                self.toks.append(("var", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def _take(self, value=None):
        tok = self._peek()
        if tok is None or (value is not None and tok[1] != value):
            where = tok[2] if tok else len(self.text)
            raise ValueError(f"expected {value or 'token'} at position {where}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.toks:
            raise ValueError("empty polynomial")
        p = self._sum()
        if self._peek() is not None:
            raise ValueError(f"trailing input at position {self._peek()[2]}")
        return p

    def _sum(self) -> Poly:
        sign = 1
        if self._peek() and self._peek()[1] in "+-":
            sign = -1 if self._take()[1] == "-" else 1
        acc = self._product() * sign
        while self._peek() and self._peek()[1] in ("+", "-"):
            op = self._take()[1]
            term = self._product()
            acc = acc + term if op == "+" else acc - term
        return acc

    def _product(self) -> Poly:
        acc = self._power()
        while self._peek() and self._peek()[1] == "*":
            self._take()
            acc = acc * self._power()
        return acc

    def _power(self) -> Poly:
        base = self._atom()
        if self._peek() and self._peek()[1] == "^":
            self._take()
            tok = self._take()
            if tok[0] != "int":
                raise ValueError(f"expected integer exponent at position {tok[2]}")
            return base ** int(tok[1])
        return base

    def _atom(self) -> Poly:
        tok = self._take()
        if tok[0] == "int":
            return Poly.const(int(tok[1]))
        if tok[0] == "var":
            return {"x": X, "y": Y, "z": Z}[tok[1]]
        if tok[1] == "(":
            inner = self._sum()
            self._take(")")
            return inner
        if tok[1] == "-":
            return -self._power()
        raise ValueError(f"unexpected {tok[1]!r} at position {tok[2]}")


# ---------------------------------------------------------------------------
# univariate polynomials over Q


class UniPoly:
    """Dense univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c, var: str = "t") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "t") -> "UniPoly":
        return cls([0, 1], var)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def _other(self, other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return UniPoly([p + q for p, q in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly([1], self.var)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([], self.var), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UniPoly(quot, self.var), UniPoly(rem, self.var)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else (self.var if d == 1 else f"{self.var}^{d}")
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)


@lru_cache(maxsize=None)
def _chebyshev_coeffs(k: int) -> tuple[Fraction, ...]:
    t = UniPoly.gen()
    if k == 0:
        return UniPoly([1]).coeffs
    if k == 1:
        return t.coeffs
    if k > 1:
        prev, cur = UniPoly(_chebyshev_coeffs(k - 2)), UniPoly(_chebyshev_coeffs(k - 1))
        return (t * cur - prev).coeffs
    # run the recursion backwards: S_{k-1} = t S_k - S_{k+1}
    nxt, cur = UniPoly(_chebyshev_coeffs(k + 2)), UniPoly(_chebyshev_coeffs(k + 1))
    return (t * cur - nxt).coeffs


def chebyshev(k: int, var: str = "t") -> UniPoly:
    """Chebyshev polynomial S_k with S_0 = 1, S_1 = t, S_{k+1} = t S_k - S_{k-1}.

    Defined for every integer k.

    >>> str(chebyshev(2))
    't^2 - 1'
    >>> chebyshev(-2).evaluate(5)
    Fraction(-1, 1)
    """
    # fill the cache iteratively so large |k| does not recurse deeply
    step = 1 if k >= 0 else -1
    for j in range(0, k, step * 64):
        _chebyshev_coeffs(j)
    return UniPoly(_chebyshev_coeffs(k), var)


def uni_derivative(p: UniPoly) -> UniPoly:
    return UniPoly([i * c for i, c in enumerate(p.coeffs)][1:], p.var)


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def is_squarefree(p: UniPoly) -> bool:
    """No repeated factor: gcd(p, p') is constant.  The zero polynomial is not square-free."""
    if p.is_zero():
        return False
    return uni_gcd(p, uni_derivative(p)).degree() == 0


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def is_perfect_square(p: UniPoly) -> UniPoly | None:
    """Return h with h*h == p over Q (positive leading coefficient), else None.

    The candidate is built from the top coefficient down and then checked
    exactly.
    """
    if p.is_zero():
        return p
    d = p.degree()
    if d % 2:
        return None
    top = _rational_sqrt(p.lc())
    if top is None:
        return None
    m = d // 2
    h = [Fraction(0)] * (m + 1)
    h[m] = top
    for k in range(m - 1, -1, -1):
        # coefficient of t^(m+k) in h^2 is 2 h_m h_k + sum_{i+j=m+k, k<i,j<m} h_i h_j
        rest = sum(h[i] * h[m + k - i] for i in range(k + 1, m))
        h[k] = (p.coeffs[m + k] - rest) / (2 * top)
    cand = UniPoly(h, p.var)
    return cand if cand * cand == p else None


def compose_in_y(u: UniPoly) -> Poly:
    """Embed an integral univariate polynomial as a polynomial in y."""
    return embed(u, "y")


def embed(u: UniPoly, var: str = "y") -> Poly:
    if not u.is_integral():
        raise ValueError(f"non-integer coefficient in {u}")
    idx = VARS.index(var)
    terms = {}
    for d, c in enumerate(u.coeffs):
        if c:
            e = [0, 0, 0]
            e[idx] = d
            terms[tuple(e)] = c.numerator
    return Poly(terms)


def cheb_y(k: int) -> Poly:
    """S_k(y) as an element of Z[x, y, z]."""
    return _cheb_y(k)


@lru_cache(maxsize=None)
def _cheb_y(k: int) -> Poly:
    return embed(chebyshev(k), "y")
