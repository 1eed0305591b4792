"""Fricke trace polynomials of words in F(a, w).

For every word u there is a unique P_u in Z[x, y, z] with
``tr u(A, W) = P_u(tr A, tr W, tr AW)`` for all A, W in SL2.  The reducer
below computes it by rewriting with the SL2 trace identities::

    tr X = tr X^-1,   tr XY = tr YX,   tr B A^-1 C = tr A tr BC - tr BAC

Words are first cyclically reduced.  A syllable g^e with e < 0 is removed
with the third identity (A = g^|e|), a syllable with e >= 2 is lowered with
``P_{U g^e} = P_g P_{U g^(e-1)} - P_{U g^(e-2)}``.  Each step strictly
decreases (number of negative syllables, sum of |exponents|, syllable
count), so the rewriting terminates.  What is left is a rotation of
(aw)^n, handled by c_0 = 2, c_1 = z, c_{n+1} = z c_n - c_{n-1}.

An exact integer-matrix oracle is provided to check the result
independently.
"""

from __future__ import annotations

import random
import sys
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fgword import Syllable, Word, as_word, cyclic_core, cyclic_key
from .mpoly import Poly, X, Y, Z

if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

TWO = Poly.const(2)
_GEN_VAR = {"a": X, "w": Y}

STRATEGIES = ("rightmost", "leftmost")


class TraceCache:
    """Map from canonical cyclic word key to trace polynomial.

    Inserts take a lock; values stored under one key are always equal, so
    concurrent writers are harmless and the last one wins.
    """

    def __init__(self):
        self._data: dict[tuple[Syllable, ...], Poly] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value: Poly) -> None:
        with self._lock:
            self._data[key] = value

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data

    def items(self):
        return list(self._data.items())

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


class _Powers:
    """Lazily extended sequence c_0 = 2, c_1 = v, c_{k+1} = v c_k - c_{k-1}."""

    def __init__(self, v: Poly):
        self.v = v
        self.seq = [TWO, v]
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> Poly:
        seq = self.seq
        if k < len(seq):
            return seq[k]
        with self._lock:
            while len(self.seq) <= k:
                self.seq.append(self.v.mul_sub(self.seq[-1], self.seq[-2]))
            return self.seq[k]


_GEN_POWERS = {"a": _Powers(X), "w": _Powers(Y)}
_ALT_POWERS = _Powers(Z)


class TraceReducer:
    """Rewriting engine for trace polynomials.

    ``strategy`` selects which reducible syllable is rewritten first:
    ``"rightmost"`` picks the last syllable with exponent != 1 and keeps it
    at the right end; ``"leftmost"`` picks the first and keeps it at the
    left end.  Both give the same polynomial, which the test-suite checks.
    """

    def __init__(self, strategy: str = "rightmost", cache: TraceCache | None = None):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        self.strategy = strategy
        self.cache = cache if cache is not None else TraceCache()

    def trace(self, u: Word | str) -> Poly:
        return self._p(as_word(u).syllables)

    def _p(self, syl: Sequence[Syllable]) -> Poly:
        syl = cyclic_core(syl, merged_first=self.strategy == "leftmost")
        n = len(syl)
        if n == 0:
            return TWO
        if n == 1:
            g, e = syl[0]
            return _GEN_POWERS[g][abs(e)]
        key = cyclic_key(syl)
        hit = self.cache.get(key)
        if hit is not None:
            return hit

        if self.strategy == "rightmost":
            i = next((j for j in range(n - 1, -1, -1) if syl[j][1] != 1), None)
        else:
            i = next((j for j in range(n) if syl[j][1] != 1), None)

        if i is None:
            # alternating, all exponents 1: a rotation of (aw)^(n/2)
            val = _ALT_POWERS[n // 2]
        else:
            g, e = syl[i]
            rest = syl[i + 1:] + syl[:i]
            if e < 0:
                val = _GEN_POWERS[g][-e].mul_sub(self._p(rest), self._p(self._join(rest, g, -e)))
            else:
                val = _GEN_VAR[g].mul_sub(
                    self._p(self._join(rest, g, e - 1)), self._p(self._join(rest, g, e - 2))
                )
        self.cache.put(key, val)
        return val

    def _join(self, rest: tuple[Syllable, ...], g: str, e: int) -> tuple[Syllable, ...]:
        # the neighbours of the rewritten syllable use the other generator,
        # so re-attaching g^e never needs free reduction
        if e == 0:
            return _free(rest)
        if self.strategy == "rightmost":
            return rest + ((g, e),)
        return ((g, e),) + rest


def _free(syl: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for g, e in syl:
        if out and out[-1][0] == g:
            e += out.pop()[1]
            if not e:
                continue
        out.append((g, e))
    return tuple(out)


_DEFAULT = TraceReducer()


def default_cache() -> TraceCache:
    return _DEFAULT.cache


def trace_poly(u: Word | str, strategy: str | None = None, cache: TraceCache | None = None) -> Poly:
    """Trace polynomial P_u(x, y, z) with x = tr a, y = tr w, z = tr aw.

    >>> str(trace_poly("aW"))
    'x*y - z'
    >>> str(trace_poly("awAW"))
    '-x*y*z + x^2 + y^2 + z^2 - 2'
    """
    if strategy is None and cache is None:
        return _DEFAULT.trace(u)
    return TraceReducer(strategy or "rightmost", cache).trace(u)


# ---------------------------------------------------------------------------
# exact matrix oracle


@dataclass(frozen=True)
class Sl2Matrix:
    """2x2 matrix [[a, b], [c, d]] with exact (int or Fraction) entries, det 1."""

    a: int | Fraction
    b: int | Fraction
    c: int | Fraction
    d: int | Fraction

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be exactly 1")

    @classmethod
    def _unchecked(cls, a, b, c, d) -> "Sl2Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "a", a)
        object.__setattr__(m, "b", b)
        object.__setattr__(m, "c", c)
        object.__setattr__(m, "d", d)
        return m

    def __matmul__(self, o: "Sl2Matrix") -> "Sl2Matrix":
        return Sl2Matrix._unchecked(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "Sl2Matrix":
        return Sl2Matrix._unchecked(self.d, -self.b, -self.c, self.a)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def __pow__(self, k: int) -> "Sl2Matrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = IDENTITY_MATRIX
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


IDENTITY_MATRIX = Sl2Matrix._unchecked(1, 0, 0, 1)


def random_sl2_pair(seed: int) -> tuple[Sl2Matrix, Sl2Matrix]:
    """Deterministic pair of integer SL2 matrices, each a product of 3-6 shears."""
    rng = random.Random(seed)

    def one() -> Sl2Matrix:
        m = IDENTITY_MATRIX
        upper = rng.random() < 0.5
        for _ in range(rng.randint(3, 6)):
            p = rng.randint(-5, 5)
            m = m @ (Sl2Matrix._unchecked(1, p, 0, 1) if upper else Sl2Matrix._unchecked(1, 0, p, 1))
            upper = not upper
        return m

    return one(), one()


def evaluate_word(u: Word | str, A: Sl2Matrix, W: Sl2Matrix) -> Sl2Matrix:
    mats = {"a": A, "w": W}
    m = IDENTITY_MATRIX
    for g, e in as_word(u).syllables:
        m = m @ (mats[g] ** e)
    return m


def trace_coordinates(A: Sl2Matrix, W: Sl2Matrix) -> tuple:
    return A.trace(), W.trace(), (A @ W).trace()


def oracle_check(u: Word | str, trials: int = 100, seed: int = 0, poly: Poly | None = None) -> bool:
    """Compare P_u against exact matrix traces on ``trials`` random SL2 pairs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    u = as_word(u)
    p = trace_poly(u) if poly is None else poly
    for t in range(trials):
        A, W = random_sl2_pair(seed * 1_000_003 + t)
        if evaluate_word(u, A, W).trace() != p.evaluate(trace_coordinates(A, W)):
            return False
    return True


__all__ = [
    "STRATEGIES",
    "Sl2Matrix",
    "TraceCache",
    "TraceReducer",
    "default_cache",
    "evaluate_word",
    "oracle_check",
    "random_sl2_pair",
    "trace_coordinates",
    "trace_poly",
]
