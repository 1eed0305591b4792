"""Generator sets for universal character rings of two-generator one-relator groups.

For G = <a, w | u = v> the ideal is generated by the four differences
P_{u t} - P_{v t} for t in {1, a, w, wa}.  For the families

    <a, w | w^n ~r = r^-1 w^(n-1)>      ("thm1")
    <a, w | w^n ~r = r^-1 w^(n-2)>      ("thm2")

(~r is r written backwards) two generators suffice.  The ``verify_*``
functions check, as exact polynomial identities, every combination that
lets the four generators collapse to two.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Sequence

from .certificate import Certificate
from .fgword import IDENTITY, Word, as_word, concat, invert, power, random_word, reverse
from .mpoly import Poly, cheb_y
from .trace import trace_poly

PROVENANCES = ("four-general", "thm1", "thm2", "thm5", "thm6")

STRUCTURED_POOL = ("1", "a", "w", "aw", "wa", "aW", "wA")
DEFAULT_SEED = 7
DEFAULT_N_RANGE = range(-3, 6)

_A = Word.gen("a")
_W = Word.gen("w")


@dataclass(frozen=True)
class Presentation:
    """The relation lhs = rhs in <a, w | lhs = rhs>."""

    lhs: Word
    rhs: Word

    @classmethod
    def parse(cls, lhs: str, rhs: str) -> "Presentation":
        return cls(as_word(lhs), as_word(rhs))

    def relator(self) -> Word:
        return concat(self.lhs, invert(self.rhs))

    def __str__(self) -> str:
        return f"<a, w | {self.lhs} = {self.rhs}>"


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Poly, ...]
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> Poly:
        return self.generators[i]

    def to_json(self) -> dict:
        return {"provenance": self.provenance, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict | str) -> "GeneratorSet":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(Poly.from_json(g) for g in data["generators"]), data["provenance"])


def _P(*parts: Word | str) -> Poly:
    return trace_poly(concat(*(as_word(p) for p in parts)))


def four_generators(p: Presentation) -> GeneratorSet:
    u, v = p.lhs, p.rhs
    gens = tuple(_P(u, t) - _P(v, t) for t in (IDENTITY, _A, _W, concat(_W, _A)))
    return GeneratorSet(gens, "four-general")


class ShiftedDifference:
    """f(t) = P_{w^n ~r t} - P_{r^-1 w^(n-shift) t} for the relation with the given shift."""

    def __init__(self, r: Word | str, n: int, shift: int):
        self.r = as_word(r)
        self.n = n
        self.left = concat(power(_W, n), reverse(self.r))
        self.right = concat(invert(self.r), power(_W, n - shift))

    def __call__(self, t: Word | str) -> Poly:
        return _P(self.left, t) - _P(self.right, t)

    def presentation(self) -> Presentation:
        return Presentation(self.left, self.right)


def thm1_q(r: Word | str) -> Poly:
    r = as_word(r)
    return _P(reverse(r)) - _P(invert(r), power(_W, -1))


def thm2_q(r: Word | str) -> Poly:
    r = as_word(r)
    return _P(reverse(r)) - _P(invert(r), power(_W, -2))


def thm1_presentation(r: Word | str, n: int) -> Presentation:
    return ShiftedDifference(r, n, 1).presentation()


def thm2_presentation(r: Word | str, n: int) -> Presentation:
    return ShiftedDifference(r, n, 2).presentation()


def thm1_generators(r: Word | str, n: int) -> GeneratorSet:
    """Two generators for <a, w | w^n ~r = r^-1 w^(n-1)>."""
    f = ShiftedDifference(r, n, 1)
    return GeneratorSet((thm1_q(r), f(_A)), "thm1")


def thm2_generators(r: Word | str, n: int) -> GeneratorSet:
    """Two generators for <a, w | w^n ~r = r^-1 w^(n-2)>."""
    f = ShiftedDifference(r, n, 2)
    return GeneratorSet((thm2_q(r), f("aW")), "thm2")


def thm5_generators(r: Word | str) -> GeneratorSet:
    """Palindromic relator ~r w r = 1."""
    r = as_word(r)
    rr, ri = reverse(r), invert(r)
    return GeneratorSet((_P(rr) - _P(ri, "W"), _P(rr, "a") - _P(ri, "Wa")), "thm5")


def thm6_generators(r: Word | str) -> GeneratorSet:
    """Palindromic relator ~r w^2 r = 1."""
    r = as_word(r)
    rr, ri = reverse(r), invert(r)
    return GeneratorSet((_P(rr) - _P(ri, "w^-2"), _P(rr, "aW") - _P(ri, "w^-2 aW")), "thm6")


def default_u_pool(seed: int = DEFAULT_SEED, count: int = 20, max_syllables: int = 6) -> list[Word]:
    """Structured test words followed by ``count`` seeded random words."""
    rng = random.Random(seed)
    pool = [as_word(s) for s in STRUCTURED_POOL]
    pool += [random_word(rng, max_syllables, 3) for _ in range(count)]
    return pool


@lru_cache(maxsize=None)
def _default_pool() -> tuple[Word, ...]:
    return tuple(default_u_pool())


def _pool(u_pool: Iterable[Word | str] | None) -> Sequence[Word]:
    if u_pool is None:
        return _default_pool()
    return [as_word(u) for u in u_pool]


def verify_thm1_reduction(r: Word | str, n: int, u_pool: Sequence[Word | str] | None = None) -> Certificate:
    """Check the identities that reduce the four generators to (Q, f_n(a)).

    Q = P_{~r} - P_{r^-1 w^-1},  f_n(t) = P_{w^n ~r t} - P_{r^-1 w^(n-1) t}:

    * f_n(~u) = f_n(u w^-1) - P_{u w^(n-1)} Q for each u in the pool
    * f_n(w) = f_n(1) - P_{w^n} Q and f_n(wa) = f_n(a) - P_{a w^n} Q
    * f_n(1) = -(S_{n-1}(y) + S_{n-2}(y)) Q
    """
    r = as_word(r)
    f = ShiftedDifference(r, n, 1)
    q = thm1_q(r)
    cert = Certificate(title=f"two-generator reduction, shift 1, r={r}, n={n}")
    for u in _pool(u_pool):
        cert.add_identity(
            f"reverse_vs_shift[u={u}]",
            f(reverse(u)),
            f(concat(u, "W")) - _P(u, power(_W, n - 1)) * q,
        )
    cert.add_identity("f(w)_from_f(1)", f(_W), f(IDENTITY) - _P(power(_W, n)) * q)
    cert.add_identity("f(wa)_from_f(a)", f("wa"), f(_A) - _P(_A, power(_W, n)) * q)
    cert.add_identity("f(1)_chebyshev", f(IDENTITY), -(cheb_y(n - 1) + cheb_y(n - 2)) * q)
    return cert


def verify_thm2_reduction(r: Word | str, n: int, u_pool: Sequence[Word | str] | None = None) -> Certificate:
    """Check the identities that reduce the four generators to (Q, f_n(a w^-1)).

    Q = P_{~r} - P_{r^-1 w^-2},  f_n(t) = P_{w^n ~r t} - P_{r^-1 w^(n-2) t}:

    * f_n(~u) = f_n(w u w^-1)
    * f_n(u) + f_n(w u w^-1) = -P_{u w^-2} f_n(1) + P_{u w^-1} f_n(w) + P_w f_n(u w^-1)
    * f_n(1) = -S_{n-2}(y) Q and f_n(w) = -S_{n-1}(y) Q
    * 2 f_n(a) = -P_{a w^-2} f_n(1) + P_{a w^-1} f_n(w) + P_w f_n(a w^-1)
    """
    r = as_word(r)
    f = ShiftedDifference(r, n, 2)
    q = thm2_q(r)
    pw = trace_poly(_W)
    f1, fw = f(IDENTITY), f(_W)
    cert = Certificate(title=f"two-generator reduction, shift 2, r={r}, n={n}")
    for u in _pool(u_pool):
        conj = concat(_W, u, "W")
        cert.add_identity(f"reverse_vs_conjugate[u={u}]", f(reverse(u)), f(conj))
        cert.add_identity(
            f"conjugate_sum[u={u}]",
            f(u) + f(conj),
            -_P(u, "w^-2") * f1 + _P(u, "W") * fw + pw * f(concat(u, "W")),
        )
    cert.add_identity("f(1)_chebyshev", f1, -cheb_y(n - 2) * q)
    cert.add_identity("f(w)_chebyshev", fw, -cheb_y(n - 1) * q)
    cert.add_identity(
        "2f(a)_combination",
        2 * f(_A),
        -_P("a w^-2") * f1 + _P("aW") * fw + pw * f("aW"),
    )
    return cert


def verify_generator_exchange(p: Presentation) -> Certificate:
    """Linear combinations relating the choices of fourth generator.

    With F(t) = P_{u t} - P_{v t} and c, d single letters from different
    generators (any signs, either order):

        F(cd) + F(dc) = -P_{c d^-1} F(1) + P_c F(d) + P_d F(c)

    The case c = a, d = w expresses P_{uaw} - P_{vaw} through the four
    general generators.
    """
    u, v = p.lhs, p.rhs

    def F(t: Word) -> Poly:
        return _P(u, t) - _P(v, t)

    cert = Certificate(title=f"fourth-generator exchange for {p}")
    for g1, g2 in (("a", "w"), ("w", "a")):
        for e1 in (1, -1):
            for e2 in (1, -1):
                c, d = Word.gen(g1, e1), Word.gen(g2, e2)
                cert.add_identity(
                    f"exchange[c={c},d={d}]",
                    F(concat(c, d)) + F(concat(d, c)),
                    -_P(c, invert(d)) * F(IDENTITY) + _P(c) * F(d) + _P(d) * F(c),
                )
    return cert
