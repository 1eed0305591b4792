"""(-2, 2m+1, 2n+1)-pretzel knot groups as palindromic one-relator groups.

With u = (a w a w^-1)^(1-m) w the knot group is <a, w | ~r w r = 1> where

    s = a (w^-1 a w a)^(-l)         if m = 2l
        (w^-1 a w a)^(-l)           if m = 2l + 1
    r = s u^(k-1) a w a w^-1 a^-1 u^(-k)     if n = 2k
        s u^k a w a^-1 w^-1 a^-1 u^(-k)      if n = 2k + 1

The (-2, 3, 2n+1) case (m = 1) also has the presentation
<a, w | w^n ~r = r^-1 w^(n-1)> with r = a^-1 w^-1 a^-1 w a, whose two
ideal generators have closed forms Q and R_n in Chebyshev polynomials.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass

from .certificate import Certificate
from .charring import GeneratorSet, thm1_generators, thm5_generators
from .fgword import Word, are_conjugate, as_word, concat, invert, is_palindrome, power, reverse
from .mpoly import X, Y, Z, Poly, cheb_y

TREFOIL_R = as_word("AWAwa")


@dataclass(frozen=True)
class PretzelWords:
    m: int
    n: int
    u: Word
    s: Word
    r: Word

    @property
    def relator(self) -> Word:
        """The palindromic relator ~r w r."""
        return concat(reverse(self.r), "w", self.r)

    def knot_relator(self) -> Word:
        """u^n a w a^-1 w^-1 a^-1 (a^-1 w^-1 a w a u^(n-1))^-1, before conjugation."""
        lhs = concat(power(self.u, self.n), "awAWA")
        rhs = concat("AWawa", power(self.u, self.n - 1))
        return concat(lhs, invert(rhs))


def pretzel_words(m: int, n: int) -> PretzelWords:
    u = concat(power(as_word("awaW"), 1 - m), "w")
    l, m_odd = divmod(m, 2)
    s = power(as_word("Wawa"), -l)
    if not m_odd:
        s = concat("a", s)
    k, n_odd = divmod(n, 2)
    if n_odd:
        r = concat(s, power(u, k), "awAWA", power(u, -k))
    else:
        r = concat(s, power(u, k - 1), "awaWA", power(u, -k))
    return PretzelWords(m, n, u, s, r)


def verify_lemma31(m: int) -> bool:
    """u == ~s w s and u is a palindrome."""
    pw = pretzel_words(m, 0)
    return pw.u == concat(reverse(pw.s), "w", pw.s) and is_palindrome(pw.u)


def conjugated_relator(pw: PretzelWords) -> Word:
    """The relator in the symmetric form u^-k (...) u^-k used to read off r."""
    k, n_odd = divmod(pw.n, 2)
    if n_odd:
        return concat(power(pw.u, -k), "AWAwa", power(pw.u, 2 * k + 1), "awAWA", power(pw.u, -k))
    return concat(power(pw.u, -k), "AWawa", power(pw.u, 2 * k - 1), "awaWA", power(pw.u, -k))


def verify_prop32(m: int, n: int) -> bool:
    """~r w r equals the symmetric relator and is conjugate to the knot relator (up to inversion)."""
    pw = pretzel_words(m, n)
    rel = pw.relator
    return (
        rel == conjugated_relator(pw)
        and are_conjugate(rel, pw.knot_relator(), allow_inverse=True)
        and is_palindrome(rel)
    )


def pretzel_generators(m: int, n: int) -> GeneratorSet:
    """The two ideal generators for the palindromic presentation ~r w r = 1."""
    gs = thm1_generators(pretzel_words(m, n).r, 0)
    return GeneratorSet(gs.generators, "thm5")


def explicit_Q() -> Poly:
    x, y, z = X, Y, Z
    return x - x * y + (-3 + x**2 + y**2) * z - x * y * z**2 + z**3


def explicit_Rn(n: int) -> Poly:
    x, z = X, Z
    S = cheb_y
    return (
        S(n - 2) + S(n - 3) - S(n - 4) - S(n - 5)
        - S(n - 2) * x**2
        + (S(n - 1) + S(n - 3) + S(n - 4)) * x * z
        - (S(n - 2) + S(n - 3)) * z**2
    )


def explicit_Rn_variant(n: int) -> Poly:
    """Same polynomial as :func:`explicit_Rn`, written with S_{n-2} and S_{n-3} only."""
    x, y, z = X, Y, Z
    a, b = cheb_y(n - 2), cheb_y(n - 3)
    return (
        (y + 2) * a - (y**2 + y - 2) * b - a * x**2
        + ((y - 1) * a + y * b) * x * z
        - (a + b) * z**2
    )


def verify_thm3(n: int) -> Certificate:
    gens = thm1_generators(TREFOIL_R, n)
    cert = Certificate(title=f"(-2,3,{2 * n + 1})-pretzel closed forms, n={n}")
    cert.add_identity("Q_closed_form", gens[0], explicit_Q())
    cert.add_identity("R_n_closed_form", gens[1], explicit_Rn(n))
    cert.add_identity("R_n_two_forms_agree", explicit_Rn(n), explicit_Rn_variant(n))
    return cert


# ---------------------------------------------------------------------------
# numerical spot-check that two generator sets cut out the same curve


def _complex_eval(p: Poly, x: complex, y: complex, z: complex) -> tuple[complex, float]:
    """Value and the sum of absolute term values (a scale for relative error)."""
    val, scale = 0j, 0.0
    for (i, j, k), c in p.terms().items():
        t = c * x**i * y**j * z**k
        val += t
        scale += abs(t)
    return val, scale


def sample_points(gens: GeneratorSet | tuple[Poly, Poly], count: int = 6, seed: int = 0,
                  max_starts: int = 400) -> list[tuple[complex, complex, complex]]:
    """Complex points on the common zero set of two polynomials.

    ``y`` is fixed at random values and Newton's method solves for (x, z).
    """
    g1, g2 = tuple(gens)[:2]
    d = [[g.diff(v) for v in ("x", "z")] for g in (g1, g2)]
    rng = random.Random(seed)
    points: list[tuple[complex, complex, complex]] = []
    for _ in range(max_starts):
        if len(points) >= count:
            break
        y = complex(rng.uniform(-2.5, 2.5), rng.uniform(-1, 1))
        x = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        for _ in range(60):
            f1, _s1 = _complex_eval(g1, x, y, z)
            f2, _s2 = _complex_eval(g2, x, y, z)
            j11 = _complex_eval(d[0][0], x, y, z)[0]
            j12 = _complex_eval(d[0][1], x, y, z)[0]
            j21 = _complex_eval(d[1][0], x, y, z)[0]
            j22 = _complex_eval(d[1][1], x, y, z)[0]
            det = j11 * j22 - j12 * j21
            if abs(det) < 1e-14:
                break
            dx = (f1 * j22 - f2 * j12) / det
            dz = (j11 * f2 - j21 * f1) / det
            x, z = x - dx, z - dz
            if abs(x) > 1e6 or abs(z) > 1e6:
                break
            if abs(dx) + abs(dz) < 1e-13 * (1 + abs(x) + abs(z)):
                break
        if not (cmath.isfinite(x) and cmath.isfinite(z)):
            continue
        ok = True
        for g in (g1, g2):
            v, s = _complex_eval(g, x, y, z)
            if abs(v) > 1e-10 * max(s, 1.0):
                ok = False
        if ok and abs(z) > 1e-6:
            points.append((x, y, z))
    return points


def joint_vanishing(gens: GeneratorSet | tuple[Poly, ...], points, rel_tol: float = 1e-7) -> bool:
    for x, y, z in points:
        for g in gens:
            v, s = _complex_eval(g, x, y, z)
            if abs(v) > rel_tol * max(s, 1.0):
                return False
    return True


def compare_trefoil_family_presentations(n: int, count: int = 4, seed: int = 0) -> Certificate:
    """Sample each generator set's zero set and test vanishing of the other set.

    At m = 1 both presentations describe the (-2, 3, 2n+1)-pretzel knot with
    the same generators a, w, so the zero sets must coincide.
    """
    closed = (explicit_Q(), explicit_Rn(n))
    palin = tuple(pretzel_generators(1, n))
    cert = Certificate(title=f"joint vanishing, (-2,3,{2 * n + 1})-pretzel, two presentations")
    pts1 = sample_points(closed, count, seed)
    pts2 = sample_points(palin, count, seed + 1)
    cert.add("found_points_on_closed_form_curve", len(pts1) > 0, str(len(pts1)))
    cert.add("found_points_on_palindromic_curve", len(pts2) > 0, str(len(pts2)))
    cert.add("palindromic_generators_vanish_on_closed_form_points", joint_vanishing(palin, pts1))
    cert.add("closed_form_generators_vanish_on_palindromic_points", joint_vanishing(closed, pts2))
    return cert


__all__ = [
    "PretzelWords",
    "TREFOIL_R",
    "compare_trefoil_family_presentations",
    "conjugated_relator",
    "explicit_Q",
    "explicit_Rn",
    "explicit_Rn_variant",
    "joint_vanishing",
    "pretzel_generators",
    "pretzel_words",
    "sample_points",
    "thm5_generators",
    "verify_lemma31",
    "verify_prop32",
    "verify_thm3",
]
