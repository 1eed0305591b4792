"""Irreducible components of the (-2, 3, 2n+1)-pretzel knot character variety.

The variety V is the zero set of Q and R_n.  Away from z = 0 and alpha = 0,
eliminating x with R_n leaves

    alpha^2 Q' = (-2 + 3y - y^3 + z^2) T(y, z),   T = t0 + t2 z^2 + z^4,

with

    alpha = (z^2 + y - 1) S_{n-2} - y z^2 S_{n-3}
    beta  = (y^2 + y - 1) S_{n-2} - (y^2 + y - 2 + z^2) S_{n-3}
    t0    = 1 + S_{n-2} S_{n-3} - S_{n-3}^2
    t2    = -(2 + S_{n-2}^2 - S_{n-2} S_{n-3})

(S_k = S_k(y)).  Q' = Q/z and R'_n = R_n + S_{n-2} Q' involve 1/z; they are
only ever handled multiplied through by z.

T is irreducible when t0 is a nonconstant non-square and 4 + S_{n-2}^2 is
not a square; it is not a multiple of -2 + 3y - y^3 + z^2 because
T(2, +-2) = 11 - 3n.  That gives 2 components, plus {z = 0, y = 1} when
3 divides 2n + 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .certificate import Certificate
from .mpoly import ONE, Poly, UniPoly, X, Y, Z, chebyshev, compose_in_y, is_perfect_square, uni_derivative, uni_gcd
from .pretzel import explicit_Q, explicit_Rn

TORUS_KNOT_PARAMETERS = frozenset({0, 1, 2})
CUBIC_FACTOR = -2 + 3 * Y - Y**3 + Z**2


class TorusKnotError(ValueError):
    """n in {0, 1, 2}: the (-2, 3, 2n+1)-pretzel knot is a torus knot."""

    def __init__(self, n: int):
        super().__init__(
            f"n={n}: the (-2,3,{2 * n + 1})-pretzel knot is a torus knot; "
            "the component count requires n not in {0, 1, 2}"
        )
        self.n = n


class CertificateFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class VarietyData:
    n: int
    Q: Poly
    Rn: Poly
    alpha: Poly
    beta: Poly
    t0: UniPoly
    t2: UniPoly
    T: Poly
    p: UniPoly
    q: UniPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Q": str(self.Q),
            "R_n": str(self.Rn),
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "t0": str(self.t0),
            "t2": str(self.t2),
            "T": str(self.T),
            "p": str(self.p),
            "q": str(self.q),
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "VarietyData":
        if isinstance(data, str):
            data = json.loads(data)

        def uni(key):
            return Poly.parse(data[key]).to_uni("y")

        return cls(
            int(data["n"]), Poly.parse(data["Q"]), Poly.parse(data["R_n"]),
            Poly.parse(data["alpha"]), Poly.parse(data["beta"]), uni("t0"), uni("t2"),
            Poly.parse(data["T"]), uni("p"), uni("q"),
        )


def build_variety_data(n: int) -> VarietyData:
    a, b = chebyshev(n - 2, "y"), chebyshev(n - 3, "y")
    y = UniPoly.gen("y")
    ay, by = compose_in_y(a), compose_in_y(b)
    z2 = Z**2
    alpha = (z2 + Y - 1) * ay - Y * z2 * by
    beta = (Y**2 + Y - 1) * ay - (Y**2 + Y - 2 + z2) * by
    t0 = 1 + a * b - b * b
    t2 = -(2 + a * a - a * b)
    T = compose_in_y(t0) + compose_in_y(t2) * z2 + z2 * z2
    p = (y + 2) * a - (y * y + y - 2) * b
    q = (y * b - a) * ((y * y + y - 1) * a - (y * y + y - 2) * b) - (y - 1) * a * b
    return VarietyData(n, explicit_Q(), explicit_Rn(n), alpha, beta, t0, t2, T, p, q)


def identity_suite(n: int) -> Certificate:
    d = build_variety_data(n)
    a, b = chebyshev(n - 2, "y"), chebyshev(n - 3, "y")
    ay = compose_in_y(a)
    y = UniPoly.gen("y")
    cert = Certificate(title=f"variety identities, n={n}")

    cert.add_identity("z_cleared_R_prime", Z * d.Rn + ay * d.Q, -d.alpha * X + d.beta * Z)
    lhs = Z**2 * d.beta**2 - (Y * Z**2 + Y - 1) * d.alpha * d.beta + (Y**2 + Z**2 - 3) * d.alpha**2
    cert.add_identity("factorization", lhs, CUBIC_FACTOR * d.T)
    cert.add_identity(
        "chebyshev_unit_relation", compose_in_y(a * a - y * a * b + b * b), ONE
    )
    disc = d.t2 * d.t2 - 4 * d.t0
    cert.add_identity(
        "discriminant", compose_in_y(disc), compose_in_y((4 + a * a) * (a - b) * (a - b))
    )
    cert.add_identity(
        "t0_product_form", compose_in_y(d.t0), compose_in_y(a * (b - chebyshev(n - 4, "y")))
    )
    q2 = d.q.evaluate(2)
    cert.add("q(2)=3n-11", q2 == 3 * n - 11, f"q(2)={q2}")
    p2 = d.p.evaluate(2)
    cert.add("p(2)=4", p2 == 4, f"p(2)={p2}")
    T2 = d.T.subs(y=2)
    cert.add_identity("T(2,z)", T2, Z**4 - (n + 1) * Z**2 + (n - 1))
    for zv in (2, -2):
        val = d.T.evaluate((0, 2, zv))
        cert.add(f"T(2,{zv})=11-3n", val == 11 - 3 * n, f"T(2,{zv})={val}")
    return cert


def _check_parameter(n: int) -> None:
    if n in TORUS_KNOT_PARAMETERS:
        raise TorusKnotError(n)


def irreducibility_certificate(n: int, require_squarefree: bool = False) -> Certificate:
    """Checkable obstructions showing T(y, z) is irreducible.

    (a) t0 is nonconstant; (b) t0 is not a constant times a square, which
    rules out T = (z^2 + f z + g)(z^2 - f z + g); (c) 4 + S_{n-2}^2 is not a
    square, which rules out T = (z^2 + g)(z^2 + t2 - g) via the discriminant
    identity, also checked here; (d) T(2, +-2) != 0, so T is not a multiple
    of -2 + 3y - y^3 + z^2.

    t0 is square-free only when 3 does not divide 2n + 1; otherwise (y - 1)^2
    divides it.  Square-freeness is reported in ``outputs`` and becomes a
    failing check only with ``require_squarefree=True``.
    """
    _check_parameter(n)
    d = build_variety_data(n)
    a, b = chebyshev(n - 2, "y"), chebyshev(n - 3, "y")
    cert = Certificate(title=f"irreducibility of T, n={n}")

    t0 = d.t0
    cert.add("t0_nonconstant", t0.degree() >= 1, f"deg t0 = {t0.degree()}")
    sqrt_t0 = is_perfect_square(t0.monic()) if t0.degree() >= 1 else None
    cert.add("t0_not_a_square", t0.degree() >= 1 and sqrt_t0 is None,
             None if sqrt_t0 is None else f"t0 = {t0.lc()} * ({sqrt_t0})^2")

    repeated = uni_gcd(t0, uni_derivative(t0)) if t0.degree() >= 1 else None
    squarefree = repeated is not None and repeated.degree() == 0
    cert.outputs["t0"] = str(t0)
    cert.outputs["t0_squarefree"] = squarefree
    if not squarefree and repeated is not None:
        cert.outputs["t0_repeated_part"] = str(repeated)
    if require_squarefree:
        cert.add("t0_squarefree", squarefree, None if squarefree else f"gcd(t0, t0') = {repeated}")

    disc_lhs = d.t2 * d.t2 - 4 * t0
    disc_rhs = (4 + a * a) * (a - b) * (a - b)
    cert.add("discriminant_identity", disc_lhs == disc_rhs,
             None if disc_lhs == disc_rhs else str(disc_lhs - disc_rhs))
    h = is_perfect_square((4 + a * a).monic())
    cert.add("4+S^2_not_a_square", h is None, None if h is None else f"square root {h}")

    values = [d.T.evaluate((0, 2, zv)) for zv in (2, -2)]
    cert.add("T(2,+-2)_nonzero", all(v != 0 for v in values), f"T(2,+-2) = {values}")
    return cert


def _divisible_by_three(n: int) -> bool:
    return math.gcd(2 * n + 1, 3) == 3


def component_report(n: int) -> Certificate:
    """Irreducibility checks plus the component count (raises on torus-knot n)."""
    cert = irreducibility_certificate(n)
    cert.title = f"(-2,3,{2 * n + 1})-pretzel knot character variety, n={n}"
    if cert.passed:
        count = 3 if _divisible_by_three(n) else 2
        cert.outputs["component_count"] = count
        comps = ["{-2 + 3y - y^3 + z^2 = 0} (x = z*beta/alpha)", "{T(y,z) = 0} (x = z*beta/alpha)"]
        if count == 3:
            comps.append("{z = 0, y = 1}")
        cert.outputs["components"] = comps
    return cert


def component_count(n: int) -> int:
    cert = component_report(n)
    if not cert.passed:
        names = ", ".join(c.name for c in cert.failures())
        raise CertificateFailed(f"irreducibility certificate failed for n={n}: {names}")
    return cert.outputs["component_count"]


def numeric_spotchecks(n: int, tol: float = 1e-9) -> Certificate:
    """Floating-point check of the cosine root formulas for S_{n-2} and S_{n-3} - S_{n-4}."""
    if n < 4:
        raise ValueError(f"numeric spot-checks need n >= 4, got {n}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = chebyshev(n - 2, "y")
    diff = chebyshev(n - 3, "y") - chebyshev(n - 4, "y")
    sf = [float(c) for c in s.coeffs]
    df = [float(c) for c in diff.coeffs]

    def ev(cs, t):
        acc = 0.0
        for c in reversed(cs):
            acc = acc * t + c
        return acc

    cert = Certificate(title=f"cosine roots, n={n}, tol={tol}")
    worst = max(abs(ev(sf, 2 * math.cos(j * math.pi / (n - 1)))) for j in range(1, n - 1))
    cert.add("S_{n-2}_roots", worst < tol, f"max residual {worst:.3e}")
    worst = max(
        abs(ev(df, 2 * math.cos((2 * j - 1) * math.pi / (2 * n - 5)))) for j in range(1, n - 2)
    )
    cert.add("S_{n-3}-S_{n-4}_roots", worst < tol, f"max residual {worst:.3e}")
    cert.add("root_counts_match_degrees", s.degree() == n - 2 and diff.degree() == n - 3)
    return cert
