"""Seeded property suites behind ``tracering verify``.

Each suite returns one :class:`Certificate` whose checks are the individual
identity instances, so a failure names the exact instance that broke.
"""

from __future__ import annotations

import random

from .certificate import Certificate
from .charring import (
    Presentation,
    thm1_generators,
    thm2_generators,
    thm5_generators,
    thm6_generators,
    verify_generator_exchange,
    verify_thm1_reduction,
    verify_thm2_reduction,
)
from .fgword import concat, invert, power, random_word, reverse
from .mpoly import chebyshev
from .pretzel import verify_lemma31, verify_prop32, verify_thm3
from .trace import TraceReducer, oracle_check, trace_poly
from .variety import (
    TORUS_KNOT_PARAMETERS,
    component_count,
    identity_suite,
    irreducibility_certificate,
    numeric_spotchecks,
)

DEFAULT_SEED = 7
DEFAULT_RANGES = {
    "trace": (-4, 4),
    "charring": (-3, 5),
    "pretzel": (-2, 3),
    "variety": (-5, 8),
}


def _summarize(cert: Certificate, group: str, results: list[bool]) -> None:
    cert.add(group, all(results), f"{sum(results)}/{len(results)} instances")


def trace_suite(n_range=DEFAULT_RANGES["trace"], seed: int = DEFAULT_SEED, count: int = 200,
                trials: int = 100) -> Certificate:
    """Oracle equivalence, confluence and the trace identities on random words.

    ``n_range`` bounds the exponents k used for the power identity.
    """
    rng = random.Random(seed)
    cert = Certificate(title=f"trace suite (seed={seed}, words={count})")
    words = [random_word(rng, 20, 4) for _ in range(count)]
    left = TraceReducer("leftmost")

    oracle, confluent, degree = [], [], []
    for i, u in enumerate(words):
        p = trace_poly(u)
        oracle.append(oracle_check(u, trials, seed=seed * 1000 + i, poly=p))
        confluent.append(left.trace(u) == p)
        degree.append(p.degree() <= u.letter_length())
    _summarize(cert, "oracle_equivalence", oracle)
    _summarize(cert, "confluence_leftmost_vs_rightmost", confluent)
    _summarize(cert, "degree_bound", degree)

    lo, hi = n_range
    inv, cyc, rev, fourterm, cayley, powers = [], [], [], [], [], []
    for _ in range(count // 2):
        u, v = random_word(rng, 8, 3), random_word(rng, 8, 3)
        c, d = random_word(rng, 3, 2, 1), random_word(rng, 3, 2, 1)
        inv.append(trace_poly(u) == trace_poly(invert(u)))
        cyc.append(trace_poly(concat(u, v)) == trace_poly(concat(v, u)))
        rev.append(trace_poly(concat(u, v)) == trace_poly(concat(reverse(u), reverse(v))))
        fourterm.append(
            trace_poly(concat(u, c, d)) + trace_poly(concat(u, d, c))
            == -trace_poly(concat(c, invert(d))) * trace_poly(u)
            + trace_poly(c) * trace_poly(concat(u, d))
            + trace_poly(d) * trace_poly(concat(u, c))
        )
        cayley.append(
            trace_poly(concat(u, c, v)) + trace_poly(concat(u, invert(c), v))
            == trace_poly(c) * trace_poly(concat(u, v))
        )
        k = rng.randint(lo, hi)
        powers.append(reverse(power(u, k)) == power(reverse(u), k))
    _summarize(cert, "inverse_invariance", inv)
    _summarize(cert, "cyclic_invariance", cyc)
    _summarize(cert, "reversal_of_both_factors", rev)
    _summarize(cert, "four_term_identity", fourterm)
    _summarize(cert, "sum_of_inverse_insertions", cayley)
    _summarize(cert, "reverse_commutes_with_power", powers)

    hom = []
    for k in range(lo, hi + 1):
        s, sp = chebyshev(k), chebyshev(k - 1)
        t = chebyshev(1)
        hom.append(s * s - t * s * sp + sp * sp == 1)
    _summarize(cert, "chebyshev_unit_relation", hom)
    return cert


def charring_suite(n_range=DEFAULT_RANGES["charring"], seed: int = DEFAULT_SEED, relators: int = 20,
                   u_pool=None) -> Certificate:
    """Reduction identities for seeded random relator words r over a range of n."""
    rng = random.Random(seed)
    rs = [random_word(rng, 8, 3) for _ in range(relators)]
    lo, hi = n_range
    cert = Certificate(title=f"charring suite (seed={seed}, n in [{lo},{hi}], relators={relators})")
    red1, red2 = [], []
    for r in rs:
        for n in range(lo, hi + 1):
            red1.append(verify_thm1_reduction(r, n, u_pool).passed)
            red2.append(verify_thm2_reduction(r, n, u_pool).passed)
    _summarize(cert, "shift1_reduction", red1)
    _summarize(cert, "shift2_reduction", red2)

    palin = []
    for r in rs:
        palin.append(thm1_generators(r, 0).generators == thm5_generators(r).generators)
        palin.append(thm2_generators(r, 0).generators == thm6_generators(r).generators)
    _summarize(cert, "palindromic_specialization", palin)

    exch = []
    for _ in range(relators):
        p = Presentation(random_word(rng, 6, 3), random_word(rng, 6, 3))
        exch.append(verify_generator_exchange(p).passed)
    _summarize(cert, "fourth_generator_exchange", exch)
    return cert


def pretzel_suite(n_range=DEFAULT_RANGES["pretzel"], seed: int = DEFAULT_SEED) -> Certificate:
    lo, hi = n_range
    cert = Certificate(title=f"pretzel suite (m, n in [{lo},{hi}])")
    _summarize(cert, "u_is_reversed_s_w_s", [verify_lemma31(m) for m in range(lo, hi + 1)])
    _summarize(cert, "palindromic_relator",
               [verify_prop32(m, n) for m in range(lo, hi + 1) for n in range(lo, hi + 1)])
    _summarize(cert, "closed_forms_Q_R_n", [verify_thm3(n).passed for n in range(lo, hi + 1)])
    return cert


def variety_suite(n_range=DEFAULT_RANGES["variety"], seed: int = DEFAULT_SEED) -> Certificate:
    lo, hi = n_range
    cert = Certificate(title=f"variety suite (n in [{lo},{hi}])")
    ns = range(lo, hi + 1)
    _summarize(cert, "identity_suite", [identity_suite(n).passed for n in ns])
    hyperbolic = [n for n in ns if n not in TORUS_KNOT_PARAMETERS]
    _summarize(cert, "irreducibility_certificate",
               [irreducibility_certificate(n).passed for n in hyperbolic])
    _summarize(cert, "component_count_rule",
               [component_count(n) == (3 if (2 * n + 1) % 3 == 0 else 2) for n in hyperbolic])
    _summarize(cert, "numeric_cosine_roots",
               [numeric_spotchecks(n, 1e-9).passed for n in ns if n >= 4])
    return cert


SUITES = {
    "trace": trace_suite,
    "charring": charring_suite,
    "pretzel": pretzel_suite,
    "variety": variety_suite,
}


def run_suite(name: str, n_range=None, seed: int = DEFAULT_SEED) -> Certificate:
    return SUITES[name](n_range or DEFAULT_RANGES[name], seed=seed)
