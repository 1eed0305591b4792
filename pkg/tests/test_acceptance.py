"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary
(section "acceptance criteria"); the assertion then fails the test if the
criterion is not met.  All checks are exact except criterion 7, which is a
floating-point check at tolerance 1e-9.
"""

import random
import time

import pytest

from conftest import ACCEPTANCE_RESULTS
from tracering.charring import thm1_generators, thm2_generators, thm5_generators, thm6_generators
from tracering.charring import verify_thm1_reduction, verify_thm2_reduction
from tracering.fgword import concat, invert, is_palindrome, power, random_word, reverse
from tracering.mpoly import Poly, UniPoly, chebyshev
from tracering.pretzel import explicit_Q, explicit_Rn, pretzel_words, verify_lemma31, verify_prop32
from tracering.trace import TraceCache, TraceReducer, oracle_check, trace_poly
from tracering.variety import (
    TorusKnotError,
    component_count,
    identity_suite,
    irreducibility_certificate,
    numeric_spotchecks,
)

pytestmark = pytest.mark.acceptance

SEED = 7
N_WORDS = 200


def record(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {key}  ({detail})")
    assert ok, f"criterion {key} failed: {detail}"


def _corpus(seed: int = SEED, count: int = N_WORDS):
    rng = random.Random(seed)
    return [random_word(rng, 20, 4) for _ in range(count)]


def test_1_trace_oracle_equivalence():
    words = _corpus()
    reducer = TraceReducer(cache=TraceCache())
    start = time.perf_counter()
    failures = [i for i, u in enumerate(words) if not oracle_check(u, 100, seed=i, poly=reducer.trace(u))]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    record("1 trace oracle equivalence", ok,
           f"{N_WORDS - len(failures)}/{N_WORDS} words x 100 trials exact, {elapsed:.1f}s < 30s")


def test_2_closed_forms_reproduced():
    import sympy

    mismatched = [n for n in range(-3, 7)
                  if list(thm1_generators("AWAwa", n)) != [explicit_Q(), explicit_Rn(n)]]
    # the printed form against the 7-term formula, parsed by an independent CAS
    x, y, z = sympy.symbols("x y z")
    reference = sympy.Poly(sympy.expand(x - x * y + (-3 + x**2 + y**2) * z - x * y * z**2 + z**3), x, y, z)
    q = thm1_generators("AWAwa", 0)[0]
    printed = sympy.Poly(sympy.sympify(str(q).replace("^", "**")), x, y, z)
    terms_ok = printed == reference and len(reference.terms()) == 7 and len(q) == 7
    ok = not mismatched and terms_ok
    record("2 closed forms Q and R_n", ok,
           f"n in [-3,6] mismatches={mismatched}; Q prints as '{q}' ({len(q)} terms)")


def test_3_reduction_identities():
    rng = random.Random(SEED)
    relators = [random_word(rng, 8, 3) for _ in range(20)]
    total = bad = checks = 0
    for r in relators:
        for n in range(-3, 6):
            for cert in (verify_thm1_reduction(r, n), verify_thm2_reduction(r, n)):
                total += 1
                checks += len(cert.checks)
                bad += not cert.passed
    record("3 reduction identities", bad == 0,
           f"{total - bad}/{total} certificates, {checks} exact identities, 20 relators x n in [-3,5]")


def test_4_lemma_suite():
    rng = random.Random(SEED)
    P = trace_poly
    t = UniPoly.gen()
    counts: dict[str, list[bool]] = {k: [] for k in ("def", "zero", "hom", "1.3", "tr1", "tr2", "tr3", "tr4")}
    for _ in range(100):
        u, v = random_word(rng, 8, 4), random_word(rng, 8, 4)
        c, d = random_word(rng, 3, 3, 1), random_word(rng, 3, 3, 1)
        k = rng.randint(-4, 4)
        counts["def"].append(
            reverse(concat(u, v)) == concat(reverse(v), reverse(u))
            and reverse(power(u, k)) == power(reverse(u), k)
            and reverse(invert(u)) == invert(reverse(u))
            and reverse(reverse(u)) == u
        )
        counts["zero"].append(P(concat(u, v)) == P(concat(reverse(u), reverse(v))))
        j = rng.randint(-60, 60)
        s, sp = chebyshev(j), chebyshev(j - 1)
        counts["hom"].append(s * s - t * s * sp + sp * sp == UniPoly.const(1))
        counts["1.3"].append(
            P(concat(u, c, d)) + P(concat(u, d, c))
            == -P(concat(c, invert(d))) * P(u) + P(c) * P(concat(u, d)) + P(d) * P(concat(u, c))
        )
        counts["tr1"].append(P(u) == P(invert(u)))
        counts["tr2"].append(P(concat(u, v)) == P(concat(v, u)))
        counts["tr3"].append(P(concat(v, c)) + P(concat(v, invert(c))) == P(c) * P(v))
        counts["tr4"].append(P(concat(u, invert(c), v)) == P(c) * P(concat(u, v)) - P(concat(u, c, v)))
    summary = ", ".join(f"{k} {sum(r)}/{len(r)}" for k, r in counts.items())
    record("4 lemma suite", all(all(r) for r in counts.values()), summary)


def test_5_pretzel_word_lemmas():
    lemma = [m for m in range(-4, 6) if not verify_lemma31(m)]
    pairs = [(m, n) for m in range(-2, 4) for n in range(-2, 4)]
    prop = [p for p in pairs if not verify_prop32(*p)]
    palin = [p for p in pairs if not is_palindrome(pretzel_words(*p).relator)]
    ok = not (lemma or prop or palin)
    record("5 pretzel word lemmas", ok,
           f"lemma failures {lemma}, relator failures {prop}, non-palindromes {palin} over {len(pairs)} pairs")


def test_6_variety_pipeline():
    ids = [n for n in range(-5, 9) if not identity_suite(n).passed]
    irr = [n for n in (-3, -2, -1, 3, 4, 5, 6) if not irreducibility_certificate(n).passed]
    # informational: t0 has the square factor (y-1)^2 when 3 | 2n+1, so a literal
    # square-free requirement fails there; the certificate uses "t0 is not a square"
    strict = [n for n in (-3, -2, -1, 3, 4, 5, 6)
              if not irreducibility_certificate(n, require_squarefree=True).passed]
    expected = {3: 2, 5: 2, 6: 2, 4: 3, -2: 3}
    counts = {n: component_count(n) for n in expected}
    torus = []
    for n in (0, 1, 2):
        try:
            component_count(n)
        except TorusKnotError:
            torus.append(n)
    ok = not ids and not irr and counts == expected and torus == [0, 1, 2]
    record("6 variety pipeline", ok,
           f"identity failures {ids}, certificate failures {irr}, counts {counts}, "
           f"torus errors {torus}; t0 not square-free at n={strict}")


def test_7_numeric_spotchecks():
    results = {n: numeric_spotchecks(n, 1e-9) for n in range(4, 9)}
    worst = "; ".join(f"n={n}: {c.checks[0].witness}" for n, c in results.items())
    record("7 numeric cosine roots (tol 1e-9)", all(c.passed for c in results.values()), worst)


def test_8_confluence():
    words = _corpus(seed=SEED + 1)
    left = TraceReducer("leftmost", TraceCache())
    right = TraceReducer("rightmost", TraceCache())
    same = sum(left.trace(u) == right.trace(u) for u in words)
    record("8 confluence of reduction strategies", same == len(words),
           f"{same}/{len(words)} words agree structurally")


def test_palindromic_specialization_side_check():
    # not a numbered criterion, but the n = 0 families must coincide
    rng = random.Random(SEED)
    for _ in range(10):
        r = random_word(rng, 8, 3)
        assert thm1_generators(r, 0).generators == thm5_generators(r).generators
        assert thm2_generators(r, 0).generators == thm6_generators(r).generators
        assert isinstance(thm1_generators(r, 0)[0], Poly)
