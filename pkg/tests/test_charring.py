import json
import random

import pytest
from hypothesis import given

from strategies import words
from tracering.certificate import Certificate
from tracering.charring import (
    STRUCTURED_POOL,
    GeneratorSet,
    Presentation,
    ShiftedDifference,
    default_u_pool,
    four_generators,
    thm1_generators,
    thm1_presentation,
    thm1_q,
    thm2_generators,
    thm2_presentation,
    thm2_q,
    thm5_generators,
    thm6_generators,
    verify_generator_exchange,
    verify_thm1_reduction,
    verify_thm2_reduction,
)
from tracering.fgword import IDENTITY, as_word, concat, invert, power, random_word, reverse
from tracering.mpoly import ZERO, X, Y, Z
from tracering.trace import Sl2Matrix, evaluate_word, random_sl2_pair, trace_coordinates, trace_poly

R3 = "AWAwa"
Q = X - X * Y + (-3 + X**2 + Y**2) * Z - X * Y * Z**2 + Z**3


def _matrix_difference(lhs, rhs, t, seed):
    A, W = random_sl2_pair(seed)
    left = evaluate_word(concat(lhs, t), A, W).trace()
    right = evaluate_word(concat(rhs, t), A, W).trace()
    return left - right, trace_coordinates(A, W)


def test_four_generators_for_commuting_relation():
    # only the first three vanish by cyclic invariance; the fourth is
    # P_{a w^2 a} - P_{(wa)^2}, the commutator-trace condition of Z^2
    gens = four_generators(Presentation.parse("aw", "wa"))
    assert list(gens)[:3] == [ZERO] * 3
    assert gens[3] == X * Y * Z - X**2 - Y**2 - Z**2 + 4
    assert gens[3] == -(trace_poly("awAW") - 2)
    assert gens.provenance == "four-general"


def test_commuting_matrices_kill_all_four():
    for p, q in [(1, 2), (-3, 4), (2, -5)]:
        A, W = Sl2Matrix(1, p, 0, 1), Sl2Matrix(1, q, 0, 1)
        for g in four_generators(Presentation.parse("aw", "wa")):
            assert g.evaluate(trace_coordinates(A, W)) == 0


def test_four_generators_identical_sides():
    u = as_word("a^2 W a w^3")
    assert all(g == ZERO for g in four_generators(Presentation(u, u)))


def test_four_generators_commutator():
    gens = four_generators(Presentation.parse("awAW", "1"))
    assert gens[0] == X**2 + Y**2 + Z**2 - X * Y * Z - 4


def test_four_generators_of_shift_one_relation_at_n1():
    gens = four_generators(thm1_presentation(R3, 1))
    assert gens[0] == -Q


def test_four_generators_match_matrix_traces():
    rng = random.Random(12)
    for i in range(10):
        p = Presentation(random_word(rng, 5, 3), random_word(rng, 5, 3))
        gens = four_generators(p)
        for g, t in zip(gens, ("1", "a", "w", "wa")):
            for seed in range(5):
                diff, pt = _matrix_difference(p.lhs, p.rhs, as_word(t), 100 * i + seed)
                assert g.evaluate(pt) == diff


def test_thm1_first_generator_is_q():
    for n in range(-3, 6):
        assert thm1_generators(R3, n)[0] == Q


def test_thm1_second_generator_at_n1():
    # closed form with S_-1 = 0, S_-2 = -1, S_-3 = -y, S_-4 = 1 - y^2
    expected = (0 - 1 + Y - (1 - Y**2)) - 0 * X**2 + (1 - 1 - Y) * X * Z - (0 - 1) * Z**2
    gens = thm1_generators(R3, 1)
    assert gens[1] == expected
    pres = thm1_presentation(R3, 1)
    for seed in range(20):
        diff, pt = _matrix_difference(pres.lhs, pres.rhs, as_word("a"), seed)
        assert gens[1].evaluate(pt) == diff


def test_thm1_trivial_relator():
    gens = thm1_generators(IDENTITY, 0)
    assert list(gens) == [2 - Y, X - (X * Y - Z)]


def test_thm2_trivial_relator():
    gens = thm2_generators(IDENTITY, 0)
    assert gens[0] == 2 - (Y**2 - 2)
    assert gens[1] == trace_poly("aW") - trace_poly("w^-2 aW")


def test_thm2_r_a_n2_matches_word_difference():
    gens = thm2_generators("a", 2)
    pres = thm2_presentation("a", 2)
    assert pres.lhs == as_word("w^2 a") and pres.rhs == as_word("A")
    assert gens[1] == trace_poly(concat(pres.lhs, "aW")) - trace_poly(concat(pres.rhs, "aW"))


@given(words(6))
def test_thm2_n2_first_generator_relation(r):
    f1 = trace_poly(concat("w^2", reverse(r))) - trace_poly(invert(r))
    assert f1 == -thm2_q(r)
    assert thm2_generators(r, 2)[0] == thm2_q(r)


@pytest.mark.parametrize("n", range(-2, 5))
def test_thm1_reduction_for_trefoil_family_relator(n):
    cert = verify_thm1_reduction(R3, n)
    assert cert.passed, cert


@pytest.mark.parametrize("n", [-1, 0, 1, 2])
def test_thm1_reduction_random_relators(n):
    rng = random.Random(n + 100)
    for _ in range(4):
        cert = verify_thm1_reduction(random_word(rng, 8, 3), n, ["a", "w", "aw", "wa", "aW"])
        assert cert.passed, cert


def test_thm1_reduction_trivial_relator():
    assert thm1_q(IDENTITY) == 2 - Y
    assert verify_thm1_reduction(IDENTITY, 3).passed


@pytest.mark.parametrize("n", range(-1, 4))
def test_thm2_reduction_random_relators(n):
    rng = random.Random(n + 200)
    for _ in range(4):
        cert = verify_thm2_reduction(random_word(rng, 8, 3), n, ["a", "w", "aw", "aW"])
        assert cert.passed, cert


@pytest.mark.parametrize("r, n", [(IDENTITY, 0), ("a", 2)])
def test_thm2_reduction_examples(r, n):
    assert verify_thm2_reduction(r, n).passed


def test_reduction_certificate_names():
    cert = verify_thm1_reduction(R3, 2, ["a"])
    assert [c.name for c in cert.checks] == [
        "reverse_vs_shift[u=a]",
        "f(w)_from_f(1)",
        "f(wa)_from_f(a)",
        "f(1)_chebyshev",
    ]
    cert = verify_thm2_reduction(R3, 2, ["a"])
    assert "2f(a)_combination" in [c.name for c in cert.checks]


def test_broken_identity_is_reported_with_witness():
    # a deliberately false identity must fail and carry a witness
    f = ShiftedDifference(R3, 2, 1)
    cert = Certificate()
    cert.add_identity("wrong", f("a"), f("w"))
    assert not cert.passed
    assert cert["wrong"].witness


def test_default_pool():
    pool = default_u_pool()
    assert [str(u) for u in pool[: len(STRUCTURED_POOL)]] == list(STRUCTURED_POOL)
    assert len(pool) == len(STRUCTURED_POOL) + 20
    assert all(len(u) <= 6 for u in pool)
    assert pool == default_u_pool()


@given(words(6))
def test_palindromic_specializations(r):
    assert thm1_generators(r, 0).generators == thm5_generators(r).generators
    assert thm2_generators(r, 0).generators == thm6_generators(r).generators


@given(words(5), words(5))
def test_generator_exchange(u, v):
    cert = verify_generator_exchange(Presentation(u, v))
    assert len(cert.checks) == 8
    assert cert.passed


def test_exchange_expresses_uaw_generator():
    p = Presentation.parse("a^2 w A", "W a w^2")
    F = lambda t: trace_poly(concat(p.lhs, t)) - trace_poly(concat(p.rhs, t))  # noqa: E731
    P = trace_poly
    lhs = F(as_word("aw")) + F(as_word("wa"))
    rhs = -P("aW") * F(IDENTITY) + P("a") * F(as_word("w")) + P("w") * F(as_word("a"))
    assert lhs == rhs


def test_generator_set_json_roundtrip():
    gens = thm2_generators(R3, 3)
    again = GeneratorSet.from_json(json.dumps(gens.to_json()))
    assert again == gens
    with pytest.raises(ValueError):
        GeneratorSet((Q,), "thm9")


def test_presentation_relator():
    p = thm1_presentation("aw", 2)
    assert p.relator() == concat(p.lhs, invert(p.rhs))
    assert p.lhs == concat(power(as_word("w"), 2), reverse(as_word("aw")))


def test_certificate_json_roundtrip():
    cert = verify_thm2_reduction("aW", 1, ["a", "wA"])
    again = Certificate.from_json(cert.dumps())
    assert again.to_json() == cert.to_json()
    data = cert.to_json()
    assert data["pass"] is True
    assert {"name", "pass"} <= set(data["checks"][0])
