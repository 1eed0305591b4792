import pytest

from tracering.charring import thm1_generators, thm1_q
from tracering.fgword import IDENTITY, are_conjugate, as_word, concat, is_palindrome, reverse
from tracering.mpoly import ZERO, X, Y, Z, Poly
from tracering.pretzel import (
    TREFOIL_R,
    compare_trefoil_family_presentations,
    conjugated_relator,
    explicit_Q,
    explicit_Rn,
    explicit_Rn_variant,
    joint_vanishing,
    pretzel_generators,
    pretzel_words,
    sample_points,
    verify_lemma31,
    verify_prop32,
    verify_thm3,
)
from tracering.trace import trace_poly


@pytest.mark.parametrize(
    "m, s, u",
    [(1, "1", "w"), (0, "a", "awa"), (2, "WAw", "wAWAw"), (-1, "Wawa", "(awaW)^2 w")],
)
def test_pretzel_words_small_m(m, s, u):
    pw = pretzel_words(m, 1)
    assert pw.s == as_word(s)
    assert pw.u == as_word(u)


def test_r_parity_cases():
    # m = 1 so s = 1 and u = w
    assert pretzel_words(1, 1).r == as_word("awAWA")
    assert pretzel_words(1, 2).r == as_word("awaWA W")
    assert pretzel_words(1, 3).r == as_word("w awAWA W")
    assert pretzel_words(1, 0).r == as_word("W awaWA")


@pytest.mark.parametrize("m", range(-4, 6))
def test_lemma31(m):
    assert verify_lemma31(m)
    pw = pretzel_words(m, 0)
    assert pw.u == concat(reverse(pw.s), "w", pw.s)


@pytest.mark.parametrize("m", range(-2, 4))
@pytest.mark.parametrize("n", range(-2, 4))
def test_prop32(m, n):
    assert verify_prop32(m, n)
    pw = pretzel_words(m, n)
    assert is_palindrome(pw.relator)
    assert pw.relator == conjugated_relator(pw)


@pytest.mark.parametrize("n", range(-2, 5))
def test_prop32_trefoil_family(n):
    assert verify_prop32(1, n)


def test_relators_for_different_knots_are_not_conjugate():
    a, b = pretzel_words(1, 1), pretzel_words(1, 2)
    assert not are_conjugate(a.relator, b.knot_relator(), allow_inverse=True)
    assert not are_conjugate(a.relator, pretzel_words(2, 1).knot_relator(), allow_inverse=True)


def test_pretzel_generators_definition():
    for m, n in [(1, 1), (0, 2), (2, -1), (-1, 3)]:
        r = pretzel_words(m, n).r
        gens = pretzel_generators(m, n)
        assert gens.provenance == "thm5"
        assert gens[0] == thm1_q(r)
        assert gens[0] == trace_poly(reverse(r)) - trace_poly(concat(~r, "W"))
        assert gens[1] == trace_poly(concat(reverse(r), "a")) - trace_poly(concat(~r, "Wa"))
    assert all(g != ZERO for g in pretzel_generators(1, 1))


def test_explicit_q_has_seven_terms():
    q = explicit_Q()
    assert len(q) == 7
    assert q == X - X * Y + X**2 * Z + Y**2 * Z - 3 * Z - X * Y * Z**2 + Z**3


def test_explicit_r2():
    assert explicit_Rn(2) == (2 + Y) - X**2 + (Y - 1) * X * Z - Z**2
    assert thm1_generators(TREFOIL_R, 2)[1] == explicit_Rn(2)


@pytest.mark.parametrize("n", range(-3, 7))
def test_two_forms_of_rn(n):
    assert explicit_Rn(n) == explicit_Rn_variant(n)


@pytest.mark.parametrize("n", [3, 0, -2])
def test_thm3_examples(n):
    cert = verify_thm3(n)
    assert cert.passed, cert


def test_trefoil_relator_reverses():
    assert reverse(TREFOIL_R) == as_word("awAWA")
    assert TREFOIL_R != IDENTITY


def test_joint_vanishing_of_two_presentations():
    cert = compare_trefoil_family_presentations(3)
    assert cert.passed, cert


def test_joint_vanishing_negative_control():
    closed = (explicit_Q(), explicit_Rn(3))
    pts = sample_points(closed, 4, seed=0)
    assert pts
    assert joint_vanishing(closed, pts)
    wrong = (explicit_Q(), explicit_Rn(4))
    assert not joint_vanishing(wrong, pts)
    assert not joint_vanishing((Poly.const(1),), pts)
