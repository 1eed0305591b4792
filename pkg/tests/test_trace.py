import random
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given

from strategies import nonempty_words, words
from tracering.fgword import Word, concat, invert, parse_word, random_word, reverse
from tracering.mpoly import X, Y, Z, Poly
from tracering.trace import (
    Sl2Matrix,
    TraceCache,
    TraceReducer,
    evaluate_word,
    oracle_check,
    random_sl2_pair,
    trace_coordinates,
    trace_poly,
)


@pytest.mark.parametrize(
    "u, expected",
    [
        ("1", Poly.const(2)),
        ("a", X),
        ("w", Y),
        ("aw", Z),
        ("aW", X * Y - Z),
        ("aaw", X * Z - Y),
        ("awAW", X**2 + Y**2 + Z**2 - X * Y * Z - 2),
        ("a^2", X**2 - 2),
        ("A^3", X**3 - 3 * X),
        ("(aw)^2", Z**2 - 2),
    ],
)
def test_examples(u, expected):
    assert trace_poly(u) == expected
    assert oracle_check(u, 100)


def test_oracle_rejects_wrong_polynomial():
    assert not oracle_check("awAW", 20, poly=X**2 + Y**2 + Z**2 - X * Y * Z)
    assert not oracle_check("aW", 20, poly=X * Y + Z)


def test_oracle_requires_a_trial():
    with pytest.raises(ValueError):
        oracle_check("a", 0)


def test_random_sl2_pair_is_deterministic():
    for seed in range(50):
        A, W = random_sl2_pair(seed)
        assert A.det() == 1 and W.det() == 1
        assert (A, W) == random_sl2_pair(seed)


def test_sl2_matrix_checks_determinant():
    Sl2Matrix(1, 0, 0, 1)
    with pytest.raises(ValueError):
        Sl2Matrix(2, 0, 0, 1)


def test_matrix_power_and_inverse():
    A, _ = random_sl2_pair(3)
    assert A @ A.inverse() == Sl2Matrix(1, 0, 0, 1)
    assert A**3 == A @ A @ A
    assert A**-2 == A.inverse() @ A.inverse()
    assert A**0 == Sl2Matrix(1, 0, 0, 1)


@given(words(12))
def test_matches_matrix_oracle(u):
    assert oracle_check(u, 10)


@given(words(10))
def test_confluence_of_strategies(u):
    assert TraceReducer("leftmost").trace(u) == TraceReducer("rightmost").trace(u)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        TraceReducer("middle")


@given(words(10))
def test_tr1_inverse(u):
    assert trace_poly(u) == trace_poly(invert(u))


@given(words(6), words(6))
def test_tr2_cyclic(u, v):
    assert trace_poly(concat(u, v)) == trace_poly(concat(v, u))


@given(nonempty_words(3), words(6))
def test_tr3_sum_of_inverse_products(a, b):
    lhs = trace_poly(concat(b, a)) + trace_poly(concat(b, invert(a)))
    assert lhs == trace_poly(a) * trace_poly(b)


@given(nonempty_words(3), words(4), words(4))
def test_tr4_negative_exponent_elimination(a, b, c):
    lhs = trace_poly(concat(b, invert(a), c))
    assert lhs == trace_poly(a) * trace_poly(concat(b, c)) - trace_poly(concat(b, a, c))


@given(words(6), words(6))
def test_reversal_of_both_factors(u, v):
    assert trace_poly(concat(u, v)) == trace_poly(concat(reverse(u), reverse(v)))
    assert trace_poly(u) == trace_poly(reverse(u))


@given(words(5), nonempty_words(3), nonempty_words(3))
def test_four_term_identity(u, c, d):
    P = trace_poly
    lhs = P(concat(u, c, d)) + P(concat(u, d, c))
    rhs = -P(concat(c, invert(d))) * P(u) + P(c) * P(concat(u, d)) + P(d) * P(concat(u, c))
    assert lhs == rhs


@given(words(10))
def test_degree_bound(u):
    assert trace_poly(u).degree() <= u.letter_length()


def test_reversal_oracle_traces_agree():
    rng = random.Random(5)
    for i in range(20):
        u, v = random_word(rng, 5, 3), random_word(rng, 5, 3)
        A, W = random_sl2_pair(i)
        lhs = evaluate_word(concat(u, v), A, W).trace()
        rhs = evaluate_word(concat(reverse(u), reverse(v)), A, W).trace()
        assert lhs == rhs


def test_trace_coordinates():
    A, W = random_sl2_pair(11)
    assert trace_coordinates(A, W) == (A.trace(), W.trace(), (A @ W).trace())
    assert evaluate_word(parse_word("aW"), A, W) == A @ W.inverse()


def test_cache_entries_match_oracle():
    cache = TraceCache()
    rng = random.Random(2)
    for _ in range(5):
        trace_poly(random_word(rng, 8, 3), cache=cache)
    assert len(cache) > 0
    for key, p in cache.items():
        assert oracle_check(Word(key), 5, poly=p)


def test_shared_cache_under_threads():
    cache = TraceCache()
    rng = random.Random(4)
    ws = [random_word(rng, 12, 4) for _ in range(40)]
    serial = [trace_poly(u) for u in ws]
    with ThreadPoolExecutor(8) as pool:
        par = list(pool.map(lambda u: trace_poly(u, cache=cache), ws * 3))
    assert par == serial * 3
