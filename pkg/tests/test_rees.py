import random

import pytest
from hypothesis import given, settings, strategies as st

from eqmon import fmon
from eqmon.equational import I, Identity
from eqmon.families import standard_variety_specs, variety_generators
from eqmon.rees import ZERO, build, element_from_name, element_name, parse_word_set_file
from eqmon.words import EMPTY, L, W, Word

letters_pool = [L("x"), L("y"), L("z")]
words_st = st.lists(st.sampled_from(letters_pool), max_size=5).map(Word)


# ---------------------------------------------------------------- construction


def test_build_sizes():
    assert build([W("x y")]).size == 5
    assert build([W("x y x")]).size == 7
    assert build([]).size == 1
    assert build([EMPTY]).size == 2
    assert build([W("x")]).size == 3


def test_element_sets():
    M = build([W("x y")])
    assert M.element_names() == ["1", "x", "y", "x y", "0"]
    M7 = build([W("x y x")])
    assert set(M7.element_names()) == {"1", "x", "y", "x y", "y x", "x y x", "0"}


def test_degenerate_monoids():
    # no generators: everything collapses onto a single absorbing identity
    M0 = build([])
    assert M0.identity is ZERO
    assert M0.multiply(ZERO, ZERO) is ZERO
    # the empty word alone: two elements
    M1 = build([EMPTY])
    assert M1.identity == EMPTY
    assert M1.multiply(EMPTY, EMPTY) == EMPTY


def test_multiply_examples():
    M = build([W("x y")])
    assert M.multiply(W("x"), W("y")) == W("x y")
    assert M.multiply(W("y"), W("x")) is ZERO
    assert M.multiply(ZERO, W("x")) is ZERO
    M7 = build([W("x y x")])
    assert M7.multiply(W("x y"), W("x")) == W("x y x")


def test_multiply_rejects_foreign_elements():
    M = build([W("x y")])
    with pytest.raises(ValueError):
        M.multiply(W("z"), W("x"))


def test_element_names_round_trip():
    M = build([W("x y")])
    for el in M.elements:
        assert element_from_name(element_name(el)) == el or el is ZERO


# ---------------------------------------------------------------- evaluation


def test_evaluate_examples():
    M = build([W("x y")])
    assert M.evaluate(W("x y"), {L("x"): W("x"), L("y"): W("y")}) == W("x y")
    assert M.evaluate(W("x x"), {L("x"): W("x")}) is ZERO
    assert M.evaluate(W("x y x"), {L("x"): EMPTY, L("y"): EMPTY}) == EMPTY
    assert M.evaluate(W("x"), {L("x"): ZERO}) is ZERO


def test_evaluate_missing_image_raises():
    M = build([W("x y")])
    with pytest.raises(KeyError):
        M.evaluate(W("x y"), {L("x"): W("x")})


@given(words_st, words_st, st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_evaluate_is_homomorphism(u, v, rng):
    M = build([W("x y x"), W("z z")])
    psi = {x: rng.choice(M.elements) for x in letters_pool}
    lhs = M.evaluate(u * v, psi)
    rhs = M.multiply(M.evaluate(u, psi), M.evaluate(v, psi))
    assert lhs == rhs or (lhs is ZERO and rhs is ZERO)


# ---------------------------------------------------------------- structure


def test_associativity_of_builtin_family():
    for spec in standard_variety_specs(2):
        M = build(variety_generators(spec))
        assert M.size <= 200
        assert M.check_associative()


def test_identity_element_in_table():
    M = build([W("x y")])
    tab = M.table()
    n = M.size
    e = M.index(M.identity)
    for i in range(n):
        assert tab[e * n + i] == i == tab[i * n + e]


# ---------------------------------------------------------------- satisfaction


def test_satisfies_examples():
    assert build([W("x y")]).satisfies(I("x x = x x x")).holds
    v = build([W("x y x")]).satisfies(I("x y = y x"))
    assert v.fails
    assert v.witness_strings() == {"x": "x", "y": "y"}
    v = build([W("x")]).satisfies_naive(I("x = x x"))
    assert v.fails and v.witness_strings() == {"x": "x"}


def test_satisfies_naive_examples():
    assert build([W("x y")]).satisfies_naive(I("x x y = y x x")).holds
    assert build([EMPTY]).satisfies_naive(I("x y = y x")).holds
    assert build([]).satisfies(I("x = x x")).holds


def test_naive_budget_exhaustion_is_unknown():
    M = build([W("x y x"), W("z z")])
    v = M.satisfies_naive(I("a b c d = d c b a"), budget=100)
    assert v.unknown and "budget" in v.note


def test_unbalanced_identity_fails_when_one_side_feels_extra_letter():
    # y occurs only on one side: setting it to zero breaks the equality
    M = build([W("x")])
    v = M.satisfies(I("x = x y"))
    assert v.fails


def test_match_engine_agrees_with_naive_on_examples():
    cases = [
        ([W("x y")], "x x = x x x"),
        ([W("x y")], "x x y = y x x"),
        ([W("x y x")], "x y = y x"),
        ([W("x")], "x = x x"),
        ([W("x t1 x")], "x t1 x = x x t1"),
        ([W("x z x y t y")], "x z y t x y = x z y t y x"),
    ]
    for gens, ident in cases:
        M = build(gens)
        assert M.satisfies(I(ident)).status == M.satisfies_naive(I(ident)).status


def test_cross_oracle_random_sample():
    rng = random.Random(7)
    pool = letters_pool + [L("t")]
    for _ in range(60):
        gens = [
            Word(rng.choice(pool) for _ in range(rng.randint(1, 6)))
            for _ in range(rng.randint(1, 2))
        ]
        M = build(gens)
        ident = Identity(
            Word(rng.choice(pool) for _ in range(rng.randint(0, 6))),
            Word(rng.choice(pool) for _ in range(rng.randint(0, 6))),
        )
        a = M.satisfies(ident)
        b = M.satisfies_naive(ident)
        assert not b.unknown
        assert a.status == b.status, (gens, str(ident))


def test_failing_witness_replays():
    M = build([W("x y x")])
    v = M.satisfies(I("x y = y x"))
    psi = v.witness
    assert M.evaluate(W("x y"), psi) != M.evaluate(W("y x"), psi)


def test_parallel_scan_matches_sequential():
    M = build([W("x y x")])
    for ident in (I("x y = y x"), I("x x = x x x")):
        seq = M.satisfies(ident, jobs=1)
        par = M.satisfies(ident, jobs=2)
        assert seq.status == par.status
        assert seq.witness_strings() == par.witness_strings()


# ---------------------------------------------------------------- family-level checks


def test_square_identities_hold_across_builtin_family():
    for spec in standard_variety_specs(2):
        M = build(variety_generators(spec))
        assert M.satisfies(I("x x = x x x")).holds, str(spec)
        assert M.satisfies(I("x x y = y x x")).holds, str(spec)


def test_monotonicity_under_factor_containment():
    # {x y} sits inside the factors of {x y x}: identities carry over
    big = fmon.from_rees(build([W("x y x")]))
    small = fmon.from_rees(build([W("x y")]))
    t_big = fmon.truncated_theory(big, 4, 3)
    t_small = fmon.truncated_theory(small, 4, 3)
    assert fmon.theory_leq(t_big, t_small)


def test_word_set_file_parsing():
    text = "# generators\nx y\n\nx t1 x  # chain\n"
    assert parse_word_set_file(text) == [W("x y"), W("x t1 x")]
