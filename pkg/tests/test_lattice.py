import random
from itertools import product

import pytest

from conftest import random_lattice
from eqmon.lattice import (
    BUILTINS,
    FiniteLattice,
    LatticeError,
    builtin,
    find_pentagon_with_center,
    from_covers,
    is_modular_element,
    modular_elements,
    nonmodular_join_lattice,
    parse_lattice_file,
    pentagon_lattice,
)

B2 = FiniteLattice(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
CHAIN3 = FiniteLattice(["0", "m", "1"], [("0", "m"), ("m", "1")])


# ---------------------------------------------------------------- construction


def test_builtins_are_valid():
    assert pentagon_lattice().size == 5
    assert nonmodular_join_lattice().size == 9
    assert set(BUILTINS) == {"fig1", "fig2"}
    assert builtin("fig1").names == pentagon_lattice().names


def test_two_element_chain():
    L = FiniteLattice(["0", "1"], [("0", "1")])
    assert L.bottom == 0 and L.top == 1
    assert L.leq("0", "1") and not L.leq("1", "0")


def test_single_element_lattice():
    L = FiniteLattice(["e"], [])
    assert L.bottom == L.top == 0
    assert is_modular_element(L, "e")


def test_non_lattice_rejected_with_pair():
    # two maximal elements: the pair has no join
    with pytest.raises(LatticeError) as err:
        from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    assert "join" in str(err.value)
    # two minimal elements: no meet
    with pytest.raises(LatticeError) as err:
        from_covers(["a", "b", "1"], [("a", "1"), ("b", "1")])
    assert "meet" in str(err.value)


def test_cycle_rejected():
    with pytest.raises(LatticeError):
        from_covers(["a", "b"], [("a", "b"), ("b", "a")])


def test_bad_names_rejected():
    with pytest.raises(LatticeError):
        from_covers(["a", "a"], [])
    with pytest.raises(LatticeError):
        from_covers(["a"], [("a", "zz")])
    with pytest.raises(LatticeError):
        builtin("fig3")


# ---------------------------------------------------------------- lattice axioms


@pytest.mark.parametrize("L", [pentagon_lattice(), nonmodular_join_lattice(), B2, CHAIN3])
def test_meet_join_axioms(L):
    n = L.size
    for a, b in product(range(n), repeat=2):
        assert L.meet(a, b) == L.meet(b, a)
        assert L.join(a, b) == L.join(b, a)
        assert L.meet(a, L.join(a, b)) == a  # absorption
        assert L.join(a, L.meet(a, b)) == a
    for a, b, c in product(range(n), repeat=3):
        assert L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c))
        assert L.join(L.join(a, b), c) == L.join(a, L.join(b, c))
    for a in range(n):
        assert L.leq(L.bottom, a) and L.leq(a, L.top)


# ---------------------------------------------------------------- modularity


def test_pentagon_lattice_classification():
    L = pentagon_lattice()
    assert not is_modular_element(L, "c")
    for name in ("0", "a", "b", "1"):
        assert is_modular_element(L, name)
    assert modular_elements(L) == ["0", "a", "b", "1"]


def test_pentagon_search_on_pentagon():
    L = pentagon_lattice()
    pent = find_pentagon_with_center(L, "c")
    assert pent is not None and pent.verify(L)
    assert pent.elements() == ("0", "a", "b", "c", "1")
    for name in ("0", "a", "b", "1"):
        assert find_pentagon_with_center(L, name) is None


def test_nonmodular_join_classification():
    L = nonmodular_join_lattice()
    assert is_modular_element(L, "x")
    assert is_modular_element(L, "y")
    join = L.names[L.join("x", "y")]
    assert join == "q"
    assert not is_modular_element(L, "q")
    # the full classification, frozen: q and s are the non-modular elements
    assert modular_elements(L) == ["0", "x", "y", "c", "p", "r", "1"]
    # so the modular elements do not form a sublattice
    pent = find_pentagon_with_center(L, "q")
    assert pent is not None and pent.verify(L)


def test_chains_have_no_pentagons():
    for name in CHAIN3.names:
        assert is_modular_element(CHAIN3, name)
        assert find_pentagon_with_center(CHAIN3, name) is None


def test_boolean_square_all_modular():
    assert modular_elements(B2) == B2.names


def test_bottom_and_top_always_modular():
    for L in (pentagon_lattice(), nonmodular_join_lattice(), B2, CHAIN3):
        assert is_modular_element(L, L.bottom)
        assert is_modular_element(L, L.top)


@pytest.mark.parametrize("L", [pentagon_lattice(), nonmodular_join_lattice(), B2, CHAIN3])
def test_formula_iff_no_pentagon_on_builtins(L):
    for name in L.names:
        pent = find_pentagon_with_center(L, name)
        assert is_modular_element(L, name) == (pent is None)
        if pent is not None:
            assert pent.verify(L)


def test_formula_iff_no_pentagon_on_random_lattices():
    rng = random.Random(1234)
    for _ in range(60):
        L = random_lattice(rng)
        assert L.size <= 10
        for name in L.names:
            pent = find_pentagon_with_center(L, name)
            assert is_modular_element(L, name) == (pent is None)
            if pent is not None:
                assert pent.verify(L)


# ---------------------------------------------------------------- files


def test_file_round_trip():
    L = nonmodular_join_lattice()
    back = parse_lattice_file(L.to_text())
    assert back.names == L.names
    assert back.covers == L.covers


def test_file_parser_rejects_garbage():
    with pytest.raises(LatticeError):
        parse_lattice_file("elements: a b\nnonsense line")
