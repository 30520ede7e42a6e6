from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgsurf.errors import InvalidFractionError, NotClassTError
from qgsurf.ratlin import is_negative_definite
from qgsurf.wahl import (
    canonical_order,
    chain_from_fraction,
    chain_gram,
    discrepancies,
    generate_class_T,
    hj_value,
    index,
    k2_contribution,
    recognize_class_T,
)


def test_hj_single_entry():
    assert hj_value([4]) == Fraction(4, 1)


def test_hj_three_minus_one_third():
    assert hj_value([3, 3]) == Fraction(8, 3)


def test_hj_nested():
    assert hj_value([4, 2, 3, 2]) == Fraction(27, 8)


def test_hj_rejects_bad_entries():
    with pytest.raises(ValueError):
        hj_value([4, 1])
    with pytest.raises(ValueError):
        hj_value([])


@pytest.mark.parametrize("m, q, chain", [
    (4, 1, (4,)),
    (27, 8, (4, 2, 3, 2)),
    (169, 90, (2, 9, 2, 2, 2, 2, 3)),
])
def test_chain_from_fraction(m, q, chain):
    assert chain_from_fraction(m, q) == chain


@pytest.mark.parametrize("m, q", [(1, 1), (8, 2), (3, 5), (6, 0)])
def test_chain_from_fraction_rejects(m, q):
    with pytest.raises(InvalidFractionError):
        chain_from_fraction(m, q)


@pytest.mark.parametrize("chain, d, n, a", [
    ((4,), 1, 2, 1),
    ((9, 2, 2, 2, 2, 2), 1, 7, 1),
    ((4, 2, 3, 2), 3, 3, 1),
    ((3, 3), 2, 2, 1),
    ((5, 2), 1, 3, 1),
    ((7, 3, 2, 2, 2, 2), 2, 6, 1),
    ((5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2), 1, 151, 31),
])
def test_recognizer_accepts(chain, d, n, a):
    data = recognize_class_T(chain)
    assert data is not None
    assert (data.d, data.n, data.a) == (d, n, a)
    assert data.m == d * n * n
    assert data.q == d * n * a - 1
    assert hj_value(chain) == Fraction(data.m, data.q)


@pytest.mark.parametrize("chain", [(5,), (2,), (2, 2), (3,), (2, 3, 2)])
def test_recognizer_rejects(chain):
    assert recognize_class_T(chain) is None


@pytest.mark.parametrize("chain, idx", [
    ((4,), 2),
    ((4, 2, 3, 2), 3),
    ((5, 2), 3),
    ((9, 2, 2, 2, 2, 2), 7),
    ((6, 2, 2), 4),
])
def test_index_values(chain, idx):
    assert index(chain) == idx


def test_index_rejects_non_members():
    with pytest.raises(NotClassTError):
        index([5])


def test_generate_smallest_bounds():
    assert generate_class_T(1, 4) == {(4,)}


def test_generate_one_step_children():
    out = generate_class_T(2, 5)
    assert (5, 2) in out and (2, 5) in out


def test_generate_contains_deeper_chain():
    # one growth step away from the length-3 seed [3,2,3]
    assert (4, 2, 3, 2) in generate_class_T(4, 12)


def test_generator_matches_recognizer_small_bounds():
    max_len, max_entry = 5, 9
    generated = generate_class_T(max_len, max_entry)
    filtered = {
        chain
        for length in range(1, max_len + 1)
        for chain in product(range(2, max_entry + 1), repeat=length)
        if recognize_class_T(chain) is not None
    }
    assert generated == filtered


def test_discrepancies_known_values():
    assert discrepancies([4]) == (Fraction(-1, 2),)
    assert discrepancies([2, 2]) == (Fraction(0), Fraction(0))
    assert discrepancies([4, 2, 3, 2]) == (
        Fraction(-2, 3), Fraction(-2, 3), Fraction(-2, 3), Fraction(-1, 3))
    assert discrepancies([7, 3, 2, 2, 2, 2]) == (
        Fraction(-5, 6), Fraction(-5, 6), Fraction(-2, 3),
        Fraction(-1, 2), Fraction(-1, 3), Fraction(-1, 6))


@pytest.mark.parametrize("chain, value", [
    ((4,), 1),
    ((7, 3, 2, 2, 2, 2), 5),
    ((2, 2), 0),
    ((2, 9, 2, 2, 2, 2, 3), 7),
])
def test_k2_contribution(chain, value):
    assert k2_contribution(chain) == Fraction(value)


def test_reversal_symmetry_on_generated_set():
    for chain in generate_class_T(6, 9):
        fwd = recognize_class_T(chain)
        rev = recognize_class_T(tuple(reversed(chain)))
        assert rev is not None
        assert (fwd.d, fwd.n) == (rev.d, rev.n)


def test_generated_discrepancies_in_open_interval():
    for chain in generate_class_T(6, 9):
        data = recognize_class_T(chain)
        disc = discrepancies(chain)
        assert all(Fraction(-1) < a < Fraction(0) for a in disc), chain
        assert k2_contribution(chain) == len(chain) + 1 - data.d


def test_round_trip_small_exhaustive():
    for length in range(1, 5):
        for chain in product(range(2, 7), repeat=length):
            value = hj_value(chain)
            assert chain_from_fraction(value.numerator, value.denominator) == chain


@given(st.lists(st.integers(min_value=2, max_value=12), min_size=1, max_size=8))
@settings(max_examples=300, deadline=None)
def test_round_trip_random(entries):
    chain = tuple(entries)
    value = hj_value(chain)
    assert value.numerator > value.denominator >= 1
    assert chain_from_fraction(value.numerator, value.denominator) == chain


@given(st.lists(st.integers(min_value=2, max_value=12), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_chain_grams_negative_definite(entries):
    assert is_negative_definite(chain_gram(entries))


def test_canonical_order():
    chains = [(2, 5), (4,), (5, 2), (2, 2, 6)]
    assert canonical_order(chains) == [(4,), (2, 5), (5, 2), (2, 2, 6)]


def test_discrepancies_long_chains_frozen():
    # solved independently with a separate exact elimination prototype
    assert discrepancies([2, 2, 9, 2, 2, 2, 2, 4]) == tuple(
        Fraction(n, 19) for n in (-6, -12, -18, -17, -16, -15, -14, -13))
    assert discrepancies([2, 2, 7, 6, 2, 3, 2, 2, 2, 2, 4]) == tuple(
        Fraction(n, 73) for n in (-23, -46, -69, -72, -71, -70, -66, -62, -58, -54, -50))
    assert discrepancies([5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2]) == tuple(
        Fraction(n, 151) for n in (-120, -147, -150, -149, -148, -144, -140,
                                   -136, -132, -128, -124, -93, -62, -31))
    assert discrepancies([9, 2, 2, 2, 2, 2]) == tuple(
        Fraction(n, 7) for n in (-6, -5, -4, -3, -2, -1))
