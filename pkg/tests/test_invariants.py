import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_arf.arf import apply_word, arf_from_flat, enumerate_arfs, enumerate_flat, new_arf, twist_generators
from higher_arf.core import ArfBasisValues, ArfType, SurfaceSignature, arf_count
from higher_arf.invariants import (
    arf_invariant_delta,
    enumerate_realizable_types,
    is_normal_form,
    is_realizable_type,
    normalize,
    type_of,
)
from higher_arf.orbits import DEFAULT_GRID, DEFAULT_MODULI, orbit_of

S = SurfaceSignature


def test_delta_genus_one_gcd():
    assert arf_invariant_delta(new_arf(6, S(1, 1, 0), (2,), (4,), (5,))) == 2


def test_delta_genus_one_all_zero_is_m():
    assert arf_invariant_delta(new_arf(3, S(1, 1, 0), (0,), (0,), (2,))) == 3


def test_delta_parity_closed():
    assert arf_invariant_delta(ArfBasisValues(2, S(2), (0, 1), (0, 1))) == 1
    assert arf_invariant_delta(ArfBasisValues(2, S(2), (0, 0), (0, 0))) == 0


def test_delta_vanishes_with_even_boundary_value():
    for a in range(2):
        for b in range(2):
            v = ArfBasisValues(2, S(2, 0, 1), (a, 0), (b, 0), (), (0,))
            assert arf_invariant_delta(v) == 0


def test_type_examples():
    v = new_arf(2, S(2, 0, 1), (0, 1), (1, 1), punctures=(1,))
    assert type_of(v) == ArfType(2, 0, (0, 0), (0, 1))
    w = new_arf(3, S(0, 0, 3), punctures=(0, 1, 1))
    assert type_of(w) == ArfType(0, 0, (0, 0, 0), (1, 2, 0))


def test_realizability_examples():
    assert is_realizable_type(ArfType(2, 1, (0, 0), (0, 0)), S(2), 2)
    assert not is_realizable_type(ArfType(2, 0, (0, 0, 0), (0, 0, 0)), S(2), 3)
    assert is_realizable_type(ArfType(1, 2, (0, 0, 0, 1), (0, 0, 0, 0)), S(1, 1, 0), 4)


def test_realizable_type_lists():
    assert [t.delta for t in enumerate_realizable_types(S(2), 2)] == [0, 1]
    assert [t.n_p for t in enumerate_realizable_types(S(0, 0, 3), 2)] == [(0, 3), (2, 1)]
    assert [t.delta for t in enumerate_realizable_types(S(1, 1, 0), 3)] == [1, 3]


@pytest.mark.parametrize("sig", DEFAULT_GRID, ids=str)
@pytest.mark.parametrize("m", DEFAULT_MODULI)
def test_every_type_of_an_arf_is_realizable(sig, m):
    realizable = set(enumerate_realizable_types(sig, m))
    for v in enumerate_arfs(m, sig):
        assert type_of(v) in realizable


def test_normalize_odd_modulus_genus_two():
    v = new_arf(3, S(2, 1, 0), (2, 0), (2, 1), (0,))
    nf, word = normalize(v)
    assert nf.handles == ((0, 1), (1, 1))
    assert apply_word(v, word) == nf


def test_normalize_genus_one():
    nf, word = normalize(new_arf(6, S(1, 1, 0), (2,), (4,), (5,)))
    assert nf.flat == (2, 0, 5)


def test_normalize_closed_genus_two_even_parity():
    v = ArfBasisValues(2, S(2), (1, 1), (1, 1))
    nf, word = normalize(v)
    assert nf.flat == (0, 1, 1, 1)
    assert nf in orbit_of(v)


def test_normalize_odd_class_keeps_zero():
    v = ArfBasisValues(2, S(2), (0, 1), (0, 1))
    nf, _ = normalize(v)
    assert nf.flat == (0, 0, 1, 1)


def test_normalize_genus_zero_sorts():
    v = new_arf(3, S(0, 0, 3), punctures=(2, 0, 0))
    nf, word = normalize(v)
    assert nf.punctures == (0, 0, 2)
    assert apply_word(v, word) == nf


cells = [(sig, m) for sig in DEFAULT_GRID for m in DEFAULT_MODULI if arf_count(sig, m)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(cells), st.data())
def test_normal_form_is_invariant_on_orbits(cell, data):
    sig, m = cell
    v = arf_from_flat(m, sig, data.draw(st.sampled_from(list(enumerate_flat(m, sig)))))
    word = data.draw(st.lists(st.sampled_from(twist_generators(sig, m)), max_size=10))
    w = apply_word(v, word)
    assert normalize(v)[0] == normalize(w)[0]
    assert type_of(v) == type_of(w)
    assert is_normal_form(normalize(w)[0])
