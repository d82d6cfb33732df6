import pytest
from hypothesis import given
from hypothesis import strategies as st

from higher_arf.core import (
    ArfBasisValues,
    LinearFunctional,
    SurfaceSignature,
    arf_count,
    boundary_sum_target,
    check_modulus,
    teich_dimension,
    validate_signature,
)
from higher_arf.errors import ClosedSurface, InvalidModulus, InvalidSignature, MismatchedSignature

S = SurfaceSignature


@pytest.mark.parametrize(
    "sig, expected",
    [
        (S(0, 3, 0), True),
        (S(1, 0, 0), False),
        (S(2, 0, 0), True),
        (S(0, 0, 3), True),
        (S(0, 2, 0), False),
        (S(1, 1, 0), True),
    ],
)
def test_validate_signature(sig, expected):
    assert validate_signature(sig) is expected


@pytest.mark.parametrize("sig, dim", [(S(2, 0, 0), 6), (S(0, 3, 0), 3), (S(1, 1, 1), 5), (S(0, 0, 3), 0)])
def test_teich_dimension(sig, dim):
    assert teich_dimension(sig) == dim


def test_teich_dimension_rejects_torus():
    with pytest.raises(InvalidSignature):
        teich_dimension(S(1, 0, 0))


@pytest.mark.parametrize(
    "sig, m, target",
    [(S(0, 0, 3), 5, 4), (S(1, 1, 0), 6, 5), (S(2, 0, 1), 2, 1)],
)
def test_boundary_sum_target(sig, m, target):
    assert boundary_sum_target(sig, m) == target


def test_boundary_sum_target_closed():
    with pytest.raises(ClosedSurface):
        boundary_sum_target(S(2, 0, 0), 2)


@pytest.mark.parametrize(
    "sig, m, count",
    [(S(1, 1, 0), 3, 9), (S(2, 0, 0), 2, 16), (S(2, 0, 0), 3, 0), (S(3, 0, 0), 4, 4**6), (S(0, 0, 3), 2, 4)],
)
def test_arf_count(sig, m, count):
    assert arf_count(sig, m) == count


@pytest.mark.parametrize("bad", [0, 1, -3, 2.0, True, "2"])
def test_check_modulus_rejects(bad):
    with pytest.raises(InvalidModulus):
        check_modulus(bad)


def test_signature_rejects_negative():
    with pytest.raises(InvalidSignature):
        S(-1, 0, 0)


def test_basis_values_canonicalise_and_flatten():
    v = ArfBasisValues(3, S(2, 1, 0), (4, -1), (5, 0), (7,))
    assert v.alpha == (1, 2)
    assert v.flat == (1, 2, 2, 0, 1)
    assert ArfBasisValues.from_flat(3, S(2, 1, 0), v.flat) == v


def test_basis_values_shape_checked():
    with pytest.raises(MismatchedSignature):
        ArfBasisValues(3, S(1, 1, 0), (0,), (0,), ())


def test_linear_functional_boundary_sums_to_zero():
    with pytest.raises(ValueError):
        LinearFunctional(3, S(0, 2, 1), (), (), (1, 0, 0))
    assert LinearFunctional.zero(3, S(1, 2, 0)).is_zero()


@given(g=st.integers(0, 3), l_h=st.integers(0, 3), l_p=st.integers(0, 3), m=st.integers(2, 6))
def test_count_is_power_of_m_or_zero(g, l_h, l_p, m):
    sig = S(g, l_h, l_p)
    if not validate_signature(sig):
        return
    c = arf_count(sig, m)
    if sig.is_closed and (2 * g - 2) % m:
        assert c == 0
    else:
        k = 0
        while c % m == 0 and c > 1:
            c //= m
            k += 1
        assert c == 1
