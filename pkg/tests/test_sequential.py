import itertools
import math

import numpy as np
import pytest

from higher_arf.core import SurfaceSignature
from higher_arf.errors import OutOfValidityRegion, RelatorNotIdentity
from higher_arf.hyperbolic.lifting import oracle_jump
from higher_arf.hyperbolic.moebius import (
    INF,
    ElementKind,
    commutator_trace,
    compose,
    element_kind,
    inverse,
    make_hyperbolic,
    make_parabolic,
)
from higher_arf.hyperbolic.sequential import (
    BUILT_FAMILIES,
    PARABOLIC_COMMUTATOR_SHIFT,
    SequentialSet,
    build_sequential_set,
    check_lift_relation,
    closed_form_winding,
    hyperbolic_pair_type,
    hyperbolic_parabolic_pair_type,
    is_sequential_set,
    relator_winding,
)

S = SurfaceSignature


def _triple(alpha):
    c1 = make_hyperbolic(INF, 0.0, 4.0)
    c2 = make_hyperbolic(alpha, 1.0, 4.0)
    return [c1, c2, inverse(compose(c1, c2))]


def test_strict_rank_two_triple():
    assert is_sequential_set(_triple(0.8), S(0, 3, 0))


def test_boundary_rank_two_triple():
    t = _triple(0.64)
    assert element_kind(t[2]) is ElementKind.PARABOLIC
    assert is_sequential_set(t, S(0, 2, 1))
    assert not is_sequential_set(t, S(0, 3, 0))


def test_violated_rank_two_triple():
    assert not is_sequential_set(_triple(0.5), S(0, 3, 0))
    assert not is_sequential_set(_triple(0.5), S(0, 2, 1))


def test_inverted_triple_is_not_sequential():
    c1, c2, _ = _triple(0.8)
    a, b = inverse(c1), inverse(c2)
    assert oracle_jump(a, b) == -1
    assert not is_sequential_set([a, b, inverse(compose(a, b))], S(0, 3, 0))


def test_generic_checker_matches_closed_forms():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        l1, l2 = np.exp(rng.uniform(0.1, 3, 2))
        beta = rng.uniform(-2, 2)
        alpha = beta * rng.uniform(-0.5, 1.2)
        if abs(alpha - beta) < 1e-6 or abs(alpha) < 1e-9:
            continue
        c1, c2 = make_hyperbolic(INF, 0.0, l1), make_hyperbolic(alpha, beta, l2)
        c3 = inverse(compose(c1, c2))
        kind = element_kind(c3)
        sig = S(0, 3, 0) if kind is ElementKind.HYPERBOLIC else S(0, 2, 1)
        generic = kind is not ElementKind.ELLIPTIC and is_sequential_set([c1, c2, c3], sig)
        assert generic == (hyperbolic_pair_type(l1, l2, alpha, beta) is not None)
    for _ in range(1000):
        l1 = math.exp(rng.uniform(0.1, 3))
        alpha, l2 = rng.uniform(-2, 2), rng.uniform(0.01, 5)
        c1, c2 = make_hyperbolic(INF, 0.0, l1), make_parabolic(alpha, l2)
        c3 = inverse(compose(c1, c2))
        kind = element_kind(c3)
        sig = S(0, 2, 1) if kind is ElementKind.HYPERBOLIC else S(0, 1, 2)
        generic = kind is not ElementKind.ELLIPTIC and is_sequential_set([c1, c2, c3], sig)
        assert generic == (hyperbolic_parabolic_pair_type(l1, l2, alpha) is not None)


@pytest.mark.parametrize("sig", BUILT_FAMILIES, ids=str)
def test_built_families_are_sequential(sig):
    seq = build_sequential_set(sig)
    assert is_sequential_set(seq.elements, sig)


@pytest.mark.parametrize("sig", [s for s in BUILT_FAMILIES if s.g == 0], ids=str)
def test_sequential_triples_jump_by_one(sig):
    c1, c2, _ = build_sequential_set(sig).elements
    assert oracle_jump(c1, c2) == 1


def test_genus_one_generators_cross():
    from higher_arf.hyperbolic.lifting import axes_intersect

    a, b, _ = build_sequential_set(S(1, 1, 0)).elements
    assert axes_intersect(a, b)
    assert oracle_jump(a, b) == 0


def test_commutator_thresholds():
    a, b, _ = build_sequential_set(S(1, 0, 1)).elements
    assert abs(commutator_trace(a, b) + 2) < 1e-8
    a, b, _ = build_sequential_set(S(1, 1, 0), (9.0,)).elements
    assert commutator_trace(a, b) == pytest.approx(-862 / 81, abs=1e-10)


def test_validity_regions():
    with pytest.raises(OutOfValidityRegion):
        build_sequential_set(S(0, 3, 0), (4.0, 4.0, 0.5, 1.0))
    with pytest.raises(OutOfValidityRegion):
        build_sequential_set(S(1, 1, 0), (PARABOLIC_COMMUTATOR_SHIFT,))
    with pytest.raises(OutOfValidityRegion):
        build_sequential_set(S(2, 0, 0))
    with pytest.raises(OutOfValidityRegion):
        SequentialSet(S(0, 3, 0), tuple(_triple(0.5)))


def test_lift_three_punctured_sphere():
    seq = build_sequential_set(S(0, 0, 3))
    for l3 in range(-4, 5):
        assert check_lift_relation(seq, (0, 0, l3), 3) == (l3 % 3 == 2)


def test_lift_one_holed_torus():
    seq = build_sequential_set(S(1, 1, 0))
    for la, lb in itertools.product(range(-2, 3), repeat=2):
        assert check_lift_relation(seq, (la, lb, -1), 4)
        assert not check_lift_relation(seq, (la, lb, 0), 4)


def test_shift_by_m_keeps_verdict():
    seq = build_sequential_set(S(0, 2, 1))
    for levels in [(0, 0, -1), (1, -2, 0), (2, 2, 2)]:
        shifted = levels[:2] + (levels[2] + 4,)
        assert check_lift_relation(seq, levels, 4) == check_lift_relation(seq, shifted, 4)


def test_winding_is_the_closed_form():
    for sig in BUILT_FAMILIES:
        seq = build_sequential_set(sig)
        for levels in itertools.product(range(-2, 3), repeat=len(seq.elements)):
            assert relator_winding(seq, levels) == closed_form_winding(sig, levels)


def test_relator_must_close():
    seq = build_sequential_set(S(0, 3, 0))
    broken = object.__new__(SequentialSet)
    object.__setattr__(broken, "sig", seq.sig)
    object.__setattr__(broken, "elements", seq.elements[:2] + (make_parabolic(5.0, 1.0),))
    with pytest.raises(RelatorNotIdentity):
        relator_winding(broken, (0, 0, 0))
