import pytest

from higher_arf.arf import T2, T3, PUNCTURE_SWAP, new_arf, twist_generators
from higher_arf.core import ArfBasisValues, SurfaceSignature
from higher_arf.errors import StateSpaceTooLarge
from higher_arf.orbits import (
    DEFAULT_GRID,
    DEFAULT_MODULI,
    component_census,
    orbit_of,
    verify_classification,
)

S = SurfaceSignature


def _sizes(sig, m):
    return sorted(o.size for o in component_census(sig, m).orbits)


def test_orbit_all_ones_fixed():
    assert len(orbit_of(new_arf(2, S(0, 0, 3), punctures=(1, 1, 1)))) == 1


def test_orbit_permutations():
    assert len(orbit_of(new_arf(2, S(0, 0, 3), punctures=(1, 0, 0)))) == 3


def test_orbit_even_spin_genus_two():
    assert len(orbit_of(ArfBasisValues(2, S(2), (0, 0), (0, 0)))) == 10


def test_cap_enforced():
    with pytest.raises(StateSpaceTooLarge):
        orbit_of(ArfBasisValues(2, S(2), (0, 0), (0, 0)), cap=10)


def test_spin_census_genus_two():
    report = component_census(S(2), 2)
    assert [(o.type.delta, o.size) for o in sorted(report.orbits, key=lambda o: o.type)] == [(0, 10), (1, 6)]
    assert report.ok


def test_three_punctured_sphere_census():
    report = component_census(S(0, 0, 3), 2)
    assert {o.type.n_p: o.size for o in report.orbits} == {(2, 1): 3, (0, 3): 1}


def test_punctured_torus_mod_three():
    report = component_census(S(1, 1, 0), 3)
    by_delta = {o.type.delta: o for o in report.orbits}
    assert set(by_delta) == {1, 3}
    assert by_delta[3].size == 1 and by_delta[3].representative == (0, 0, 2)
    assert report.total == 9


def test_inadmissible_census_is_empty_and_ok():
    report = component_census(S(2), 3)
    assert report.orbits == [] and report.total == 0 and report.ok


@pytest.mark.parametrize("sig", DEFAULT_GRID, ids=str)
@pytest.mark.parametrize("m", DEFAULT_MODULI)
def test_grid_classification(sig, m):
    verdict = verify_classification(sig, m)
    assert verdict.ok, verdict.diagnostics


def _without(sig, m, kind):
    return [t for t in twist_generators(sig, m) if t.kind != kind]


@pytest.mark.parametrize("m", [3, 4])
def test_ablation_t3_breaks_classification(m):
    sig = S(1, 1, 1)
    verdict = verify_classification(sig, m, generators=_without(sig, m, T3))
    assert not verdict.ok
    assert any("splits" in d for d in verdict.diagnostics)


def test_ablation_t3_single_hole_torus_still_passes():
    # the lone boundary value is forced, so T3 adds nothing to the gcd
    sig = S(1, 1, 0)
    assert verify_classification(sig, 4, generators=_without(sig, 4, T3)).ok


def test_ablation_t2_breaks_classification():
    sig = S(2)
    assert not verify_classification(sig, 2, generators=_without(sig, 2, T2)).ok


def test_ablation_swap_breaks_classification():
    sig = S(0, 0, 3)
    assert not verify_classification(sig, 3, generators=_without(sig, 3, PUNCTURE_SWAP)).ok


def test_genus_three_spin_counts():
    assert _sizes(S(3), 2) == [28, 36]
