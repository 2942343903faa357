import pytest

from powerideals.arrangement import large_span, large_strata, rho_min
from powerideals.errors import GenericityError, PreconditionError
from powerideals.harness.pencil import (
    PencilConfig,
    build_pencil_arrangement,
    extend_with_generic_plane,
    post_check_failures,
)
from powerideals.linalg import Matrix
from powerideals.matroid import same_matroid


def test_coplanar_pencils():
    cfg = PencilConfig.coplanar_pencils(3, 1)
    a = build_pencil_arrangement(cfg)
    assert a.n == 9
    assert rho_min(a) == 6
    assert {x.basis for x in large_strata(a)} == set(cfg.line_bases())
    assert post_check_failures(a, cfg) == []


def test_generic_pencils_span_everything():
    a = build_pencil_arrangement(PencilConfig.generic_pencils(3, 1))
    assert rho_min(a) == 6
    assert large_span(a) == Matrix.identity(3)


def test_pencil_pair_shares_a_matroid():
    coplanar = build_pencil_arrangement(PencilConfig.coplanar_pencils(3, 1))
    generic = build_pencil_arrangement(PencilConfig.generic_pencils(3, 1))
    assert same_matroid(coplanar, generic)


def test_construction_is_deterministic():
    cfg = PencilConfig.generic_pencils(3, 4)
    assert build_pencil_arrangement(cfg) == build_pencil_arrangement(cfg)


def test_small_pencils_tie_with_cross_lines():
    cfg = PencilConfig.coplanar_pencils(2, 1)
    assert cfg.strict_large_lines is False
    a = build_pencil_arrangement(cfg)
    assert rho_min(a) == 4
    assert set(cfg.line_bases()) < {x.basis for x in large_strata(a)}


@pytest.mark.parametrize("m", [0, 1])
def test_degenerate_sizes_exhaust_the_budget(m):
    with pytest.raises(GenericityError):
        build_pencil_arrangement(PencilConfig.generic_pencils(m, 1), budget=4)


def test_config_invariants():
    with pytest.raises(PreconditionError, match="dependent"):
        PencilConfig(((1, 0, 0), (2, 0, 0), (0, 0, 1)), 3, False, 1)
    with pytest.raises(PreconditionError, match="coplanar"):
        PencilConfig(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 3, True, 1)
    with pytest.raises(PreconditionError):
        PencilConfig.generic_pencils(-1, 1)


def test_generic_plane_raises_rho_by_one():
    coplanar = build_pencil_arrangement(PencilConfig.coplanar_pencils(3, 1))
    generic = build_pencil_arrangement(PencilConfig.generic_pencils(3, 1))
    odd_coplanar, odd_generic = extend_with_generic_plane((coplanar, generic), 1)
    assert rho_min(odd_coplanar) == rho_min(odd_generic) == 7
    assert odd_coplanar.forms[-1] == odd_generic.forms[-1]
    assert same_matroid(odd_coplanar, odd_generic)
    assert {x.basis for x in large_strata(odd_coplanar)} == {x.basis for x in large_strata(coplanar)}


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_valid_sizes_always_build(m, seed):
    for cfg in (PencilConfig.coplanar_pencils(m, seed), PencilConfig.generic_pencils(m, seed)):
        a = build_pencil_arrangement(cfg)
        assert a.n == 3 * m
        assert rho_min(a) == 2 * m
        assert post_check_failures(a, cfg) == []


def test_drawn_planes_avoid_the_other_directions():
    cfg = PencilConfig.generic_pencils(4, 2)
    a = build_pencil_arrangement(cfg)
    for i, form in enumerate(a.forms):
        hits = [j for j, d in enumerate(cfg.directions) if sum(f * x for f, x in zip(form, d)) == 0]
        assert hits == [i // cfg.m]


def test_odd_case_extends_larger_pencils():
    coplanar = build_pencil_arrangement(PencilConfig.coplanar_pencils(4, 3))
    generic = build_pencil_arrangement(PencilConfig.generic_pencils(4, 3))
    odd_coplanar, odd_generic = extend_with_generic_plane((coplanar, generic), 3)
    assert rho_min(odd_coplanar) == rho_min(odd_generic) == 9
