"""Generators: determinism, structure, and cross-detector behavior."""

import pytest

from fatpoints.algebra import QQ, order_of_vanishing, point, prime_field
from fatpoints.configs import (
    ConfigSpec,
    collinear,
    dual_hesse,
    dual_hesse_lines,
    general,
    generate,
    on_conic,
    rational_nodal_nodes,
    star,
    star_minus_one,
    two_nodal_union,
    type9,
)
from fatpoints.geometry import (
    are_collinear,
    common_conic,
    is_star_configuration,
    is_type9,
)
from fatpoints.linsys import FatPointScheme, alpha, alpha_sequence

# frozen seeds, found once by scanning for first-attempt success
NODAL_CASES = {3: (11, 0), 4: (19, 22), 5: (37, 986)}
TWO_NODAL_CASES = {(2, 2): (31, 1), (2, 3): (31, 124)}


def test_generators_are_deterministic():
    assert general(5, seed=4) == general(5, seed=4)
    assert star(4, seed=9) == star(4, seed=9)
    assert type9(seed=3) == type9(seed=3)
    assert general(5, seed=4) != general(5, seed=5)


def test_collinear_family():
    pts = collinear(5)
    assert len(pts) == 5 and are_collinear(pts) is not None
    assert collinear(1) == (point(QQ, 0, 0, 1),)
    # double line forces alpha(2Z) = 2
    assert alpha(FatPointScheme.uniform(pts, 2)) == 2


def test_on_conic_family():
    pts = on_conic(5)
    assert common_conic(pts) is not None
    assert are_collinear(on_conic(2)) is not None
    assert are_collinear(on_conic(3)) is None


def test_general_family_distinct_and_no_three_collinear():
    for seed in range(30):
        pts = general(3, seed=seed)
        assert len(set(pts)) == 3
        assert are_collinear(pts) is None


def test_general_respects_height():
    pts = general(6, seed=1, height=50)
    for P in pts:
        assert all(abs(c) <= 50 for c in P.integer_coords())


def test_star_family_incidence():
    for p in (3, 4, 5):
        pts, lines = star(p, seed=6)
        assert len(pts) == p * (p - 1) // 2
        assert len(lines) == p
        for P in pts:
            assert sum(1 for L in lines if L.contains(P)) == 2
        for L in lines:
            assert sum(1 for P in pts if L.contains(P)) == p - 1


def test_star_minus_one_counts():
    assert len(star_minus_one(3, seed=2)) == 2
    assert len(star_minus_one(4, seed=2)) == 5
    assert len(star_minus_one(5, seed=2)) == 9


def test_dual_hesse_incidence_structure():
    for p in (31, 13):
        pts = dual_hesse(p)
        lines = dual_hesse_lines(p)
        assert len(pts) == 12 and len(lines) == 9
        for P in pts:
            assert sum(1 for L in lines if L.contains(P)) == 3
        for L in lines:
            assert sum(1 for P in pts if L.contains(P)) == 4


def test_dual_hesse_parameter_validation():
    with pytest.raises(ValueError):
        dual_hesse(29)  # 29 = 2 mod 3
    with pytest.raises(ValueError):
        dual_hesse(7)  # too small


def test_type9_shape():
    pts = type9()
    assert is_type9(pts)
    assert common_conic(pts) is None
    for seed in range(5):
        assert is_type9(type9(seed=seed))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_nodal_curve_node_counts(d):
    p, seed = NODAL_CASES[d]
    got = rational_nodal_nodes(d, p, seed, max_retries=1)
    assert got is not None
    curve, nodes = got
    assert curve.degree == d
    assert len(nodes) == (d - 1) * (d - 2) // 2
    for P in nodes:
        assert order_of_vanishing(curve, P) == 2


def test_nodal_quintic_alpha_values():
    p, seed = NODAL_CASES[5]
    curve, nodes = rational_nodal_nodes(5, p, seed, max_retries=1)
    rep = alpha_sequence(nodes, 2)
    assert rep.alphas == (3, 5)


def test_nodal_generator_validates_parameters():
    with pytest.raises(ValueError):
        rational_nodal_nodes(5, 23, 0)  # p <= d^2
    with pytest.raises(ValueError):
        rational_nodal_nodes(1, 11, 0)


def test_nodal_generator_best_effort_none():
    # max_retries=0 can never succeed
    assert rational_nodal_nodes(4, 19, 0, max_retries=0) is None


@pytest.mark.parametrize("ds,expect_r", [((2, 2), 4), ((2, 3), 7)])
def test_two_nodal_union(ds, expect_r):
    d1, d2 = ds
    p, seed = TWO_NODAL_CASES[ds]
    pts = two_nodal_union(d1, d2, p, seed, max_retries=1)
    assert pts is not None and len(pts) == expect_r
    rep = alpha_sequence(pts, 2)
    assert rep.alphas == (d1 + d2 - 2, d1 + d2)


def test_two_nodal_rejects_bad_parameters():
    with pytest.raises(ValueError):
        two_nodal_union(2, 2, 3, 0)


def test_config_spec_round_trip():
    spec = ConfigSpec(family="star", p=4, seed=5)
    d = spec.to_json_dict()
    assert ConfigSpec.from_json_dict(d) == spec
    with pytest.raises(ValueError):
        ConfigSpec(family="spiral")


def test_generate_dispatch():
    assert generate(ConfigSpec(family="collinear", r=4)) == collinear(4)
    assert generate(ConfigSpec(family="on_conic", r=6)) == on_conic(6)
    assert generate(ConfigSpec(family="general", r=5, seed=3)) == general(5, seed=3)
    assert generate(ConfigSpec(family="star", p=4, seed=1)) == star(4, seed=1)[0]
    assert generate(ConfigSpec(family="type9")) == type9()
    assert generate(ConfigSpec(family="dual_hesse", prime=31)) == dual_hesse(31)
    assert len(generate(ConfigSpec(family="nagata16", seed=7))) == 16


def test_family_cross_detection_matrix():
    # matching detector fires, non-matching ones stay silent
    spts, _ = star(4, seed=11)
    assert is_star_configuration(spts) is not None
    assert not is_type9(spts)
    assert are_collinear(spts) is None
    assert common_conic(spts) is None

    cpts = on_conic(6)
    assert common_conic(cpts) is not None
    assert is_star_configuration(cpts) is None
    assert not is_type9(cpts)

    lpts = collinear(6)
    assert are_collinear(lpts) is not None
    assert is_star_configuration(lpts) is None
    assert not is_type9(lpts)
