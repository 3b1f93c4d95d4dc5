from fractions import Fraction

import pytest

from modulicones import fixtures
from modulicones.cones import conic_combination
from modulicones.curves import (
    AttachMapSpec,
    attach_pushforward,
    class_l7,
    counterexample_ftau,
    curve_ck,
    curve_ck_star,
    eff_cone,
    eff_xn2_derivation,
    extremal_ray_ri,
    named_class,
    nem_hrep,
    nem_rays_inductive,
    nem_xn1_decomposition,
    nem_xn1_full_rows,
    nem_xn1_subsumption,
)
from modulicones.curves import _add_b
from modulicones.linalg import add, primitive, scale, vec
from modulicones.spaces import (
    SpaceId,
    boundary_class,
    enumerate_boundaries,
    fully_pointed,
    picard_number,
)

F = Fraction


def ray_set(rows):
    return sorted(primitive(r) for r in rows)


# --- the two curve-class families -------------------------------------------


def test_moving_family_classes():
    s71 = SpaceId(7, 1)
    assert curve_ck(s71, 2).coords == vec([-3, 5, 0, 0])
    assert curve_ck(s71, 1).coords == vec([6, 0, 0, 0])
    assert curve_ck(SpaceId(7, 0), 3).coords == vec([0, 2])  # index folding


def test_two_marked_family_classes():
    assert curve_ck_star(4, 1).coords == vec([0, 3, 0])
    assert curve_ck_star(4, 2).coords == vec([1, -1, 2])


def test_curve_index_bounds():
    with pytest.raises(ValueError):
        curve_ck(SpaceId(7, 1), 5)
    with pytest.raises(ValueError):
        curve_ck_star(4, 3)


# --- nem cone, unpointed -----------------------------------------------------


@pytest.mark.parametrize("s", [s for s in fixtures.NEM_RAYS if s.m == 0])
def test_nem_unpointed_frozen_rays(s):
    assert ray_set(nem_hrep(s).rays) == ray_set(fixtures.NEM_RAYS[s])


@pytest.mark.parametrize("n", range(6, 15))
def test_nem_unpointed_branching_matches_double_description(n):
    ind = nem_rays_inductive(n)
    assert len(ind) == 2 ** (n // 2 - 2)
    assert ray_set(nem_hrep(SpaceId(n, 0)).rays) == ray_set(ind)
    for i in range(2, n // 2 + 1):
        assert extremal_ray_ri(n, i) in ind


def test_distinguished_extremal_rays():
    assert extremal_ray_ri(8, 2) == vec([15, 10, 6])
    assert extremal_ray_ri(8, 3) == vec([5, 15, 9])
    assert extremal_ray_ri(8, 4) == vec([1, 3, 6])
    assert extremal_ray_ri(9, 2) == vec([21, 15, 10])


def test_nem_unpointed_needs_six_points():
    with pytest.raises(ValueError):
        nem_hrep(SpaceId(5, 0))


# --- nem cone, one marked point ----------------------------------------------


@pytest.mark.parametrize("s", [s for s in fixtures.NEM_RAYS if s.m == 1])
def test_nem_pointed_frozen_rays(s):
    assert ray_set(nem_hrep(s).rays) == ray_set(fixtures.NEM_RAYS[s])


@pytest.mark.parametrize("n", range(5, 13))
def test_full_system_equals_reduced_system(n):
    full = nem_xn1_full_rows(n)
    reduced = {primitive(r) for r in nem_hrep(SpaceId(n, 1)).inequalities}
    assert len(reduced) == (n - 1) * (n - 4) // 2
    # low-index rows appear verbatim in the reduced system; everything else
    # is rewritten by the closed-form subsumption identities
    for (i, j, l), row in full.items():
        if i <= 2:
            assert primitive(row) in reduced, (n, i, j, l)
    for r in reduced:
        assert any(primitive(row) == r for row in full.values()), (n, r)
    nem_xn1_subsumption(n)  # raises on any failed rewriting


@pytest.mark.parametrize("n", range(5, 13))
def test_nonnegativity_of_low_coordinate(n):
    # the second basis coordinate is pinned nonnegative by the system itself
    full = nem_xn1_full_rows(n)
    s = SpaceId(n, 1)
    e2 = [F(0)] * picard_number(s)
    e2[0] = F(1)
    if n % 2 == 1:
        l = (n + 1) // 2
        row = full[(2, 2, l)]
        assert primitive(row) == tuple(e2)
        assert row[0] == (l - 1) ** 2 * (l - 2)
    else:
        h = n // 2
        combo = add(scale(F(h), full[(2, 2, h)]), scale(F(h - 2), full[(2, 2, h + 1)]))
        assert combo == scale(F(h * (h - 1) * (h - 2) * (n - 1)), vec(e2))


# --- attachment pushforwards --------------------------------------------------


@pytest.mark.parametrize("n", range(5, 13))
@pytest.mark.parametrize("m", [0, 1, 2])
def test_unmarked_attach_images_in_closed_form(n, m):
    if m == 0 and n < 6:
        pytest.skip("no unpointed cone below six points")
    t = SpaceId(n, m)
    for l in range(3, min(n - 2, n - m) + 1):
        q = attach_pushforward(AttachMapSpec("q", n, l, m))
        src = SpaceId(l + 1, 1)
        for k in range(1, l - 1):
            pushed = q.push_curve(curve_ck(src, k))
            direct = [F(0)] * picard_number(t)
            _add_b(t, direct, n - l + k, F(l - k + 1))
            if l - k - 1:
                _add_b(t, direct, n - l + k - 1, F(-(l - k - 1)))
            assert pushed.coords == tuple(direct), ("q", n, m, l, k)


@pytest.mark.parametrize("n", range(5, 13))
def test_fibre_images_are_the_simple_rows(n):
    full = nem_xn1_full_rows(n)
    for l in range(3, n - 1):
        q = attach_pushforward(AttachMapSpec("q", n, l, 1))
        fibre = q.push_curve(curve_ck(SpaceId(l + 1, 1), 1))
        assert fibre.coords == full[(1, 0, l)]


@pytest.mark.parametrize("n", range(6, 13))
def test_marked_attach_images_match_the_full_rows(n):
    full = nem_xn1_full_rows(n)
    for l in range(4, n - 1):
        smap = attach_pushforward(AttachMapSpec("s", n, l))
        names = smap.source_names
        for j in range(2, l):
            col = smap.column(f"b*{j}")
            assert scale(F((l - 1) ** 2 * (l - 2)), col) == vec(full[(2, j, l)])
        for i in range(3, l):
            for j in range(2, l):
                coeffs = {name: F(0) for name in names}
                coeffs[f"b{i}"] = F((j - 1) * (l - j))
                coeffs[f"b*{j}"] = F((l - i + 1) * (l - i))
                img = smap([coeffs[name] for name in names])
                assert scale(F(l - 1), img) == vec(full[(i, j, l)]), (n, l, i, j)
        # the unstarred i = 2 column agrees with the k = 1 column one level
        # down on the unmarked side: same glued geometry
        qprev = attach_pushforward(AttachMapSpec("q", n, l - 1, 1))
        assert smap.column("b3") == qprev.column("b2")


@pytest.mark.parametrize("n", range(6, 11))
def test_two_marked_attach_derives_the_effective_system(n):
    fams, certs = eff_xn2_derivation(n)
    rmap = attach_pushforward(AttachMapSpec("r", n, n - 2))
    for j in range(2, n - 2):
        col = rmap.column(f"b*{j}")
        assert scale(F((n - 4) * (n - 3)), col) == vec(fams["ineq1"][j - 2])
    for cert in certs:
        assert bool(cert)


@pytest.mark.parametrize("n", range(5, 11))
@pytest.mark.parametrize("m", [0, 1])
def test_pushed_curves_are_valid_on_nem(n, m):
    if m == 0 and n < 6:
        pytest.skip("no unpointed cone below six points")
    t = SpaceId(n, m)
    rows = list(nem_hrep(t).inequalities)
    for l in range(3, min(n - 2, n - m) + 1):
        q = attach_pushforward(AttachMapSpec("q", n, l, m))
        for k in range(1, l - 1):
            pushed = q.push_curve(curve_ck(SpaceId(l + 1, 1), k))
            assert conic_combination(pushed.coords, rows) is not None, (n, m, l, k)


# --- effective cones -----------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 13))
@pytest.mark.parametrize("m", [0, 1])
def test_effective_cones_are_simplicial(n, m):
    c = eff_cone(SpaceId(n, m))
    assert c.is_simplicial()
    if m == 1:
        assert len(c.rays) == n - 3


def test_effective_cone_two_marks_surface():
    c = eff_cone(SpaceId(5, 2))
    assert ray_set(c.rays) == ray_set(fixtures.EFF_X52_RAYS)
    assert not c.is_simplicial()


def test_effective_cone_refuses_three_marks():
    with pytest.raises(ValueError):
        eff_cone(SpaceId(6, 3))


# --- decomposition over the unpointed quotient ----------------------------------


@pytest.mark.parametrize("n", range(6, 11))
def test_pointed_cone_decomposes_over_the_base(n):
    rep = nem_xn1_decomposition(n)
    assert rep.face_matches, (rep.face_rays, rep.pulled_rays)
    assert rep.constraint_holds
    assert rep.off_face_positive, rep.off_face_rays


def test_decomposition_face_n6():
    assert nem_xn1_decomposition(6).face_rays == ((0, 1, 1),)


# --- distinguished classes -------------------------------------------------------


@pytest.mark.parametrize(
    "n, coords",
    [
        (6, (2, 0, 0, 2, -6, -2, -2, 2)),
        (7, (4, 0, 0, 6, -6, -4, -4, 8, 6, -6, -6, -24)),
        (8, (12, 0, 0, 24, -12, -12, -12, 36, 24, -24, -24, -120, -48, -24, -24, 36)),
    ],
)
def test_moving_but_not_boundary_generated(n, coords):
    cls, cert = counterexample_ftau(n)
    assert cls.coords == vec(coords)
    assert cert.kind == "non-membership"
    s = SpaceId(n, 3)
    gens = [
        primitive(boundary_class(s, lbl).coords) for lbl in enumerate_boundaries(s)
    ]
    assert cert.verify(cls.coords, gens)


def test_cotangent_symmetrization_is_extremal_input():
    named, ray = class_l7()
    assert len(named.terms) == 15
    assert ray.coords == vec([10, 6, 3, 1])
    assert conic_combination(ray.coords, nem_hrep(SpaceId(7, 1)).rays) is not None


def test_named_class_registry():
    assert named_class("F_tau").space == fully_pointed(6)
    assert named_class("L_7").space == fully_pointed(7)
    with pytest.raises(KeyError):
        named_class("no_such_class")


# --- recorded nef data stays inside the computed cone ----------------------------


@pytest.mark.parametrize("s", list(fixtures.NEF_RAYS))
def test_nef_fixture_inside_computed_nem(s):
    nem = nem_hrep(s)
    for ray in fixtures.NEF_RAYS[s]:
        cert = conic_combination(vec(ray), nem.rays)
        assert cert is not None and cert.verify(ray, nem.rays), (s, ray)
