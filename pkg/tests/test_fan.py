import random
from fractions import Fraction

import pytest

from spherelam import fan
from spherelam.curves import (
    V00, V01,
    AllowableCurve,
    SpiralDir,
    enumerate_curves,
    kappa,
)
from spherelam.errors import BoundExhausted
from spherelam.lattice import INF, Slope, enumerate_slopes
from spherelam.shear import GAMMA24, QuasiLamination, Tangle, apply_perm, \
    shear_closed_form, tangle_shear
from spherelam.triangulation import base_triangulation

CW, CCW = SpiralDir.CW, SpiralDir.CCW


def base_cone():
    t0 = base_triangulation()
    coll = fan.MaximalCollection(tuple(kappa(a) for a in t0.arcs), "I")
    return fan.cone_of(coll)


class TestCones:
    def test_base_cone_rank(self):
        assert base_cone().dim == 6

    def test_base_cone_is_negative_orthant(self):
        gens = set(base_cone().generators)
        assert gens == {
            tuple(-1 if j == i else 0 for j in range(6)) for i in range(6)
        }

    def test_vii_rank(self):
        for coll in fan.closed_collections(Slope(2, 3)):
            assert fan.cone_of(coll).dim == 5

    def test_sixteen_collections_per_slope(self):
        colls = fan.closed_collections(Slope(2, 3))
        assert len(colls) == 16
        assert len({fan.cone_of(c) for c in colls}) == 16

    def test_collections_compatible(self):
        for coll in fan.maximal_collections(1):
            n = 5 if coll.kind == "VII" else 6
            assert len(coll.curves) == n  # validated pairwise in constructor

    def test_vii_structure(self):
        # closed curve of slope 2/3 plus one spiral-agreeing pair in each
        # endpoint pair: {v00, v10} and {v01, v11}
        slope = Slope(3, 2)
        target = fan.MaximalCollection(
            (AllowableCurve(slope),)
            + tuple(
                AllowableCurve(slope, ((V00, CW), (V00.translate(slope.parity), d)))
                for d in (CW, CCW)
            )
            + tuple(
                AllowableCurve(slope, ((V01, CW), (V01.translate(slope.parity), d)))
                for d in (CW, CCW)
            ),
            "VII",
        )
        assert target in fan.closed_collections(slope)

    def test_maximality_bounded(self):
        # no curve of bounded height extends a maximal collection
        from spherelam.curves import curves_compatible, enumerate_curves

        pool = enumerate_curves(2)
        for coll in list(fan.maximal_collections(1))[::17]:
            for extra in pool:
                if extra in coll.curves:
                    continue
                assert not all(curves_compatible(extra, c) for c in coll.curves)


class TestMembership:
    def test_generator_combination(self):
        cone = base_cone()
        g1, g2 = cone.generators[0], cone.generators[1]
        v = tuple(a + 2 * b for a, b in zip(g1, g2))
        coeffs = fan.membership(v, cone)
        assert coeffs is not None
        assert sorted(coeffs, reverse=True) == [2, 1, 0, 0, 0, 0]

    def test_negative_combination_rejected(self):
        cone = base_cone()
        v = tuple(-x for x in cone.generators[0])
        assert fan.membership(v, cone) is None

    def test_zero_everywhere(self):
        cone = base_cone()
        assert fan.membership((0,) * 6, cone) == (0,) * 6


class TestLocate:
    def test_closed_fixture(self):
        lam = fan.locate((-3, 2, 1, -3, 2, 1), 3)
        assert lam.weights == ((AllowableCurve(Slope(2, 3)), 1),)

    def test_single_curves(self):
        for c in enumerate_curves(2):
            lam = fan.locate(shear_closed_form(c), 2)
            assert lam.weights == ((c, 1),)

    def test_zero_vector(self):
        assert fan.locate((0,) * 6, 2).weights == ()

    def test_bound_exhausted(self):
        big = shear_closed_form(AllowableCurve(Slope(5, 7)))
        with pytest.raises(BoundExhausted):
            fan.locate(big, 1)

    def test_round_trips(self):
        rng = random.Random(3)
        idx = fan.cone_index(2)
        colls = [c.collection for c in idx.cones]
        for _ in range(25):
            coll = rng.choice(colls)
            chosen = rng.sample(list(coll.curves), rng.randint(1, 4))
            lam = QuasiLamination(tuple((c, rng.randint(1, 3)) for c in chosen))
            vec = tangle_shear(Tangle(lam.weights))
            assert fan.locate(vec, 2) == lam


class TestCounting:
    def test_closed_ray_in_sixteen_cones(self):
        v = shear_closed_form(AllowableCurve(Slope(1, 1)))
        idx = fan.cone_index(2)
        hits = list(idx.containing(v))
        assert len(hits) == 16
        assert all(c.kind == "VII" for c, _ in hits)

    def test_interior_point_in_one_cone(self):
        cone = base_cone()
        v = tuple(sum(g[i] for g in cone.generators) for i in range(6))
        assert fan.count_containing_cones(v, 1) == 1

    def test_zero_in_all(self):
        idx = fan.cone_index(1)
        assert fan.count_containing_cones((0,) * 6, 1) == len(idx.cones)


class TestVectorLists:
    def test_item1_fixture(self):
        from spherelam.shear import _item1

        assert _item1(1, 1) == (0, 1, 0, 0, 1, -1)

    def test_gvectors_equal_open_curve_shears(self):
        for h in (1, 2, 3):
            via_items = set(fan.g_vectors(h))
            via_curves = {
                shear_closed_form(c) for c in enumerate_curves(h) if not c.is_closed
            }
            assert via_items == via_curves

    def test_universal_forms_agree(self):
        for h in (1, 2, 4):
            assert fan.universal_coeffs(h, "thm12") == fan.universal_coeffs(h, "thm81")

    def test_thm81_irredundant(self):
        raw = fan.universal_raw(3, "thm81")
        assert len(raw) == len(set(raw))

    def test_universal_sandwiched_by_curve_shears(self):
        # full orbits of height-h base slopes cover all curves of height h
        # and stay within the curves of height 2h (slope rotations can
        # double the height)
        vecs = set(fan.universal_coeffs(2, "thm81"))
        small = {shear_closed_form(c) for c in enumerate_curves(2)}
        large = {shear_closed_form(c) for c in enumerate_curves(4)}
        assert small <= vecs <= large

    def test_orbit_sizes(self):
        from spherelam.fan import THM12_ITEMS

        for s in (Slope(1, 1), Slope(2, 3), INF, Slope(3, 1)):
            sizes = [
                len({apply_perm(p, item(s.a, s.b)) for p in GAMMA24})
                for item in THM12_ITEMS
            ]
            assert sizes == [6, 6, 12, 3]


class TestAdjacency:
    def test_base_cone_neighbors(self):
        nbrs = fan.flip_adjacency(base_cone())
        assert len(nbrs) == 6
        assert all(c.kind == "II" for c in nbrs)

    def test_vii_neighbors(self):
        cone = fan.cone_of(fan.closed_collections(Slope(1, 1))[0])
        nbrs = fan.flip_adjacency(cone)
        assert len(nbrs) == 4
        assert all(c.kind == "VII" for c in nbrs)
        assert all(c != cone for c in nbrs)

    def test_shared_facets(self):
        # a flip neighbor shares exactly five generators
        cone = base_cone()
        for nbr in fan.flip_adjacency(cone):
            common = fan.cone_rays(cone) & fan.cone_rays(nbr)
            assert len(common) == 5
            rays, lines = fan.intersection_rays(cone, nbr)
            assert not lines and rays == common

    def test_type_iv_profile(self):
        from collections import Counter

        from spherelam.curves import V10, V11, Tagging
        from spherelam.triangulation import TriType, build_type

        # taggings live at M minus v': here at v00, v11 (pair ends) and v10
        spec = TriType(
            "IV", (Slope(1, 1), Slope(1, -1)), v=V00, v_prime=V01,
            taggings=((V00, Tagging.PLAIN), (V11, Tagging.PLAIN), (V10, Tagging.PLAIN)),
        )
        tri = build_type(spec)
        coll = fan.MaximalCollection(tuple(kappa(a) for a in tri.arcs), "IV")
        kinds = Counter(c.kind for c in fan.flip_adjacency(fan.cone_of(coll)))
        assert dict(kinds) == {"II": 2, "III": 1, "IV": 2, "V": 1}

    def test_interior_points_disjoint(self):
        # an interior point of one maximal cone lies in no other
        rng = random.Random(2)
        idx = fan.cone_index(1)
        for cone in rng.sample(idx.cones, 12):
            v = tuple(sum(g[i] for g in cone.generators) for i in range(6))
            hits = [c for c, _ in idx.containing(v)]
            assert hits == [cone]


class TestFanAxioms:
    def test_sampled_pairs(self):
        idx = fan.cone_index(1)
        report = fan.fan_check(idx.cones, trials=40, seed=5)
        assert report.ok

    def test_plane_p(self):
        for s in enumerate_slopes(4):
            assert fan.in_plane_p(shear_closed_form(AllowableCurve(s)))
        for c in enumerate_curves(3):
            if not c.is_closed:
                assert not fan.in_plane_p(shear_closed_form(c))

    def test_induced_torus(self):
        assert fan.induced_torus_check(1)
