import itertools
from collections import Counter

import pytest

from spherelam.curves import (
    V00, V01, V10, V11,
    Puncture,
    TaggedArc,
    Tagging,
    endpoint_sets,
)
from spherelam.errors import InvalidParameters, NotAllPlain
from spherelam.lattice import INF, MINUS_ONE, ZERO, Slope, enumerate_slopes, farey_distance
from spherelam.triangulation import (
    FIG1_MATRIX,
    TaggedTriangulation,
    TriType,
    base_triangulation,
    build_type,
    classify,
    enumerate_triangulations,
    f2_companions,
    flip,
    mutate,
    signed_adjacency,
    _farey1_triples,
    _farey2_pairs,
)

PLAIN, NOTCHED = Tagging.PLAIN, Tagging.NOTCHED
ALL_PLAIN = tuple((p, PLAIN) for p in (V00, V01, V10, V11))


class TestBaseTriangulation:
    def test_structure(self):
        t0 = base_triangulation()
        slopes = [a.slope for a in t0.arcs]
        assert slopes == [ZERO, INF, MINUS_ONE, ZERO, INF, MINUS_ONE]
        assert t0.arcs[0].punctures == {V00, V10}
        assert t0.arcs[1].punctures == {V00, V01}
        assert t0.arcs[2].punctures == {V00, V11}
        assert t0.all_plain
        assert t0.degree_sequence == (3, 3, 3, 3)

    def test_classify(self):
        tt = classify(base_triangulation())
        assert tt.tag == "I"
        assert set(tt.slopes) == {ZERO, INF, MINUS_ONE}

    def test_fig1_matrix(self):
        assert signed_adjacency(base_triangulation()) == FIG1_MATRIX

    def test_all_pairs_compatible(self):
        base_triangulation()  # the constructor verifies all 15 pairs


class TestBuildClassify:
    def test_type_ii_structure(self):
        spec = TriType("II", (Slope(1, 1), Slope(1, -1)), v=V00, taggings=ALL_PLAIN)
        tri = build_type(spec)
        pair_arcs = [a for a in tri.arcs if a.slope in (Slope(1, 1), Slope(1, -1))]
        assert len(pair_arcs) == 2
        assert all(a.punctures == {V00, V11} for a in pair_arcs)
        others = sorted(
            (a.slope, tuple(sorted(a.punctures))) for a in tri.arcs if a not in pair_arcs
        )
        assert others == [
            (ZERO, (V00, V10)),
            (ZERO, (V01, V11)),
            (INF, (V00, V01)),
            (INF, (V10, V11)),
        ]

    def test_type_vi_degrees(self):
        spec = TriType("VI", (ZERO, INF, MINUS_ONE), v=V00, taggings=((V00, PLAIN),))
        tri = build_type(spec)
        assert tri.degree_sequence == (2, 2, 2, 6)
        assert classify(tri).tag == "VI"

    def test_round_trip_all_types(self):
        for tri in enumerate_triangulations(2):
            tt = classify(tri)
            assert build_type(tt) == tri

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameters):
            build_type(TriType("II", (ZERO, INF), v=V00, taggings=ALL_PLAIN))
        with pytest.raises(InvalidParameters):
            # v must be the smaller endpoint mod 2
            build_type(
                TriType("II", (Slope(1, 1), Slope(1, -1)), v=V11, taggings=ALL_PLAIN)
            )
        with pytest.raises(InvalidParameters):
            build_type(
                TriType("III", (Slope(1, 1), Slope(1, -1)), v=V00, v_prime=V11,
                        taggings=((V00, PLAIN), (V11, PLAIN)))
            )

    def test_companions(self):
        r, s = f2_companions(Slope(1, 1), Slope(1, -1))
        assert {r, s} == {ZERO, INF}
        r, s = f2_companions(Slope(1, 3), Slope(1, 1))
        assert {r, s} == {Slope(1, 2), INF}


class TestEnumeration:
    def test_counts_match_parameter_spaces(self):
        slopes = enumerate_slopes(2)
        f1 = len(_farey1_triples(slopes))
        f2 = len(_farey2_pairs(slopes))
        expected = {
            "I": f1 * 16,
            "II": f2 * 2 * 16,
            "III": f2 * 2 * 2 * 4,
            "IV": f2 * 4 * 2 * 8,
            "V": f2 * 4 * 4,
            "VI": f1 * 4 * 2,
        }
        counts = Counter(classify(t).tag for t in enumerate_triangulations(2))
        assert dict(counts) == expected

    def test_no_duplicates(self):
        tris = list(enumerate_triangulations(2))
        assert len(set(tris)) == len(tris)

    def test_degree_sequences_admissible(self):
        for t in enumerate_triangulations(2):
            assert t.degree_sequence in {(3, 3, 3, 3), (2, 2, 4, 4), (2, 2, 3, 5),
                                         (2, 2, 2, 6)}

    def test_all_plain_types(self):
        # only types I and II admit all-plain taggings
        kinds = {classify(t).tag for t in enumerate_triangulations(2) if t.all_plain}
        assert kinds == {"I", "II"}

    def test_triple_count_height_one(self):
        # brute force: pairwise Farey-1 triples from the four height-1 slopes
        slopes = enumerate_slopes(1)
        triples = [
            t for t in itertools.combinations(slopes, 3)
            if all(farey_distance(a, b) == 1 for a, b in itertools.combinations(t, 2))
        ]
        assert len(triples) == 2
        type_i = [t for t in enumerate_triangulations(1) if classify(t).tag == "I"]
        assert len(type_i) == len(triples) * 16


class TestFlip:
    def test_base_flips_are_type_ii(self):
        t0 = base_triangulation()
        for k in range(6):
            assert classify(flip(t0, k)).tag == "II"

    def test_involution(self):
        for t in list(enumerate_triangulations(1))[::7]:
            for k in range(6):
                f = flip(t, k)
                assert flip(f, f.arcs.index(next(iter(f.arc_set - t.arc_set)))) == t

    def test_type_v_neighbors(self):
        spec = TriType("V", (Slope(1, 1), Slope(1, -1)), v=V00,
                       taggings=((V00, PLAIN), (V11, PLAIN)))
        t = build_type(spec)
        kinds = Counter(classify(flip(t, k)).tag for k in range(6))
        assert dict(kinds) == {"IV": 4, "VI": 2}


class TestMatrices:
    def test_mutation_involution(self):
        B = FIG1_MATRIX
        for k in range(6):
            assert mutate(mutate(B, k), k) == B

    def test_mutation_negates_row_col(self):
        B = FIG1_MATRIX
        M = mutate(B, 0)
        assert M[0] == tuple(-x for x in B[0])
        assert tuple(r[0] for r in M) == tuple(-r[0] for r in B)

    def test_skew_preserved(self):
        B = FIG1_MATRIX
        for k in range(6):
            M = mutate(B, k)
            assert all(M[i][j] == -M[j][i] for i in range(6) for j in range(6))

    def test_skew_symmetric_everywhere(self):
        for t in enumerate_triangulations(1):
            if not t.all_plain:
                continue
            B = signed_adjacency(t)
            assert all(B[i][j] == -B[j][i] for i in range(6) for j in range(6))

    def test_not_all_plain_rejected(self):
        t = build_type(
            TriType("VI", (ZERO, INF, MINUS_ONE), v=V00, taggings=((V00, PLAIN),))
        )
        with pytest.raises(NotAllPlain):
            signed_adjacency(t)

    def test_flip_matches_mutation_sample(self):
        for t in enumerate_triangulations(1):
            if not t.all_plain:
                continue
            B = signed_adjacency(t)
            for k in range(6):
                f = flip(t, k)
                if f.all_plain:
                    assert signed_adjacency(f) == mutate(B, k)


class TestJson:
    def test_round_trip(self):
        t0 = base_triangulation()
        assert TaggedTriangulation.from_json(t0.to_json()) == t0
