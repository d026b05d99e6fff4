from fractions import Fraction

import pytest

from spherelam.exactla import adjugate, dd_rays, invert, primitive, rank, solve


class TestRank:
    def test_identity(self):
        assert rank([[1, 0], [0, 1]]) == 2

    def test_singular(self):
        assert rank([[1, 2], [2, 4]]) == 1

    def test_rectangular(self):
        assert rank([[1, 0, 0], [0, 1, 0]]) == 2
        assert rank([[1, 1], [2, 2], [3, 3]]) == 1


class TestSolve:
    def test_square(self):
        assert solve([[2, 0], [0, 4]], [6, 8]) == (3, 2)

    def test_overdetermined_consistent(self):
        # 3 equations, 2 unknowns, consistent
        assert solve([[1, 0], [0, 1], [1, 1]], [2, 3, 5]) == (2, 3)

    def test_overdetermined_inconsistent(self):
        assert solve([[1, 0], [0, 1], [1, 1]], [2, 3, 6]) is None

    def test_fractions(self):
        x = solve([[2, 1], [1, 3]], [1, 1])
        assert x == (Fraction(2, 5), Fraction(1, 5))


class TestInvertAdjugate:
    def test_inverse(self):
        inv = invert([[2, 1], [1, 1]])
        assert inv == [[1, -1], [-1, 2]]

    def test_singular(self):
        assert invert([[1, 1], [1, 1]]) is None
        assert adjugate([[1, 1], [1, 1]]) == (None, 0)

    def test_adjugate_identity(self):
        m = [[3, 1, 2], [0, 2, 1], [1, 0, 1]]
        adj, det = adjugate(m)
        n = len(m)
        prod = [
            [sum(adj[i][k] * m[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert prod == [[det if i == j else 0 for j in range(n)] for i in range(n)]


class TestPrimitive:
    def test_integers(self):
        assert primitive((2, 4, -6)) == (1, 2, -3)

    def test_fractions(self):
        assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)

    def test_sign_preserved(self):
        assert primitive((-2, 0, 4)) == (-1, 0, 2)


class TestDoubleDescription:
    def test_orthant(self):
        rays, lines = dd_rays([[1, 0], [0, 1]])
        assert not lines
        assert set(rays) == {(1, 0), (0, 1)}

    def test_halfplane_has_lineality(self):
        rays, lines = dd_rays([[1, 0]], dim=2)
        assert set(rays) == {(1, 0)}
        assert len([l for l in lines if any(l)]) == 1

    def test_equality_slice(self):
        # x >= 0, y >= 0, z >= 0, x + y = z: a 2-dimensional cone
        rays, lines = dd_rays(
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]], eqs=[[1, 1, -1]]
        )
        assert not [l for l in lines if any(l)]
        assert set(rays) == {(1, 0, 1), (0, 1, 1)}

    def test_point_cone(self):
        rays, lines = dd_rays([[1, 0], [-1, 0], [0, 1], [0, -1]])
        assert not rays
        assert not [l for l in lines if any(l)]

    def test_null_space_via_equalities(self):
        rays, lines = dd_rays([], eqs=[[1, 1, 0], [0, 1, 1]], dim=3)
        assert not rays
        nontrivial = [l for l in lines if any(l)]
        assert len(nontrivial) == 1
        assert nontrivial[0] in ((1, -1, 1), (-1, 1, -1))

    def test_simplicial_3d(self):
        # cone over a triangle: inequalities from the inverse of the
        # generator matrix recover the generators as extreme rays
        gens = [(1, 0, 0), (1, 2, 0), (1, 1, 3)]
        cols = [list(c) for c in zip(*gens)]
        inv = invert(cols)
        ineqs = [primitive(row) for row in inv]
        rays, lines = dd_rays(ineqs)
        assert not [l for l in lines if any(l)]
        assert set(rays) == {primitive(g) for g in gens}
