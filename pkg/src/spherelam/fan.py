"""Maximal compatible curve collections and the rational
quasi-lamination fan.

Maximal collections are the kappa images of tagged triangulations (types
I-VI, six curves) together with the collections built around one closed
curve (type VII, five curves).  Their nonnegative spans are the maximal
cones of the fan; cones are exact integer/rational objects throughout.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import exactla
from .curves import (
    AllowableCurve,
    Puncture,
    SpiralDir,
    curves_compatible,
    endpoint_sets,
    kappa,
    kappa_inv,
)
from .errors import BoundExhausted, RankDeficient
from .lattice import Slope, enumerate_slopes
from .shear import (
    GAMMA24,
    GROUP_Y,
    GROUP_Z,
    PERM_ID,
    PERM_X,
    PERM_Z,
    PERM_Z2,
    compose,
    QuasiLamination,
    ShearVector,
    _curve_sort_key,
    _item1,
    _item2,
    _item4,
    _item5,
    apply_perm,
    perm_product,
    shear_closed_form,
)
from .triangulation import TaggedTriangulation, classify, enumerate_triangulations, flip

# ---------------------------------------------------------------------------
# Maximal collections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaximalCollection:
    """A maximal set of pairwise compatible allowable curves: six curves
    (kind I-VI, the kappa image of a triangulation) or five with one
    closed curve (kind VII)."""

    curves: tuple[AllowableCurve, ...]
    kind: str

    def __post_init__(self) -> None:
        curves = tuple(sorted(set(self.curves), key=_curve_sort_key))
        object.__setattr__(self, "curves", curves)
        closed = [c for c in curves if c.is_closed]
        expected = 5 if closed else 6
        if len(closed) > 1 or len(curves) != expected:
            raise ValueError("a maximal collection has 6 curves, or 5 with a closed one")
        for x, y in itertools.combinations(curves, 2):
            if not curves_compatible(x, y):
                raise ValueError(f"incompatible curves {x}, {y}")

    @property
    def closed_curve(self) -> AllowableCurve | None:
        for c in self.curves:
            if c.is_closed:
                return c
        return None


def _spiral_pair(slope: Slope, at: Puncture, direction: SpiralDir):
    far = at.translate(slope.parity)
    return (
        AllowableCurve(slope, ((at, direction), (far, SpiralDir.CW))),
        AllowableCurve(slope, ((at, direction), (far, SpiralDir.CCW))),
    )


def closed_collections(slope: Slope) -> list[MaximalCollection]:
    """The sixteen type-VII collections around the closed curve of a given
    slope: one spiral-agreeing pair in each of the two endpoint pairs."""
    first, second = endpoint_sets(slope)
    out = []
    dirs = (SpiralDir.CW, SpiralDir.CCW)
    for v in first:
        for v2 in second:
            for d1 in dirs:
                for d2 in dirs:
                    curves = (AllowableCurve(slope),) + _spiral_pair(
                        slope, v, d1
                    ) + _spiral_pair(slope, v2, d2)
                    out.append(MaximalCollection(curves, "VII"))
    return out


def maximal_collections(max_height: int) -> Iterator[MaximalCollection]:
    """Kappa images of all triangulations plus all type-VII collections,
    with slope parameters bounded by max_height."""
    for tri in enumerate_triangulations(max_height):
        kind = classify(tri).tag
        yield MaximalCollection(tuple(kappa(a) for a in tri.arcs), kind)
    for slope in enumerate_slopes(max_height):
        yield from closed_collections(slope)


# ---------------------------------------------------------------------------
# Cones
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """Nonnegative span of the shear vectors of a maximal collection (or a
    sub-collection); simplicial by construction."""

    generators: tuple[ShearVector, ...]
    kind: str
    collection: MaximalCollection | None = None

    @property
    def dim(self) -> int:
        return exactla.rank(self.generators)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(exactla.primitive(g) for g in self.generators))

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


def cone_of(coll: MaximalCollection) -> Cone:
    """The maximal cone of a collection; generators stay aligned with the
    collection's curve order.  Rank 6 for kinds I-VI, 5 for kind VII."""
    gens = tuple(shear_closed_form(c) for c in coll.curves)
    expected = 5 if coll.kind == "VII" else 6
    r = exactla.rank(gens)
    if r != expected or r != len(gens):
        raise RankDeficient(f"kind {coll.kind} cone has rank {r}")
    return Cone(gens, coll.kind, coll)


def membership(v: Sequence, cone: Cone):
    """Nonnegative rational coefficients of v over the cone's generators,
    or None.  The generators are independent, so coefficients are unique."""
    cols = list(zip(*cone.generators))  # 6 x r matrix with generator columns
    coeffs = exactla.solve(cols, list(v))
    if coeffs is None or any(c < 0 for c in coeffs):
        return None
    return coeffs


class _ConeIndex:
    """All maximal cones at a height, with per-cone exact solvers."""

    def __init__(self, max_height: int):
        self.cones = [cone_of(c) for c in maximal_collections(max_height)]
        self._solvers = [self._make_solver(c) for c in self.cones]

    @staticmethod
    def _make_solver(cone: Cone):
        # integer adjugate solvers: coefficients come out as s/det with
        # integer s, so integer inputs stay in integer arithmetic
        cols = [list(col) for col in zip(*cone.generators)]
        n = len(cone.generators)
        if n == 6:
            adj, det = exactla.adjugate(cols)
            assert adj is not None

            def solve6(v):
                return tuple(
                    Fraction(sum(a * x for a, x in zip(row, v)), det) for row in adj
                )

            return solve6
        # rank 5: invert five independent rows, check the remaining one
        for rows in itertools.combinations(range(6), 5):
            sub = [cols[i] for i in rows]
            adj5, det5 = exactla.adjugate(sub)
            if adj5 is None:
                continue
            others = [i for i in range(6) if i not in rows]

            def solve5(v, rows=rows, adj5=adj5, det5=det5, others=others):
                picked = [v[i] for i in rows]
                x = tuple(
                    Fraction(sum(a * y for a, y in zip(row, picked)), det5)
                    for row in adj5
                )
                for i in others:
                    if sum(c * xi for c, xi in zip(cols[i], x)) != v[i]:
                        return None
                return x

            return solve5
        raise RankDeficient("no invertible 5x5 minor")

    def containing(self, v) -> Iterator[tuple[Cone, tuple[Fraction, ...]]]:
        for cone, solver in zip(self.cones, self._solvers):
            coeffs = solver(v)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                yield cone, coeffs


_INDEX_CACHE: dict[int, _ConeIndex] = {}


def cone_index(max_height: int) -> _ConeIndex:
    idx = _INDEX_CACHE.get(max_height)
    if idx is None:
        idx = _ConeIndex(max_height)
        _INDEX_CACHE[max_height] = idx
    return idx


def locate(v: Sequence[int], max_height: int = 6) -> QuasiLamination:
    """The unique quasi-lamination with the given integer shear vector,
    searched over all maximal cones at the given height."""
    if not any(v):
        return QuasiLamination(())
    index = cone_index(max_height)
    result: QuasiLamination | None = None
    for cone, coeffs in index.containing(v):
        assert cone.collection is not None
        weights = []
        for curve, c in zip(cone.collection.curves, coeffs):
            if c == 0:
                continue
            if c.denominator != 1:
                raise AssertionError(f"non-integer weight {c} for integer input")
            weights.append((curve, int(c)))
        lam = QuasiLamination(tuple(weights))
        if result is None:
            result = lam
        elif result != lam:
            raise AssertionError("ambiguous location across containing cones")
    if result is None:
        raise BoundExhausted(
            f"no cone at height {max_height} contains {tuple(v)}; raise max_height"
        )
    return result


def count_containing_cones(v: Sequence[int], max_height: int = 6) -> int:
    """Number of distinct maximal cones whose span contains v."""
    return sum(1 for _ in cone_index(max_height).containing(v))


# ---------------------------------------------------------------------------
# Universal coefficient lists and g-vectors
# ---------------------------------------------------------------------------


def _slopes_in_range(max_height: int, low_open: bool, include_inf: bool):
    """Standard-form slopes of bounded height in [0, inf] with the range
    endpoints included or not as flagged."""
    for s in enumerate_slopes(max_height):
        if s.is_infinite:
            if include_inf:
                yield s
        elif s.b > 0 or (s.b == 0 and not low_open):
            yield s


def _thm12_item2(a: int, b: int) -> ShearVector:
    return (-(a // 2) - 1, (b - 1) // 2, (a - b + 1) // 2,
            -((a + 1) // 2), b // 2, (a - b) // 2 + 1)


THM12_ITEMS = (_item1, _thm12_item2, _item2, _item5)


def universal_raw(max_height: int, form: str) -> list[ShearVector]:
    """The universal-coefficient list as generated (before deduplication):
    one entry per (item, slope, permutation)."""
    out: list[ShearVector] = []
    if form == "thm12":
        for item in THM12_ITEMS:
            for s in _slopes_in_range(max_height, low_open=True, include_inf=True):
                base = item(s.a, s.b)
                for p in sorted(GAMMA24):
                    out.append(apply_perm(p, base))
        return out
    if form == "thm81":
        zx = perm_product(sorted(GROUP_Z), (PERM_ID, PERM_X))
        zy = perm_product(sorted(GROUP_Z), sorted(GROUP_Y))
        z = sorted(GROUP_Z)
        rows = (
            (_item1, True, True, zx),
            (_item4, False, False, zx),
            (_item2, True, True, zy),
            (_item5, True, True, z),
        )
        for item, low_open, include_inf, perms in rows:
            for s in _slopes_in_range(max_height, low_open, include_inf):
                base = item(s.a, s.b)
                for p in perms:
                    out.append(apply_perm(p, base))
        return out
    raise ValueError(f"unknown form {form!r}")


def universal_coeffs(max_height: int, form: str = "thm81") -> list[ShearVector]:
    """Deduplicated, sorted universal geometric coefficients at bounded
    height, in either of the two equivalent listings."""
    return sorted(set(universal_raw(max_height, form)))


_FLIP_GROUP = sorted(
    {p for p in GAMMA24 if p[0] in (0, 3) and p[1] in (1, 4) and p[2] in (2, 5)}
)  # the slope-preserving subgroup generated by (14), (25), (36)


def g_vectors(max_height: int) -> list[ShearVector]:
    """Shear vectors of all non-closed allowable curves at bounded height.

    Items are generated over nonnegative-slope base curves; each slope
    rotation represents curves of a different slope, so rotated orbit
    elements are kept only when the slope they stand for is itself within
    the height bound."""
    from .lattice import standard_form

    out = set()
    for s in _slopes_in_range(max_height, low_open=True, include_inf=True):
        a, b = s.vector
        rotated = (
            (PERM_ID, s),
            (PERM_Z, standard_form(b, -a - b)),
            (PERM_Z2, standard_form(a + b, -a)),
        )
        for item in THM12_ITEMS[:3]:
            base = item(a, b)
            for zpow, image_slope in rotated:
                if image_slope.height > max_height:
                    continue
                for tau in _FLIP_GROUP:
                    out.add(apply_perm(compose(zpow, tau), base))
    return sorted(out)


# ---------------------------------------------------------------------------
# Adjacency, fan axioms, torus cross-check
# ---------------------------------------------------------------------------


def flip_adjacency(cone: Cone) -> list[Cone]:
    """Neighboring maximal cones: the six flips for kinds I-VI, the four
    double-spiral reversals for kind VII."""
    coll = cone.collection
    assert coll is not None
    if cone.kind != "VII":
        tri = TaggedTriangulation(tuple(kappa_inv(c) for c in coll.curves))
        out = []
        for k in range(6):
            flipped = flip(tri, k)
            kind = classify(flipped).tag
            out.append(cone_of(MaximalCollection(
                tuple(kappa(a) for a in flipped.arcs), kind)))
        return out
    out = []
    for c in coll.curves:
        if c.is_closed:
            continue
        reversed_curve = c
        for p in c.punctures:
            reversed_curve = reversed_curve.reverse_spiral(p)
        rest = tuple(x for x in coll.curves if x != c)
        out.append(cone_of(MaximalCollection(rest + (reversed_curve,), "VII")))
    return out


def _h_rep(cone: Cone) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """(inequalities, equalities) cutting out the cone."""
    cols = [list(col) for col in zip(*cone.generators)]
    n = len(cone.generators)
    if n == 6:
        inv = exactla.invert(cols)
        assert inv is not None
        return [exactla.primitive(row) for row in inv], []
    # 5-dimensional cone: coefficient functionals on the span plus the
    # span's orthogonal complement as equalities
    normals = _null_space(cone.generators)
    for rows in itertools.combinations(range(6), 5):
        sub = [cols[i] for i in rows]
        inv5 = exactla.invert(sub)
        if inv5 is not None:
            ineqs = []
            for row in inv5:
                full = [Fraction(0)] * 6
                for val, i in zip(row, rows):
                    full[i] = val
                ineqs.append(exactla.primitive(full))
            return ineqs, normals
    raise RankDeficient("no invertible 5x5 minor")


def _null_space(gens: Sequence[ShearVector]) -> list[tuple[int, ...]]:
    """Basis of {n : n . g = 0 for all generators g}."""
    rays, lines = exactla.dd_rays([], eqs=list(gens), dim=6)
    return [l for l in lines if any(l)]


def cone_rays(cone: Cone) -> set[tuple[int, ...]]:
    return {exactla.primitive(g) for g in cone.generators}


def intersection_rays(c1: Cone, c2: Cone) -> tuple[set, list]:
    i1, e1 = _h_rep(c1)
    i2, e2 = _h_rep(c2)
    rays, lines = exactla.dd_rays(i1 + i2, eqs=e1 + e2, dim=6)
    return set(rays), [l for l in lines if any(l)]


@dataclass
class FanReport:
    pairs_checked: int
    failures: int

    @property
    def ok(self) -> bool:
        return self.failures == 0


def fan_check(cones: Sequence[Cone], trials: int, seed: int = 0) -> FanReport:
    """Sample cone pairs and verify each intersection is the common face
    spanned by the shared generators (exact double-description check)."""
    rng = random.Random(seed)
    failures = 0
    checked = 0
    for _ in range(trials):
        c1, c2 = rng.sample(cones, 2)
        common = cone_rays(c1) & cone_rays(c2)
        rays, lines = intersection_rays(c1, c2)
        checked += 1
        if lines or rays != common:
            failures += 1
    return FanReport(checked, failures)


PLANE_P_EQS: tuple[tuple[int, ...], ...] = (
    (1, 1, 1, 0, 0, 0),
    (1, 0, 0, -1, 0, 0),
    (0, 1, 0, 0, -1, 0),
    (0, 0, 1, 0, 0, -1),
)

SUBSPACE_U_EQS: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, -1, 0, 0),
    (0, 1, 0, 0, -1, 0),
    (0, 0, 1, 0, 0, -1),
)


def in_plane_p(v: Sequence[int]) -> bool:
    return all(exactla.dot(eq, v) == 0 for eq in PLANE_P_EQS)


def induced_torus_check(max_height: int) -> bool:
    """For each all-plain type-I triangulation, the slice of its cone by
    the subspace {x_i = x_{i+3}} projects onto the cone of the matching
    torus triangulation (generated by the per-slope sums of curve pairs)."""
    from .triangulation import _farey1_triples

    triples = _farey1_triples(enumerate_slopes(max_height))
    for triple in triples:
        curves = []
        for s in triple:
            for pair in endpoint_sets(s):
                curves.append(AllowableCurve(
                    s, ((pair[0], SpiralDir.CW), (pair[1], SpiralDir.CW))))
        coll = MaximalCollection(tuple(curves), "I")
        cone = cone_of(coll)
        # same-slope generator pairs must be swapped by the half-turn
        # permutation; their sums generate the torus cone after projection
        torus_gens = []
        for s in triple:
            pair_vecs = [shear_closed_form(c) for c in coll.curves if c.slope == s]
            assert len(pair_vecs) == 2
            if apply_perm(PERM_X, pair_vecs[0]) != pair_vecs[1]:
                return False
            total = tuple(a + b for a, b in zip(pair_vecs[0], pair_vecs[1]))
            torus_gens.append(exactla.primitive(total[:3]))
        ineqs, eqs = _h_rep(cone)
        rays, lines = exactla.dd_rays(ineqs, eqs=list(eqs) + list(SUBSPACE_U_EQS), dim=6)
        if lines:
            return False
        projected = {exactla.primitive(r[:3]) for r in rays}
        if projected != set(torus_gens):
            return False
    return True
