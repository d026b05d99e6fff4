"""Shear coordinates of allowable curves with respect to the base
triangulation and to arbitrary type-I triangulations.

Three mutually checking computation paths are provided:

- :func:`shear_closed_form` -- closed formulas for the base spiral/slope
  configurations, extended to every curve by the coordinate permutations
  induced by lattice translations and by the order-3 slope rotation;
- :func:`shear_via_word` -- the crossing word of a base-case curve and
  letter/double-letter counting;
- :func:`shear_oracle` -- fully geometric crossing enumeration in the
  lifted plane with quadrilateral scoring.

All three agree exactly on their common domains; the acceptance suite
sweeps this identity over all curves of bounded height.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import plane
from .curves import (
    V00,
    PUNCTURES,
    AllowableCurve,
    Puncture,
    SpiralDir,
    Tagging,
    curves_compatible,
    endpoint_sets,
)
from .errors import BoundExhausted, NotFareyTriple, UnsupportedBaseCase
from .lattice import (
    INF,
    MINUS_ONE,
    ZERO,
    Slope,
    enumerate_slopes,
    is_farey1_triple,
    separating_neighbors,
    standard_form,
    triple_to_basis,
)

ShearVector = tuple[int, int, int, int, int, int]

# ---------------------------------------------------------------------------
# Coordinate permutations
# ---------------------------------------------------------------------------
# A permutation is a tuple p with p[i] the destination of position i; applying
# it moves the value at position i to position p[i].

CoordPerm = tuple[int, ...]

PERM_ID: CoordPerm = (0, 1, 2, 3, 4, 5)
PERM_X: CoordPerm = (3, 4, 5, 0, 1, 2)          # (14)(25)(36)
PERM_Z: CoordPerm = (1, 2, 0, 4, 5, 3)          # (123)(456)
PERM_14: CoordPerm = (3, 1, 2, 0, 4, 5)
PERM_25: CoordPerm = (0, 4, 2, 3, 1, 5)
PERM_36: CoordPerm = (0, 1, 5, 3, 4, 2)
PERM_14_36: CoordPerm = (3, 1, 5, 0, 4, 2)
PERM_25_36: CoordPerm = (0, 4, 5, 3, 1, 2)
PERM_14_25: CoordPerm = (3, 4, 2, 0, 1, 5)


def apply_perm(p: CoordPerm, v: Iterable[int]) -> tuple[int, ...]:
    v = tuple(v)
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[p[i]] = x
    return tuple(out)


def compose(p: CoordPerm, q: CoordPerm) -> CoordPerm:
    """apply(compose(p, q), v) == apply(p, apply(q, v))."""
    return tuple(p[q[i]] for i in range(len(q)))


def _generate_group(generators: Iterable[CoordPerm]) -> frozenset[CoordPerm]:
    gens = list(generators)
    group = {PERM_ID}
    frontier = [PERM_ID]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = compose(h, g)
                if e not in group:
                    group.add(e)
                    nxt.append(e)
        frontier = nxt
    return frozenset(group)


PERM_Z2: CoordPerm = compose(PERM_Z, PERM_Z)
GROUP_X = frozenset({PERM_ID, PERM_X})
GROUP_Y = frozenset({PERM_ID, PERM_14_36, PERM_25_36, PERM_14_25})
GROUP_Z = frozenset({PERM_ID, PERM_Z, PERM_Z2})
GAMMA24 = _generate_group((PERM_14, PERM_25, PERM_36, PERM_Z))

#: permutation induced by translating the lifted plane by the given parity
TRANSLATION_PERMS: dict[tuple[int, int], CoordPerm] = {
    (0, 0): PERM_ID,
    (0, 1): PERM_14_36,
    (1, 0): PERM_25_36,
    (1, 1): PERM_14_25,
}


def perm_product(left: Iterable[CoordPerm], right: Iterable[CoordPerm]) -> list[CoordPerm]:
    """All compositions l*r (apply r first), without duplicates, in a
    deterministic order."""
    seen = []
    for l in left:
        for r in right:
            e = compose(l, r)
            if e not in seen:
                seen.append(e)
    return seen


# ---------------------------------------------------------------------------
# Crossing words
# ---------------------------------------------------------------------------

Letter = tuple[str, int]
Word = tuple[Letter, ...]

T1: Letter = ("t", 1)
T4: Letter = ("t", 4)
R2: Letter = ("r", 2)
R5: Letter = ("r", 5)


def format_word(w: Word) -> str:
    return " ".join(f"{kind}{dec}" for kind, dec in w)


def parse_word(text: str) -> Word:
    out = []
    for tok in text.split():
        kind, dec = tok[0], int(tok[1:])
        if (kind, dec) not in (T1, T4, R2, R5):
            raise ValueError(f"bad letter {tok!r}")
        out.append((kind, dec))
    return tuple(out)


def validate_word(w: Word) -> None:
    """Letter alphabet plus the alternation rule: within the non-leading
    suffix, successive r decorations alternate 2,5 and successive t
    decorations alternate 1,4."""
    for kind, dec in w:
        if (kind, dec) not in (T1, T4, R2, R5):
            raise ValueError(f"bad letter {kind}{dec}")
    for kind in "rt":
        decs = [dec for k, dec in w[1:] if k == kind]
        for prev, cur in zip(decs, decs[1:]):
            if prev == cur:
                raise ValueError(f"{kind}-decorations fail to alternate")


def word_prime(a: int, b: int) -> Word:
    """Grid-exit word of the segment (0,0)->(a,b) for a finite positive
    slope: r per vertical line crossed, t per horizontal, decorated by the
    parity of the line.  w'(1,1) is empty."""
    if a < 1 or b < 1:
        raise UnsupportedBaseCase("word' needs a finite positive slope")
    events: list[tuple[Fraction, Letter]] = []
    for k in range(1, a):
        events.append((Fraction(k, a), ("r", 2 if k % 2 == 0 else 5)))
    for k in range(1, b):
        events.append((Fraction(k, b), ("t", 1 if k % 2 == 0 else 4)))
    events.sort(key=lambda e: e[0])
    return tuple(letter for _, letter in events)


def _suffix_letters(a: int, b: int) -> tuple[Letter, Letter]:
    rk: Letter = ("r", 2 if a % 2 == 0 else 5)
    tl: Letter = ("t", 1 if b % 2 == 0 else 4)
    return rk, tl


def word_of_curve(curve: AllowableCurve) -> Word:
    """The crossing word of a base-case curve: finite positive slope,
    closed or spiraling counterclockwise into v00."""
    a, b = curve.slope.vector
    if a < 1 or b < 1:
        raise UnsupportedBaseCase(f"slope {curve.slope} is not finite positive")
    wp = word_prime(a, b)
    rk, tl = _suffix_letters(a, b)
    if curve.is_closed:
        return (T1,) + wp + (rk, tl) + tuple(reversed(wp)) + (R2, T1)
    assert curve.ends is not None
    if V00 not in curve.punctures or curve.spiral_at(V00) is not SpiralDir.CCW:
        raise UnsupportedBaseCase("open base case needs a CCW spiral at v00")
    other = V00.translate(curve.slope.parity)
    if curve.spiral_at(other) is SpiralDir.CCW:
        return (T1, R2) + wp + (rk,)
    return (T1, R2) + wp + (tl,)


def shear_via_word(curve: AllowableCurve) -> ShearVector:
    """Shear coordinates from the crossing word: coordinates 1,2,4,5 from
    non-leading letter counts, 3 and 6 from double-letter pairs with the
    alternating slot assignment."""
    w = word_of_curve(curve)
    validate_word(w)
    vec = [0] * 6
    for kind, dec in w[1:]:
        if (kind, dec) == T1:
            vec[0] -= 1
        elif (kind, dec) == R2:
            vec[1] += 1
        elif (kind, dec) == T4:
            vec[3] -= 1
        else:
            vec[4] += 1
    rr = [i for i in range(len(w) - 1) if w[i][0] == "r" and w[i + 1][0] == "r"]
    tt = [i for i in range(len(w) - 1) if w[i][0] == "t" and w[i + 1][0] == "t"]
    assert not (rr and tt), "a base word never contains both rr and tt pairs"
    # tt pairs score +1 alternating slots 3,6,...; rr pairs -1 alternating 6,3,...
    for n, _ in enumerate(tt):
        vec[2 if n % 2 == 0 else 5] += 1
    for n, _ in enumerate(rr):
        vec[5 if n % 2 == 0 else 2] -= 1
    return tuple(vec)  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Closed formulas
# ---------------------------------------------------------------------------


def _item1(a: int, b: int) -> ShearVector:
    return (-((b - 1) // 2), a // 2 + 1, (b - a) // 2,
            -(b // 2), (a + 1) // 2, (b - a - 1) // 2)


def _item2(a: int, b: int) -> ShearVector:
    return (-(b // 2), (a + 1) // 2, (b - a + 1) // 2,
            -((b + 1) // 2), a // 2, (b - a) // 2)


def _item3(a: int, b: int) -> ShearVector:
    return (-((b + 1) // 2), a // 2, (b - a) // 2,
            -(b // 2), (a + 1) // 2, (b - a + 1) // 2)


def _item4(a: int, b: int) -> ShearVector:
    return (-(b // 2) - 1, (a - 1) // 2, (b - a + 1) // 2,
            -((b + 1) // 2), a // 2, (b - a) // 2 + 1)


def _item5(a: int, b: int) -> ShearVector:
    return (-b, a, b - a, -b, a, b - a)


BASE_ITEMS = {
    (SpiralDir.CCW, SpiralDir.CCW): _item1,
    (SpiralDir.CCW, SpiralDir.CW): _item2,
    (SpiralDir.CW, SpiralDir.CCW): _item3,
    (SpiralDir.CW, SpiralDir.CW): _item4,
}

# Inverses (as parity maps) of the two slope rotations used to reduce
# negative slopes, with the coordinate permutation each rotation induces.
# rot1: [a,b] -> [b,-a-b] (perm Z); rot2: [a,b] -> [a+b,-a] (perm Z^2).


def _rot1_preimage(curve: AllowableCurve) -> AllowableCurve:
    a, b = curve.slope.vector
    slope = standard_form(-a - b, a)
    if curve.is_closed:
        return AllowableCurve(slope)
    ends = tuple(
        (Puncture((p.i + p.j) % 2, p.i), d) for p, d in curve.ends  # type: ignore[union-attr]
    )
    return AllowableCurve(slope, ends)  # type: ignore[arg-type]


def _rot2_preimage(curve: AllowableCurve) -> AllowableCurve:
    a, b = curve.slope.vector
    slope = standard_form(-b, a + b)
    if curve.is_closed:
        return AllowableCurve(slope)
    ends = tuple(
        (Puncture(p.j, (p.i + p.j) % 2), d) for p, d in curve.ends  # type: ignore[union-attr]
    )
    return AllowableCurve(slope, ends)  # type: ignore[arg-type]


_CLOSED_FORM_CACHE: dict[AllowableCurve, ShearVector] = {}


def shear_closed_form(curve: AllowableCurve) -> ShearVector:
    """Shear coordinates of any allowable curve with respect to the base
    triangulation, by closed formulas plus coordinate permutations."""
    cached = _CLOSED_FORM_CACHE.get(curve)
    if cached is not None:
        return cached
    vec = _closed_form(curve)
    _CLOSED_FORM_CACHE[curve] = vec
    return vec


def _closed_form(curve: AllowableCurve) -> ShearVector:
    a, b = curve.slope.vector
    if curve.is_closed:
        if b >= 0:
            return _item5(a, b)
    elif b >= 1 or b == 0:
        spirals = {d for _, d in curve.ends}  # type: ignore[union-attr]
        if spirals == {SpiralDir.CCW} and b == 0:
            # the both-counterclockwise formula starts at slope > 0;
            # slope 0 is the rot2 image of the infinite slope
            return apply_perm(PERM_Z2, _closed_form(_rot2_preimage(curve)))
        if spirals == {SpiralDir.CW} and a == 0:
            # the both-clockwise formula stops before the infinite slope,
            # which is the rot1 image of slope 0
            return apply_perm(PERM_Z, _closed_form(_rot1_preimage(curve)))
        return _base_open(curve)
    # negative slope: land in the nonnegative range and permute back
    if -b >= a:  # slope <= -1
        return apply_perm(PERM_Z, _closed_form(_rot1_preimage(curve)))
    return apply_perm(PERM_Z2, _closed_form(_rot2_preimage(curve)))


def _base_open(curve: AllowableCurve) -> ShearVector:
    """Open curve of slope in [0, inf]: normalize the endpoint set to the
    one containing v00 by a translation, apply the matching base formula,
    and undo the translation by its coordinate permutation."""
    a, b = curve.slope.vector
    near, far = endpoint_sets(curve.slope)[0]
    for t in ((0, 0), (0, 1), (1, 0), (1, 1)):
        if {near.translate(t), far.translate(t)} == curve.punctures:
            s0 = curve.spiral_at(near.translate(t))
            s1 = curve.spiral_at(far.translate(t))
            item = BASE_ITEMS[(s0, s1)](a, b)
            return apply_perm(TRANSLATION_PERMS[t], item)
    raise AssertionError("unreachable: some parity translation always matches")


# ---------------------------------------------------------------------------
# Geometric oracle
# ---------------------------------------------------------------------------


def shear_oracle(curve: AllowableCurve) -> ShearVector:
    """Shear coordinates by exact crossing geometry in the lifted plane.

    Closed curves are lifted to a lattice-avoiding line and scored over one
    period.  Spiraling curves are lifted to the segment between lattice
    representatives of their punctures; each spiral end contributes the
    crossings of its winding with the incident arcs.  Every crossing is
    scored -1/0/+1 from its quadrilateral; no closed formulas, words or
    coordinate permutations are involved.
    """
    a, b = curve.slope.vector
    if curve.is_closed:
        start = (Fraction(1, 2 * abs(b)), Fraction(0)) if b else (Fraction(0), Fraction(1, 2))
        period = (2 * a, 2 * b)
        xs = plane.segment_crossings(start, period, Fraction(0), Fraction(1), include_lo=True)
        n = len(xs)

        def neighbors(i: int):
            if i > 0:
                prev = xs[i - 1].point
            else:
                prev = (xs[-1].point[0] - period[0], xs[-1].point[1] - period[1])
            if i < n - 1:
                nxt = xs[i + 1].point
            else:
                nxt = (xs[0].point[0] + period[0], xs[0].point[1] + period[1])
            return prev, nxt

        return tuple(plane.accumulate(xs, neighbors))  # type: ignore[return-value]

    (p_punc, p_dir), (q_punc, q_dir) = curve.ends  # type: ignore[misc]
    base = (p_punc.i, p_punc.j)
    tip = (base[0] + a, base[1] + b)
    assert (tip[0] % 2, tip[1] % 2) == (q_punc.i, q_punc.j)
    eps = Fraction(1, 8 * (abs(a) + abs(b) + 2) ** 2)
    side_left = p_dir is SpiralDir.CCW
    seq = (
        plane.spiral_crossings(base, (a, b), p_dir is SpiralDir.CCW,
                               at_end=False, interior_side_left=side_left, eps=eps)
        + plane.segment_crossings((Fraction(base[0]), Fraction(base[1])), (a, b),
                                  Fraction(0), Fraction(1))
        + plane.spiral_crossings(tip, (a, b), q_dir is SpiralDir.CCW,
                                 at_end=True, interior_side_left=side_left, eps=eps)
    )

    def neighbors(i: int):
        prev = seq[i - 1].point if i > 0 else None
        nxt = seq[i + 1].point if i < len(seq) - 1 else None
        return prev, nxt

    return tuple(plane.accumulate(seq, neighbors))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Type-I triangulations, laminations, tangles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeITri:
    """A type-I tagged triangulation: a Farey-1 triple of slopes (two
    parallel arcs per slope) with one tagging per puncture."""

    triple: tuple[Slope, Slope, Slope]
    taggings: tuple[tuple[Puncture, Tagging], ...] = tuple(
        (p, Tagging.PLAIN) for p in PUNCTURES
    )

    def __post_init__(self) -> None:
        if not is_farey1_triple(*self.triple):
            raise NotFareyTriple(f"{self.triple} is not a Farey-1 triple")
        tags = tuple(sorted(self.taggings, key=lambda e: e[0]))
        if tuple(p for p, _ in tags) != PUNCTURES:
            raise ValueError("taggings must cover each puncture exactly once")
        object.__setattr__(self, "taggings", tags)

    def tag_at(self, p: Puncture) -> Tagging:
        for q, tag in self.taggings:
            if q == p:
                return tag
        raise KeyError(str(p))

    @property
    def all_plain(self) -> bool:
        return all(t is Tagging.PLAIN for _, t in self.taggings)

    def to_json(self) -> dict:
        return {
            "triple": [str(s) for s in self.triple],
            "tags": {str(p): t.value for p, t in self.taggings},
        }

    @staticmethod
    def from_json(obj: dict) -> "TypeITri":
        triple = tuple(Slope.parse(s) for s in obj["triple"])
        tags = obj.get("tags", {})
        taggings = tuple(
            (p, Tagging(tags.get(str(p), "plain"))) for p in PUNCTURES
        )
        return TypeITri(triple, taggings)  # type: ignore[arg-type]


BASE_TRIPLE: tuple[Slope, Slope, Slope] = (ZERO, INF, MINUS_ONE)

_FAMILY_OF_SLOPE = {ZERO: 0, INF: 1, MINUS_ONE: 2}


def shear_wrt(curve: AllowableCurve, tri: TypeITri) -> ShearVector:
    """Shear coordinates of a curve with respect to a type-I triangulation.

    Notched punctures reverse the spiral directions of incident curves;
    the triangulation is then carried onto the base one by the unimodular
    map of its triple, and coordinates are read back through the induced
    arc correspondence (slot i and i+3 hold the two arcs of slope
    ``triple[i]``).
    """
    for p, tag in tri.taggings:
        if tag is Tagging.NOTCHED:
            curve = curve.reverse_spiral(p)
    m = triple_to_basis(tri.triple)
    if curve.is_closed:
        image = AllowableCurve(m.apply_slope(curve.slope))
    else:
        ends = tuple(
            (Puncture(*m.apply_parity((p.i, p.j))), d) for p, d in curve.ends  # type: ignore[union-attr]
        )
        image = AllowableCurve(m.apply_slope(curve.slope), ends)  # type: ignore[arg-type]
    v = shear_closed_form(image)
    out = [0] * 6
    for i, q in enumerate(tri.triple):
        fam = _FAMILY_OF_SLOPE[m.apply_slope(q)]
        out[i] = v[fam]
        out[i + 3] = v[fam + 3]
    return tuple(out)  # type: ignore[return-value]


BASE_TRI = TypeITri(BASE_TRIPLE)


def _curve_sort_key(c: AllowableCurve):
    if c.ends is None:
        return (c.slope.a, c.slope.b, 0, ())
    enc = tuple((p.i, p.j, d.value) for p, d in c.ends)
    return (c.slope.a, c.slope.b, 1, enc)


@dataclass(frozen=True)
class Tangle:
    """A finite integer-weighted collection of allowable curves; no
    compatibility or positivity requirement.  Duplicate curves merge by
    summing weights."""

    weights: tuple[tuple[AllowableCurve, int], ...]

    def __post_init__(self) -> None:
        merged: dict[AllowableCurve, int] = {}
        for c, w in self.weights:
            merged[c] = merged.get(c, 0) + w
        items = tuple(sorted(merged.items(), key=lambda cw: _curve_sort_key(cw[0])))
        object.__setattr__(self, "weights", items)

    @property
    def support(self) -> tuple[AllowableCurve, ...]:
        return tuple(c for c, w in self.weights if w != 0)

    @property
    def is_trivial(self) -> bool:
        return not self.support


@dataclass(frozen=True)
class QuasiLamination:
    """Pairwise compatible allowable curves with positive integer weights."""

    weights: tuple[tuple[AllowableCurve, int], ...]

    def __post_init__(self) -> None:
        merged: dict[AllowableCurve, int] = {}
        for c, w in self.weights:
            merged[c] = merged.get(c, 0) + w
        items = tuple(sorted(merged.items(), key=lambda cw: _curve_sort_key(cw[0])))
        if any(w <= 0 for _, w in items):
            raise ValueError("quasi-lamination weights must be positive")
        curves = [c for c, _ in items]
        for x, y in itertools.combinations(curves, 2):
            if not curves_compatible(x, y):
                raise ValueError(f"incompatible curves {x}, {y}")
        object.__setattr__(self, "weights", items)

    @property
    def support(self) -> tuple[AllowableCurve, ...]:
        return tuple(c for c, _ in self.weights)


def tangle_shear(tangle: Tangle, tri: TypeITri = BASE_TRI) -> ShearVector:
    vec = [0] * 6
    for c, w in tangle.weights:
        s = shear_wrt(c, tri)
        for i in range(6):
            vec[i] += w * s[i]
    return tuple(vec)  # type: ignore[return-value]


def shear_lamination(lam: QuasiLamination, tri: TypeITri = BASE_TRI) -> ShearVector:
    return tangle_shear(Tangle(lam.weights), tri)


# ---------------------------------------------------------------------------
# Once-punctured torus and the sphere-to-torus projection
# ---------------------------------------------------------------------------

PERM3_Z: tuple[int, ...] = (1, 2, 0)
PERM3_Z2: tuple[int, ...] = (2, 0, 1)


def _torus_base(a: int, b: int) -> tuple[int, int, int]:
    """Torus shear of the closed curve of nonnegative slope b/a with
    respect to the plain torus triangulation of triple (0, inf, -1),
    computed from the cyclic crossing word of one period."""
    start = (Fraction(1, 2 * abs(b)), Fraction(0)) if b else (Fraction(0), Fraction(1, 2))
    xs = plane.segment_crossings(start, (a, b), Fraction(0), Fraction(1), include_lo=True)
    letters = [c.family for c in xs if c.family in ("h", "v")]
    x1 = -sum(1 for l in letters if l == "h")
    x2 = sum(1 for l in letters if l == "v")
    n = len(letters)
    tt = sum(1 for i in range(n) if letters[i] == "h" and letters[(i + 1) % n] == "h")
    rr = sum(1 for i in range(n) if letters[i] == "v" and letters[(i + 1) % n] == "v")
    assert not (tt and rr)
    return (x1, x2, tt - rr)


def torus_shear(s: Slope) -> tuple[int, int, int]:
    """Shear coordinates of the closed curve of slope s on the
    once-punctured torus, indexed compatibly with the sphere coordinates
    (slot i of the torus vector matches slots i, i+3 on the sphere)."""
    a, b = s.vector
    if b >= 0:
        return _torus_base(a, b)
    if -b >= a:
        pre = standard_form(-a - b, a)
        v = torus_shear(pre)
        return tuple(apply_perm(PERM3_Z, v))  # type: ignore[return-value]
    pre = standard_form(-b, a + b)
    v = torus_shear(pre)
    return tuple(apply_perm(PERM3_Z2, v))  # type: ignore[return-value]


def sphere_torus_check(s: Slope, tri: TypeITri) -> bool:
    """Projection identity: for a closed curve, each sphere coordinate
    pair (i, i+3) collapses to the torus coordinate of the corresponding
    torus arc."""
    sphere = shear_wrt(AllowableCurve(s), tri)
    m = triple_to_basis(tri.triple)
    torus = torus_shear(m.apply_slope(s))
    for i, q in enumerate(tri.triple):
        fam = _FAMILY_OF_SLOPE[m.apply_slope(q)]
        if not (sphere[i] == sphere[i + 3] == torus[fam]):
            return False
    return True


# ---------------------------------------------------------------------------
# Null-tangle witness search
# ---------------------------------------------------------------------------


def _all_taggings() -> list[tuple[tuple[Puncture, Tagging], ...]]:
    out = []
    for combo in itertools.product((Tagging.PLAIN, Tagging.NOTCHED), repeat=4):
        out.append(tuple(zip(PUNCTURES, combo)))
    return out


def find_witness(tangle: Tangle, max_height: int = 12) -> TypeITri | None:
    """A type-I triangulation on which the tangle has nonzero shear, or
    None for a trivial tangle.

    Candidates follow the constructive separation argument: for each slope
    in the support, the Farey-1 triple produced by Stern-Brocot descent
    around that slope, under every per-puncture tagging; the base
    triangulation's taggings are tried first.  If the support is nonzero
    and no candidate works, remaining Farey-1 triples up to max_height are
    swept before giving up.
    """
    support = tangle.support
    if not support:
        return None
    slopes = sorted({c.slope for c in support})
    triples: list[tuple[Slope, Slope, Slope]] = [BASE_TRIPLE]
    for f in slopes:
        lo, mid = separating_neighbors(slopes, f)
        triples.append((mid, f, lo))
    taggings = _all_taggings()
    for triple in triples:
        for tags in taggings:
            tri = TypeITri(triple, tags)
            if any(tangle_shear(tangle, tri)):
                return tri
    seen = {frozenset(t) for t in triples}
    pool = enumerate_slopes(max_height)
    for i, q1 in enumerate(pool):
        for q2 in pool[i + 1:]:
            if abs(q1.a * q2.b - q1.b * q2.a) != 1:
                continue
            for q3 in pool:
                key = frozenset((q1, q2, q3))
                if len(key) < 3 or key in seen:
                    continue
                if not is_farey1_triple(q1, q2, q3):
                    continue
                seen.add(key)
                for tags in taggings:
                    tri = TypeITri((q1, q2, q3), tags)
                    if any(tangle_shear(tangle, tri)):
                        return tri
    raise BoundExhausted(
        "nonzero-support tangle with no witness within the candidate set"
    )
