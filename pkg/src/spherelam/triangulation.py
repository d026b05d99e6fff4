"""Tagged triangulations of the four-punctured sphere.

Every tagged triangulation has six arcs and falls into one of six
combinatorial types:

- I    a Farey-1 triple of slopes, two parallel arcs per slope
- II   a Farey-2 pair spanning two punctures plus four determined arcs
- III  a Farey-2 pair plus two coinciding pairs on one companion slope
- IV   a Farey-2 pair, one coinciding pair and two single arcs
- V    a Farey-2 pair plus two coinciding pairs on both companion slopes
- VI   three coinciding pairs through a single puncture

Types are parametrized exactly as enumerated by :func:`enumerate_triangulations`
and recognized by :func:`classify`; :func:`build_type` inverts classify.
Signed adjacency matrices are computed geometrically from the lifted
segment arrangement, independently of flips, so the flip/mutation identity
is a genuine cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .curves import (
    PUNCTURES,
    Puncture,
    TaggedArc,
    Tagging,
    arcs_compatible,
    endpoint_sets,
)
from .errors import InternalNonUnique, InvalidParameters, NotAllPlain
from .lattice import (
    Slope,
    enumerate_slopes,
    farey_distance,
    is_farey1_triple,
    mediant,
    standard_form,
)
from .plane import triangular_faces

_ADMISSIBLE_DEGREES = {(2, 2, 2, 6), (2, 2, 3, 5), (2, 2, 4, 4), (3, 3, 3, 3)}


@dataclass(frozen=True)
class TaggedTriangulation:
    """Six distinct pairwise compatible tagged arcs, in a fixed order."""

    arcs: tuple[TaggedArc, ...]

    def __post_init__(self) -> None:
        if len(self.arcs) != 6 or len(set(self.arcs)) != 6:
            raise ValueError("a tagged triangulation has exactly 6 distinct arcs")
        for x, y in itertools.combinations(self.arcs, 2):
            if not arcs_compatible(x, y):
                raise ValueError(f"incompatible arcs {x}, {y}")
        if self.degree_sequence not in _ADMISSIBLE_DEGREES:
            raise ValueError(f"impossible degree sequence {self.degree_sequence}")

    @property
    def degree_sequence(self) -> tuple[int, int, int, int]:
        deg = {p: 0 for p in PUNCTURES}
        for arc in self.arcs:
            for p in arc.punctures:
                deg[p] += 1
        return tuple(sorted(deg.values()))  # type: ignore[return-value]

    @property
    def arc_set(self) -> frozenset[TaggedArc]:
        return frozenset(self.arcs)

    @property
    def height(self) -> int:
        return max(arc.height for arc in self.arcs)

    @property
    def all_plain(self) -> bool:
        return all(
            t is Tagging.PLAIN for arc in self.arcs for _, t in arc.ends
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, TaggedTriangulation) and self.arc_set == other.arc_set

    def __hash__(self) -> int:
        return hash(self.arc_set)

    def to_json(self) -> list:
        return [arc.to_json() for arc in self.arcs]

    @staticmethod
    def from_json(obj: list) -> "TaggedTriangulation":
        return TaggedTriangulation(tuple(TaggedArc.from_json(a) for a in obj))


def base_triangulation() -> TaggedTriangulation:
    """The base triangulation: arcs 1,4 of slope 0, arcs 2,5 of slope inf,
    arcs 3,6 of slope -1, all plain, indexed so that arcs 1,2,3 pass
    through v00."""
    z = Slope(1, 0)
    inf = Slope(0, 1)
    mone = Slope(1, -1)
    order = [(z, 0), (inf, 0), (mone, 0), (z, 1), (inf, 1), (mone, 1)]
    arcs = []
    for slope, which in order:
        pair = endpoint_sets(slope)[which]
        arcs.append(
            TaggedArc(slope, ((pair[0], Tagging.PLAIN), (pair[1], Tagging.PLAIN)))
        )
    return TaggedTriangulation(tuple(arcs))


def f2_companions(p: Slope, q: Slope) -> tuple[Slope, Slope]:
    """The two slopes Farey-1 adjacent to both members of a Farey-2 pair:
    the half-sum and half-difference of the primitive vectors."""
    if farey_distance(p, q) != 2:
        raise InvalidParameters(f"{p}, {q} is not a Farey-2 pair")
    r = standard_form((p.a + q.a) // 2, (p.b + q.b) // 2)
    s = standard_form((p.a - q.a) // 2, (p.b - q.b) // 2)
    return (r, s) if r <= s else (s, r)


@dataclass(frozen=True)
class TriType:
    """Combinatorial type and determining data of a tagged triangulation.

    ``slopes`` is the Farey-1 triple (types I, VI) or the Farey-2 pair
    (II-V), sorted.  ``taggings`` holds only the freely choosable
    per-puncture tags of the type.
    """

    tag: str
    slopes: tuple[Slope, ...]
    v: Puncture | None = None
    v_prime: Puncture | None = None
    taggings: tuple[tuple[Puncture, Tagging], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slopes", tuple(sorted(self.slopes)))
        object.__setattr__(
            self, "taggings", tuple(sorted(self.taggings, key=lambda e: e[0]))
        )

    def tag_at(self, p: Puncture) -> Tagging:
        for q, t in self.taggings:
            if q == p:
                return t
        raise KeyError(str(p))

    def to_json(self) -> dict:
        out: dict = {"type": self.tag, "slopes": [str(s) for s in self.slopes]}
        if self.v is not None:
            out["v"] = str(self.v)
        if self.v_prime is not None:
            out["v_prime"] = str(self.v_prime)
        out["tags"] = {str(p): t.value for p, t in self.taggings}
        return out


def _plain_pair(slope: Slope, pair, tags) -> TaggedArc:
    return TaggedArc(slope, ((pair[0], tags[0]), (pair[1], tags[1])))


def _coinciding_pair(slope: Slope, agree_at: Puncture, tag: Tagging) -> list[TaggedArc]:
    far = agree_at.translate(slope.parity)
    return [
        TaggedArc(slope, ((agree_at, tag), (far, Tagging.PLAIN))),
        TaggedArc(slope, ((agree_at, tag), (far, Tagging.NOTCHED))),
    ]


def _pair_endpoints(p: Slope, v: Puncture) -> Puncture:
    return v.translate(p.parity)


def build_type(spec: TriType) -> TaggedTriangulation:
    """The unique tagged triangulation with the given type data."""
    tag = spec.tag
    tags = dict(spec.taggings)

    def vertex_tag(p: Puncture) -> Tagging:
        if p not in tags:
            raise InvalidParameters(f"missing tagging at v{p}")
        return tags[p]

    if tag in ("I", "VI"):
        if len(spec.slopes) != 3 or not is_farey1_triple(*spec.slopes):
            raise InvalidParameters("types I and VI need a Farey-1 triple")
    else:
        if len(spec.slopes) != 2 or farey_distance(*spec.slopes) != 2:
            raise InvalidParameters("types II-V need a Farey-2 pair")

    if tag == "I":
        if set(tags) != set(PUNCTURES):
            raise InvalidParameters("type I needs taggings at all punctures")
        arcs = []
        for slope in spec.slopes:
            for pair in endpoint_sets(slope):
                arcs.append(
                    _plain_pair(slope, pair, (vertex_tag(pair[0]), vertex_tag(pair[1])))
                )
        return TaggedTriangulation(tuple(arcs))

    if tag == "VI":
        if spec.v is None or len(tags) != 1 or spec.v not in tags:
            raise InvalidParameters("type VI needs v and a tagging at v")
        arcs = []
        for slope in spec.slopes:
            arcs.extend(_coinciding_pair(slope, spec.v, vertex_tag(spec.v)))
        return TaggedTriangulation(tuple(arcs))

    p, q = spec.slopes
    if spec.v is None:
        raise InvalidParameters("types II-V need a vertex v")
    v = spec.v
    u = _pair_endpoints(p, v)
    companions = f2_companions(p, q)

    if tag == "II":
        if not (v.i, v.j) < (u.i, u.j):
            raise InvalidParameters("type II requires v below its partner mod 2")
        if set(tags) != set(PUNCTURES):
            raise InvalidParameters("type II needs taggings at all punctures")
        arcs = [
            _plain_pair(s, (v, u), (vertex_tag(v), vertex_tag(u))) for s in (p, q)
        ]
        for c in companions:
            for pair in endpoint_sets(c):
                arcs.append(
                    _plain_pair(c, pair, (vertex_tag(pair[0]), vertex_tag(pair[1])))
                )
        return TaggedTriangulation(tuple(arcs))

    if tag == "III":
        if not (v.i, v.j) < (u.i, u.j):
            raise InvalidParameters("type III requires v below its partner mod 2")
        if spec.v_prime is None or spec.v_prime in (v, u):
            raise InvalidParameters("type III needs v' off the Farey-2 pair")
        if set(tags) != {v, u}:
            raise InvalidParameters("type III taggings live at the pair endpoints")
        c = next((c for c in companions if v.translate(c.parity) == spec.v_prime), None)
        if c is None:
            raise InvalidParameters("v' unreachable from v by a companion slope")
        arcs = [
            _plain_pair(s, (v, u), (vertex_tag(v), vertex_tag(u))) for s in (p, q)
        ]
        arcs.extend(_coinciding_pair(c, v, vertex_tag(v)))
        arcs.extend(_coinciding_pair(c, u, vertex_tag(u)))
        return TaggedTriangulation(tuple(arcs))

    if tag == "IV":
        if spec.v_prime is None or spec.v_prime in (v, u):
            raise InvalidParameters("type IV needs v' off the Farey-2 pair")
        w = next(x for x in PUNCTURES if x not in (v, u, spec.v_prime))
        if set(tags) != {v, u, w}:
            raise InvalidParameters("type IV taggings live off v'")
        c = next((c for c in companions if v.translate(c.parity) == spec.v_prime), None)
        if c is None:
            raise InvalidParameters("v' unreachable from v by a companion slope")
        c2 = companions[0] if c == companions[1] else companions[1]
        arcs = [
            _plain_pair(s, (v, u), (vertex_tag(v), vertex_tag(u))) for s in (p, q)
        ]
        arcs.extend(_coinciding_pair(c, v, vertex_tag(v)))
        arcs.append(_plain_pair(c2, (v, w), (vertex_tag(v), vertex_tag(w))))
        arcs.append(_plain_pair(c, (u, w), (vertex_tag(u), vertex_tag(w))))
        return TaggedTriangulation(tuple(arcs))

    if tag == "V":
        if set(tags) != {v, u}:
            raise InvalidParameters("type V taggings live at the pair endpoints")
        arcs = [
            _plain_pair(s, (v, u), (vertex_tag(v), vertex_tag(u))) for s in (p, q)
        ]
        for c in companions:
            arcs.extend(_coinciding_pair(c, v, vertex_tag(v)))
        return TaggedTriangulation(tuple(arcs))

    raise InvalidParameters(f"unknown type {tag!r}")


def classify(tri: TaggedTriangulation) -> TriType:
    """Type and determining data of a triangulation (inverse of
    :func:`build_type` up to arc order)."""
    arcs = tri.arcs
    deg = {p: 0 for p in PUNCTURES}
    for arc in arcs:
        for pt in arc.punctures:
            deg[pt] += 1
    groups: dict = {}
    for arc in arcs:
        groups.setdefault(arc.underlying, []).append(arc)
    coinciding = {u: g for u, g in groups.items() if len(g) == 2}
    f2 = [
        (x, y)
        for x, y in itertools.combinations(arcs, 2)
        if x.slope != y.slope and farey_distance(x.slope, y.slope) == 2
        and x.punctures == y.punctures
    ]
    degseq = tri.degree_sequence

    def common_tag(p: Puncture) -> Tagging:
        seen = {arc.tag_at(p) for arc in arcs if p in arc.punctures}
        if len(seen) != 1:
            raise AssertionError(f"mixed tags at v{p} outside a coinciding end")
        return seen.pop()

    if degseq == (3, 3, 3, 3):
        triple = tuple(sorted({arc.slope for arc in arcs}))
        taggings = tuple((p, common_tag(p)) for p in PUNCTURES)
        return TriType("I", triple, taggings=taggings)

    if degseq == (2, 2, 4, 4) and not coinciding:
        x, y = f2[0]
        v = min(x.punctures)
        taggings = tuple((p, common_tag(p)) for p in PUNCTURES)
        return TriType("II", (x.slope, y.slope), v=v, taggings=taggings)

    if degseq == (2, 2, 4, 4):
        x, y = f2[0]
        v, u = sorted(x.punctures)
        pair_group = next(g for (s, pts), g in coinciding.items() if v in pts)
        v_prime = next(p for p in pair_group[0].punctures if p != v)
        taggings = ((v, common_tag(v)), (u, common_tag(u)))
        return TriType("III", (x.slope, y.slope), v=v, v_prime=v_prime,
                       taggings=taggings)

    if degseq == (2, 2, 3, 5):
        v = next(p for p in PUNCTURES if deg[p] == 5)
        x, y = f2[0]
        u = next(p for p in x.punctures if p != v)
        pair_group = next(iter(coinciding.values()))
        v_prime = next(p for p in pair_group[0].punctures if p != v)
        w = next(p for p in PUNCTURES if p not in (v, u, v_prime))
        taggings = tuple((p, common_tag(p)) for p in (v, u, w))
        return TriType("IV", (x.slope, y.slope), v=v, v_prime=v_prime,
                       taggings=taggings)

    if degseq == (2, 2, 2, 6) and f2:
        v = next(p for p in PUNCTURES if deg[p] == 6)
        x, y = f2[0]
        u = next(p for p in x.punctures if p != v)
        taggings = ((v, common_tag(v)), (u, common_tag(u)))
        return TriType("V", (x.slope, y.slope), v=v, taggings=taggings)

    v = next(p for p in PUNCTURES if deg[p] == 6)
    triple = tuple(sorted({arc.slope for arc in arcs}))
    return TriType("VI", triple, v=v, taggings=((v, common_tag(v)),))


def _farey1_triples(slopes: Sequence[Slope]) -> list[tuple[Slope, ...]]:
    return [
        t for t in itertools.combinations(slopes, 3) if is_farey1_triple(*t)
    ]


def _farey2_pairs(slopes: Sequence[Slope]) -> list[tuple[Slope, Slope]]:
    return [
        (p, q)
        for p, q in itertools.combinations(slopes, 2)
        if farey_distance(p, q) == 2
    ]


_TAGS = (Tagging.PLAIN, Tagging.NOTCHED)


def _tag_choices(punctures: Sequence[Puncture]):
    for combo in itertools.product(_TAGS, repeat=len(punctures)):
        yield tuple(zip(punctures, combo))


def enumerate_triangulations(max_height: int) -> Iterator[TaggedTriangulation]:
    """All tagged triangulations whose arc slopes have height <= max_height,
    each exactly once, by sweeping the parameter space of each type."""
    slopes = enumerate_slopes(max_height)
    triples = _farey1_triples(slopes)
    pairs = _farey2_pairs(slopes)

    for triple in triples:
        for tags in _tag_choices(PUNCTURES):
            yield build_type(TriType("I", triple, taggings=tags))

    for p, q in pairs:
        vs = [min(pair) for pair in endpoint_sets(p)]
        for v in vs:
            for tags in _tag_choices(PUNCTURES):
                yield build_type(TriType("II", (p, q), v=v, taggings=tags))
        companions = f2_companions(p, q)
        for v in vs:
            u = v.translate(p.parity)
            for c in companions:
                v_prime = v.translate(c.parity)
                for tags in _tag_choices((v, u)):
                    yield build_type(
                        TriType("III", (p, q), v=v, v_prime=v_prime, taggings=tags)
                    )
        for v in PUNCTURES:
            u = v.translate(p.parity)
            for c in companions:
                v_prime = v.translate(c.parity)
                w = next(x for x in PUNCTURES if x not in (v, u, v_prime))
                for tags in _tag_choices((v, u, w)):
                    yield build_type(
                        TriType("IV", (p, q), v=v, v_prime=v_prime, taggings=tags)
                    )
        for v in PUNCTURES:
            u = v.translate(p.parity)
            for tags in _tag_choices((v, u)):
                yield build_type(TriType("V", (p, q), v=v, taggings=tags))

    for triple in triples:
        for v in PUNCTURES:
            for tags in _tag_choices((v,)):
                yield build_type(TriType("VI", triple, v=v, taggings=tags))


def flip(tri: TaggedTriangulation, k: int) -> TaggedTriangulation:
    """Replace arc k by the unique other arc completing a triangulation.

    Candidate slopes: those already present, mediants of Farey-1 pairs of
    present slopes, and every slope up to twice the triangulation height
    plus two; candidates incompatible with a remaining arc at the slope
    level (Farey distance above 2) are discarded before tag enumeration.
    """
    removed = tri.arcs[k]
    rest = tuple(a for i, a in enumerate(tri.arcs) if i != k)
    h = tri.height
    slopes = {arc.slope for arc in tri.arcs}
    for s, t in itertools.combinations(list(slopes), 2):
        if farey_distance(s, t) == 1:
            slopes.add(mediant(s, t))
    slopes.update(enumerate_slopes(min(2 * h + 2, 64)))
    rest_slopes = [a.slope for a in rest]

    found = []
    for slope in sorted(slopes):
        if any(farey_distance(slope, s) > 2 for s in rest_slopes):
            continue
        for pair in endpoint_sets(slope):
            for t0 in _TAGS:
                for t1 in _TAGS:
                    cand = TaggedArc(slope, ((pair[0], t0), (pair[1], t1)))
                    if cand == removed or cand in rest:
                        continue
                    if not all(arcs_compatible(cand, a) for a in rest):
                        continue
                    try:
                        new = TaggedTriangulation(rest[:k] + (cand,) + rest[k:])
                    except ValueError:
                        continue
                    found.append(new)
    if len(found) != 1:
        raise InternalNonUnique(
            f"flip produced {len(found)} completions instead of 1"
        )
    return found[0]


# ---------------------------------------------------------------------------
# Signed adjacency and matrix mutation
# ---------------------------------------------------------------------------

ExchangeMatrix = tuple[tuple[int, ...], ...]


def _lift_segments(tri: TaggedTriangulation, box: int):
    segments = []
    arc_of_segment = {}
    for idx, arc in enumerate(tri.arcs):
        a, b = arc.slope.vector
        pars = {(p.i, p.j) for p in arc.punctures}
        for x in range(-box, box + 1):
            for y in range(-box, box + 1):
                if (x % 2, y % 2) not in pars:
                    continue
                q = (x + a, y + b)
                if abs(q[0]) > box or abs(q[1]) > box:
                    continue
                seg = ((x, y), q)
                segments.append(seg)
                key = frozenset(seg)
                arc_of_segment[key] = idx
    return segments, arc_of_segment


def _canonical_triangle(tri_pts) -> tuple:
    best = None
    for pts in (tri_pts, tuple((-x, -y) for x, y in tri_pts)):
        m = min(pts)
        shift = (-2 * (m[0] // 2), -2 * (m[1] // 2))
        moved = tuple(sorted((x + shift[0], y + shift[1]) for x, y in pts))
        if best is None or moved < best:
            best = moved
    return best


def signed_adjacency(tri: TaggedTriangulation) -> ExchangeMatrix:
    """The signed adjacency matrix of an all-plain triangulation, computed
    from the triangular faces of the lifted segment arrangement: each face,
    canonicalized under lattice half-turns and even translations, adds +1
    for every clockwise-consecutive pair of its sides."""
    if not tri.all_plain:
        raise NotAllPlain("signed adjacency needs all arcs tagged plain")
    h = tri.height
    box = 3 * h + 6
    inner = box - 2 * h - 2
    segments, arc_of_segment = _lift_segments(tri, box)
    faces = triangular_faces(segments)
    reps: dict[tuple, tuple] = {}
    for face in faces:
        if any(abs(x) > inner or abs(y) > inner for x, y in face):
            continue
        reps.setdefault(_canonical_triangle(face), face)
    if len(reps) != 4:
        raise InternalNonUnique(f"expected 4 ideal triangles, found {len(reps)}")
    n = 6
    B = [[0] * n for _ in range(n)]
    for face in reps.values():
        (x1, y1), (x2, y2), (x3, y3) = face
        area2 = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
        pts = list(face) if area2 < 0 else [face[0], face[2], face[1]]
        side_arcs = []
        for i in range(3):
            u, v = pts[i], pts[(i + 1) % 3]
            side_arcs.append(arc_of_segment[frozenset((u, v))])
        for i in range(3):
            s, t = side_arcs[i], side_arcs[(i + 1) % 3]
            B[s][t] += 1
            B[t][s] -= 1
    return tuple(tuple(row) for row in B)


def mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at index k: negate row/column k, and add
    sgn(b_ik) * max(b_ik * b_kj, 0) elsewhere.  An involution."""
    n = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                prod = B[i][k] * B[k][j]
                sign = 1 if B[i][k] > 0 else (-1 if B[i][k] < 0 else 0)
                row.append(B[i][j] + sign * max(prod, 0))
        out.append(tuple(row))
    return tuple(out)


FIG1_MATRIX: ExchangeMatrix = (
    (0, 1, -1, 0, 1, -1),
    (-1, 0, 1, -1, 0, 1),
    (1, -1, 0, 1, -1, 0),
    (0, 1, -1, 0, 1, -1),
    (-1, 0, 1, -1, 0, 1),
    (1, -1, 0, 1, -1, 0),
)
