"""Punctures, tagged arcs, allowable curves and their compatibility.

Arcs and curves are parametrized exactly: a standard-form slope plus an
unordered pair of endpoint punctures, each endpoint carrying a plain/notched
tag (arcs) or a spiral direction (curves).  The bijection ``kappa`` matches
plain tags with clockwise spirals and notched tags with counterclockwise
spirals.  Closed curves carry a slope only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ClosedCurveHasNoArc
from .lattice import Slope, farey_distance


@dataclass(frozen=True, order=True)
class Puncture:
    """One of the four punctures v_ij, indexed by an element of (Z/2)^2.

    ``i`` is the horizontal parity and ``j`` the vertical parity of its
    preimages in the lattice plane.  The total order is
    v00 < v01 < v10 < v11.
    """

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValueError("puncture indices are bits")

    def translate(self, parity: tuple[int, int]) -> "Puncture":
        return Puncture((self.i + parity[0]) % 2, (self.j + parity[1]) % 2)

    def diff(self, other: "Puncture") -> tuple[int, int]:
        return ((self.i + other.i) % 2, (self.j + other.j) % 2)

    def __str__(self) -> str:
        return f"{self.i}{self.j}"

    @staticmethod
    def parse(text: str) -> "Puncture":
        if len(text) != 2 or any(c not in "01" for c in text):
            raise ValueError(f"bad puncture {text!r}")
        return Puncture(int(text[0]), int(text[1]))


V00 = Puncture(0, 0)
V01 = Puncture(0, 1)
V10 = Puncture(1, 0)
V11 = Puncture(1, 1)
PUNCTURES = (V00, V01, V10, V11)


class Tagging(enum.Enum):
    PLAIN = "plain"
    NOTCHED = "notched"


class SpiralDir(enum.Enum):
    CW = "cw"
    CCW = "ccw"

    @property
    def reversed(self) -> "SpiralDir":
        return SpiralDir.CCW if self is SpiralDir.CW else SpiralDir.CW


def endpoint_sets(s: Slope) -> tuple[tuple[Puncture, Puncture], tuple[Puncture, Puncture]]:
    """The two possible endpoint pairs of an arc of slope s; within each
    pair the punctures differ by (a, b) mod 2.  The pair containing v00
    comes first."""
    par = s.parity
    first = (V00, V00.translate(par))
    rest = [p for p in PUNCTURES if p not in first]
    second = (rest[0], rest[0].translate(par))
    return (first, tuple(sorted(second)))  # type: ignore[return-value]


def _check_ends(slope: Slope, p: Puncture, q: Puncture) -> None:
    if p == q:
        raise ValueError("endpoints must be distinct punctures (no loops)")
    if p.diff(q) != slope.parity:
        raise ValueError(
            f"endpoints {p},{q} do not match the parity of slope {slope}"
        )


@dataclass(frozen=True)
class TaggedArc:
    """A tagged arc: slope plus an unordered pair of tagged endpoints.

    ``ends`` is stored sorted by puncture, so equal arcs compare equal.
    """

    slope: Slope
    ends: tuple[tuple[Puncture, Tagging], tuple[Puncture, Tagging]]

    def __post_init__(self) -> None:
        ends = tuple(sorted(self.ends, key=lambda e: e[0]))
        object.__setattr__(self, "ends", ends)
        _check_ends(self.slope, ends[0][0], ends[1][0])
        object.__setattr__(self, "punctures", frozenset(e[0] for e in ends))
        object.__setattr__(self, "underlying", (self.slope, self.punctures))

    punctures: frozenset[Puncture] = field(init=False, compare=False)
    underlying: tuple = field(init=False, compare=False)

    @property
    def height(self) -> int:
        return self.slope.height

    def tag_at(self, p: Puncture) -> Tagging:
        for q, tag in self.ends:
            if q == p:
                return tag
        raise KeyError(f"{p} is not an endpoint")

    def retag(self, p: Puncture, tag: Tagging) -> "TaggedArc":
        return TaggedArc(
            self.slope,
            tuple((q, tag if q == p else t) for q, t in self.ends),  # type: ignore[arg-type]
        )

    def __str__(self) -> str:
        marks = ",".join(
            f"v{e[0]}" + ("*" if e[1] is Tagging.NOTCHED else "") for e in self.ends
        )
        return f"arc({self.slope},{{{marks}}})"

    def to_json(self) -> dict:
        return {
            "slope": str(self.slope),
            "ends": [{"v": str(p), "tag": t.value} for p, t in self.ends],
        }

    @staticmethod
    def from_json(obj: dict) -> "TaggedArc":
        ends = tuple(
            (Puncture.parse(e["v"]), Tagging(e["tag"])) for e in obj["ends"]
        )
        return TaggedArc(Slope.parse(obj["slope"]), ends)  # type: ignore[arg-type]


@dataclass(frozen=True)
class AllowableCurve:
    """An allowable curve: closed (``ends is None``) or spiraling into two
    punctures with independent spiral directions."""

    slope: Slope
    ends: tuple[tuple[Puncture, SpiralDir], tuple[Puncture, SpiralDir]] | None = None

    def __post_init__(self) -> None:
        if self.ends is not None:
            ends = tuple(sorted(self.ends, key=lambda e: e[0]))
            object.__setattr__(self, "ends", ends)
            _check_ends(self.slope, ends[0][0], ends[1][0])
        object.__setattr__(
            self, "punctures",
            frozenset(e[0] for e in self.ends) if self.ends else frozenset(),
        )
        object.__setattr__(self, "underlying", (self.slope, self.punctures))

    punctures: frozenset[Puncture] = field(init=False, compare=False)
    underlying: tuple = field(init=False, compare=False)

    @property
    def is_closed(self) -> bool:
        return self.ends is None

    @property
    def height(self) -> int:
        return self.slope.height

    def spiral_at(self, p: Puncture) -> SpiralDir:
        assert self.ends is not None
        for q, d in self.ends:
            if q == p:
                return d
        raise KeyError(f"{p} is not a spiral point")

    def reverse_spiral(self, p: Puncture) -> "AllowableCurve":
        """Reverse the spiral direction at p (no-op for closed curves or
        when p is not a spiral point)."""
        if self.ends is None or p not in self.punctures:
            return self
        return AllowableCurve(
            self.slope,
            tuple((q, d.reversed if q == p else d) for q, d in self.ends),  # type: ignore[arg-type]
        )

    def __str__(self) -> str:
        if self.ends is None:
            return f"curve({self.slope})"
        marks = ",".join(f"v{p}:{d.value}" for p, d in self.ends)
        return f"curve({self.slope},{{{marks}}})"

    def to_json(self) -> dict:
        if self.ends is None:
            return {"closed": str(self.slope)}
        return {
            "slope": str(self.slope),
            "ends": [{"v": str(p), "spiral": d.value} for p, d in self.ends],
        }

    @staticmethod
    def from_json(obj: dict) -> "AllowableCurve":
        if "closed" in obj:
            return AllowableCurve(Slope.parse(obj["closed"]))
        ends = tuple(
            (Puncture.parse(e["v"]), SpiralDir(e["spiral"])) for e in obj["ends"]
        )
        return AllowableCurve(Slope.parse(obj["slope"]), ends)  # type: ignore[arg-type]


def closed_curve(s: Slope) -> AllowableCurve:
    return AllowableCurve(s)


_TAG_TO_SPIRAL = {Tagging.PLAIN: SpiralDir.CW, Tagging.NOTCHED: SpiralDir.CCW}
_SPIRAL_TO_TAG = {v: k for k, v in _TAG_TO_SPIRAL.items()}


def kappa(arc: TaggedArc) -> AllowableCurve:
    """Plain tags become clockwise spirals, notched tags counterclockwise."""
    return AllowableCurve(
        arc.slope, tuple((p, _TAG_TO_SPIRAL[t]) for p, t in arc.ends)  # type: ignore[arg-type]
    )


def kappa_inv(curve: AllowableCurve) -> TaggedArc:
    if curve.ends is None:
        raise ClosedCurveHasNoArc(f"{curve} is closed")
    return TaggedArc(
        curve.slope, tuple((p, _SPIRAL_TO_TAG[d]) for p, d in curve.ends)  # type: ignore[arg-type]
    )


def _decorations_agree(x_ends, y_ends, shared: frozenset[Puncture]) -> bool:
    xd = dict(x_ends)
    yd = dict(y_ends)
    return all(xd[p] == yd[p] for p in shared)


def _coinciding_ok(x_ends, y_ends) -> bool:
    """For equal underlying arcs/curves: decorations agree at exactly one end."""
    xd = dict(x_ends)
    yd = dict(y_ends)
    agreements = sum(1 for p in xd if xd[p] == yd[p])
    return agreements == 1


def arcs_compatible(x: TaggedArc, y: TaggedArc) -> bool:
    """Tagged-arc compatibility.

    Equal arcs are compatible by convention.  Arcs with the same underlying
    taggable arc are compatible iff their tags agree at exactly one
    endpoint; otherwise compatibility requires the tags to agree at every
    shared endpoint and the Farey distance of the slopes to equal the
    number of shared endpoints.
    """
    if x == y:
        return True
    if x.underlying == y.underlying:
        return _coinciding_ok(x.ends, y.ends)
    shared = x.punctures & y.punctures
    if farey_distance(x.slope, y.slope) != len(shared):
        return False
    return _decorations_agree(x.ends, y.ends, shared)


def curves_compatible(x: AllowableCurve, y: AllowableCurve) -> bool:
    """Allowable-curve compatibility (mirrors :func:`arcs_compatible` on
    spiraling curves; closed curves are compatible only with themselves and
    with spiraling curves of the same slope)."""
    if x == y:
        return True
    if x.is_closed and y.is_closed:
        return False
    if x.is_closed or y.is_closed:
        return x.slope == y.slope
    if x.underlying == y.underlying:
        return _coinciding_ok(x.ends, y.ends)
    shared = x.punctures & y.punctures
    if farey_distance(x.slope, y.slope) != len(shared):
        return False
    return _decorations_agree(x.ends, y.ends, shared)


def enumerate_arcs(max_height: int) -> list[TaggedArc]:
    """All tagged arcs of slope height <= max_height, deterministic order."""
    from .lattice import enumerate_slopes

    tags = (Tagging.PLAIN, Tagging.NOTCHED)
    out = []
    for s in enumerate_slopes(max_height):
        for pair in endpoint_sets(s):
            for t0 in tags:
                for t1 in tags:
                    out.append(TaggedArc(s, ((pair[0], t0), (pair[1], t1))))
    return out


def enumerate_curves(max_height: int) -> list[AllowableCurve]:
    """All allowable curves of slope height <= max_height: one closed
    curve per slope plus the kappa images of all tagged arcs."""
    from .lattice import enumerate_slopes

    out = [AllowableCurve(s) for s in enumerate_slopes(max_height)]
    out.extend(kappa(arc) for arc in enumerate_arcs(max_height))
    return out


class PairClass(enum.Enum):
    EQUAL = "equal"
    COINCIDING = "coinciding"
    FAREY0 = "farey0"
    FAREY1 = "farey1"
    FAREY2 = "farey2"
    INCOMPATIBLE = "incompatible"


def classify_pair(x: TaggedArc, y: TaggedArc) -> PairClass:
    """Taxonomy of an arc pair, consistent with :func:`arcs_compatible`:
    the pair is compatible iff the class is neither INCOMPATIBLE nor EQUAL
    (EQUAL is reported separately and is compatible by convention)."""
    if x == y:
        return PairClass.EQUAL
    if not arcs_compatible(x, y):
        return PairClass.INCOMPATIBLE
    if x.underlying == y.underlying:
        return PairClass.COINCIDING
    shared = len(x.punctures & y.punctures)
    return (PairClass.FAREY0, PairClass.FAREY1, PairClass.FAREY2)[shared]
