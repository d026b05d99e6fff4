"""Exact slope arithmetic, Farey relations and unimodular basis changes.

A rational slope is kept in *standard form* b/a: ``a`` a nonnegative
integer, ``b`` an integer, with ``b = 1`` when ``a = 0`` (the slope of
vertical lines, written ``inf``) and ``gcd(a, |b|) = 1`` when ``a > 0``.
The primitive lattice vector of the slope is ``(a, b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotFareyNeighbors, NotFareyTriple, ZeroVector

#: Hard cap on enumeration heights; keeps accidental sweeps bounded.
MAX_HEIGHT = 64


@dataclass(frozen=True, order=False)
class Slope:
    """A rational slope b/a in standard form (``inf`` = 1/0 is (a=0, b=1))."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError(f"a must be nonnegative, got {self.a}")
        if self.a == 0:
            if self.b != 1:
                raise ValueError("the infinite slope is (0, 1)")
        elif math.gcd(self.a, abs(self.b)) != 1:
            raise ValueError(f"({self.a}, {self.b}) is not in standard form")

    @property
    def is_infinite(self) -> bool:
        return self.a == 0

    @property
    def vector(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def height(self) -> int:
        return max(self.a, abs(self.b))

    @property
    def parity(self) -> tuple[int, int]:
        return (self.a % 2, self.b % 2)

    def value(self) -> Fraction:
        """Finite value b/a; raises on the infinite slope."""
        if self.is_infinite:
            raise ZeroDivisionError("infinite slope has no rational value")
        return Fraction(self.b, self.a)

    # Total order: compare by value, with inf as the maximum element.
    def _cmp(self, other: "Slope") -> int:
        if self == other:
            return 0
        if self.is_infinite:
            return 1
        if other.is_infinite:
            return -1
        lhs = self.b * other.a
        rhs = other.b * self.a
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other: "Slope") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Slope") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Slope") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Slope") -> bool:
        return self._cmp(other) >= 0

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.b}/{self.a}"

    @staticmethod
    def parse(text: str) -> "Slope":
        """Parse "b/a" ("inf" for the vertical slope, bare "n" for n/1)."""
        text = text.strip()
        if text in ("inf", "-inf", "1/0", "-1/0"):
            return Slope(0, 1)
        if "/" in text:
            num, den = text.split("/", 1)
            return standard_form(int(den), int(num))
        return standard_form(1, int(text))


INF = Slope(0, 1)
ZERO = Slope(1, 0)
MINUS_ONE = Slope(1, -1)


def standard_form(p: int, q: int) -> Slope:
    """Standard form of the slope q/p of the lattice vector (p, q)."""
    if p == 0 and q == 0:
        raise ZeroVector("(0, 0) has no slope")
    if p == 0:
        return INF
    if p < 0:
        p, q = -p, -q
    g = math.gcd(p, abs(q))
    return Slope(p // g, q // g)


def det2(s: Slope | tuple[int, int], t: Slope | tuple[int, int]) -> int:
    """Determinant of the 2x2 matrix with rows the primitive vectors of s, t."""
    sa, sb = s.vector if isinstance(s, Slope) else s
    ta, tb = t.vector if isinstance(t, Slope) else t
    return sa * tb - sb * ta


def farey_distance(s: Slope, t: Slope) -> int:
    """|ad - bc| for s = b/a and t = d/c; 0 iff the slopes are equal."""
    return abs(det2(s, t))


def is_farey1_triple(s: Slope, t: Slope, u: Slope) -> bool:
    """True iff the three slopes are pairwise at Farey distance 1."""
    return (
        farey_distance(s, t) == 1
        and farey_distance(t, u) == 1
        and farey_distance(s, u) == 1
    )


def mediant(s: Slope, t: Slope) -> Slope:
    """Componentwise sum of the primitive vectors; lies strictly between
    s and t in the slope order.  Requires farey_distance(s, t) = 1."""
    if farey_distance(s, t) != 1:
        raise NotFareyNeighbors(f"{s} and {t} are not Farey neighbors")
    return standard_form(s.a + t.a, s.b + t.b)


def enumerate_slopes(max_height: int) -> list[Slope]:
    """All standard-form slopes with a <= max_height, |b| <= max_height,
    in (a, b)-lexicographic order.  Always includes inf = (0, 1)."""
    if max_height < 1:
        raise ValueError("max_height must be positive")
    if max_height > MAX_HEIGHT:
        raise ValueError(f"max_height capped at {MAX_HEIGHT}")
    out = [INF]
    for a in range(1, max_height + 1):
        for b in range(-max_height, max_height + 1):
            if math.gcd(a, abs(b)) == 1:
                out.append(Slope(a, b))
    return out


def _left_farey_neighbor(f: Slope) -> Slope:
    """Some slope x < f with farey_distance(x, f) = 1."""
    if f.is_infinite:
        return ZERO
    a0, b0 = f.vector
    # Solve c*b0 - d*a0 = 1 (then d/c < b0/a0); shift by (a0, b0) until c >= 1.
    g, u, v = _egcd(b0, -a0)
    assert g == 1 or g == -1
    c, d = u * g, v * g  # c*b0 - d*a0 = 1
    if c < 1:
        t = -((c - 1) // a0)
        c, d = c + t * a0, d + t * b0
    x = Slope(c, d)
    assert det2(x, f) == 1 and x < f
    return x


def _egcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, u, v) with u*x + v*y = g = +-gcd(x, y)."""
    if y == 0:
        return x, 1, 0
    g, u, v = _egcd(y, x % y)
    return g, v, u - (x // y) * v


def separating_neighbors(M: Iterable[Slope], f: Slope) -> tuple[Slope, Slope]:
    """Slopes (b/a, d/c) with (b/a, d/c, f) a Farey-1 triple,
    b/a < d/c < f, and no slope of M in the interval [b/a, f).

    Found by Stern-Brocot descent toward f from below; always succeeds.
    """
    slopes = set(M)
    below = [q for q in slopes if q < f]
    x = _left_farey_neighbor(f)
    while any(x <= q for q in below):
        x = mediant(x, f)
    y = mediant(x, f)
    assert is_farey1_triple(x, y, f) and x < y < f
    return x, y


Matrix2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class UnimodularMap:
    """An integer-linear relabeling of the lattice plane, with a mod-2
    offset for puncture relabeling.  |det| = 1 always; the maps produced by
    :func:`triple_to_basis` have det = +1 (orientation preserving)."""

    linear: Matrix2
    offset: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError("linear part must be unimodular")

    @property
    def det(self) -> int:
        (p, q), (r, s) = self.linear
        return p * s - q * r

    def apply_vector(self, v: tuple[int, int]) -> tuple[int, int]:
        (p, q), (r, s) = self.linear
        return (p * v[0] + q * v[1], r * v[0] + s * v[1])

    def apply_point(self, pt: tuple[int, int]) -> tuple[int, int]:
        x, y = self.apply_vector(pt)
        return (x + self.offset[0], y + self.offset[1])

    def apply_parity(self, par: tuple[int, int]) -> tuple[int, int]:
        x, y = self.apply_point(par)
        return (x % 2, y % 2)

    def apply_slope(self, s: Slope) -> Slope:
        return standard_form(*self.apply_vector(s.vector))

    @property
    def is_identity(self) -> bool:
        return self.linear == ((1, 0), (0, 1)) and self.offset == (0, 0)


def _chirality(u1: tuple[int, int], u2: tuple[int, int], u3: tuple[int, int]) -> int:
    return det2(u1, u2) * det2(u3, u1) * det2(u3, u2)


def triple_to_basis(triple: tuple[Slope, Slope, Slope]) -> UnimodularMap:
    """Orientation-preserving lattice map carrying the slope set of a
    Farey-1 triple onto {0, inf, -1}, hence the lifted type-I triangulation
    of the triple onto the lift of the base triangulation.

    The first two slopes are sent to the 0/inf directions when the ordered
    triple allows a det = +1 map; otherwise their roles swap (the slope
    *set* always lands on {0, inf, -1}).
    """
    q1, q2, q3 = triple
    if not is_farey1_triple(q1, q2, q3):
        raise NotFareyTriple(f"({q1}, {q2}, {q3}) is not a Farey-1 triple")
    u1, u2, u3 = q1.vector, q2.vector, q3.vector
    if _chirality(u1, u2, u3) == -1:
        u1, u2 = u2, u1
    # L with L(u1) = (1, 0), L(u2) = (0, +-1), det L = +1.
    delta = det2(u1, u2)
    a2, b2 = u2
    a1, b1 = u1
    lin: Matrix2 = ((delta * b2, -delta * a2), (-b1, a1))
    m = UnimodularMap(lin)
    assert m.det == 1
    assert m.apply_slope(Slope(*_std_pair(u1))) == ZERO
    assert m.apply_slope(Slope(*_std_pair(u2))) == INF
    assert m.apply_slope(Slope(*_std_pair(u3))) == MINUS_ONE
    return m


def _std_pair(v: tuple[int, int]) -> tuple[int, int]:
    s = standard_form(*v)
    return (s.a, s.b)
