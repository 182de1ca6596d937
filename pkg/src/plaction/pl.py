"""Exact piecewise-linear maps of the real line.

A map is stored as a sorted tuple of ``(breakpoint, value)`` anchors plus the
slopes of the two unbounded tails.  Between consecutive anchors the map is
affine, so continuity holds by construction.  Every instance is reduced to a
canonical form on construction, which makes ``==`` decide functional equality.

Canonical form:

* no anchor separates two pieces of equal slope;
* a globally affine map ``x -> a*x + b`` keeps the single anchor ``(0, b)``,
  or no anchor at all when ``b == 0`` (so the identity has no anchors).

All arithmetic uses :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Optional, Union

from .errors import (
    IdentityMap,
    InfiniteFixedSet,
    NotOrientationPreserving,
    ValidationError,
)

RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: RatLike) -> Fraction:
    """Coerce ``value`` to an exact rational.  Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int, a 'p/q' string or a Fraction")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational number: {value!r}") from exc


class Piece(NamedTuple):
    """Affine piece ``x -> value + slope * (x - base)`` on ``[lo, hi]``.

    ``lo``/``hi`` are ``None`` for unbounded ends.
    """

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    base: Fraction
    value: Fraction
    slope: Fraction

    def at(self, x: Fraction) -> Fraction:
        return self.value + self.slope * (x - self.base)

    def contains(self, x: Fraction) -> bool:
        return (self.lo is None or self.lo <= x) and (self.hi is None or x <= self.hi)


def _canonical_anchors(anchors, left, right):
    if not anchors:
        anchors = ((ZERO, ZERO),)
    slopes = [left]
    for (b0, v0), (b1, v1) in zip(anchors, anchors[1:]):
        slopes.append((v1 - v0) / (b1 - b0))
    slopes.append(right)
    kept = tuple(a for i, a in enumerate(anchors) if slopes[i] != slopes[i + 1])
    if kept:
        return kept
    b, v = anchors[0]
    offset = v - left * b
    return () if offset == 0 else ((ZERO, offset),)


@dataclass(frozen=True, eq=False)
class PiecewiseLinear:
    """A continuous piecewise-linear function with rational data.

    The base class carries no monotonicity requirement; it is what
    :func:`compose` returns when neither subclass applies.  Equality and
    hashing compare canonical data only, so they mean equality as functions.
    """

    anchors: tuple = ()
    left_slope: Fraction = ONE
    right_slope: Fraction = ONE

    def __post_init__(self):
        anchors = tuple((rat(b), rat(v)) for b, v in self.anchors)
        left, right = rat(self.left_slope), rat(self.right_slope)
        for (b0, _), (b1, _) in zip(anchors, anchors[1:]):
            if b1 <= b0:
                raise ValidationError(f"breakpoints must be strictly increasing: {b0} then {b1}")
        if not anchors and left != right:
            anchors = ((ZERO, ZERO),)
        self._validate(anchors, left, right)
        object.__setattr__(self, "anchors", _canonical_anchors(anchors, left, right))
        object.__setattr__(self, "left_slope", left)
        object.__setattr__(self, "right_slope", right)

    def _validate(self, anchors, left, right):
        pass

    # -- structure -----------------------------------------------------------

    @property
    def key(self):
        return (self.anchors, self.left_slope, self.right_slope)

    def __eq__(self, other):
        if not isinstance(other, PiecewiseLinear):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def breakpoints(self) -> tuple:
        return tuple(b for b, _ in self.anchors)

    @cached_property
    def slopes(self) -> tuple:
        """Slopes of all pieces from left to right (tails included)."""
        inner = [
            (v1 - v0) / (b1 - b0)
            for (b0, v0), (b1, v1) in zip(self.anchors, self.anchors[1:])
        ]
        return (self.left_slope, *inner, self.right_slope)

    @cached_property
    def pieces(self) -> tuple:
        a = self.anchors
        if not a:
            return (Piece(None, None, ZERO, ZERO, self.left_slope),)
        out = [Piece(None, a[0][0], a[0][0], a[0][1], self.left_slope)]
        for i in range(len(a) - 1):
            out.append(Piece(a[i][0], a[i + 1][0], a[i][0], a[i][1], self.slopes[i + 1]))
        out.append(Piece(a[-1][0], None, a[-1][0], a[-1][1], self.right_slope))
        return tuple(out)

    @property
    def is_affine(self) -> bool:
        return len(self.anchors) <= 1 and self.left_slope == self.right_slope

    @property
    def is_identity(self) -> bool:
        return not self.anchors and self.left_slope == 1

    def affine_coefficients(self):
        """``(a, b)`` with ``self(x) == a*x + b``; only for affine maps."""
        if not self.is_affine:
            raise ValueError("map is not affine")
        return self.left_slope, self(ZERO)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        a = self.anchors
        if not a:
            return self.left_slope * x
        if x <= a[0][0]:
            return a[0][1] + self.left_slope * (x - a[0][0])
        if x >= a[-1][0]:
            return a[-1][1] + self.right_slope * (x - a[-1][0])
        i = bisect_right(self.breakpoints, x) - 1
        (b0, v0), (b1, v1) = a[i], a[i + 1]
        return v0 + (v1 - v0) * (x - b0) / (b1 - b0)

    def preimages(self, c: RatLike) -> tuple:
        """Sorted points ``x`` with ``self(x) == c`` on non-constant pieces."""
        c = rat(c)
        found = set()
        for p in self.pieces:
            if p.slope != 0:
                x = p.base + (c - p.value) / p.slope
                if p.contains(x):
                    found.add(x)
        return tuple(sorted(found))

    def __repr__(self):
        anchors = ";".join(f"({b},{v})" for b, v in self.anchors)
        return (
            f"{type(self).__name__}(left_slope={self.left_slope}, "
            f"anchors={anchors or '-'}, right_slope={self.right_slope})"
        )


@dataclass(frozen=True, eq=False, repr=False)
class PLMap(PiecewiseLinear):
    """A piecewise-linear homeomorphism of the line.

    Orientation preserving maps have strictly increasing values and positive
    tails; orientation reversing ones strictly decreasing values and negative
    tails.  Anything else is rejected with :class:`ValidationError`.
    """

    def _validate(self, anchors, left, right):
        if left == 0 or right == 0 or (left > 0) != (right > 0):
            raise ValidationError(
                f"tail slopes must be non-zero and of equal sign, got {left} and {right}"
            )
        increasing = left > 0
        for (b0, v0), (b1, v1) in zip(anchors, anchors[1:]):
            if (v1 <= v0) if increasing else (v1 >= v0):
                raise ValidationError(
                    f"values must be strictly {'increasing' if increasing else 'decreasing'}: "
                    f"({b0},{v0}) then ({b1},{v1})"
                )

    @property
    def preserving(self) -> bool:
        return self.left_slope > 0

    @property
    def orientation(self) -> str:
        return "preserving" if self.preserving else "reversing"

    @classmethod
    def identity(cls) -> "PLMap":
        return cls()

    @classmethod
    def affine(cls, a: RatLike, b: RatLike = 0) -> "PLMap":
        a, b = rat(a), rat(b)
        return cls(((ZERO, b),), a, a)

    @classmethod
    def translation(cls, t: RatLike) -> "PLMap":
        return cls.affine(1, t)

    def inverse(self) -> "PLMap":
        return inverse(self)


@dataclass(frozen=True, eq=False, repr=False)
class MonotonePL(PiecewiseLinear):
    """Non-decreasing proper PL map; flat pieces (plateaus) are allowed."""

    def _validate(self, anchors, left, right):
        if left <= 0 or right <= 0:
            raise ValidationError(f"tail slopes must be positive, got {left} and {right}")
        for (b0, v0), (b1, v1) in zip(anchors, anchors[1:]):
            if v1 < v0:
                raise ValidationError(f"values must be non-decreasing: ({b0},{v0}) then ({b1},{v1})")

    def plateaus(self) -> tuple:
        """Maximal closed intervals on which the map is constant, as ``(lo, hi)``."""
        return tuple((p.lo, p.hi) for p in self.pieces if p.slope == 0)


# -- algebra -----------------------------------------------------------------


def _build(points: Iterable[Fraction], fn: Callable[[Fraction], Fraction], prefer=PLMap):
    """Interpolate ``fn`` through ``points``; ``fn`` must be affine off them."""
    pts = sorted(set(points)) or [ZERO]
    anchors = tuple((p, fn(p)) for p in pts)
    left = anchors[0][1] - fn(pts[0] - 1)
    right = fn(pts[-1] + 1) - anchors[-1][1]
    for cls in (prefer, MonotonePL):
        try:
            return cls(anchors, left, right)
        except ValidationError:
            continue
    return PiecewiseLinear(anchors, left, right)


def evaluate(g: PiecewiseLinear, x: RatLike) -> Fraction:
    return g(x)


def compose(g: PiecewiseLinear, f: PiecewiseLinear) -> PiecewiseLinear:
    """Canonical form of ``g o f`` (apply ``f`` first)."""
    points = set(f.breakpoints)
    for b in g.breakpoints:
        points.update(f.preimages(b))
    prefer = PLMap if isinstance(g, PLMap) and isinstance(f, PLMap) else MonotonePL
    return _build(points, lambda x: g(f(x)), prefer)


def compose_all(*maps: PiecewiseLinear) -> PiecewiseLinear:
    """``compose_all(a, b, c) == a o b o c``."""
    out = PLMap.identity()
    for m in maps:
        out = compose(out, m)
    return out


def inverse(g: PLMap) -> PLMap:
    if not isinstance(g, PLMap):
        raise TypeError("only homeomorphisms (PLMap) are invertible")
    swapped = [(v, b) for b, v in g.anchors]
    if g.preserving:
        return PLMap(tuple(swapped), 1 / g.left_slope, 1 / g.right_slope)
    return PLMap(tuple(reversed(swapped)), 1 / g.right_slope, 1 / g.left_slope)


def power(g: PLMap, n: int) -> PLMap:
    if n < 0:
        g, n = inverse(g), -n
    result, base = PLMap.identity(), g
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def conjugate(f: PLMap, g: PLMap) -> PLMap:
    """``f g f^-1``."""
    return compose(compose(f, g), inverse(f))


def commutator(a: PLMap, b: PLMap) -> PLMap:
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def equals(g: PiecewiseLinear, f: PiecewiseLinear) -> bool:
    return g.key == f.key


# -- fixed points --------------------------------------------------------------


@dataclass(frozen=True)
class Point:
    x: Fraction

    def __str__(self):
        return str(self.x)


@dataclass(frozen=True)
class Interval:
    """Closed interval; ``None`` marks an infinite end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def __str__(self):
        lo = "(-inf" if self.lo is None else f"[{self.lo}"
        hi = "+inf)" if self.hi is None else f"{self.hi}]"
        return f"{lo}, {hi}"


def _span(c):
    return (c.x, c.x) if isinstance(c, Point) else (c.lo, c.hi)


def _le(a, b, a_low=True, b_low=True):
    """``a <= b`` where ``None`` is -inf for low ends and +inf for high ends."""
    if a is None:
        return a_low or (b is None and not b_low)
    if b is None:
        return not b_low
    return a <= b


def _start_key(span):
    lo = span[0]
    return (0, ZERO) if lo is None else (1, lo)


def _merge(spans):
    spans = sorted(spans, key=_start_key)
    merged = []
    for lo, hi in spans:
        if merged and _le(lo, merged[-1][1], True, False):
            plo, phi = merged[-1]
            merged[-1] = (plo, phi if _le(hi, phi, False, False) else hi)
        else:
            merged.append((lo, hi))
    return tuple(
        Point(lo) if lo is not None and lo == hi else Interval(lo, hi) for lo, hi in merged
    )


@dataclass(frozen=True)
class FixedSet:
    """Sorted, maximal components of ``{x : g(x) = x}``."""

    components: tuple = ()

    @classmethod
    def from_spans(cls, spans) -> "FixedSet":
        return cls(_merge(spans))

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def is_finite(self) -> bool:
        return all(isinstance(c, Point) for c in self.components)

    @property
    def has_interval(self) -> bool:
        return not self.is_finite

    @property
    def points(self) -> tuple:
        return tuple(c.x for c in self.components if isinstance(c, Point))

    @property
    def cardinality(self) -> Optional[int]:
        """Number of points, or ``None`` when an interval makes it infinite."""
        return len(self.components) if self.is_finite else None

    def __contains__(self, x) -> bool:
        x = rat(x)
        return any(
            _le(lo, x, True, True) and _le(x, hi, False, False)
            for lo, hi in map(_span, self.components)
        )

    def covers(self, component) -> bool:
        lo, hi = _span(component)
        return any(
            _le(a, lo, True, True) and _le(hi, b, False, False) for a, b in map(_span, self.components)
        )

    def intersection(self, other: "FixedSet") -> "FixedSet":
        spans = []
        for a_lo, a_hi in map(_span, self.components):
            for b_lo, b_hi in map(_span, other.components):
                lo = b_lo if _le(a_lo, b_lo, True, True) else a_lo
                hi = a_hi if _le(a_hi, b_hi, False, False) else b_hi
                if _le(lo, hi, True, False):
                    spans.append((lo, hi))
        return FixedSet.from_spans(spans)

    def image(self, f: PLMap) -> "FixedSet":
        spans = []
        for lo, hi in map(_span, self.components):
            lo2 = None if lo is None else f(lo)
            hi2 = None if hi is None else f(hi)
            spans.append((lo2, hi2) if f.preserving else (hi2, lo2))
        return FixedSet.from_spans(spans)

    def __str__(self):
        if not self.components:
            return "∅"
        if self.is_finite:
            return "{" + ",".join(str(c) for c in self.components) + "}"
        return " ∪ ".join(str(c) if isinstance(c, Interval) else "{" + str(c) + "}" for c in self.components)


WHOLE_LINE = FixedSet((Interval(None, None),))


def fixed_set(g: PiecewiseLinear) -> FixedSet:
    spans = []
    for p in g.pieces:
        if p.slope == 1:
            if p.value == p.base:
                spans.append((p.lo, p.hi))
        else:
            x = (p.value - p.slope * p.base) / (1 - p.slope)
            if p.contains(x):
                spans.append((x, x))
    return FixedSet.from_spans(spans)


# -- type signatures -------------------------------------------------------------


@dataclass(frozen=True)
class TypeSignature:
    """Signs of ``g - id`` on the complementary intervals of a finite fixed set."""

    signs: tuple

    @classmethod
    def parse(cls, text: str) -> "TypeSignature":
        body = text.strip().strip("()")
        table = {"+": 1, "-": -1, "−": -1}
        return cls(tuple(table[s.strip()] for s in body.split(",")))

    def flipped(self) -> "TypeSignature":
        return TypeSignature(tuple(-s for s in self.signs))

    def __len__(self):
        return len(self.signs)

    def __str__(self):
        return "(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"


def sample_points(points: tuple) -> list:
    """One interior point per complementary interval of ``points``."""
    if not points:
        return [ZERO]
    out = [points[0] - 1]
    out.extend((a + b) / 2 for a, b in zip(points, points[1:]))
    out.append(points[-1] + 1)
    return out


def type_signature(g: PLMap) -> TypeSignature:
    if not isinstance(g, PLMap) or not g.preserving:
        raise NotOrientationPreserving("type is only defined for orientation-preserving maps")
    if g.is_identity:
        raise IdentityMap("the identity has no type")
    fix = fixed_set(g)
    if not fix.is_finite:
        raise InfiniteFixedSet(f"fixed set {fix} contains an interval")
    signs = []
    for s in sample_points(fix.points):
        d = g(s) - s
        signs.append(1 if d > 0 else -1)
    return TypeSignature(tuple(signs))
