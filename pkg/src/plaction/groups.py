"""Finite balls in the Cayley graph of a finitely generated PL group.

Group-level hypotheses (at most N fixed points, global fixed points,
commutativity) quantify over infinite groups.  Here they are decided on the
ball of radius ``r``: a violation is an exact refutation, while "holds" is
only evidence for that radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import PreconditionError, ResourceError, SharedFixedPoint, ValidationError
from .pl import (
    WHOLE_LINE,
    FixedSet,
    PLMap,
    commutator,
    compose,
    fixed_set,
    inverse,
    rat,
)

DEFAULT_ELEMENT_CAP = 10**6
HOLDS = "holds_on_ball"
VIOLATED = "violated"


def default_names(k: int) -> tuple:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return tuple(letters[i] if k <= 26 else f"g{i + 1}" for i in range(k))


@dataclass(frozen=True)
class Word:
    """Freely reduced word; ``letters`` are ``(generator index, +1 or -1)``.

    The word ``l1 l2 ... lk`` denotes the composite map ``l1 o l2 o ... o lk``.
    """

    letters: tuple = ()

    def __post_init__(self):
        out = []
        for i, e in self.letters:
            if e not in (1, -1):
                raise ValidationError(f"letter exponent must be +1 or -1, got {e}")
            if out and out[-1] == (i, -e):
                out.pop()
            else:
                out.append((int(i), e))
        object.__setattr__(self, "letters", tuple(out))

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        """Shortlex order with letters ranked a < a^-1 < b < b^-1 < ..."""
        return (len(self.letters), tuple(2 * i + (e < 0) for i, e in self.letters))

    def inverse(self) -> "Word":
        return Word(tuple((i, -e) for i, e in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def evaluate(self, generators: Sequence[PLMap]) -> PLMap:
        out = PLMap.identity()
        for i, e in self.letters:
            out = compose(out, generators[i] if e > 0 else inverse(generators[i]))
        return out

    def render(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "id"
        return " ".join(names[i] if e > 0 else f"{names[i]}^-1" for i, e in self.letters)


@dataclass(frozen=True)
class GroupBall:
    """Distinct elements of word length <= radius, each with its shortlex-least word.

    ``elements`` preserves insertion order, which is shortlex order of the
    retained words.
    """

    generators: tuple
    radius: int
    elements: dict = field(repr=False)
    names: tuple = ()

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.elements.items())

    def word(self, g: PLMap) -> Word:
        return self.elements[g]

    def render(self, g: PLMap) -> str:
        return self.elements[g].render(self.names)

    def maps(self) -> list:
        return list(self.elements)


def build_ball(
    generators: Sequence[PLMap],
    radius: int,
    names: Optional[Sequence[str]] = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> GroupBall:
    """Breadth-first enumeration of reduced words, deduplicated by canonical form."""
    gens = tuple(generators)
    for i, g in enumerate(gens):
        if not isinstance(g, PLMap):
            raise ValidationError(f"generator {i} is not a PL homeomorphism: {g!r}")
    if radius < 0:
        raise ValidationError("radius must be non-negative")
    names = tuple(names) if names is not None else default_names(len(gens))
    if len(names) != len(gens):
        raise ValidationError("one name per generator required")

    letters = [(i, e) for i in range(len(gens)) for e in (1, -1)]
    letter_map = {}
    for i, g in enumerate(gens):
        letter_map[(i, 1)] = g
        letter_map[(i, -1)] = inverse(g)

    identity = PLMap.identity()
    elements = {identity: Word()}
    # Only newly found elements need extending: any other word of the next
    # length reduces to an extension of a shorter retained word.
    frontier = [(identity, ())]
    for _ in range(radius):
        nxt = []
        for m, w in frontier:
            for letter in letters:
                if w and w[-1] == (letter[0], -letter[1]):
                    continue
                new = compose(m, letter_map[letter])
                if new in elements:
                    continue
                word = w + (letter,)
                elements[new] = Word(word)
                nxt.append((new, word))
                if len(elements) > cap:
                    raise ResourceError(f"ball exceeds the element cap of {cap}")
        frontier = nxt
        if not frontier:
            break
    return GroupBall(gens, radius, elements, names)


@dataclass(frozen=True)
class PropertyVerdict:
    status: str
    radius: int
    bound: int
    element: Optional[PLMap] = None
    word: Optional[Word] = None
    fixed_set: Optional[FixedSet] = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def check_max_fixed(ball: GroupBall, n: int) -> PropertyVerdict:
    """First element (shortlex) with more than ``n`` fixed points or a fixed interval."""
    for g, w in ball:
        if g.is_identity:
            continue
        fix = fixed_set(g)
        if not fix.is_finite or len(fix.points) > n:
            return PropertyVerdict(VIOLATED, ball.radius, n, g, w, fix)
    return PropertyVerdict(HOLDS, ball.radius, n)


def common_fixed_set(maps) -> FixedSet:
    out = WHOLE_LINE
    for g in maps:
        out = out.intersection(fixed_set(g))
        if out.is_empty:
            break
    return out


def global_fixed_points(ball: GroupBall) -> FixedSet:
    """A point is fixed by the whole group iff every generator fixes it."""
    return common_fixed_set(ball.generators)


def orientation_split(ball: GroupBall):
    preserving = [g for g in ball.elements if g.preserving]
    reversing = [g for g in ball.elements if not g.preserving]
    return preserving, reversing


def preserving_subgroup_generators(generators: Sequence[PLMap]) -> list:
    """Schreier generators of the orientation-preserving subgroup.

    With transversal ``{id, r}`` (``r`` the first reversing generator) the
    index-2 subgroup is generated by ``s`` and ``r s r^-1`` for preserving
    ``s``, and by ``s r^-1`` and ``r s`` for reversing ``s``.
    """
    gens = list(generators)
    reversing = [g for g in gens if not g.preserving]
    if not reversing:
        out = gens
    else:
        r = reversing[0]
        r_inv = inverse(r)
        out = []
        for s in gens:
            if s.preserving:
                out += [s, compose(compose(r, s), r_inv)]
            else:
                out += [compose(s, r_inv), compose(r, s)]
    unique = []
    for s in out:
        if not s.is_identity and s not in unique:
            unique.append(s)
    return unique


@dataclass(frozen=True)
class AbelianVerdict:
    holds: bool
    pair: Optional[tuple] = None
    commutator: Optional[PLMap] = None


def is_abelian_on_ball(ball: GroupBall) -> AbelianVerdict:
    """Generators commute pairwise iff the group is abelian."""
    gens = ball.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            c = commutator(gens[i], gens[j])
            if not c.is_identity:
                return AbelianVerdict(False, (i, j), c)
    return AbelianVerdict(True)


@dataclass(frozen=True)
class GlobalFixedVerdict:
    status: str
    global_fixed: FixedSet
    element: Optional[PLMap] = None
    word: Optional[Word] = None
    component: object = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def abelian_global_fixed_check(ball: GroupBall) -> GlobalFixedVerdict:
    """Every fixed point of a non-trivial ball element must be globally fixed."""
    ab = is_abelian_on_ball(ball)
    if not ab.holds:
        i, j = ab.pair
        raise PreconditionError(
            f"generators {ball.names[i]} and {ball.names[j]} do not commute; "
            "the check only applies to abelian groups"
        )
    glob = global_fixed_points(ball)
    for g, w in ball:
        if g.is_identity:
            continue
        for comp in fixed_set(g).components:
            if not glob.covers(comp):
                return GlobalFixedVerdict(VIOLATED, glob, g, w, comp)
    return GlobalFixedVerdict(HOLDS, glob)


def first_orbit_hit(ball: GroupBall, x, lo, hi):
    """First ball element ``w`` (shortlex) with ``lo < w(x) < hi``, or ``None``."""
    x, lo, hi = rat(x), rat(lo), rat(hi)
    if not lo < hi:
        raise PreconditionError("need lo < hi")
    for g, _ in ball:
        if lo < g(x) < hi:
            return g
    return None


def orbit_hits_interval(ball: GroupBall, x, lo, hi) -> bool:
    return first_orbit_hit(ball, x, lo, hi) is not None


def orbit(ball: GroupBall, x) -> list:
    """Sorted distinct points ``w(x)`` over the ball."""
    x = rat(x)
    return sorted({g(x) for g in ball.elements})


@dataclass(frozen=True)
class FunnelRun:
    """``chain`` is an F-orbit segment in increasing order, from the landing point
    in ``[0, F(0))`` up to the start (or from the start up to the landing point)."""

    start: Fraction
    steps: int
    landing: Fraction
    chain: tuple


@dataclass(frozen=True)
class FunnelReport:
    """The displacement envelope ``F(x) = max g^{+-1}(x)`` over the chosen generators."""

    generators: tuple
    maps: tuple
    f0: Fraction
    interval: tuple
    margin: Fraction

    def F(self, x) -> Fraction:
        x = rat(x)
        return max(m(x) for m in self.maps)

    def F_inverse(self, x) -> Fraction:
        # the set {g^{+-1}} is closed under inversion, so F^-1 is the pointwise min
        x = rat(x)
        return min(m(x) for m in self.maps)

    def land(self, x, max_steps: int = 100_000) -> FunnelRun:
        """Iterate F (or F^-1) from ``x`` until the orbit enters ``[0, F(0))``."""
        x = rat(x)
        p, steps = x, 0
        chain = [x]
        if p < 0:
            while p < 0:
                p = self.F(p)
                steps += 1
                chain.append(p)
                if steps > max_steps:
                    raise ResourceError(f"funnel did not land from {x} in {max_steps} steps")
        else:
            while p >= self.f0:
                p = self.F_inverse(p)
                steps -= 1
                chain.append(p)
                if -steps > max_steps:
                    raise ResourceError(f"funnel did not land from {x} in {max_steps} steps")
            chain.reverse()
        return FunnelRun(x, steps, p, tuple(chain))


def funnel_interval(generators: Sequence[PLMap], n: int, margin=1) -> FunnelReport:
    """Bounded interval that every orbit enters, built from n+1 preserving generators."""
    chosen = tuple(g for g in generators if g.preserving)[: n + 1]
    if not chosen:
        raise PreconditionError("need at least one orientation-preserving generator")
    shared = common_fixed_set(chosen)
    if not shared.is_empty:
        raise SharedFixedPoint(f"chosen generators share the fixed set {shared}")
    maps = []
    for g in chosen:
        maps += [g, inverse(g)]
    margin = rat(margin)
    f0 = max(m(0) for m in maps)
    return FunnelReport(chosen, tuple(maps), f0, (-margin, f0 + margin), margin)
