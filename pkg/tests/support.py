"""Shared fixtures, strategies and brute-force oracles for the test suite."""

from fractions import Fraction as Q

from hypothesis import assume, strategies as st

from plaction import PLMap, build_ball, compose, fixed_set, inverse

ANCHORS = ((0, 0), (Q(1, 2), Q(3, 4)), (1, 1))

# Fix = {0, 1} for all four; the types cover the normal forms (+,+,+), (-,+,+), (+,+,-), (+,-,+)
G1 = PLMap(ANCHORS, Q(1, 2), 2)
G2 = PLMap(ANCHORS, 2, 2)
G3 = PLMap(ANCHORS, Q(1, 2), Q(1, 2))
G4 = PLMap(((0, 0), (Q(1, 2), Q(1, 4)), (1, 1)), Q(1, 2), 2)

FA = PLMap(((0, Q(1, 2)), (1, Q(3, 4))), 1, 1)  # f(0) = 1/2, f(1) = 3/4 < 1
FB = PLMap.translation(Q(1, 2))  # f(0) = 1/2, f(1) = 3/2 > 1

U = PLMap.translation(-2)
V = PLMap.translation(2)

DOUBLE = PLMap.affine(2)
SHIFT = PLMap.translation(1)
PHI = PLMap(((0, 0), (1, 2)), 1, Q(1, 2))

THOMPSON_A = PLMap(((0, 0), (Q(1, 2), Q(1, 4)), (Q(3, 4), Q(1, 2)), (1, 1)), 1, 1)
THOMPSON_B = PLMap(
    ((0, 0), (Q(1, 2), Q(1, 2)), (Q(3, 4), Q(5, 8)), (Q(7, 8), Q(3, 4)), (1, 1)), 1, 1
)


def context_ball(radius=1):
    return build_ball([U, V], radius, ("u", "v"))


CASES = {
    "1a": (G1, FA),
    "1b": (G1, FB),
    "2a": (G2, FA),
    "2b": (G2, FB),
    "3a": (G3, FA),
    "3b": (G3, FB),
    "4a": (G4, FA),
    "4b": (G4, FB),
}


def conjugated_affine_pair():
    """``phi^-1 a phi`` for ``a`` in {2x, x+1}."""
    phi_inv = inverse(PHI)
    return [compose(compose(phi_inv, a), PHI) for a in (DOUBLE, SHIFT)]


# -- oracles ------------------------------------------------------------------------------


def brute_eval(anchors, left, right, x):
    """Direct interpolation from raw (uncanonicalized) data."""
    x = Q(x)
    anchors = [(Q(b), Q(v)) for b, v in anchors]
    if not anchors:
        return Q(left) * x
    if x <= anchors[0][0]:
        return anchors[0][1] + Q(left) * (x - anchors[0][0])
    if x >= anchors[-1][0]:
        return anchors[-1][1] + Q(right) * (x - anchors[-1][0])
    for (b0, v0), (b1, v1) in zip(anchors, anchors[1:]):
        if b0 <= x <= b1:
            return v0 + (v1 - v0) * (x - b0) / (b1 - b0)
    raise AssertionError("unreachable")


def has_fixed_point_inside(w, lo, hi):
    """IVT oracle for ``w`` on the open interval ``(lo, hi)``, using evaluation only.

    ``w(x) - x`` is affine between consecutive breakpoints, so a zero in
    ``(lo, hi)`` shows up as a sign change or an exact zero at a sample.
    """
    samples = [lo] + [b for b in w.breakpoints if lo < b < hi] + [hi]
    d = [w(s) - s for s in samples]
    for i in range(1, len(samples) - 1):
        if d[i] == 0:
            return True
    for a, b in zip(d, d[1:]):
        if a * b < 0:
            return True
    # a whole piece fixed between two samples
    return any(a == 0 and b == 0 for a, b in zip(d, d[1:]))


def grid_fixed_points(g, lo=-20, hi=20, den=8):
    """Fixed points among grid rationals; a subset oracle for ``fixed_set``."""
    return [Q(k, den) for k in range(lo * den, hi * den + 1) if g(Q(k, den)) == Q(k, den)]


def affine_words(radius):
    """Distinct maps of all reduced words of length <= radius over {2x, x+1} (brute force)."""
    letters = [(2, 0), (Q(1, 2), 0), (1, 1), (1, -1)]  # a, a^-1, b, b^-1 as (slope, offset)
    inv_of = {0: 1, 1: 0, 2: 3, 3: 2}
    seen = {(Q(1), Q(0))}
    frontier = [((Q(1), Q(0)), None)]
    for _ in range(radius):
        nxt = []
        for (s, o), last in frontier:
            for i, (ls, lo) in enumerate(letters):
                if last is not None and inv_of[last] == i:
                    continue
                # (s x + o) o (ls x + lo)
                m = (s * ls, s * lo + o)
                nxt.append((m, i))
                seen.add(m)
        frontier = nxt
    return seen


# -- hypothesis strategies ---------------------------------------------------------------

rationals = st.builds(
    Q, st.integers(-1000, 1000), st.integers(1, 1000)
)
positive_rationals = st.builds(Q, st.integers(1, 1000), st.integers(1, 1000))


@st.composite
def pl_maps(draw, max_anchors=6, preserving=None):
    k = draw(st.integers(0, max_anchors))
    xs = sorted(set(draw(st.lists(rationals, min_size=k, max_size=k))))
    steps = draw(st.lists(positive_rationals, min_size=len(xs), max_size=len(xs)))
    v0 = draw(rationals)
    values, v = [], v0
    for s in steps:
        values.append(v)
        v += s
    left, right = draw(positive_rationals), draw(positive_rationals)
    if preserving is None:
        preserving = draw(st.booleans())
    if not preserving:
        values = [-y for y in values]
        left, right = -left, -right
    return PLMap(tuple(zip(xs, values)), left, right)


@st.composite
def maps_with_finite_fix(draw):
    g = draw(pl_maps(preserving=True))
    assume(not g.is_identity and fixed_set(g).is_finite)
    return g
