"""Semi-conjugacy tools and the two-fixed-point classification pipeline.

* translation charts for freely acting balls (relative to a reference element);
* exact equivariance checks ``image o h == h o g``;
* collapse maps that squash finitely many intervals to points;
* a heuristic reading of the minimal set from sampled orbits;
* :func:`theorem_a_report`, chaining all of the above with the witness machine.

Every verdict is indexed by the ball radius it was computed on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    MissingAuxiliary,
    NotFree,
    OverlapError,
    PreconditionError,
    ReductionFailed,
    ResourceError,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    GroupBall,
    PropertyVerdict,
    abelian_global_fixed_check,
    build_ball,
    check_max_fixed,
    common_fixed_set,
    global_fixed_points,
    is_abelian_on_ball,
    preserving_subgroup_generators,
)
from .pl import (
    FixedSet,
    MonotonePL,
    PiecewiseLinear,
    PLMap,
    Point,
    _build,
    compose,
    fixed_set,
    inverse,
    rat,
)
from .witness import DEFAULT_EXPONENT_CAP, WitnessReport, construct_witness, wandering_check

DEFAULT_ITERATIONS = 200
DEFAULT_RESOLUTION = Fraction(1, 100)
DEFAULT_WINDOW = (Fraction(-10), Fraction(10))

DISCLAIMER = (
    "Semi-decision on a finite ball: a violation is an exact refutation, while any other "
    "verdict is evidence at this radius only. Witnesses built from PL maps with rational "
    "data are genuine counterexamples for all homeomorphisms of the line; the absence of "
    "a PL witness proves nothing."
)


# -- translation numbers -------------------------------------------------------------


@dataclass(frozen=True)
class TauEstimate:
    lo: Fraction
    hi: Fraction
    iterations: int
    reference: PLMap
    base_point: Fraction
    position: Fraction  # w(base_point), used for order comparisons

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= rat(value) <= self.hi


def _grid_index(g0: PLMap, g0_inv: PLMap, x0: Fraction, target: Fraction):
    """``p`` with ``g0^p(x0) <= target < g0^(p+1)(x0)`` and whether equality holds."""
    q, p = x0, 0
    if target >= x0:
        nxt = g0(q)
        while nxt <= target:
            q, p = nxt, p + 1
            nxt = g0(q)
    else:
        while q > target:
            q, p = g0_inv(q), p - 1
    return p, q == target


def translation_chart(ball: GroupBall, g0: PLMap, x0=0, iterations: int = DEFAULT_ITERATIONS):
    """Bracket the translation number of every ball element relative to ``g0``.

    For a free action, ``g0^p(x0) <= w^n(x0) < g0^(p+1)(x0)`` pins the number
    to ``[p/n, (p+1)/n]``, and to ``p/n`` exactly on equality.
    """
    x0 = rat(x0)
    if iterations < 1:
        raise PreconditionError("iterations must be positive")
    if g0 not in ball:
        raise PreconditionError("the reference element must belong to the ball")
    if not fixed_set(g0).is_empty or not g0(x0) > x0:
        raise PreconditionError("the reference element must be fixed-point free with g0(x0) > x0")
    for g, _ in ball:
        if g.is_identity:
            continue
        fix = fixed_set(g)
        if not fix.is_empty:
            raise NotFree(f"ball element {ball.render(g)} fixes {fix}")
    g0_inv = inverse(g0)
    chart = []
    for g, _ in ball:
        p_end = x0
        for _ in range(iterations):
            p_end = g(p_end)
        p, exact = _grid_index(g0, g0_inv, x0, p_end)
        lo = Fraction(p, iterations)
        hi = lo if exact else Fraction(p + 1, iterations)
        chart.append((g, TauEstimate(lo, hi, iterations, g0, x0, g(x0))))
    return chart


@dataclass(frozen=True)
class OrderVerdict:
    compatible: bool
    pair: Optional[tuple] = None


def chart_monotonicity(chart) -> OrderVerdict:
    """``w(x0) < w'(x0)`` must never come with an estimate of w strictly above that of w'."""
    entries = sorted(chart, key=lambda e: e[1].position)
    for i, (g, a) in enumerate(entries):
        for h, b in entries[i + 1:]:
            if a.position < b.position and a.lo > b.hi:
                return OrderVerdict(False, (g, h))
    return OrderVerdict(True)


# -- equivariance and collapse -----------------------------------------------------------


def verify_equivariance(h: PiecewiseLinear, pairs) -> bool:
    """Exact check of ``image o h == h o g`` for each ``(g, image)``."""
    return all(compose(image, h) == compose(h, g) for g, image in pairs)


def _merge_intervals(intervals):
    out = []
    for lo, hi in sorted((rat(a), rat(b)) for a, b in intervals):
        if out and lo < out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def collapse_map(intervals) -> PiecewiseLinear:
    """Non-decreasing proper map constant exactly on the given intervals, slope 1 elsewhere."""
    spans = sorted((rat(a), rat(b)) for a, b in intervals)
    for lo, hi in spans:
        if not lo < hi:
            raise OverlapError(f"empty interval ({lo}, {hi})")
    for (a, b), (c, d) in zip(spans, spans[1:]):
        if c < b:
            raise OverlapError(f"intervals ({a}, {b}) and ({c}, {d}) overlap")
    if not spans:
        return PLMap.identity()
    anchors = []
    shift = Fraction(0)
    for lo, hi in spans:
        if anchors and anchors[-1][0] == lo:
            anchors.pop()  # touching intervals share a plateau
        anchors.append((lo, lo - shift))
        shift += hi - lo
        anchors.append((hi, hi - shift))
    return MonotonePL(tuple(anchors), 1, 1)


def plateau_intervals(h: PiecewiseLinear):
    return [(p.lo, p.hi) for p in h.pieces if p.slope == 0]


def section(h: PiecewiseLinear, q: Fraction) -> Fraction:
    """Some point ``x`` with ``h(x) == q``."""
    pre = h.preimages(q)
    if pre:
        return pre[0]
    for p in h.pieces:
        if p.slope == 0 and p.value == q:
            return p.base
    raise ValueError(f"{q} is not in the image")


def induced_map(h: PiecewiseLinear, g: PLMap) -> Optional[PLMap]:
    """The map ``theta`` with ``theta o h == h o g``, or None if ``g`` breaks the collapse.

    Requires ``h o g`` to be constant on every plateau of ``h``.
    """
    hg = compose(h, g)
    plateaus = plateau_intervals(h)
    for lo, hi in plateaus:
        if hg(lo) != hg(hi):
            return None
    points = {h(b) for b in hg.breakpoints} | {h(b) for b in h.breakpoints}
    theta = _build(points, lambda q: hg(section(h, q)), PLMap)
    if not isinstance(theta, PLMap):
        return None
    return theta


# -- minimal sets ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalReport:
    kind: str  # finite_orbit | discrete_suspected | dense_suspected | cantor_suspected
    heuristic: bool
    finite_orbits: tuple = ()
    sample: Optional[Fraction] = None
    orbit_size: int = 0
    max_gap: Optional[Fraction] = None
    min_gap: Optional[Fraction] = None
    translation: Optional[PLMap] = None
    window: tuple = ()
    resolution: Optional[Fraction] = None


def _orbit_under(g: PLMap, x, lo, hi, limit):
    pts = {x}
    p = x
    for _ in range(limit):
        p = g(p)
        if p > hi:
            break
        pts.add(p)
    else:
        return None
    gi = inverse(g)
    p = x
    for _ in range(limit):
        p = gi(p)
        if p < lo:
            break
        pts.add(p)
    else:
        return None
    return pts


def classify_minimal(ball: GroupBall, window=DEFAULT_WINDOW, resolution=DEFAULT_RESOLUTION) -> MinimalReport:
    """Guess which kind of minimal set the action has.

    ``finite_orbit`` is exact: finite orbits are exactly the orbits of points
    fixed by the orientation-preserving subgroup.  The other three verdicts
    read the orbit of the window's left end and are heuristic.
    """
    lo, hi = rat(window[0]), rat(window[1])
    resolution = rat(resolution)
    if not lo < hi:
        raise PreconditionError("window must satisfy lo < hi")
    plus = common_fixed_set(preserving_subgroup_generators(ball.generators))
    if not plus.is_empty:
        orbits = []
        for comp in plus.components:
            if isinstance(comp, Point):
                orb = {comp.x} | {g(comp.x) for g in ball.generators}
                orb = tuple(sorted(orb))
                if orb not in orbits:
                    orbits.append(orb)
            else:
                orbits.append(comp)
        return MinimalReport("finite_orbit", False, tuple(orbits), window=(lo, hi), resolution=resolution)

    x = lo
    pts = sorted({p for p in (g(x) for g in ball.elements) if lo <= p <= hi})
    edges = [lo] + pts + [hi]
    max_gap = max(b - a for a, b in zip(edges, edges[1:]))
    min_gap = min((b - a for a, b in zip(pts, pts[1:])), default=None)
    common = dict(sample=x, orbit_size=len(pts), max_gap=max_gap, min_gap=min_gap, window=(lo, hi), resolution=resolution)
    if max_gap <= resolution:
        return MinimalReport("dense_suspected", True, **common)
    if min_gap is None or min_gap >= resolution:
        target = set(pts)
        limit = int((hi - lo) / resolution) + 2
        for g, _ in ball:
            if g.is_identity or not g.preserving or not fixed_set(g).is_empty:
                continue
            orb = _orbit_under(g, x, lo, hi, limit)
            if orb is not None and target <= orb:
                return MinimalReport("discrete_suspected", True, translation=g, **common)
    return MinimalReport("cantor_suspected", True, **common)


# -- pipeline -------------------------------------------------------------------------------

GLOBAL_FIXED_ABELIAN = "global_fixed_abelian"
AFFINE = "affine_semiconjugate"
TRANSLATION = "translation_semiconjugate"
VIOLATION = "violation"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Caps:
    elements: int = DEFAULT_ELEMENT_CAP
    exponent: int = DEFAULT_EXPONENT_CAP
    window: tuple = DEFAULT_WINDOW
    resolution: Fraction = DEFAULT_RESOLUTION


@dataclass
class ClassificationReport:
    verdict: str
    radius: int
    caps: Caps
    generators: tuple = ()
    names: tuple = ()
    diagnostics: list = field(default_factory=list)
    global_fixed: Optional[FixedSet] = None
    max_fixed: Optional[PropertyVerdict] = None
    witness: Optional[WitnessReport] = None
    witness_origin: Optional[dict] = None
    certificate: Optional[PiecewiseLinear] = None
    images: tuple = ()
    collapsed_intervals: tuple = ()
    minimal: Optional[MinimalReport] = None
    disclaimer: str = DISCLAIMER

    @property
    def witness_map(self) -> Optional[PLMap]:
        if self.witness is not None:
            return self.witness.witness
        if self.max_fixed is not None and not self.max_fixed.holds:
            return self.max_fixed.element
        return None


def _certify_affine(h, generators, images=None):
    """Images of ``generators`` under the semi-conjugacy ``h``, if all affine and exact."""
    if images is None:
        images = []
        for g in generators:
            theta = induced_map(h, g)
            if theta is None:
                return None
            images.append(theta)
    if not all(im.is_affine for im in images):
        return None
    if not verify_equivariance(h, list(zip(generators, images))):
        return None
    return tuple(images)


def theorem_a_report(
    generators: Sequence[PLMap],
    radius: int,
    caps: Caps = Caps(),
    certificate: Optional[PiecewiseLinear] = None,
    names: Optional[Sequence[str]] = None,
) -> ClassificationReport:
    """Run the classification for groups whose elements fix at most two points."""
    gens = tuple(generators)
    report = ClassificationReport(INCONCLUSIVE, radius, caps, gens)
    try:
        ball = build_ball(gens, radius, names, cap=caps.elements)
    except ResourceError as exc:
        report.diagnostics.append(str(exc))
        return report
    report.names = ball.names

    # (i) the hypothesis itself, on the ball
    verdict = check_max_fixed(ball, 2)
    report.max_fixed = verdict
    if not verdict.holds:
        report.verdict = VIOLATION
        report.diagnostics.append(
            f"{verdict.word.render(ball.names)} fixes {verdict.fixed_set}"
        )
        return report

    # (ii) global fixed point of the orientation-preserving subgroup
    plus_gens = preserving_subgroup_generators(gens)
    glob = common_fixed_set(plus_gens)
    report.global_fixed = glob
    if not glob.is_empty and plus_gens:
        try:
            plus_ball = build_ball(plus_gens, radius, cap=caps.elements)
        except ResourceError as exc:
            report.diagnostics.append(str(exc))
            return report
        ab = is_abelian_on_ball(plus_ball)
        if not ab.holds:
            report.diagnostics.append(
                "orientation-preserving subgroup has a global fixed point but two of its "
                "generators do not commute; a violation should appear at a larger radius"
            )
            return report
        check = abelian_global_fixed_check(plus_ball)
        if not check.holds:
            report.diagnostics.append(
                f"fixed component {check.component} of a non-trivial element is not global"
            )
            return report
        report.verdict = GLOBAL_FIXED_ABELIAN
        return report
    if not plus_gens:
        report.verdict = GLOBAL_FIXED_ABELIAN
        report.diagnostics.append("orientation-preserving subgroup is trivial")
        return report

    # (iii) elements with two fixed points must have wandering spans
    spans = []
    for g, w in ball:
        if g.is_identity or not g.preserving:
            continue
        fix = fixed_set(g)
        if len(fix.points) != 2:
            continue
        wv = wandering_check(g, ball)
        if not wv.holds:
            try:
                wr = construct_witness(g, wv.mover, ball, cap=caps.exponent)
            except (ResourceError, MissingAuxiliary, ReductionFailed, PreconditionError) as exc:
                report.diagnostics.append(
                    f"mover {ball.render(wv.mover)} for {ball.render(g)} found, but the witness "
                    f"construction stopped: {exc}"
                )
                return report
            report.verdict = VIOLATION
            report.witness = wr
            report.witness_origin = {"g": w.render(ball.names), "f": ball.render(wv.mover)}
            report.diagnostics.append(
                f"{ball.render(wv.mover)} sends {wv.x} into ({wv.x}, {wv.y}); case {wr.case} "
                f"witness fixes {wr.fixed_points}"
            )
            return report
        spans.append((wv.x, wv.y))

    # (iv) collapse the ball-orbits of the wandering spans and look for a model
    intervals = []
    for x, y in spans:
        for m in ball.elements:
            a, b = m(x), m(y)
            intervals.append((a, b) if a < b else (b, a))
    intervals = _merge_intervals(intervals)
    report.collapsed_intervals = tuple(intervals)
    h = collapse_map(intervals)
    if intervals:
        collapsed = []
        for i, g in enumerate(gens):
            theta = induced_map(h, g)
            if theta is None:
                report.diagnostics.append(
                    f"generator {ball.names[i]} does not permute the collapsed intervals "
                    f"found at radius {radius}; the collapse is incomplete"
                )
                return report
            collapsed.append(theta)
        try:
            cball = build_ball(collapsed, radius, ball.names, cap=caps.elements)
        except ResourceError as exc:
            report.diagnostics.append(str(exc))
            return report
        if not check_max_fixed(cball, 1).holds:
            report.diagnostics.append("collapsed action still has elements with two fixed points")
            return report
    else:
        collapsed, cball = list(gens), ball

    minimal = classify_minimal(cball, caps.window, caps.resolution)
    report.minimal = minimal
    if minimal.kind == "discrete_suspected":
        report.verdict = TRANSLATION
        report.certificate = h
        report.images = tuple(collapsed)
        return report

    if certificate is not None:
        images = _certify_affine(certificate, gens)
        if images is None:
            report.diagnostics.append("supplied certificate does not conjugate the generators to affine maps")
            return report
        report.verdict = AFFINE
        report.certificate = certificate
        report.images = images
        return report
    images = _certify_affine(h, gens, collapsed)
    if images is not None:
        report.verdict = AFFINE
        report.certificate = h
        report.images = images
        return report
    report.diagnostics.append(
        "no affine model: the collapsed generators are not affine and no certificate was supplied"
    )
    return report
