"""One test per acceptance criterion; each records a PASS/FAIL line.

The lines are printed immediately (visible with ``-s``) and again in the
terminal summary under "acceptance criteria".
"""

import random
import time
from fractions import Fraction as Q

import pytest

from plaction import (
    OverlapError,
    ParseError,
    PLMap,
    abelian_global_fixed_check,
    build_ball,
    chart_monotonicity,
    check_max_fixed,
    collapse_map,
    compose,
    conjugate,
    construct_witness,
    fixed_set,
    funnel_interval,
    inverse,
    is_abelian_on_ball,
    parse_map,
    power,
    theorem_a_report,
    translation_chart,
    type_signature,
    verify_equivariance,
)
from plaction.semiconj import TauEstimate

import conftest
from support import (
    CASES,
    DOUBLE,
    G1,
    PHI,
    SHIFT,
    THOMPSON_A,
    THOMPSON_B,
    context_ball,
    conjugated_affine_pair,
    has_fixed_point_inside,
)

SEED = 20240611
REDUCTIONS = {"1a": "1b", "2b": "2a", "3b": "3a", "4b": "4a"}


def record(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    return ok


def rand_rat(rng, positive=False):
    den = rng.randint(1, 1000)
    num = rng.randint(1, 1000) if positive else rng.randint(-1000, 1000)
    return Q(num, den)


def rand_map(rng, preserving=None, max_anchors=6):
    k = rng.randint(0, max_anchors)
    xs = sorted({rand_rat(rng) for _ in range(k)})
    v = rand_rat(rng)
    values = []
    for _ in xs:
        values.append(v)
        v += rand_rat(rng, positive=True)
    left, right = rand_rat(rng, True), rand_rat(rng, True)
    if preserving is None:
        preserving = rng.random() < 0.7
    if not preserving:
        values = [-y for y in values]
        left, right = -left, -right
    return PLMap(tuple(zip(xs, values)), left, right)


def rand_map_with_finite_fix(rng):
    while True:
        g = rand_map(rng, preserving=True, max_anchors=4)
        if not g.is_identity and fixed_set(g).is_finite:
            return g


def test_exact_algebra_suite():
    rng = random.Random(SEED)
    maps = [rand_map(rng) for _ in range(1000)]
    start = time.perf_counter()
    failures = 0
    for i, g in enumerate(maps):
        a, b = maps[(i + 1) % 1000], maps[(i + 2) % 1000]
        ok = (
            compose(g, inverse(g)).is_identity
            and compose(inverse(g), g).is_identity
            and compose(compose(g, a), b) == compose(g, compose(a, b))
            and g == PLMap(g.anchors, g.left_slope, g.right_slope)
            and g == g
        )
        failures += not ok
    elapsed = time.perf_counter() - start
    ok = record(
        "exact algebra suite",
        failures == 0 and elapsed < 10,
        f"1000 random maps, {failures} failures, {elapsed:.2f}s (limit 10s)",
    )
    assert ok


def test_type_signature_suite():
    rng = random.Random(SEED + 1)
    failures = flips = 0
    for _ in range(500):
        g = rand_map_with_finite_fix(rng)
        f = rand_map(rng, preserving=True, max_anchors=4)
        t = type_signature(g)
        n = rng.randint(2, 3)
        ok = type_signature(conjugate(f, g)) == t and type_signature(power(g, n)) == t
        flip = type_signature(inverse(g)) == t.flipped()
        failures += not ok
        flips += flip
    ok = record(
        "type signature suite",
        failures == 0 and flips == 500,
        f"500 pairs, {failures} invariance failures, sign flip on {flips}/500",
    )
    assert ok


@pytest.mark.parametrize("tag", sorted(CASES))
def test_witness_suite(tag):
    g, f = CASES[tag]
    start = time.perf_counter()
    r = construct_witness(g, f, context_ball())
    w = r.rebuild()
    fix = fixed_set(w)
    elapsed = time.perf_counter() - start
    separated = all(has_fixed_point_inside(w, lo, hi) for lo, hi in r.separating_intervals)
    expected_path = [tag] + ([REDUCTIONS[tag]] if tag in REDUCTIONS else [])
    ok = (
        r.case.value == tag
        and [t.value for t in r.path] == expected_path
        and w == r.witness
        and len(r.separating_intervals) == 3
        and separated
        and (fix.has_interval or len(fix.points) >= 3)
        and elapsed < 5
    )
    ok = record(
        f"witness case {tag}",
        ok,
        f"path {' -> '.join(expected_path)}, Fix={fix}, {elapsed:.2f}s (limit 5s)",
    )
    assert ok


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_pipeline_affine():
    r, t = _timed(lambda: theorem_a_report([DOUBLE, SHIFT], 4))
    ok = record("pipeline (a) affine pair", r.verdict == "affine_semiconjugate" and t < 30, f"{r.verdict}, {t:.2f}s")
    assert ok


def test_pipeline_conjugated_affine():
    gens = conjugated_affine_pair()
    r, t = _timed(lambda: theorem_a_report(gens, 3, certificate=PHI))
    exact = r.images == (DOUBLE, SHIFT) and all(
        compose(im, PHI) == compose(PHI, g) for g, im in zip(gens, r.images)
    )
    ok = record(
        "pipeline (b) conjugated affine pair",
        r.verdict == "affine_semiconjugate" and exact and t < 30,
        f"{r.verdict}, equivariance exact={exact}, {t:.2f}s",
    )
    assert ok


def test_pipeline_global_fixed():
    r, t = _timed(lambda: theorem_a_report([G1], 6))
    ok = record(
        "pipeline (c) cyclic with two fixed points",
        r.verdict == "global_fixed_abelian" and r.global_fixed.points == (0, 1) and t < 30,
        f"{r.verdict}, global fixed set {r.global_fixed}, {t:.2f}s",
    )
    assert ok


def test_pipeline_thompson():
    found = None
    start = time.perf_counter()
    for radius in range(1, 5):
        r = theorem_a_report([THOMPSON_A, THOMPSON_B], radius)
        if r.verdict == "violation":
            found = (radius, r)
            break
    t = time.perf_counter() - start
    certified = False
    if found:
        radius, r = found
        w = r.witness_map
        fix = fixed_set(w)
        word = r.max_fixed.word if r.max_fixed and not r.max_fixed.holds else None
        rebuilt = word.evaluate((THOMPSON_A, THOMPSON_B)) if word is not None else r.witness.rebuild()
        certified = rebuilt == w and (fix.has_interval or len(fix.points) > 2)
    ok = record(
        "pipeline (d) Thompson-style generators",
        found is not None and certified and t < 30,
        f"violation at radius {found[0] if found else '-'}, certified={certified}, {t:.2f}s",
    )
    assert ok


def test_holder_suite():
    t32 = PLMap.translation(Q(3, 2))
    ball = build_ball([SHIFT, t32], 3)
    chart = translation_chart(ball, SHIFT, 0, 200)
    widths_ok = all(e.width <= Q(1, 100) for _, e in chart)
    contains = all(g.affine_coefficients()[1] in e for g, e in chart)
    order = chart_monotonicity(chart).compatible
    free = check_max_fixed(ball, 0).holds
    abelian = is_abelian_on_ball(ball).holds
    ok = record(
        "translation number suite",
        widths_ok and contains and order and free and abelian,
        f"{len(chart)} estimates, widths<=1/100 {widths_ok}, exact amount inside {contains}, "
        f"order {order}, free {free}, abelian {abelian}",
    )
    assert ok


def _abelian_fixtures(rng):
    fixtures = []
    for _ in range(25):
        g = rand_map_with_finite_fix(rng)
        while fixed_set(g).is_empty:
            g = rand_map_with_finite_fix(rng)
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        fixtures.append([power(g, a), power(g, b)])
    for _ in range(25):
        phi = rand_map(rng, preserving=True, max_anchors=4)
        s, t = rand_rat(rng), rand_rat(rng)
        fixtures.append([conjugate(phi, PLMap.translation(s)), conjugate(phi, PLMap.translation(t))])
    return fixtures


def test_abelian_global_fixed_suite():
    rng = random.Random(SEED + 2)
    fixtures = _abelian_fixtures(rng)
    passed = 0
    for gens in fixtures:
        ball = build_ball(gens, 4)
        passed += abelian_global_fixed_check(ball).holds
    ok = record("abelian global fixed point suite", passed == 50, f"{passed}/50 fixtures hold at radius 4")
    assert ok


def test_funnel_suite():
    rng = random.Random(SEED + 3)
    funnel = funnel_interval([DOUBLE, SHIFT], 1)
    starts = [Q(rng.randint(-99999, 99999), 1000) for _ in range(100)]
    good = 0
    for x in starts:
        run = funnel.land(x)
        inc = all(a < b for a, b in zip(run.chain, run.chain[1:]))
        good += inc and 0 <= run.landing < funnel.f0
    ok = record("funnel suite", good == 100, f"{good}/100 starts land in [0, {funnel.f0}) along increasing chains")
    assert ok


def test_negative_controls():
    ball = build_ball([SHIFT, PLMap.translation(Q(3, 2))], 2)
    chart = translation_chart(ball, SHIFT, 0, 50)
    est = [e for _, e in chart]
    rotated = est[1:] + est[:1]
    shuffled = [
        (g, TauEstimate(e.lo, e.hi, e.iterations, e.reference, e.base_point, orig.position))
        for (g, orig), e in zip(chart, rotated)
    ]
    shuffled_flagged = not chart_monotonicity(shuffled).compatible

    gens = conjugated_affine_pair()
    bad = PLMap.affine(3)
    cert_rejected = (
        not verify_equivariance(bad, list(zip(gens, (DOUBLE, SHIFT))))
        and theorem_a_report(gens, 3, certificate=bad).verdict != "affine_semiconjugate"
    )

    try:
        collapse_map([(0, 2), (1, 3)])
        overlap_rejected = False
    except OverlapError:
        overlap_rejected = True

    try:
        parse_map("pl left_slope=1 anchors=(0,0);(1,2);(2,1) right_slope=1")
        parse_rejected = False
    except ParseError:
        parse_rejected = True

    ok = record(
        "negative controls",
        shuffled_flagged and cert_rejected and overlap_rejected and parse_rejected,
        f"shuffled chart flagged {shuffled_flagged}, bad certificate rejected {cert_rejected}, "
        f"overlap rejected {overlap_rejected}, non-monotone anchors rejected {parse_rejected}",
    )
    assert ok
