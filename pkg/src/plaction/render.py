"""Text and JSON renderings of verdicts and reports."""

from __future__ import annotations

import json

from .groups import GroupBall, PropertyVerdict
from .pl import FixedSet, Interval, PLMap, Point, fixed_set, type_signature
from .errors import TypeSignatureUndefined
from .semiconj import ClassificationReport, MinimalReport, OrderVerdict
from .textio import format_map, map_to_json
from .witness import WitnessReport


def dumps(obj) -> str:
    """Stable JSON text; ``dumps(json.loads(dumps(x))) == dumps(x)``."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _q(q):
    return None if q is None else str(q)


def fixed_set_json(fix: FixedSet) -> list:
    out = []
    for c in fix.components:
        if isinstance(c, Point):
            out.append({"point": str(c.x)})
        else:
            out.append({"interval": [_q(c.lo), _q(c.hi)]})
    return out


def describe_map(g) -> dict:
    """Orientation, fixed set and type (or why the type is undefined)."""
    fix = fixed_set(g)
    info = {
        "orientation": "orientation-preserving" if g.preserving else "orientation-reversing",
        "fixed_set": fix,
        "type": None,
        "type_error": None,
    }
    try:
        info["type"] = type_signature(g)
    except TypeSignatureUndefined as exc:
        info["type_error"] = f"type undefined: {exc}"
    return info


def classify_text(name: str, g: PLMap) -> str:
    d = describe_map(g)
    typ = f"type {d['type']}" if d["type"] is not None else d["type_error"]
    return f"{name}: {d['orientation']}, Fix={d['fixed_set']}, {typ}"


def classify_json(name: str, g: PLMap) -> dict:
    d = describe_map(g)
    return {
        "name": name,
        "map": map_to_json(g),
        "orientation": d["orientation"],
        "fixed_set": fixed_set_json(d["fixed_set"]),
        "type": None if d["type"] is None else str(d["type"]),
        "type_error": d["type_error"],
    }


# -- property verdicts -----------------------------------------------------------------


def verdict_json(v: PropertyVerdict, ball: GroupBall, disclaimer: str) -> dict:
    out = {"status": v.status, "radius": v.radius, "N": v.bound, "ball_size": len(ball), "witness": None}
    if not v.holds:
        out["witness"] = {
            "word": v.word.render(ball.names),
            "map": map_to_json(v.element),
            "fixed_set": fixed_set_json(v.fixed_set),
        }
    out["disclaimer"] = disclaimer
    return out


def verdict_text(v: PropertyVerdict, ball: GroupBall, disclaimer: str) -> str:
    lines = [f"status: {v.status}  (N={v.bound}, radius={v.radius}, {len(ball)} distinct elements)"]
    if not v.holds:
        lines.append(f"witness word: {v.word.render(ball.names)}")
        lines.append(f"witness map:  {format_map(v.element)}")
        lines.append(f"Fix:          {v.fixed_set}")
    lines.append(disclaimer)
    return "\n".join(lines) + "\n"


# -- witness reports ---------------------------------------------------------------------


def witness_json(r: WitnessReport) -> dict:
    return {
        "case": str(r.case),
        "path": [str(t) for t in r.path],
        "inverted": r.inverted,
        "reductions": list(r.reductions),
        "witness_word": r.witness_word.render(),
        "witness_word_expanded": r.witness_word.render(True),
        "definitions": r.definitions,
        "exponents": dict(r.exponents),
        "points": {k: str(v) for k, v in r.points.items()},
        "auxiliary": {k: {"word": w, "map": map_to_json(m)} for k, (m, w) in r.auxiliary.items()},
        "witness": map_to_json(r.witness),
        "fixed_points": fixed_set_json(r.fixed_points),
        "separating_intervals": [[str(a), str(b)] for a, b in r.separating_intervals],
        "trace": [{"check": c.render(), "holds": c.ok} for c in r.trace],
    }


def witness_text(r: WitnessReport) -> str:
    lines = [f"case {r.case}" + (f"  (path {' -> '.join(map(str, r.path))})" if len(r.path) > 1 else "")]
    for step in r.reductions:
        lines.append(f"  reduction: {step}")
    for name, (m, w) in r.auxiliary.items():
        lines.append(f"  {name} = {w}  ({format_map(m)})")
    lines.append("construction:")
    for label, body in r.definitions.items():
        lines.append(f"  {label} = {body}")
    lines.append(f"  witness = {r.witness_word.render()}")
    if r.exponents:
        lines.append("  exponents: " + ", ".join(f"{k}={v}" for k, v in r.exponents.items()))
    if r.points:
        lines.append("  points: " + ", ".join(f"{k}={v}" for k, v in r.points.items()))
    lines.append(f"witness map: {format_map(r.witness)}")
    lines.append(f"Fix(witness) = {r.fixed_points}")
    lines.append(
        "separating intervals: " + ", ".join(f"({a}, {b})" for a, b in r.separating_intervals)
    )
    lines.append("trace:")
    for c in r.trace:
        lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.render()}")
    return "\n".join(lines) + "\n"


# -- translation charts ---------------------------------------------------------------------


def chart_json(chart, ball: GroupBall, order: OrderVerdict) -> dict:
    first = chart[0][1] if chart else None
    return {
        "reference": ball.render(first.reference) if first else None,
        "base_point": _q(first.base_point) if first else None,
        "iterations": first.iterations if first else None,
        "chart": [
            {"word": ball.render(g), "lo": str(e.lo), "hi": str(e.hi)} for g, e in chart
        ],
        "order_compatible": order.compatible,
        "violating_pair": None
        if order.compatible
        else [ball.render(order.pair[0]), ball.render(order.pair[1])],
    }


def chart_text(chart, ball: GroupBall, order: OrderVerdict) -> str:
    lines = []
    if chart:
        e = chart[0][1]
        lines.append(f"reference {ball.render(e.reference)}, base point {e.base_point}, {e.iterations} iterations")
    for g, e in chart:
        est = f"= {e.lo}" if e.lo == e.hi else f"in [{e.lo}, {e.hi}]"
        lines.append(f"  tau({ball.render(g)}) {est}")
    if order.compatible:
        lines.append("order compatible: yes")
    else:
        lines.append(f"order compatible: NO ({ball.render(order.pair[0])} vs {ball.render(order.pair[1])})")
    return "\n".join(lines) + "\n"


# -- classification ----------------------------------------------------------------------------


def minimal_json(m: MinimalReport) -> dict:
    orbits = []
    for o in m.finite_orbits:
        if isinstance(o, Interval):
            orbits.append({"interval": [_q(o.lo), _q(o.hi)]})
        else:
            orbits.append([str(p) for p in o])
    return {
        "kind": m.kind,
        "heuristic": m.heuristic,
        "finite_orbits": orbits,
        "sample": _q(m.sample),
        "orbit_size": m.orbit_size,
        "max_gap": _q(m.max_gap),
        "min_gap": _q(m.min_gap),
        "translation": None if m.translation is None else map_to_json(m.translation),
    }


def report_json(r: ClassificationReport) -> dict:
    w = r.witness_map
    return {
        "verdict": r.verdict,
        "radius": r.radius,
        "caps": {
            "elements": r.caps.elements,
            "exponent": r.caps.exponent,
            "window": [str(r.caps.window[0]), str(r.caps.window[1])],
            "resolution": str(r.caps.resolution),
        },
        "generators": {n: map_to_json(g) for n, g in zip(r.names, r.generators)},
        "global_fixed": None if r.global_fixed is None else fixed_set_json(r.global_fixed),
        "witness": None
        if w is None
        else {"map": map_to_json(w), "fixed_set": fixed_set_json(fixed_set(w))},
        "witness_report": None if r.witness is None else witness_json(r.witness),
        "witness_origin": r.witness_origin,
        "certificate": None if r.certificate is None else map_to_json(r.certificate),
        "images": [map_to_json(m) for m in r.images],
        "collapsed_intervals": [[str(a), str(b)] for a, b in r.collapsed_intervals],
        "minimal": None if r.minimal is None else minimal_json(r.minimal),
        "diagnostics": list(r.diagnostics),
        "disclaimer": r.disclaimer,
    }


def report_text(r: ClassificationReport) -> str:
    lines = [f"verdict: {r.verdict}"]
    lines.append(
        f"radius={r.radius}, element cap={r.caps.elements}, exponent cap={r.caps.exponent}, "
        f"window=({r.caps.window[0]}, {r.caps.window[1]}), resolution={r.caps.resolution}"
    )
    if r.global_fixed is not None:
        lines.append(f"global fixed set of the orientation-preserving subgroup: {r.global_fixed}")
    w = r.witness_map
    if w is not None:
        lines.append(f"witness: {format_map(w)}")
        lines.append(f"Fix(witness) = {fixed_set(w)}")
    if r.witness is not None:
        lines.append(f"mover configuration: g = {r.witness_origin['g']}, f = {r.witness_origin['f']}")
        lines.extend("  " + ln for ln in witness_text(r.witness).rstrip("\n").split("\n"))
    if r.collapsed_intervals:
        lines.append("collapsed intervals: " + ", ".join(f"({a}, {b})" for a, b in r.collapsed_intervals))
    if r.certificate is not None:
        lines.append(f"semi-conjugacy: {format_map(r.certificate)}")
        for n, im in zip(r.names, r.images):
            lines.append(f"  {n} -> {format_map(im)}")
    if r.minimal is not None:
        tag = " (heuristic)" if r.minimal.heuristic else ""
        lines.append(f"minimal set: {r.minimal.kind}{tag}")
    for d in r.diagnostics:
        lines.append(f"note: {d}")
    lines.append(r.disclaimer)
    return "\n".join(lines) + "\n"
