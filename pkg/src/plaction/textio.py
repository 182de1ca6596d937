"""Text and JSON formats for maps, group descriptions and witness requests.

Map line grammar::

    pl left_slope=<rat> anchors=(b1,v1);(b2,v2);... right_slope=<rat>
    monotone left_slope=<rat> anchors=... right_slope=<rat>
    affine a=<rat> b=<rat>

where ``<rat>`` is an integer or ``p/q``.  Files may name maps with
``name = <map>``; ``#`` starts a comment.  Group files additionally carry
``key=value`` header lines such as ``radius=4 N=2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParseError, ValidationError
from .pl import MonotonePL, PiecewiseLinear, PLMap

_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(_RAT)
_ANCHOR_RE = re.compile(rf"\(\s*({_RAT})\s*,\s*({_RAT})\s*\)")
_NAME_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)\s*[=:]\s*(?=\S)")
_HEADER_RE = re.compile(r"[A-Za-z_]+=\S+(\s+[A-Za-z_]+=\S+)*\s*$")


def format_rat(q: Fraction) -> str:
    return str(q)


def _parse_rat(token: str, line: int, column: int) -> Fraction:
    if not _RAT_RE.fullmatch(token):
        raise ParseError(f"expected a rational 'p/q' or integer, got {token!r}", line, column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line, column) from None


def _fields(text: str, start: int, line: int, column: int):
    """Split ``key=value`` tokens after ``start``, returning ``{key: (value, column)}``."""
    out = {}
    for m in re.finditer(r"\S+", text[start:]):
        tok_col = column + start + m.start()
        key, eq, value = m.group().partition("=")
        if not eq:
            raise ParseError(f"unexpected token {m.group()!r}, expected key=value", line, tok_col)
        if key in out:
            raise ParseError(f"duplicate field {key!r}", line, tok_col)
        out[key] = (value, tok_col + len(key) + 1)
    return out


def _require(fields, key, line, column):
    if key not in fields:
        raise ParseError(f"missing field {key}=", line, column)
    return fields[key]


def _parse_anchors(text: str, line: int, column: int):
    if text == "":
        return ()
    anchors = []
    pos = 0
    for chunk in text.split(";"):
        m = _ANCHOR_RE.fullmatch(chunk)
        if not m:
            raise ParseError(f"malformed anchor {chunk!r}, expected (b,v)", line, column + pos)
        anchors.append(
            (
                _parse_rat(m.group(1), line, column + pos + m.start(1)),
                _parse_rat(m.group(2), line, column + pos + m.start(2)),
            )
        )
        pos += len(chunk) + 1
    return tuple(anchors)


def parse_map(text: str, line: int = 1, column: int = 1) -> PiecewiseLinear:
    """Parse one map in the line format.  Validation failures become ParseError."""
    stripped = text.rstrip()
    lead = len(stripped) - len(stripped.lstrip())
    body = stripped.lstrip()
    if not body:
        raise ParseError("empty map description", line, column)
    kind = body.split()[0]
    col0 = column + lead
    fields = _fields(stripped, lead + len(kind), line, column)
    try:
        if kind == "affine":
            a_txt, a_col = _require(fields, "a", line, col0)
            b_txt, b_col = fields.get("b", ("0", col0))
            extra = set(fields) - {"a", "b"}
            if extra:
                raise ParseError(f"unknown field {sorted(extra)[0]!r}", line, fields[sorted(extra)[0]][1])
            return PLMap.affine(_parse_rat(a_txt, line, a_col), _parse_rat(b_txt, line, b_col))
        if kind in ("pl", "monotone"):
            extra = set(fields) - {"left_slope", "anchors", "right_slope"}
            if extra:
                raise ParseError(f"unknown field {sorted(extra)[0]!r}", line, fields[sorted(extra)[0]][1])
            ls_txt, ls_col = _require(fields, "left_slope", line, col0)
            an_txt, an_col = _require(fields, "anchors", line, col0)
            rs_txt, rs_col = _require(fields, "right_slope", line, col0)
            cls = PLMap if kind == "pl" else MonotonePL
            return cls(
                _parse_anchors(an_txt, line, an_col),
                _parse_rat(ls_txt, line, ls_col),
                _parse_rat(rs_txt, line, rs_col),
            )
    except ValidationError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), line, col0) from exc
    raise ParseError(f"unknown map kind {kind!r} (expected pl, monotone or affine)", line, col0)


def format_map(g: PiecewiseLinear) -> str:
    """Canonical line for ``g``; ``parse_map(format_map(g)) == g``."""
    kind = "monotone" if isinstance(g, MonotonePL) else "pl"
    anchors = ";".join(f"({b},{v})" for b, v in g.anchors)
    return f"{kind} left_slope={g.left_slope} anchors={anchors} right_slope={g.right_slope}"


def map_to_json(g: PiecewiseLinear) -> dict:
    return {
        "kind": "monotone" if isinstance(g, MonotonePL) else "pl",
        "left_slope": str(g.left_slope),
        "anchors": [[str(b), str(v)] for b, v in g.anchors],
        "right_slope": str(g.right_slope),
    }


def map_from_json(data: dict) -> PiecewiseLinear:
    kind = data.get("kind", "pl")
    if kind == "affine":
        return PLMap.affine(Fraction(data["a"]), Fraction(data.get("b", "0")))
    cls = {"pl": PLMap, "monotone": MonotonePL}[kind]
    return cls(
        tuple((Fraction(b), Fraction(v)) for b, v in data["anchors"]),
        Fraction(data["left_slope"]),
        Fraction(data["right_slope"]),
    )


# -- files -------------------------------------------------------------------


@dataclass
class MapFile:
    """Named maps plus header settings, in file order."""

    maps: dict = field(default_factory=dict)
    settings: dict = field(default_factory=dict)


def _content(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def parse_map_file(text: str) -> MapFile:
    out = MapFile()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _content(raw)
        if not line.strip():
            continue
        lead = len(line) - len(line.lstrip())
        m = _NAME_RE.match(line, lead)
        if m and line[m.end():].split()[0] in ("pl", "monotone", "affine"):
            name = m.group(1)
            if name in out.maps:
                raise ParseError(f"duplicate map name {name!r}", lineno, lead + 1)
            out.maps[name] = parse_map(line[m.end():], lineno, m.end() + 1)
        elif line.split()[0] in ("pl", "monotone", "affine"):
            out.maps[f"g{len(out.maps) + 1}"] = parse_map(line, lineno, 1)
        elif _HEADER_RE.fullmatch(line.strip()):
            for tok in line.split():
                key, value = tok.split("=", 1)
                out.settings[key] = (value, lineno, line.index(tok) + 1)
        else:
            raise ParseError(f"cannot parse line: {line.strip()!r}", lineno, lead + 1)
    return out


def _int_setting(settings, key) -> Optional[int]:
    if key not in settings:
        return None
    value, line, col = settings[key]
    try:
        n = int(value)
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {value!r}", line, col) from None
    if n < 0:
        raise ParseError(f"{key} must be non-negative", line, col)
    return n


@dataclass
class GroupSpec:
    """A group description: named generators, optional radius/N and certificate."""

    generators: dict
    radius: Optional[int] = None
    max_fixed: Optional[int] = None
    certificate: Optional[PiecewiseLinear] = None

    @property
    def names(self):
        return tuple(self.generators)

    @property
    def maps(self):
        return tuple(self.generators.values())


def parse_group_file(text: str) -> GroupSpec:
    mf = parse_map_file(text)
    maps = dict(mf.maps)
    certificate = maps.pop("certificate", None)
    for name, g in maps.items():
        if not isinstance(g, PLMap):
            raise ParseError(f"generator {name!r} must be a homeomorphism (pl or affine)")
    unknown = set(mf.settings) - {"radius", "N"}
    if unknown:
        key = sorted(unknown)[0]
        _, line, col = mf.settings[key]
        raise ParseError(f"unknown setting {key!r}", line, col)
    return GroupSpec(
        generators=maps,
        radius=_int_setting(mf.settings, "radius"),
        max_fixed=_int_setting(mf.settings, "N"),
        certificate=certificate,
    )


@dataclass
class WitnessRequest:
    g: PLMap
    f: PLMap
    context: dict
    radius: Optional[int] = None


def parse_witness_request(text: str) -> WitnessRequest:
    """``g`` and ``f`` are required; every other named map joins the context."""
    mf = parse_map_file(text)
    maps = dict(mf.maps)
    for key in ("g", "f"):
        if key not in maps:
            raise ParseError(f"witness request must define {key} = <map>")
    for name, m in maps.items():
        if not isinstance(m, PLMap):
            raise ParseError(f"map {name!r} must be a homeomorphism (pl or affine)")
    g, f = maps.pop("g"), maps.pop("f")
    unknown = set(mf.settings) - {"radius"}
    if unknown:
        key = sorted(unknown)[0]
        _, line, col = mf.settings[key]
        raise ParseError(f"unknown setting {key!r}", line, col)
    return WitnessRequest(g=g, f=f, context=maps, radius=_int_setting(mf.settings, "radius"))
