"""Certified three-fixed-point witnesses for a map moving a two-point fixed set.

Setting: ``g`` is orientation preserving with ``Fix(g) = {x, y}``, ``x < y``,
and some ``f`` sends ``x`` into ``(x, y)``.  In a group where every
non-trivial element fixes at most two points that is impossible, and the
argument is constructive: depending on the sign type of ``g`` and on which
side of ``y`` the point ``f(y)`` falls, an explicit word in ``g``, ``f`` (and,
in the hardest configuration, two auxiliary elements ``u``, ``v``) fixes at
least three points.

The eight configurations are tagged ``1a`` ... ``4b``.  The digit is the
type of ``g`` after replacing it by its inverse if needed::

    1: (+,+,+)   2: (-,+,+)   3: (+,+,-)   4: (+,-,+)

and the letter is ``a`` when ``f(y) < y``, ``b`` when ``f(y) > y``.  Each
``b`` case (and ``1a``) reduces in one step to its sibling.

Nothing in a report is trusted from bookkeeping: the witness is rebuilt from
its construction tree and its fixed set recomputed exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    DegenerateConfiguration,
    MissingAuxiliary,
    PreconditionError,
    ReductionFailed,
    ResourceError,
)
from .groups import GroupBall, Word
from .pl import FixedSet, PLMap, TypeSignature, compose, fixed_set, inverse, power, type_signature

DEFAULT_EXPONENT_CAP = 10_000


class CaseTag(str, enum.Enum):
    C1A = "1a"
    C1B = "1b"
    C2A = "2a"
    C2B = "2b"
    C3A = "3a"
    C3B = "3b"
    C4A = "4a"
    C4B = "4b"

    def __str__(self):
        return self.value


NORMAL_TYPES = {
    (1, 1, 1): "1",
    (-1, 1, 1): "2",
    (1, 1, -1): "3",
    (1, -1, 1): "4",
}


# -- construction trees -------------------------------------------------------


class Term:
    """Expression over named input maps; evaluates to a PLMap."""

    def evaluate(self, env) -> PLMap:
        raise NotImplementedError

    def render(self, expand: bool = False) -> str:
        raise NotImplementedError

    def definitions(self) -> dict:
        """Labelled sub-terms, innermost first."""
        out = {}
        self._collect(out)
        return out

    def _collect(self, out):
        pass

    def _atom(self, expand):
        text = self.render(expand)
        return text if " " not in text else f"({text})"


@dataclass(frozen=True)
class Ref(Term):
    name: str

    def evaluate(self, env):
        return env[self.name]

    def render(self, expand=False):
        return self.name


@dataclass(frozen=True)
class Let(Term):
    """A labelled sub-construction such as ``h = f g f^-1``."""

    label: str
    body: Term

    def evaluate(self, env):
        return self.body.evaluate(env)

    def render(self, expand=False):
        return self.body.render(True) if expand else self.label

    def _atom(self, expand):
        return self.body._atom(True) if expand else self.label

    def _collect(self, out):
        self.body._collect(out)
        out.setdefault(self.label, self.body.render())


@dataclass(frozen=True)
class Pow(Term):
    """``arg`` raised to ``exponent``; ``symbol`` names the exponent in renderings."""

    arg: Term
    exponent: int
    symbol: Optional[str] = None

    def evaluate(self, env):
        return power(self.arg.evaluate(env), self.exponent)

    def render(self, expand=False):
        if self.symbol is None:
            shown = str(self.exponent)
        else:
            shown = ("-" if self.exponent < 0 else "") + self.symbol
        return f"{self.arg._atom(expand)}^{shown}"

    def _collect(self, out):
        self.arg._collect(out)


def inv(t: Term) -> Term:
    return Pow(t, -1)


@dataclass(frozen=True)
class Prod(Term):
    """Composition; the rightmost factor is applied first."""

    factors: tuple

    def evaluate(self, env):
        out = PLMap.identity()
        for t in self.factors:
            out = compose(out, t.evaluate(env))
        return out

    def render(self, expand=False):
        return " ".join(t._atom(expand) for t in self.factors)

    def _collect(self, out):
        for t in self.factors:
            t._collect(out)


def conj(a: Term, b: Term) -> Term:
    """``a b a^-1``."""
    return Prod((a, b, inv(a)))


# -- inequality trace ------------------------------------------------------------


@dataclass(frozen=True)
class Probe:
    """``term(point)``, or the bare point when ``term`` is None."""

    point: Fraction
    term: Optional[Term] = None
    point_label: str = ""

    def evaluate(self, env) -> Fraction:
        return self.point if self.term is None else self.term.evaluate(env)(self.point)

    def render(self) -> str:
        where = self.point_label or str(self.point)
        return where if self.term is None else f"{self.term._atom(False)}({where})"


_OPS = {
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


@dataclass(frozen=True)
class Check:
    lhs: Probe
    op: str
    rhs: Probe
    lhs_value: Fraction
    rhs_value: Fraction
    note: str = ""

    @property
    def ok(self) -> bool:
        return _OPS[self.op](self.lhs_value, self.rhs_value)

    def replay(self, env) -> bool:
        """Re-evaluate both sides from scratch through the input maps."""
        return _OPS[self.op](self.lhs.evaluate(env), self.rhs.evaluate(env))

    def render(self) -> str:
        text = f"{self.lhs.render()} {self.op} {self.rhs.render()}   [{self.lhs_value} {self.op} {self.rhs_value}]"
        return f"{text}   ({self.note})" if self.note else text


class _Ctx:
    """Mutable state of one construction: input maps, trace, named points."""

    def __init__(self, env, cap):
        self.env = dict(env)
        self.cap = cap
        self.trace = []
        self.points = {}
        self.exponents = {}
        self.reductions = []
        self.auxiliary = {}
        self._cache = {}

    def map(self, t: Term) -> PLMap:
        if t not in self._cache:
            self._cache[t] = t.evaluate(self.env)
        return self._cache[t]

    def probe(self, point, term=None, label=""):
        return Probe(point, term, label)

    def check(self, lhs: Probe, op: str, rhs: Probe, note="", fail=None):
        c = Check(lhs, op, rhs, self._value(lhs), self._value(rhs), note)
        self.trace.append(c)
        if not c.ok:
            raise (fail or ReductionFailed)(f"inequality failed: {c.render()}", c)
        return c

    def _value(self, p: Probe):
        return p.point if p.term is None else self.map(p.term)(p.point)

    def name_point(self, label, value):
        self.points[label] = value
        return value


# -- configuration ------------------------------------------------------------------


def two_fixed_points(g: PLMap):
    if not isinstance(g, PLMap) or not g.preserving:
        raise PreconditionError("g must be orientation preserving")
    fix = fixed_set(g)
    if not fix.is_finite or len(fix.points) != 2:
        raise PreconditionError(f"g must have exactly two fixed points, Fix(g) = {fix}")
    return fix.points


def normalize_direction(g: PLMap):
    """Return ``(g', inverted)`` with ``g'`` in ``{g, g^-1}`` of normal type."""
    two_fixed_points(g)
    sig = type_signature(g)
    if sig.signs in NORMAL_TYPES:
        return g, False
    gi = inverse(g)
    assert type_signature(gi).signs in NORMAL_TYPES
    return gi, True


def _in_open(p, lo, hi) -> bool:
    return lo < p < hi


def orient_mover(g: PLMap, f: PLMap) -> PLMap:
    """Orientation-preserving element of <g, f> sending x into (x, y)."""
    return _orient(g, f, Ref("g"), Ref("f"), None)[0]


def _orient(g, f, g_t, f_t, ctx):
    x, y = two_fixed_points(g)
    if not _in_open(f(x), x, y):
        raise PreconditionError(f"f(x) = {f(x)} is not in ({x}, {y})")
    chosen, chosen_t = f, f_t
    if not f.preserving:
        phi = compose(compose(f, g), inverse(f))
        phi_t = Let("phi", conj(f_t, g_t))
        if _in_open(phi(x), x, y):
            chosen, chosen_t = phi, phi_t
        elif _in_open(inverse(phi)(x), x, y):
            chosen, chosen_t = inverse(phi), inv(phi_t)
        else:
            raise DegenerateConfiguration(
                f"phi = f g f^-1 fixes x = {x}: then f^-1(x) = y, impossible for a "
                "reversing f with f(x) in (x, y)"
            )
        if ctx is not None:
            ctx.reductions.append(f"f reverses orientation; replaced by {chosen_t.render()}")
    if chosen(y) == y:
        raise DegenerateConfiguration(
            f"the mover fixes y = {y}: <g, f> would have a global fixed point, so x would be "
            "globally fixed too (a group with at most two fixed points and a global fixed "
            "point is abelian with every fixed point global)"
        )
    return chosen, chosen_t


def classify_case(g: PLMap, f: PLMap) -> CaseTag:
    x, y = two_fixed_points(g)
    sig = type_signature(g).signs
    if sig not in NORMAL_TYPES:
        raise PreconditionError(f"g has type {TypeSignature(sig)}; normalize it first")
    if not f.preserving:
        raise PreconditionError("f must be orientation preserving")
    if not _in_open(f(x), x, y):
        raise PreconditionError(f"f(x) = {f(x)} is not in ({x}, {y})")
    fy = f(y)
    if fy == y:
        raise PreconditionError("f(y) = y")
    return CaseTag(NORMAL_TYPES[sig] + ("a" if fy < y else "b"))


# -- report -------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    case: CaseTag
    path: tuple
    witness: PLMap
    witness_word: Term
    fixed_points: FixedSet
    separating_intervals: tuple
    trace: tuple
    inputs: dict = field(repr=False)
    points: dict = field(default_factory=dict)
    exponents: dict = field(default_factory=dict)
    reductions: tuple = ()
    auxiliary: dict = field(default_factory=dict)
    inverted: bool = False

    @property
    def definitions(self) -> dict:
        return self.witness_word.definitions()

    def rebuild(self) -> PLMap:
        return self.witness_word.evaluate(self.inputs)

    def verify(self) -> bool:
        """Independent re-check: rebuild, recompute Fix, replay the trace."""
        w = self.rebuild()
        if w != self.witness or w.is_identity:
            return False
        fix = fixed_set(w)
        if fix.is_finite and len(fix.points) < 3:
            return False
        for lo, hi in self.separating_intervals:
            if not any(_component_inside(c, lo, hi) for c in fix.components):
                return False
        return all(c.replay(self.inputs) for c in self.trace)


def _component_inside(c, lo, hi) -> bool:
    from .pl import Point

    if isinstance(c, Point):
        return lo < c.x < hi
    return c.lo is not None and c.hi is not None and lo < c.lo and c.hi < hi


# -- cases --------------------------------------------------------------------------


def _alternation(ctx, w_t, pts, labels):
    """Record W(p) vs p with alternating signs at p0 < p1 < p2 < p3."""
    first = ">" if ctx.map(w_t)(pts[0]) > pts[0] else "<"
    op = first
    for p, lab in zip(pts, labels):
        ctx.check(ctx.probe(p, w_t, lab), op, ctx.probe(p, None, lab), fail=ReductionFailed)
        op = "<" if op == ">" else ">"
    return [(pts[i], pts[i + 1]) for i in range(3)]


def _case_1b(ctx, g_t, f_t, x, y):
    f = ctx.map(f_t)
    h_t = Let("h", conj(f_t, g_t))
    w_t = Prod((h_t, inv(g_t)))
    fx, fy = f(x), f(y)
    ctx.name_point("f(x)", fx)
    ctx.name_point("f(y)", fy)
    intervals = _alternation(ctx, w_t, (x, fx, y, fy), ("x", "f(x)", "y", "f(y)"))
    return w_t, intervals


def _min_exponent(ctx, name, pred):
    for n in range(ctx.cap + 1):
        if pred(n):
            ctx.exponents[name] = n
            return n
    raise ResourceError(f"no exponent {name} <= {ctx.cap} satisfies the displacement inequalities")


def _iterates(m: PLMap, p, n):
    for _ in range(n):
        p = m(p)
    return p


def _case_2a(ctx, g_t, f_t, x, y):
    g = ctx.map(g_t)
    h_t = Let("h", conj(f_t, g_t))
    h = ctx.map(h_t)
    a, b = x - 1, y + 1
    ha, hb = h(a), h(b)

    # g^n(x-1) decreases and g^n(y+1) increases with n
    orbit = {"a": a, "b": b}

    def ok(n):
        if n:
            orbit["a"], orbit["b"] = g(orbit["a"]), g(orbit["b"])
        return orbit["a"] < ha and orbit["b"] > hb

    n = _min_exponent(ctx, "n", ok)
    gn_t = Pow(g_t, n, "n")
    ctx.check(ctx.probe(a, gn_t, "x-1"), "<", ctx.probe(a, h_t, "x-1"), "choice of n")
    ctx.check(ctx.probe(b, gn_t, "y+1"), ">", ctx.probe(b, h_t, "y+1"), "choice of n")
    w_t = Prod((h_t, Pow(g_t, -n, "n")))
    pts = (ha, x, y, hb)
    intervals = _alternation(ctx, w_t, pts, ("h(x-1)", "x", "y", "h(y+1)"))
    return w_t, intervals


def _case_3a(ctx, g_t, f_t, x, y):
    g = ctx.map(g_t)
    gi = inverse(g)
    h_t = Let("h", conj(f_t, g_t))
    hi_t = inv(h_t)
    hi = ctx.map(hi_t)
    a, b = x - 1, y + 1
    ha, hb = hi(a), hi(b)
    orbit = {"a": a, "b": b}

    def ok(n):
        if n:
            orbit["a"], orbit["b"] = gi(orbit["a"]), gi(orbit["b"])
        return orbit["a"] < ha and orbit["b"] > hb

    n = _min_exponent(ctx, "n", ok)
    gmn_t = Pow(g_t, -n, "n")
    ctx.check(ctx.probe(a, gmn_t, "x-1"), "<", ctx.probe(a, hi_t, "x-1"), "choice of n")
    ctx.check(ctx.probe(b, gmn_t, "y+1"), ">", ctx.probe(b, hi_t, "y+1"), "choice of n")
    w_t = Prod((hi_t, Pow(g_t, n, "n")))
    intervals = _alternation(ctx, w_t, (ha, x, y, hb), ("h^-1(x-1)", "x", "y", "h^-1(y+1)"))
    return w_t, intervals


def _find_auxiliary(ctx, context: Optional[GroupBall], x, y):
    if context is None:
        raise MissingAuxiliary("case 4a needs a context ball holding u, v with u(y) < x < y < v(x)")
    u = v = None
    for m, w in context:
        if not m.preserving:
            continue
        if u is None and m(y) < x:
            u = (m, w)
        if v is None and m(x) > y:
            v = (m, w)
        if u and v:
            break
    if u is None or v is None:
        missing = "u with u(y) < x" if u is None else "v with v(x) > y"
        raise MissingAuxiliary(f"no preserving element {missing} in the context ball of radius {context.radius}")
    ctx.env["u"], ctx.env["v"] = u[0], v[0]
    ctx.auxiliary = {"u": (u[0], u[1].render(context.names)), "v": (v[0], v[1].render(context.names))}
    return Ref("u"), Ref("v")


def _case_4a(ctx, g_t, f_t, x, y, context):
    u_t, v_t = _find_auxiliary(ctx, context, x, y)
    g = ctx.map(g_t)
    gi = inverse(g)
    f, u, v = ctx.map(f_t), ctx.map(u_t), ctx.map(v_t)
    h_t = Let("h", conj(f_t, g_t))
    fu_t = Let("f_u", conj(u_t, g_t))
    fv_t = Let("f_v", conj(v_t, g_t))
    h, fu, fv = ctx.map(h_t), ctx.map(fu_t), ctx.map(fv_t)
    hinv = inverse(h)
    xt, yt = ctx.name_point("x~", f(x)), ctx.name_point("y~", f(y))
    ctx.check(ctx.probe(y, u_t, "y"), "<", ctx.probe(x, None, "x"), "u moves y below x")
    ctx.check(ctx.probe(x, v_t, "x"), ">", ctx.probe(y, None, "y"), "v moves x above y")

    target_x = inverse(fv)(x)
    start = fv(yt)
    st = {"p": x, "q": start}

    def ok_n1(n):
        if n:
            st["p"] = hinv(st["p"])
        return st["p"] < target_x

    def ok_n2(n):
        if n:
            st["q"] = h(st["q"])
        return st["q"] > y + 2

    n1 = _min_exponent(ctx, "n1", ok_n1)
    n2 = _min_exponent(ctx, "n2", ok_n2)
    n = max(n1, n2)
    ctx.exponents["n"] = n

    st2 = {"p": fu(x), "q": fu(y)}

    def ok_m1(m):
        if m:
            st2["p"] = gi(st2["p"])
        return st2["p"] > yt

    def ok_m2(m):
        if m:
            st2["q"] = gi(st2["q"])
        return st2["q"] < y + 1

    m1 = _min_exponent(ctx, "m1", ok_m1)
    m2 = _min_exponent(ctx, "m2", ok_m2)
    m = max(m1, m2)
    ctx.exponents["m"] = m

    hn_t, hmn_t = Pow(h_t, n, "n"), Pow(h_t, -n, "n")
    gm_t, gmm_t = Pow(g_t, m, "m"), Pow(g_t, -m, "m")
    s_t = Let("s", Prod((hn_t, fv_t, hmn_t)))
    t_t = Let("t", Prod((gmm_t, fu_t, gm_t)))
    s, t = ctx.map(s_t), ctx.map(t_t)

    ctx.check(ctx.probe(x, hmn_t, "x"), "<", ctx.probe(x, inv(fv_t), "x"), "choice of n")
    ctx.check(ctx.probe(yt, Prod((hn_t, fv_t)), "y~"), ">", ctx.probe(y + 2, None, "y+2"), "choice of n")
    ctx.check(ctx.probe(x, Prod((gmm_t, fu_t)), "x"), ">", ctx.probe(yt, None, "y~"), "choice of m")
    ctx.check(ctx.probe(y, Prod((gmm_t, fu_t)), "y"), "<", ctx.probe(y + 1, None, "y+1"), "choice of m")

    z1 = ctx.name_point("z1", gi_pow(g, m)(u(x)))
    z2 = ctx.name_point("z2", power(h, n)(v(y)))
    ctx.check(ctx.probe(z1, t_t, "z1"), "=", ctx.probe(z1, None, "z1"), "z1 fixed by t")
    ctx.check(ctx.probe(z1, s_t, "z1"), ">", ctx.probe(z1, None, "z1"))
    ctx.check(ctx.probe(x, t_t, "x"), ">", ctx.probe(yt, None, "y~"))
    ctx.check(ctx.probe(xt, None, "x~"), ">", ctx.probe(x, s_t, "x"))
    ctx.check(ctx.probe(y, t_t, "y"), "<", ctx.probe(y + 1, None, "y+1"))
    ctx.check(ctx.probe(y + 2, None, "y+2"), "<", ctx.probe(y, s_t, "y"))
    ctx.check(ctx.probe(z2, t_t, "z2"), ">", ctx.probe(z2, None, "z2"))
    ctx.check(ctx.probe(z2, s_t, "z2"), "=", ctx.probe(z2, None, "z2"), "z2 fixed by s")

    # t and s cross in each of (z1, x), (x, y), (y, z2); the fixed points of
    # t s^-1 are the s-images of those crossings.
    w_t = Prod((t_t, inv(s_t)))
    pts = [s(z1), s(x), s(y), s(z2)]
    labels = ("s(z1)", "s(x)", "s(y)", "s(z2)")
    for p, lab in zip(pts, labels):
        ctx.name_point(lab, p)
    intervals = _alternation(ctx, w_t, pts, labels)
    return w_t, intervals


def gi_pow(g: PLMap, m: int) -> PLMap:
    return power(g, -m)


# -- driver -------------------------------------------------------------------------

_MAX_DEPTH = 3


def construct_witness(
    g: PLMap,
    f: PLMap,
    context: Optional[GroupBall] = None,
    cap: int = DEFAULT_EXPONENT_CAP,
) -> WitnessReport:
    """Build and certify an element of <g, f, context> with at least three fixed points.

    ``g`` is replaced by ``g^-1`` and ``f`` by an orientation-preserving mover
    when needed, so raw inputs are accepted.
    """
    ctx = _Ctx({"g": g, "f": f}, cap)
    g_t, f_t = Ref("g"), Ref("f")
    g_n, inverted = normalize_direction(g)
    if inverted:
        g_t = Let("g'", inv(g_t))
        ctx.reductions.append("g replaced by g^-1 to reach a normal type")
    _, f_t = _orient(g_n, f, g_t, f_t, ctx)
    path = []
    w_t, intervals = _run_case(ctx, g_t, f_t, context, path, 0)
    witness = ctx.map(w_t)
    fix = fixed_set(witness)
    if witness.is_identity or (fix.is_finite and len(fix.points) < 3):
        raise ReductionFailed(f"constructed element {w_t.render()} has Fix = {fix}, not >= 3 points")
    for lo, hi in intervals:
        if not any(_component_inside(c, lo, hi) for c in fix.components):
            raise ReductionFailed(f"no fixed point of the witness in ({lo}, {hi})")
    return WitnessReport(
        case=path[0],
        path=tuple(path),
        witness=witness,
        witness_word=w_t,
        fixed_points=fix,
        separating_intervals=tuple(intervals),
        trace=tuple(ctx.trace),
        inputs=dict(ctx.env),
        points=dict(ctx.points),
        exponents=dict(ctx.exponents),
        reductions=tuple(ctx.reductions),
        auxiliary=dict(ctx.auxiliary),
        inverted=inverted,
    )


def _run_case(ctx, g_t, f_t, context, path, depth):
    g, f = ctx.map(g_t), ctx.map(f_t)
    tag = classify_case(g, f)
    path.append(tag)
    x, y = two_fixed_points(g)
    if depth == 0:
        ctx.name_point("x", x)
        ctx.name_point("y", y)
    if depth > _MAX_DEPTH:
        raise ReductionFailed("reduction chain did not terminate")

    def reduce_to(expected, new_g_t, new_f_t, why):
        got = classify_case(ctx.map(new_g_t), ctx.map(new_f_t))
        if got != expected:
            raise ReductionFailed(f"reduction from {tag} landed in {got}, expected {expected}")
        ctx.reductions.append(f"{tag} -> {expected}: {why}")
        return _run_case(ctx, new_g_t, new_f_t, context, path, depth + 1)

    if tag in (CaseTag.C1A, CaseTag.C2B, CaseTag.C4B):
        h_t = Let("h0", conj(f_t, g_t))
        new_f = Let("f'", h_t if tag is not CaseTag.C2B else inv(h_t))
        target = {CaseTag.C1A: CaseTag.C1B, CaseTag.C2B: CaseTag.C2A, CaseTag.C4B: CaseTag.C4A}[tag]
        side = ">" if tag is CaseTag.C1A else "<"
        ctx.check(ctx.probe(x, None, "x"), "<", ctx.probe(x, new_f, "x"), f"{tag} reduction")
        ctx.check(ctx.probe(x, new_f, "x"), "<", ctx.probe(y, None, "y"), f"{tag} reduction")
        ctx.check(ctx.probe(y, new_f, "y"), side, ctx.probe(y, None, "y"), f"{tag} reduction")
        return reduce_to(target, g_t, new_f, f"f' = {new_f.body.render()}")
    if tag is CaseTag.C3B:
        # swap roles: g' = f g f^-1 with fixed points f(x) < f(y), mover f' = g
        f_map = ctx.map(f_t)
        fx, fy = f_map(x), f_map(y)
        new_g = Let("g2", conj(f_t, g_t))
        ctx.check(ctx.probe(fx, None, "f(x)"), "<", ctx.probe(fx, g_t, "f(x)"), "3b reduction")
        ctx.check(ctx.probe(fx, g_t, "f(x)"), "<", ctx.probe(fy, None, "f(y)"), "3b reduction")
        ctx.check(ctx.probe(fy, g_t, "f(y)"), "<", ctx.probe(fy, None, "f(y)"), "3b reduction")
        return reduce_to(CaseTag.C3A, new_g, g_t, "g2 = f g f^-1 takes the role of g, g takes the role of f")
    if tag is CaseTag.C1B:
        return _case_1b(ctx, g_t, f_t, x, y)
    if tag is CaseTag.C2A:
        return _case_2a(ctx, g_t, f_t, x, y)
    if tag is CaseTag.C3A:
        return _case_3a(ctx, g_t, f_t, x, y)
    return _case_4a(ctx, g_t, f_t, x, y, context)


# -- ball scan ----------------------------------------------------------------------


@dataclass(frozen=True)
class WanderingVerdict:
    status: str
    x: Fraction
    y: Fraction
    mover: Optional[PLMap] = None
    word: Optional[Word] = None

    @property
    def holds(self) -> bool:
        return self.status == "holds_on_ball"


def wandering_check(g: PLMap, ball: GroupBall) -> WanderingVerdict:
    """Does any ball element send x into (x, y)?  First mover in shortlex order."""
    x, y = two_fixed_points(g)
    for m, w in ball:
        if x < m(x) < y:
            return WanderingVerdict("violated", x, y, m, w)
    return WanderingVerdict("holds_on_ball", x, y)
