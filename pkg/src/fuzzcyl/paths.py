"""Closed-form path calculus on the cylinder.

Paths are a closed DSL rather than arbitrary maps: constants, vertical
affine segments, horizontal lifts of fence paths, concatenations (binary
halving, left-nested), reversals, homotopy transforms, and the boundary
paths of the square free homotopy.  Every construction evaluates exactly at
rational parameters, and continuity against subbasis opens is decidable
piecewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .base_space import comparable, specialization_preorder
from .cylinder import CylinderOpen, SubbasisElem, subbasis_realize
from .fuzzy import FuzzyTopology
from .intervals import (
    EMPTY_SET,
    Interval,
    IntervalSet,
    canonical,
    is_open_in_unit,
    iv_subset,
    iv_union,
    make_interval,
    make_unit_interval,
    singleton,
)
from .rationals import ONE, ZERO, format_rational, frac
from .retraction import CylPoint, h_eval


def kappa(s, t, x) -> Fraction:
    """The segment path in [0,1] from s to t: (t - s) * x + s."""
    s, t, x = frac(s), frac(t), frac(x)
    for v in (s, t, x):
        if not (ZERO <= v <= ONE):
            raise ValueError(f"kappa argument outside [0,1]: {v}")
    return (t - s) * x + s


@dataclass(frozen=True)
class FencePath:
    """A path along consecutively comparable ground elements.

    ``interiors[i]`` is the value taken on the open interior of segment i:
    the specialization-larger endpoint, so that preimages of opens are open.
    """

    steps: tuple[str, ...]
    interiors: tuple[str, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("fence path needs at least one step")
        if len(self.interiors) != max(len(self.steps) - 1, 0):
            raise ValueError("one interior value per segment required")

    def element_at(self, u: Fraction) -> str:
        """Evaluate; a dyadic breakpoint takes the right segment's start."""
        if not (ZERO <= u <= ONE):
            raise ValueError(f"parameter outside [0,1]: {u}")
        k = len(self.steps) - 1
        if k == 0:
            return self.steps[0]
        if u == ONE:
            return self.steps[-1]
        scaled = u * k
        i = int(scaled)
        local = scaled - i
        if local == ZERO:
            return self.steps[i]
        return self.interiors[i]

    def to_json(self) -> dict:
        return {"steps": list(self.steps), "interiors": list(self.interiors)}


def make_fence_path(steps, relation: dict[str, set[str]]) -> FencePath:
    """Validate comparability against a specialization preorder and fix the
    interior representative of each segment."""
    steps = tuple(steps)
    interiors = []
    for a, b in zip(steps, steps[1:]):
        if b in relation[a]:
            interiors.append(b)
        elif a in relation[b]:
            interiors.append(a)
        else:
            raise ValueError(f"consecutive fence elements not comparable: {a}, {b}")
    return FencePath(steps, tuple(interiors))


@dataclass(frozen=True)
class Const:
    point: CylPoint


@dataclass(frozen=True)
class VerticalAffine:
    """u -> (x, a0 + (a1 - a0) u); levels stay in [0,1)."""

    x: str
    a0: Fraction
    a1: Fraction

    def __post_init__(self):
        for v in (self.a0, self.a1):
            if not (ZERO <= v < ONE):
                raise ValueError(f"vertical level outside J: {v}")


@dataclass(frozen=True)
class HLift:
    """A fence path in the base, lifted horizontally to a fixed level."""

    base: FencePath
    level: Fraction

    def __post_init__(self):
        if not (ZERO <= self.level < ONE):
            raise ValueError(f"lift level outside J: {self.level}")


@dataclass(frozen=True)
class Concat:
    parts: tuple["PathExpr", ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("concatenation needs at least two parts")
        for a, b in zip(self.parts, self.parts[1:]):
            if path_end(a) != path_start(b):
                raise ValueError(
                    f"concatenation endpoints mismatch: {path_end(a)} vs {path_start(b)}")


@dataclass(frozen=True)
class Reverse:
    inner: "PathExpr"


@dataclass(frozen=True)
class HTransform:
    """The homotopy applied at a fixed time to every point of a path."""

    t: Fraction
    inner: "PathExpr"

    def __post_init__(self):
        if not (ZERO <= self.t <= ONE):
            raise ValueError(f"homotopy time outside [0,1]: {self.t}")


@dataclass(frozen=True)
class ChiBoundary:
    """Boundary path of the square free homotopy: x -> H(kappa(s,t)(x), rho(end))."""

    rho: "PathExpr"
    s: Fraction
    t: Fraction
    end: int

    def __post_init__(self):
        if self.end not in (0, 1):
            raise ValueError("end must be 0 or 1")
        for v in (self.s, self.t):
            if not (ZERO <= v <= ONE):
                raise ValueError(f"homotopy time outside [0,1]: {v}")


PathExpr = Union[Const, VerticalAffine, HLift, Concat, Reverse, HTransform, ChiBoundary]


def path_start(e: PathExpr) -> CylPoint:
    return eval_path(e, ZERO)


def path_end(e: PathExpr) -> CylPoint:
    return eval_path(e, ONE)


def _binary_concat_eval(parts, u: Fraction) -> CylPoint:
    # left-nested: (p1 * ... * p_{n-1}) * p_n
    if len(parts) == 1:
        return eval_path(parts[0], u)
    if u <= Fraction(1, 2):
        return _binary_concat_eval(parts[:-1], 2 * u)
    return eval_path(parts[-1], 2 * u - 1)


def eval_path(e: PathExpr, u) -> CylPoint:
    u = frac(u)
    if not (ZERO <= u <= ONE):
        raise ValueError(f"path parameter outside [0,1]: {u}")
    if isinstance(e, Const):
        return e.point
    if isinstance(e, VerticalAffine):
        return CylPoint(e.x, e.a0 + (e.a1 - e.a0) * u)
    if isinstance(e, HLift):
        return CylPoint(e.base.element_at(u), e.level)
    if isinstance(e, Concat):
        return _binary_concat_eval(e.parts, u)
    if isinstance(e, Reverse):
        return eval_path(e.inner, ONE - u)
    if isinstance(e, HTransform):
        return h_eval(e.t, eval_path(e.inner, u))
    if isinstance(e, ChiBoundary):
        anchor = eval_path(e.rho, Fraction(e.end))
        return h_eval(kappa(e.s, e.t, u), anchor)
    raise TypeError(f"not a path expression: {e!r}")


def chi_eval(rho: PathExpr, s, t, eta, x) -> CylPoint:
    """The square free homotopy value H(kappa(s,t)(x), rho(eta))."""
    return h_eval(kappa(s, t, x), eval_path(rho, frac(eta)))


def chi_boundary(rho: PathExpr, s, t, end: int) -> VerticalAffine:
    """The end-restriction of the square homotopy as a vertical path."""
    s, t = frac(s), frac(t)
    anchor = eval_path(rho, Fraction(end))
    return VerticalAffine(anchor.x, (ONE - s) * anchor.alpha, (ONE - t) * anchor.alpha)


def vertical_connector(y: str, alpha, beta) -> VerticalAffine:
    """The canonical path between two points on the same vertical fiber."""
    return VerticalAffine(y, frac(alpha), frac(beta))


# ---------------------------------------------------------------------------
# image contributions and containment


def _contributions(e: PathExpr, scale: Fraction) -> list[tuple[str, Fraction, Fraction]]:
    """Closed level ranges (element, lo, hi) covering the path image after
    scaling levels by ``scale`` (accumulated homotopy transforms)."""
    if isinstance(e, Const):
        v = scale * e.point.alpha
        return [(e.point.x, v, v)]
    if isinstance(e, VerticalAffine):
        lo, hi = min(e.a0, e.a1), max(e.a0, e.a1)
        return [(e.x, scale * lo, scale * hi)]
    if isinstance(e, HLift):
        v = scale * e.level
        return [(x, v, v) for x in set(e.base.steps) | set(e.base.interiors)]
    if isinstance(e, Concat):
        out = []
        for part in e.parts:
            out.extend(_contributions(part, scale))
        return out
    if isinstance(e, Reverse):
        return _contributions(e.inner, scale)
    if isinstance(e, HTransform):
        return _contributions(e.inner, scale * (ONE - e.t))
    if isinstance(e, ChiBoundary):
        return _contributions(chi_boundary(e.rho, e.s, e.t, e.end), scale)
    raise TypeError(f"not a path expression: {e!r}")


def path_in_open(e: PathExpr, open_set: CylinderOpen) -> bool:
    """Exact image containment of a path in a cylinder set."""
    for x, lo, hi in _contributions(e, ONE):
        segment = make_interval(lo, hi, True, True)
        if not iv_subset(segment, open_set.fiber(x)):
            return False
    return True


# ---------------------------------------------------------------------------
# exact preimages and continuity


def _affine_preimage(a0: Fraction, a1: Fraction, fiber: IntervalSet) -> IntervalSet:
    """{u in [0,1] : a0 + (a1 - a0) u in fiber} as a canonical parameter set."""
    slope = a1 - a0
    if slope == ZERO:
        return make_unit_interval(0, 1, True, True) if fiber.contains(a0) else EMPTY_SET
    pieces = []
    for part in fiber.parts:
        u1 = (part.lo - a0) / slope
        u2 = (part.hi - a0) / slope
        if slope > 0:
            lo, hi = u1, u2
            lo_closed, hi_closed = part.lo_closed, part.hi_closed
        else:
            lo, hi = u2, u1
            lo_closed, hi_closed = part.hi_closed, part.lo_closed
        if hi < ZERO or lo > ONE:
            continue
        if lo < ZERO:
            lo, lo_closed = ZERO, True
        if hi > ONE:
            hi, hi_closed = ONE, True
        pieces.extend(make_unit_interval(lo, hi, lo_closed, hi_closed).parts)
    return canonical(pieces)


def _scale_fiber_preimage(fiber: IntervalSet, c: Fraction) -> IntervalSet:
    """{beta in [0,1) : c * beta in fiber} for a scale c in [0,1]."""
    if c == ZERO:
        return make_interval(0, 1, True, False) if fiber.contains(ZERO) else EMPTY_SET
    pieces = []
    for part in fiber.parts:
        lo = part.lo / c
        hi = part.hi / c
        lo_closed, hi_closed = part.lo_closed, part.hi_closed
        if lo >= ONE:
            continue
        if hi > ONE:
            hi, hi_closed = ONE, False
        pieces.extend(make_interval(lo, min(hi, ONE), lo_closed, hi_closed).parts)
    return canonical(pieces)


def _scale_open_preimage(open_set: CylinderOpen, c: Fraction) -> CylinderOpen:
    return CylinderOpen(open_set.ground,
                        tuple(_scale_fiber_preimage(f, c) for f in open_set.fibers))


def _shift(parts: IntervalSet, a: Fraction, b: Fraction) -> list[Interval]:
    """Map a parameter set through u -> a + (b - a) u with a < b."""
    width = b - a
    out = []
    for p in parts.parts:
        out.extend(make_unit_interval(a + width * p.lo, a + width * p.hi,
                                      p.lo_closed, p.hi_closed).parts)
    return out


def _reverse_params(parts: IntervalSet) -> IntervalSet:
    out = []
    for p in parts.parts:
        out.extend(make_unit_interval(ONE - p.hi, ONE - p.lo,
                                      p.hi_closed, p.lo_closed).parts)
    return canonical(out)


def _hlift_preimage(e: HLift, open_set: CylinderOpen) -> IntervalSet:
    fence = e.base
    k = len(fence.steps) - 1
    member = {x: open_set.fiber(x).contains(e.level)
              for x in set(fence.steps) | set(fence.interiors)}
    if k == 0:
        return (make_unit_interval(0, 1, True, True)
                if member[fence.steps[0]] else EMPTY_SET)
    pieces = []
    for i in range(k):
        lo, hi = Fraction(i, k), Fraction(i + 1, k)
        if member[fence.steps[i]]:
            pieces.extend(make_unit_interval(lo, lo, True, True).parts)
        if member[fence.interiors[i]]:
            pieces.extend(make_unit_interval(lo, hi, False, False).parts)
    if member[fence.steps[-1]]:
        pieces.extend(make_unit_interval(1, 1, True, True).parts)
    return canonical(pieces)


def path_preimage(e: PathExpr, open_set: CylinderOpen) -> IntervalSet:
    """Exact parameter set {u in [0,1] : e(u) in open_set}."""
    if isinstance(e, Const):
        contained = open_set.fiber(e.point.x).contains(e.point.alpha)
        return make_unit_interval(0, 1, True, True) if contained else EMPTY_SET
    if isinstance(e, VerticalAffine):
        return _affine_preimage(e.a0, e.a1, open_set.fiber(e.x))
    if isinstance(e, HLift):
        return _hlift_preimage(e, open_set)
    if isinstance(e, Concat):
        parts = list(e.parts)
        acc = path_preimage(parts[-1], open_set)
        pieces = _shift(acc, Fraction(1, 2), ONE)
        left = parts[:-1]
        inner = (path_preimage(left[0], open_set) if len(left) == 1
                 else path_preimage(Concat(tuple(left)), open_set))
        pieces.extend(_shift(inner, ZERO, Fraction(1, 2)))
        return canonical(pieces)
    if isinstance(e, Reverse):
        return _reverse_params(path_preimage(e.inner, open_set))
    if isinstance(e, HTransform):
        return path_preimage(e.inner, _scale_open_preimage(open_set, ONE - e.t))
    if isinstance(e, ChiBoundary):
        return path_preimage(chi_boundary(e.rho, e.s, e.t, e.end), open_set)
    raise TypeError(f"not a path expression: {e!r}")


def path_preimage_open(e: PathExpr, target: SubbasisElem, topo: FuzzyTopology) -> bool:
    """True iff the exact preimage of the target is open in [0,1]."""
    preimage = path_preimage(e, subbasis_realize(target, topo))
    return is_open_in_unit(preimage)


def normalize_path(e: PathExpr) -> PathExpr:
    """Canonical normal form: reversals are pushed through transforms and
    concatenations and resolved on the leaves."""
    if isinstance(e, (Const, VerticalAffine, HLift)):
        return e
    if isinstance(e, Concat):
        return Concat(tuple(normalize_path(p) for p in e.parts))
    if isinstance(e, HTransform):
        return HTransform(e.t, normalize_path(e.inner))
    if isinstance(e, ChiBoundary):
        return ChiBoundary(normalize_path(e.rho), e.s, e.t, e.end)
    inner = e.inner
    if isinstance(inner, Reverse):
        return normalize_path(inner.inner)
    if isinstance(inner, HTransform):
        return HTransform(inner.t, normalize_path(Reverse(inner.inner)))
    if isinstance(inner, Const):
        return inner
    if isinstance(inner, VerticalAffine):
        return VerticalAffine(inner.x, inner.a1, inner.a0)
    if isinstance(inner, Concat):
        return Reverse(Concat(tuple(normalize_path(p) for p in inner.parts)))
    return Reverse(normalize_path(inner))


def functor_object_path(F, y: str, z: str, beta) -> VerticalAffine:
    """The object path of the induced groupoid functor: the vertical path
    u -> (z, (1 - kappa(F(y), 1-F(y))(u)) * beta)."""
    beta = frac(beta)
    if not (ZERO <= beta < ONE):
        raise ValueError(f"level outside J: {beta}")
    fy = F(y)
    return VerticalAffine(z, (ONE - fy) * beta, fy * beta)


def path_to_json(e: PathExpr) -> dict:
    if isinstance(e, Const):
        return {"type": "const", "point": e.point.to_json()}
    if isinstance(e, VerticalAffine):
        return {"type": "vertical", "x": e.x,
                "a0": format_rational(e.a0), "a1": format_rational(e.a1)}
    if isinstance(e, HLift):
        return {"type": "hlift", "base": e.base.to_json(),
                "level": format_rational(e.level)}
    if isinstance(e, Concat):
        return {"type": "concat", "parts": [path_to_json(p) for p in e.parts]}
    if isinstance(e, Reverse):
        return {"type": "reverse", "inner": path_to_json(e.inner)}
    if isinstance(e, HTransform):
        return {"type": "h_transform", "t": format_rational(e.t),
                "inner": path_to_json(e.inner)}
    if isinstance(e, ChiBoundary):
        return {"type": "chi_boundary", "rho": path_to_json(e.rho),
                "s": format_rational(e.s), "t": format_rational(e.t), "end": e.end}
    raise TypeError(f"not a path expression: {e!r}")


def path_from_json(doc: dict) -> PathExpr:
    kind = doc["type"]
    if kind == "const":
        return Const(CylPoint.from_json(doc["point"]))
    if kind == "vertical":
        return VerticalAffine(doc["x"], frac(doc["a0"]), frac(doc["a1"]))
    if kind == "hlift":
        base = doc["base"]
        return HLift(FencePath(tuple(base["steps"]), tuple(base["interiors"])),
                     frac(doc["level"]))
    if kind == "concat":
        return Concat(tuple(path_from_json(p) for p in doc["parts"]))
    if kind == "reverse":
        return Reverse(path_from_json(doc["inner"]))
    if kind == "h_transform":
        return HTransform(frac(doc["t"]), path_from_json(doc["inner"]))
    if kind == "chi_boundary":
        return ChiBoundary(path_from_json(doc["rho"]), frac(doc["s"]),
                           frac(doc["t"]), int(doc["end"]))
    raise ValueError(f"unknown path expression type {kind!r}")
