"""The vertical-collapse homotopy on the cylinder and its constructive
continuity certificates.

A certificate is a product box (time interval x cylinder open) around an
anchor whose exact image under the homotopy lands inside a chosen subbasis
target.  The epsilon in each box is half the maximal slack admitted by the
relevant case analysis, so certificates are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cylinder import (
    CylinderOpen,
    OpenExpr,
    SubbasisElem,
    cyl_subset,
    open_realize,
    pi2,
    subbasis_realize,
    tstar,
)
from .fuzzy import FuzzyTopology, GroundSet
from .intervals import (
    EMPTY_SET,
    Interval,
    IntervalSet,
    canonical,
    make_interval,
    make_unit_interval,
    singleton,
)
from .rationals import ONE, ZERO, format_rational, frac


@dataclass(frozen=True)
class CylPoint:
    x: str
    alpha: Fraction

    def __post_init__(self):
        if not (ZERO <= self.alpha < ONE):
            raise ValueError(f"level outside J: {self.alpha}")

    def __repr__(self):
        return f"({self.x},{format_rational(self.alpha)})"

    def to_json(self) -> dict:
        return {"x": self.x, "alpha": format_rational(self.alpha)}

    @staticmethod
    def from_json(doc: dict) -> "CylPoint":
        return CylPoint(doc["x"], frac(doc["alpha"]))


def point(x: str, alpha) -> CylPoint:
    return CylPoint(x, frac(alpha))


def h_eval(t, p: CylPoint) -> CylPoint:
    """The homotopy value (x, (1-t) * alpha)."""
    t = frac(t)
    if not (ZERO <= t <= ONE):
        raise ValueError(f"homotopy time outside [0,1]: {t}")
    return CylPoint(p.x, (ONE - t) * p.alpha)


def sigma_eval(p: CylPoint) -> CylPoint:
    """The retraction onto the zero slice."""
    return CylPoint(p.x, ZERO)


def _scaled_part(c: Interval, part: Interval) -> Optional[Interval]:
    """Exact image {c * a : c in c-interval, a in part}, both nonnegative."""
    lo = c.lo * part.lo
    hi = c.hi * part.hi
    if hi == ZERO:
        # every product collapses to zero; the set is {0} when both factors
        # admit a point, which holds since both intervals are nonempty
        return Interval(ZERO, ZERO, True, True)
    if lo == ZERO:
        lo_closed = (c.lo == ZERO and c.lo_closed) or (part.lo == ZERO and part.lo_closed)
    else:
        lo_closed = c.lo_closed and part.lo_closed
    hi_closed = c.hi_closed and part.hi_closed
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def h_image_of_box(t_interval: Interval, region: CylinderOpen) -> CylinderOpen:
    """Exact image of a product box under the homotopy, fiber by fiber."""
    scale = Interval(ONE - t_interval.hi, ONE - t_interval.lo,
                     t_interval.hi_closed, t_interval.lo_closed)
    fibers = []
    for fib in region.fibers:
        parts = []
        for part in fib.parts:
            image = _scaled_part(scale, part)
            if image is not None:
                parts.append(image)
        fibers.append(canonical(parts))
    return CylinderOpen(region.ground, tuple(fibers))


@dataclass(frozen=True)
class BoxWitness:
    """A continuity certificate for the homotopy at one anchor."""

    t_interval: Interval
    region_expr: OpenExpr
    region: CylinderOpen
    target: SubbasisElem
    anchor_t: Fraction
    anchor: CylPoint

    def to_json(self) -> dict:
        return {
            "t_interval": self.t_interval.to_json(),
            "region_expr": self.region_expr.to_json(),
            "region": self.region.to_json(),
            "target": self.target.to_json(),
            "anchor_t": format_rational(self.anchor_t),
            "anchor": self.anchor.to_json(),
        }

    @staticmethod
    def from_json(gs: GroundSet, doc: dict) -> "BoxWitness":
        return BoxWitness(
            Interval.from_json(doc["t_interval"]),
            OpenExpr.from_json(doc["region_expr"]),
            CylinderOpen.from_json(gs, doc["region"]),
            SubbasisElem.from_json(doc["target"]),
            frac(doc["anchor_t"]),
            CylPoint.from_json(doc["anchor"]),
        )


def _witness(t_lo, t_hi, lo_closed, hi_closed, clause, topo, target, t, p) -> BoxWitness:
    expr = OpenExpr((tuple(clause),))
    return BoxWitness(
        t_interval=Interval(frac(t_lo), frac(t_hi), lo_closed, hi_closed),
        region_expr=expr,
        region=open_realize(expr, topo),
        target=target,
        anchor_t=frac(t),
        anchor=p,
    )


def continuity_witness(t, p: CylPoint, target: SubbasisElem,
                       topo: FuzzyTopology) -> BoxWitness:
    """Build a box certificate around (t, p) for the given subbasis target.

    Case dispatch mirrors the three regimes t = 1, 0 < t < 1, t = 0; in each
    the epsilon is half the maximal admissible slack.
    """
    t = frac(t)
    x, alpha = p.x, p.alpha
    image = h_eval(t, p)
    if not subbasis_realize(target, topo).fiber(image.x).contains(image.alpha):
        raise ValueError(f"H({t},{p}) does not lie in the target {target}")
    gamma = target.gamma
    if target.kind == "tstar":
        tv = topo.open_named(target.open_name)(x)

    if t == ONE:
        if target.kind == "pi2":
            # image level is 0, so gamma < 0 and any box lands above gamma
            if alpha == ZERO:
                eps = Fraction(1, 2)
                clause = [pi2(Fraction(-1))]
            else:
                eps = min(ONE, alpha) / 2
                clause = [pi2(alpha - eps)]
            return _witness(ONE - eps, ONE, False, True, clause, topo, target, t, p)
        if alpha == ZERO:
            eps = Fraction(1, 2)
            clause = [target]
        else:
            eps = min(ONE, alpha, (tv - gamma) / 2) / 2
            clause = [tstar(target.open_name, max(Fraction(-1), gamma - alpha + 2 * eps)),
                      pi2(alpha - eps)]
        return _witness(ONE - eps, ONE, False, True, clause, topo, target, t, p)

    if t == ZERO:
        if target.kind == "pi2":
            if alpha == ZERO:
                eps = Fraction(1, 2)
                clause = [pi2(gamma)]
            else:
                bound = ONE if gamma <= 0 else ONE - gamma / alpha
                eps = min(ONE, bound) / 2
                clause = [pi2(max(Fraction(-1), gamma / (ONE - eps)))]
        else:
            eps = Fraction(1, 2)
            clause = [target]
        return _witness(ZERO, eps, True, False, clause, topo, target, t, p)

    # 0 < t < 1
    if target.kind == "pi2":
        bounds = [t, ONE - t]
        if alpha > ZERO:
            bounds.append(((ONE - t) * alpha - gamma) / alpha)
        eps = min(bounds) / 2
        clause = [pi2(max(Fraction(-1), gamma + (t + eps) * alpha))]
    else:
        slack = (tv - (ONE - t) * alpha - gamma) / (ONE + t)
        eps = min(t, ONE - t, slack) / 2
        mu = max(Fraction(-1), gamma - alpha * t + eps * (t + ONE))
        clause = [tstar(target.open_name, mu), pi2(max(Fraction(-1), alpha - eps))]
    return _witness(t - eps, t + eps, False, False, clause, topo, target, t, p)


def verify_witness(w: BoxWitness, topo: FuzzyTopology) -> bool:
    """Replay a certificate: anchor containment, region realizability, and
    exact image containment in the target."""
    if not w.t_interval.contains(w.anchor_t):
        return False
    if not w.region.fiber(w.anchor.x).contains(w.anchor.alpha):
        return False
    if open_realize(w.region_expr, topo) != w.region:
        return False
    image = h_image_of_box(w.t_interval, w.region)
    return cyl_subset(image, subbasis_realize(w.target, topo))


def sigma_image_subbasis(e: SubbasisElem, topo: FuzzyTopology) -> CylinderOpen:
    """Image of a subbasis open under the slice retraction.

    A tstar open maps to the zero-level points over its nonempty fibers; a
    pi2 open maps onto the full zero slice.
    """
    zero = singleton(0)
    if e.kind == "pi2":
        fibers = tuple(zero for _ in topo.ground.elements)
        return CylinderOpen(topo.ground, fibers)
    realized = subbasis_realize(e, topo)
    fibers = tuple(EMPTY_SET if fib.is_empty() else zero for fib in realized.fibers)
    return CylinderOpen(topo.ground, fibers)


def sigma_image(c: CylinderOpen) -> CylinderOpen:
    """Image of an arbitrary cylinder set under the slice retraction."""
    zero = singleton(0)
    return CylinderOpen(c.ground, tuple(EMPTY_SET if fib.is_empty() else zero
                                        for fib in c.fibers))
