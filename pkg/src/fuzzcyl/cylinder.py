"""The cylinder space X x J: membership regions, subbasis opens, and the
complement-compatibility analysis.

Opens on the cylinder are normalized to one canonical interval set per
ground element, so equality of opens is structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .fuzzy import FuzzySet, FuzzyTopology, GroundSet, fz_complement, fz_is_topology, fz_join, fz_meet
from .intervals import (
    EMPTY_SET,
    IntervalSet,
    iv_complement_in_J,
    iv_contains,
    iv_intersect,
    iv_subset,
    iv_supremum,
    iv_union,
    make_interval,
)
from .rationals import ONE, ZERO, format_rational, frac


@dataclass(frozen=True)
class CylinderOpen:
    """A subset of X x J stored as one canonical fiber per ground element."""

    ground: GroundSet
    fibers: tuple[IntervalSet, ...]

    def __post_init__(self):
        if len(self.fibers) != len(self.ground.elements):
            raise ValueError("one fiber per ground element required")

    def fiber(self, x: str) -> IntervalSet:
        return self.fibers[self.ground.index(x)]

    def is_empty(self) -> bool:
        return all(f.is_empty() for f in self.fibers)

    def __repr__(self):
        body = ", ".join(f"{x}:{f!r}" for x, f in zip(self.ground.elements, self.fibers))
        return "Cyl(" + body + ")"

    def to_json(self) -> dict:
        return {"fibers": {x: f.to_json()
                           for x, f in zip(self.ground.elements, self.fibers)}}

    @staticmethod
    def from_json(gs: GroundSet, doc: dict) -> "CylinderOpen":
        fibers = doc["fibers"]
        return CylinderOpen(gs, tuple(IntervalSet.from_json(fibers.get(x, []))
                                      for x in gs.elements))


def empty_cylinder(gs: GroundSet) -> CylinderOpen:
    return CylinderOpen(gs, (EMPTY_SET,) * len(gs.elements))


def whole_cylinder(gs: GroundSet) -> CylinderOpen:
    whole = make_interval(0, 1, True, False)
    return CylinderOpen(gs, (whole,) * len(gs.elements))


def cyl_union(a: CylinderOpen, b: CylinderOpen) -> CylinderOpen:
    return CylinderOpen(a.ground, tuple(iv_union(u, v) for u, v in zip(a.fibers, b.fibers)))


def cyl_intersect(a: CylinderOpen, b: CylinderOpen) -> CylinderOpen:
    return CylinderOpen(a.ground, tuple(iv_intersect(u, v) for u, v in zip(a.fibers, b.fibers)))


def cyl_complement(c: CylinderOpen) -> CylinderOpen:
    """Fiberwise complement within J; the result need not be open."""
    return CylinderOpen(c.ground, tuple(iv_complement_in_J(f) for f in c.fibers))


def cyl_subset(a: CylinderOpen, b: CylinderOpen) -> bool:
    return all(iv_subset(u, v) for u, v in zip(a.fibers, b.fibers))


def cyl_contains(c: CylinderOpen, x: str, alpha) -> bool:
    alpha = frac(alpha)
    if not (ZERO <= alpha < ONE):
        raise ValueError(f"level outside J: {alpha}")
    return iv_contains(c.fiber(x), alpha)


def psi_star(f: FuzzySet) -> CylinderOpen:
    """The region strictly below the membership graph: fiber [0, f(x))."""
    return CylinderOpen(f.ground, tuple(make_interval(0, v, True, False)
                                        for v in f.levels))


def recover_membership(c: CylinderOpen) -> FuzzySet:
    """Invert psi_star by taking fiber suprema; sup of an empty fiber is 0."""
    values = []
    for x, fib in zip(c.ground.elements, c.fibers):
        if fib.is_empty():
            values.append(ZERO)
            continue
        if len(fib.parts) != 1:
            raise ValueError(f"fiber at {x!r} is not of down-set shape: {fib!r}")
        part = fib.parts[0]
        if part.lo != ZERO or not part.lo_closed or part.hi_closed:
            raise ValueError(f"fiber at {x!r} is not of down-set shape: {fib!r}")
        values.append(iv_supremum(fib))
    return FuzzySet(c.ground, tuple(values))


GAMMA_LO = Fraction(-1)


@dataclass(frozen=True)
class SubbasisElem:
    """A subbasis open of the initial topology on the cylinder.

    kind "tstar" names an open T of the topology and realizes the set of
    points (x, alpha) with T(x) - alpha > gamma; kind "pi2" realizes the
    points with alpha > gamma.
    """

    kind: str
    gamma: Fraction
    open_name: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("tstar", "pi2"):
            raise ValueError(f"unknown subbasis kind {self.kind!r}")
        if self.kind == "tstar" and self.open_name is None:
            raise ValueError("tstar subbasis element needs an open name")
        if not (GAMMA_LO <= self.gamma < ONE):
            raise ValueError(f"gamma outside [-1,1): {self.gamma}")

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "gamma": format_rational(self.gamma)}
        if self.open_name is not None:
            doc["open"] = self.open_name
        return doc

    @staticmethod
    def from_json(doc: dict) -> "SubbasisElem":
        return SubbasisElem(doc["kind"], frac(doc["gamma"]), doc.get("open"))


def tstar(open_name: str, gamma) -> SubbasisElem:
    return SubbasisElem("tstar", frac(gamma), open_name)


def pi2(gamma) -> SubbasisElem:
    return SubbasisElem("pi2", frac(gamma))


@dataclass(frozen=True)
class OpenExpr:
    """A union of clauses, each clause a finite intersection of subbasis opens."""

    clauses: tuple[tuple[SubbasisElem, ...], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("clauses must be nonempty")

    def to_json(self) -> list:
        return [[e.to_json() for e in clause] for clause in self.clauses]

    @staticmethod
    def from_json(doc: list) -> "OpenExpr":
        return OpenExpr(tuple(tuple(SubbasisElem.from_json(e) for e in clause)
                              for clause in doc))


def subbasis_realize(e: SubbasisElem, topo: FuzzyTopology) -> CylinderOpen:
    """Canonical fibers of a subbasis open."""
    if e.kind == "pi2":
        if e.gamma < 0:
            fiber = make_interval(0, 1, True, False)
        else:
            fiber = make_interval(e.gamma, 1, False, False)
        return CylinderOpen(topo.ground, (fiber,) * len(topo.ground.elements))
    f = topo.open_named(e.open_name)
    fibers = []
    for v in f.levels:
        hi = min(v - e.gamma, ONE)
        if hi <= 0:
            fibers.append(EMPTY_SET)
        else:
            fibers.append(make_interval(0, hi, True, False))
    return CylinderOpen(topo.ground, tuple(fibers))


def open_realize(expr: OpenExpr, topo: FuzzyTopology) -> CylinderOpen:
    out = empty_cylinder(topo.ground)
    for clause in expr.clauses:
        acc = whole_cylinder(topo.ground)
        for e in clause:
            acc = cyl_intersect(acc, subbasis_realize(e, topo))
        out = cyl_union(out, acc)
    return out


def critical_gammas(topo: FuzzyTopology) -> tuple[Fraction, ...]:
    """A finite probe family of gamma values for exhaustive sweeps.

    The emptiness pattern of the realized fibers (equivalently their
    level-0 slices) is constant between consecutive membership-value
    thresholds, so the thresholds plus midpoints of adjacent thresholds
    exhaust every slice behaviour; -1 covers the whole-cylinder end.
    """
    thresholds = sorted({GAMMA_LO, ZERO, ONE} | set(topo.membership_values()))
    gammas = {g for g in thresholds if GAMMA_LO <= g < ONE}
    for a, b in zip(thresholds, thresholds[1:]):
        mid = (a + b) / 2
        if GAMMA_LO <= mid < ONE:
            gammas.add(mid)
    return tuple(sorted(gammas))


def subbasis_elements(topo: FuzzyTopology) -> tuple[SubbasisElem, ...]:
    """A finite family of subbasis elements covering all distinct realizations."""
    gammas = critical_gammas(topo)
    elems = [pi2(g) for g in gammas]
    for name in topo.names:
        elems.extend(tstar(name, g) for g in gammas)
    return tuple(elems)


@dataclass(frozen=True)
class CompatReport:
    """Outcome of comparing psi_star(1-f) with the set complement of psi_star(f)."""

    equal: bool
    witness_element: Optional[str] = None
    psi_of_complement: Optional[IntervalSet] = None
    complement_of_psi: Optional[IntervalSet] = None

    def to_json(self) -> dict:
        doc = {"equal": self.equal}
        if not self.equal:
            doc["witness_element"] = self.witness_element
            doc["psi_of_complement"] = self.psi_of_complement.to_json()
            doc["complement_of_psi"] = self.complement_of_psi.to_json()
        return doc


def complement_compat(f: FuzzySet) -> CompatReport:
    algebraic = psi_star(fz_complement(f))
    settheoretic = cyl_complement(psi_star(f))
    for x, u, v in zip(f.ground.elements, algebraic.fibers, settheoretic.fibers):
        if u != v:
            return CompatReport(False, x, u, v)
    return CompatReport(True)


@dataclass(frozen=True)
class LawReport:
    ok: bool
    failures: tuple[tuple, ...] = ()
    checked: int = 0

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked,
                "failures": [list(f) for f in self.failures]}


def verify_psi_laws(topo: FuzzyTopology, max_family: int = 4) -> LawReport:
    """Check that psi_star turns meets into intersections and joins into unions."""
    report = fz_is_topology(topo.opens)
    if not report.ok:
        raise ValueError(f"invalid topology: {report.summary()}")
    failures: list[tuple] = []
    checked = 0
    images = {name: psi_star(f) for name, f in topo.items()}
    for (na, a), (nb, b) in itertools.combinations_with_replacement(list(topo.items()), 2):
        checked += 1
        if cyl_intersect(images[na], images[nb]) != psi_star(fz_meet(a, b)):
            failures.append(("meet-law", na, nb))
    names = list(topo.names)
    families = [list(c) for r in range(1, min(max_family, len(names)) + 1)
                for c in itertools.combinations(names, r)]
    if len(names) > max_family:
        families.append(names)
    for fam in families:
        checked += 1
        union = empty_cylinder(topo.ground)
        for n in fam:
            union = cyl_union(union, images[n])
        joined = fz_join([topo.open_named(n) for n in fam])
        if union != psi_star(joined):
            failures.append(("join-law", *fam))
    return LawReport(not failures, tuple(failures), checked)
