"""The finite topology induced on the ground set, its specialization
preorder, and the connectivity gate used by the path calculus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cylinder import (
    OpenExpr,
    SubbasisElem,
    critical_gammas,
    pi2,
    subbasis_realize,
    tstar,
)
from .fuzzy import FuzzySet, FuzzyTopology, GroundSet
from .rationals import ONE, ZERO


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on a finite ground set; opens are encoded as bitmasks."""

    ground: GroundSet
    opens: frozenset[int]

    def __post_init__(self):
        full = (1 << len(self.ground.elements)) - 1
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("topology must contain the empty set and the full set")
        for a, b in itertools.combinations(self.opens, 2):
            if a & b not in self.opens or a | b not in self.opens:
                raise ValueError("family is not closed under intersection/union")

    def mask_of(self, subset) -> int:
        mask = 0
        for x in subset:
            mask |= 1 << self.ground.index(x)
        return mask

    def set_of(self, mask: int) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.ground.elements) if mask >> i & 1)

    def opens_as_sets(self) -> list[tuple[str, ...]]:
        return [self.set_of(m) for m in sorted(self.opens)]

    def to_json(self) -> dict:
        return {"opens": [list(s) for s in self.opens_as_sets()]}


def close_under_ops(ground_set: GroundSet, generators: set[int]) -> FiniteTopology:
    full = (1 << len(ground_set.elements)) - 1
    opens = set(generators) | {0, full}
    changed = True
    while changed:
        changed = False
        current = list(opens)
        for a, b in itertools.combinations(current, 2):
            for cand in (a & b, a | b):
                if cand not in opens:
                    opens.add(cand)
                    changed = True
    return FiniteTopology(ground_set, frozenset(opens))


def level_preimage_masks(topo: FuzzyTopology) -> frozenset[int]:
    """All distinct sets {x : T(x) > gamma} over opens T and gamma in [-1,1).

    Only gamma just below each distinct membership value matters, so the
    preimages are exactly the threshold sets {x : T(x) >= v} for positive
    values v of T, plus the full set (gamma < 0) and possibly the empty set.
    """
    masks = set()
    full = (1 << len(topo.ground.elements)) - 1
    for f in topo.opens:
        masks.add(full)  # gamma = -1
        values = {v for v in f.levels}
        for v in values:
            if v > 0:
                masks.add(sum(1 << i for i, lv in enumerate(f.levels) if lv >= v))
        if max(f.levels) < ONE:
            masks.add(0)  # gamma at or above the maximum value
    return frozenset(masks)


def iota_x(topo: FuzzyTopology) -> FiniteTopology:
    """The initial topology on X for the membership maps of the topology."""
    return close_under_ops(topo.ground, set(level_preimage_masks(topo)))


def slice_agrees(topo: FuzzyTopology) -> bool:
    """Computational content of the slice homeomorphism X x {0} -> X.

    Compares the level-0 slices of the tstar subbasis realizations, projected
    to X, against the subbasis family of the base topology.
    """
    gammas = critical_gammas(topo)
    slice_masks = set()
    for name in topo.names:
        for g in gammas:
            realized = subbasis_realize(tstar(name, g), topo)
            mask = 0
            for i, fib in enumerate(realized.fibers):
                if fib.contains(ZERO):
                    mask |= 1 << i
            slice_masks.add(mask)
    base_masks = set(level_preimage_masks(topo))
    # the pi2-derived slice member is the whole slice, already present via gamma=-1
    return slice_masks == base_masks


def specialization_preorder(ft: FiniteTopology) -> dict[str, set[str]]:
    """x <= y iff every open containing x contains y."""
    relation: dict[str, set[str]] = {}
    for i, x in enumerate(ft.ground.elements):
        above = set(ft.ground.elements)
        for mask in ft.opens:
            if mask >> i & 1:
                above &= set(ft.set_of(mask))
        relation[x] = above
    return relation


def comparable(relation: dict[str, set[str]], a: str, b: str) -> bool:
    return b in relation[a] or a in relation[b]


def connected_components(ft: FiniteTopology) -> tuple[tuple[str, ...], ...]:
    """Components of the comparability graph of the specialization preorder.

    For finite spaces these coincide with the path components.
    """
    relation = specialization_preorder(ft)
    elements = list(ft.ground.elements)
    seen: set[str] = set()
    components = []
    for x in elements:
        if x in seen:
            continue
        comp = {x}
        frontier = [x]
        while frontier:
            cur = frontier.pop()
            for y in elements:
                if y not in comp and comparable(relation, cur, y):
                    comp.add(y)
                    frontier.append(y)
        seen |= comp
        components.append(tuple(e for e in elements if e in comp))
    return tuple(components)


@dataclass(frozen=True)
class ConnectivityReport:
    pc: bool
    lpc: bool
    components: tuple[tuple[str, ...], ...]
    lpc_justification: str = "finite space: minimal open neighborhoods are path-connected"

    def to_json(self) -> dict:
        return {"pc": self.pc, "lpc": self.lpc,
                "components": [list(c) for c in self.components],
                "lpc_justification": self.lpc_justification}


def check_pc_lpc(topo: FuzzyTopology) -> ConnectivityReport:
    ft = iota_x(topo)
    comps = connected_components(ft)
    return ConnectivityReport(pc=len(comps) == 1, lpc=True, components=comps)


def fence_between(ft: FiniteTopology, a: str, b: str) -> Optional[tuple[str, ...]]:
    """A fence (sequence of consecutively comparable elements) from a to b."""
    relation = specialization_preorder(ft)
    if a == b:
        return (a,)
    prev: dict[str, str] = {a: a}
    frontier = [a]
    while frontier:
        cur = frontier.pop(0)
        for y in ft.ground.elements:
            if y not in prev and comparable(relation, cur, y):
                prev[y] = cur
                if y == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                frontier.append(y)
    return None


def component_cylinder_expr(topo: FuzzyTopology, component: tuple[str, ...]) -> OpenExpr:
    """An open expression realizing exactly component x J.

    Each clause traps one element on one level band; the band width and the
    pi2 slack are kept below the minimal gap between membership values so a
    clause can only reach specialization-larger elements, which stay inside
    the component.
    """
    values = sorted({ZERO, ONE} | set(topo.membership_values()))
    gaps = [b - a for a, b in zip(values, values[1:]) if b > a]
    gap = min(gaps) if gaps else ONE
    bands = int(3 / gap) + 1  # 1/bands + 1/(2*bands) < gap
    width = Fraction(1, bands)
    slack = width / 2
    clauses = []
    for x in component:
        for k in range(bands):
            upper = (k + 1) * width
            clause = [pi2(max(Fraction(-1), k * width - slack))]
            for name, f in topo.items():
                g = max(Fraction(-1), f(x) - upper)
                clause.append(tstar(name, g))
            clauses.append(tuple(clause))
    return OpenExpr(tuple(clauses))
