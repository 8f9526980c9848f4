"""Fuzzy sets over a finite ground set and fuzzy-topology validation.

A fuzzy topology here is a finite named family of fuzzy sets containing the
constant-0 and constant-1 maps and closed under pairwise pointwise min and
max.  For finite families, closure under pairwise max is equivalent to
closure under arbitrary joins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .rationals import ONE, ZERO, format_rational, frac


@dataclass(frozen=True)
class GroundSet:
    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("ground set must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("ground set elements must be unique")

    def index(self, x: str) -> int:
        try:
            return self.elements.index(x)
        except ValueError:
            raise KeyError(f"unknown ground element {x!r}") from None

    def __contains__(self, x: str) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def ground(*elements: str) -> GroundSet:
    return GroundSet(tuple(elements))


@dataclass(frozen=True)
class FuzzySet:
    """A total membership map from a ground set into [0,1], rational-valued."""

    ground: GroundSet
    levels: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.levels) != len(self.ground.elements):
            raise ValueError("one membership value per ground element required")
        for v in self.levels:
            if not (ZERO <= v <= ONE):
                raise ValueError(f"membership value outside [0,1]: {v}")

    def __call__(self, x: str) -> Fraction:
        return self.levels[self.ground.index(x)]

    def support(self) -> tuple[str, ...]:
        return tuple(x for x, v in zip(self.ground.elements, self.levels) if v != 0)

    def values_dict(self) -> dict:
        return dict(zip(self.ground.elements, self.levels))

    def __repr__(self):
        body = ",".join(f"{x}:{format_rational(v)}"
                        for x, v in zip(self.ground.elements, self.levels))
        return "{" + body + "}"

    @staticmethod
    def from_dict(gs: GroundSet, values: dict) -> "FuzzySet":
        missing = [x for x in gs.elements if x not in values]
        if missing:
            raise ValueError(f"missing membership values for {missing}")
        return FuzzySet(gs, tuple(frac(values[x]) for x in gs.elements))

    @staticmethod
    def constant(gs: GroundSet, value) -> "FuzzySet":
        v = frac(value)
        return FuzzySet(gs, (v,) * len(gs.elements))


def _require_same_ground(*sets: FuzzySet) -> GroundSet:
    gs = sets[0].ground
    for f in sets[1:]:
        if f.ground != gs:
            raise ValueError("fuzzy sets live on different ground sets")
    return gs


def fz_meet(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    gs = _require_same_ground(a, b)
    return FuzzySet(gs, tuple(min(u, v) for u, v in zip(a.levels, b.levels)))


def fz_join(family: Sequence[FuzzySet]) -> FuzzySet:
    if not family:
        raise ValueError("join of an empty family is undefined")
    gs = _require_same_ground(*family)
    return FuzzySet(gs, tuple(max(vs) for vs in zip(*(f.levels for f in family))))


def fz_complement(f: FuzzySet) -> FuzzySet:
    return FuzzySet(f.ground, tuple(ONE - v for v in f.levels))


def fz_indicator(subset: Iterable[str], gs: GroundSet) -> FuzzySet:
    chosen = set(subset)
    unknown = chosen - set(gs.elements)
    if unknown:
        raise KeyError(f"unknown ground elements {sorted(unknown)}")
    return FuzzySet(gs, tuple(ONE if x in chosen else ZERO for x in gs.elements))


@dataclass(frozen=True)
class FuzzyTopology:
    """A named finite family of fuzzy sets satisfying the topology axioms."""

    ground: GroundSet
    names: tuple[str, ...]
    opens: tuple[FuzzySet, ...]

    def __post_init__(self):
        if len(self.names) != len(self.opens):
            raise ValueError("each open needs a name")
        if len(set(self.names)) != len(self.names):
            raise ValueError("open names must be unique")
        report = fz_is_topology(self.opens)
        if not report.ok:
            raise ValueError(f"not a fuzzy topology: {report.summary()}")

    def open_named(self, name: str) -> FuzzySet:
        try:
            return self.opens[self.names.index(name)]
        except ValueError:
            raise KeyError(f"no open named {name!r}") from None

    def items(self):
        return zip(self.names, self.opens)

    def membership_values(self) -> tuple[Fraction, ...]:
        """Sorted distinct membership values occurring across all opens."""
        vals = {v for f in self.opens for v in f.levels}
        return tuple(sorted(vals))

    def to_json(self) -> dict:
        return {
            "ground_set": list(self.ground.elements),
            "opens": [
                {"name": n, "values": {x: format_rational(v)
                                       for x, v in f.values_dict().items()}}
                for n, f in self.items()
            ],
        }

    @staticmethod
    def from_json(doc: dict) -> "FuzzyTopology":
        gs = GroundSet(tuple(doc["ground_set"]))
        names, opens = [], []
        for entry in doc["opens"]:
            names.append(entry["name"])
            opens.append(FuzzySet.from_dict(gs, entry["values"]))
        return FuzzyTopology(gs, tuple(names), tuple(opens))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[tuple, ...] = ()

    def summary(self) -> str:
        if self.ok:
            return "valid fuzzy topology"
        return "; ".join(" ".join(str(t) for t in p) for p in self.problems)

    def to_json(self) -> dict:
        return {"ok": self.ok, "problems": [list(p) for p in self.problems]}


def fz_is_topology(family: Sequence[FuzzySet]) -> ValidationReport:
    """Check the topology axioms, reporting witnesses for every failure."""
    if not family:
        return ValidationReport(False, (("empty-family",),))
    gs = _require_same_ground(*family)
    members = set(f.levels for f in family)
    problems: list[tuple] = []
    if FuzzySet.constant(gs, 0).levels not in members:
        problems.append(("missing-constant-0",))
    if FuzzySet.constant(gs, 1).levels not in members:
        problems.append(("missing-constant-1",))
    for i, a in enumerate(family):
        for b in family[i:]:
            if fz_meet(a, b).levels not in members:
                problems.append(("meet-missing", repr(a), repr(b)))
            if fz_join([a, b]).levels not in members:
                problems.append(("join-missing", repr(a), repr(b)))
    return ValidationReport(not problems, tuple(problems))


def fz_generate_topology(generators: Sequence[FuzzySet],
                         ground_set: Optional[GroundSet] = None) -> FuzzyTopology:
    """Smallest topology containing the generators.

    Terminates because every generated map takes values in the finite grid
    of generator values together with 0 and 1.
    """
    if ground_set is None:
        if not generators:
            raise ValueError("need a ground set when no generators are given")
        ground_set = _require_same_ground(*generators)
    elif generators:
        _require_same_ground(*generators)
        if generators[0].ground != ground_set:
            raise ValueError("generators live on a different ground set")
    pool = {FuzzySet.constant(ground_set, 0).levels,
            FuzzySet.constant(ground_set, 1).levels}
    pool.update(f.levels for f in generators)
    changed = True
    while changed:
        changed = False
        current = list(pool)
        for i, u in enumerate(current):
            for v in current[i + 1:]:
                meet = tuple(min(a, b) for a, b in zip(u, v))
                join = tuple(max(a, b) for a, b in zip(u, v))
                for cand in (meet, join):
                    if cand not in pool:
                        pool.add(cand)
                        changed = True
    ordered = sorted(pool)
    names = tuple(f"T{i}" for i in range(len(ordered)))
    opens = tuple(FuzzySet(ground_set, levels) for levels in ordered)
    return FuzzyTopology(ground_set, names, opens)
