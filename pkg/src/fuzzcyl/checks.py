"""Law-sweep drivers shared by the CLI subcommands and the acceptance suite.

Each sweep returns a :class:`SweepResult` with zero-tolerance failure
records.  Symbolic cylinder sets produced along the way are registered in
an :class:`OracleLedger` together with a first-principles membership
predicate, so the grid oracle can cross-check them independently of the
interval algebra that produced them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .base_space import (
    check_pc_lpc,
    component_cylinder_expr,
    fence_between,
    iota_x,
    specialization_preorder,
)
from .cylinder import (
    CylinderOpen,
    OpenExpr,
    SubbasisElem,
    complement_compat,
    cyl_complement,
    cyl_intersect,
    open_realize,
    psi_star,
    recover_membership,
    subbasis_elements,
    subbasis_realize,
    verify_psi_laws,
)
from .functor import PROBES, is_complement
from .fuzzy import (
    FuzzySet,
    FuzzyTopology,
    fz_complement,
    fz_indicator,
    ground,
)
from .oracle import GridOracle, first_mismatch, oracle_rasterize
from .intervals import EMPTY_SET, WHOLE_J
from .paths import (
    ChiBoundary,
    Concat,
    Const,
    HLift,
    HTransform,
    PathExpr,
    Reverse,
    VerticalAffine,
    chi_eval,
    eval_path,
    kappa,
    make_fence_path,
    normalize_path,
    path_end,
    path_preimage_open,
    path_start,
)
from .rationals import ONE, ZERO, format_rational, frac
from .retraction import (
    BoxWitness,
    CylPoint,
    continuity_witness,
    h_eval,
    sigma_image,
    sigma_image_subbasis,
    verify_witness,
)
from .sweeps import (
    random_anchor,
    random_complement_pair,
    random_fuzzy,
    random_ground,
    random_path,
    random_point,
    random_topology,
)

Predicate = Callable[[str, Fraction], bool]


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked,
                "ok": self.ok, "failures": [str(f) for f in self.failures]}


class OracleLedger:
    """Pairs of (symbolic cylinder set, independent membership predicate)."""

    def __init__(self):
        self.entries: list[tuple[str, CylinderOpen, Predicate]] = []

    def add(self, label: str, c: CylinderOpen, predicate: Predicate) -> None:
        self.entries.append((label, c, predicate))

    def verify(self, resolution: int = 64) -> SweepResult:
        result = SweepResult(f"grid-oracle-N{resolution}")
        for label, c, predicate in self.entries:
            result.checked += 1
            brute = GridOracle(
                c.ground, resolution,
                tuple(tuple(predicate(x, Fraction(k, resolution))
                            for k in range(resolution))
                      for x in c.ground.elements))
            mismatch = first_mismatch(c, brute)
            if mismatch is not None:
                result.failures.append((label, *mismatch))
        return result


def psi_predicate(f: FuzzySet) -> Predicate:
    return lambda x, v: v < f(x)


def subbasis_predicate(e: SubbasisElem, topo: FuzzyTopology) -> Predicate:
    if e.kind == "pi2":
        return lambda x, v: v > e.gamma
    f = topo.open_named(e.open_name)
    return lambda x, v: f(x) - v > e.gamma


def expr_predicate(expr: OpenExpr, topo: FuzzyTopology) -> Predicate:
    clause_preds = [[subbasis_predicate(e, topo) for e in clause]
                    for clause in expr.clauses]
    return lambda x, v: any(all(p(x, v) for p in clause)
                            for clause in clause_preds)


# ---------------------------------------------------------------------------
# the built-in counterexample

def counterexample_topology(elements=("x",)) -> FuzzyTopology:
    gs = ground(*elements)
    return FuzzyTopology(
        gs,
        ("empty", "whole", "T"),
        (FuzzySet.constant(gs, 0), FuzzySet.constant(gs, 1),
         FuzzySet.constant(gs, Fraction(1, 3))),
    )


def counterexample_report(elements=("x",),
                          ledger: Optional[OracleLedger] = None) -> dict:
    """Set-theoretic complementation on the cylinder disagrees with the
    algebraic complement of the constant-1/3 open."""
    topo = counterexample_topology(elements)
    T = topo.open_named("T")
    below = psi_star(T)
    complement = cyl_complement(below)
    below_comp = psi_star(fz_complement(T))
    if ledger is not None:
        ledger.add("counterexample-psi", below, psi_predicate(T))
        ledger.add("counterexample-set-complement", complement,
                   lambda x, v, f=T: v >= f(x))
        ledger.add("counterexample-psi-of-complement", below_comp,
                   psi_predicate(fz_complement(T)))
    return {
        "topology": topo.to_json(),
        "psi_of_T": below.to_json(),
        "set_complement_of_psi": complement.to_json(),
        "psi_of_algebraic_complement": below_comp.to_json(),
        "verdict": "equal" if complement == below_comp else "unequal",
        "compat_report": complement_compat(T).to_json(),
    }


# ---------------------------------------------------------------------------
# law sweeps

def sweep_psi_laws(rng: random.Random, count: int,
                   ledger: Optional[OracleLedger] = None) -> SweepResult:
    result = SweepResult("psi-laws")
    for _ in range(count):
        topo = random_topology(rng)
        report = verify_psi_laws(topo)
        result.checked += report.checked
        result.failures.extend(report.failures)
        if ledger is not None:
            for name, f in topo.items():
                ledger.add(f"psi:{name}", psi_star(f), psi_predicate(f))
    return result


def sweep_round_trip(rng: random.Random, count: int,
                     ledger: Optional[OracleLedger] = None) -> SweepResult:
    result = SweepResult("round-trip")
    for i in range(count):
        f = random_fuzzy(rng, random_ground(rng))
        result.checked += 1
        below = psi_star(f)
        if recover_membership(below) != f:
            result.failures.append(("round-trip", repr(f)))
        if ledger is not None and i % 25 == 0:
            ledger.add("round-trip-psi", below, psi_predicate(f))
    return result


def sweep_indicator_compat(max_size: int = 5,
                           ledger: Optional[OracleLedger] = None) -> SweepResult:
    """complement_compat holds on every indicator map, exhaustively."""
    result = SweepResult("indicator-compat")
    elements = ("a", "b", "c", "d", "e")[:max_size]
    gs = ground(*elements)
    for bits in range(1 << len(elements)):
        subset = [x for i, x in enumerate(elements) if bits >> i & 1]
        f = fz_indicator(subset, gs)
        result.checked += 1
        report = complement_compat(f)
        if not report.equal:
            result.failures.append(("indicator", subset))
        if ledger is not None and bits % 7 == 0:
            ledger.add("indicator-psi", psi_star(f), psi_predicate(f))
    return result


def sweep_sigma_laws(rng: random.Random, count: int,
                     ledger: Optional[OracleLedger] = None) -> SweepResult:
    """The slice retraction is open on the subbasis and commutes with
    finite meets of membership-graph opens."""
    result = SweepResult("sigma-laws")
    for _ in range(count):
        topo = random_topology(rng, max_generators=2, max_den=8)
        elems = subbasis_elements(topo)
        for e in elems:
            result.checked += 1
            realized = subbasis_realize(e, topo)
            direct = sigma_image(realized)
            stated = sigma_image_subbasis(e, topo)
            if direct != stated:
                result.failures.append(("sigma-subbasis", e))
            if ledger is not None:
                ledger.add(f"sigma:{e.kind}", stated,
                           _sigma_predicate(e, topo))
        tstars = [e for e in elems if e.kind == "tstar"]
        for _ in range(10):
            size = rng.randint(2, 3)
            if len(tstars) < size:
                continue
            meet = rng.sample(tstars, size)
            result.checked += 1
            inter = subbasis_realize(meet[0], topo)
            images = sigma_image_subbasis(meet[0], topo)
            for e in meet[1:]:
                inter = cyl_intersect(inter, subbasis_realize(e, topo))
                images = cyl_intersect(images, sigma_image_subbasis(e, topo))
            if sigma_image(inter) != images:
                result.failures.append(("sigma-meet", meet))
    return result


def _sigma_predicate(e: SubbasisElem, topo: FuzzyTopology) -> Predicate:
    if e.kind == "pi2":
        return lambda x, v: v == ZERO
    f = topo.open_named(e.open_name)
    return lambda x, v: v == ZERO and f(x) > e.gamma


def sweep_retraction(rng: random.Random, topologies: int = 20,
                     anchors: int = 100,
                     ledger: Optional[OracleLedger] = None
                     ) -> tuple[SweepResult, list[tuple[FuzzyTopology, BoxWitness]]]:
    """Continuity certificates across all three homotopy-time regimes."""
    result = SweepResult("retraction-certificates")
    witnesses: list[tuple[FuzzyTopology, BoxWitness]] = []
    cases = ("zero", "interior", "one")
    while result.checked < anchors:
        for _ in range(topologies):
            topo = random_topology(rng, max_generators=2, max_den=8)
            for case in cases:
                anchor = random_anchor(rng, topo, case)
                if anchor is None:
                    continue
                t, p, target = anchor
                result.checked += 1
                witness = continuity_witness(t, p, target, topo)
                if not verify_witness(witness, topo):
                    result.failures.append(("witness", case, t, p, target))
                witnesses.append((topo, witness))
                if ledger is not None and result.checked % 10 == 0:
                    ledger.add("witness-region", witness.region,
                               expr_predicate(witness.region_expr, topo))
                    ledger.add("witness-target",
                               subbasis_realize(target, topo),
                               subbasis_predicate(target, topo))
    return result, witnesses


def sweep_retraction_on(topo: FuzzyTopology, rng: random.Random,
                        anchors: int = 60) -> tuple[SweepResult, list[BoxWitness]]:
    """Certificates for one fixed topology, cycling the three time regimes."""
    result = SweepResult("retraction-certificates")
    witnesses: list[BoxWitness] = []
    cases = ("zero", "interior", "one")
    attempts = 0
    while result.checked < anchors and attempts < 20 * anchors:
        attempts += 1
        anchor = random_anchor(rng, topo, cases[attempts % 3])
        if anchor is None:
            continue
        t, p, target = anchor
        result.checked += 1
        witness = continuity_witness(t, p, target, topo)
        if not verify_witness(witness, topo):
            result.failures.append(("witness", t, p, target))
        witnesses.append(witness)
    return result, witnesses


def retraction_case(w: BoxWitness) -> str:
    if w.anchor_t == ZERO:
        return "zero"
    if w.anchor_t == ONE:
        return "one"
    return "interior"


# ---------------------------------------------------------------------------
# path identity sweep

def _grid(step: Fraction) -> list[Fraction]:
    n = int(ONE / step)
    return [Fraction(k, n) for k in range(n + 1)]


def sweep_path_identities(rng: random.Random, count: int,
                          grid_step: Fraction = Fraction(1, 64),
                          check_continuity: bool = True) -> SweepResult:
    """Pointwise path-calculus identities on the rational grid, plus the
    openness of every generated path's preimages when requested."""
    result = SweepResult("path-identities")
    fine = _grid(grid_step)
    coarse = _grid(Fraction(1, 8))
    for i in range(count):
        topo = random_topology(rng, max_generators=2, max_den=6)
        gamma = random_path(rng, topo)
        s = rng.choice(coarse)
        t = rng.choice(coarse)
        result.checked += 1
        label = f"path-{i}"
        failures = _path_identity_failures(rng, topo, gamma, s, t, fine, coarse)
        if check_continuity:
            for e in subbasis_elements(topo):
                if not path_preimage_open(gamma, e, topo):
                    failures.append(("continuity", e))
        result.failures.extend((label, *f) for f in failures)
    return result


def _path_identity_failures(rng, topo, gamma, s, t, fine, coarse) -> list:
    failures = []

    # inversion commutes with the homotopy transform
    e1 = Reverse(HTransform(t, gamma))
    e2 = HTransform(t, Reverse(gamma))
    if normalize_path(e1) != normalize_path(e2):
        failures.append(("hginv-normal-form",))
    for u in fine:
        if eval_path(e1, u) != eval_path(e2, u):
            failures.append(("hginv", u))
            break

    # the transform distributes over concatenation
    parts = [gamma]
    for _ in range(rng.randint(1, 3)):
        parts.append(random_path(rng, topo, 1, path_end(parts[-1])))
    whole = HTransform(t, Concat(tuple(parts)))
    piecewise = Concat(tuple(HTransform(t, p) for p in parts))
    for u in fine:
        if eval_path(whole, u) != eval_path(piecewise, u):
            failures.append(("ast-com-comp", u))
            break

    # square homotopy symmetry under time reversal
    for eta in coarse:
        for x in fine:
            if chi_eval(gamma, s, t, eta, x) != chi_eval(gamma, t, s, eta, ONE - x):
                failures.append(("v-inv", eta, x))
                break

    # boundary restrictions of the square homotopy
    for eta in fine:
        if chi_eval(gamma, s, t, eta, ZERO) != eval_path(HTransform(s, gamma), eta):
            failures.append(("fhrem-left", eta))
            break
        if chi_eval(gamma, s, t, eta, ONE) != eval_path(HTransform(t, gamma), eta):
            failures.append(("fhrem-right", eta))
            break

    # restriction invariance
    a = rng.choice([v for v in coarse if v < ONE])
    b = rng.choice([v for v in coarse if v > a])
    for eta in coarse:
        for x in coarse:
            lhs = chi_eval(gamma, s, t, a + eta * (b - a), x)
            rhs = h_eval(kappa(s, t, x), eval_path(gamma, a + eta * (b - a)))
            if lhs != rhs:
                failures.append(("path-res", eta, x))
                break

    # constant paths have eta-independent square homotopies
    const = Const(random_point(rng, topo.ground))
    base = chi_eval(const, s, t, ZERO, Fraction(1, 3))
    for eta in coarse:
        if chi_eval(const, s, t, eta, Fraction(1, 3)) != base:
            failures.append(("constant", eta))
            break

    # functoriality pasting of the square homotopy over a concatenation
    delta = random_path(rng, topo, 1, path_end(gamma))
    combined = Concat((gamma, delta))
    half = Fraction(1, 2)
    for eta in coarse:
        for x in coarse:
            whole_v = chi_eval(combined, s, t, eta, x)
            inner = (chi_eval(gamma, s, t, 2 * eta, x) if eta <= half
                     else chi_eval(delta, s, t, 2 * eta - 1, x))
            if whole_v != inner:
                failures.append(("pasting", eta, x))
                break

    # endpoint identities of the boundary-path composite
    p = ChiBoundary(gamma, s, t, 0)
    q = ChiBoundary(gamma, s, t, 1)
    composite = Concat((Reverse(p), HTransform(s, gamma), q))
    lifted = HTransform(t, gamma)
    if path_start(composite) != path_start(lifted):
        failures.append(("relative-endpoints-start",))
    if path_end(composite) != path_end(lifted):
        failures.append(("relative-endpoints-end",))

    return failures


# ---------------------------------------------------------------------------
# complement decision sweep

def sweep_complement(rng: random.Random, count: int) -> SweepResult:
    result = SweepResult("complement-decision")
    for i in range(count):
        gs = random_ground(rng)
        F, G = random_complement_pair(rng, gs, exact=i % 2 == 0)
        result.checked += 1
        direct = all(G(y) == ONE - F(y) for y in gs.elements)
        verdicts = {is_complement(F, G, probes=(beta,)) for beta in PROBES}
        if len(verdicts) != 1:
            result.failures.append(("probe-dependence", repr(F), repr(G)))
            continue
        if verdicts.pop() != direct:
            result.failures.append(("oracle-mismatch", repr(F), repr(G)))
    return result


# ---------------------------------------------------------------------------
# connectivity cross-check (small instances)

def connectivity_cross_check(rng: random.Random, count: int = 10) -> SweepResult:
    """When the base is path-connected, DSL paths join grid points of the
    cylinder; when it is not, a clopen separating open exists."""
    result = SweepResult("connectivity")
    for _ in range(count):
        topo = random_topology(rng, max_generators=2, max_den=6)
        report = check_pc_lpc(topo)
        ft = iota_x(topo)
        result.checked += 1
        if report.pc:
            relation = specialization_preorder(ft)
            xs = topo.ground.elements
            a, b = rng.choice(xs), rng.choice(xs)
            fence = fence_between(ft, a, b)
            if fence is None:
                result.failures.append(("pc-but-no-fence", a, b))
                continue
            alpha, beta = frac("1/4"), frac("1/8")
            path = Concat((
                VerticalAffine(a, alpha, ZERO),
                HLift(make_fence_path(fence, relation), ZERO),
                VerticalAffine(b, ZERO, beta),
            )) if len(fence) > 1 else VerticalAffine(a, alpha, beta)
            for e in subbasis_elements(topo):
                if not path_preimage_open(path, e, topo):
                    result.failures.append(("pc-path-discontinuous", a, b, e))
                    break
        else:
            component = report.components[0]
            expr = component_cylinder_expr(topo, component)
            realized = open_realize(expr, topo)
            expected = {x: x in component for x in topo.ground.elements}
            for x in topo.ground.elements:
                fib = realized.fiber(x)
                want = WHOLE_J if expected[x] else EMPTY_SET
                if fib != want:
                    result.failures.append(("separator-mismatch", x))
                    break
    return result
