from fractions import Fraction

import pytest

from fuzzcyl import (
    EMPTY_SET,
    FuzzySet,
    OpenExpr,
    complement_compat,
    critical_gammas,
    cyl_complement,
    cyl_contains,
    cyl_subset,
    empty_cylinder,
    fz_generate_topology,
    fz_indicator,
    ground,
    make_interval,
    open_realize,
    pi2,
    psi_star,
    recover_membership,
    subbasis_realize,
    tstar,
    verify_psi_laws,
    whole_cylinder,
)
from fuzzcyl.cylinder import CylinderOpen

F = Fraction
AB = ground("a", "b")


def const_topo(*values):
    gens = [FuzzySet.constant(AB, F(v) if isinstance(v, str) else v)
            for v in values]
    return fz_generate_topology(gens, AB)


def open_with_levels(topo, levels):
    for name, f in topo.items():
        if f.levels == levels:
            return name
    raise AssertionError(f"no open with levels {levels}")


def test_psi_star_examples():
    third = FuzzySet.constant(AB, F(1, 3))
    below = psi_star(third)
    expect = make_interval(0, F(1, 3), True, False)
    assert below.fibers == (expect, expect)
    assert psi_star(FuzzySet.constant(AB, 0)) == empty_cylinder(AB)
    assert psi_star(FuzzySet.constant(AB, 1)) == whole_cylinder(AB)


def test_recover_membership():
    half = make_interval(0, F(1, 2), True, False)
    c = CylinderOpen(AB, (half, half))
    assert recover_membership(c) == FuzzySet.constant(AB, F(1, 2))
    assert recover_membership(empty_cylinder(AB)) == FuzzySet.constant(AB, 0)
    f = FuzzySet.from_dict(AB, {"a": F(1, 3), "b": F(5, 7)})
    assert recover_membership(psi_star(f)) == f


def test_recover_membership_rejects_bad_shape():
    up = make_interval(F(1, 3), 1, False, False)
    with pytest.raises(ValueError):
        recover_membership(CylinderOpen(AB, (up, up)))


def test_subbasis_tstar_example_with_grid_oracle():
    topo = const_topo("2/3")
    name = open_with_levels(topo, (F(2, 3), F(2, 3)))
    realized = subbasis_realize(tstar(name, F(1, 4)), topo)
    expect = make_interval(0, F(5, 12), True, False)
    assert realized.fibers == (expect, expect)
    # independent brute check of T(x) - alpha > gamma at step 1/120
    for k in range(120):
        q = F(k, 120)
        assert cyl_contains(realized, "a", q) == (F(2, 3) - q > F(1, 4))


def test_subbasis_pi2_negative_gamma():
    topo = const_topo()
    assert subbasis_realize(pi2(F(-1, 2)), topo) == whole_cylinder(AB)


def test_subbasis_tstar_zero_is_psi_star():
    topo = const_topo("1/3", "2/3")
    for name, f in topo.items():
        assert subbasis_realize(tstar(name, 0), topo) == psi_star(f)


def test_open_realize_clause_example():
    topo = const_topo("2/3")
    name = open_with_levels(topo, (F(2, 3), F(2, 3)))
    expr = OpenExpr(((tstar(name, F(1, 4)), pi2(F(1, 3))),))
    realized = open_realize(expr, topo)
    expect = make_interval(F(1, 3), F(5, 12), False, False)
    assert realized.fibers == (expect, expect)
    for k in range(120):
        q = F(k, 120)
        brute = (F(2, 3) - q > F(1, 4)) and (q > F(1, 3))
        assert cyl_contains(realized, "a", q) == brute


def test_open_realize_pi2_whole():
    topo = const_topo()
    expr = OpenExpr(((pi2(F(-1, 2)),),))
    assert open_realize(expr, topo) == whole_cylinder(AB)


def test_cyl_contains_strictness():
    below = psi_star(FuzzySet.constant(AB, F(1, 3)))
    assert not cyl_contains(below, "a", F(1, 3))
    assert cyl_contains(below, "a", 0)
    assert cyl_contains(whole_cylinder(AB), "a", 0)


def test_cyl_complement_examples():
    below = psi_star(FuzzySet.constant(AB, F(1, 3)))
    comp = cyl_complement(below)
    expect = make_interval(F(1, 3), 1, True, False)
    assert comp.fibers == (expect, expect)
    assert cyl_complement(whole_cylinder(AB)) == empty_cylinder(AB)
    assert cyl_complement(empty_cylinder(AB)) == whole_cylinder(AB)


def test_complement_compat_counterexample():
    report = complement_compat(FuzzySet.constant(AB, F(1, 3)))
    assert not report.equal
    assert report.psi_of_complement == make_interval(0, F(2, 3), True, False)
    assert report.complement_of_psi == make_interval(F(1, 3), 1, True, False)


def test_complement_compat_indicator_and_whole():
    assert complement_compat(fz_indicator(["a"], AB)).equal
    assert complement_compat(FuzzySet.constant(AB, 1)).equal


def test_verify_psi_laws_examples():
    assert verify_psi_laws(const_topo("1/3", "2/3")).ok
    assert verify_psi_laws(const_topo()).ok


def test_monotonicity():
    f = FuzzySet.from_dict(AB, {"a": F(1, 4), "b": F(1, 2)})
    g = FuzzySet.from_dict(AB, {"a": F(1, 3), "b": F(3, 4)})
    assert cyl_subset(psi_star(f), psi_star(g))


def test_tstar_fibers_are_down_sets():
    topo = const_topo("1/3", "2/3")
    for name in topo.names:
        for g in critical_gammas(topo):
            realized = subbasis_realize(tstar(name, g), topo)
            for fib in realized.fibers:
                if fib.is_empty():
                    continue
                assert len(fib.parts) == 1
                part = fib.parts[0]
                assert part.lo == 0 and part.lo_closed and not part.hi_closed


def test_critical_gammas_cover_all_slice_patterns():
    topo = const_topo("1/3", "2/3")
    gammas = critical_gammas(topo)
    name = open_with_levels(topo, (F(1, 3), F(1, 3)))

    def slice_mask(g):
        realized = subbasis_realize(tstar(name, g), topo)
        return tuple(fib.contains(F(0)) for fib in realized.fibers)

    seen = {slice_mask(g) for g in gammas}
    # fresh gammas between criticals produce no new level-0 slice pattern
    for probe in (F(7, 24), F(-3, 7), F(17, 48), F(9, 10)):
        assert slice_mask(probe) in seen
