import random
from fractions import Fraction

import pytest

from fuzzcyl import (
    ChiBoundary,
    Concat,
    Const,
    FencePath,
    FuzzySet,
    HLift,
    HTransform,
    Reverse,
    VerticalAffine,
    chi_boundary,
    chi_eval,
    eval_path,
    functor_object_path,
    fz_generate_topology,
    fz_indicator,
    ground,
    iota_x,
    kappa,
    make_fence_path,
    make_interval,
    normalize_path,
    path_from_json,
    path_in_open,
    path_preimage,
    path_preimage_open,
    path_to_json,
    pi2,
    point,
    psi_star,
    specialization_preorder,
    subbasis_realize,
    tstar,
    vertical_connector,
)
from fuzzcyl.intervals import make_unit_interval
from fuzzcyl.paths import path_end, path_start
from fuzzcyl.sweeps import random_path, random_topology

F = Fraction
AB = ground("a", "b")


def const_topo(*values):
    gens = [FuzzySet.constant(AB, F(v) if isinstance(v, str) else v)
            for v in values]
    return fz_generate_topology(gens, AB)


def open_with_levels(topo, value):
    for name, f in topo.items():
        if f.levels == (value, value):
            return name
    raise AssertionError


def test_kappa_examples():
    assert kappa(F(1, 4), F(3, 4), 0) == F(1, 4)
    assert kappa(F(1, 4), F(3, 4), 1) == F(3, 4)
    assert kappa(F(1, 4), F(3, 4), F(1, 2)) == F(1, 2)
    assert kappa(1, 0, 1 - F(1, 3)) == kappa(0, 1, F(1, 3))
    with pytest.raises(ValueError):
        kappa(0, 1, 2)


def test_eval_vertical_affine():
    path = VerticalAffine("x", F(0), F(1, 2))
    assert eval_path(path, F(1, 2)) == point("x", F(1, 4))


def test_eval_h_transform_collapse_and_identity():
    gamma = VerticalAffine("x", F(0), F(1, 2))
    assert eval_path(HTransform(F(1), gamma), F(2, 7)).alpha == 0
    assert eval_path(HTransform(F(0), gamma), F(1, 3)) == \
        eval_path(gamma, F(1, 3))


def test_concat_halving_and_reverse():
    a = VerticalAffine("x", F(0), F(1, 2))
    b = VerticalAffine("x", F(1, 2), F(1, 4))
    two = Concat((a, b))
    assert eval_path(two, F(1, 4)) == eval_path(a, F(1, 2))
    assert eval_path(two, F(3, 4)) == eval_path(b, F(1, 2))
    assert eval_path(Reverse(two), F(1, 4)) == eval_path(two, F(3, 4))


def test_concat_rejects_endpoint_mismatch():
    a = VerticalAffine("x", F(0), F(1, 2))
    b = VerticalAffine("x", F(1, 4), F(1, 8))
    with pytest.raises(ValueError):
        Concat((a, b))


def test_fence_path_evaluation_convention():
    fence = FencePath(("a", "b"), ("b",))
    assert fence.element_at(F(0)) == "a"
    assert fence.element_at(F(1, 4)) == "b"
    assert fence.element_at(F(1)) == "b"


def test_chi_eval_examples():
    rho = Const(point("z", F(1, 2)))
    assert chi_eval(rho, 0, 1, F(1, 5), 0) == point("z", F(1, 2))
    assert chi_eval(rho, 0, 1, F(1, 5), F(1, 2)) == point("z", F(1, 4))
    rng = random.Random(3)
    for _ in range(10):
        eta = F(rng.randint(0, 8), 8)
        t = F(rng.randint(0, 8), 8)
        assert chi_eval(rho, F(1, 4), t, eta, 1) == \
            eval_path(HTransform(t, rho), eta)


def test_chi_boundary_examples():
    rho = Const(point("y", F(1, 2)))
    path = chi_boundary(rho, 0, 1, 0)
    assert path == VerticalAffine("y", F(1, 2), F(0))
    degenerate = chi_boundary(rho, F(1, 3), F(1, 3), 0)
    assert degenerate.a0 == degenerate.a1 == F(1, 3)
    # the canonical vertical connector between (y,alpha) and (y,beta)
    alpha, beta = F(1, 2), F(1, 4)
    conn = chi_boundary(Const(point("y", alpha)), 0, 1 - beta / alpha, 0)
    assert path_start(conn) == point("y", alpha)
    assert path_end(conn) == point("y", beta)
    assert conn == vertical_connector("y", alpha, beta)


def test_path_in_open():
    topo = const_topo("2/3")
    name = open_with_levels(topo, F(2, 3))
    target = subbasis_realize(tstar(name, F(1, 4)), topo)  # fibers [0,5/12)
    assert path_in_open(VerticalAffine("a", F(1, 8), F(1, 3)), target)
    assert not path_in_open(VerticalAffine("a", F(1, 8), F(1, 2)), target)
    p2 = subbasis_realize(pi2(F(1, 8)), topo)
    assert path_in_open(VerticalAffine("a", F(1, 4), F(1, 2)), p2)


def test_path_preimage_open_examples():
    topo = const_topo("2/3")
    name = open_with_levels(topo, F(2, 3))
    half_speed = VerticalAffine("x", F(0), F(1, 2))
    # levels u/2 lie in [0, 5/12) iff u < 5/6
    topo_x = fz_generate_topology([FuzzySet.constant(ground("x"), F(2, 3))],
                                  ground("x"))
    name_x = [n for n, f in topo_x.items() if f.levels == (F(2, 3),)][0]
    pre = path_preimage(half_speed,
                        subbasis_realize(tstar(name_x, F(1, 4)), topo_x))
    assert pre == make_unit_interval(0, F(5, 6), True, False)
    assert path_preimage_open(half_speed, tstar(name_x, F(1, 4)), topo_x)

    lift = HLift(FencePath(("x",), ()), F(1, 2))
    pre = path_preimage(lift, subbasis_realize(pi2(F(1, 4)), topo_x))
    assert pre == make_unit_interval(0, 1, True, True)
    assert path_preimage_open(lift, pi2(F(1, 4)), topo_x)

    const = Const(point("x", F(1, 3)))
    assert path_preimage_open(const, tstar(name_x, F(1, 4)), topo_x)
    assert path_preimage_open(const, tstar(name_x, F(1, 2)), topo_x)


def test_hlift_preimage_open_on_sierpinski():
    topo = fz_generate_topology([fz_indicator(["a"], AB)], AB)
    relation = specialization_preorder(iota_x(topo))
    fence = make_fence_path(("b", "a"), relation)
    lift = HLift(fence, F(0))
    name = [n for n, f in topo.items() if f.levels == (F(1), F(0))][0]
    # the single segment leaves b immediately, so the preimage of the open
    # over {a} is (0,1]
    pre = path_preimage(lift, subbasis_realize(tstar(name, F(1, 2)), topo))
    assert pre == make_unit_interval(0, 1, False, True)
    assert path_preimage_open(lift, tstar(name, F(1, 2)), topo)


def test_make_fence_path_rejects_incomparable():
    discrete = fz_generate_topology(
        [fz_indicator(["a"], AB), fz_indicator(["b"], AB)], AB)
    relation = specialization_preorder(iota_x(discrete))
    with pytest.raises(ValueError):
        make_fence_path(("a", "b"), relation)


def test_functor_object_path_examples():
    gs = ground("y", "z")
    F_set = FuzzySet.from_dict(gs, {"y": F(1, 4), "z": F(0)})
    path = functor_object_path(F_set, "y", "z", F(1, 2))
    assert path_start(path) == point("z", F(3, 8))
    assert path_end(path) == point("z", F(1, 8))

    half = FuzzySet.constant(gs, F(1, 2))
    const = functor_object_path(half, "y", "z", F(1, 2))
    assert const.a0 == const.a1 == F(1, 4)

    zero = functor_object_path(F_set, "y", "z", 0)
    assert zero.a0 == zero.a1 == F(0)


def test_normalize_path_pushes_reverse():
    gamma = VerticalAffine("x", F(0), F(1, 2))
    e1 = Reverse(HTransform(F(1, 3), gamma))
    e2 = HTransform(F(1, 3), Reverse(gamma))
    assert normalize_path(e1) == normalize_path(e2)
    assert normalize_path(Reverse(Reverse(gamma))) == gamma


def test_path_json_round_trip():
    rng = random.Random(9)
    for _ in range(15):
        topo = random_topology(rng, max_generators=2, max_den=6)
        path = random_path(rng, topo)
        again = path_from_json(path_to_json(path))
        assert again == path


def test_random_paths_match_endpoint_threading():
    rng = random.Random(10)
    for _ in range(20):
        topo = random_topology(rng, max_generators=2, max_den=6)
        start = point(topo.ground.elements[0], F(1, 8))
        path = random_path(rng, topo, start=start)
        assert path_start(path) == start
