import random
from fractions import Fraction

import pytest

from curvkit.bakry_emery import CurvatureQuery, be_curvature
from curvkit.classification import (
    NotCubicError,
    PredictedSign,
    classify_cubic,
    enumerate_cubic_two_balls,
    predicted_sign,
    two_ball_shape,
    verify_equivalence,
)
from curvkit.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    enumerate_cubic,
    mobius,
    petersen,
    prism,
)
from curvkit.ollivier import kappa

F = Fraction


# -- girth-based sign prediction ------------------------------------------------


def test_predicted_sign_families():
    k4 = complete(4)
    assert all(predicted_sign(k4, e) is PredictedSign.AT_LEAST_THIRD for e in k4.edges)
    cube = prism(4)
    assert all(predicted_sign(cube, e) is PredictedSign.ZERO for e in cube.edges)
    pet = petersen()
    assert all(
        predicted_sign(pet, e) is PredictedSign.AT_MOST_MINUS_THIRD for e in pet.edges
    )


def test_predicted_sign_requires_cubic():
    with pytest.raises(NotCubicError):
        predicted_sign(cycle(5), (0, 1))


def test_predicted_interval_contains_exact_kappa_small_sweep():
    for n in (4, 6, 8):
        for g in enumerate_cubic(n):
            for e in g.edges:
                k = kappa(g, *e).kappa
                assert predicted_sign(g, e).contains(k)


# -- two-ball census -------------------------------------------------------------


@pytest.fixture(scope="module")
def census():
    return enumerate_cubic_two_balls()


def test_census_shape_counts(census):
    # 16 shapes: 1 + 2 + 5 + 8 by triangle count.  Every one is realized by
    # an actual cubic graph (see test_census_matches_observed_shells), so the
    # count is ground truth even though 15 is sometimes quoted elsewhere.
    by_tri = {}
    for c in census:
        by_tri.setdefault(c.triangles, []).append(c)
    assert len(by_tri[3]) == 1
    assert len(by_tri[2]) == 2
    assert len(by_tri[1]) == 5
    assert len(by_tri[0]) == 8
    assert len(census) == 16


def test_census_three_triangle_class_is_k4(census):
    (a1,) = [c for c in census if c.triangles == 3]
    from curvkit.graphs import are_isomorphic

    assert are_isomorphic(a1.structure, complete(4))
    assert a1.is_complete_cubic


def test_census_complete_cubic_classes(census):
    completes = [c for c in census if c.is_complete_cubic]
    assert len(completes) == 2
    from curvkit.graphs import are_isomorphic

    assert any(are_isomorphic(c.structure, complete(4)) for c in completes)
    assert any(
        are_isomorphic(c.structure, complete_bipartite(3)) for c in completes
    )


def test_census_negative_classes(census):
    negatives = [c for c in census if c.sign == "negative"]
    assert len(negatives) == 5
    # two triangle-type and three triangle-free shapes; all are bridged at
    # the centre (some neighbour hangs on the centre edge alone)
    assert sorted(c.triangles for c in negatives) == [0, 0, 0, 1, 1]


def test_census_flat_class_is_the_ladder_shell(census):
    flats = [c for c in census if c.sign == "zero"]
    assert len(flats) == 1
    (flat,) = flats
    # the shell of every large prism and Moebius ladder
    assert two_ball_shape(prism(6), 0) == two_ball_shape(flat.structure, 0)
    assert two_ball_shape(mobius(6), 0) == two_ball_shape(flat.structure, 0)


def test_census_signs_cross_checked_by_bisection(census):
    for c in census:
        oracle = be_curvature(c.structure, CurvatureQuery(0), method="bisection")
        assert abs(oracle.curvature - c.curvature) < 1e-6
        assert oracle.sign == c.sign


def test_census_matches_observed_shells(census):
    observed = set()
    for n in (4, 6, 8, 10):
        for g in enumerate_cubic(n):
            for v in range(g.n):
                observed.add(two_ball_shape(g, v))
    census_keys = {two_ball_shape(c.structure, 0) for c in census}
    assert len(census_keys) == len(census)
    assert observed == census_keys


def test_known_centre_curvatures(census):
    by_shape = {two_ball_shape(c.structure, 0): c for c in census}
    assert abs(by_shape[two_ball_shape(complete(4), 0)].curvature - 3.0) < 1e-9
    assert abs(by_shape[two_ball_shape(prism(4), 0)].curvature - 2.0) < 1e-9
    assert abs(by_shape[two_ball_shape(complete_bipartite(3), 0)].curvature - 2.0) < 1e-9
    assert abs(by_shape[two_ball_shape(petersen(), 0)].curvature - (-1.0)) < 1e-9
    assert abs(by_shape[two_ball_shape(prism(7), 3)].curvature) < 1e-9


# -- recognizer -------------------------------------------------------------------


def test_recognizer_on_generated_families_with_relabelling():
    rng = random.Random(13)
    for n in range(3, 21):
        g = prism(n)
        for _ in range(3):
            perm = list(range(g.n))
            rng.shuffle(perm)
            verdict = classify_cubic(g.relabel(perm))
            assert verdict.kind == "prism" and verdict.n == n
    for n in range(2, 21):
        g = mobius(n)
        for _ in range(3):
            perm = list(range(g.n))
            rng.shuffle(perm)
            verdict = classify_cubic(g.relabel(perm))
            assert verdict.kind == "mobius" and verdict.n == n


def test_k4_reports_as_smallest_mobius():
    verdict = classify_cubic(complete(4))
    assert verdict.kind == "mobius" and verdict.n == 2
    assert verdict.family_name() == "M2"


def test_k33_reports_as_mobius_3():
    verdict = classify_cubic(complete_bipartite(3))
    assert verdict.kind == "mobius" and verdict.n == 3


def test_petersen_rejected_with_witnesses():
    verdict = classify_cubic(petersen())
    assert verdict.kind == "not_nonnegatively_curved"
    x, y = verdict.witness_edge
    assert kappa(petersen(), x, y).kappa == verdict.witness_edge_kappa < 0
    res = be_curvature(petersen(), CurvatureQuery(verdict.witness_vertex))
    assert res.sign == "negative"


def test_classify_rejects_invalid_input():
    with pytest.raises(NotCubicError):
        classify_cubic(cycle(6))
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(NotCubicError):
        classify_cubic(two_triangles)  # 2-regular and disconnected


# -- equivalence sweep -------------------------------------------------------------


def test_sweep_small_budget():
    rep = verify_equivalence(6)
    assert rep.class_count == 3
    assert rep.agreement
    assert rep.positive_names == ("M2", "M3", "Y3")


def test_sweep_minimal_budget():
    rep = verify_equivalence(4)
    assert rep.class_count == 1
    assert rep.positive_names == ("M2",)


def test_sweep_validates_budget():
    with pytest.raises(ValueError):
        verify_equivalence(5)
    with pytest.raises(ValueError):
        verify_equivalence(2)
    with pytest.raises(ValueError):
        verify_equivalence(14)


def test_sweep_summary_format():
    rep = verify_equivalence(6)
    assert rep.summary() == (
        "3 classes checked, equivalence holds, positive set: M2 M3 Y3"
    )
