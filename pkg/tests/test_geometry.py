import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from liebialg.bialgebra import coboundary_cocommutator, dual_bracket
from liebialg.duality import cosymmetry_check, dual_splitting
from liebialg.geometry import (
    NotReductive,
    canonical_curvature,
    canonical_torsion,
    geometry_report,
    invariant_metric_space,
    ricci,
)
from liebialg.lie import LieAlgebra, NotASubalgebra, SubalgebraSplitting
from liebialg.scalar import Scalar
from liebialg.tensor import Bivector


def test_hand_built_torsion_and_curvature():
    alg = LieAlgebra(("H", "X", "Y"), {("H", "X"): {"Y": 1}, ("H", "Y"): {"X": -1},
                                        ("X", "Y"): {"H": 3, "X": 2}})
    s = SubalgebraSplitting((0,), (1, 2))
    # Jacobi fails for b != 0, so only the formulas are exercised here
    assert canonical_torsion(alg, s) == {(1, 2): {1: Scalar(-2)}}
    R = canonical_curvature(alg, s)
    assert R[(1, 2, 1)] == {2: Scalar(-3)} and R[(1, 2, 2)] == {1: Scalar(3)}
    assert R[(2, 1, 1)] == {2: Scalar(3)}
    assert ricci(R, s.t) == {(1, 1): Scalar(3), (2, 2): Scalar(3)}


def test_rotation_sphere_metric():
    alg = LieAlgebra(("H", "X", "Y"), {("H", "X"): {"Y": 1}, ("H", "Y"): {"X": -1}, ("X", "Y"): {"H": 1}})
    s = SubalgebraSplitting((0,), (1, 2))
    g = geometry_report(alg, s)
    assert g.torsion == {}
    assert g.metric.nondegenerate_exists == "yes"
    assert len(g.metric.basis) == 1
    m = g.metric.basis[0]
    assert m[0][1] == 0 and m[0][0] == m[1][1] != 0


def test_abelian_dual_is_flat():
    alg = LieAlgebra(("A", "B", "C"))
    s = SubalgebraSplitting((0,), (1, 2))
    g = geometry_report(alg, s)
    assert g.torsion == g.curvature == g.ricci == {}
    assert len(g.metric.basis) == 3 and g.metric.nondegenerate_exists == "yes"


def test_one_dimensional_t_perp():
    alg = LieAlgebra(("H", "X"), {("H", "X"): {"X": 1}})
    s = SubalgebraSplitting((0,), (1,))
    g = geometry_report(alg, s)
    assert g.torsion == g.curvature == {}
    # ad_H scales X, so B(X, X) must vanish
    assert g.metric.basis == [] and g.metric.nondegenerate_exists == "no"


def test_non_reductive_and_non_subalgebra_raise():
    alg = LieAlgebra(("H", "X", "Y"), {("H", "X"): {"H": 1}})
    with pytest.raises(NotReductive):
        canonical_torsion(alg, SubalgebraSplitting((0,), (1, 2)))
    alg = LieAlgebra(("H", "X", "Y"), {("X", "Y"): {"H": 1}})
    with pytest.raises(NotASubalgebra):
        canonical_curvature(alg, SubalgebraSplitting((1, 2), (0,)))


def test_kappa_2plus1_geometry(k21_dual):
    dual, ds = k21_dual
    L, z = (Scalar.param(p, dual.params) for p in dual.params)
    names = dual.basis
    g = geometry_report(dual, ds)
    assert g.torsion == {}
    K1, K2, J = (names.index(n) for n in ("K1*", "K2*", "J*"))
    ind = g.independent_curvature()
    assert ind[(K1, J, J)] == {K1: L * z ** 2}
    assert ind[(K2, J, J)] == {K2: L * z ** 2}
    assert g.ricci == {(J, J): 2 * L * z ** 2}
    assert g.metric.nondegenerate_exists == "no"
    assert len(g.metric.basis) == 1


def test_substitution_commutes_with_geometry(k21_dual):
    dual, ds = k21_dual
    g = geometry_report(dual, ds, metric=False)
    flat = geometry_report(dual.substitute({"Lambda": 0}), ds, metric=False)
    assert flat.curvature == {} and flat.ricci == {}
    for key, v in g.ricci.items():
        assert v.substitute({"Lambda": 0}) == flat.ricci.get(key, Scalar(0, v.substitute({"Lambda": 0}).params))
    for key, v in g.curvature.items():
        sub = {k: x.substitute({"Lambda": 0}) for k, x in v.items()}
        assert {k: x for k, x in sub.items() if x} == flat.curvature.get(key, {})


def test_kappa_3plus1_flat_limit(k31):
    flat = k31.substitute({"eta": 0})
    dual = dual_bracket(coboundary_cocommutator(flat.algebra, flat.r))
    g = geometry_report(dual, dual_splitting(flat.splitting))
    assert g.torsion == g.curvature == g.ricci == {}
    assert g.metric.nondegenerate_exists == "no"
    curved = dual_bracket(coboundary_cocommutator(k31.algebra, k31.r))
    with pytest.raises(NotReductive):
        canonical_torsion(curved, dual_splitting(k31.splitting))


def test_determinant_certificate_at_random_points():
    # [H, X] = p X, [H, Y] = -p Y, [X, Y] = q H: invariant forms pair X with Y only
    p, q = (Scalar.param(n, ("p", "q")) for n in ("p", "q"))
    alg = LieAlgebra(("H", "X", "Y"), {("H", "X"): {"X": p}, ("H", "Y"): {"Y": -p}, ("X", "Y"): {"H": q}},
                     ("p", "q"))
    m = invariant_metric_space(alg, SubalgebraSplitting((0,), (1, 2)))
    assert m.nondegenerate_exists == "conditional"
    rng = random.Random(3)
    ext = alg.params + m.combination_params
    checked = 0
    for _ in range(50):
        pt = {n: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for n in ext}
        if any(g.substitute({k: pt[k] for k in alg.params}).is_zero() for g in m.genericity):
            continue
        sub = {k: pt[k] for k in alg.params}
        combo = sympy.zeros(m.dimension, m.dimension)
        for b, c in zip(m.basis, m.combination_params):
            for i in range(m.dimension):
                for j in range(m.dimension):
                    v = b[i][j].substitute(sub)
                    combo[i, j] += sympy.Rational(v.to_fraction()) * sympy.Rational(pt[c])
        expected = m.determinant.evaluate(pt)
        assert sympy.Rational(expected) == combo.det()
        checked += 1
    assert checked >= 30
    wit = m.witness_matrix
    assert wit[0][1] != 0 and wit[0][0] == 0


def test_witness_nondegenerate_symbolically():
    alg = LieAlgebra(("H", "X", "Y"), {("H", "X"): {"Y": 1}, ("H", "Y"): {"X": -1}})
    m = invariant_metric_space(alg, SubalgebraSplitting((0,), (1, 2)))
    w = m.witness_matrix
    assert (w[0][0] * w[1][1] - w[0][1] * w[1][0]) != 0


def _random_cosymmetric(rng, e):
    # coboundaries of h ^ t bivectors are always cosymmetric for the catalog splittings
    alg, s = e.algebra, e.splitting
    r = Bivector(None, alg.params)
    for i in s.h:
        for j in s.t:
            if rng.random() < 0.4:
                a, b = min(i, j), max(i, j)
                sign = 1 if a == i else -1
                r.add_term((a, b), sign * Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return coboundary_cocommutator(alg, r)


@settings(max_examples=200)
@given(seed=st.integers(0, 10**9))
def test_cosymmetric_cocommutator_gives_torsion_free_dual(seed, k21):
    rng = random.Random(seed)
    d = _random_cosymmetric(rng, k21)
    if not cosymmetry_check(d, k21.splitting):
        return
    dual = dual_bracket(d, check=False)
    ds = dual_splitting(k21.splitting)
    assert canonical_torsion(dual, ds) == {}
    R = canonical_curvature(dual, ds)
    for (a, b, c), v in R.items():
        assert set(v) <= set(ds.t)
