"""The twelve acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL criterion N: ...`` line, printed as it runs
and again in the terminal summary.  Run alone with
``python3 -m pytest tests/test_acceptance.py -v``.
"""
import io
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from liebialg.bialgebra import Cocommutator, coboundary_cocommutator, dual_bracket, dual_cocommutator
from liebialg.catalog import CATALOG, get_entry, lorentzian_2plus1, lorentzian_3plus1, printed_dual_cocommutator_2plus1
from liebialg.cli import run_command
from liebialg.duality import classify, dual_splitting, generic_r_analysis
from liebialg.bialgebra import make_bialgebra
from liebialg.geometry import canonical_curvature, canonical_torsion, invariant_metric_space, ricci
from liebialg.problem import document_from_entry, parse_problem, serialize
from liebialg.scalar import Scalar
from liebialg.tensor import Bivector, ad_invariance_defect, schouten_square

import conftest
import oracles

HERE = Path(__file__).parent


@contextmanager
def criterion(n, text, budget):
    t0 = time.perf_counter()
    status = "FAIL"
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if elapsed >= budget:
            note = f" (too slow: {elapsed:.2f}s, budget {budget}s)"
            raise AssertionError(f"criterion {n} exceeded its {budget}s budget: {elapsed:.2f}s")
        status = "PASS"
        note = f" ({elapsed:.2f}s)"
    except AssertionError as exc:
        if not note:
            note = f" ({str(exc).splitlines()[0]})" if str(exc) else ""
        raise
    finally:
        line = f"{status} criterion {n}: {text}{note}"
        conftest.ACCEPTANCE_LINES[n] = line
        print(line)


def _biv(alg, terms):
    return Bivector.from_names(alg, terms)


def test_criterion_01_kappa_2plus1_cocommutator():
    with criterion(1, "2+1 coboundary cocommutator matches all six displayed values", 1):
        e = lorentzian_2plus1()
        alg = e.algebra
        L, z = (Scalar.param(p, alg.params) for p in alg.params)
        got = coboundary_cocommutator(alg, e.r)
        expected = {
            "P0": [],
            "J": [],
            "P1": [("P1", "P0", z), ("K2", "J", L * z)],
            "P2": [("P2", "P0", z), ("K1", "J", -L * z)],
            "K1": [("K1", "P0", z), ("P2", "J", z)],
            "K2": [("K2", "P0", z), ("P1", "J", -z)],
        }
        for g, terms in expected.items():
            assert got[g] == _biv(alg, terms), g


def test_criterion_02_dual_bracket_table():
    with criterion(2, "dual bracket reproduces the full 2+1 dual table, zeros included", 1):
        e = lorentzian_2plus1()
        dual = dual_bracket(coboundary_cocommutator(e.algebra, e.r))
        L, z = (Scalar.param(p, dual.params) for p in dual.params)
        x0, x1, x2, xi1, xi2, th = "P0*", "P1*", "P2*", "K1*", "K2*", "J*"
        table = [
            (x0, x1, {x1: -z}), (x0, x2, {x2: -z}), (x1, x2, {}),
            (x0, xi1, {xi1: -z}), (x0, xi2, {xi2: -z}), (xi1, xi2, {}),
            (th, x2, {xi1: -z}), (th, xi1, {x2: z * L}), (xi1, x2, {}),
            (th, x1, {xi2: z}), (th, xi2, {x1: -z * L}), (xi2, x1, {}),
            (th, x0, {}), (xi1, x1, {}), (xi2, x2, {}),
        ]
        pairs = set()
        for a, b, want in table:
            i, j = dual.index(a), dual.index(b)
            pairs.add(frozenset((i, j)))
            assert dual.bracket_basis(i, j) == {dual.index(k): v for k, v in want.items()}, (a, b)
        assert len(pairs) == 15  # every pair of the 6-dimensional dual is displayed


@pytest.mark.xfail(strict=True, reason="the displayed delta* of the two xi generators is not the transpose "
                                       "of the 2+1 bracket; the computed values are the true transpose")
def test_criterion_03_dual_cocommutator_displayed_values():
    e = lorentzian_2plus1()
    dual = dual_bracket(coboundary_cocommutator(e.algebra, e.r))
    got = dual_cocommutator(e.algebra, dual)
    printed = printed_dual_cocommutator_2plus1()
    mismatched = [n for n, a, b in zip(got.basis, got.values, printed.values) if a != b]
    line = (f"FAIL criterion 3: dual cocommutator matches {6 - len(mismatched)}/6 displayed values; "
            f"{', '.join('delta*(' + n + ')' for n in mismatched)} differ (displayed lines are not the "
            f"transpose of the bracket and break the cocycle identity)") if mismatched else \
        "PASS criterion 3: dual cocommutator matches all six displayed values"
    conftest.ACCEPTANCE_LINES[3] = line
    print(line)
    assert not mismatched


def test_criterion_03_computed_dual_cocommutator_is_the_transpose():
    # companion check kept green: what the xfail above computes is right
    e = lorentzian_2plus1()
    dual = dual_bracket(coboundary_cocommutator(e.algebra, e.r))
    got = dual_cocommutator(e.algebra, dual)
    L = Scalar.param("Lambda", dual.params)
    assert got["K1*"] == _biv(dual, [("P0*", "P1*", -L), ("K2*", "J*", 1)])
    assert got["K2*"] == _biv(dual, [("P0*", "P2*", -L), ("J*", "K1*", 1)])
    printed = printed_dual_cocommutator_2plus1()
    for n in ("P0*", "P1*", "P2*", "J*"):
        assert got[n] == printed[n]


def test_criterion_04_kappa_3plus1_cocommutator():
    with criterion(4, "3+1 coboundary cocommutator matches all ten displayed values (eta convention)", 5):
        e = lorentzian_3plus1()
        alg = e.algebra
        eta, z = (Scalar.param(p, alg.params) for p in alg.params)
        L = -eta ** 2
        got = coboundary_cocommutator(alg, e.r)
        expected = {
            "P0": [], "J3": [],
            "J1": [("J1", "J3", z * eta)],
            "J2": [("J2", "J3", z * eta)],
            "P1": [("P1", "P0", z), ("J2", "K3", z * L), ("J3", "K2", -z * L), ("J1", "P3", z * eta)],
            "P2": [("P2", "P0", z), ("J3", "K1", z * L), ("J1", "K3", -z * L), ("J2", "P3", z * eta)],
            "P3": [("P3", "P0", z), ("J1", "K2", z * L), ("J2", "K1", -z * L),
                   ("J1", "P1", -z * eta), ("J2", "P2", -z * eta)],
            "K1": [("K1", "P0", z), ("J2", "P3", z), ("J3", "P2", -z), ("J1", "K3", z * eta)],
            "K2": [("K2", "P0", z), ("J3", "P1", z), ("J1", "P3", -z), ("J2", "K3", z * eta)],
            "K3": [("K3", "P0", z), ("J1", "P2", z), ("J2", "P1", -z),
                   ("J1", "K1", -z * eta), ("J2", "K2", -z * eta)],
        }
        for g, terms in expected.items():
            assert got[g] == _biv(alg, terms), g


def test_criterion_05_verdict_2plus1():
    with criterion(5, "kappa 2+1 is coisotropic, coreductive and cosymmetric", 1):
        e = lorentzian_2plus1()
        c = classify(make_bialgebra(e.algebra, coboundary_cocommutator(e.algebra, e.r)), e.splitting)
        assert c.verdict.as_tuple() == (True, True, True)


def test_criterion_06_verdict_3plus1():
    with criterion(6, "kappa 3+1 is (true, false, false) at symbolic eta and (true, true, true) at eta = 0", 5):
        e = lorentzian_3plus1()
        c = classify(make_bialgebra(e.algebra, coboundary_cocommutator(e.algebra, e.r)), e.splitting)
        assert c.verdict.as_tuple() == (True, False, False)
        f = e.substitute({"eta": 0})
        c = classify(make_bialgebra(f.algebra, coboundary_cocommutator(f.algebra, f.r)), f.splitting)
        assert c.verdict.as_tuple() == (True, True, True)


def _oracle_agrees(alg, s, g, condition):
    """Same solution space as the sympy enumeration: equal rank, and our basis solves its equations."""
    eqs, syms = oracles.condition_equations(alg, s.h, g.support, g.unknowns, condition)
    cs = g.systems[condition]
    forced = {str(x) for x in oracles.forced_zero(eqs, syms)}
    assert forced == set(cs.forced_zero()), condition
    M = oracles.equation_matrix(eqs, syms)
    rng = random.Random(11)
    for _ in range(3):
        pt = {sympy.Symbol(p): sympy.Rational(rng.randint(1, 30), rng.randint(1, 7)) for p in alg.params}
        assert M.subs(pt).rank() == cs.rank, condition
    P = oracles.sympy_params(alg)
    for v in cs.solution_basis():
        col = sympy.Matrix([sympy.sympify(v[k].to_expr().replace("^", "**"), locals=P) if k in v else 0
                            for k in range(len(syms))])
        assert all(sympy.cancel(x) == 0 for x in M * col), condition


def test_criterion_07_generic_classification():
    with criterion(7, "generic r: coisotropy kills exactly t^t, then coreductivity kills exactly h^h "
                      "(checked against a sympy enumeration oracle)", 30):
        e = lorentzian_2plus1()
        alg, s = e.algebra, e.splitting
        g = generic_r_analysis(alg, s)
        blocks = g.support_blocks()
        co = g.systems["coisotropy"]
        assert set(co.forced_zero()) == set(blocks["tt"]) and co.is_coordinate()
        both = g.systems["coisotropy+coreductivity"]
        assert set(both.forced_zero()) == set(blocks["tt"]) | set(blocks["hh"]) and both.is_coordinate()
        _oracle_agrees(alg, s, g, "coisotropy")
        # given coisotropy (no t^t terms in r), coreductivity is exactly h^h vanishing
        sup = [p for p, u in zip(g.support, g.unknowns) if u not in blocks["tt"]]
        g2 = generic_r_analysis(alg, s, support=sup)
        cr = g2.systems["coreductivity"]
        assert set(cr.forced_zero()) == set(blocks["hh"]) and cr.is_coordinate()
        _oracle_agrees(alg, s, g2, "coreductivity")


def test_criterion_08_modified_cybe():
    with criterion(8, "[[r, r]] is ad-invariant for both kappa r-matrices", 30):
        for e in (lorentzian_2plus1(), lorentzian_3plus1()):
            assert not ad_invariance_defect(e.algebra, schouten_square(e.algebra, e.r))


def test_criterion_09_canonical_geometry():
    with criterion(9, "2+1 dual: T = 0, R(xi_i, theta) theta = z^2 Lambda xi_i, S(theta, theta) = 2 z^2 Lambda; "
                      "3+1 Minkowski dual flat", 5):
        e = lorentzian_2plus1()
        dual = dual_bracket(coboundary_cocommutator(e.algebra, e.r))
        ds = dual_splitting(e.splitting)
        L, z = (Scalar.param(p, dual.params) for p in dual.params)
        xi1, xi2, th = (dual.index(n) for n in ("K1*", "K2*", "J*"))
        assert canonical_torsion(dual, ds) == {}
        R = canonical_curvature(dual, ds)
        expected = {(xi1, th, th): {xi1: z ** 2 * L}, (xi2, th, th): {xi2: z ** 2 * L},
                    (th, xi1, th): {xi1: -z ** 2 * L}, (th, xi2, th): {xi2: -z ** 2 * L}}
        assert R == expected
        assert ricci(R, ds.t) == {(th, th): 2 * z ** 2 * L}
        f = lorentzian_3plus1().substitute({"eta": 0})
        dual = dual_bracket(coboundary_cocommutator(f.algebra, f.r))
        ds = dual_splitting(f.splitting)
        R = canonical_curvature(dual, ds)
        assert R == {} and ricci(R, ds.t) == {}


def test_criterion_10_metric_obstruction():
    with criterion(10, "no nondegenerate invariant metric on the 2+1 dual; zero determinant "
                       "confirmed at 50 random rational points", 10):
        e = lorentzian_2plus1()
        dual = dual_bracket(coboundary_cocommutator(e.algebra, e.r))
        ds = dual_splitting(e.splitting)
        m = invariant_metric_space(dual, ds)
        assert m.nondegenerate_exists == "no" and m.determinant.is_zero()
        # independent check: at each point solve the invariance equations with sympy
        # and confirm every invariant form is degenerate
        rng = random.Random(2024)
        t = sorted(ds.t)
        B = sympy.Matrix(3, 3, lambda i, j: sympy.Symbol(f"b{min(i, j)}{max(i, j)}"))
        unknowns = sorted(B.free_symbols, key=str)
        for _ in range(50):
            pt = {p: Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 9)) for p in dual.params}
            num = dual.substitute(pt)
            eqs = []
            for h in ds.h:
                ad = sympy.zeros(3, 3)  # ad_h restricted to t_perp, column = image of t[col]
                for col, x in enumerate(t):
                    for k, c in num.bracket_basis(h, x).items():
                        ad[t.index(k), col] = sympy.Rational(c.to_fraction())
                eqs.extend(ad.T * B + B * ad)
            sol = sympy.solve([q for q in eqs if q != 0], unknowns, dict=True)
            general = B.subs(sol[0]) if sol else B
            assert sympy.expand(general.det()) == 0
            coeffs = [sympy.Symbol(c) for c in m.combination_params]
            combo = sympy.zeros(3, 3)
            for b, c in zip(m.basis, coeffs):
                combo += sympy.Matrix(3, 3, lambda i, j: sympy.Rational(b[i][j].substitute(pt).to_fraction())) * c
            assert sympy.expand(combo.det()) == 0


PROPERTY_TESTS = [
    "test_bialgebra.py::test_coboundaries_are_cocycles",
    "test_bialgebra.py::test_double_dualization_is_identity",
    "test_duality.py::test_cosymmetry_implies_coisotropy",
    "test_geometry.py::test_cosymmetric_cocommutator_gives_torsion_free_dual",
    "test_duality.py::test_primal_blocks_match_dual_inclusions",
]


def test_criterion_11_property_suites():
    with criterion(11, "five randomized property suites, 200 cases each", 60):
        for node in PROPERTY_TESTS:
            path, name = node.split("::")
            src = (HERE / path).read_text()
            head = src[:src.index(f"def {name}(")].rstrip().splitlines()
            assert "@settings(max_examples=200)" in head[-2:] or "@settings(max_examples=200)" in head[-3:], node
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *[str(HERE / n) for n in PROPERTY_TESTS]],
            capture_output=True, text=True, cwd=HERE.parent)
        assert proc.returncode == 0, proc.stdout[-2000:]
        assert f"{len(PROPERTY_TESTS)} passed" in proc.stdout


def test_criterion_12_round_trip_and_fixtures():
    with criterion(12, "catalog entries round-trip through the file format; fixtures subcommand exits 0", 5):
        for ident in CATALOG:
            e = get_entry(ident)
            doc = document_from_entry(e)
            again = parse_problem(serialize(doc))
            assert again == doc
            assert again.algebra() == e.algebra and again.r_matrix() == e.r and again.split() == e.splitting
        out = io.StringIO()
        assert run_command(["fixtures"], out, io.StringIO()) == 0
        assert "failures: 0" in out.getvalue()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
