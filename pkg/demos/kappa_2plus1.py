"""Walk through the kappa deformation in 2+1 dimensions.

Starts from the r-matrix, builds the cocommutator, checks the three
conditions against the Lorentz subalgebra, dualizes, and finishes with the
canonical connection and the invariant-metric obstruction on the dual space.

    python3 demos/kappa_2plus1.py
"""
from liebialg import (
    classify,
    coboundary_cocommutator,
    dual_bracket,
    dual_cocommutator,
    dual_splitting,
    geometry_report,
    lorentzian_2plus1,
    make_bialgebra,
)
from liebialg.lie import format_vector


def main():
    e = lorentzian_2plus1()
    alg = e.algebra
    print("r =", e.r.format(alg.basis))

    delta = coboundary_cocommutator(alg, e.r)
    print("\ncocommutator")
    for line in delta.describe():
        print(" ", line)

    c = classify(make_bialgebra(alg, delta), e.splitting)
    v = c.verdict
    print(f"\ncoisotropic {v.coisotropic}, coreductive {v.coreductive}, cosymmetric {v.cosymmetric}")

    dual = dual_bracket(delta)
    print("\ndual bracket (nonzero)")
    for line in dual.describe():
        print(" ", line)
    print("\ndual cocommutator, the transpose of the original bracket")
    for line in dual_cocommutator(alg, dual).describe():
        print(" ", line)

    ds = dual_splitting(e.splitting)
    g = geometry_report(dual, ds)
    names = dual.basis
    print("\ncanonical connection on the dual space")
    print("  torsion:", "zero" if not g.torsion else g.torsion)
    for (a, b, k), val in sorted(g.independent_curvature().items()):
        print(f"  R({names[a]}, {names[b]}) {names[k]} = {format_vector(val, names)}")
    for (a, b), val in sorted(g.ricci.items()):
        print(f"  S({names[a]}, {names[b]}) = {val}")

    m = g.metric
    print(f"\ninvariant symmetric forms on t_perp: {len(m.basis)}-dimensional space")
    print("nondegenerate one exists:", m.nondegenerate_exists)


if __name__ == "__main__":
    main()
