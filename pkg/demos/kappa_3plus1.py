"""The 3+1 kappa deformation: curved case versus the flat limit.

With eta != 0 (Lambda = -eta^2) the extra J1 ^ J2 term in r spoils
coreductivity, so the dual space has no reductive splitting.  At eta = 0 the
dual is reductive, in fact symmetric, and its canonical connection is flat.

    python3 demos/kappa_3plus1.py
"""
from liebialg import (
    classify,
    coboundary_cocommutator,
    dual_bracket,
    dual_splitting,
    geometry_report,
    lorentzian_3plus1,
    make_bialgebra,
)


def verdict(e):
    delta = coboundary_cocommutator(e.algebra, e.r)
    return classify(make_bialgebra(e.algebra, delta), e.splitting)


def main():
    e = lorentzian_3plus1()
    c = verdict(e)
    v = c.verdict
    print("symbolic eta:", v.as_tuple())
    print("components that break coreductivity:")
    for o in v.offending["coreductivity"]:
        print(f"  delta({o.generator}) has {o.value.to_expr()} along {o.component}")

    flat = e.substitute({"eta": 0})
    print("\neta = 0:", verdict(flat).verdict.as_tuple())
    dual = dual_bracket(coboundary_cocommutator(flat.algebra, flat.r))
    g = geometry_report(dual, dual_splitting(flat.splitting))
    print("torsion zero:", not g.torsion, " curvature zero:", not g.curvature, " Ricci zero:", not g.ricci)
    print("nondegenerate invariant metric:", g.metric.nondegenerate_exists)


if __name__ == "__main__":
    main()
