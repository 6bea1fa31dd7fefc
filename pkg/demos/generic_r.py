"""Which r-matrices on the 2+1 algebra give coisotropic or coreductive bialgebras?

Treats every coefficient of a general r as an unknown and row-reduces the
block conditions over the rational functions in Lambda and z.

    python3 demos/generic_r.py
"""
from liebialg import generic_r_analysis, lorentzian_2plus1


def show(title, g, names):
    print(f"\n{title}")
    for name in names:
        cs = g.systems[name]
        print(f"  {name}: rank {cs.rank}, forces {', '.join(cs.forced_zero()) or 'nothing'} to vanish")
        for label, sp in cs.special.items():
            print(f"    at {label}: rank {sp.get('rank', sp.get('error'))}")


def main():
    e = lorentzian_2plus1()
    g = generic_r_analysis(e.algebra, e.splitting, special_values=[{"Lambda": 0}])
    for blk, us in g.support_blocks().items():
        print(f"{blk} block: {', '.join(us)}")
    show("full support", g, ["coisotropy", "coreductivity", "cosymmetry", "coisotropy+coreductivity"])

    tt = set(g.support_blocks()["tt"])
    sup = [p for p, u in zip(g.support, g.unknowns) if u not in tt]
    g2 = generic_r_analysis(e.algebra, e.splitting, support=sup, special_values=[{"Lambda": 0}])
    show("already coisotropic (no t ^ t terms)", g2, ["coreductivity"])


if __name__ == "__main__":
    main()
