"""Reports: one in-memory value, rendered either as text or as JSON.

A report is a list of sections; each section is an ordered list of
``(key, value)`` rows where a value is a string (exact expressions included),
a bool, or a list of strings.  Both renderings walk the same rows, so they
cannot disagree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bialgebra import dual_bracket, dual_cocommutator, make_bialgebra
from .duality import classify, dual_splitting, generic_r_analysis
from .geometry import NotReductive, canonical_curvature, canonical_torsion, invariant_metric_space, ricci
from .lie import NotASubalgebra, format_vector
from .tensor import ad_invariance_defect, schouten_square

__all__ = [
    "Report",
    "InputError",
    "check_report",
    "dualize_report",
    "geometry_report",
    "metric_report",
    "scan_report",
    "fixtures_report",
]


class InputError(ValueError):
    """The document lacks something the requested report needs."""


@dataclass
class Report:
    command: str
    parameters: tuple[str, ...]
    sections: list[tuple[str, list[tuple[str, object]]]] = field(default_factory=list)
    ok: bool = True  # False when some checked condition failed
    equations: set = field(default_factory=set)  # sections whose rows read "lhs = rhs"

    def section(self, title, equations=False):
        rows: list = []
        self.sections.append((title, rows))
        if equations:
            self.equations.add(title)
        return rows

    def to_data(self) -> dict:
        return {
            "command": self.command,
            "parameters": list(self.parameters),
            "ok": self.ok,
            "sections": {title: dict(rows) for title, rows in self.sections},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_data(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command} over parameters ({', '.join(self.parameters)})"]
        for title, rows in self.sections:
            lines.append("")
            lines.append(f"== {title} ==")
            if not rows:
                lines.append("(none)")
            for key, value in rows:
                if isinstance(value, list):
                    lines.append(f"{key}:" if value else f"{key}: (none)")
                    lines.extend(f"  {v}" for v in value)
                elif isinstance(value, bool):
                    lines.append(f"{key}: {'true' if value else 'false'}")
                else:
                    sep = " = " if title in self.equations else ": "
                    lines.append(f"{key}{sep}{value}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _need_delta(doc):
    delta = doc.cocommutator()
    if delta is None:
        raise InputError("document has neither 'r' nor 'delta'")
    return delta


def _need_split(doc):
    s = doc.split()
    if s is None:
        raise InputError("document has no 'splitting'")
    return s


def _bialgebra(doc):
    alg = doc.algebra()
    delta = _need_delta(doc)
    return alg, make_bialgebra(alg, delta)


def _bracket_rows(alg):
    rows = []
    for (i, j), v in sorted(alg.structure_constants().items()):
        rows.append((f"[{alg.basis[i]}, {alg.basis[j]}]", format_vector(v, alg.basis)))
    return rows


def _delta_rows(delta, names):
    return [(f"delta({n})", b.format(names)) for n, b in zip(names, delta.values)]


def check_report(doc) -> Report:
    alg, bialg = _bialgebra(doc)
    s = _need_split(doc)
    rep = Report("check", alg.params)
    rows = rep.section("cocommutator", equations=True)
    rows.extend(_delta_rows(bialg.cocommutator, alg.basis))
    cl = classify(bialg, s)
    v = cl.verdict
    rows = rep.section("verdict")
    rows += [("coisotropic", v.coisotropic), ("coreductive", v.coreductive), ("cosymmetric", v.cosymmetric)]
    rows = rep.section("offending components")
    for cond, offs in v.offending.items():
        rows.append((cond, [f"delta({o.generator}) {o.block} {o.component}: {o.value.to_expr()}" for o in offs]))
    rows = rep.section("dual inclusions")
    rows.extend(cl.dual_inclusions.items())
    if cl.dual_reductive is not None:
        rows.append(("dual splitting reductive", cl.dual_reductive))
        rows.append(("dual splitting symmetric", cl.dual_symmetric))
    r = doc.r_matrix()
    if r is not None:
        defect = ad_invariance_defect(alg, schouten_square(alg, r))
        rep.section("r-matrix").append(("[[r, r]] ad-invariant (modified CYBE)", not defect))
    rep.ok = v.coisotropic and v.coreductive and v.cosymmetric
    return rep


def dualize_report(doc) -> Report:
    alg, bialg = _bialgebra(doc)
    dual = dual_bracket(bialg.cocommutator)
    rep = Report("dualize", alg.params)
    rep.section("dual bracket", equations=True).extend(_bracket_rows(dual))
    dstar = dual_cocommutator(alg, dual)
    rep.section("dual cocommutator", equations=True).extend(_delta_rows(dstar, dual.basis))
    s = doc.split()
    if s is not None:
        ds = dual_splitting(s)
        rows = rep.section("dual splitting")
        rows.append(("h_perp", [dual.basis[i] for i in ds.h]))
        rows.append(("t_perp", [dual.basis[i] for i in ds.t]))
    return rep


def _dual_and_split(doc):
    alg, bialg = _bialgebra(doc)
    s = _need_split(doc)
    dual = dual_bracket(bialg.cocommutator)
    return alg, dual, dual_splitting(s)


def _tensor_rows(dual, ds):
    names = dual.basis
    T = canonical_torsion(dual, ds)
    R = canonical_curvature(dual, ds)
    S = ricci(R, ds.t)
    t_rows = [(f"T({names[a]}, {names[b]})", format_vector(v, names)) for (a, b), v in sorted(T.items())]
    r_rows = [(f"R({names[a]}, {names[b]}) {names[c]}", format_vector(v, names))
              for (a, b, c), v in sorted(R.items()) if a < b]
    s_rows = [(f"S({names[b]}, {names[c]})", v.to_expr()) for (b, c), v in sorted(S.items())]
    return t_rows, r_rows, s_rows


def _not_reductive(rep, exc):
    rep.section("dual splitting").append(("reductive", False))
    rep.section("diagnostic").append(("reason", str(exc)))
    rep.ok = False
    return rep


def geometry_report(doc) -> Report:
    alg, dual, ds = _dual_and_split(doc)
    rep = Report("geometry", alg.params)
    try:
        t_rows, r_rows, s_rows = _tensor_rows(dual, ds)
    except (NotReductive, NotASubalgebra) as exc:
        return _not_reductive(rep, exc)
    rows = rep.section("dual splitting")
    rows.append(("h_perp", [dual.basis[i] for i in ds.h]))
    rows.append(("t_perp", [dual.basis[i] for i in ds.t]))
    rows.append(("reductive", True))
    rep.section("torsion (nonzero components)", equations=True).extend(t_rows)
    rep.section("curvature (nonzero independent components)", equations=True).extend(r_rows)
    rep.section("Ricci (nonzero components)", equations=True).extend(s_rows)
    _metric_rows(rep, dual, ds)
    return rep


def _metric_rows(rep, dual, ds):
    m = invariant_metric_space(dual, ds)
    names = dual.basis
    rows = rep.section("invariant metric")
    rows.append(("t_perp dimension", str(m.dimension)))
    rows.append(("solution space dimension", str(len(m.basis))))
    for k, b in enumerate(m.basis):
        entries = [f"B({names[m.t_indices[i]]}, {names[m.t_indices[j]]}) = {b[i][j].to_expr()}"
                   for i in range(m.dimension) for j in range(i, m.dimension) if b[i][j]]
        rows.append((f"basis form {k + 1}", entries))
    rows.append(("nondegenerate form exists", m.nondegenerate_exists))
    if m.determinant is not None:
        rows.append(("generic determinant", m.determinant.to_expr()))
        rows.append(("combination coefficients", list(m.combination_params)))
    if m.witness is not None:
        rows.append(("witness coefficients", [str(w) for w in m.witness]))
    rows.append(("genericity conditions (nonzero)", [g.to_expr() for g in m.genericity]))
    return m


def metric_report(doc) -> Report:
    alg, dual, ds = _dual_and_split(doc)
    rep = Report("metric", alg.params)
    try:
        m = _metric_rows(rep, dual, ds)
    except (NotReductive, NotASubalgebra) as exc:
        rep.sections.clear()
        return _not_reductive(rep, exc)
    rep.ok = m.nondegenerate_exists != "no"
    return rep


def scan_report(doc, special_values=()) -> Report:
    alg = doc.algebra()
    s = _need_split(doc)
    g = generic_r_analysis(alg, s, support=doc.support, special_values=list(special_values))
    rep = Report("scan-r", alg.params)
    rows = rep.section("generic r-matrix")
    rows.append(("unknowns", [f"{u} = coefficient of {alg.basis[i]} ^ {alg.basis[j]}"
                              for u, (i, j) in zip(g.unknowns, g.support)]))
    for blk, us in g.support_blocks().items():
        rows.append((f"{blk} block", us))
    for name, cs in g.systems.items():
        rows = rep.section(name)
        rows.append(("rank", str(cs.rank)))
        rows.append(("constraints (reduced)", cs.reduced_constraints()))
        rows.append(("forced to vanish", cs.forced_zero()))
        rows.append(("genericity conditions (nonzero)", [x.to_expr() for x in cs.genericity]))
        for label, sp in cs.special.items():
            if "error" in sp:
                rows.append((f"at {label}", sp["error"]))
            else:
                rows.append((f"rank at {label}", str(sp["rank"])))
    return rep


def fixtures_report(entries) -> Report:
    from .catalog import run_fixtures

    rep = Report("fixtures", ())
    failed = 0
    for entry in entries:
        rows = rep.section(entry.identifier)
        for fx, ok, got in run_fixtures(entry):
            failed += not ok
            rows.append((fx.name, f"{'pass' if ok else 'FAIL'} [{fx.source}]"))
    rep.section("summary").append(("failures", str(failed)))
    rep.ok = failed == 0
    return rep
