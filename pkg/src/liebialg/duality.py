"""Coisotropy, coreductivity and cosymmetry of a Lie bialgebra w.r.t. a splitting.

For ``g = h + t`` the three conditions are block-vanishing statements on the
cocommutator:

============== ====================================================
coisotropic    no t^t component in delta(h)
coreductive    no h^t component in delta(t)
cosymmetric    delta(h) lies in h^t (no h^h and no t^t component)
============== ====================================================

On the dual side (``h_perp`` spanned by the duals of ``t``, ``t_perp`` by the
duals of ``h``) they read ``[h_perp, h_perp]_* in h_perp``,
``[h_perp, t_perp]_* in t_perp``, and ``[t_perp, t_perp]_* in h_perp`` together
with the first.  :func:`classify` computes both sides and insists they agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .bialgebra import (
    Cocommutator,
    LieBialgebra,
    coboundary_cocommutator,
    dual_bracket,
)
from .lie import (
    LieAlgebra,
    NotASubalgebra,
    SubalgebraSplitting,
    is_subalgebra,
    reductive_check,
    symmetric_check,
)
from .linalg import Reduction, rref
from .scalar import Scalar, SubstitutionError
from .tensor import Bivector, block_components

__all__ = [
    "Offense",
    "CheckResult",
    "ConditionVerdict",
    "Classification",
    "ConstraintSystem",
    "GenericRSystem",
    "InternalMismatch",
    "coisotropy_check",
    "coreductivity_check",
    "cosymmetry_check",
    "dual_splitting",
    "dual_inclusions",
    "classify",
    "generic_r_analysis",
]


class InternalMismatch(AssertionError):
    """Primal and dual computations disagree (implementation bug)."""


class Offense(NamedTuple):
    generator: str
    block: str
    component: str
    value: Scalar


@dataclass
class CheckResult:
    holds: bool
    offending: list[Offense]

    def __bool__(self):
        return self.holds


def _check(delta: Cocommutator, s: SubalgebraSplitting, sources, blocks) -> CheckResult:
    if delta.algebra is not None:
        s.validate(delta.algebra)
        if not is_subalgebra(delta.algebra, s.h):
            raise NotASubalgebra("isotropy block is not a subalgebra")
    elif sorted(s.h + s.t) != list(range(delta.dim)):
        raise ValueError("splitting does not cover the cocommutator basis")
    names = delta.basis
    bad = []
    for i in sources:
        parts = block_components(delta.values[i], s)
        for blk in blocks:
            for key, v in sorted(parts[blk].items()):
                bad.append(Offense(names[i], blk, " ^ ".join(names[k] for k in key), v))
    return CheckResult(not bad, bad)


def coisotropy_check(delta: Cocommutator, s: SubalgebraSplitting) -> CheckResult:
    return _check(delta, s, s.h, ("tt",))


def coreductivity_check(delta: Cocommutator, s: SubalgebraSplitting) -> CheckResult:
    return _check(delta, s, s.t, ("ht",))


def cosymmetry_check(delta: Cocommutator, s: SubalgebraSplitting) -> CheckResult:
    return _check(delta, s, s.h, ("hh", "tt"))


def dual_splitting(s: SubalgebraSplitting) -> SubalgebraSplitting:
    """``h_perp`` = duals of ``t`` and ``t_perp`` = duals of ``h`` (an involution)."""
    return SubalgebraSplitting(s.t, s.h)


@dataclass
class ConditionVerdict:
    coisotropic: bool
    coreductive: bool
    cosymmetric: bool
    offending: dict[str, list[Offense]] = field(default_factory=dict)

    def as_tuple(self):
        return (self.coisotropic, self.coreductive, self.cosymmetric)


@dataclass
class Classification:
    verdict: ConditionVerdict
    dual_algebra: LieAlgebra
    dual_split: SubalgebraSplitting
    dual_inclusions: dict[str, bool]
    dual_reductive: bool | None
    dual_symmetric: bool | None


def _inclusion(alg: LieAlgebra, left, right, target) -> bool:
    target = set(target)
    for i in left:
        for j in right:
            if i != j and any(k not in target for k in alg.bracket_basis(i, j)):
                return False
    return True


def dual_inclusions(dual_alg: LieAlgebra, ds: SubalgebraSplitting) -> dict[str, bool]:
    hp, tp = ds.h, ds.t
    return {
        "[h_perp,h_perp] in h_perp": _inclusion(dual_alg, hp, hp, hp),
        "[h_perp,t_perp] in t_perp": _inclusion(dual_alg, hp, tp, tp),
        "[t_perp,t_perp] in h_perp": _inclusion(dual_alg, tp, tp, hp),
    }


def classify(b: LieBialgebra, s: SubalgebraSplitting) -> Classification:
    delta = b.cocommutator
    if delta.algebra is None:
        delta = delta.with_algebra(b.algebra)
    coiso = coisotropy_check(delta, s)
    cored = coreductivity_check(delta, s)
    cosym = cosymmetry_check(delta, s)
    verdict = ConditionVerdict(
        bool(coiso), bool(cored), bool(cosym),
        {"coisotropy": coiso.offending, "coreductivity": cored.offending, "cosymmetry": cosym.offending},
    )
    dual = dual_bracket(delta)
    ds = dual_splitting(s)
    inc = dual_inclusions(dual, ds)
    expected = {
        "[h_perp,h_perp] in h_perp": verdict.coisotropic,
        "[h_perp,t_perp] in t_perp": verdict.coreductive,
    }
    for k, v in expected.items():
        if inc[k] != v:
            raise InternalMismatch(f"dual inclusion {k} = {inc[k]} but primal check says {v}")
    if (inc["[h_perp,h_perp] in h_perp"] and inc["[t_perp,t_perp] in h_perp"]) != verdict.cosymmetric:
        raise InternalMismatch("dual-side cosymmetry disagrees with the primal block check")
    if verdict.cosymmetric and not verdict.coisotropic:
        raise InternalMismatch("cosymmetric but not coisotropic")
    red = sym = None
    if inc["[h_perp,h_perp] in h_perp"]:
        red = reductive_check(dual, ds)
        sym = symmetric_check(dual, ds)
    return Classification(verdict, dual, ds, inc, red, sym)


# -- generic r-matrix analysis ---------------------------------------------------

CONDITIONS = ("coisotropy", "coreductivity", "cosymmetry")
_CONDITION_BLOCKS = {
    "coisotropy": ("h", ("tt",)),
    "coreductivity": ("t", ("ht",)),
    "cosymmetry": ("h", ("hh", "tt")),
}


@dataclass
class ConstraintSystem:
    """Linear homogeneous constraints on the r-matrix coefficients for one condition."""

    name: str
    unknowns: list[str]
    equations: list[dict[int, Scalar]]
    reduction: Reduction
    special: dict[str, dict] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.reduction.rank

    @property
    def genericity(self) -> list[Scalar]:
        return self.reduction.genericity

    def solution_basis(self) -> list[dict[int, Scalar]]:
        return self.reduction.nullspace()

    def forced_zero(self) -> list[str]:
        """Unknowns that vanish on every solution."""
        basis = self.solution_basis()
        return [u for k, u in enumerate(self.unknowns) if all(k not in v for v in basis)]

    def is_coordinate(self) -> bool:
        """True when the solution space is cut out by setting some unknowns to zero."""
        return all(len(row) == 1 for row in self.reduction.rows)

    def reduced_constraints(self) -> list[str]:
        out = []
        for row in self.reduction.rows:
            terms = []
            for k in sorted(row):
                c = row[k]
                e = "" if c == 1 else "-" if c == -1 else f"({c.to_expr()})*"
                terms.append(f"{e}{self.unknowns[k]}")
            out.append(" + ".join(terms).replace("+ -", "- ") + " = 0")
        return out


@dataclass
class GenericRSystem:
    algebra: LieAlgebra
    splitting: SubalgebraSplitting
    support: list[tuple[int, int]]
    unknowns: list[str]
    systems: dict[str, ConstraintSystem]
    deltas: list[Cocommutator] = field(default_factory=list, repr=False)

    def cocommutator(self) -> Cocommutator:
        """``delta_r`` for the generic r, over the parameters plus the unknowns."""
        params = self.algebra.params + tuple(self.unknowns)
        vals = {i: Bivector(None, params) for i in range(self.algebra.dim)}
        for u, d in zip(self.unknowns, self.deltas):
            coef = Scalar.param(u, params)
            for i, b in enumerate(d.values):
                if b:
                    vals[i] = vals[i] + b.extend(params).scaled(coef)
        return Cocommutator(self.algebra.basis, vals, params)

    def support_blocks(self) -> dict[str, list[str]]:
        out = {"hh": [], "ht": [], "tt": []}
        h = set(self.splitting.h)
        for (i, j), u in zip(self.support, self.unknowns):
            n = (i in h) + (j in h)
            out["hh" if n == 2 else "ht" if n == 1 else "tt"].append(u)
        return out


def _unknown_name(alg, i, j, taken):
    a, b = alg.basis[i], alg.basis[j]
    name = f"r_{a}_{b}"
    if not name.replace("_", "a").isalnum():
        name = f"r_{i}_{j}"
    while name in taken:
        name += "_"
    return name


def _condition_rows(alg, s, deltas, name):
    src_block, blocks = _CONDITION_BLOCKS[name]
    sources = s.h if src_block == "h" else s.t
    rows: dict[tuple, dict[int, Scalar]] = {}
    for p, delta in enumerate(deltas):
        for i in sources:
            parts = block_components(delta.values[i], s)
            for blk in blocks:
                for key, v in parts[blk].items():
                    rows.setdefault((i, key), {})[p] = v
    return [rows[k] for k in sorted(rows)]


def generic_r_analysis(
    alg: LieAlgebra,
    s: SubalgebraSplitting,
    support=None,
    special_values=None,
    combine=True,
) -> GenericRSystem:
    """Constraints imposed by each condition on a generic r-matrix on ``support``.

    Each support pair ``(i, j)`` gets one unknown coefficient of ``X_i ^ X_j``.
    Because ``r -> delta_r`` is linear, the block-vanishing equations are linear
    and homogeneous in the unknowns with coefficients in the parameter field;
    they are row-reduced per condition.  ``special_values`` is a list of
    parameter bindings at which the *unreduced* system is re-reduced (generic
    reductions need not survive specialization).  With ``combine`` the joint
    system "coisotropy+coreductivity" is reported too.
    """
    s.validate(alg)
    if not is_subalgebra(alg, s.h):
        raise NotASubalgebra("isotropy block is not a subalgebra")
    if support is None:
        support = list(combinations(range(alg.dim), 2))
    pairs = []
    for x, y in support:
        i, j = alg.index(x), alg.index(y)
        if i == j:
            raise ValueError("support pair with repeated generator")
        key = (min(i, j), max(i, j))
        if key not in pairs:
            pairs.append(key)
    taken = set(alg.params)
    unknowns = []
    for i, j in pairs:
        n = _unknown_name(alg, i, j, taken)
        taken.add(n)
        unknowns.append(n)
    deltas = []
    for i, j in pairs:
        r = Bivector(None, alg.params)
        r.add_term((i, j), 1)
        deltas.append(coboundary_cocommutator(alg, r))

    eqs = {name: _condition_rows(alg, s, deltas, name) for name in CONDITIONS}
    if combine:
        eqs["coisotropy+coreductivity"] = eqs["coisotropy"] + eqs["coreductivity"]
    systems = {}
    for name, rows in eqs.items():
        red = rref(rows, len(pairs), alg.params)
        cs = ConstraintSystem(name, unknowns, rows, red)
        for bind in special_values or []:
            label = ",".join(f"{k}={v}" for k, v in bind.items())
            try:
                sub_rows = [{k: v.substitute(bind) for k, v in row.items()} for row in rows]
            except SubstitutionError as exc:
                cs.special[label] = {"error": str(exc)}
                continue
            rest = tuple(p for p in alg.params if p not in bind)
            sub_rows = [{k: v for k, v in row.items() if v} for row in sub_rows]
            sred = rref(sub_rows, len(pairs), rest)
            cs.special[label] = {"rank": sred.rank, "reduction": sred, "unknowns": unknowns}
        systems[name] = cs
    return GenericRSystem(alg, s, pairs, unknowns, systems, deltas)
