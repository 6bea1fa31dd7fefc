"""Canonical connection of a reductive homogeneous space, at its origin.

For a reductive splitting ``g* = h_perp + t_perp`` the canonical connection
satisfies, for ``X, Y, Z`` in ``t_perp``::

    T(X, Y)    = -[X, Y]_{t_perp}
    R(X, Y) Z  = -[[X, Y]_{h_perp}, Z]
    S(Y, Z)    = trace(X -> R(X, Y) Z)

Both ``T`` and ``R`` are invariant and parallel, so their values at the origin
determine them.  Tensors are sparse dicts keyed by dual-algebra indices.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from .lie import LieAlgebra, NotASubalgebra, SubalgebraSplitting, _add_into, is_subalgebra, reductive_check
from .linalg import determinant, nullspace
from .scalar import Scalar

__all__ = [
    "NotReductive",
    "GeometryReport",
    "MetricSolutionSpace",
    "canonical_torsion",
    "canonical_curvature",
    "ricci",
    "geometry_report",
    "invariant_metric_space",
]


class NotReductive(ValueError):
    """The canonical connection needs a reductive splitting."""


def _require_reductive(alg: LieAlgebra, ds: SubalgebraSplitting):
    ds.validate(alg)
    if not is_subalgebra(alg, ds.h):
        raise NotASubalgebra("isotropy block of the dual splitting is not a subalgebra")
    if not reductive_check(alg, ds):
        raise NotReductive("[h_perp, t_perp] leaves t_perp; no canonical connection")


def canonical_torsion(dual_alg: LieAlgebra, ds: SubalgebraSplitting) -> dict[tuple[int, int], dict[int, Scalar]]:
    """``{(a, b): T(e_a, e_b)}`` for ``a < b`` in ``t_perp``, zero entries omitted."""
    _require_reductive(dual_alg, ds)
    tp = set(ds.t)
    out = {}
    for a, b in combinations(sorted(ds.t), 2):
        v = {k: -c for k, c in dual_alg.bracket_basis(a, b).items() if k in tp}
        if v:
            out[(a, b)] = v
    return out


def canonical_curvature(dual_alg: LieAlgebra, ds: SubalgebraSplitting) -> dict[tuple[int, int, int], dict[int, Scalar]]:
    """``{(a, b, c): R(e_a, e_b) e_c}`` over all ordered t_perp triples with ``a != b``."""
    _require_reductive(dual_alg, ds)
    hp = set(ds.h)
    out = {}
    for a, b in product(ds.t, repeat=2):
        if a == b:
            continue
        hpart = {k: c for k, c in dual_alg.bracket_basis(a, b).items() if k in hp}
        if not hpart:
            continue
        for c in ds.t:
            v = dual_alg.bracket_sparse(hpart, {c: Scalar(1, dual_alg.params)})
            v = {k: -x for k, x in v.items()}
            if v:
                out[(a, b, c)] = v
    for (a, b, c), v in out.items():
        w = out.get((b, a, c), {})
        if {k: -x for k, x in w.items()} != v:
            raise AssertionError(f"curvature not antisymmetric at {(a, b, c)}")
    return out


def ricci(curvature: dict, t_indices) -> dict[tuple[int, int], Scalar]:
    """``S(e_b, e_c) = sum_a <R(e_a, e_b) e_c>_a`` (not symmetrized)."""
    out: dict[tuple[int, int], Scalar] = {}
    t = set(t_indices)
    for (a, b, c), v in curvature.items():
        if a in t and a in v:
            _add_into(out, (b, c), v[a])
    return out


@dataclass
class MetricSolutionSpace:
    t_indices: tuple[int, ...]
    basis: list[list[list[Scalar]]]
    nondegenerate_exists: str  # "yes", "no" or "conditional"
    determinant: Scalar | None = None
    combination_params: tuple[str, ...] = ()
    witness: list[Fraction] | None = None
    witness_matrix: list[list[Scalar]] | None = None
    genericity: list[Scalar] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.t_indices)


@dataclass
class GeometryReport:
    labels: tuple[str, ...]
    t_indices: tuple[int, ...]
    torsion: dict
    curvature: dict
    ricci: dict
    metric: MetricSolutionSpace | None = None

    def independent_curvature(self):
        return {k: v for k, v in self.curvature.items() if k[0] < k[1]}


def geometry_report(dual_alg: LieAlgebra, ds: SubalgebraSplitting, metric: bool = True) -> GeometryReport:
    T = canonical_torsion(dual_alg, ds)
    R = canonical_curvature(dual_alg, ds)
    S = ricci(R, ds.t)
    M = invariant_metric_space(dual_alg, ds) if metric else None
    return GeometryReport(dual_alg.basis, tuple(ds.t), T, R, S, M)


def _fresh_names(n, taken, stem="c"):
    names = []
    k = 1
    while len(names) < n:
        name = f"{stem}{k}"
        if name not in taken:
            names.append(name)
        k += 1
    return tuple(names)


def _invariance_rows(alg, ds, pairs):
    """One linear row per (Z, X, Y): B([Z,X],Y) + B(X,[Z,Y]) = 0."""
    col = {p: k for k, p in enumerate(pairs)}

    def key(x, y):
        return col[(x, y) if x <= y else (y, x)]

    rows = []
    for zi in ds.h:
        for x, y in combinations_with_replacement(sorted(ds.t), 2):
            row: dict[int, Scalar] = {}
            for k, c in alg.bracket_basis(zi, x).items():
                _add_into(row, key(k, y), c)
            for k, c in alg.bracket_basis(zi, y).items():
                _add_into(row, key(x, k), c)
            if row:
                rows.append(row)
    return rows


def invariant_metric_space(dual_alg: LieAlgebra, ds: SubalgebraSplitting, seed: int = 0) -> MetricSolutionSpace:
    """All ad_{h_perp}-invariant symmetric bilinear forms on ``t_perp``, and whether one is nondegenerate."""
    _require_reductive(dual_alg, ds)
    t = sorted(ds.t)
    n = len(t)
    pos = {i: k for k, i in enumerate(t)}
    pairs = list(combinations_with_replacement(t, 2))
    params = dual_alg.params
    rows = _invariance_rows(dual_alg, ds, pairs)
    sol, red = nullspace(rows, len(pairs), params)
    zero = Scalar(0, params)
    basis = []
    for v in sol:
        m = [[zero] * n for _ in range(n)]
        for k, c in v.items():
            x, y = pairs[k]
            m[pos[x]][pos[y]] = c
            m[pos[y]][pos[x]] = c
        basis.append(m)
    _recheck_invariance(dual_alg, ds, t, basis)
    if n == 0:
        return MetricSolutionSpace(tuple(t), basis, "yes", Scalar(1, params), (), [], [], red.genericity)
    if not basis:
        return MetricSolutionSpace(tuple(t), basis, "no", zero, (), None, None, red.genericity)

    cnames = _fresh_names(len(basis), set(params))
    ext = params + cnames
    coeffs = [Scalar.param(c, ext) for c in cnames]
    generic = [[sum((coeffs[b] * basis[b][i][j].extend(ext) for b in range(len(basis))), Scalar(0, ext))
                for j in range(n)] for i in range(n)]
    det = determinant(generic)
    if det.is_zero():
        return MetricSolutionSpace(tuple(t), basis, "no", det, cnames, None, None, red.genericity)

    witness = _find_witness(basis, det, cnames, seed)
    wm = [[sum((basis[b][i][j] * witness[b] for b in range(len(basis))), zero) for j in range(n)] for i in range(n)]
    verdict = "yes" if not red.genericity else "conditional"
    return MetricSolutionSpace(tuple(t), basis, verdict, det, cnames, witness, wm, red.genericity)


def _find_witness(basis, det, cnames, seed):
    """Rational coefficients making the combination nondegenerate for generic parameters."""
    def diag_first():
        return [Fraction(1) if all(m[i][j].is_zero() for i in range(len(m)) for j in range(len(m)) if i != j)
                else Fraction(0) for m in basis]

    rng = random.Random(seed)
    tries = [diag_first(), [Fraction(1)] * len(basis)]
    tries += [[Fraction(rng.randint(-9, 9)) for _ in basis] for _ in range(200)]
    for w in tries:
        if not det.substitute(dict(zip(cnames, w))).is_zero():
            return w
    raise RuntimeError("no witness found although the generic determinant is nonzero")


def _recheck_invariance(alg, ds, t, basis):
    pos = {i: k for k, i in enumerate(t)}
    for m in basis:
        for zi in ds.h:
            for x in t:
                for y in t:
                    acc = Scalar(0, alg.params)
                    for k, c in alg.bracket_basis(zi, x).items():
                        acc = acc + c * m[pos[k]][pos[y]]
                    for k, c in alg.bracket_basis(zi, y).items():
                        acc = acc + c * m[pos[x]][pos[k]]
                    if acc:
                        raise AssertionError("metric basis element fails the invariance re-check")
