"""Cocommutators, the coboundary construction and Lie bialgebra duality.

A cocommutator assigns a bivector ``delta(X_i)`` to every basis element.  The
dual bracket reads structure constants straight off the cocommutator
coefficients::

    delta(X_c) = sum_{a<b} d_c^{ab} X_a ^ X_b   ==>   [x^a, x^b]_* = sum_c d_c^{ab} x^c

and the dual cocommutator does the same in the other direction.  Dual
generators are named by appending ``*``; dualizing a starred name strips it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lie import LieAlgebra, jacobi_defect
from .scalar import Scalar
from .tensor import Bivector, ad_on_bivector

__all__ = [
    "Cocommutator",
    "LieBialgebra",
    "CocycleError",
    "CoJacobiError",
    "dual_name",
    "coboundary_cocommutator",
    "cocycle_defect",
    "co_jacobi_defect",
    "dual_bracket",
    "dual_cocommutator",
    "make_bialgebra",
]


class CocycleError(ValueError):
    pass


class CoJacobiError(ValueError):
    pass


def dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


class Cocommutator:
    """A linear map ``g -> g ^ g`` given on basis elements.

    ``values`` maps generator names or indices to bivectors; missing entries
    are zero.  ``algebra`` is optional (a dual cocommutator built from a bare
    bracket has no bracket of its own yet).
    """

    def __init__(self, basis, values=None, params=(), algebra: LieAlgebra | None = None):
        self.basis = tuple(basis)
        self.params = tuple(params)
        self.algebra = algebra
        if algebra is not None and (algebra.basis != self.basis or algebra.params != self.params):
            raise ValueError("cocommutator basis/parameters do not match its algebra")
        index = {n: i for i, n in enumerate(self.basis)}
        vals = [Bivector(None, self.params) for _ in self.basis]
        for g, b in (values or {}).items():
            i = g if isinstance(g, int) else index[g]
            vals[i] = b if b.params == self.params else b.extend(self.params)
        self.values = tuple(vals)

    @classmethod
    def on(cls, alg: LieAlgebra, values=None) -> "Cocommutator":
        return cls(alg.basis, values, alg.params, algebra=alg)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __getitem__(self, g) -> Bivector:
        if isinstance(g, str):
            g = self.basis.index(g)
        return self.values[g]

    def is_zero(self) -> bool:
        return not any(self.values)

    def __eq__(self, other):
        if not isinstance(other, Cocommutator):
            return NotImplemented
        return self.basis == other.basis and self.values == other.values

    def __add__(self, other):
        return Cocommutator(
            self.basis, {i: a + b for i, (a, b) in enumerate(zip(self.values, other.values))},
            self.params, self.algebra,
        )

    def substitute(self, bindings, algebra=None) -> "Cocommutator":
        bindings = {k: v for k, v in dict(bindings).items() if k in self.params}
        rest = tuple(p for p in self.params if p not in bindings)
        vals = {i: b.substitute(bindings) for i, b in enumerate(self.values)}
        if algebra is None and self.algebra is not None:
            algebra = self.algebra.substitute(bindings)
        return Cocommutator(self.basis, vals, rest, algebra)

    def with_algebra(self, alg: LieAlgebra) -> "Cocommutator":
        return Cocommutator(self.basis, dict(enumerate(self.values)), self.params, alg)

    def describe(self) -> list[str]:
        return [f"delta({n}) = {b.format(self.basis)}" for n, b in zip(self.basis, self.values)]

    def __repr__(self):
        return f"<Cocommutator on {self.basis}>"


@dataclass(frozen=True)
class LieBialgebra:
    algebra: LieAlgebra
    cocommutator: Cocommutator


def coboundary_cocommutator(alg: LieAlgebra, r: Bivector) -> Cocommutator:
    """``delta(X) = [X (x) 1 + 1 (x) X, r]``."""
    return Cocommutator.on(alg, {i: ad_on_bivector(alg, i, r) for i in range(alg.dim)})


def _delta_of_vector(delta: Cocommutator, v: dict) -> Bivector:
    out = Bivector(None, delta.params)
    for k, c in v.items():
        b = delta.values[k]
        if b:
            out = out + b.scaled(c)
    return out


def cocycle_defect(alg: LieAlgebra, delta: Cocommutator) -> dict[tuple[int, int], Bivector]:
    """Nonzero ``delta([X_i,X_j]) - [delta(X_i), X_j.1] - [X_i.1, delta(X_j)]`` for ``i < j``.

    Here ``X.1`` abbreviates ``X (x) 1 + 1 (x) X``; the middle term equals
    ``-ad_{X_j} delta(X_i)``.
    """
    if delta.basis != alg.basis:
        raise ValueError("cocommutator and algebra have different bases")
    out = {}
    for i, j in combinations(range(alg.dim), 2):
        d = _delta_of_vector(delta, alg.bracket_basis(i, j))
        d = d + ad_on_bivector(alg, j, delta.values[i]) - ad_on_bivector(alg, i, delta.values[j])
        if d:
            out[(i, j)] = d
    return out


def _dual_structure(delta: Cocommutator):
    structure = {}
    for c, b in enumerate(delta.values):
        for (a, bb), v in b.components.items():
            structure.setdefault((a, bb), {})[c] = v
    return structure


def co_jacobi_defect(delta: Cocommutator):
    """Jacobi defect of the transposed bracket (empty iff co-Jacobi holds)."""
    alg = LieAlgebra([dual_name(n) for n in delta.basis], _dual_structure(delta), delta.params)
    return jacobi_defect(alg)


def dual_bracket(delta: Cocommutator, check: bool = True) -> LieAlgebra:
    """The Lie algebra ``(g*, [.,.]_*)`` whose bracket is the transpose of ``delta``."""
    alg = LieAlgebra([dual_name(n) for n in delta.basis], _dual_structure(delta), delta.params)
    if check:
        defect = jacobi_defect(alg)
        if defect:
            (i, j, k), comp = next(iter(sorted(defect.items())))
            m, v = next(iter(sorted(comp.items())))
            n = delta.basis
            raise CoJacobiError(
                f"co-Jacobi fails: Jacobi of the dual bracket on ({n[i]}, {n[j]}, {n[k]}) "
                f"has component {v} along {alg.basis[m]}"
            )
    return alg


def dual_cocommutator(alg: LieAlgebra, dual_algebra: LieAlgebra | None = None) -> Cocommutator:
    """``delta*(x^c) = sum_{a<b} c_ab^c x^a ^ x^b``, the transpose of the bracket of ``alg``."""
    names = [dual_name(n) for n in alg.basis]
    vals = {c: Bivector(None, alg.params) for c in range(alg.dim)}
    for (a, b), terms in alg.structure_constants().items():
        for c, v in terms.items():
            vals[c].add_term((a, b), v)
    return Cocommutator(names, vals, alg.params, dual_algebra)


def make_bialgebra(alg: LieAlgebra, delta: Cocommutator) -> LieBialgebra:
    """Validate ``(alg, delta)``; raises on a cocycle or co-Jacobi violation."""
    defect = cocycle_defect(alg, delta)
    if defect:
        (i, j), b = next(iter(sorted(defect.items())))
        key, v = b.items()[0]
        raise CocycleError(
            f"cocycle identity fails for ({alg.basis[i]}, {alg.basis[j]}): defect component "
            f"{v} along {' ^ '.join(alg.basis[k] for k in key)}"
        )
    dual_bracket(delta)
    if delta.algebra is None:
        delta = delta.with_algebra(alg)
    return LieBialgebra(alg, delta)
