"""Finite-dimensional Lie algebras given by structure constants.

Only brackets ``[X_i, X_j]`` with ``i < j`` are stored; the other half is
derived by antisymmetry when read.  Vectors are either dense lists of
:class:`~liebialg.scalar.Scalar` (the public :func:`bracket`) or sparse
``{index: Scalar}`` dicts (everything internal).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .scalar import Scalar, check_parameter_names

__all__ = [
    "LieAlgebra",
    "SubalgebraSplitting",
    "NotASubalgebra",
    "bracket",
    "jacobi_defect",
    "is_subalgebra",
    "reductive_check",
    "symmetric_check",
    "adjoint_matrix",
]


class NotASubalgebra(ValueError):
    pass


def _add_into(acc: dict, key, value):
    if not value:
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = value
    else:
        s = cur + value
        if s:
            acc[key] = s
        else:
            del acc[key]


class LieAlgebra:
    """A Lie algebra over the rational functions in ``params``.

    ``structure`` maps a pair of generators (names or indices) to the
    expansion of their bracket, ``{generator: coefficient}``.  Coefficients
    may be ints, Fractions or Scalars.  A pair may be given in either order,
    but not both.
    """

    def __init__(self, basis, structure=None, params=()):
        self.basis = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"duplicate generator names in {self.basis}")
        self.params = check_parameter_names(params)
        self._index = {n: i for i, n in enumerate(self.basis)}
        self._c: dict[tuple[int, int], dict[int, Scalar]] = {}
        seen = set()
        for (x, y), terms in (structure or {}).items():
            i, j = self.index(x), self.index(y)
            if i == j:
                if any(self._scalar(v) for v in terms.values()):
                    raise ValueError(f"[{self.basis[i]}, {self.basis[i]}] must vanish")
                continue
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"bracket of {self.basis[key[0]]}, {self.basis[key[1]]} given twice")
            seen.add(key)
            sign = 1 if i < j else -1
            out: dict[int, Scalar] = {}
            for k, v in terms.items():
                _add_into(out, self.index(k), sign * self._scalar(v))
            if out:
                self._c[key] = out

    def _scalar(self, v) -> Scalar:
        if isinstance(v, Scalar):
            return v.extend(self.params) if v.params != self.params else v
        return Scalar(v, self.params)

    # -- basic access -------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, g) -> int:
        if isinstance(g, int):
            if not 0 <= g < self.dim:
                raise IndexError(f"generator index {g} out of range")
            return g
        try:
            return self._index[g]
        except KeyError:
            raise KeyError(f"unknown generator {g!r}") from None

    def zero(self) -> Scalar:
        return Scalar(0, self.params)

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Scalar]]:
        """Stored constants ``{(i, j): {k: c_ij^k}}`` for ``i < j``."""
        return {key: dict(v) for key, v in self._c.items()}

    def bracket_basis(self, i: int, j: int) -> dict[int, Scalar]:
        if i < j:
            return self._c.get((i, j), {})
        if i > j:
            return {k: -v for k, v in self._c.get((j, i), {}).items()}
        return {}

    def bracket_sparse(self, x: dict, y: dict) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                ab = a * b
                for k, c in self.bracket_basis(i, j).items():
                    _add_into(out, k, ab * c)
        return out

    def is_abelian(self) -> bool:
        return not self._c

    # -- transformations ------------------------------------------------------
    def substitute(self, bindings) -> "LieAlgebra":
        bindings = {k: v for k, v in dict(bindings).items() if k in self.params}
        rest = tuple(p for p in self.params if p not in bindings)
        structure = {
            (i, j): {k: v.substitute(bindings) for k, v in terms.items()}
            for (i, j), terms in self._c.items()
        }
        return LieAlgebra(self.basis, structure, rest)

    def renamed(self, basis) -> "LieAlgebra":
        alg = LieAlgebra(basis, None, self.params)
        alg._c = {key: dict(v) for key, v in self._c.items()}
        return alg

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.basis == other.basis and self.params == other.params and self._c == other._c

    def __hash__(self):
        return hash((self.basis, self.params))

    def __repr__(self):
        return f"<LieAlgebra dim={self.dim} basis={self.basis} params={self.params}>"

    def describe(self) -> list[str]:
        lines = []
        for (i, j), terms in sorted(self._c.items()):
            rhs = format_vector(terms, self.basis)
            lines.append(f"[{self.basis[i]}, {self.basis[j]}] = {rhs}")
        return lines


def coefficient_prefix(c) -> str:
    """``c`` rendered as a left factor: parenthesized if it is a sum or a bare quotient."""
    e = c.to_expr()
    depth = 0
    for ch in e:
        depth += (ch == "(") - (ch == ")")
        if depth == 0 and (ch == " " or ch == "/"):
            return f"({e})"
    return e


def format_vector(v: dict, names) -> str:
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        c = v[k]
        if c == 1:
            parts.append(names[k])
        elif c == -1:
            parts.append(f"-{names[k]}")
        else:
            parts.append(f"{coefficient_prefix(c)}*{names[k]}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class SubalgebraSplitting:
    """An ordered partition ``g = h + t`` of basis indices."""

    h: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(self.h))
        object.__setattr__(self, "t", tuple(self.t))
        if set(self.h) & set(self.t):
            raise ValueError("h and t blocks overlap")
        if len(set(self.h)) != len(self.h) or len(set(self.t)) != len(self.t):
            raise ValueError("repeated index in splitting")

    @classmethod
    def from_names(cls, alg: LieAlgebra, h, t=None) -> "SubalgebraSplitting":
        hi = tuple(alg.index(g) for g in h)
        if t is None:
            ti = tuple(i for i in range(alg.dim) if i not in hi)
        else:
            ti = tuple(alg.index(g) for g in t)
        s = cls(hi, ti)
        s.validate(alg)
        return s

    def validate(self, alg: LieAlgebra):
        if sorted(self.h + self.t) != list(range(alg.dim)):
            raise ValueError(f"splitting {self} does not cover the basis of dimension {alg.dim}")

    def block_of(self, i: int) -> str:
        return "h" if i in self.h else "t"


def _dense_to_sparse(alg, x):
    if len(x) != alg.dim:
        raise ValueError(f"vector of length {len(x)} for algebra of dimension {alg.dim}")
    return {i: alg._scalar(v) for i, v in enumerate(x) if v}


def _sparse_to_dense(alg, v):
    return [v.get(i, alg.zero()) for i in range(alg.dim)]


def bracket(alg: LieAlgebra, x, y) -> list[Scalar]:
    """``[x, y]`` for coordinate vectors ``x`` and ``y``."""
    return _sparse_to_dense(alg, alg.bracket_sparse(_dense_to_sparse(alg, x), _dense_to_sparse(alg, y)))


def jacobi_defect(alg: LieAlgebra) -> dict[tuple[int, int, int], dict[int, Scalar]]:
    """Nonzero components of ``[[X_i,X_j],X_k] + cyclic`` for ``i < j < k``."""
    out = {}
    for i, j, k in combinations(range(alg.dim), 3):
        acc: dict[int, Scalar] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            ab = alg.bracket_basis(a, b)
            if ab:
                for m, v in alg.bracket_sparse(ab, {c: Scalar(1, alg.params)}).items():
                    _add_into(acc, m, v)
        if acc:
            out[(i, j, k)] = acc
    return out


def is_subalgebra(alg: LieAlgebra, indices) -> bool:
    idx = {alg.index(i) for i in indices}
    for i, j in combinations(sorted(idx), 2):
        if any(k not in idx for k in alg.bracket_basis(i, j)):
            return False
    return True


def _require_subalgebra(alg, s: SubalgebraSplitting):
    s.validate(alg)
    if not is_subalgebra(alg, s.h):
        names = [alg.basis[i] for i in s.h]
        raise NotASubalgebra(f"span{{{', '.join(names)}}} is not closed under the bracket")


def reductive_check(alg: LieAlgebra, s: SubalgebraSplitting) -> bool:
    """True iff ``[h, t]`` has no h-component."""
    _require_subalgebra(alg, s)
    h = set(s.h)
    return not any(k in h for i in s.h for j in s.t for k in alg.bracket_basis(i, j))


def symmetric_check(alg: LieAlgebra, s: SubalgebraSplitting) -> bool:
    """True iff reductive and ``[t, t]`` has no t-component."""
    if not reductive_check(alg, s):
        return False
    t = set(s.t)
    return not any(k in t for i, j in combinations(s.t, 2) for k in alg.bracket_basis(i, j))


def adjoint_matrix(alg: LieAlgebra, i) -> list[list[Scalar]]:
    """Matrix of ``ad_{X_i}``; column ``j`` holds the coordinates of ``[X_i, X_j]``."""
    i = alg.index(i)
    m = [[alg.zero() for _ in range(alg.dim)] for _ in range(alg.dim)]
    for j in range(alg.dim):
        for k, v in alg.bracket_basis(i, j).items():
            m[k][j] = v
    return m
