"""Antisymmetric 2- and 3-tensors over a Lie algebra basis.

Wedge convention: ``x ^ y = x (x) y - y (x) x`` with no factor 1/2, and
likewise ``x ^ y ^ z`` is the signed sum over all six orderings.  A bivector
``sum_{i<j} b^{ij} X_i ^ X_j`` therefore has full-tensor components
``r^{ij} = b^{ij}``, ``r^{ji} = -b^{ij}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .lie import LieAlgebra, SubalgebraSplitting, _add_into, coefficient_prefix
from .scalar import Scalar

__all__ = [
    "Bivector",
    "Trivector",
    "BlockProfile",
    "AntisymmetryError",
    "wedge",
    "ad_on_bivector",
    "block_profile",
    "block_components",
    "schouten_square",
    "schouten_tensor",
    "ad_invariance_defect",
    "ad_on_trivector",
]


class AntisymmetryError(AssertionError):
    """An intermediate tensor that should be antisymmetric is not (internal bug)."""


def _perm_sign(idx):
    """Sign of the sorting permutation of distinct indices, 0 on repeats."""
    idx = list(idx)
    sign = 1
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] == idx[b]:
                return 0
            if idx[a] > idx[b]:
                sign = -sign
    return sign


class _Antisym:
    rank = 0
    __slots__ = ("params", "components")

    def __init__(self, components=None, params=()):
        self.params = tuple(params)
        self.components: dict[tuple[int, ...], Scalar] = {}
        for key, v in (components or {}).items():
            self.add_term(key, v)

    def add_term(self, key, v):
        """Accumulate ``v * X_k1 ^ ... ^ X_kn`` for any index order (mutating)."""
        if not isinstance(v, Scalar):
            v = Scalar(v, self.params)
        elif v.params != self.params:
            v = v.extend(self.params)
        sign = _perm_sign(key)
        if sign:
            _add_into(self.components, tuple(sorted(key)), v if sign > 0 else -v)

    @classmethod
    def _from_clean(cls, comps, params):
        out = cls.__new__(cls)
        out.params = params
        out.components = comps
        return out

    def __getitem__(self, key):
        sign = _perm_sign(key)
        if not sign:
            return Scalar(0, self.params)
        v = self.components.get(tuple(sorted(key)))
        if v is None:
            return Scalar(0, self.params)
        return v if sign > 0 else -v

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.components)
        for k, v in other.components.items():
            _add_into(out, k, v)
        return self._from_clean(out, self.params)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._from_clean({k: -v for k, v in self.components.items()}, self.params)

    def scaled(self, s) -> "_Antisym":
        if not isinstance(s, Scalar):
            s = Scalar(s, self.params)
        if not s:
            return self._from_clean({}, self.params)
        return self._from_clean({k: v * s for k, v in self.components.items()}, self.params)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components))

    def substitute(self, bindings):
        bindings = {k: v for k, v in dict(bindings).items() if k in self.params}
        rest = tuple(p for p in self.params if p not in bindings)
        return type(self)({k: v.substitute(bindings) for k, v in self.components.items()}, rest)

    def extend(self, params):
        return type(self)({k: v.extend(params) for k, v in self.components.items()}, params)

    def items(self):
        return sorted(self.components.items())

    def format(self, names) -> str:
        if not self.components:
            return "0"
        parts = []
        for key, c in self.items():
            w = " ^ ".join(names[i] for i in key)
            if c == 1:
                parts.append(w)
            elif c == -1:
                parts.append(f"-{w}")
            else:
                parts.append(f"{coefficient_prefix(c)}*{w}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({ {k: str(v) for k, v in self.items()} })"


class Bivector(_Antisym):
    """``sum_{i<j} b^{ij} X_i ^ X_j`` stored as ``{(i, j): b^{ij}}``."""

    rank = 2
    __slots__ = ()

    @classmethod
    def from_names(cls, alg: LieAlgebra, terms) -> "Bivector":
        """Build from ``[(name_a, name_b, coeff), ...]`` meaning ``coeff * a ^ b``."""
        b = cls(None, alg.params)
        for x, y, c in terms:
            b.add_term((alg.index(x), alg.index(y)), c)
        return b


class Trivector(_Antisym):
    """``sum_{i<j<k} t^{ijk} X_i ^ X_j ^ X_k`` stored as ``{(i, j, k): t^{ijk}}``."""

    rank = 3
    __slots__ = ()


def wedge(x: dict, y: dict, params=()) -> Bivector:
    """``x ^ y`` for sparse vectors."""
    b = Bivector(None, params)
    for i, a in x.items():
        for j, c in y.items():
            if i != j:
                b.add_term((i, j), a * c)
    return b


def ad_on_bivector(alg: LieAlgebra, i, b: Bivector) -> Bivector:
    """``[X_i (x) 1 + 1 (x) X_i, b]``, the adjoint action extended to bivectors."""
    i = alg.index(i)
    out = Bivector(None, alg.params)
    for (a, c), v in b.components.items():
        for m, s in alg.bracket_basis(i, a).items():
            out.add_term((m, c), v * s)
        for m, s in alg.bracket_basis(i, c).items():
            out.add_term((a, m), v * s)
    return out


def ad_on_trivector(alg: LieAlgebra, i, t: Trivector) -> Trivector:
    i = alg.index(i)
    out = Trivector(None, alg.params)
    for (a, b, c), v in t.components.items():
        for m, s in alg.bracket_basis(i, a).items():
            out.add_term((m, b, c), v * s)
        for m, s in alg.bracket_basis(i, b).items():
            out.add_term((a, m, c), v * s)
        for m, s in alg.bracket_basis(i, c).items():
            out.add_term((a, b, m), v * s)
    return out


@dataclass(frozen=True)
class BlockProfile:
    hh: bool
    ht: bool
    tt: bool


def _block(key, s: SubalgebraSplitting) -> str:
    h = set(s.h)
    n = sum(1 for i in key if i in h)
    return "hh" if n == 2 else "ht" if n == 1 else "tt"


def block_components(b: Bivector, s: SubalgebraSplitting) -> dict[str, dict]:
    """Split ``b`` into its h^h, h^t and t^t parts."""
    out = {"hh": {}, "ht": {}, "tt": {}}
    for key, v in b.components.items():
        out[_block(key, s)][key] = v
    return out


def block_profile(b: Bivector, s: SubalgebraSplitting) -> BlockProfile:
    blocks = block_components(b, s)
    return BlockProfile(bool(blocks["hh"]), bool(blocks["ht"]), bool(blocks["tt"]))


def schouten_tensor(alg: LieAlgebra, r: Bivector) -> dict[tuple[int, int, int], Scalar]:
    """``[r12, r13] + [r12, r23] + [r13, r23]`` as a raw 3-tensor (not antisymmetrized)."""
    full = {}
    for (i, j), v in r.components.items():
        full[(i, j)] = v
        full[(j, i)] = -v
    T: dict[tuple[int, int, int], Scalar] = {}
    for (i, j), a in full.items():
        for (k, l), b in full.items():
            ab = a * b
            for m, c in alg.bracket_basis(i, k).items():
                _add_into(T, (m, j, l), ab * c)
            for m, c in alg.bracket_basis(j, k).items():
                _add_into(T, (i, m, l), ab * c)
            for m, c in alg.bracket_basis(j, l).items():
                _add_into(T, (i, k, m), ab * c)
    return T


def schouten_square(alg: LieAlgebra, r: Bivector) -> Trivector:
    """``[[r, r]]`` as a trivector; checks that the raw expansion is antisymmetric."""
    T = schouten_tensor(alg, r)
    zero = Scalar(0, alg.params)
    for key, v in T.items():
        for perm in permutations(range(3)):
            pk = tuple(key[p] for p in perm)
            sign = _perm_sign(perm)
            if T.get(pk, zero) != (v if sign > 0 else -v):
                raise AntisymmetryError(f"Schouten expansion not antisymmetric at {key} vs {pk}")
    comps = {k: v for k, v in T.items() if k[0] < k[1] < k[2]}
    return Trivector._from_clean(comps, alg.params)


def ad_invariance_defect(alg: LieAlgebra, t: Trivector) -> dict[tuple[int, int, int, int], Scalar]:
    """Nonzero components ``(i, a, b, c)`` of ``ad_{X_i} t``; empty iff t is ad-invariant."""
    out = {}
    for i in range(alg.dim):
        for key, v in ad_on_trivector(alg, i, t).components.items():
            out[(i,) + key] = v
    return out
