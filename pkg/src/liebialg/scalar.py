"""Exact scalars: rational functions over QQ in a declared list of named parameters.

Every structure constant, cocommutator coefficient and tensor component in the
package is a :class:`Scalar`.  A scalar is stored as a pair of polynomials
(numerator, denominator) over QQ in graded-lex order, reduced so that

* the gcd of numerator and denominator is 1,
* the denominator is monic (constant denominators are folded into the
  numerator, so polynomial values always carry denominator 1),
* zero is ``0/1``.

Equal values therefore have identical representations, and the zero test is a
plain emptiness check.  Polynomials are sympy ``PolyElement`` objects; no
factorization is ever needed, only gcd.

Parameters are identifier strings.  The *context* of a scalar is the ordered
tuple of names it lives over.  Mixing two different nonempty contexts raises
:class:`ParameterMismatch`; scalars over the empty context (plain rationals) are
promoted on demand.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

__all__ = [
    "Scalar",
    "ParameterMismatch",
    "SubstitutionError",
    "ring_for",
    "check_parameter_names",
    "as_fraction",
]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParameterMismatch(ValueError):
    """Raised when scalars over different parameter contexts are combined."""


class SubstitutionError(ZeroDivisionError):
    """Raised when a substitution sends a denominator to zero."""


def check_parameter_names(names) -> tuple[str, ...]:
    names = tuple(names)
    for n in names:
        if not isinstance(n, str) or not _IDENT.match(n):
            raise ValueError(f"invalid parameter name {n!r}")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate parameter names in {names}")
    return names


@lru_cache(maxsize=None)
def ring_for(params: tuple[str, ...]) -> PolyRing:
    # sympy needs at least one generator; the empty context uses a hidden
    # dummy that never appears in any value.
    syms = params if params else ("_const",)
    return PolyRing(syms, QQ, grlex)


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    if isinstance(q, Rational):
        return Fraction(int(q.numerator), int(q.denominator))
    try:  # gmpy2 mpq, sympy PythonMPQ
        return Fraction(int(q.numerator), int(q.denominator))
    except AttributeError:
        raise TypeError(f"not a rational number: {q!r}") from None


def _qq(q: Fraction):
    return QQ(q.numerator, q.denominator)


def _normalize(num, den):
    if not num:
        return num, num.ring.one
    if den.is_ground:
        if den.LC != 1:
            num = num.quo_ground(den.LC)
        return num, num.ring.one
    g = num.gcd(den)
    if not g.is_ground:
        num = num.exquo(g)
        den = den.exquo(g)
    lc = den.LC
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


class Scalar:
    """An exact rational function in the parameters of ``params``.

    >>> P = ("Lambda", "z")
    >>> L, z = Scalar.param("Lambda", P), Scalar.param("z", P)
    >>> L / (1 + z) + L * z / (1 + z) == L
    True
    """

    __slots__ = ("params", "num", "den")

    def __init__(self, value=0, params=()):
        params = tuple(params)
        if isinstance(value, Scalar):
            value = value.extend(params)
            self.params, self.num, self.den = params, value.num, value.den
            return
        R = ring_for(params)
        self.params = params
        self.num = R.ground_new(_qq(as_fraction(value)))
        self.den = R.one

    # -- constructors -------------------------------------------------------
    @classmethod
    def param(cls, name: str, params) -> "Scalar":
        params = tuple(params)
        if name not in params:
            raise ParameterMismatch(f"undeclared parameter {name!r}")
        R = ring_for(params)
        return cls._raw(R.gens[params.index(name)], R.one, params)

    @classmethod
    def from_polys(cls, num, den, params) -> "Scalar":
        if not den:
            raise ZeroDivisionError("zero denominator")
        num, den = _normalize(num, den)
        return cls._raw(num, den, tuple(params))

    @classmethod
    def _raw(cls, num, den, params) -> "Scalar":
        s = object.__new__(cls)
        s.params = params
        s.num = num
        s.den = den
        return s

    # -- context handling ---------------------------------------------------
    def _coerce(self, other):
        """Return ``(params, other_in_params)``; ``other_in_params`` is None when *self* needs lifting."""
        if isinstance(other, Scalar):
            if other.params == self.params:
                return self.params, other
            if not other.params:
                return self.params, other.extend(self.params)
            if not self.params:
                return other.params, None
            raise ParameterMismatch(f"contexts {self.params} and {other.params} differ")
        if isinstance(other, (int, Fraction, Rational)):
            R = ring_for(self.params)
            return self.params, Scalar._raw(R.ground_new(_qq(as_fraction(other))), R.one, self.params)
        return None

    def extend(self, params) -> "Scalar":
        """Embed into a context whose names include all of ours."""
        params = tuple(params)
        if params == self.params:
            return self
        missing = [p for p in self.params if p not in params]
        if missing:
            raise ParameterMismatch(f"cannot embed: {missing} not in {params}")
        R = ring_for(params)
        if not self.params:
            return Scalar._raw(R.ground_new(self.num.LC if self.num else QQ(0)), R.one, params)
        return Scalar._raw(self.num.set_ring(R), self.den.set_ring(R), params)

    def restrict(self, params) -> "Scalar":
        """Re-express over a smaller context; the value must not use dropped names."""
        params = tuple(params)
        if params == self.params:
            return self
        used = self.free_parameters()
        if not set(used) <= set(params):
            raise ParameterMismatch(f"value uses {used}, not all in {params}")
        if not params:
            return Scalar(self.to_fraction(), ())
        R = ring_for(params)
        return Scalar._raw(self.num.set_ring(R), self.den.set_ring(R), params)

    # -- arithmetic -----------------------------------------------------------
    def _binary(self, other, op, reflected=False):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        params, o = c
        a = self if o is not None else self.extend(params)
        b = o if o is not None else other
        if reflected:
            a, b = b, a
        return op(a, b, params)

    @staticmethod
    def _add(a, b, params, sign=1):
        bn = b.num if sign > 0 else -b.num
        if a.den == b.den:
            if a.den.is_ground:
                return Scalar._raw(a.num + bn, a.den, params)
            n, d = _normalize(a.num + bn, a.den)
        else:
            n, d = _normalize(a.num * b.den + bn * a.den, a.den * b.den)
        return Scalar._raw(n, d, params)

    @staticmethod
    def _mul(a, b, params):
        if a.den.is_ground and b.den.is_ground:
            return Scalar._raw(a.num * b.num, a.den, params)
        n, d = _normalize(a.num * b.num, a.den * b.den)
        return Scalar._raw(n, d, params)

    @staticmethod
    def _div(a, b, params):
        if not b.num:
            raise ZeroDivisionError("division by the zero scalar")
        n, d = _normalize(a.num * b.den, a.den * b.num)
        return Scalar._raw(n, d, params)

    def __add__(self, other):
        return self._binary(other, Scalar._add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b, p: Scalar._add(a, b, p, -1))

    def __rsub__(self, other):
        return self._binary(other, lambda a, b, p: Scalar._add(a, b, p, -1), reflected=True)

    def __mul__(self, other):
        return self._binary(other, Scalar._mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, Scalar._div)

    def __rtruediv__(self, other):
        return self._binary(other, Scalar._div, reflected=True)

    def __neg__(self):
        return Scalar._raw(-self.num, self.den, self.params)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("zero to a negative power")
            n, d = _normalize(self.den**-n, self.num**-n)
            return Scalar._raw(n, d, self.params)
        if n == 0:
            return Scalar(1, self.params)  # including 0^0, as in Python and sympy
        return Scalar._raw(self.num**n, self.den**n, self.params)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def __eq__(self, other):
        if isinstance(other, Scalar) and other.params == self.params:
            return self.num == other.num and self.den == other.den
        try:
            c = self._coerce(other)
        except ParameterMismatch:
            return False
        if c is None:
            return NotImplemented
        params, o = c
        a = self if o is not None else self.extend(params)
        b = o if o is not None else other
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.to_fraction())
        # PolyElement hashes are not stable across equal values; hash the term sets
        return hash((self.params, frozenset(self.num.items()), frozenset(self.den.items())))

    # -- inspection -----------------------------------------------------------
    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return as_fraction(self.num.LC) if self.num else Fraction(0)

    def _terms(self, poly):
        n = len(self.params)
        return {tuple(m[:n]): as_fraction(c) for m, c in poly.terms()}

    def numerator_terms(self) -> dict[tuple[int, ...], Fraction]:
        return self._terms(self.num)

    def denominator_terms(self) -> dict[tuple[int, ...], Fraction]:
        return self._terms(self.den)

    def numerator(self) -> "Scalar":
        return Scalar._raw(self.num, self.num.ring.one, self.params)

    def monic(self) -> "Scalar":
        """Scale by a rational so the numerator's leading coefficient is 1."""
        if not self.num:
            return self
        return Scalar._raw(self.num.quo_ground(self.num.LC), self.den, self.params)

    def denominator(self) -> "Scalar":
        return Scalar._raw(self.den, self.den.ring.one, self.params)

    def free_parameters(self) -> tuple[str, ...]:
        used = set()
        for poly in (self.num, self.den):
            for m in poly.monoms():
                used.update(i for i, e in enumerate(m) if e)
        return tuple(p for i, p in enumerate(self.params) if i in used)

    def degree(self) -> int:
        """Total degree of numerator plus denominator."""
        def deg(p):
            return max((sum(m) for m in p.monoms()), default=0)
        return deg(self.num) + deg(self.den)

    # -- substitution ---------------------------------------------------------
    def substitute(self, bindings) -> "Scalar":
        """Bind some parameters to rationals; the result lives over the rest.

        Raises :class:`SubstitutionError` if the denominator vanishes.
        """
        bindings = {k: as_fraction(v) for k, v in dict(bindings).items()}
        for k in bindings:
            if k not in self.params:
                raise ParameterMismatch(f"cannot bind undeclared parameter {k!r}")
        if not bindings:
            return self
        rest = tuple(p for p in self.params if p not in bindings)
        R = self.num.ring
        pairs = [(R.gens[self.params.index(k)], _qq(q)) for k, q in bindings.items()]
        num = self.num.subs(pairs)
        den = self.den.subs(pairs)
        if not den:
            raise SubstitutionError(
                f"substituting {', '.join(f'{k}={v}' for k, v in bindings.items())} "
                f"makes the denominator of {self} vanish"
            )
        R2 = ring_for(rest)
        num, den = _normalize(num.set_ring(R2), den.set_ring(R2))
        return Scalar._raw(num, den, rest)

    def evaluate(self, bindings) -> Fraction:
        s = self.substitute({k: v for k, v in dict(bindings).items() if k in self.params})
        if s.params:
            raise ValueError(f"parameters {s.params} left unbound")
        return s.to_fraction()

    # -- rendering ------------------------------------------------------------
    def to_expr(self) -> str:
        """Render in the coefficient grammar; re-parsing gives an equal scalar."""
        num = _render_poly(self.numerator_terms(), self.params)
        if self.den.is_ground:
            return num
        den = _render_poly(self.denominator_terms(), self.params)
        if len(self.num.terms()) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __str__(self):
        return self.to_expr()

    def __repr__(self):
        return f"Scalar({self.to_expr()!r}, params={self.params})"


def _render_poly(terms: dict, params) -> str:
    if not terms:
        return "0"
    out = []
    for mono in sorted(terms, key=lambda m: (sum(m), m), reverse=True):
        c = terms[mono]
        factors = []
        for name, e in zip(params, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        cs = str(mag.numerator) if mag.denominator == 1 else f"({mag.numerator}/{mag.denominator})"
        if factors:
            body = "*".join(factors) if mag == 1 else cs + "*" + "*".join(factors)
        else:
            body = cs
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
