"""Problem documents: the JSON input format and the coefficient-expression parser.

A document looks like::

    {
      "parameters": ["Lambda", "z"],
      "basis": ["P0", "P1", "K1"],
      "brackets": [{"x": "P0", "y": "K1", "terms": [{"gen": "P1", "coeff": "-1"}]}],
      "r": [{"x": "K1", "y": "P1", "coeff": "z"}],
      "delta": [{"gen": "P1", "terms": [{"a": "P1", "b": "P0", "coeff": "z"}]}],
      "splitting": {"h": ["K1"], "t": ["P0", "P1"]},
      "substitute": {"Lambda": "0"},
      "support": [["K1", "P1"]]
    }

Only ``basis`` is required.  ``r`` and ``delta`` are mutually exclusive.
Coefficients are strings in the expression grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENT | '(' expr ')'

Integer literals may be written as JSON numbers as well.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .bialgebra import Cocommutator, coboundary_cocommutator
from .lie import LieAlgebra, SubalgebraSplitting, format_vector, jacobi_defect
from .scalar import Scalar, check_parameter_names
from .tensor import Bivector

__all__ = [
    "ProblemError",
    "ExpressionError",
    "parse_expression",
    "ProblemDocument",
    "parse_problem",
    "load_problem",
    "serialize",
    "document_from_entry",
]


class ProblemError(ValueError):
    """Invalid document; ``line``/``column`` point into the document text when known."""

    def __init__(self, message, path="", line=None, column=None, token=None):
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        self.token = token
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        elif column is not None:
            where.append(f"column {column}")
        if path:
            where.append(path)
        prefix = f"{': '.join(where)}: " if where else ""
        tok = f" (at {token!r})" if token is not None else ""
        super().__init__(f"{prefix}{message}{tok}")


class ExpressionError(ProblemError):
    """Syntax or name error inside one coefficient expression; ``column`` is 1-based in it."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == m.start() or not m.group(0).strip():
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            toks.append(("int", m.group(1), col))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionError("unexpected character", column=col, token=ch)
            toks.append((ch, ch, col))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = params
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def fail(self, msg, tok=None):
        kind, val, col = tok or self.peek()
        raise ExpressionError(msg, column=col, token=val if kind != "end" else "<end>")

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            w = self.unary()
            if op[0] == "*":
                v = v * w
            else:
                if w.is_zero():
                    self.fail("division by zero", op)
                v = v / w
        return v

    def unary(self):
        if self.peek()[0] in ("-", "+"):
            op = self.take()[0]
            v = self.unary()
            return -v if op == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[0] == "^":
            caret = self.take()
            t = self.peek()
            if t[0] == "end":
                self.fail("missing exponent after '^'", caret)
            if t[0] != "int":
                self.fail("exponent must be a nonnegative integer literal")
            self.take()
            v = v ** int(t[1])
        return v

    def atom(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            return Scalar(int(t[1]), self.params)
        if t[0] == "name":
            self.take()
            if t[1] not in self.params:
                raise ExpressionError("undeclared parameter", column=t[2], token=t[1])
            return Scalar.param(t[1], self.params)
        if t[0] == "(":
            self.take()
            v = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return v
        self.fail("expected a number, parameter or '('")


def parse_expression(text, params=()) -> Scalar:
    """Parse a coefficient expression over the parameter context *params*."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ExpressionError(f"coefficient must be a string or integer, got {type(text).__name__}")
    if isinstance(text, int):
        return Scalar(text, params)
    return _Parser(text, tuple(params)).parse()


@dataclass
class ProblemDocument:
    parameters: tuple[str, ...]
    basis: tuple[str, ...]
    brackets: dict[tuple[str, str], dict[str, Scalar]] = field(default_factory=dict)
    r: dict[tuple[str, str], Scalar] | None = None
    delta: dict[str, dict[tuple[str, str], Scalar]] | None = None
    splitting: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    substitute: dict[str, Fraction] = field(default_factory=dict)
    support: list[tuple[str, str]] | None = None

    # -- building the objects -----------------------------------------------
    def raw_algebra(self) -> LieAlgebra:
        return LieAlgebra(self.basis, self.brackets, self.parameters)

    def raw_r(self) -> Bivector | None:
        if self.r is None:
            return None
        return Bivector.from_names(self.raw_algebra(), [(a, b, c) for (a, b), c in self.r.items()])

    def algebra(self) -> LieAlgebra:
        """The Lie algebra with ``substitute`` applied."""
        return self.raw_algebra().substitute(self.substitute)

    def r_matrix(self) -> Bivector | None:
        r = self.raw_r()
        return None if r is None else r.substitute(self.substitute)

    def cocommutator(self) -> Cocommutator | None:
        alg = self.algebra()
        if self.r is not None:
            return coboundary_cocommutator(alg, self.r_matrix())
        if self.delta is not None:
            raw = self.raw_algebra()
            vals = {g: Bivector.from_names(raw, [(a, b, c) for (a, b), c in terms.items()])
                    for g, terms in self.delta.items()}
            return Cocommutator.on(raw, vals).substitute(self.substitute, algebra=alg)
        return None

    def split(self) -> SubalgebraSplitting | None:
        if self.splitting is None:
            return None
        h, t = self.splitting
        return SubalgebraSplitting.from_names(self.raw_algebra(), h, t)

    def __eq__(self, other):
        if not isinstance(other, ProblemDocument):
            return NotImplemented
        return (
            self.parameters == other.parameters
            and self.basis == other.basis
            and self.raw_algebra() == other.raw_algebra()
            and self.raw_r() == other.raw_r()
            and _norm_delta(self) == _norm_delta(other)
            and self.split() == other.split()
            and self.substitute == other.substitute
            and self.support == other.support
        )


def _norm_delta(doc):
    if doc.delta is None:
        return None
    raw = doc.raw_algebra()
    return Cocommutator.on(raw, {g: Bivector.from_names(raw, [(a, b, c) for (a, b), c in t.items()])
                                 for g, t in doc.delta.items()})


# -- parsing ----------------------------------------------------------------------

def _locator(text):
    """Map a JSON string value to its unique (line, column) in *text*, if any."""
    def locate(value):
        needle = json.dumps(value)
        first = text.find(needle)
        if first < 0 or text.find(needle, first + 1) >= 0:
            return None
        line = text.count("\n", 0, first) + 1
        col = first - (text.rfind("\n", 0, first) + 1) + 2  # skip the opening quote
        return line, col
    return locate


class _Reader:
    def __init__(self, text):
        self.locate = _locator(text)

    def err(self, msg, path, value=None, token=None):
        loc = self.locate(value) if isinstance(value, str) else None
        line, col = loc if loc else (None, None)
        return ProblemError(msg, path, line, col, token)

    def expr(self, value, params, path):
        try:
            return parse_expression(value, params)
        except ExpressionError as exc:
            loc = self.locate(value) if isinstance(value, str) else None
            line = col = None
            if loc and exc.column is not None:
                line, col = loc[0], loc[1] + exc.column - 1
            raise ExpressionError(f"{exc.message} in {value!r}", path, line, col, exc.token) from None

    def name(self, value, basis, path):
        if value not in basis:
            raise self.err("unknown generator", path, value, value)
        return value

    def obj(self, value, path, keys, required=()):
        if not isinstance(value, dict):
            raise self.err("expected an object", path)
        extra = set(value) - set(keys)
        if extra:
            raise self.err(f"unexpected keys {sorted(extra)}", path)
        for k in required:
            if k not in value:
                raise self.err(f"missing key {k!r}", path)
        return value

    def lst(self, value, path):
        if not isinstance(value, list):
            raise self.err("expected a list", path)
        return value


_TOP = ("parameters", "basis", "brackets", "r", "delta", "splitting", "substitute", "support")


def parse_problem(text: str) -> ProblemDocument:
    """Parse and validate a JSON problem document; raises :class:`ProblemError`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(exc.msg, "", exc.lineno, exc.colno) from None
    rd = _Reader(text)
    rd.obj(data, "document", _TOP, ("basis",))

    params = rd.lst(data.get("parameters", []), "parameters")
    for k, p in enumerate(params):
        if not isinstance(p, str):
            raise rd.err("parameter names must be strings", f"parameters[{k}]")
    try:
        params = check_parameter_names(params)
    except ValueError as exc:
        raise rd.err(str(exc), "parameters") from None

    basis = rd.lst(data["basis"], "basis")
    for k, g in enumerate(basis):
        if not isinstance(g, str) or not g:
            raise rd.err("generator names must be nonempty strings", f"basis[{k}]")
    if len(set(basis)) != len(basis):
        dup = next(g for g in basis if basis.count(g) > 1)
        raise rd.err("duplicate generator", "basis", dup, dup)
    basis = tuple(basis)

    brackets = {}
    seen = set()
    for k, e in enumerate(rd.lst(data.get("brackets", []), "brackets")):
        path = f"brackets[{k}]"
        rd.obj(e, path, ("x", "y", "terms"), ("x", "y"))
        x = rd.name(e["x"], basis, path + ".x")
        y = rd.name(e["y"], basis, path + ".y")
        if x == y:
            raise rd.err("bracket of a generator with itself", path, x, x)
        pair = frozenset((x, y))
        if pair in seen:
            raise rd.err(f"duplicate bracket entry for ({x}, {y})", path, y, y)
        seen.add(pair)
        terms = {}
        for q, t in enumerate(rd.lst(e.get("terms", []), path + ".terms")):
            tp = f"{path}.terms[{q}]"
            rd.obj(t, tp, ("gen", "coeff"), ("gen", "coeff"))
            g = rd.name(t["gen"], basis, tp + ".gen")
            c = rd.expr(t["coeff"], params, tp + ".coeff")
            terms[g] = terms.get(g, Scalar(0, params)) + c
        brackets[(x, y)] = {g: c for g, c in terms.items() if c}

    if "r" in data and "delta" in data:
        raise rd.err("both 'r' and 'delta' given; supply only one", "document")

    r = None
    if "r" in data:
        r = {}
        for k, e in enumerate(rd.lst(data["r"], "r")):
            path = f"r[{k}]"
            rd.obj(e, path, ("x", "y", "coeff"), ("x", "y", "coeff"))
            x = rd.name(e["x"], basis, path + ".x")
            y = rd.name(e["y"], basis, path + ".y")
            if x == y:
                raise rd.err("wedge of a generator with itself", path, x, x)
            r[(x, y)] = r.get((x, y), Scalar(0, params)) + rd.expr(e["coeff"], params, path + ".coeff")

    delta = None
    if "delta" in data:
        delta = {}
        for k, e in enumerate(rd.lst(data["delta"], "delta")):
            path = f"delta[{k}]"
            rd.obj(e, path, ("gen", "terms"), ("gen",))
            g = rd.name(e["gen"], basis, path + ".gen")
            if g in delta:
                raise rd.err("duplicate cocommutator entry", path, g, g)
            terms = {}
            for q, t in enumerate(rd.lst(e.get("terms", []), path + ".terms")):
                tp = f"{path}.terms[{q}]"
                rd.obj(t, tp, ("a", "b", "coeff"), ("a", "b", "coeff"))
                a = rd.name(t["a"], basis, tp + ".a")
                b = rd.name(t["b"], basis, tp + ".b")
                if a == b:
                    raise rd.err("wedge of a generator with itself", tp, a, a)
                terms[(a, b)] = terms.get((a, b), Scalar(0, params)) + rd.expr(t["coeff"], params, tp + ".coeff")
            delta[g] = terms

    splitting = None
    if "splitting" in data:
        sp = rd.obj(data["splitting"], "splitting", ("h", "t"), ("h",))
        h = tuple(rd.name(g, basis, f"splitting.h[{k}]") for k, g in enumerate(rd.lst(sp["h"], "splitting.h")))
        if "t" in sp:
            t = tuple(rd.name(g, basis, f"splitting.t[{k}]") for k, g in enumerate(rd.lst(sp["t"], "splitting.t")))
        else:
            t = tuple(g for g in basis if g not in h)
        if set(h) & set(t) or set(h) | set(t) != set(basis) or len(set(h)) != len(h) or len(set(t)) != len(t):
            raise rd.err("h and t must partition the basis", "splitting")
        splitting = (h, t)

    substitute = {}
    for name, v in rd.obj(data.get("substitute", {}), "substitute", [*params]).items():
        try:
            substitute[name] = Fraction(str(v).strip())
        except (ValueError, ZeroDivisionError):
            raise rd.err("substitution value must be a rational literal", f"substitute.{name}", v, v) from None

    support = None
    if "support" in data:
        support = []
        for k, e in enumerate(rd.lst(data["support"], "support")):
            if not isinstance(e, list) or len(e) != 2:
                raise rd.err("support entries are [x, y] pairs", f"support[{k}]")
            x = rd.name(e[0], basis, f"support[{k}][0]")
            y = rd.name(e[1], basis, f"support[{k}][1]")
            if x == y:
                raise rd.err("support pair with a repeated generator", f"support[{k}]", x, x)
            support.append((x, y))

    doc = ProblemDocument(params, basis, brackets, r, delta, splitting, substitute, support)
    try:
        alg = doc.raw_algebra()
    except ValueError as exc:
        raise ProblemError(str(exc), "brackets") from None
    defect = jacobi_defect(alg)
    if defect:
        (i, j, k), v = next(iter(sorted(defect.items())))
        raise ProblemError(f"brackets violate the Jacobi identity at ({basis[i]}, {basis[j]}, {basis[k]}): "
                           f"{format_vector(v, basis)}", "brackets")
    try:
        doc.algebra()
    except ValueError as exc:
        raise ProblemError(str(exc), "substitute") from None
    return doc


def load_problem(path) -> ProblemDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


# -- serialization ---------------------------------------------------------------

def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_data(doc: ProblemDocument) -> dict:
    out: dict = {"parameters": list(doc.parameters), "basis": list(doc.basis)}
    out["brackets"] = [
        {"x": x, "y": y, "terms": [{"gen": g, "coeff": c.to_expr()} for g, c in terms.items()]}
        for (x, y), terms in doc.brackets.items()
    ]
    if doc.r is not None:
        out["r"] = [{"x": x, "y": y, "coeff": c.to_expr()} for (x, y), c in doc.r.items()]
    if doc.delta is not None:
        out["delta"] = [
            {"gen": g, "terms": [{"a": a, "b": b, "coeff": c.to_expr()} for (a, b), c in terms.items()]}
            for g, terms in doc.delta.items()
        ]
    if doc.splitting is not None:
        out["splitting"] = {"h": list(doc.splitting[0]), "t": list(doc.splitting[1])}
    if doc.substitute:
        out["substitute"] = {k: _fmt_fraction(v) for k, v in doc.substitute.items()}
    if doc.support is not None:
        out["support"] = [list(p) for p in doc.support]
    return out


def serialize(doc: ProblemDocument) -> str:
    return json.dumps(to_data(doc), indent=2) + "\n"


def document_from_entry(entry, substitute=None) -> ProblemDocument:
    """The problem document describing a catalog entry (symbolic, plus optional bindings)."""
    alg = entry.algebra
    names = alg.basis
    brackets = {}
    for (i, j), terms in sorted(alg.structure_constants().items()):
        brackets[(names[i], names[j])] = {names[k]: c for k, c in sorted(terms.items())}
    r = None
    if entry.r is not None:
        r = {(names[i], names[j]): c for (i, j), c in entry.r.items()}
    split = (tuple(names[i] for i in entry.splitting.h), tuple(names[i] for i in entry.splitting.t))
    subs = {k: Fraction(v) for k, v in (substitute or {}).items()}
    return ProblemDocument(alg.params, names, brackets, r, None, split, subs)
