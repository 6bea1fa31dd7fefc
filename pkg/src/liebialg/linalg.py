"""Row reduction over the fraction field of the parameter ring.

Matrices are lists of sparse rows ``{column: Scalar}``.  Pivoting is
deterministic: columns are scanned left to right; among candidate rows a
constant pivot is preferred, otherwise the first candidate is taken.  Every
non-constant pivot is recorded, because the reduction is only valid where it
does not vanish (a *genericity condition*).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .lie import _add_into
from .scalar import Scalar

__all__ = ["Reduction", "rref", "nullspace", "determinant"]


@dataclass
class Reduction:
    rows: list[dict[int, Scalar]]
    pivots: list[int]
    ncols: int
    params: tuple[str, ...] = ()
    genericity: list[Scalar] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self) -> list[dict[int, Scalar]]:
        """Basis of the kernel, one vector per free column with that entry 1."""
        piv = set(self.pivots)
        basis = []
        for f in range(self.ncols):
            if f in piv:
                continue
            v = {f: Scalar(1, self.params)}
            for p, row in zip(self.pivots, self.rows):
                c = row.get(f)
                if c:
                    v[p] = -c
            basis.append(v)
        return basis


def _pivot_key(v: Scalar):
    return 0 if v.is_constant() else 1


def rref(rows, ncols: int, params=()) -> Reduction:
    """Reduced row echelon form; zero rows are dropped."""
    work = [dict(r) for r in rows if r]
    out_rows: list[dict[int, Scalar]] = []
    pivots: list[int] = []
    genericity: list[Scalar] = []
    for col in range(ncols):
        cands = [k for k, r in enumerate(work) if col in r]
        if not cands:
            continue
        best = min(cands, key=lambda k: (_pivot_key(work[k][col]), k))
        prow = work.pop(best)
        pv = prow[col]
        if not pv.is_constant():
            g = pv.numerator().monic()
            if not g.is_constant() and g not in genericity:
                genericity.append(g)
        if pv != 1:
            inv = 1 / pv
            prow = {c: v * inv for c, v in prow.items()}
        for r in work + out_rows:
            f = r.get(col)
            if f:
                for c, v in prow.items():
                    _add_into(r, c, -(f * v))
        work = [r for r in work if r]
        out_rows.append(prow)
        pivots.append(col)
    return Reduction(out_rows, pivots, ncols, tuple(params), genericity)


def nullspace(rows, ncols: int, params=()) -> tuple[list[dict[int, Scalar]], Reduction]:
    red = rref(rows, ncols, params)
    return red.nullspace(), red


def determinant(m) -> Scalar:
    """Determinant of a square matrix of Scalars by fraction-field elimination."""
    n = len(m)
    a = [list(row) for row in m]
    if n == 0:
        raise ValueError("empty matrix")
    det = Scalar(1, a[0][0].params)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Scalar(0, det.params)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                q = f / p
                a[r] = [x - q * y for x, y in zip(a[r], a[col])]
    return det
