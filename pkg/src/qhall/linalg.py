"""Exact linear algebra over Q on sparse coordinate dicts (via sympy's DomainMatrix)."""

from __future__ import annotations

from typing import Dict, Hashable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _matrix(rows: Sequence[Dict[Hashable, object]], columns: Sequence[Hashable]) -> DomainMatrix:
    col = {c: k for k, c in enumerate(columns)}
    dense = []
    for r in rows:
        line = [QQ(0)] * len(columns)
        for key, v in r.items():
            line[col[key]] = QQ(v.numerator, v.denominator) if hasattr(v, "denominator") else QQ(v)
        dense.append(line)
    return DomainMatrix(dense, (len(rows), len(columns)), QQ)


def rank(rows: Sequence[Dict[Hashable, object]], columns: Sequence[Hashable]) -> int:
    rows = [r for r in rows if r]
    if not rows or not columns:
        return 0
    return _matrix(rows, columns).rank()


def rref(rows: Sequence[Dict[Hashable, object]], columns: Sequence[Hashable]) -> Tuple[List[Dict[Hashable, object]], List[Hashable]]:
    """Reduced row echelon form; pivots are chosen left to right in ``columns``.

    Returns the nonzero reduced rows (as sparse dicts with Fraction values)
    and the pivot column keys.
    """
    from fractions import Fraction

    rows = [r for r in rows if r]
    if not rows or not columns:
        return [], []
    m, pivots = _matrix(rows, columns).rref()
    out = []
    dense = m.to_list()
    for k in range(len(pivots)):
        line = {}
        for c, v in zip(columns, dense[k]):
            if v:
                f = Fraction(int(v.numerator), int(v.denominator))
                line[c] = f.numerator if f.denominator == 1 else f
        out.append(line)
    return out, [columns[p] for p in pivots]
