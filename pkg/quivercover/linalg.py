"""Exact row reduction over the rationals.

Vectors are dicts ``{column: Fraction}``; ``columns`` lists the basis in
pivot priority order (the first column is pivoted first).
"""

from fractions import Fraction

import sympy


def echelon(vectors, columns):
    """Reduced row echelon form of the span of ``vectors``.

    Every returned row has pivot coefficient 1 on its first nonzero column and
    no other row has a nonzero entry in that column.
    """
    rows = [dict((k, Fraction(v)) for k, v in vec.items() if v != 0) for vec in vectors]
    rows = [r for r in rows if r]
    pivots = []
    for col in columns:
        at = next((i for i, r in enumerate(rows) if r.get(col, 0) != 0), None)
        if at is None:
            continue
        row = rows.pop(at)
        lead = row[col]
        row = {k: v / lead for k, v in row.items()}
        for r in rows:
            _eliminate(r, row, col)
        for r in pivots:
            _eliminate(r, row, col)
        pivots.append(row)
        rows = [r for r in rows if r]
    return pivots


def _eliminate(target, row, col):
    f = target.get(col, 0)
    if f == 0:
        return
    for k, v in row.items():
        x = target.get(k, 0) - f * v
        if x == 0:
            target.pop(k, None)
        else:
            target[k] = x


def reduce(vector, basis, columns):
    """Reduce ``vector`` by rows in echelon form.

    ``basis`` maps pivot column to row. Returns ``(remainder, coordinates)``
    where ``coordinates`` maps pivot column to the multiple subtracted.
    """
    rest = {k: Fraction(v) for k, v in vector.items() if v != 0}
    coords = {}
    for col in columns:
        row = basis.get(col)
        if row is None:
            continue
        f = rest.get(col, 0)
        if f == 0:
            continue
        coords[col] = f
        _eliminate(rest, row, col)
    return rest, coords


def left_kernel(rows, columns):
    """Coefficient vectors ``λ`` with ``Σ λ_i rows[i]`` vanishing on ``columns``."""
    if not rows:
        return []
    if not columns:
        return [[Fraction(int(i == j)) for j in range(len(rows))] for i in range(len(rows))]
    m = sympy.Matrix([[_rational(r.get(c, 0)) for c in columns] for r in rows])
    kernel = m.T.nullspace()
    return [[Fraction(int(x.p), int(x.q)) for x in vec] for vec in kernel]


def _rational(x):
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)
