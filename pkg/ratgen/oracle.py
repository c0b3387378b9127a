'''Independent verification of a generating function.

Two ways to get the solution table on ``[0, N1] x [0, N2]``:

  - ``expand_table``: iterate the difference equation, solved for the corner
    coefficient, from the initial data
  - ``expand_ratfunc``: expand a rational function in negative powers

and ``compare_tables`` to check that they agree exactly.
'''
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from .arith import ZERO
from .errors import NotExpandable, TableSizeMismatch
from .poly import Poly2
from .recurrence import resolve


__all__ = ['SeriesTable', 'TableMismatch', 'expand_table', 'expand_ratfunc',
           'compare_tables', 'equation_defects']

logger = logging.getLogger(__name__)


class SeriesTable(object):
    '''
    Values ``f(x1, x2)`` for ``0 <= x1 <= N1`` and ``0 <= x2 <= N2``

    ``values`` is a numpy object array of Rationals indexed ``[x1, x2]``
    '''
    def __init__(self, values):
        self.values = np.asarray(values, dtype=object)

    @classmethod
    def zeros(cls, size):
        n1, n2 = size
        values = np.empty((n1 + 1, n2 + 1), dtype=object)
        values.fill(ZERO)
        return cls(values)

    @property
    def size(self):
        n1, n2 = self.values.shape
        return (n1 - 1, n2 - 1)

    def __getitem__(self, point):
        return self.values[point[0], point[1]]

    def __eq__(self, other):
        if not isinstance(other, SeriesTable):
            return NotImplemented
        return compare_tables(self, other) is None

    __hash__ = None

    def to_frame(self):
        '''
        DataFrame with the origin in the lower-left corner: one row per
        ``x2`` (highest first), one column per ``x1``
        '''
        n1, n2 = self.size
        cells = [[str(self.values[x1, x2]) for x1 in range(n1 + 1)]
                 for x2 in range(n2, -1, -1)]
        return pd.DataFrame(cells, index=pd.Index(range(n2, -1, -1),
                                                  name='x2'),
                            columns=pd.Index(range(n1 + 1), name='x1'))

    def render(self, labels=False):
        return self.to_frame().to_string(header=labels, index=labels)


@dataclass(frozen=True)
class TableMismatch:
    '''First point where two tables differ'''
    point: tuple
    left: object
    right: object

    def __str__(self):
        return 'mismatch at (%d,%d): %s != %s' % (
            self.point[0], self.point[1], self.left, self.right)


def expand_table(problem, size, data=None):
    '''
    Solution table by direct iteration

    Formula:
      - f(y + m) = -(1 / c_m) * sum(c_a * f(y + a) for a != m)

    Points of the initial data set come from the initial data. Every
    ``y + a`` precedes ``y + m`` in row-major order, so a single row-major
    pass fills the grid
    '''
    if data is None:
        data = resolve(problem)
    eq = problem.equation
    m1, m2 = eq.m
    cm = eq.corner
    stencil = [(a, c) for a, c in eq.coeffs.items() if a != eq.m]

    table = SeriesTable.zeros(size)
    f = table.values
    n1, n2 = size
    for x1 in range(n1 + 1):
        for x2 in range(n2 + 1):
            if x1 < m1 or x2 < m2:
                f[x1, x2] = data.phi_at((x1, x2))
                continue
            y1, y2 = x1 - m1, x2 - m2
            acc = ZERO
            for (a1, a2), c in stencil:
                acc += c * f[y1 + a1, y2 + a2]
            f[x1, x2] = -acc / cm

    return table


def _power_series(numerator, denominator, size):
    # coefficients s(x) of numerator / denominator, denominator(0,0) != 0
    n1, n2 = size
    b0 = denominator.coefficient((0, 0))
    tail = [(e, c) for e, c in denominator.terms() if e != (0, 0)]

    s = SeriesTable.zeros(size).values
    for x1 in range(n1 + 1):
        for x2 in range(n2 + 1):
            acc = numerator.coefficient((x1, x2))
            for (b1, b2), c in tail:
                if b1 <= x1 and b2 <= x2:
                    acc -= c * s[x1 - b1, x2 - b2]
            s[x1, x2] = acc / b0
    return s


def expand_ratfunc(func, size):
    '''
    Table of ``f`` for ``F(z) = sum(f(x) / z^(x + 1))``

    With ``D`` the componentwise largest exponent of numerator ``A`` and
    denominator ``B``, ``F(1/u) / (u1 * u2) = A~ / (u1 * u2 * B~)`` with the
    reversals ``A~``, ``B~`` at cap ``D``. Raises ``NotExpandable`` when
    ``B~`` vanishes at the origin or ``F`` has terms in non-negative powers
    '''
    A, B = func.numerator, func.denominator
    if not A:
        return SeriesTable.zeros(size)

    a1, a2 = A.max_exponents()
    b1, b2 = B.max_exponents()
    cap = (max(a1, b1), max(a2, b2))
    A_rev = A.reverse(cap)
    B_rev = B.reverse(cap)
    if not B_rev.coefficient((0, 0)):
        raise NotExpandable('%s has no expansion in negative powers: the '
                            'reversed denominator vanishes at the origin' %
                            func.format())

    # A~ = u1*u2 * B~ * S for a power series S, so a term of A~ off the
    # divisible part means F has a term in a non-negative power
    if min(A_rev.min_exponents()) < 1:
        raise NotExpandable('%s has terms in non-negative powers' %
                            func.format())

    A_rev = A_rev.divexact(Poly2.monomial((1, 1)))
    return SeriesTable(_power_series(A_rev, B_rev, size))


def compare_tables(a, b):
    '''``None`` when ``a`` and ``b`` agree, else the first mismatch in
    row-major order'''
    if a.size != b.size:
        raise TableSizeMismatch('table sizes differ: %r vs %r' %
                                (a.size, b.size))
    diff = np.argwhere((a.values != b.values).astype(bool))
    if not len(diff):
        return None
    x1, x2 = (int(v) for v in diff[0])
    return TableMismatch((x1, x2), a.values[x1, x2], b.values[x1, x2])


def equation_defects(eq, table):
    '''Points ``x >= m`` of ``table`` at which the difference equation does
    not hold'''
    m1, m2 = eq.m
    n1, n2 = table.size
    f = table.values
    out = []
    for x1 in range(m1, n1 + 1):
        for x2 in range(m2, n2 + 1):
            y1, y2 = x1 - m1, x2 - m2
            acc = ZERO
            for (a1, a2), c in eq.coeffs.items():
                acc += c * f[y1 + a1, y2 + a2]
            if acc:
                out.append((x1, x2))
    return out
