'''Problem data model and the initial data along the coordinate strips.

A problem is the difference equation (the coefficient box with corner ``m``)
plus one one-dimensional recurrence per line of the initial data set:

  - column lines ``x1 = xi1`` for ``xi1 < m1`` (``fixed_axis = 1``, ``x2``
    varies)
  - row lines ``x2 = xi2`` for ``xi2 < m2`` (``fixed_axis = 2``, ``x1``
    varies)

Each line carries an initial segment whose slots are either values or holes.
Holes are derived from the transverse line through the same grid point.
'''
import logging

from .arith import ZERO, to_rational
from .errors import (CoefficientOutOfBox, DegenerateDimension, DuplicateLine,
                     Inconsistent, LineOutOfRange, MissingLine, PointNotInX0,
                     ProblemError, SlotCountMismatch, Underdetermined,
                     ZeroCornerCoefficient, ZeroLeadingCoefficient)


__all__ = ['FIXED_X1', 'FIXED_X2', 'DifferenceEquation2', 'LineRecurrence',
           'InitialDataSpec', 'Problem', 'ResolvedInitialData', 'iterate',
           'extend_line', 'validate', 'resolve', 'phi_at']

logger = logging.getLogger(__name__)

(
    FIXED_X1,  # column line: x1 fixed, x2 varies
    FIXED_X2,  # row line: x2 fixed, x1 varies
) = range(1, 3)


def iterate(coeffs, segment, upto):
    '''
    Extends ``segment`` to ``upto`` entries with the recurrence whose
    coefficients ``(c_0, ..., c_mu)`` are given in increasing order

    Formula:
      - f(i) = -(1 / c_mu) * sum(c_j * f(i - mu + j) for j in 0 .. mu-1)
    '''
    mu = len(coeffs) - 1
    if len(segment) != mu:
        raise ValueError('segment has %d entries, the recurrence needs %d' %
                         (len(segment), mu))
    lead = coeffs[-1]
    if not lead:
        raise ZeroLeadingCoefficient('leading coefficient is zero')

    seq = list(segment)
    for i in range(mu, upto):
        acc = ZERO
        for j in range(mu):
            c = coeffs[j]
            if c:
                acc += c * seq[i - mu + j]
        seq.append(-acc / lead)

    return seq[:upto]


class DifferenceEquation2(object):
    '''
    The equation ``sum(c_alpha * f(x + alpha)) = 0`` over the box
    ``0 <= alpha <= m``

    Params:

      - ``m``: the dominating corner ``(m1, m2)``

      - ``coeffs``: mapping ``alpha -> c_alpha``. Absent entries are zero
    '''
    __slots__ = ('m', 'coeffs')

    def __init__(self, m, coeffs):
        self.m = (int(m[0]), int(m[1]))
        items = coeffs.items() if hasattr(coeffs, 'items') else coeffs
        self.coeffs = dict()
        for alpha, value in items:
            value = to_rational(value)
            if value:
                self.coeffs[(int(alpha[0]), int(alpha[1]))] = value

    def coefficient(self, alpha):
        return self.coeffs.get(tuple(alpha), ZERO)

    @property
    def corner(self):
        return self.coefficient(self.m)

    def scaled(self, factor):
        factor = to_rational(factor)
        return DifferenceEquation2(
            self.m, dict((a, c * factor) for a, c in self.coeffs.items()))

    def __eq__(self, other):
        if not isinstance(other, DifferenceEquation2):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __repr__(self):
        return 'DifferenceEquation2(m=%r, coeffs=%r)' % (self.m, self.coeffs)


class LineRecurrence(object):
    '''
    One-dimensional recurrence that generates the initial data on a line

    Params:

      - ``fixed_axis``: ``FIXED_X1`` (column line) or ``FIXED_X2`` (row line)

      - ``offset``: value of the fixed coordinate

      - ``coeffs``: ``(c_0, ..., c_mu)`` in increasing index order
    '''
    __slots__ = ('fixed_axis', 'offset', 'coeffs')

    def __init__(self, fixed_axis, offset, coeffs):
        self.fixed_axis = int(fixed_axis)
        self.offset = int(offset)
        self.coeffs = tuple(to_rational(c) for c in coeffs)

    @property
    def key(self):
        return (self.fixed_axis, self.offset)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def point(self, index):
        '''Grid point at position ``index`` along the line'''
        if self.fixed_axis == FIXED_X1:
            return (self.offset, index)
        return (index, self.offset)

    def position(self, point):
        return point[1] if self.fixed_axis == FIXED_X1 else point[0]

    def extend(self, segment, upto):
        return iterate(self.coeffs, segment, upto)

    def __eq__(self, other):
        if not isinstance(other, LineRecurrence):
            return NotImplemented
        return self.key == other.key and self.coeffs == other.coeffs

    def __repr__(self):
        return 'LineRecurrence(x%d=%d, %s)' % (
            self.fixed_axis, self.offset, [str(c) for c in self.coeffs])


def extend_line(rec, segment, upto):
    '''``upto`` entries of the sequence generated by ``rec`` from
    ``segment``'''
    return rec.extend(segment, upto)


class InitialDataSpec(object):
    '''
    Initial segments per line. A slot is a Rational or ``None`` for a hole
    that has to be derived from the transverse direction
    '''
    __slots__ = ('_slots',)

    def __init__(self, slots=None):
        self._slots = dict()
        for key, values in (slots or dict()).items():
            self._slots[tuple(key)] = tuple(
                None if v is None else to_rational(v) for v in values)

    def slots(self, key):
        return self._slots.get(tuple(key))

    def keys(self):
        return list(self._slots)

    def items(self):
        return list(self._slots.items())

    def holes(self):
        return [(key, k) for key, values in self._slots.items()
                for k, v in enumerate(values) if v is None]

    def __eq__(self, other):
        if not isinstance(other, InitialDataSpec):
            return NotImplemented
        return self._slots == other._slots


class Problem(object):
    '''
    Initial value problem: the equation, its line recurrences and the
    initial segments

    ``variables`` optionally names the two variables for rendering
    '''
    __slots__ = ('equation', 'lines', 'init', 'variables', '_by_key')

    def __init__(self, equation, lines, init, variables=None):
        self.equation = equation
        self.lines = tuple(lines)
        if not isinstance(init, InitialDataSpec):
            init = InitialDataSpec(init)
        self.init = init
        self.variables = tuple(variables) if variables else None
        self._by_key = dict((line.key, line) for line in self.lines)

    @property
    def m(self):
        return self.equation.m

    def line(self, key):
        return self._by_key.get(tuple(key))

    def columns(self):
        return sorted((ln for ln in self.lines if ln.fixed_axis == FIXED_X1),
                      key=lambda ln: ln.offset)

    def rows(self):
        return sorted((ln for ln in self.lines if ln.fixed_axis == FIXED_X2),
                      key=lambda ln: ln.offset)

    def required_keys(self):
        m1, m2 = self.m
        return ([(FIXED_X1, xi1) for xi1 in range(m1)] +
                [(FIXED_X2, xi2) for xi2 in range(m2)])

    def with_initial(self, slots):
        return Problem(self.equation, self.lines, InitialDataSpec(slots),
                       self.variables)

    def with_equation(self, equation):
        return Problem(equation, self.lines, self.init, self.variables)


def validate(problem):
    '''
    Structural checks: the dominating point exists, both dimensions are
    positive and every required line is present once with a usable
    recurrence and the right number of slots. Returns ``True`` or raises a
    ``ProblemError``
    '''
    eq = problem.equation
    m1, m2 = eq.m
    if m1 < 1 or m2 < 1:
        raise DegenerateDimension('m = (%d,%d): both entries must be '
                                  'positive' % (m1, m2))

    for a1, a2 in eq.coeffs:
        if not (0 <= a1 <= m1 and 0 <= a2 <= m2):
            raise CoefficientOutOfBox('alpha = (%d,%d) outside the box '
                                      '0 <= alpha <= (%d,%d)' %
                                      (a1, a2, m1, m2))

    if not eq.corner:
        raise ZeroCornerCoefficient('c_(%d,%d) is zero' % (m1, m2))

    seen = set()
    for line in problem.lines:
        if line.fixed_axis not in (FIXED_X1, FIXED_X2):
            raise LineOutOfRange('fixed_axis must be 1 or 2, got %d' %
                                 line.fixed_axis)
        limit = m1 if line.fixed_axis == FIXED_X1 else m2
        if not 0 <= line.offset < limit:
            raise LineOutOfRange('line x%d=%d outside the initial strips' %
                                 line.key)
        if line.key in seen:
            raise DuplicateLine('line x%d=%d given twice' % line.key)
        seen.add(line.key)

        if line.order < 1:
            raise ProblemError('line x%d=%d needs at least two '
                               'coefficients' % line.key)
        if not line.coeffs[-1]:
            raise ZeroLeadingCoefficient('line x%d=%d has a zero leading '
                                         'coefficient' % line.key)

        slots = problem.init.slots(line.key)
        if slots is None or len(slots) != line.order:
            raise SlotCountMismatch(
                'line x%d=%d: expected %d initial slots, got %d' %
                (line.key + (line.order, len(slots or ()))))

    missing = [key for key in problem.required_keys() if key not in seen]
    if missing:
        raise MissingLine(missing)

    stray = [key for key in problem.init.keys() if key not in seen]
    if stray:
        raise ProblemError('initial data for unknown line(s): %s' %
                           ', '.join('x%d=%d' % key for key in stray))

    return True


class ResolvedInitialData(object):
    '''
    Fully materialized initial segments (no holes) and the evaluation of
    the initial data at any point of the strips

    Extended line sequences are cached per line
    '''
    def __init__(self, problem, segments):
        self.problem = problem
        self.segments = dict((tuple(k), tuple(v))
                             for k, v in segments.items())
        self._cache = dict()

    @property
    def m(self):
        return self.problem.m

    def line(self, key):
        return self.problem.line(key)

    def segment(self, key):
        return self.segments[tuple(key)]

    def values(self, key, upto):
        '''First ``upto`` values along the line ``key``'''
        key = tuple(key)
        cached = self._cache.get(key)
        if cached is None or len(cached) < upto:
            cached = self.line(key).extend(self.segments[key],
                                           max(upto, len(self.segments[key])))
            self._cache[key] = cached
        return cached[:upto]

    def phi_at(self, point):
        '''
        Initial data at ``point``. A point on both a column and a row line is
        read from the column line; ``resolve`` has checked that both agree
        '''
        x1, x2 = point
        m1, m2 = self.m
        if x1 < 0 or x2 < 0 or (x1 >= m1 and x2 >= m2):
            raise PointNotInX0('(%d,%d) is not in the initial data set' %
                               (x1, x2))
        if x1 < m1:
            return self.values((FIXED_X1, x1), x2 + 1)[x2]
        return self.values((FIXED_X2, x2), x1 + 1)[x1]

    def as_problem(self):
        return self.problem.with_initial(self.segments)


def phi_at(data, point):
    return data.phi_at(point)


def _transverse_value(problem, slots, line, index):
    point = line.point(index)
    if line.fixed_axis == FIXED_X1:
        other = problem.line((FIXED_X2, point[1]))
    else:
        other = problem.line((FIXED_X1, point[0]))
    if other is None:
        return None

    pos = other.position(point)
    segment = slots[other.key]
    if pos < len(segment):
        return segment[pos]
    if any(v is None for v in segment):
        return None
    return other.extend(segment, pos + 1)[pos]


def _check_overlaps(data):
    m1, m2 = data.m
    for x1 in range(m1):
        for x2 in range(m2):
            column_value = data.values((FIXED_X1, x1), x2 + 1)[x2]
            row_value = data.values((FIXED_X2, x2), x1 + 1)[x1]
            if column_value != row_value:
                raise Inconsistent((x1, x2), column_value, row_value)


def resolve(problem):
    '''
    Fills every hole from the transverse line and checks that row and
    column data agree wherever both are defined

    The sweep repeats while it makes progress, at most ``total_slots ** 2``
    times. Raises ``Underdetermined`` when holes remain and ``Inconsistent``
    when two lines disagree at a point
    '''
    validate(problem)

    slots = dict((line.key, list(problem.init.slots(line.key)))
                 for line in problem.lines)
    total = sum(len(v) for v in slots.values())
    bound = max(total * total, 1)

    def holes():
        return [(line, k) for line in problem.lines
                for k, v in enumerate(slots[line.key]) if v is None]

    pending = holes()
    sweeps = 0
    while pending and sweeps < bound:
        sweeps += 1
        progress = False
        for line, k in pending:
            value = _transverse_value(problem, slots, line, k)
            if value is not None:
                slots[line.key][k] = value
                progress = True

        pending = holes()
        if not progress:
            break

    logger.debug('resolve: %d slots, %d sweeps, %d holes left', total,
                 sweeps, len(pending))
    if pending:
        raise Underdetermined([line.point(k) for line, k in pending])

    data = ResolvedInitialData(problem, slots)
    _check_overlaps(data)
    return data
