'''Random valid problems for the property suite and ``gen-random``.

One orientation of lines (rows or columns, chosen at random) gets free
initial data. Each line of the other orientation has order at least the
number of free lines (so the free dimension of ``m`` is capped at
``max_order``), and its first slots are copied from the free lines at
the overlap points, so overlaps are consistent by construction. Some of the
copied slots are left as holes for the resolver.
'''
import logging
import random
from fractions import Fraction

from .recurrence import (FIXED_X1, FIXED_X2, DifferenceEquation2,
                         InitialDataSpec, LineRecurrence, Problem)


__all__ = ['HARD_LIMITS', 'random_rational', 'generate_problem']

logger = logging.getLogger(__name__)

HARD_LIMITS = dict(max_m=4, max_order=4, max_value=9)


def random_rational(rng, max_value, nonzero=False, integer_bias=0.7):
    '''Numerator in ``[-max_value, max_value]``, denominator in
    ``[1, max_value]``; integers with probability ``integer_bias``'''
    while True:
        num = rng.randint(-max_value, max_value)
        den = 1 if rng.random() < integer_bias else rng.randint(1, max_value)
        if num or not nonzero:
            return Fraction(num, den)


def _check_bounds(max_m, max_order, max_value, hole_probability):
    for name, value in (('max_m', max_m), ('max_order', max_order),
                        ('max_value', max_value)):
        if not 1 <= value <= HARD_LIMITS[name]:
            raise ValueError('%s must be in [1, %d], got %d' %
                             (name, HARD_LIMITS[name], value))
    if not 0.0 <= hole_probability <= 1.0:
        raise ValueError('hole_probability must be in [0, 1]')


def _equation(rng, m, max_value, density=0.6):
    m1, m2 = m
    coeffs = dict()
    for a1 in range(m1 + 1):
        for a2 in range(m2 + 1):
            if (a1, a2) == m:
                coeffs[m] = random_rational(rng, max_value, nonzero=True)
            elif rng.random() < density:
                coeffs[(a1, a2)] = random_rational(rng, max_value)
    return DifferenceEquation2(m, coeffs)


def _line_coeffs(rng, order, max_value):
    coeffs = [random_rational(rng, max_value) for _ in range(order)]
    coeffs.append(random_rational(rng, max_value, nonzero=True))
    return coeffs


def generate_problem(seed=None, max_m=3, max_order=3, max_value=9,
                     hole_probability=0.5, rng=None):
    '''
    A valid, resolvable problem. Deterministic for a fixed ``seed``; pass
    ``rng`` to draw from an existing ``random.Random`` instead
    '''
    _check_bounds(max_m, max_order, max_value, hole_probability)
    if rng is None:
        rng = random.Random(seed)

    m = [rng.randint(1, max_m), rng.randint(1, max_m)]
    free_axis = rng.choice((FIXED_X1, FIXED_X2))
    # dependent lines need order >= number of free lines
    if m[free_axis - 1] > max_order:
        m[free_axis - 1] = rng.randint(1, max_order)
    m = tuple(m)
    eq = _equation(rng, m, max_value)

    dep_axis = FIXED_X2 if free_axis == FIXED_X1 else FIXED_X1
    n_free = m[0] if free_axis == FIXED_X1 else m[1]
    n_dep = m[1] if free_axis == FIXED_X1 else m[0]

    lines = []
    slots = dict()
    free_lines = []
    for offset in range(n_free):
        order = rng.randint(1, max_order)
        line = LineRecurrence(free_axis, offset,
                              _line_coeffs(rng, order, max_value))
        lines.append(line)
        free_lines.append(line)
        slots[line.key] = [random_rational(rng, max_value)
                           for _ in range(order)]

    # value of free line j at position `offset` of a dependent line
    overlap = [line.extend(slots[line.key], n_dep) for line in free_lines]

    holes = 0
    for offset in range(n_dep):
        order = rng.randint(n_free, max_order)
        line = LineRecurrence(dep_axis, offset,
                              _line_coeffs(rng, order, max_value))
        lines.append(line)
        segment = []
        for k in range(order):
            if k < n_free:
                if rng.random() < hole_probability:
                    segment.append(None)
                    holes += 1
                else:
                    segment.append(overlap[k][offset])
            else:
                segment.append(random_rational(rng, max_value))
        slots[line.key] = segment

    logger.debug('generate_problem: seed %r, m = %r, free axis %d, %d holes',
                 seed, m, free_axis, holes)
    return Problem(eq, lines, InitialDataSpec(slots))
