'''Generating function of the two-dimensional initial value problem.

The characteristic polynomial ``P`` times the generating function ``F`` equals
the boundary sum over the faces of the coefficient box: every point ``tau`` of
a face ``J`` contributes the series of the initial data along direction ``J``
times the boundary polynomial ``P_tau``. The corner face contributes nothing
because ``P_m = 0``, which leaves three groups:

  - the finite block ``tau < m``
  - the edge ``tau1 = m1``: the row lines, shifted past ``m1``
  - the edge ``tau2 = m2``: the column lines, shifted past ``m2``
'''
import logging

from .arith import ONE
from .poly import Poly1, Poly2, RatFunc2
from .recurrence import FIXED_X1, FIXED_X2, resolve
from .solver1d import gf_1d_shifted


__all__ = ['FACES', 'char_poly', 'boundary_poly', 'faces', 'face_series',
           'line_series', 'assemble_gf', 'initial_data_gf',
           'boundary_residual', 'theorem1_residual']

logger = logging.getLogger(__name__)

FACES = ((0, 0), (1, 0), (0, 1), (1, 1))


def char_poly(eq):
    '''``P(z) = sum(c_alpha * z^alpha)``'''
    return Poly2(eq.coeffs)


def boundary_poly(eq, tau):
    '''
    ``P_tau(z)``: the part of ``P`` over the ``alpha`` that are not
    componentwise below ``tau``
    '''
    t1, t2 = tau
    return Poly2(dict((a, c) for a, c in eq.coeffs.items()
                      if not (a[0] <= t1 and a[1] <= t2)))


def faces(m):
    '''
    Partition of the box ``0 <= tau <= m`` by which coordinates sit at the
    corner: ``J[k] == 1`` exactly when ``tau[k] == m[k]``
    '''
    m1, m2 = m
    out = dict((J, []) for J in FACES)
    for t1 in range(m1 + 1):
        for t2 in range(m2 + 1):
            out[(int(t1 == m1), int(t2 == m2))].append((t1, t2))
    return out


def line_series(data, key):
    '''
    One-dimensional series of the line ``key`` beyond the finite block, as a
    ``RatFunc1`` in the varying coordinate

    Column lines start at ``m2``, row lines at ``m1``
    '''
    m1, m2 = data.m
    line = data.line(key)
    start = m2 if line.fixed_axis == FIXED_X1 else m1
    return gf_1d_shifted(line.coeffs, data.segment(key), start)


def _embed(func, var):
    return (Poly2.from_poly1(func.numerator, var),
            Poly2.from_poly1(func.denominator, var))


def face_series(data, tau, J):
    '''
    ``Phi_{tau,J}(z) = sum(phi(tau + J*y) / z^(tau + J*y + 1) for y >= 0)``
    with ``phi`` extended by zero outside the initial data set
    '''
    t1, t2 = tau
    if J == (0, 0):
        return RatFunc2(Poly2.constant(data.phi_at(tau)),
                        Poly2.monomial((t1 + 1, t2 + 1)))
    if J == (1, 0):
        num, den = _embed(line_series(data, (FIXED_X2, t2)), 1)
        return RatFunc2(num, den.shift((0, t2 + 1)))
    if J == (0, 1):
        num, den = _embed(line_series(data, (FIXED_X1, t1)), 2)
        return RatFunc2(num, den.shift((t1 + 1, 0)))
    return RatFunc2(Poly2.zero())


def assemble_gf(problem, reduce=True, data=None):
    '''
    The generating function ``F(z1, z2)`` of the solution

    All three groups are put over the common denominator
    ``z1^m1 * z2^m2 * L1(z1) * L2(z2) * P(z)`` where ``L1`` and ``L2`` are
    the lcm of the row and column line denominators; the result is reduced
    once at the end unless ``reduce`` is false
    '''
    if data is None:
        data = resolve(problem)
    eq = problem.equation
    m1, m2 = eq.m
    P = char_poly(eq)

    columns = dict((ln.offset, line_series(data, ln.key))
                   for ln in problem.columns())
    rows = dict((ln.offset, line_series(data, ln.key))
                for ln in problem.rows())

    lcm1 = Poly1.constant(ONE)
    for func in rows.values():
        lcm1 = lcm1.lcm(func.denominator)
    lcm2 = Poly1.constant(ONE)
    for func in columns.values():
        lcm2 = lcm2.lcm(func.denominator)
    L1 = Poly2.from_poly1(lcm1, 1)
    L2 = Poly2.from_poly1(lcm2, 2)

    # finite block
    block = Poly2.zero()
    for x1 in range(m1):
        for x2 in range(m2):
            value = data.phi_at((x1, x2))
            if value:
                block += boundary_poly(eq, (x1, x2)).shift(
                    (m1 - x1 - 1, m2 - x2 - 1)).scale(value)
    numerator = block * L1 * L2

    # column lines, tau = (xi1, m2)
    for xi1, func in columns.items():
        if not func:
            continue
        cofactor = Poly2.from_poly1(lcm2.exact_div(func.denominator), 2)
        numerator += (boundary_poly(eq, (xi1, m2)) *
                      Poly2.from_poly1(func.numerator, 2) * cofactor * L1
                      ).shift((m1 - xi1 - 1, m2))

    # row lines, tau = (m1, xi2)
    for xi2, func in rows.items():
        if not func:
            continue
        cofactor = Poly2.from_poly1(lcm1.exact_div(func.denominator), 1)
        numerator += (boundary_poly(eq, (m1, xi2)) *
                      Poly2.from_poly1(func.numerator, 1) * cofactor * L2
                      ).shift((m1, m2 - xi2 - 1))

    factors = [Poly2.monomial((m1, m2)), L1, L2, P]
    logger.debug('assemble_gf: m = (%d,%d), %d numerator terms, line lcm '
                 'degrees (%d,%d)', m1, m2, len(numerator), lcm1.degree,
                 lcm2.degree)

    if not reduce:
        den = Poly2.one()
        for f in factors:
            den = den * f
        return RatFunc2(numerator, den, reduce=False)

    return RatFunc2.from_factors(numerator, factors)


def initial_data_gf(problem, data=None):
    '''
    Generating function of the initial data alone, the sum of all face
    series; the faces cover the initial data set exactly once
    '''
    if data is None:
        data = resolve(problem)
    total = RatFunc2(Poly2.zero())
    for J, taus in faces(problem.m).items():
        for tau in taus:
            total = total + face_series(data, tau, J)
    return total


def boundary_residual(problem, F, data=None):
    '''
    ``P * F`` minus the boundary sum over all four faces, cross-multiplied.
    The zero polynomial when ``F`` is the generating function of the
    solution
    '''
    if data is None:
        data = resolve(problem)
    eq = problem.equation

    rhs = RatFunc2(Poly2.zero())
    for J, taus in faces(eq.m).items():
        for tau in taus:
            weight = boundary_poly(eq, tau)
            if weight:
                rhs = rhs + face_series(data, tau, J) * weight

    return (char_poly(eq) * F.numerator * rhs.denominator -
            rhs.numerator * F.denominator)


theorem1_residual = boundary_residual
