'''One-dimensional generating functions of constant-coefficient recurrences.

Convention: the generating function of ``f`` is ``F(z) = sum(f(x) * z**-x)``.
The shifted variant used by the two-dimensional assembly returns
``sum(f(start + y) * z**-(start + y + 1))``.
'''
import logging

from .arith import ONE, ZERO, integer_scale, to_rational
from .errors import FieldZeroDivision, NotExpandable, ZeroLeadingCoefficient
from .poly import Poly1
from .recurrence import iterate


__all__ = ['RatFunc1', 'gf_1d', 'gf_1d_parts', 'gf_1d_shifted', 'expand_1d',
           'residual_1d']

logger = logging.getLogger(__name__)


class RatFunc1(object):
    '''
    Univariate rational function ``numerator / denominator``

    Canonical form: no common factor, integer coefficients collectively
    coprime and a positive leading coefficient in the denominator
    '''
    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=None, reduce=True):
        num = numerator if isinstance(numerator, Poly1) else \
            Poly1.constant(to_rational(numerator))
        den = Poly1.constant(ONE) if denominator is None else denominator
        if not den:
            raise FieldZeroDivision('zero denominator')

        if reduce:
            num, den = _canonical(num, den)
        self.numerator = num
        self.denominator = den

    def is_zero(self):
        return not self.numerator

    def __bool__(self):
        return bool(self.numerator)

    def __add__(self, other):
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return RatFunc1(self.numerator * other.denominator +
                        other.numerator * self.denominator,
                        self.denominator * other.denominator)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return RatFunc1(self.numerator * other.numerator,
                        self.denominator * other.denominator)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return (self.numerator * other.denominator ==
                other.numerator * self.denominator)

    __hash__ = None

    def __repr__(self):
        return 'RatFunc1(%s)' % self.format()

    def format(self, var='z'):
        num = self.numerator.format(var)
        if self.denominator == Poly1.constant(ONE):
            return num
        if len([c for c in self.numerator.coefficients if c]) > 1:
            num = '(%s)' % num
        den = self.denominator.format(var)
        if len([c for c in self.denominator.coefficients if c]) > 1 or \
                '*' in den:
            den = '(%s)' % den
        return '%s/%s' % (num, den)


def _canonical(num, den):
    if not num:
        return Poly1(), Poly1.constant(ONE)

    g = num.gcd(den)
    if g.degree > 0:
        num, den = num.exact_div(g), den.exact_div(g)

    s = integer_scale(list(num.coefficients) + list(den.coefficients))
    if den.lc() < 0:
        s = -s
    return num.scale(s), den.scale(s)


def _check(coeffs, init):
    coeffs = [to_rational(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError('a recurrence needs at least two coefficients')
    if not coeffs[-1]:
        raise ZeroLeadingCoefficient('leading coefficient is zero')
    init = [to_rational(v) for v in init]
    if len(init) != len(coeffs) - 1:
        raise ValueError('expected %d initial values, got %d' %
                         (len(coeffs) - 1, len(init)))
    return coeffs, init


def gf_1d_parts(coeffs, init):
    '''
    Unreduced numerator and denominator of ``gf_1d``

    Formula:
      - Q(z) = sum(c_a * z^a for a in 0..mu)
      - N(z) = sum(c_a * phi(x) * z^(a - x) for a in 1..mu, x in 0..a-1)
    '''
    coeffs, init = _check(coeffs, init)
    mu = len(coeffs) - 1

    num = [ZERO] * (mu + 1)
    for a in range(1, mu + 1):
        c = coeffs[a]
        if not c:
            continue
        for x in range(a):
            num[a - x] += c * init[x]

    return Poly1(num), Poly1(coeffs)


def gf_1d(coeffs, init):
    '''Generating function ``sum(phi(x) * z**-x)`` of the sequence generated
    by ``coeffs`` from ``init``'''
    return RatFunc1(*gf_1d_parts(coeffs, init))


def gf_1d_shifted(coeffs, init, start=0):
    '''
    Generating function ``sum(phi(start + y) * z**-(start + y + 1))``

    The sequence is first moved to the window ``phi(start), ...,
    phi(start + mu - 1)``; the numerator of the window is divisible by ``z``
    '''
    coeffs, init = _check(coeffs, init)
    if start < 0:
        raise ValueError('start must be non-negative, got %d' % start)

    mu = len(coeffs) - 1
    window = iterate(coeffs, init, start + mu)[start:]
    num, den = gf_1d_parts(coeffs, window)
    logger.debug('gf_1d_shifted: order %d, start %d, window %s', mu, start,
                 [str(v) for v in window])
    # num has no constant term
    return RatFunc1(Poly1(num.coefficients[1:]), den.shift(start))


def expand_1d(func, n):
    '''
    First ``n`` coefficients of ``func`` in powers of ``1/z``, starting with
    the coefficient of ``z**0``

    Raises ``NotExpandable`` if ``func`` has a positive power of ``z``
    '''
    num, den = func.numerator, func.denominator
    if not num:
        return [ZERO] * n

    d = den.degree
    if num.degree > d:
        raise NotExpandable('numerator degree %d exceeds denominator degree '
                            '%d' % (num.degree, d))

    a = num.reverse(d)
    b = den.reverse(d)
    b0 = b[0]
    out = []
    for k in range(n):
        acc = a[k]
        for j in range(1, min(k, b.degree) + 1):
            acc -= b[j] * out[k - j]
        out.append(acc / b0)
    return out


def residual_1d(coeffs, init, func):
    '''
    The one-dimensional boundary identity for ``func = sum(f(x) *
    z**-(x + 1))``, cross-multiplied; zero when ``func`` generates the
    recurrence solution

    Formula:
      - Q(z) * F(z) = sum(phi(t) * c_a * z^(a - t - 1) for t < mu, a > t)
    '''
    coeffs, init = _check(coeffs, init)
    mu = len(coeffs) - 1

    rhs = [ZERO] * mu
    for t in range(mu):
        for a in range(t + 1, mu + 1):
            rhs[a - t - 1] += init[t] * coeffs[a]

    return Poly1(coeffs) * func.numerator - Poly1(rhs) * func.denominator
