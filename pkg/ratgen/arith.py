'''Exact rational scalars.

``Rational`` is ``fractions.Fraction``: always stored in lowest terms with a
positive denominator, which is exactly the invariant the rest of the package
relies on. This module adds the strict text format and the few helpers the
polynomial layer needs for canonical scaling.
'''
import math
import re
from fractions import Fraction

from .errors import FieldZeroDivision, RationalFormatError


__all__ = ['Rational', 'ZERO', 'ONE', 'rat_parse', 'rat_format', 'to_rational',
           'rat_add', 'rat_mul', 'rat_neg', 'rat_inv',
           'is_normalized', 'integer_scale']

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r'^(-?\d+)(?:/(\d+))?$')


def rat_parse(text):
    '''Parse ``-?digits`` or ``-?digits/digits`` into a normalized Rational

    Surrounding whitespace is ignored, nothing else is accepted (no decimal
    points, exponents or a sign on the divisor)
    '''
    if not isinstance(text, str):
        raise RationalFormatError('expected a string, got %r' % (text,))

    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise RationalFormatError('malformed rational: %r' % (text,))

    num, den = match.groups()
    if den is None:
        return Fraction(int(num))

    if int(den) == 0:
        raise RationalFormatError('zero denominator: %r' % (text,))

    return Fraction(int(num), int(den))


def rat_format(a):
    '''Canonical text: ``n`` when the denominator is 1, else ``n/d``'''
    return str(Fraction(a))


def to_rational(value):
    '''Accept a Rational, an int or rational text'''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalFormatError('booleans are not rationals')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise RationalFormatError('cannot convert %r to a rational' % (value,))


def rat_add(a, b):
    return Fraction(a) + Fraction(b)


def rat_mul(a, b):
    return Fraction(a) * Fraction(b)


def rat_neg(a):
    return -Fraction(a)


def rat_inv(a):
    a = Fraction(a)
    if not a:
        raise FieldZeroDivision('inversion of zero')
    return 1 / a


def is_normalized(a):
    '''Lowest terms and positive denominator'''
    return (a.denominator > 0 and
            math.gcd(abs(a.numerator), a.denominator) == 1 and
            (a.numerator != 0 or a.denominator == 1))


def integer_scale(coefficients):
    '''
    Returns the positive factor ``s`` such that ``s * c`` is an integer for
    every ``c`` in ``coefficients`` and those integers are collectively
    coprime. Returns 1 for an empty or all-zero input

    Formula:
      - s = lcm(denominators) / gcd(numerators * lcm / denominators)
    '''
    coefficients = [c for c in coefficients if c]
    if not coefficients:
        return ONE

    lcm = 1
    for c in coefficients:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)

    g = 0
    for c in coefficients:
        g = math.gcd(g, c.numerator * (lcm // c.denominator))

    return Fraction(lcm, g)
