'''Polynomials and rational functions over the rationals.

  - ``Poly1``: dense univariate polynomial (coefficient list, degree 0 first)
  - ``Poly2``: sparse bivariate polynomial (exponent pair -> coefficient)
  - ``RatFunc2``: bivariate rational function kept in canonical reduced form

Term order:
  - graded by total degree, ties broken by the exponent of ``z2`` and then
    of ``z1``, descending. It is used for display, for the leading term in
    exact division and for the sign rule of the canonical form

Canonical form of a ``RatFunc2``:
  - numerator and denominator share no non-constant factor
  - all coefficients are integers, collectively coprime
  - the leading coefficient of the denominator is positive
'''
import logging
import math
from fractions import Fraction

from .arith import ONE, ZERO, integer_scale, rat_format, to_rational
from .errors import ExponentOutOfRange, FieldZeroDivision, InexactDivision


__all__ = ['DEFAULT_VARIABLES', 'order_key', 'Poly1', 'Poly2', 'RatFunc2',
           'poly_gcd', 'p2_add', 'p2_mul', 'p2_scale', 'p2_divexact',
           'p2_gcd', 'p2_reverse', 'rf_add', 'rf_mul', 'rf_div']

logger = logging.getLogger(__name__)

DEFAULT_VARIABLES = ('z1', 'z2')


def order_key(exponents):
    e1, e2 = exponents
    return (e1 + e2, e2, e1)


def _rational(value):
    if type(value) is Fraction:
        return value
    return to_rational(value)


def _sign_join(parts):
    # parts: [(negative, body), ...] in display order
    negative, body = parts[0]
    text = '-' + body if negative else body
    for negative, body in parts[1:]:
        text += (' - ' if negative else ' + ') + body
    return text


class Poly1(object):
    '''Dense univariate polynomial over the rationals

    ``coefficients[k]`` is the coefficient of ``z^k``. Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple
    '''
    __slots__ = ('_c',)

    def __init__(self, coefficients=()):
        c = [_rational(x) for x in coefficients]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @property
    def coefficients(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return len(self._c) <= 1

    def __bool__(self):
        return bool(self._c)

    def lc(self):
        return self._c[-1] if self._c else ZERO

    def __getitem__(self, k):
        if 0 <= k < len(self._c):
            return self._c[k]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1.constant(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return 'Poly1(%s)' % self.format()

    def __add__(self, other):
        other = _as_poly1(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return Poly1([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self._c])

    def __sub__(self, other):
        other = _as_poly1(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        if not self._c or not other._c:
            return Poly1()
        out = [ZERO] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if not a:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def scale(self, s):
        s = _rational(s)
        return Poly1([c * s for c in self._c])

    def shift(self, k):
        '''Multiply by ``z^k``'''
        if not self._c:
            return self
        return Poly1([ZERO] * k + list(self._c))

    def __divmod__(self, other):
        if not other:
            raise FieldZeroDivision('division by the zero polynomial')

        rem = list(self._c)
        dq = len(other._c)
        lcq = other._c[-1]
        quo = [ZERO] * max(len(rem) - dq + 1, 0)
        while len(rem) >= dq:
            c = rem[-1] / lcq
            shift = len(rem) - dq
            quo[shift] = c
            for i, b in enumerate(other._c):
                rem[i + shift] -= c * b
            rem.pop()  # leading term cancelled exactly
            while rem and not rem[-1]:
                rem.pop()

        return Poly1(quo), Poly1(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def exact_div(self, other):
        quo, rem = divmod(self, other)
        if rem:
            raise InexactDivision('%s does not divide %s' % (other, self))
        return quo

    def monic(self):
        if not self._c:
            return self
        return self.scale(1 / self._c[-1])

    def primitive(self):
        '''Integer coefficients, collectively coprime, positive leading one'''
        if not self._c:
            return self
        s = integer_scale(self._c)
        if self._c[-1] < 0:
            s = -s
        return self.scale(s)

    def gcd(self, other):
        '''Monic greatest common divisor, by the primitive remainder
        sequence over the integers'''
        return Poly1(_zz_gcd(_zz_from_poly1(self),
                             _zz_from_poly1(other))).monic()

    def lcm(self, other):
        if not self or not other:
            return Poly1()
        return (self * other).exact_div(self.gcd(other)).monic()

    def reverse(self, degree):
        '''``z^degree * p(1/z)``'''
        if self.degree > degree:
            raise ExponentOutOfRange(
                'degree %d exceeds the cap %d' % (self.degree, degree))
        out = [ZERO] * (degree + 1)
        for k, c in enumerate(self._c):
            out[degree - k] = c
        return Poly1(out)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def format(self, var='z'):
        if not self._c:
            return '0'

        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            mono = '' if k == 0 else (var if k == 1 else '%s^%d' % (var, k))
            parts.append((c < 0, _term_body(abs(c), mono)))
        return _sign_join(parts)


def _as_poly1(value):
    if isinstance(value, Poly1):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly1.constant(value)
    return NotImplemented


def _term_body(magnitude, mono):
    if not mono:
        return rat_format(magnitude)
    if magnitude == 1:
        return mono
    return '%s*%s' % (rat_format(magnitude), mono)


def _monomial_text(exponents, variables):
    factors = []
    for name, k in zip(variables, exponents):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append('%s^%d' % (name, k))
    return '*'.join(factors)


class Poly2(object):
    '''Sparse bivariate polynomial over the rationals

    Terms are kept in a dict ``{(e1, e2): coefficient}`` which never holds a
    zero coefficient. Instances are treated as immutable
    '''
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        acc = dict()
        if terms:
            items = terms.items() if hasattr(terms, 'items') else terms
            for e, c in items:
                e1, e2 = int(e[0]), int(e[1])
                if e1 < 0 or e2 < 0:
                    raise ValueError('negative exponent in %r' % (e,))
                acc[(e1, e2)] = acc.get((e1, e2), ZERO) + _rational(c)

        self._terms = dict((e, c) for e, c in acc.items() if c)

    @classmethod
    def _wrap(cls, terms):
        # trusted: no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap(dict())

    @classmethod
    def one(cls):
        return cls._wrap({(0, 0): ONE})

    @classmethod
    def constant(cls, value):
        value = _rational(value)
        return cls._wrap({(0, 0): value} if value else dict())

    @classmethod
    def monomial(cls, exponents, value=ONE):
        return cls([(exponents, value)])

    @classmethod
    def variable(cls, index):
        '''``z1`` for index 1, ``z2`` for index 2'''
        return cls.monomial((1, 0) if index == 1 else (0, 1))

    @classmethod
    def from_poly1(cls, poly, var):
        '''Embed a univariate polynomial as a polynomial in ``z<var>``'''
        if var == 1:
            return cls._wrap(dict(((k, 0), c)
                                  for k, c in enumerate(poly.coefficients)
                                  if c))
        return cls._wrap(dict(((0, k), c)
                              for k, c in enumerate(poly.coefficients) if c))

    @classmethod
    def from_collected(cls, polys, var=1):
        '''Inverse of ``collect``'''
        terms = dict()
        for k, poly in enumerate(polys):
            for j, c in enumerate(poly.coefficients):
                if c:
                    terms[(k, j) if var == 1 else (j, k)] = c
        return cls._wrap(terms)

    def collect(self, var=1):
        '''
        View as a polynomial in ``z<var>`` with coefficients in the other
        variable: returns a list of ``Poly1`` indexed by the exponent of
        ``z<var>``
        '''
        if not self._terms:
            return []

        main = 0 if var == 1 else 1
        rows = dict()
        for e, c in self._terms.items():
            rows.setdefault(e[main], dict())[e[1 - main]] = c

        out = []
        for k in range(max(rows) + 1):
            row = rows.get(k, dict())
            out.append(Poly1([row.get(j, ZERO)
                              for j in range(max(row) + 1 if row else 0)]))
        return out

    def terms(self):
        '''(exponents, coefficient) pairs in term order, leading term first'''
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]),
                      reverse=True)

    def coefficients(self):
        return list(self._terms.values())

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or list(self._terms) == [(0, 0)]

    def total_degree(self):
        return max((e1 + e2 for e1, e2 in self._terms), default=-1)

    def max_exponents(self):
        if not self._terms:
            return (0, 0)
        return (max(e[0] for e in self._terms), max(e[1] for e in self._terms))

    def min_exponents(self):
        if not self._terms:
            return (0, 0)
        return (min(e[0] for e in self._terms), min(e[1] for e in self._terms))

    def leading_term(self):
        if not self._terms:
            return (0, 0), ZERO
        e = max(self._terms, key=order_key)
        return e, self._terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return 'Poly2(%s)' % self.format()

    def __add__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, ZERO) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Poly2._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._wrap(dict((e, -c) for e, c in self._terms.items()))

    def __sub__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly2):
            return NotImplemented

        terms = dict()
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                e = (a1 + b1, a2 + b2)
                terms[e] = terms.get(e, ZERO) + ca * cb
        return Poly2._wrap(dict((e, c) for e, c in terms.items() if c))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly2.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, s):
        s = _rational(s)
        if not s:
            return Poly2.zero()
        return Poly2._wrap(dict((e, c * s) for e, c in self._terms.items()))

    def shift(self, exponents):
        '''Multiply by the monomial ``z1^a * z2^b``'''
        a, b = exponents
        return Poly2._wrap(dict(((e1 + a, e2 + b), c)
                                for (e1, e2), c in self._terms.items()))

    def split_monomial(self):
        '''Returns ``(e, q)`` with ``self == z^e * q`` and ``e`` maximal'''
        e = self.min_exponents()
        if e == (0, 0):
            return e, self
        return e, Poly2._wrap(dict(((e1 - e[0], e2 - e[1]), c)
                                   for (e1, e2), c in self._terms.items()))

    def divexact(self, divisor):
        '''
        Exact quotient ``self / divisor`` in Q[z1, z2]

        Leading-term division under the term order. Raises
        ``InexactDivision`` as soon as a leading term is not divisible,
        which happens if and only if the division leaves a remainder
        '''
        if not divisor:
            raise FieldZeroDivision('division by the zero polynomial')
        if not self._terms:
            return Poly2.zero()

        (q1, q2), qc = divisor.leading_term()
        qterms = list(divisor._terms.items())
        rem = dict(self._terms)
        quo = dict()
        while rem:
            r1, r2 = max(rem, key=order_key)
            e = (r1 - q1, r2 - q2)
            if e[0] < 0 or e[1] < 0:
                raise InexactDivision('%s does not divide %s' %
                                      (divisor.format(), self.format()))

            c = rem[(r1, r2)] / qc
            quo[e] = c
            for (b1, b2), v in qterms:
                k = (b1 + e[0], b2 + e[1])
                nv = rem.get(k, ZERO) - c * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)

        return Poly2._wrap(quo)

    def reverse(self, cap):
        '''
        ``u^cap * p(1/u1, 1/u2)``: the exponent map ``e -> cap - e``

        Every exponent must be componentwise at most ``cap``
        '''
        d1, d2 = cap
        terms = dict()
        for (e1, e2), c in self._terms.items():
            if e1 > d1 or e2 > d2:
                raise ExponentOutOfRange(
                    'exponent (%d,%d) exceeds the cap (%d,%d)' %
                    (e1, e2, d1, d2))
            terms[(d1 - e1, d2 - e2)] = c
        return Poly2._wrap(terms)

    def primitive(self):
        '''Integer, collectively coprime coefficients and positive leading
        coefficient'''
        if not self._terms:
            return self
        s = integer_scale(self._terms.values())
        if self.leading_coefficient() < 0:
            s = -s
        return self.scale(s)

    def gcd(self, other):
        return poly_gcd(self, other)

    def format(self, variables=DEFAULT_VARIABLES):
        if not self._terms:
            return '0'

        parts = [(c < 0, _term_body(abs(c), _monomial_text(e, variables)))
                 for e, c in self.terms()]
        return _sign_join(parts)


def _as_poly2(value):
    if isinstance(value, Poly2):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly2.constant(value)
    return NotImplemented


###############################################################################
# GCD: primitive polynomial remainder sequence in Q[z2][z1]
###############################################################################
def poly_gcd(p, q):
    '''
    Greatest common divisor of two bivariate polynomials, not both zero

    The monomial parts are split off first (their gcd is a monomial), the
    rest runs a primitive remainder sequence in ``z1`` over ``Z[z2]`` and
    multiplies back the gcd of the contents. The sequence is skipped when an
    integer specialization of ``z2`` already shows the primitive parts
    coprime. When one side involves a single variable only, univariate gcds
    of the coefficients suffice. The result is normalized with ``primitive``
    '''
    if not p and not q:
        raise ValueError('gcd(0, 0) is undefined')
    if not p:
        return q.primitive()
    if not q:
        return p.primitive()

    ep, p0 = p.split_monomial()
    eq, q0 = q.split_monomial()
    mono = (min(ep[0], eq[0]), min(ep[1], eq[1]))

    if p0.is_constant() or q0.is_constant():
        core = Poly2.one()
    elif p0 == q0:
        core = p0
    elif _univariate_in(q0) or _univariate_in(p0):
        core = _univariate_gcd(p0, q0)
    else:
        core = _prs_gcd(p0, q0)

    return core.shift(mono).primitive()


def _univariate_in(p):
    # 1 or 2 when p involves only that variable, else 0
    e1, e2 = p.max_exponents()
    if e2 == 0:
        return 1
    if e1 == 0:
        return 2
    return 0


def _univariate_gcd(p, q):
    # a divisor of a polynomial in z<var> alone is one as well, and it must
    # divide every coefficient of the other argument collected in z<other>
    if not _univariate_in(q):
        p, q = q, p
    var = _univariate_in(q)
    other = 2 if var == 1 else 1
    g = q.collect(other)[0]
    for c in p.collect(other):
        g = g.gcd(c)
        if g.degree == 0:
            break
    return Poly2.from_poly1(g, var)


###############################################################################
# Integer kernel: coefficient lists over Z, degree 0 first
###############################################################################
# Specialization points for the degree bound of a bivariate gcd
_EVAL_POINTS = (1, -1, 2, -2, 3)


def _zz_strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def _zz_from_poly1(p):
    s = integer_scale(p.coefficients)
    return [int(c * s) for c in p.coefficients]


def _zz_content(f):
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _zz_primitive(f):
    '''``f`` over its content, leading coefficient positive'''
    if not f:
        return []
    g = _zz_content(f)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _zz_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _zz_sub(f, g):
    n = max(len(f), len(g))
    out = [(f[k] if k < len(f) else 0) - (g[k] if k < len(g) else 0)
           for k in range(n)]
    return _zz_strip(out)


def _zz_eval(f, t):
    acc = 0
    for c in reversed(f):
        acc = acc * t + c
    return acc


def _zz_prem(f, g):
    '''
    Pseudo-remainder of ``f`` by ``g`` over Z: each elimination step scales
    by ``lc(g)``, so the result is ``lc(g)^k * f mod g`` for some ``k``
    '''
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lc for c in r]
        for i, b in enumerate(g):
            r[i + shift] -= lr * b
        _zz_strip(r)
    return r


def _zz_gcd(f, g):
    '''
    Primitive gcd over Z by the primitive remainder sequence: every
    remainder is divided by its content before the next step
    '''
    if not f:
        return _zz_primitive(g)
    if not g:
        return _zz_primitive(f)

    f, g = _zz_primitive(f), _zz_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        if len(g) == 1:
            return [1]
        f, g = g, _zz_primitive(_zz_prem(f, g))
    return f


def _zz_exquo(f, g):
    '''Exact quotient over Z'''
    if not f:
        return []
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    q = [0] * (len(f) - dg) if len(f) > dg else []
    for k in range(len(q) - 1, -1, -1):
        c, rest = divmod(r[k + dg], lc)
        if rest:
            raise InexactDivision('inexact division over the integers')
        q[k] = c
        if c:
            for i, b in enumerate(g):
                r[i + k] -= c * b
    if any(r):
        raise InexactDivision('inexact division over the integers')
    return q


# Bivariate: list indexed by the exponent of z1, entries in Z[z2]
def _zz2_from_poly2(p):
    s = integer_scale(p.coefficients())
    return [[int(c * s) for c in row.coefficients] for row in p.collect(1)]


def _zz2_to_poly2(f):
    return Poly2.from_collected([Poly1(row) for row in f], var=1)


def _zz2_content(f):
    g = []
    for row in f:
        g = _zz_gcd(g, row)
        if len(g) == 1:
            break
    return g


def _zz2_primitive(f):
    '''Divides out the content in Z[z2] and then the integer content'''
    c = _zz2_content(f)
    if len(c) > 1:
        f = [_zz_exquo(row, c) for row in f]
    k = 0
    for row in f:
        k = math.gcd(k, _zz_content(row))
        if k == 1:
            break
    if f[-1][-1] < 0:
        k = -k
    return [[v // k for v in row] for row in f]


def _zz2_prem(f, g):
    r = [list(row) for row in f]
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [_zz_mul(row, lc) for row in r]
        for i, b in enumerate(g):
            r[i + shift] = _zz_sub(r[i + shift], _zz_mul(lr, b))
        while r and not r[-1]:
            r.pop()
    return r


def _z1_degree_bound(f, g):
    '''
    Upper bound on the z1-degree of ``gcd(f, g)``, or ``None``

    At any integer ``z2 = t`` where neither leading coefficient in z1
    vanishes, the gcd keeps its z1-degree and divides both images, so the
    degree of the gcd of the images bounds it
    '''
    best = None
    for t in _EVAL_POINTS:
        if not _zz_eval(f[-1], t) or not _zz_eval(g[-1], t):
            continue
        ft = [_zz_eval(row, t) for row in f]
        gt = [_zz_eval(row, t) for row in g]
        d = len(_zz_gcd(ft, gt)) - 1
        best = d if best is None else min(best, d)
        if best == 0:
            break
    return best


def _prs_gcd(p, q):
    a, b = _zz2_from_poly2(p), _zz2_from_poly2(q)
    content = _zz_gcd(_zz2_content(a), _zz2_content(b))
    a, b = _zz2_primitive(a), _zz2_primitive(b)
    if len(a) < len(b):
        a, b = b, a

    steps = 0
    if _z1_degree_bound(a, b) == 0:
        a, b = [[1]], []
    while b:
        if len(b) == 1:
            a, b = [[1]], []
            break
        r = _zz2_prem(a, b)
        a, b = b, (_zz2_primitive(r) if r else [])
        steps += 1

    logger.debug('gcd: %d remainder steps, degree %d in z1', steps,
                 len(a) - 1)
    return _zz2_to_poly2(a) * Poly2.from_poly1(Poly1(content), var=2)


###############################################################################
# Rational functions
###############################################################################
def _reduce(numerator, factors):
    '''
    Canonical (numerator, denominator) for ``numerator / prod(factors)``

    Each factor is cancelled against the numerator in turn. After
    ``g = gcd(N, f)`` the quotients ``N/g`` and ``f/g`` are coprime, so the
    reduced numerator ends up coprime to every reduced factor
    '''
    if not numerator:
        return Poly2.zero(), Poly2.one()

    den = Poly2.one()
    for f in factors:
        g = poly_gcd(numerator, f)
        if not g.is_constant():
            numerator = numerator.divexact(g)
            f = f.divexact(g)
        den = den * f

    s = integer_scale(numerator.coefficients() + den.coefficients())
    if den.leading_coefficient() < 0:
        s = -s
    return numerator.scale(s), den.scale(s)


class RatFunc2(object):
    '''Bivariate rational function ``numerator / denominator``

    Built in canonical form unless ``reduce=False``. Equality compares by
    cross-multiplication, so reduced and unreduced representations of the
    same function are equal
    '''
    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=None, reduce=True):
        num = _as_poly2(numerator)
        den = Poly2.one() if denominator is None else _as_poly2(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError('RatFunc2 expects polynomials or rationals')
        if not den:
            raise FieldZeroDivision('zero denominator')

        if reduce:
            num, den = _reduce(num, [den])
        self.numerator = num
        self.denominator = den

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj.numerator = num
        obj.denominator = den
        return obj

    @classmethod
    def from_factors(cls, numerator, factors):
        '''Canonical form of ``numerator / prod(factors)``'''
        factors = list(factors)
        if any(not f for f in factors):
            raise FieldZeroDivision('zero denominator factor')
        return cls._make(*_reduce(numerator, factors))

    def is_zero(self):
        return not self.numerator

    def __bool__(self):
        return bool(self.numerator)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        a, b = self.numerator, self.denominator
        c, d = other.numerator, other.denominator
        if b == d:
            return RatFunc2.from_factors(a + c, [b])
        return RatFunc2.from_factors(a * d + c * b, [b, d])

    __radd__ = __add__

    def __neg__(self):
        return RatFunc2._make(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return RatFunc2.from_factors(self.numerator * other.numerator,
                                     [self.denominator, other.denominator])

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        if not other:
            raise FieldZeroDivision('division by the zero function')
        return RatFunc2.from_factors(self.numerator * other.denominator,
                                     [self.denominator, other.numerator])

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return other
        return (self.numerator * other.denominator ==
                other.numerator * self.denominator)

    __hash__ = None

    def __repr__(self):
        return 'RatFunc2(%s)' % self.format()

    def format(self, variables=DEFAULT_VARIABLES):
        '''``numerator/denominator``; a unit denominator is left out'''
        num = self.numerator.format(variables)
        if self.denominator == Poly2.one():
            return num
        if len(self.numerator) > 1:
            num = '(%s)' % num
        den = self.denominator.format(variables)
        if len(self.denominator) > 1 or '*' in den:
            den = '(%s)' % den
        return '%s/%s' % (num, den)


def _as_ratfunc(value):
    if isinstance(value, RatFunc2):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc2._make(Poly2.constant(value), Poly2.one())
    if isinstance(value, Poly2):
        return RatFunc2._make(value, Poly2.one())
    return NotImplemented


###############################################################################
# Functional aliases
###############################################################################
def p2_add(p, q):
    return _as_poly2(p) + _as_poly2(q)


def p2_mul(p, q):
    return _as_poly2(p) * _as_poly2(q)


def p2_scale(p, s):
    return p.scale(s)


def p2_divexact(p, q):
    return p.divexact(q)


def p2_gcd(p, q):
    return poly_gcd(p, q)


def p2_reverse(p, cap):
    return p.reverse(cap)


def rf_add(a, b):
    return _as_ratfunc(a) + _as_ratfunc(b)


def rf_mul(a, b):
    return _as_ratfunc(a) * _as_ratfunc(b)


def rf_div(a, b):
    return _as_ratfunc(a) / _as_ratfunc(b)
