'''Rendering of generating functions and the plain-text report writer.

Formats:
  - ``plain``: ``numerator/denominator`` in term order, ``^`` and ``*``
  - ``latex``: ``\\frac{num}{den}`` with juxtaposed factors
  - ``json``: exponent/coefficient term lists plus the plain text
'''
import io
import json
import re
import sys

import jsonschema

from .arith import rat_format, rat_parse
from .errors import InvalidProblemFile, RationalFormatError
from .poly import DEFAULT_VARIABLES, Poly2, RatFunc2


__all__ = ['FORMATS', 'RATFUNC_SCHEMA', 'format_plain', 'format_latex',
           'ratfunc_to_json', 'ratfunc_from_json', 'render', 'WriterFile',
           'WriterStringIO']

FORMATS = ('plain', 'latex', 'json')

_TERMS_SCHEMA = {
    'type': 'array',
    'items': {
        'type': 'object',
        'required': ['exponents', 'coefficient'],
        'properties': {
            'exponents': {
                'type': 'array',
                'items': {'type': 'integer', 'minimum': 0},
                'minItems': 2,
                'maxItems': 2,
            },
            'coefficient': {'type': ['string', 'integer']},
        },
    },
}

RATFUNC_SCHEMA = {
    'type': 'object',
    'required': ['numerator', 'denominator'],
    'properties': {
        'variables': {
            'type': 'array',
            'items': {'type': 'string', 'minLength': 1},
            'minItems': 2,
            'maxItems': 2,
        },
        'numerator': _TERMS_SCHEMA,
        'denominator': _TERMS_SCHEMA,
        'text': {'type': 'string'},
    },
}

_INDEXED_NAME = re.compile(r'^([A-Za-z]+)(\d+)$')


def format_plain(func, variables=DEFAULT_VARIABLES):
    return func.format(variables)


def _latex_name(name):
    match = _INDEXED_NAME.match(name)
    if match is None:
        return name
    return '%s_{%s}' % match.groups()


def _latex_power(name, k):
    if k == 1:
        return name
    if k < 10:
        return '%s^%d' % (name, k)
    return '%s^{%d}' % (name, k)


def _latex_scalar(c):
    if c.denominator == 1:
        return str(c.numerator)
    return '\\frac{%d}{%d}' % (c.numerator, c.denominator)


def _latex_poly(poly, names):
    if not poly:
        return '0'

    text = ''
    for i, ((e1, e2), c) in enumerate(poly.terms()):
        mono = ''.join(_latex_power(n, k) for n, k in zip(names, (e1, e2))
                       if k)
        mag = abs(c)
        if not mono:
            body = _latex_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = _latex_scalar(mag) + mono

        if i == 0:
            text = ('-' if c < 0 else '') + body
        else:
            text += (' - ' if c < 0 else ' + ') + body
    return text


def format_latex(func, variables=DEFAULT_VARIABLES):
    names = [_latex_name(v) for v in variables]
    num = _latex_poly(func.numerator, names)
    if func.denominator == Poly2.one():
        return num
    return '\\frac{%s}{%s}' % (num, _latex_poly(func.denominator, names))


def _terms_to_json(poly):
    return [{'exponents': [e1, e2], 'coefficient': rat_format(c)}
            for (e1, e2), c in poly.terms()]


def ratfunc_to_json(func, variables=DEFAULT_VARIABLES):
    return {
        'variables': list(variables),
        'numerator': _terms_to_json(func.numerator),
        'denominator': _terms_to_json(func.denominator),
        'text': format_plain(func, variables),
    }


def _terms_from_json(items):
    terms = dict()
    for item in items:
        e = tuple(item['exponents'])
        if e in terms:
            raise InvalidProblemFile('exponents %r given twice' % (list(e),))
        c = item['coefficient']
        terms[e] = rat_parse(c) if isinstance(c, str) else rat_parse(str(c))
    return Poly2(terms)


def ratfunc_from_json(doc):
    '''
    Rebuilds a ``RatFunc2`` from its JSON form (a dict or JSON text). The
    result is canonical; ``text`` is informational and ignored
    '''
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except ValueError as e:
            raise InvalidProblemFile('not valid JSON: %s' % e)

    try:
        jsonschema.validate(instance=doc, schema=RATFUNC_SCHEMA)
    except jsonschema.ValidationError as e:
        raise InvalidProblemFile('rational function: %s' % e.message)

    try:
        num = _terms_from_json(doc['numerator'])
        den = _terms_from_json(doc['denominator'])
    except RationalFormatError as e:
        raise InvalidProblemFile('rational function: %s' % e)
    if not den:
        raise InvalidProblemFile('rational function: zero denominator')
    return RatFunc2(num, den)


def render(func, fmt='plain', variables=DEFAULT_VARIABLES):
    if fmt == 'plain':
        return format_plain(func, variables)
    if fmt == 'latex':
        return format_latex(func, variables)
    if fmt == 'json':
        return json.dumps(ratfunc_to_json(func, variables), indent=2)
    raise ValueError('unknown format %r, expected one of %s' %
                     (fmt, ', '.join(FORMATS)))


class WriterFile(object):
    '''Writes verification reports as indented ``key: value`` lines.

    Params:

      - ``out`` (default: ``sys.stdout``): a stream, or a path opened for
        writing and closed by ``stop``
      - ``close_out`` (default: ``False``): close a passed-in stream on
        ``stop``
      - ``indent`` (default: ``2``): spaces per nesting level
      - ``separators`` (default: ``('=', '-', '+', '*')``): rule character
        per nesting level
      - ``seplen`` (default: ``79``): width of a rule including indentation
    '''
    def __init__(self, out=None, close_out=False, indent=2,
                 separators=('=', '-', '+', '*'), seplen=79):
        self.p_out = out
        self.p_close_out = close_out
        self.indent = indent
        self.separators = list(separators)
        self.seplen = seplen
        self.out = None
        self.close_out = False

    def _start_output(self):
        if self.out is None:
            if self.p_out is None:
                self.out = sys.stdout
                self.close_out = False
            elif isinstance(self.p_out, str):
                self.out = open(self.p_out, 'w')
                self.close_out = True
            else:
                self.out = self.p_out
                self.close_out = self.p_close_out

    def start(self):
        self._start_output()
        return self

    def stop(self):
        if self.close_out:
            self.out.close()

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        self.stop()

    def writeline(self, line):
        self.out.write(line + '\n')

    def writelineseparator(self, level=0):
        sepnum = level % len(self.separators)
        separator = self.separators[sepnum]

        line = ' ' * (level * self.indent)
        line += separator * (self.seplen - (level * self.indent))
        self.writeline(line)

    def writedict(self, dct, level=0, recurse=False):
        if not recurse:
            self.writelineseparator(level)

        indent0 = level * self.indent
        for key, val in dct.items():
            kline = ' ' * indent0
            if recurse:
                kline += '- '

            kline += str(key) + ':'

            if isinstance(val, dict):
                self.writeline(kline)
                self.writedict(val, level=level + 1, recurse=True)
            elif isinstance(val, (list, tuple)):
                self.writeline(kline + ' ' + ', '.join(map(str, val)))
            else:
                self.writeline(kline + ' ' + str(val))


class WriterStringIO(WriterFile):
    '''``WriterFile`` collecting into a ``StringIO``; ``getvalue`` returns
    the text'''
    def __init__(self, **kwargs):
        kwargs['out'] = io.StringIO()
        super(WriterStringIO, self).__init__(**kwargs)

    def getvalue(self):
        return self.p_out.getvalue()
