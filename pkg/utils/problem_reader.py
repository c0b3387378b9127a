import json
import logging

import jsonschema

from ratgen.arith import rat_format, rat_parse
from ratgen.errors import InvalidProblemFile, RationalFormatError
from ratgen.recurrence import (DifferenceEquation2, InitialDataSpec,
                               LineRecurrence, Problem)

logger = logging.getLogger(__name__)

_RATIONAL = {'type': ['string', 'integer']}

PROBLEM_SCHEMA = {
    'type': 'object',
    'required': ['equation', 'lines'],
    'properties': {
        'equation': {
            'type': 'object',
            'required': ['m', 'coefficients'],
            'properties': {
                'm': {
                    'type': 'array',
                    'items': {'type': 'integer', 'minimum': 0},
                    'minItems': 2,
                    'maxItems': 2,
                },
                'coefficients': {
                    'type': 'array',
                    'items': {
                        'type': 'object',
                        'required': ['alpha', 'value'],
                        'properties': {
                            'alpha': {
                                'type': 'array',
                                'items': {'type': 'integer', 'minimum': 0},
                                'minItems': 2,
                                'maxItems': 2,
                            },
                            'value': _RATIONAL,
                        },
                    },
                },
            },
        },
        'lines': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['fixed_axis', 'offset', 'coefficients',
                             'initial'],
                'properties': {
                    'fixed_axis': {'enum': [1, 2]},
                    'offset': {'type': 'integer'},
                    'coefficients': {
                        'type': 'array',
                        'items': _RATIONAL,
                        'minItems': 1,
                    },
                    'initial': {
                        'type': 'array',
                        'items': {'type': ['string', 'integer', 'null']},
                    },
                },
            },
        },
        'variables': {
            'type': 'array',
            'items': {'type': 'string', 'minLength': 1},
            'minItems': 2,
            'maxItems': 2,
        },
    },
}


def _rational(value):
    return rat_parse(value if isinstance(value, str) else str(value))


class ProblemReader:
    """Reads problem files (JSON) into ``Problem`` objects"""

    def __init__(self, schema=PROBLEM_SCHEMA):
        self.schema = schema

    def read(self, path):
        """Read and parse the problem file at ``path``"""
        try:
            with open(path, encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise InvalidProblemFile('cannot read %s: %s' % (path, e))
        logger.debug('read %d bytes from %s', len(text), path)
        return self.loads(text)

    def loads(self, text):
        """Parse JSON text"""
        try:
            doc = json.loads(text)
        except ValueError as e:
            raise InvalidProblemFile('not valid JSON: %s' % e)
        return self.parse(doc)

    def parse(self, doc):
        """Build a Problem from an already decoded document"""
        try:
            jsonschema.validate(instance=doc, schema=self.schema)
        except jsonschema.ValidationError as e:
            path = '/'.join(str(p) for p in e.absolute_path)
            raise InvalidProblemFile('schema violation at /%s: %s' %
                                     (path, e.message))

        try:
            return self._build(doc)
        except RationalFormatError as e:
            raise InvalidProblemFile(str(e))

    def _build(self, doc):
        eq_doc = doc['equation']
        coeffs = dict()
        for item in eq_doc['coefficients']:
            alpha = tuple(item['alpha'])
            if alpha in coeffs:
                raise InvalidProblemFile('coefficient alpha = %r given twice'
                                         % (list(alpha),))
            coeffs[alpha] = _rational(item['value'])
        equation = DifferenceEquation2(eq_doc['m'], coeffs)

        lines = []
        slots = dict()
        for item in doc['lines']:
            line = LineRecurrence(item['fixed_axis'], item['offset'],
                                  [_rational(c) for c in item['coefficients']])
            lines.append(line)
            slots[line.key] = [None if v is None else _rational(v)
                               for v in item['initial']]

        return Problem(equation, lines, InitialDataSpec(slots),
                       variables=doc.get('variables'))


def problem_to_json(problem):
    """Serialise a Problem into the problem file structure"""
    eq = problem.equation
    doc = {
        'equation': {
            'm': list(eq.m),
            'coefficients': [{'alpha': list(a), 'value': rat_format(c)}
                             for a, c in sorted(eq.coeffs.items())],
        },
        'lines': [],
    }
    for line in problem.lines:
        initial = problem.init.slots(line.key) or ()
        doc['lines'].append({
            'fixed_axis': line.fixed_axis,
            'offset': line.offset,
            'coefficients': [rat_format(c) for c in line.coeffs],
            'initial': [None if v is None else rat_format(v)
                        for v in initial],
        })
    if problem.variables:
        doc['variables'] = list(problem.variables)
    return doc
