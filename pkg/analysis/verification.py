import logging

from ratgen.errors import NotExpandable
from ratgen.oracle import (compare_tables, equation_defects, expand_ratfunc,
                           expand_table)
from ratgen.recurrence import resolve
from ratgen.solver2d import boundary_residual

logger = logging.getLogger(__name__)


class SolutionVerifier:
    """Checks a generating function against its problem on [0, size]^2"""

    def __init__(self, problem, func, size, data=None):
        self.problem = problem
        self.func = func
        self.size = size
        self.data = data if data is not None else resolve(problem)
        self.table = None
        self.series = None
        self.results = dict(size='[0,%d]^2' % size)
        self.passed = dict()

    @property
    def verified(self):
        return bool(self.passed) and all(self.passed.values())

    def run_all_checks(self):
        self.check_series()
        self.check_boundary_identity()
        self.check_recurrence()
        return self.results

    def check_series(self):
        """Series expansion of the function vs. direct iteration"""
        n = (self.size, self.size)
        self.table = expand_table(self.problem, n, data=self.data)
        try:
            self.series = expand_ratfunc(self.func, n)
        except NotExpandable as e:
            self.results['series'] = 'not expandable: %s' % e
            self.passed['series'] = False
            return self.results

        mismatch = compare_tables(self.table, self.series)
        self.results['series'] = 'match' if mismatch is None else \
            str(mismatch)
        self.passed['series'] = mismatch is None
        return self.results

    def check_boundary_identity(self):
        """P*F against the boundary sum over the faces of the box"""
        residual = boundary_residual(self.problem, self.func, data=self.data)
        self.results['boundary_identity'] = \
            'zero' if not residual else 'nonzero (%d terms)' % len(residual)
        self.passed['boundary_identity'] = not residual
        return self.results

    def check_recurrence(self):
        """Difference equation on the expanded series"""
        if self.series is None:
            self.results['recurrence'] = 'skipped'
            return self.results

        defects = equation_defects(self.problem.equation, self.series)
        self.results['recurrence'] = 'holds' if not defects else \
            'fails at %d point(s), first (%d,%d)' % ((len(defects),) +
                                                      defects[0])
        self.passed['recurrence'] = not defects
        return self.results
