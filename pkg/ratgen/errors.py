'''Exception hierarchy of the ratgen package.

Every failure the library reports on purpose derives from ``RatGenError``.
The command line maps ``ProblemError`` to exit code 2 and
``InitialDataError`` to exit code 3.
'''


class RatGenError(Exception):
    '''Base class for all ratgen errors'''


class RationalFormatError(RatGenError, ValueError):
    '''Text that is not a ``-?digits`` or ``-?digits/digits`` rational'''


class FieldZeroDivision(RatGenError, ZeroDivisionError):
    '''Inversion of zero (scalar or rational function)'''


class InexactDivision(RatGenError, ArithmeticError):
    '''Polynomial division that leaves a remainder'''


class ExponentOutOfRange(RatGenError, ValueError):
    '''Exponent exceeding the reversal cap'''


class ProblemError(RatGenError, ValueError):
    '''The problem violates a structural requirement'''


class InvalidProblemFile(ProblemError):
    '''The problem file is not valid JSON or does not match the schema'''


class DegenerateDimension(ProblemError):
    '''One of m1, m2 is zero'''


class ZeroCornerCoefficient(ProblemError):
    '''c_m vanishes: there is no dominating point'''


class CoefficientOutOfBox(ProblemError):
    '''A coefficient index alpha lies outside the box 0 <= alpha <= m'''


class ZeroLeadingCoefficient(ProblemError):
    '''A one-dimensional recurrence has a zero leading coefficient'''


class LineOutOfRange(ProblemError):
    '''A line whose fixed coordinate does not lie in the initial strips'''


class DuplicateLine(ProblemError):
    '''The same line is given twice'''


class SlotCountMismatch(ProblemError):
    '''The initial segment of a line does not have ``order`` slots'''


class MissingLine(ProblemError):
    '''Some required line is absent

    ``missing`` holds the ``(fixed_axis, offset)`` keys that are absent
    '''
    def __init__(self, missing):
        self.missing = tuple(missing)
        keys = ', '.join('x%d=%d' % key for key in self.missing)
        super(MissingLine, self).__init__('missing line(s): %s' % keys)


class InitialDataError(RatGenError):
    '''The initial data cannot be completed to a consistent set'''


class Underdetermined(InitialDataError):
    '''Holes remain after the resolver stops making progress

    ``holes`` holds the grid points that could not be derived
    '''
    def __init__(self, holes):
        self.holes = tuple(holes)
        pts = ', '.join('(%d,%d)' % p for p in self.holes)
        super(Underdetermined, self).__init__(
            'initial data underdetermined at %s' % pts)


class Inconsistent(InitialDataError):
    '''Row and column recurrences disagree at a grid point'''
    def __init__(self, point, column_value, row_value):
        self.point = point
        self.column_value = column_value
        self.row_value = row_value
        super(Inconsistent, self).__init__(
            'inconsistent initial data at (%d,%d): column line gives %s, '
            'row line gives %s' % (point[0], point[1],
                                   column_value, row_value))


class PointNotInX0(RatGenError, ValueError):
    '''A point outside the initial data set was queried'''


class NotExpandable(RatGenError):
    '''A rational function with no expansion in negative powers'''


class TableSizeMismatch(RatGenError, ValueError):
    '''Two series tables of different sizes were compared'''
