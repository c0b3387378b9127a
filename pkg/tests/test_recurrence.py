import random
from fractions import Fraction

import pytest

from ratgen.errors import (CoefficientOutOfBox, DegenerateDimension,
                           DuplicateLine, Inconsistent, LineOutOfRange,
                           MissingLine, PointNotInX0, ProblemError,
                           SlotCountMismatch, Underdetermined,
                           ZeroCornerCoefficient, ZeroLeadingCoefficient)
from ratgen.recurrence import (FIXED_X1, FIXED_X2, DifferenceEquation2,
                               LineRecurrence, Problem, extend_line, iterate,
                               phi_at, resolve, validate)
from ratgen.generator import generate_problem
from tests.conftest import data_path

BINOMIAL = DifferenceEquation2((1, 1), {(1, 1): 1, (0, 1): -1, (0, 0): -1})


def binomial(column=(1,), row=(1,), lines=None):
    if lines is None:
        lines = [LineRecurrence(FIXED_X1, 0, [0, 1]),
                 LineRecurrence(FIXED_X2, 0, [-1, 1])]
    return Problem(BINOMIAL, lines, {(1, 0): column, (2, 0): row})


def random_line(rng, order):
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(order)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3])))
    return LineRecurrence(FIXED_X1, 0, coeffs)


def test_iterate_fibonacci():
    assert iterate([-1, -1, 1], [0, 1], 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21,
                                                 34]
    assert iterate([-1, -1, 1], [0, 1], 1) == [0]


def test_iterate_rejects():
    with pytest.raises(ValueError):
        iterate([-1, -1, 1], [0], 5)
    with pytest.raises(ZeroLeadingCoefficient):
        iterate([1, 0], [1], 5)


def test_extend_line_linearity():
    rng = random.Random(2)
    for _ in range(100):
        line = random_line(rng, rng.randint(1, 4))
        s = [Fraction(rng.randint(-5, 5)) for _ in range(line.order)]
        t = [Fraction(rng.randint(-5, 5)) for _ in range(line.order)]
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        n = rng.randint(line.order, 15)
        combined = extend_line(line, [a * x + y for x, y in zip(s, t)], n)
        expected = [a * x + y for x, y in zip(extend_line(line, s, n),
                                              extend_line(line, t, n))]
        assert combined == expected


def test_extend_line_shift_consistency():
    rng = random.Random(4)
    for _ in range(100):
        line = random_line(rng, rng.randint(1, 4))
        segment = [Fraction(rng.randint(-5, 5)) for _ in range(line.order)]
        k = rng.randint(0, 6)
        n = k + line.order + rng.randint(0, 8)
        full = extend_line(line, segment, n)
        window = full[k:k + line.order]
        assert extend_line(line, window, n - k) == full[k:]


def test_validate_accepts(example1, example2):
    assert validate(example1)
    assert validate(example2)


@pytest.mark.parametrize('problem, error', [
    (Problem(DifferenceEquation2((0, 1), {(0, 1): 1}), [], {}),
     DegenerateDimension),
    (Problem(DifferenceEquation2((1, 1), {(1, 1): 1, (2, 0): 1}), [], {}),
     CoefficientOutOfBox),
    (Problem(DifferenceEquation2((1, 1), {(0, 1): -1, (0, 0): -1}), [], {}),
     ZeroCornerCoefficient),
    (binomial(lines=[LineRecurrence(FIXED_X1, 1, [0, 1])]), LineOutOfRange),
    (binomial(lines=[LineRecurrence(FIXED_X1, 0, [0, 1]),
                     LineRecurrence(FIXED_X1, 0, [0, 1])]), DuplicateLine),
    (binomial(column=(1, 0)), SlotCountMismatch),
    (binomial(lines=[LineRecurrence(FIXED_X1, 0, [1, 0]),
                     LineRecurrence(FIXED_X2, 0, [-1, 1])]),
     ZeroLeadingCoefficient),
])
def test_validate_rejects(problem, error):
    with pytest.raises(error):
        validate(problem)


def test_missing_line():
    problem = binomial(lines=[LineRecurrence(FIXED_X1, 0, [0, 1])])
    problem = problem.with_initial({(1, 0): [1]})
    with pytest.raises(MissingLine) as info:
        validate(problem)
    assert info.value.missing == ((FIXED_X2, 0),)
    assert isinstance(info.value, ProblemError)


def test_resolve_binomial(example1):
    data = resolve(example1)
    assert data.segment((1, 0)) == (1,)
    assert phi_at(data, (0, 0)) == 1
    assert phi_at(data, (0, 5)) == 0
    assert phi_at(data, (5, 0)) == 1
    for point in [(1, 1), (3, 2), (-1, 0)]:
        with pytest.raises(PointNotInX0):
            phi_at(data, point)


def test_resolve_fills_holes(reader):
    problem = reader.read(data_path('holes.json'))
    data = resolve(problem)
    assert data.segment((FIXED_X1, 0)) == (1,)
    assert data.segment((FIXED_X1, 1)) == (0, 1)
    assert [data.phi_at((x1, 0)) for x1 in range(7)] == [1, 0, 1, 1, 2, 3, 5]
    assert [data.phi_at((1, x2)) for x2 in range(4)] == [0, 1, 0, 0]


def test_resolve_hole_beyond_segment():
    # hole at (2,0) of column x1=2 must come from extending the row line
    eq = DifferenceEquation2((3, 1), {(3, 1): 1, (0, 0): 1})
    lines = [LineRecurrence(FIXED_X1, 0, [0, 1]),
             LineRecurrence(FIXED_X1, 1, [0, 1]),
             LineRecurrence(FIXED_X1, 2, [0, 1]),
             LineRecurrence(FIXED_X2, 0, [-1, 1])]
    problem = Problem(eq, lines, {(1, 0): [2], (1, 1): [None],
                                  (1, 2): [None], (2, 0): [2]})
    data = resolve(problem)
    assert data.segment((FIXED_X1, 2)) == (2,)


def test_underdetermined(reader):
    problem = reader.read(data_path('underdetermined.json'))
    with pytest.raises(Underdetermined) as info:
        resolve(problem)
    assert set(info.value.holes) == {(0, 0)}


def test_inconsistent(reader):
    problem = reader.read(data_path('inconsistent.json'))
    with pytest.raises(Inconsistent) as info:
        resolve(problem)
    assert info.value.point == (0, 0)
    assert info.value.column_value == 2
    assert info.value.row_value == 1


def test_resolve_idempotent():
    for seed in range(50):
        data = resolve(generate_problem(seed, hole_probability=1.0))
        again = resolve(data.as_problem())
        assert again.segments == data.segments
        assert not data.as_problem().init.holes()


def strip_grid(problem, limit):
    '''Every line of a hole-free problem iterated to ``limit`` entries,
    written into a dict keyed by grid point'''
    grid = dict()
    for line in problem.lines:
        values = iterate(line.coeffs, problem.init.slots(line.key), limit + 1)
        for index, value in enumerate(values):
            point = line.point(index)
            assert grid.setdefault(point, value) == value, point
    return grid


def test_phi_at_against_strip_grid():
    limit = 20
    for seed in range(30):
        filled = generate_problem(seed, hole_probability=0.0)
        holey = generate_problem(seed, hole_probability=1.0)
        assert [ln.key for ln in filled.lines] == [ln.key for ln in holey.lines]
        grid = strip_grid(filled, limit)
        data = resolve(holey)

        m1, m2 = holey.m
        for x1 in range(limit + 1):
            for x2 in range(limit + 1):
                if x1 < m1 or x2 < m2:
                    assert data.phi_at((x1, x2)) == grid[(x1, x2)]
                    assert phi_at(data, (x1, x2)) == grid[(x1, x2)]
                else:
                    with pytest.raises(PointNotInX0):
                        data.phi_at((x1, x2))

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
