import random
from fractions import Fraction

import pytest

from ratgen.arith import ZERO
from ratgen.errors import NotExpandable, ZeroLeadingCoefficient
from ratgen.poly import Poly1
from ratgen.recurrence import iterate
from ratgen.solver1d import (RatFunc1, expand_1d, gf_1d, gf_1d_parts,
                             gf_1d_shifted, residual_1d)


def random_recurrence(rng, max_order=4):
    order = rng.randint(1, max_order)
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for _ in range(order)]
    coeffs.append(Fraction(rng.choice([-2, -1, 1, 2, 3])))
    init = [Fraction(rng.randint(-5, 5)) for _ in range(order)]
    return coeffs, init


@pytest.mark.parametrize('coeffs, init, expected', [
    ([-1, -1, 1], [0, 1], 'z/(z^2 - z - 1)'),
    ([-1, 1], [1], 'z/(z - 1)'),
    ([-1, 1], [0], '0'),
    ([-1, -1, 1], [0, 0], '0'),
    ([-2, 1], [3], '3*z/(z - 2)'),
])
def test_gf_1d(coeffs, init, expected):
    assert gf_1d(coeffs, init).format() == expected


def test_fibonacci_expansion():
    func = gf_1d([-1, -1, 1], [0, 1])
    assert expand_1d(func, 20) == iterate([-1, -1, 1], [0, 1], 20)


@pytest.mark.parametrize('coeffs, init, start, expected', [
    ([-1, 1], [1], 1, '1/(z^2 - z)'),
    ([0, 1], [1], 1, '0'),
    ([-1, 1], [1], 0, '1/(z - 1)'),
])
def test_gf_1d_shifted(coeffs, init, start, expected):
    assert gf_1d_shifted(coeffs, init, start).format() == expected


def test_shift_zero_is_division_by_z():
    rng = random.Random(8)
    for _ in range(20):
        coeffs, init = random_recurrence(rng)
        plain = gf_1d(coeffs, init)
        expected = RatFunc1(plain.numerator, plain.denominator.shift(1))
        assert gf_1d_shifted(coeffs, init, 0) == expected


def test_shifted_matches_iteration():
    rng = random.Random(13)
    for _ in range(100):
        coeffs, init = random_recurrence(rng)
        start = rng.randint(0, 5)
        seq = iterate(coeffs, init, 25)
        expected = [ZERO] * (start + 1) + seq[start:24]
        assert expand_1d(gf_1d_shifted(coeffs, init, start), 25) == expected


def test_denominator_is_characteristic_polynomial():
    rng = random.Random(17)
    for _ in range(20):
        coeffs, init = random_recurrence(rng)
        assert gf_1d_parts(coeffs, init)[1] == Poly1(coeffs)


def test_linear_in_initial_data():
    rng = random.Random(23)
    for _ in range(100):
        coeffs, s = random_recurrence(rng)
        t = [Fraction(rng.randint(-5, 5)) for _ in s]
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        combined = gf_1d_parts(coeffs, [a * x + y for x, y in zip(s, t)])[0]
        expected = gf_1d_parts(coeffs, s)[0].scale(a) + \
            gf_1d_parts(coeffs, t)[0]
        assert combined == expected
        # same after reduction
        assert gf_1d(coeffs, [a * x + y for x, y in zip(s, t)]) == \
            gf_1d(coeffs, s) * a + gf_1d(coeffs, t)


def test_residual_1d_is_zero():
    rng = random.Random(29)
    for _ in range(100):
        coeffs, init = random_recurrence(rng)
        func = gf_1d_shifted(coeffs, init, 0)
        assert residual_1d(coeffs, init, func).is_zero()
    wrong = gf_1d_shifted([-1, 1], [2], 0)
    assert not residual_1d([-1, 1], [1], wrong).is_zero()


def test_errors():
    with pytest.raises(ZeroLeadingCoefficient):
        gf_1d([1, 0], [1])
    with pytest.raises(ValueError):
        gf_1d([-1, -1, 1], [1])
    with pytest.raises(NotExpandable):
        expand_1d(RatFunc1(Poly1([0, 0, 1]), Poly1([1, 1])), 5)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
