import random
from fractions import Fraction

import pytest

from ratgen.arith import (integer_scale, is_normalized, rat_add, rat_format,
                          rat_inv, rat_mul, rat_neg, rat_parse, to_rational)
from ratgen.errors import FieldZeroDivision, RationalFormatError


@pytest.mark.parametrize('text, expected', [
    ('3/6', Fraction(1, 2)),
    (' -4 ', Fraction(-4)),
    ('0/5', Fraction(0)),
    ('-10/4', Fraction(-5, 2)),
    ('7', Fraction(7)),
])
def test_parse(text, expected):
    value = rat_parse(text)
    assert value == expected
    assert is_normalized(value)


@pytest.mark.parametrize('text', ['1/0', '1.5', '1/-2', 'abc', '', '1e3',
                                  '--1', '1/'])
def test_parse_rejects(text):
    with pytest.raises(RationalFormatError):
        rat_parse(text)


def test_format():
    assert rat_format(Fraction(-2, 4)) == '-1/2'
    assert rat_format(Fraction(6, 3)) == '2'
    assert rat_format(rat_parse('0/7')) == '0'


def test_field_operations():
    a, b = Fraction(1, 2), Fraction(-1, 3)
    assert rat_add(a, b) == Fraction(1, 6)
    assert rat_mul(a, b) == Fraction(-1, 6)
    assert rat_neg(b) == Fraction(1, 3)
    assert rat_inv(Fraction(-2, 3)) == Fraction(-3, 2)


def random_triples(seed, count=150):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 30))
                    for _ in range(3))


def test_field_axioms():
    for a, b, c in random_triples(19):
        results = [rat_add(a, b), rat_mul(a, b), rat_neg(a),
                   rat_add(rat_add(a, b), c), rat_mul(rat_mul(a, b), c),
                   rat_mul(a, rat_add(b, c))]
        assert rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c))
        assert rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c))
        assert rat_mul(a, rat_add(b, c)) == \
            rat_add(rat_mul(a, b), rat_mul(a, c))
        assert rat_add(a, b) == rat_add(b, a)
        assert rat_mul(a, b) == rat_mul(b, a)
        assert rat_add(a, rat_neg(a)) == 0
        if a:
            inverse = rat_inv(a)
            results.append(inverse)
            assert rat_mul(a, inverse) == 1
        assert all(is_normalized(r) for r in results)


def test_inverse_of_zero():
    with pytest.raises(FieldZeroDivision):
        rat_inv(Fraction(0))
    # still a ZeroDivisionError for callers that do not know the package
    with pytest.raises(ZeroDivisionError):
        rat_inv(0)


def test_to_rational():
    assert to_rational(3) == 3
    assert to_rational('2/4') == Fraction(1, 2)
    with pytest.raises(RationalFormatError):
        to_rational(True)
    with pytest.raises(RationalFormatError):
        to_rational(0.5)


@pytest.mark.parametrize('values, expected', [
    ([Fraction(1, 2), Fraction(1, 3)], Fraction(6)),
    ([Fraction(2), Fraction(4)], Fraction(1, 2)),
    ([Fraction(-3, 4), Fraction(0), Fraction(9, 2)], Fraction(4, 3)),
    ([], Fraction(1)),
    ([Fraction(0)], Fraction(1)),
])
def test_integer_scale(values, expected):
    assert integer_scale(values) == expected


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
