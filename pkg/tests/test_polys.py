import random
from fractions import Fraction

import pytest

from ecrank import polys


def test_evaluate_and_basics():
    p = [1, -3, 2]  # 2x^2 - 3x + 1
    assert polys.evaluate(p, 0) == 1
    assert polys.evaluate(p, 1) == 0
    assert polys.evaluate(p, Fraction(1, 2)) == 0
    assert polys.add([1, 1], [0, 0, 3]) == [1, 1, 3]
    assert polys.mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert polys.derivative([5, 4, 3, 2]) == [4, 6, 6]
    assert polys.degree([0, 0, 1, 0]) == 2


def test_primitive_part():
    assert polys.primitive_part([4, -8, 12]) == [1, -2, 3]
    assert polys.primitive_part([-2, 0, -4]) == [1, 0, 2]  # leading made positive


def test_divide_exact():
    prod = polys.mul([1, 2, 1], [-3, 1])
    assert polys.divide_exact(prod, [-3, 1]) == [1, 2, 1]
    with pytest.raises(ValueError):
        polys.divide_exact([1, 1, 1], [1, 1])


def test_squarefree_part_collapses_multiplicity():
    # (x-2)^2 (x+3)
    p = polys.mul(polys.mul([-2, 1], [-2, 1]), [3, 1])
    sf = polys.squarefree_part(p)
    assert polys.degree(sf) == 2
    assert polys.evaluate(sf, 2) == 0 and polys.evaluate(sf, -3) == 0


def test_integer_roots_constructed():
    rng = random.Random(11)
    for _ in range(60):
        roots = sorted(rng.sample(range(-40, 40), rng.randint(1, 4)))
        p = [1]
        for r in roots:
            p = polys.mul(p, [-r, 1])
        # multiply by an irreducible quadratic so extra factors do not add roots
        p = polys.mul(p, [1, 1, 1])
        assert polys.integer_roots(p) == roots


def test_integer_roots_repeated_and_zero():
    assert polys.integer_roots([0, 0, 4]) == [0]
    assert polys.integer_roots([4, -4, 1]) == [2]  # (x-2)^2
    assert polys.integer_roots([6, -5, 1]) == [2, 3]
    assert polys.integer_roots([53361, -4, 0, 1]) == []
    assert polys.integer_roots([5]) == []
    assert polys.integer_roots([0, 7]) == [0]
    with pytest.raises(ValueError):
        polys.integer_roots([])


def test_integer_roots_huge_coefficients():
    # scale of a degree-24 division polynomial: roots must still come back
    big = 10**45 + 7
    p = polys.mul([-3, 1], [big, 0, 0, 0, 0, 1])  # (x - 3)(x^5 + big)
    assert polys.integer_roots(p) == [3]
    assert polys.integer_roots([big, 0, 0, 0, 0, 1]) == []


def test_integer_roots_matches_bruteforce_scan():
    rng = random.Random(23)
    for _ in range(80):
        p = [rng.randint(-20, 20) for _ in range(rng.randint(3, 6))]
        if not any(p) or polys.degree(p) < 1:
            continue
        brute = [x for x in range(-25, 26) if polys.evaluate(p, x) == 0]
        mine = [r for r in polys.integer_roots(p) if -25 <= r <= 25]
        assert mine == brute


def test_rational_roots():
    # (2x - 1)(3x + 2)(x^2 + 1)
    p = polys.mul(polys.mul([-1, 2], [2, 3]), [1, 0, 1])
    assert polys.rational_roots(p) == [Fraction(-2, 3), Fraction(1, 2)]
    assert polys.rational_roots([-1, 0, 0, 0, 2]) == []  # 2x^4 - 1
    assert polys.rational_roots([0, 0, 5, 5]) == [Fraction(-1), Fraction(0)]
