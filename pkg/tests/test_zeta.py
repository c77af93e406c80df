from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bunmass.errors import CurveValidationError, DomainError, ValidationError
from bunmass.powerseries import TruncSeries, geometric_power, poly_eval_series
from bunmass.zeta import (
    closed_points,
    elliptic_from_weierstrass,
    from_numerator,
    point_count,
    projective_line,
    weierstrass_discriminant,
    zeta_value,
)

F4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


def gf2_irreducible_count(d):
    """Monic irreducible polynomials of degree d over F_2, by trial division."""

    def mod(a, b):
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        return a

    count = 0
    for f in range(1 << d, 1 << (d + 1)):
        if all(mod(f, g) for k in range(1, d // 2 + 1) for g in range(1 << k, 1 << (k + 1))):
            count += 1
    return count


def brute_affine_count(p, a):
    a1, a2, a3, a4, a6 = a
    return sum(
        1
        for x, y in product(range(p), repeat=2)
        if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % p == 0
    )


def test_p1_point_counts():
    assert point_count(projective_line(2), 1) == 3
    assert point_count(projective_line(2), 3) == 9
    assert point_count(projective_line(3), 2) == 10


def test_p1_closed_points_over_f2():
    p1 = projective_line(2)
    assert [closed_points(p1, d) for d in (1, 2, 3)] == [3, 1, 2]


@pytest.mark.parametrize("d", range(2, 9))
def test_p1_closed_points_match_irreducible_polynomials(d):
    assert closed_points(projective_line(2), d) == gf2_irreducible_count(d)


def test_p1_closed_points_over_f3():
    assert closed_points(projective_line(3), 3) == 8


def test_supersingular_curve_over_f2():
    z = from_numerator(2, 1, [1, 0, 2])
    assert point_count(z, 1) == 3
    assert point_count(z, 2) == 9


def test_supersingular_curve_f4_points_by_enumeration():
    # y^2 + y = x^3 over F_4: affine solutions plus the point at infinity
    affine = sum(
        1 for x, y in product(range(4), repeat=2)
        if F4_MUL[y][y] ^ y == F4_MUL[F4_MUL[x][x]][x]
    )
    assert affine + 1 == point_count(from_numerator(2, 1, [1, 0, 2]), 2)


def test_rejects_bad_numerators():
    # N_1 = q + 1 + a_1 = 8 sits outside the Weil interval [3 - 2 sqrt 2, 3 + 2 sqrt 2]
    with pytest.raises(CurveValidationError) as exc:
        from_numerator(2, 1, [1, 5, 2])
    assert exc.value.r == 1
    with pytest.raises(CurveValidationError, match="functional equation"):
        from_numerator(2, 1, [1, 1, 3])


def test_rejects_negative_point_count():
    # a_1 = -5 gives N_1 = -2
    with pytest.raises(CurveValidationError, match="negative point count N_1") as exc:
        from_numerator(2, 1, [1, -5, 2])
    assert exc.value.r == 1


def test_rejects_shape_errors():
    with pytest.raises(CurveValidationError):
        from_numerator(2, 1, [1, 0])
    with pytest.raises(CurveValidationError):
        from_numerator(2, 0, [2])
    with pytest.raises(ValidationError):
        from_numerator(6, 0, [1])


def test_genus_two_numerator():
    # a curve over F_3 with N_1 = 4, N_2 = 10
    z = from_numerator(3, 2, [1, 0, 0, 0, 9])
    assert z.genus == 2
    assert point_count(z, 1) == 4


def test_zeta_values():
    p1 = projective_line(2)
    assert zeta_value(p1, 2) == Fraction(8, 3)
    assert zeta_value(p1, 3) == Fraction(32, 21)
    assert zeta_value(from_numerator(2, 1, [1, 0, 2]), 2) == 3


def test_zeta_value_domain():
    with pytest.raises(DomainError):
        zeta_value(projective_line(2), 1)
    with pytest.raises(DomainError):
        point_count(projective_line(2), 0)


def test_elliptic_examples():
    e = elliptic_from_weierstrass(2, a3=1)
    assert e.numerator == (1, 0, 2)
    e5 = elliptic_from_weierstrass(5, a4=1)
    assert point_count(e5, 1) == brute_affine_count(5, (0, 0, 0, 1, 0)) + 1
    with pytest.raises(ValidationError):
        elliptic_from_weierstrass(3)
    with pytest.raises(ValidationError):
        elliptic_from_weierstrass(4, a3=1)
    with pytest.raises(ValidationError):
        elliptic_from_weierstrass(10007, a4=1)


@settings(max_examples=60, deadline=None)
@given(
    p=st.sampled_from([2, 3, 5, 7, 11, 13]),
    a=st.lists(st.integers(0, 12), min_size=5, max_size=5),
)
def test_elliptic_count_and_validation(p, a):
    if weierstrass_discriminant(*a) % p == 0:
        with pytest.raises(ValidationError):
            elliptic_from_weierstrass(p, *a)
        return
    e = elliptic_from_weierstrass(p, *a)
    assert point_count(e, 1) == brute_affine_count(p, a) + 1
    from_numerator(e.q, e.genus, e.numerator)


CURVES = [
    projective_line(2),
    projective_line(3),
    projective_line(4),
    from_numerator(2, 1, [1, 0, 2]),
    elliptic_from_weierstrass(5, a4=1),
    elliptic_from_weierstrass(7, a4=1, a6=3),
    from_numerator(3, 2, [1, 0, 0, 0, 9]),
]


@pytest.mark.parametrize("curve", CURVES, ids=str)
def test_closed_points_sum_to_point_counts(curve):
    for r in range(1, 9):
        assert sum(d * closed_points(curve, d) for d in range(1, r + 1) if r % d == 0) == point_count(curve, r)


@pytest.mark.parametrize("curve", CURVES, ids=str)
@pytest.mark.parametrize("s", [2, 3])
def test_truncated_euler_product(curve, s):
    D = 10
    u = Fraction(1, curve.q**s)
    euler = TruncSeries.constant(1, D)
    for d in range(1, D + 1):
        euler = euler * geometric_power(u**d, d, closed_points(curve, d), D)
    rational = poly_eval_series(curve.numerator, TruncSeries.monomial(u, 1, D))
    rational = rational * geometric_power(u, 1, 1, D) * geometric_power(curve.q * u, 1, 1, D)
    assert euler == rational
    assert zeta_value(curve, s) > 0
