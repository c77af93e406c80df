"""Zeta functions of smooth projective curves over finite fields.

A curve enters only through its Weil numerator ``P(t) = 1 + a_1 t + ... +
a_{2g} t^{2g}``; point counts come from power sums of the reciprocal roots,
obtained from the integer coefficients by Newton's identities. Nothing is
ever evaluated in floating point.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import check_prime_power, divisors, is_prime, mobius
from .errors import CurveValidationError, DomainError, ValidationError

#: extension degrees through which positivity and the Weil bound are checked
CHECK_DEGREES = 8

MAX_ELLIPTIC_PRIME = 10**4


@dataclass(frozen=True)
class CurveZeta:
    q: int
    genus: int
    numerator: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(int(a) for a in self.numerator))

    def frobenius_power_sum(self, r):
        """``s_r = sum_j alpha_j^r`` over the reciprocal roots of P."""
        return power_sums(self.numerator, r)[r]

    def __str__(self):
        if self.label:
            return self.label
        return f"weil:q={self.q},g={self.genus},num={','.join(map(str, self.numerator))}"


def power_sums(coeffs, r):
    """``[s_0, ..., s_r]`` for ``P(t) = prod_j (1 - alpha_j t)`` given by ``coeffs``.

    Uses ``-t P'/P = sum s_k t^k``, i.e. ``k a_k + sum_{i=1}^{k} a_{k-i} s_i = 0``.
    """
    a = list(coeffs) + [0] * max(0, r + 1 - len(coeffs))
    s = [len(coeffs) - 1]
    for k in range(1, r + 1):
        s.append(-k * a[k] - sum(a[k - i] * s[i] for i in range(1, k)))
    return s


def projective_line(q):
    """The zeta function of P^1 over F_q."""
    check_prime_power(q)
    return CurveZeta(q, 0, (1,), label="p1")


def from_numerator(q, g, coeffs, label=""):
    """Validate a Weil numerator and wrap it as a CurveZeta.

    Checks, in order: shape (length 2g+1, leading 1), the functional
    equation ``a_{2g-j} = q^{g-j} a_j``, then ``N_r >= 0`` and the Weil bound
    ``|N_r - q^r - 1| <= 2g q^{r/2}`` for ``r <= CHECK_DEGREES``.
    """
    check_prime_power(q)
    if not isinstance(g, int) or g < 0:
        raise ValidationError(f"genus must be a nonnegative integer, got {g!r}")
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != 2 * g + 1:
        raise CurveValidationError(
            f"genus {g} needs {2 * g + 1} numerator coefficients, got {len(coeffs)}"
        )
    if coeffs[0] != 1:
        raise CurveValidationError(f"numerator must start with 1, got {coeffs[0]}")
    for j in range(g + 1):
        if coeffs[2 * g - j] != q ** (g - j) * coeffs[j]:
            raise CurveValidationError(
                f"functional equation fails: a_{2 * g - j} = {coeffs[2 * g - j]}"
                f" but q^{g - j} * a_{j} = {q ** (g - j) * coeffs[j]}"
            )
    zeta = CurveZeta(q, g, coeffs, label=label)
    for r in range(1, CHECK_DEGREES + 1):
        n_r = point_count(zeta, r)
        if n_r < 0:
            raise CurveValidationError(f"negative point count N_{r} = {n_r}", r=r)
        s = zeta.frobenius_power_sum(r)
        # |s_r| <= 2g q^{r/2}, squared to stay in integers
        if s * s > 4 * g * g * q**r:
            raise CurveValidationError(
                f"Weil bound fails at r={r}: |N_{r} - q^{r} - 1| = {abs(s)}", r=r
            )
    return zeta


def point_count(zeta, r):
    """``N_r = |X(F_{q^r})| = q^r + 1 - s_r``."""
    if r < 1:
        raise DomainError(f"extension degree must be >= 1, got {r}")
    return zeta.q**r + 1 - zeta.frobenius_power_sum(r)


def closed_points(zeta, d):
    """Number of closed points of degree d, by Moebius inversion."""
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    total = sum(mobius(d // e) * point_count(zeta, e) for e in divisors(d))
    a_d, rem = divmod(total, d)
    if rem or a_d < 0:
        raise ValidationError(f"closed-point count for degree {d} is not a nonnegative integer")
    return a_d


def closed_point_table(zeta, max_degree):
    return {d: closed_points(zeta, d) for d in range(1, max_degree + 1)}


def zeta_value(zeta, s):
    """``Z_X(q^{-s}) = P(q^{-s}) / ((1 - q^{-s})(1 - q^{1-s}))`` for integer s >= 2."""
    if not isinstance(s, int) or s <= 1:
        raise DomainError(f"zeta_value needs an integer s >= 2, got {s!r}")
    q = zeta.q
    u = Fraction(1, q**s)
    num = sum(c * u**k for k, c in enumerate(zeta.numerator))
    return num / ((1 - u) * (1 - q * u))


def weierstrass_discriminant(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def _affine_points(p, a1, a2, a3, a4, a6):
    count = 0
    if p == 2:
        for x in range(p):
            for y in range(p):
                if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                    count += 1
        return count
    # y^2 + b y = f  <=>  (2y + b)^2 = b^2 + 4f; each x contributes 1 + legendre
    half = (p - 1) // 2
    for x in range(p):
        b = a1 * x + a3
        f = x**3 + a2 * x * x + a4 * x + a6
        disc = (b * b + 4 * f) % p
        if disc == 0:
            count += 1
        elif pow(disc, half, p) == 1:
            count += 2
    return count


def elliptic_from_weierstrass(p, a1=0, a2=0, a3=0, a4=0, a6=0):
    """Zeta function of ``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` over F_p."""
    if not is_prime(p):
        raise ValidationError(f"p = {p} is not prime")
    if p > MAX_ELLIPTIC_PRIME:
        raise ValidationError(f"p = {p} exceeds the enumeration limit {MAX_ELLIPTIC_PRIME}")
    coeffs = [c % p for c in (a1, a2, a3, a4, a6)]
    if weierstrass_discriminant(*coeffs) % p == 0:
        raise ValidationError(f"curve {coeffs} is singular mod {p}")
    n1 = _affine_points(p, *coeffs) + 1
    label = f"elliptic:p={p},a=[{','.join(str(c) for c in (a1, a2, a3, a4, a6))}]"
    return from_numerator(p, 1, (1, n1 - p - 1, p), label=label)
