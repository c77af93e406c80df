"""Brute-force checks that use no input from the trace computation.

SL_n-bundles on P^1 are classified by splitting types ``O(a_1) + ... +
O(a_n)`` with ``a_1 >= ... >= a_n`` and ``sum a_i = 0``. Their groupoid mass
is summed directly from automorphism-group orders; group orders themselves
are checked by enumerating matrices.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby, product
from math import prod

from .arith import check_prime_power, is_prime
from .bung import BunGContext, tamagawa_rhs
from .errors import ValidationError
from .rootsys import CartanLabel, invariants
from .zeta import projective_line

DEFAULT_MAX_TWIST = 20


@dataclass(frozen=True)
class SplittingType:
    a: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if sum(a) != 0:
            raise ValidationError(f"splitting type {a} does not sum to zero")
        if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
            raise ValidationError(f"splitting type {a} is not non-increasing")
        object.__setattr__(self, "a", a)

    @property
    def blocks(self):
        """``[(value, multiplicity), ...]`` with strictly decreasing values."""
        return [(v, len(list(g))) for v, g in groupby(self.a)]


def gl_order(m, q):
    """``|GL_m(F_q)| = prod_{i<m} (q^m - q^i)``."""
    return prod(q**m - q**i for i in range(m))


def aut_order(t, q):
    """Order of the automorphism group of ``sum O(a_i)`` on P^1 over F_q.

    Automorphisms are block upper-triangular: invertible diagonal blocks
    ``GL_{m_j}`` and arbitrary ``Hom(O(v'), O(v)) = H^0(O(v - v'))`` of
    dimension ``v - v' + 1`` above the diagonal.
    """
    if not isinstance(t, SplittingType):
        t = SplittingType(t)
    blocks = t.blocks
    u = 0
    for j, (v, m) in enumerate(blocks):
        for v2, m2 in blocks[j + 1 :]:
            u += m * m2 * (v - v2 + 1)
    return q**u * prod(gl_order(m, q) for _, m in blocks)


def splitting_types(n, max_twist):
    """All splitting types of rank n with ``a_1 <= max_twist``, in lexicographic order."""
    out = []

    def extend(prefix, remaining, total):
        if remaining == 1:
            if total <= prefix[-1]:
                out.append(SplittingType(prefix + [total]))
            return
        hi = prefix[-1]
        lo = -((-total) // remaining)  # ceil(total / remaining)
        for x in range(hi, lo - 1, -1):
            extend(prefix + [x], remaining - 1, total - x)

    for a1 in range(max_twist, -1, -1):
        extend([a1], n - 1, -a1)
    return out


@dataclass(frozen=True)
class MassReport:
    n: int
    q: int
    B: int
    partial_mass: Fraction
    tail_bound: Fraction
    rhs: Fraction

    @property
    def verdict(self):
        return abs(self.partial_mass - self.rhs) <= self.tail_bound


def _count_bound(n, A):
    # a_2..a_{n-1} each lie in [-(n-1)A, A]; a_n is then determined
    return (n * A + 1) ** (n - 2)


def mass_tail_bound(n, q, B):
    """Upper bound on the mass of splitting types with ``a_1 > B``.

    For ``a_1 = A >= 1``, pairing the top block with every other entry gives
    ``u >= sum_j (A - a_j) = nA``, and ``|GL_m| >= (q-1)^m``, so
    ``|Aut| >= (q-1)^n q^{nA}``. There are at most ``(nA+1)^{n-2}`` such
    types, so the omitted mass is at most ``(q-1)^{1-n} sum_{A>B}
    (nA+1)^{n-2} q^{-nA}``. Terms are summed exactly until their ratio drops
    below one; since the ratio decreases in A, the rest is dominated by a
    geometric series.
    """

    def term(A):
        return Fraction(_count_bound(n, A), q ** (n * A))

    total = Fraction(0)
    A = B + 1
    while True:
        ratio = term(A + 1) / term(A)
        if ratio < 1:
            total += term(A) / (1 - ratio)
            break
        total += term(A)
        A += 1
    return total / (q - 1) ** (n - 1)


def sl_mass_p1(n, q, B=DEFAULT_MAX_TWIST, rhs=None):
    """Groupoid mass of SL_n-bundles on P^1 over F_q, enumerated up to twist B.

    Mass is ``(q - 1) * sum_E 1/|Aut(E)|`` over bundles with trivial
    determinant; the factor counts trivializations of ``det E``. ``rhs``
    defaults to the trace-side prediction for type A_{n-1}.
    """
    if not 2 <= n <= 4:
        raise ValidationError(f"rank n must be in 2..4, got {n}")
    check_prime_power(q)
    if B < 1:
        raise ValidationError(f"max twist must be >= 1, got {B}")
    partial = sum(
        (Fraction(1, aut_order(t, q)) for t in splitting_types(n, B)), start=Fraction(0)
    )
    partial *= q - 1
    if rhs is None:
        ctx = BunGContext(invariants(CartanLabel("A", n - 1)), projective_line(q))
        rhs = tamagawa_rhs(ctx)
    return MassReport(n, q, B, partial, mass_tail_bound(n, q, B), Fraction(rhs))


def sl2_mass_closed_form(q):
    """``1/((q-1)(q^2-1))``: the n=2 sum done by hand as a geometric series."""
    return Fraction(1, (q - 1) * (q * q - 1))


# F_4 = {0, 1, w, w + 1} encoded as 0..3; addition is XOR
_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def _field_ops(q):
    if q == 4:
        return (lambda x, y: x ^ y), (lambda x, y: _F4_MUL[x][y]), (lambda x: x)
    if is_prime(q):
        return (lambda x, y: (x + y) % q), (lambda x, y: (x * y) % q), (lambda x: (-x) % q)
    raise ValidationError(f"brute-force field arithmetic only for primes and q=4, got {q}")


def brute_group_order(n, q):
    """Count n x n matrices over F_q with determinant 1 by exhaustive enumeration."""
    if n not in (2, 3) or q not in (2, 3, 4):
        raise ValidationError(f"unsupported (n, q) = ({n}, {q}); need n in {{2,3}}, q in {{2,3,4}}")
    add, mul, neg = _field_ops(q)
    sub = lambda x, y: add(x, neg(y))  # noqa: E731
    count = 0
    if n == 2:
        for a, b, c, d in product(range(q), repeat=4):
            if sub(mul(a, d), mul(b, c)) == 1:
                count += 1
        return count
    # 3x3: expand along the first row, reusing the 2x2 minors of the lower rows
    rows = list(product(range(q), repeat=3))
    for r2 in rows:
        for r3 in rows:
            m0 = sub(mul(r2[1], r3[2]), mul(r2[2], r3[1]))
            m1 = sub(mul(r2[0], r3[2]), mul(r2[2], r3[0]))
            m2 = sub(mul(r2[0], r3[1]), mul(r2[1], r3[0]))
            for a, b, c in rows:
                if add(sub(mul(a, m0), mul(b, m1)), mul(c, m2)) == 1:
                    count += 1
    return count
