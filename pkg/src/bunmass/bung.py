"""Frobenius traces on the cohomology of Bun_G and the matching Euler product.

Everything here is built from two inputs: the degrees ``d_i`` of the split
group and the Weil numerator ``P`` of the curve. Cohomology of Bun_G is the
free graded-commutative algebra on ``H^*(X) (x) M``, with one copy of
``H^*(X)`` per degree; on the copy attached to ``d`` the inverse Frobenius
acts with eigenvalue ``q^{1-d}`` in cohomological degree ``2d-2``,
``q^{-d} alpha_j`` in degree ``2d-1`` and ``q^{-d}`` in degree ``2d``.

Local factors use degrees rather than exponents, fixed by the exact
identity ``prod_i (1 - q_x^{-d_i})^{-1} = q_x^{dim G} / |G(k_x)|``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .errors import DomainError, ValidationError
from .powerseries import (
    TruncSeries,
    format_fraction,
    geometric_factor,
    geometric_power,
    poly_eval_series,
)
from .rootsys import GroupInvariants, chevalley_order
from .zeta import CurveZeta, closed_points, zeta_value

DEFAULT_SERIES_ORDER = 20
DEFAULT_COHOMOLOGY_CUTOFF = 40
DEFAULT_POINT_DEGREE = 12

#: refuse exact Euler products whose numerator would exceed this many bits
MAX_EULER_BITS = 1 << 22


@dataclass(frozen=True)
class BunGContext:
    group: GroupInvariants
    curve: CurveZeta

    def __post_init__(self):
        if self.curve.q < 2:
            raise ValidationError("curve must live over a field with q >= 2")
        if min(self.group.degrees) < 2:
            raise ValidationError("group degrees must all be >= 2")

    @property
    def q(self):
        return self.curve.q

    @property
    def genus(self):
        return self.curve.genus

    @property
    def degrees(self):
        return self.group.degrees

    @property
    def dim_bun(self):
        """``dim Bun_G = (g - 1) dim G``."""
        return (self.genus - 1) * self.group.dim_g


def trace_total(ctx):
    """``prod_i zeta_X(d_i)``: the full alternating trace of Frob^{-1} on H^*(Bun_G)."""
    return prod((zeta_value(ctx.curve, d) for d in ctx.degrees), start=Fraction(1))


def tamagawa_rhs(ctx):
    """``q^{dim Bun_G} prod_i zeta_X(d_i)``, the predicted groupoid mass of Bun_G(F_q)."""
    return Fraction(ctx.q) ** ctx.dim_bun * trace_total(ctx)


def local_factor(ctx, d):
    """``prod_i (1 - q^{-d_i d})^{-1}`` for a closed point of degree d."""
    qx = ctx.q**d
    return prod((1 / (1 - Fraction(1, qx**di)) for di in ctx.degrees), start=Fraction(1))


def local_mass(ctx, d):
    """``q_x^{dim G} / |G(k_x)|`` for a closed point of degree d, from the group order."""
    qx = ctx.q**d
    return Fraction(qx**ctx.group.dim_g, chevalley_order(ctx.group, qx))


def ser1(ctx, order=DEFAULT_SERIES_ORDER):
    """``prod_i P(q^{-d_i} t) / ((1 - q^{1-d_i} t)(1 - q^{-d_i} t))`` mod t^{order+1}."""
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    q = ctx.q
    result = TruncSeries.constant(1, order)
    for d in ctx.degrees:
        u = Fraction(1, q**d)
        result = result * poly_eval_series(ctx.curve.numerator, TruncSeries.monomial(u, 1, order))
        result = result * geometric_factor(q * u, 1, order) * geometric_factor(u, 1, order)
    return result


def ser1_value(ctx, t):
    """Closed rational form of ``ser1`` evaluated at a rational ``t`` with |t| below the radius."""
    t = Fraction(t)
    q = ctx.q
    value = Fraction(1)
    for d in ctx.degrees:
        u = Fraction(1, q**d) * t
        num = sum(c * u**k for k, c in enumerate(ctx.curve.numerator))
        value *= num / ((1 - q * u) * (1 - u))
    return value


def ser2(ctx, order=DEFAULT_SERIES_ORDER):
    """Euler product over closed points, truncated at t^{order}.

    A point of degree d contributes ``prod_i (1 - q^{-d_i d} t^d)^{-1}``;
    points of degree > order cannot reach t^{order} and are dropped.
    """
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    q = ctx.q
    result = TruncSeries.constant(1, order)
    for deg in range(1, order + 1):
        a_d = closed_points(ctx.curve, deg)
        if not a_d:
            continue
        for d in ctx.degrees:
            result = result * geometric_power(Fraction(1, q ** (d * deg)), deg, a_d, order)
    return result


@dataclass(frozen=True)
class SeriesComparison:
    ok: bool
    order: int
    first_mismatch: object = None
    lhs: object = None
    rhs: object = None

    def describe(self):
        if self.ok:
            return f"identical through t^{self.order}"
        return (
            f"first discrepancy at t^{self.first_mismatch}: "
            f"{format_fraction(self.lhs)} != {format_fraction(self.rhs)}"
        )


def series_identity_check(ctx, order=DEFAULT_SERIES_ORDER):
    """Compare ``ser1`` and ``ser2`` coefficient by coefficient (exact equality)."""
    a = ser1(ctx, order)
    b = ser2(ctx, order)
    for k in range(order + 1):
        if a[k] != b[k]:
            return SeriesComparison(False, order, k, a[k], b[k])
    return SeriesComparison(True, order)


def convergence_radius_bound(ctx):
    """``min_i q^{d_i - 1}``; every pole and zero of ``ser1`` lies at least this far out."""
    bound = min(Fraction(ctx.q) ** (d - 1) for d in ctx.degrees)
    assert bound >= 2
    return bound


@dataclass(frozen=True)
class EulerTruncation:
    D: int
    value: Fraction
    tail_bound: Fraction


def euler_tail_bound(ctx, D):
    """Rigorous upper bound on ``log(full product / product over deg <= D)``.

    For a point of degree d > D each factor has ``x = q^{-d_i d} <= q^{-2d}
    <= 1/4``, and ``-log(1-x) <= x/(1-x) <= 4x/3``. The Weil bound gives
    ``a_d <= N_d/d <= (q^d + 1 + 2g q^{ceil(d/2)})/(D+1)``. Hence the log
    ratio is at most

        4r / (3(D+1)) * sum_{d>D} (q^{-d} + q^{-2d} + 2g q^{ceil(d/2) - 2d}),

    and each of the three sums is geometric (the last one in steps of two,
    ratio q^{-3}).
    """
    if D < 0:
        raise DomainError(f"D must be >= 0, got {D}")
    q = ctx.q
    r = len(ctx.degrees)
    x1 = Fraction(1, q)
    x2 = Fraction(1, q * q)
    s1 = x1 ** (D + 1) / (1 - x1)
    s2 = x2 ** (D + 1) / (1 - x2)

    def term(d):
        return Fraction(q) ** ((d + 1) // 2 - 2 * d)

    s3 = (term(D + 1) + term(D + 2)) / (1 - Fraction(1, q**3))
    return Fraction(4 * r, 3 * (D + 1)) * (s1 + s2 + 2 * ctx.genus * s3)


def euler_bits_estimate(ctx, D):
    """Rough bit size of the exact partial Euler product up to degree D."""
    bits = ctx.q.bit_length()
    return sum(
        closed_points(ctx.curve, d) * sum(di * d for di in ctx.degrees) * bits
        for d in range(1, D + 1)
    )


def feasible_point_degree(ctx, limit=DEFAULT_POINT_DEGREE, max_bits=1 << 16):
    """Largest D <= limit whose exact partial product stays under ``max_bits``."""
    D = limit
    while D > 1 and euler_bits_estimate(ctx, D) > max_bits:
        D -= 1
    return D


def euler_product_partial(ctx, D=DEFAULT_POINT_DEGREE, max_bits=MAX_EULER_BITS):
    """Exact product of the local factors over closed points of degree <= D."""
    if D < 1:
        raise DomainError(f"D must be >= 1, got {D}")
    if euler_bits_estimate(ctx, D) > max_bits:
        raise DomainError(
            f"exact Euler product up to degree {D} over F_{ctx.q} is too large; lower D"
        )
    value = Fraction(1)
    for deg in range(1, D + 1):
        a_d = closed_points(ctx.curve, deg)
        if a_d:
            value *= local_factor(ctx, deg) ** a_d
    return EulerTruncation(D, value, euler_tail_bound(ctx, D))


def euler_consistent(trunc, target):
    """True iff ``0 <= log(target / value) <= tail_bound``.

    Uses ``log y <= y - 1`` for an exact sufficient test before falling back
    to floating point.
    """
    ratio = Fraction(target) / trunc.value
    if ratio < 1:
        return False
    if ratio - 1 <= trunc.tail_bound:
        return True
    return math.log(ratio) <= float(trunc.tail_bound)


@dataclass(frozen=True)
class BiGradedTrace:
    degree_cutoff: int
    traces: tuple
    dims: tuple


def _exterior_factor(genus, odd_degree, K):
    # (1 + s^{2d-1})^{2g}
    return poly_eval_series(
        [comb(2 * genus, j) for j in range(2 * genus + 1)],
        TruncSeries.monomial(1, odd_degree, K),
    )


def poincare_series(group, genus, K=DEFAULT_COHOMOLOGY_CUTOFF):
    """``prod_i (1 + s^{2d_i-1})^{2g} / ((1 - s^{2d_i-2})(1 - s^{2d_i}))`` mod s^{K+1}."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    result = TruncSeries.constant(1, K)
    for d in group.degrees:
        result = result * _exterior_factor(genus, 2 * d - 1, K)
        result = result * geometric_factor(1, 2 * d - 2, K) * geometric_factor(1, 2 * d, K)
    return result


def bigraded_trace(ctx, K=DEFAULT_COHOMOLOGY_CUTOFF):
    """Traces of Frob^{-1} on H^k(Bun_G) and their dimensions for k <= K."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    q = ctx.q
    series = TruncSeries.constant(1, K)
    for d in ctx.degrees:
        u = Fraction(1, q**d)
        series = series * poly_eval_series(
            ctx.curve.numerator, TruncSeries.monomial(-u, 2 * d - 1, K)
        )
        series = series * geometric_factor(q * u, 2 * d - 2, K) * geometric_factor(u, 2 * d, K)
    dims = poincare_series(ctx.group, ctx.genus, K)
    return BiGradedTrace(K, series.coeffs, tuple(int(c) for c in dims.coeffs))


def alternating_partial_sums(trace):
    """Prefix sums ``S_K = sum_{k<=K} (-1)^k traces[k]``."""
    out = []
    acc = Fraction(0)
    for k, c in enumerate(trace.traces):
        acc += -c if k % 2 else c
        out.append(acc)
    return out


def verification_report(ctx, order=DEFAULT_SERIES_ORDER, point_degree=DEFAULT_POINT_DEGREE):
    """Both sides, the series identity and the Euler truncation as a flat dict.

    Rational values are left as Fractions; the CLI renders them as
    ``"num/den"`` strings.
    """
    cmp = series_identity_check(ctx, order)
    euler = euler_product_partial(ctx, point_degree)
    total = trace_total(ctx)
    return {
        "group": str(ctx.group.label),
        "curve": f"p1/F_{ctx.q}" if ctx.curve.label == "p1" else str(ctx.curve),
        "trace_total": total,
        "tamagawa_rhs": tamagawa_rhs(ctx),
        "ser_identity_order": order,
        "ser_identity_ok": cmp.ok,
        "euler": {
            "D": euler.D,
            "value": euler.value,
            "tail_bound": euler.tail_bound,
            "consistent": euler_consistent(euler, total),
        },
    }
