"""Truncated power series in one variable with exact rational coefficients.

A ``TruncSeries`` of order D carries the coefficients of t^0..t^D. Every
operation returns the exact coefficients of the untruncated result modulo
t^{D+1}; binary operations on series of different orders truncate to the
smaller one.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import int_to_str, str_to_int
from .errors import DomainError


@dataclass(frozen=True)
class TruncSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        cs = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c, order):
        return cls(order, (c,))

    @classmethod
    def monomial(cls, c, k, order):
        """``c * t^k`` truncated at ``order``."""
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(order, cs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return TruncSeries(min(order, self.order), self.coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = min(self.order, other.order)
        return TruncSeries(d, [self.coeffs[k] + other.coeffs[k] for k in range(d + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, TruncSeries):
            return NotImplemented
        d = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        # skip zero terms; the series built here are mostly sparse products
        nz_a = [(i, c) for i, c in enumerate(a[: d + 1]) if c]
        nz_b = [(j, c) for j, c in enumerate(b[: d + 1]) if c]
        out = [Fraction(0)] * (d + 1)
        for i, ca in nz_a:
            for j, cb in nz_b:
                if i + j > d:
                    break
                out[i + j] += ca * cb
        return TruncSeries(d, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = TruncSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*t^{k}")
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"

    def to_json(self):
        return {"order": self.order, "coeffs": [format_fraction(c) for c in self.coeffs]}

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        order = int(data["order"])
        coeffs = data["coeffs"]
        if len(coeffs) != order + 1:
            raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
        return cls(order, [parse_fraction(c) for c in coeffs])


def format_fraction(x):
    """``"num/den"`` (or a bare integer) in lowest terms."""
    x = Fraction(x)
    num = int_to_str(x.numerator)
    return num if x.denominator == 1 else f"{num}/{int_to_str(x.denominator)}"


def parse_fraction(text):
    """Inverse of ``format_fraction``; also accepts plain integers."""
    num, _, den = str(text).partition("/")
    return Fraction(str_to_int(num), str_to_int(den) if den else 1)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def invert(a):
    """Multiplicative inverse modulo t^{D+1}; needs a nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise DomainError("cannot invert a series with zero constant term")
    d = a.order
    inv0 = 1 / c0
    b = [inv0]
    for n in range(1, d + 1):
        acc = sum(a.coeffs[k] * b[n - k] for k in range(1, n + 1) if a.coeffs[k])
        b.append(-acc * inv0)
    return TruncSeries(d, b)


def geometric_factor(c, k, order):
    """Expansion of ``(1 - c t^k)^{-1}``."""
    return geometric_power(c, k, 1, order)


def geometric_power(c, k, m, order):
    """Expansion of ``(1 - c t^k)^{-m}`` for an integer m >= 0.

    Coefficient of ``t^{kn}`` is ``binom(m + n - 1, n) c^n``; this is how a
    local factor shared by m closed points is raised to its multiplicity
    without m separate multiplications.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    c = Fraction(c)
    cs = [Fraction(0)] * (order + 1)
    cs[0] = Fraction(1)
    if m == 0:
        return TruncSeries(order, cs)
    power = Fraction(1)
    for n in range(1, order // k + 1):
        power *= c
        cs[n * k] = comb(m + n - 1, n) * power
    return TruncSeries(order, cs)


def poly_eval_series(int_coeffs, inner):
    """Compose the polynomial ``sum a_j x^j`` with a series, by Horner's rule."""
    result = TruncSeries.constant(0, inner.order)
    for a in reversed(list(int_coeffs)):
        result = result * inner + a
    return result
