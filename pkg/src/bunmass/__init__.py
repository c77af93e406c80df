"""Exact arithmetic for point counts of moduli of G-bundles over finite fields.

Modules:

- ``rootsys``: root data, exponents, degrees and Chevalley group orders
- ``zeta``: curve zeta functions from Weil numerators
- ``powerseries``: truncated power series over the rationals
- ``bung``: Frobenius traces on H^*(Bun_G), both series, Euler products
- ``oracle``: brute-force bundle masses on P^1 and matrix group counts
- ``cli``: the ``bunmass`` command
"""

from .bung import (
    BunGContext,
    alternating_partial_sums,
    bigraded_trace,
    convergence_radius_bound,
    euler_product_partial,
    poincare_series,
    ser1,
    ser2,
    series_identity_check,
    tamagawa_rhs,
    trace_total,
)
from .errors import CurveValidationError, DomainError, SpecParseError, ValidationError
from .oracle import aut_order, brute_group_order, sl_mass_p1
from .powerseries import TruncSeries
from .rootsys import CartanLabel, build_root_datum, chevalley_order, invariants
from .zeta import (
    closed_points,
    elliptic_from_weierstrass,
    from_numerator,
    point_count,
    projective_line,
    zeta_value,
)

__version__ = "0.1.0"
