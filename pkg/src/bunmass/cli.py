"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
Rationals are printed as ``num/den`` strings; ``--decimal k`` adds a
``<field>_decimal`` approximation with k digits after the point.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bung, oracle
from .arith import int_to_str
from .errors import DomainError, SpecParseError, ValidationError
from .powerseries import format_fraction
from .rootsys import CartanLabel, build_root_datum, chevalley_order, invariants
from .zeta import (
    closed_points,
    elliptic_from_weierstrass,
    from_numerator,
    point_count,
    projective_line,
    zeta_value,
)

COMMANDS = ("info", "zeta", "trace", "series-compare", "euler", "poincare", "verify-tamagawa")

MAX_ORDER = 200
MAX_TWIST = 64
MAX_POINT_DEGREE = 30
MAX_COHOMOLOGY_CUTOFF = 200
MAX_DECIMAL = 1000

CURVE_GRAMMAR = "p1 | weil:q=<int>,g=<int>,num=<int>,... | elliptic:p=<int>,a=[a1,a2,a3,a4,a6]"


@dataclass(frozen=True)
class RunConfig:
    command: str
    group_spec: str = None
    curve_spec: str = None
    q: int = None
    order: int = None
    max_twist: int = oracle.DEFAULT_MAX_TWIST
    point_degree: int = None
    cohomology_cutoff: int = bung.DEFAULT_COHOMOLOGY_CUTOFF
    format: str = "text"
    decimal: int = None


class _Cursor:
    """Position-tracking reader for curve spec strings."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, expected):
        raise SpecParseError(self.text, self.pos, expected)

    def literal(self, s):
        if not self.text.startswith(s, self.pos):
            self.fail(repr(s))
        self.pos += len(s)

    def integer(self):
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start : self.pos] == "-":
            self.pos = start
            self.fail("an integer")
        return int(self.text[start : self.pos])

    def at(self, s):
        return self.text.startswith(s, self.pos)

    def end(self):
        if self.pos != len(self.text):
            self.fail("end of spec")


def parse_curve(text, q=None):
    """Build a CurveZeta from a spec string; ``q`` is the --q flag, if any."""
    cur = _Cursor(text)
    if text == "p1":
        if q is None:
            raise ValidationError("curve 'p1' needs --q")
        return projective_line(q)
    if cur.at("weil:"):
        cur.literal("weil:")
        cur.literal("q=")
        cq = cur.integer()
        cur.literal(",")
        cur.literal("g=")
        g = cur.integer()
        cur.literal(",")
        cur.literal("num=")
        coeffs = [cur.integer()]
        while cur.at(","):
            cur.literal(",")
            coeffs.append(cur.integer())
        cur.end()
        _check_q(cq, q)
        return from_numerator(cq, g, coeffs, label=text)
    if cur.at("elliptic:"):
        cur.literal("elliptic:")
        cur.literal("p=")
        p = cur.integer()
        cur.literal(",")
        cur.literal("a=[")
        a = [cur.integer()]
        for _ in range(4):
            cur.literal(",")
            a.append(cur.integer())
        cur.literal("]")
        cur.end()
        _check_q(p, q)
        return elliptic_from_weierstrass(p, *a)
    cur.fail(CURVE_GRAMMAR)


def _check_q(spec_q, flag_q):
    if flag_q is not None and flag_q != spec_q:
        raise ValidationError(f"--q {flag_q} conflicts with q={spec_q} in the curve spec")


def _decimal(x, digits):
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _render(obj, digits):
    """Turn Fractions into strings, adding ``_decimal`` siblings when asked."""
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out[k] = _render(v, digits)
            if digits is not None and _is_rational(v):
                out[f"{k}_decimal"] = (
                    [_decimal(x, digits) for x in v] if isinstance(v, list) else _decimal(v, digits)
                )
        return out
    if isinstance(obj, list):
        return [_render(v, digits) for v in obj]
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    return obj


def _is_rational(v):
    if isinstance(v, Fraction):
        return True
    return isinstance(v, list) and bool(v) and all(isinstance(x, Fraction) for x in v)


def _text_lines(obj, indent=""):
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_text_lines(v, indent + "  "))
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: [{', '.join(str(x) for x in v)}]")
        elif isinstance(v, bool):
            lines.append(f"{indent}{k}: {'yes' if v else 'no'}")
        elif v is None:
            lines.append(f"{indent}{k}: -")
        else:
            lines.append(f"{indent}{k}: {v}")
    return lines


def _check_range(name, value, lo, hi):
    if value is not None and not lo <= value <= hi:
        raise ValidationError(f"{name} must be in [{lo}, {hi}], got {value}")


def _require(config, *fields):
    for f in fields:
        if getattr(config, f) is None:
            raise ValidationError(f"{config.command} needs --{f.replace('_spec', '').replace('_', '-')}")


def _group(config):
    return invariants(build_root_datum(CartanLabel.parse(config.group_spec)))


def _context(config):
    _require(config, "group_spec", "curve_spec")
    return bung.BunGContext(_group(config), parse_curve(config.curve_spec, config.q))


def _curve_name(curve):
    return f"p1/F_{curve.q}" if curve.label == "p1" else str(curve)


def _cmd_info(config):
    _require(config, "group_spec")
    datum = build_root_datum(CartanLabel.parse(config.group_spec))
    inv = invariants(datum)
    report = {
        "group": str(inv.label),
        "rank": inv.rank,
        "num_pos_roots": inv.num_pos_roots,
        "exponents": list(inv.exponents),
        "degrees": list(inv.degrees),
        "coxeter_number": inv.coxeter_number,
        "dim_g": inv.dim_g,
        "weyl_order": inv.weyl_order,
    }
    if config.q is not None:
        report["q"] = config.q
        report["chevalley_order"] = int_to_str(chevalley_order(inv, config.q))
    return report, True, None


def _cmd_zeta(config):
    _require(config, "curve_spec")
    curve = parse_curve(config.curve_spec, config.q)
    r_max = config.order if config.order is not None else 8
    report = {
        "curve": _curve_name(curve),
        "q": curve.q,
        "genus": curve.genus,
        "numerator": list(curve.numerator),
        "point_counts": [point_count(curve, r) for r in range(1, r_max + 1)],
        "closed_points": [closed_points(curve, d) for d in range(1, r_max + 1)],
        "zeta_values": {str(s): zeta_value(curve, s) for s in (2, 3, 4)},
    }
    return report, True, None


def _cmd_trace(config):
    ctx = _context(config)
    K = config.cohomology_cutoff
    bt = bung.bigraded_trace(ctx, K)
    sums = bung.alternating_partial_sums(bt)
    report = {
        "group": str(ctx.group.label),
        "curve": _curve_name(ctx.curve),
        "trace_total": bung.trace_total(ctx),
        "tamagawa_rhs": bung.tamagawa_rhs(ctx),
        "dim_bun": ctx.dim_bun,
        "convergence_radius_bound": bung.convergence_radius_bound(ctx),
        "cohomology": {
            "cutoff": K,
            "dims": list(bt.dims),
            "traces": list(bt.traces),
            "alternating_sum": sums[-1],
        },
    }
    return report, True, None


def _cmd_series_compare(config):
    ctx = _context(config)
    D = config.order if config.order is not None else bung.DEFAULT_SERIES_ORDER
    cmp = bung.series_identity_check(ctx, D)
    report = {
        "group": str(ctx.group.label),
        "curve": _curve_name(ctx.curve),
        "order": D,
        "ok": cmp.ok,
        "result": cmp.describe(),
        "ser1": list(bung.ser1(ctx, D).coeffs),
    }
    if not cmp.ok:
        report["ser2"] = list(bung.ser2(ctx, D).coeffs)
    return report, cmp.ok, cmp.describe()


def _point_degree(config, ctx):
    if config.point_degree is not None:
        return config.point_degree
    return bung.feasible_point_degree(ctx)


def _cmd_euler(config):
    ctx = _context(config)
    trunc = bung.euler_product_partial(ctx, _point_degree(config, ctx))
    total = bung.trace_total(ctx)
    ok = bung.euler_consistent(trunc, total)
    report = {
        "group": str(ctx.group.label),
        "curve": _curve_name(ctx.curve),
        "D": trunc.D,
        "value": trunc.value,
        "tail_bound": trunc.tail_bound,
        "trace_total": total,
        "consistent": ok,
    }
    msg = f"partial product through degree {trunc.D} {'is' if ok else 'is NOT'} within the tail bound"
    return report, ok, msg


def _cmd_poincare(config):
    _require(config, "group_spec", "curve_spec")
    inv = _group(config)
    curve = parse_curve(config.curve_spec, config.q)
    K = config.cohomology_cutoff
    series = bung.poincare_series(inv, curve.genus, K)
    report = {
        "group": str(inv.label),
        "genus": curve.genus,
        "cutoff": K,
        "coefficients": [int(c) for c in series.coeffs],
    }
    return report, True, None


def _cmd_verify(config):
    ctx = _context(config)
    D = config.order if config.order is not None else bung.DEFAULT_SERIES_ORDER
    E = _point_degree(config, ctx)
    report = bung.verification_report(ctx, D, E)
    euler_ok = report["euler"]["consistent"]
    label = ctx.group.label
    if label.family == "A" and label.rank <= 3 and ctx.curve.label == "p1":
        mass = oracle.sl_mass_p1(label.rank + 1, ctx.q, config.max_twist, rhs=report["tamagawa_rhs"])
        report["oracle"] = {
            "B": mass.B,
            "partial_mass": mass.partial_mass,
            "tail_bound": mass.tail_bound,
            "rhs": mass.rhs,
            "verdict": mass.verdict,
        }
        oracle_ok = mass.verdict
    else:
        report["oracle"] = None
        oracle_ok = True
    verdict = report["ser_identity_ok"] and euler_ok and oracle_ok
    report["verdict"] = verdict
    rhs = format_fraction(report["tamagawa_rhs"])
    if report["oracle"] is not None:
        msg = (
            f"bundle mass and trace side agree: both sides = {rhs} within bound"
            if oracle_ok
            else f"bundle mass {format_fraction(report['oracle']['partial_mass'])} differs from {rhs}"
        )
    else:
        msg = f"predicted mass {rhs} (no enumeration oracle for this group/curve)"
    return report, verdict, msg


_HANDLERS = {
    "info": _cmd_info,
    "zeta": _cmd_zeta,
    "trace": _cmd_trace,
    "series-compare": _cmd_series_compare,
    "euler": _cmd_euler,
    "poincare": _cmd_poincare,
    "verify-tamagawa": _cmd_verify,
}


def run(config, out=None, err=None):
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        _check_range("--order", config.order, 0, MAX_ORDER)
        _check_range("--max-twist", config.max_twist, 1, MAX_TWIST)
        _check_range("--point-degree", config.point_degree, 1, MAX_POINT_DEGREE)
        _check_range("--cohomology-cutoff", config.cohomology_cutoff, 0, MAX_COHOMOLOGY_CUTOFF)
        _check_range("--decimal", config.decimal, 0, MAX_DECIMAL)
        if config.format not in ("text", "json"):
            raise ValidationError(f"--format must be text or json, got {config.format!r}")
        report, ok, message = _HANDLERS[config.command](config)
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    rendered = _render(report, config.decimal)
    if config.format == "json":
        out.write(dumps(rendered))
    else:
        lines = _text_lines(rendered)
        if message:
            lines.append(message)
        out.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def dumps(report):
    return json.dumps(report, indent=2) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", dest="group_spec", help='Cartan label, e.g. "A1", "G2", "E8"')
    common.add_argument("--curve", dest="curve_spec", help=CURVE_GRAMMAR)
    common.add_argument("--q", type=int, help="field size (required for p1)")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--max-twist", type=int, default=oracle.DEFAULT_MAX_TWIST)
    common.add_argument("--point-degree", type=int, help="closed-point degree cutoff")
    common.add_argument(
        "--cohomology-cutoff", type=int, default=bung.DEFAULT_COHOMOLOGY_CUTOFF
    )
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--decimal", type=int, help="add k-digit decimal approximations")

    parser = argparse.ArgumentParser(
        prog="bunmass", description="Exact point counts and traces for moduli of G-bundles."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    config = RunConfig(**vars(ns))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
