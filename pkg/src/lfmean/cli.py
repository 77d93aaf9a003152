"""
Command-line interface.

Usage:
    lfmean formula 1 1 2                 # general pipeline
    lfmean formula --single 3 --format json
    lfmean verify 2 2 --f-list 3,5,8,12 --prec 256
    lfmean identity --max-weight 20
    lfmean table --single-range 1..5 --f-list 3,7 --format csv
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

import click
import mpmath

from .errors import ArityError, BudgetExceeded, ParityError
from .formulas import (
    MeanValueFormula,
    check_bernoulli_identity,
    evaluate_exact,
    evaluate_numeric,
    mean_value,
    mean_value_all_ones,
    mean_value_pair,
    mean_value_single,
)
from .oracle import brute_force_mean, collapsed_mean

__all__ = ["cli", "main"]

DEFAULT_PRECISION = 256
DEFAULT_TOLERANCE = "2^-160"


def default_precision() -> int:
    return int(os.environ.get("LFM_PRECISION_BITS", DEFAULT_PRECISION))


def _fail(message: str, code: int = 2) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
    except ValueError:
        raise click.BadParameter(f"not a list of integers: {text!r}")


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise click.BadParameter(f"expected a range like 1..5, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo < 1 or hi < lo:
        raise click.BadParameter(f"empty or non-positive range {text!r}")
    return lo, hi


def parse_tolerance(text: str):
    """Accept ``2^-k`` or any decimal literal."""
    m = re.fullmatch(r"\s*2\s*\^\s*(-?\d+)\s*", text)
    if m:
        return mpmath.ldexp(mpmath.mpf(1), int(m.group(1)))
    try:
        return mpmath.mpf(text)
    except (ValueError, TypeError):
        raise click.BadParameter(f"cannot parse tolerance {text!r}")


def decimal_digits(precision_bits: int) -> int:
    return max(int(precision_bits * 0.301 - 2), 1)


def render_real(x, precision_bits: int) -> str:
    return mpmath.nstr(x, decimal_digits(precision_bits), min_fixed=-5, max_fixed=20)


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@click.group()
def cli() -> None:
    """Exact mean values of products of Dirichlet L-values and their numerical checks."""


@cli.command()
@click.argument("m_vec", nargs=-1, type=int)
@click.option("--single", type=int, default=None, help="Mean of |L(m, chi)|^2.")
@click.option("--pair", nargs=2, type=int, default=None, help="Mean of L(m, chi) conj(L(n, chi)).")
@click.option("--all-ones", "all_ones", type=int, default=None, help="n-fold product at s = 1.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def formula(m_vec, single, pair, all_ones, fmt) -> None:
    """Print the exact mean-value formula."""
    chosen = [bool(m_vec), single is not None, pair is not None, all_ones is not None]
    if sum(chosen) != 1:
        _fail("give exactly one of: exponents, --single, --pair, --all-ones")
    try:
        if m_vec:
            result = mean_value(m_vec)
        elif single is not None:
            result = mean_value_single(single)
        elif pair is not None:
            result = mean_value_pair(*pair)
        else:
            result = mean_value_all_ones(all_ones)
    except (ParityError, ArityError, ValueError) as exc:
        _fail(str(exc))
    if fmt == "json":
        click.echo(result.to_json())
    else:
        click.echo(result.render())


def verification_record(m_vec, f: int, precision_bits: int, tol, oracle: str) -> dict:
    exact_formula = mean_value(m_vec)
    value = evaluate_numeric(exact_formula, f, precision_bits)
    if oracle == "nested":
        reference = brute_force_mean(m_vec, f, precision_bits).real
    else:
        reference = collapsed_mean(m_vec, f, precision_bits)
    with mpmath.workprec(precision_bits):
        diff = abs(value - reference)
    return {
        "m_vec": list(exact_formula.m_vec),
        "f": f,
        "formula_value": render_real(value, precision_bits),
        "oracle_value": render_real(reference, precision_bits),
        "abs_diff": render_real(diff, precision_bits),
        "precision_bits": precision_bits,
        "pass": bool(diff <= tol),
    }


@cli.command()
@click.argument("m_vec", nargs=-1, type=int, required=True)
@click.option("--f-list", "f_list", required=True, help="Comma-separated moduli, each > 2.")
@click.option("--prec", type=int, default=None, help="Working precision in bits.")
@click.option("--tol", default=DEFAULT_TOLERANCE, show_default=True, help="2^-k or a decimal.")
@click.option("--oracle", type=click.Choice(["collapsed", "nested"]), default="collapsed")
def verify(m_vec, f_list, prec, tol, oracle) -> None:
    """Compare the formula against a numerical oracle; one JSON line per modulus."""
    precision_bits = prec if prec is not None else default_precision()
    if precision_bits < 64:
        _fail(f"precision must be at least 64 bits, got {precision_bits}")
    tolerance = parse_tolerance(tol)
    moduli = _parse_int_list(f_list)
    if not moduli or any(f <= 2 for f in moduli):
        _fail(f"every modulus must exceed 2, got {f_list!r}")
    try:
        mean_value(m_vec)
    except (ParityError, ArityError, ValueError) as exc:
        _fail(str(exc))
    records = []
    for f in moduli:
        try:
            records.append(verification_record(m_vec, f, precision_bits, tolerance, oracle))
        except BudgetExceeded as exc:
            _fail(str(exc))
    for rec in records:
        click.echo(json.dumps(rec))
    if not all(rec["pass"] for rec in records):
        sys.exit(1)


@cli.command()
@click.option("--max-weight", "max_weight", type=int, default=20, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def identity(max_weight, fmt) -> None:
    """
    Check B_(m+n) = (-1)^(n-1) C(m+n, n) D(m, n) for same-parity m, n.

    The paper_sign column shows the (-1)^n reading and is informational only;
    the exit status follows the corrected column.
    """
    if max_weight < 2:
        _fail(f"max weight must be at least 2, got {max_weight}")
    reports = [
        check_bernoulli_identity(m, w - m)
        for w in range(2, max_weight + 1, 2)
        for m in range(1, w)
    ]
    if fmt == "json":
        for r in reports:
            click.echo(json.dumps(r.to_dict()))
    else:
        click.echo(f"{'m':>3} {'n':>3}  {'paper_sign':<10} {'corrected':<10} B_(m+n)")
        for r in reports:
            click.echo(
                f"{r.m:>3} {r.n:>3}  {str(r.paper_sign_matches):<10} "
                f"{str(r.corrected_sign_matches):<10} {_fraction_str(r.lhs)}"
            )
    if not all(r.corrected_sign_matches for r in reports):
        sys.exit(1)


def _table_formulas(single_range, pair_grid) -> list[MeanValueFormula]:
    out = []
    if single_range:
        lo, hi = _parse_range(single_range)
        out.extend(mean_value_single(m) for m in range(lo, hi + 1))
    if pair_grid:
        lo, hi = _parse_range(pair_grid)
        for m in range(lo, hi + 1):
            for n in range(lo, hi + 1):
                if (m - n) % 2:
                    continue
                out.append(mean_value([1, 1]) if (m, n) == (1, 1) else mean_value_pair(m, n))
    return sorted(out, key=lambda F: F.m_vec)


@cli.command()
@click.option("--single-range", "single_range", default=None, help="e.g. 1..5")
@click.option("--pair-grid", "pair_grid", default=None, help="e.g. 1..3")
@click.option("--f-list", "f_list", default="", help="Moduli at which to evaluate.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def table(single_range, pair_grid, f_list, fmt) -> None:
    """
    Exact coefficients and evaluated values.

    A value row holds q with M = q * pi^P at modulus f; a coefficient row
    holds c_l.
    """
    if not single_range and not pair_grid:
        _fail("give --single-range and/or --pair-grid")
    try:
        formulas = _table_formulas(single_range, pair_grid)
        moduli = sorted(set(_parse_int_list(f_list)))
    except click.BadParameter as exc:
        _fail(exc.message)
    if any(f <= 2 for f in moduli):
        _fail(f"every modulus must exceed 2, got {f_list!r}")

    if fmt == "json":
        docs = []
        for F in formulas:
            doc = F.to_dict()
            doc["values"] = []
            for f in moduli:
                q = evaluate_exact(F, f)
                doc["values"].append({"f": f, "num": str(q.numerator), "den": str(q.denominator)})
            docs.append(doc)
        click.echo(json.dumps(docs, indent=2))
        return

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m_vec", "pi_power", "f", "l", "value"])
    for F in formulas:
        label = " ".join(map(str, F.m_vec))
        for l, c in F.terms.items():
            writer.writerow([label, F.pi_power, "", l, _fraction_str(c)])
        for f in moduli:
            writer.writerow([label, F.pi_power, f, "", _fraction_str(evaluate_exact(F, f))])
    click.echo(buf.getvalue(), nl=False)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
