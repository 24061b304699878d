"""Click commands for evaluation, verification, expansion, sweeps and estimates."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

import click

from qpoch.cli.dependencies import DependencyProvider
from qpoch.cli.requests import (
    NUMBER,
    RATIONAL,
    EstimateRequest,
    EvalRequest,
    ExpandRequest,
    SweepRequest,
    VerifyRequest,
    as_integer,
)
from qpoch.core.arith import Precision
from qpoch.core.errors import DomainError
from qpoch.estimates import estimate_optimal
from qpoch.expansions.coefficients import regime_coefficients
from qpoch.expansions.evaluate import group_values, regime_eval
from qpoch.expansions.remainder import conv_series_check
from qpoch.expansions.symbolic import Regime
from qpoch.expansions.uniform import uniform_expansion
from qpoch.identity.checks import (
    IdentityReport,
    artin_product_check,
    consequence_check,
    dedekind_check,
    identity_check,
    theta_modular_check,
)
from qpoch.identity.gamma_product import identity_rhs, identity_rhs_pv
from qpoch.identity.qpoch import QPochEval, oracle_log_qpoch
from qpoch.models import CheckRecord, EstimateRecord, EvalRecord, GroupRecord
from qpoch.orchestrator import sweep, value_text

_REGIMES = click.Choice([regime.value for regime in Regime])


def _parts(value: Any, prec: Precision) -> tuple[str, str]:
    converted = prec.complex(value)
    return prec.format(converted.real), prec.format(converted.imag)


def eval_record(method: str, y: Any, beta: Any, result: QPochEval, prec: Precision) -> EvalRecord:
    re_text, im_text = _parts(result.log_value, prec)
    return EvalRecord(
        method=method,
        y=value_text(y, prec),
        beta=value_text(beta, prec),
        prec_bits=prec.bits,
        log_value_re=re_text,
        log_value_im=im_text,
        tail_bound=prec.format(result.tail_bound),
        terms_used=result.terms_used,
    )


def check_record(report: IdentityReport, prec: Precision) -> CheckRecord:
    lhs_re, lhs_im = _parts(report.lhs, prec)
    rhs_re, rhs_im = _parts(report.rhs, prec)
    return CheckRecord(
        check=report.check,
        lhs_re=lhs_re,
        lhs_im=lhs_im,
        rhs_re=rhs_re,
        rhs_im=rhs_im,
        residual=prec.format(report.residual),
        certified_tail=prec.format(report.certified_tail),
    )


def _output_options(func: Callable) -> Callable:
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Output file (default stdout).")(func)
    func = click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default=None, help="Output format.")(func)
    func = click.option("--prec", type=int, default=None, help="Target precision in bits.")(func)
    return func


def create_cli(provider: DependencyProvider) -> click.Group:
    """Create the command group bound to the provided dependencies."""

    @click.group(name="qpoch")
    def cli() -> None:
        """Extended-precision q-Pochhammer evaluation and asymptotics."""

    @cli.command(name="eval")
    @click.option("--y", "y", type=NUMBER, required=True)
    @click.option("--beta", type=NUMBER, required=True)
    @click.option("--method", type=click.Choice(["oracle", "identity", "pv", "uniform", "regime"]), default="oracle")
    @click.option("--order", type=int, default=4, show_default=True)
    @click.option("--trunc", type=int, default=200, show_default=True)
    @click.option("--c", "c", type=RATIONAL, default=None)
    @_output_options
    def eval_command(y, beta, method, order, trunc, c, prec, output_format, out) -> None:
        """Evaluate log(e^-y; e^-beta)_inf."""

        request = EvalRequest(method=method, y=y, beta=beta, order=order, trunc=trunc, c=c)
        precision = provider.precision(prec)
        if request.method == "oracle":
            result = oracle_log_qpoch(request.y, request.beta, precision)
        elif request.method == "identity":
            if request.order < 1:
                raise click.UsageError("the identity method needs --order >= 1")
            result = identity_rhs(request.y, request.beta, request.order, request.trunc, precision)
        elif request.method == "pv":
            result = identity_rhs_pv(request.y, request.beta, request.trunc, precision)
        elif request.method == "uniform":
            result = uniform_expansion(request.y, request.beta, request.order, precision)
        else:
            if request.c is None:
                raise click.UsageError("the regime method needs --c")
            expansion = regime_coefficients(request.c, request.order)
            result = regime_eval(expansion, request.y, request.beta, precision, provider.euler_capacity())
        provider.repository(output_format, out).save_records(
            [eval_record(request.method, request.y, request.beta, result, precision)]
        )

    @cli.command(name="verify")
    @click.option(
        "--check",
        type=click.Choice(["dedekind", "theta", "artin", "consequence", "identity", "conv-series"]),
        required=True,
    )
    @click.option("--x", "x", type=NUMBER, default=None)
    @click.option("--y", "y", type=NUMBER, default=None)
    @click.option("--beta", type=NUMBER, default=None)
    @click.option("--order", type=int, default=4, show_default=True)
    @click.option("--trunc", type=int, default=200, show_default=True)
    @_output_options
    def verify_command(check, x, y, beta, order, trunc, prec, output_format, out) -> None:
        """Compare both sides of an exact identity."""

        request = VerifyRequest(check=check, x=x, y=y, beta=beta, order=order, trunc=trunc)
        precision = provider.precision(prec)
        if request.check == "dedekind":
            request.require("beta")
            report = dedekind_check(request.beta, precision)
        elif request.check == "theta":
            request.require("x", "beta")
            report = theta_modular_check(request.x, request.beta, precision)
        elif request.check == "artin":
            request.require("x")
            report = artin_product_check(request.x, request.trunc, precision)
        elif request.check == "consequence":
            request.require("y", "beta")
            report = consequence_check(request.y, request.beta, request.trunc, precision)
        elif request.check == "identity":
            request.require("y", "beta")
            report = identity_check(request.y, request.beta, request.order, request.trunc, precision)
        else:
            request.require("x", "beta")
            try:
                integer_x = as_integer(request.x)
            except ValueError as exc:
                raise DomainError(str(exc)) from exc
            report = conv_series_check(integer_x, request.beta, precision)
        provider.repository(output_format, out).save_records([check_record(report, precision)])

    @cli.command(name="expand")
    @click.option("--c", "c", type=RATIONAL, required=True)
    @click.option("--max-exp", "max_exp", type=RATIONAL, required=True, help="Largest power of beta kept.")
    @click.option("--symbolic/--numeric", default=True)
    @click.option("--x", "x", type=NUMBER, default=None)
    @click.option("--beta", type=NUMBER, default=None)
    @_output_options
    def expand_command(c, max_exp, symbolic, x, beta, prec, output_format, out) -> None:
        """Print the regime coefficients, or their values at (x, beta)."""

        request = ExpandRequest(c=c, cutoff=max_exp, symbolic=symbolic, x=x, beta=beta)
        expansion = regime_coefficients(request.c, request.cutoff)
        repository = provider.repository(output_format, out)
        if request.symbolic:
            if repository.output_format == "json":
                repository.save_text(expansion.to_json())
            else:
                repository.save_text(expansion.render() or expansion.note)
            return
        if request.x is None or request.beta is None:
            raise click.UsageError("--numeric needs --x and --beta")
        precision = provider.precision(prec)
        records = []
        for exponent, value in group_values(expansion, request.x, request.beta, precision, provider.euler_capacity()):
            value_re, value_im = _parts(value, precision)
            records.append(GroupRecord(beta_exp=str(exponent), value_re=value_re, value_im=value_im))
        repository.save_records(records)

    @cli.command(name="sweep")
    @click.option("--regime", type=_REGIMES, required=True)
    @click.option("--c", "c", type=RATIONAL, default=Fraction(0))
    @click.option("--x", "x", type=NUMBER, required=True)
    @click.option("--beta", type=NUMBER, required=True)
    @click.option("--max-order", "max_order", type=int, required=True)
    @_output_options
    def sweep_command(regime, c, x, beta, max_order, prec, output_format, out) -> None:
        """Error of every partial sum against the product oracle."""

        request = SweepRequest(regime=regime, c=c, x=x, beta=beta, max_order=max_order)
        sweep(
            request.regime,
            request.x,
            request.beta,
            request.max_order,
            provider.precision(prec),
            c=request.c,
            repository=provider.repository(output_format, out),
            euler_capacity=provider.euler_capacity(),
        )

    @cli.command(name="estimate")
    @click.option("--regime", type=_REGIMES, required=True)
    @click.option("--c", "c", type=RATIONAL, default=Fraction(0))
    @click.option("--x", "x", type=NUMBER, required=True)
    @click.option("--beta", type=NUMBER, required=True)
    @_output_options
    def estimate_command(regime, c, x, beta, prec, output_format, out) -> None:
        """Optimal truncation order and error of a divergent expansion."""

        request = EstimateRequest(regime=regime, c=c, x=x, beta=beta)
        precision = provider.precision(prec)
        estimate = estimate_optimal(Regime(request.regime), request.x, request.beta, precision, c=request.c)
        record = EstimateRecord(
            regime=estimate.regime.value,
            formula_id=estimate.formula_id,
            n_star=precision.format(estimate.n_star),
            r_star=precision.format(estimate.r_star),
            c_const=precision.format(estimate.c_const),
            t=precision.format(estimate.t),
        )
        provider.repository(output_format, out).save_records([record])

    return cli
