"""Application factory wiring together all components."""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import click
from pydantic import ValidationError

from qpoch.cli.commands import create_cli
from qpoch.cli.dependencies import DependencyProvider
from qpoch.config import AppConfig, load_config
from qpoch.core.errors import ConfigError, ConvergenceError, DomainError, PrecisionError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3


def create_app(config: AppConfig) -> click.Group:
    """Construct the command group for ``config``."""

    provider = DependencyProvider(config)
    return create_cli(provider)


def _fail(code: int, message: str) -> int:
    logger.error(message)
    click.echo(f"error: {message}", err=True)
    return code


def cli_main(argv: Optional[Sequence[str]] = None, config: Optional[AppConfig] = None) -> int:
    """Run the command line and translate failures into exit codes."""

    try:
        app = create_app(config if config is not None else load_config())
        result = app.main(args=list(argv) if argv is not None else None, prog_name="qpoch", standalone_mode=False)
    except DomainError as exc:
        return _fail(EXIT_DOMAIN, str(exc))
    except (PrecisionError, ConvergenceError) as exc:
        return _fail(EXIT_NUMERIC, str(exc))
    except ConfigError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except ValidationError as exc:
        return _fail(EXIT_USAGE, f"invalid arguments: {exc.error_count()} problem(s)\n{exc}")
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return _fail(EXIT_USAGE, "aborted")
    return result if isinstance(result, int) else EXIT_OK
