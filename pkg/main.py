"""Command-line entry point for the q-Pochhammer toolkit."""

from __future__ import annotations

import logging
import sys

from dotenv import load_dotenv

from qpoch.application import cli_main
from qpoch.config import load_config
from qpoch.core.errors import ConfigError


def main() -> int:
    load_dotenv()
    try:
        config = load_config()
    except ConfigError as exc:
        logging.basicConfig(level=logging.INFO)
        logging.getLogger(__name__).error("Invalid configuration: %s", exc)
        return 1
    logging.basicConfig(level=config.logging_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    return cli_main(sys.argv[1:], config)


if __name__ == "__main__":
    sys.exit(main())
