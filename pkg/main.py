import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from api import COMMANDS
from api.common import open_output
from config.logging_setup import setup_logging
from config.settings import get_settings
from core.errors import CodingError, ResourceCapError
from models.run_config import RunConfig

settings = get_settings()
logger = logging.getLogger("z4codes")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def snr_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--snr takes a comma list of dB values, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Quaternary Kerdock, Preparata and related codes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.version}")
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--family")
    parser.add_argument("--m", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--suite")
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.add_argument("--snr", type=snr_list, default=[])
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--workers", type=int, default=settings.workers)
    parser.add_argument("--in", dest="input_path")
    parser.add_argument("--out", dest="output_path")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging(settings.log_level, settings.log_json)
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(**vars(args))
    except ValidationError as e:
        for error in e.errors():
            print(f"{settings.app_name}: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"{config.command} started", extra={"seed": config.seed, "family": config.family})
    try:
        with open_output(config.output_path) as out:
            status = COMMANDS[config.command](config, out)
    except ResourceCapError as e:
        print(f"{settings.app_name}: {e} (raise the cap with Z4_ENUMERATION_CAP or Z4_SYNDROME_CAP)", file=sys.stderr)
        return EXIT_USAGE
    except CodingError as e:
        print(f"{settings.app_name}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"{settings.app_name}: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.info(f"{config.command} finished", extra={"status": status})
    return status


if __name__ == "__main__":
    sys.exit(main())
