from .session_runner import LabSessionRunner, Output
from .run_config import SUBCOMMANDS
from core.records import SeriesCodec
from lab.LabExceptions import LabError
from pydantic import ValidationError
from datetime import datetime
import argparse
import logging
import os
import sys

logger = logging.getLogger("runner")

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config", "config.yaml")

def setup_logging(runner: LabSessionRunner):
    loggers = runner.logger_config.get("logger_list", [])
    console_outs = runner.logger_config.get("console_outs", [])
    log_dir = runner.logger_config.get("log_dir", "logs")

    os.makedirs(log_dir, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

    for lg in loggers:
        log = logging.getLogger(lg)
        log.setLevel(logging.DEBUG)
        log.propagate = False
        for handler in list(log.handlers):
            log.removeHandler(handler)
            handler.close()

        file_handler = logging.FileHandler(os.path.join(log_dir, f"{lg}_{timestamp}.log"), mode="a")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter("%(asctime)s | %(message)s"))
        log.addHandler(file_handler)

        if lg in console_outs:
            console = logging.StreamHandler()
            console.setLevel(logging.INFO)
            console.setFormatter(logging.Formatter(
                "%(asctime)s | %(levelname)s | %(message)s",
                datefmt="%H:%M:%S"
            ))
            log.addHandler(console)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arith-lab", description="Arithmetic weights and ergodic averages lab.")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)

    scales = parser.add_argument_group("scales")
    scales.add_argument("--n", type=int, help="length N")
    scales.add_argument("--q", type=int, help="slice parameter Q")
    scales.add_argument("--i", type=int, help="dyadic level i")
    scales.add_argument("--c", type=float, help="Piatetski-Shapiro exponent")
    scales.add_argument("--s", type=int, help="Gowers order")
    scales.add_argument("--r", type=float, help="variation exponent")
    scales.add_argument("--delta", type=float, help="spectral level, or jump size for traces")
    scales.add_argument("--lo", type=int, help="interval start")
    scales.add_argument("--hi", type=int, help="interval end (exclusive)")

    choices = parser.add_argument_group("choices")
    choices.add_argument("--model", help="weight family")
    choices.add_argument("--mode", choices=("slice", "cumulative", "dyadic"))
    choices.add_argument("--method", choices=("fft", "brute", "both"))
    choices.add_argument("--suite", choices=("fast", "full"))
    choices.add_argument("--system", choices=("rotation", "skew"))
    choices.add_argument("--alpha", type=float, help="rotation number")
    choices.add_argument("--trials", type=int, help="Monte-Carlo trials")
    choices.add_argument("--h-samples", dest="h_samples", type=int, help="sampled shifts h")
    choices.add_argument("--eps-prime", dest="eps_prime", type=float, help="bad-h threshold exponent")

    run = parser.add_argument_group("run")
    run.add_argument("--seed", type=int)
    run.add_argument("--threads", type=int)
    run.add_argument("--deterministic", action="store_const", const=True)
    run.add_argument("--input", help="CSV input file")
    run.add_argument("--out", help="output file")
    run.add_argument("--config", help="flat YAML file of key: value overrides")
    return parser

def emit(output: Output, out: str | None) -> None:
    '''
    A CSV side payload goes to --out with the text on stdout; otherwise
    the text goes to --out when given.
    '''
    if output.csv is not None:
        if out:
            SeriesCodec.write(out, output.csv)
        sys.stdout.write(output.text + "\n")
    elif out:
        SeriesCodec.write(out, output.text if output.text.endswith("\n") else output.text + "\n")
    else:
        sys.stdout.write(output.text if output.text.endswith("\n") else output.text + "\n")

def run(argv: list[str] | None = None, config_path: str = DEFAULT_CONFIG) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    runner = LabSessionRunner(config_path)
    setup_logging(runner)
    flags = vars(args)
    user_config = flags.pop("config")

    try:
        config = runner.merge(flags, user_config)
        output = runner.execute(config)
        emit(output, config.out)
        return output.exit_code
    except ValidationError as exc:
        logger.error(f"Invalid arguments: {exc}")
        return 2
    except OSError as exc:
        logger.error(f"File error: {exc}")
        return 2
    except LabError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(run())
