"""The matterwave command line"""

import argparse
import logging
import os
from pathlib import Path
import sys
from typing import Any, Dict, List, Mapping, Optional

from .commands import Command, CommandContext, CommandType
from .errors import MatterWaveError
from .io import Dataset, DatasetWriter, OutputFormat
from .model import load_materials

LOGGER = logging.getLogger(__name__)

OUTPUT_DIR_ENV = 'MATTERWAVE_OUTPUT_DIR'

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILED = 3

_GLOBAL_OPTIONS = ('command', 'format', 'output', 'verbose', 'materials', 'workers')


def _make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format',
        choices=[output_format.value for output_format in OutputFormat],
        default=OutputFormat.CSV.value,
        help='output format (default csv)'
    )
    common.add_argument(
        '--output',
        help=f'output file, relative to ${OUTPUT_DIR_ENV} when set (default stdout)'
    )
    common.add_argument('--materials', help='material preset file')
    common.add_argument('-v', '--verbose', action='store_true', help='log debug messages')

    parser = argparse.ArgumentParser(
        prog='matterwave',
        description='Plasmon dispersion and de Broglie matter waves of electron beams.'
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)
    for command_type in CommandType:
        command_class = type(Command.create(command_type))
        subparser = subparsers.add_parser(
            command_type.value,
            parents=[common],
            help=command_class.description,
            description=command_class.__doc__
        )
        command_class.add_arguments(subparser)
        if command_type == CommandType.SWEEP:
            subparser.add_argument('--workers', type=int, help='number of worker threads')
    return parser


def resolve_output(output: Optional[str], environ: Mapping[str, str]) -> Optional[Path]:
    """Find the output file.

    Args:
        output (Optional[str]): The --output flag.
        environ (Mapping[str, str]): The environment.

    Returns:
        Optional[Path]: The file, or None for stdout.
    """
    if output is None:
        return None
    path = Path(output)
    output_dir = environ.get(OUTPUT_DIR_ENV)
    if output_dir and not path.is_absolute():
        path = Path(output_dir) / path
    return path


def write_dataset(dataset: Dataset, output_format: OutputFormat, destination: Optional[Path]) -> None:
    """Write a dataset to a file or stdout.

    Args:
        dataset (Dataset): The dataset.
        output_format (OutputFormat): The format.
        destination (Optional[Path]): The file, or None for stdout.
    """
    if destination is None:
        DatasetWriter.create(output_format, sys.stdout).write_dataset(dataset)
        sys.stdout.flush()
        return
    destination.parent.mkdir(parents=True, exist_ok=True)
    with open(destination, 'w', encoding='utf-8', newline='') as stream:
        DatasetWriter.create(output_format, stream).write_dataset(dataset)
    LOGGER.info('wrote %d rows to %s', len(dataset), destination)


def _report(error: Exception) -> None:
    print(f'error: {type(error).__name__}: {error}', file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line.

    Args:
        argv (Optional[List[str]], optional): The arguments. Defaults to
            sys.argv[1:].

    Returns:
        int: 0 on success, 2 for invalid flags, 3 when the computation fails.
    """
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_INVALID

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )

    options: Dict[str, Any] = {
        key: value
        for key, value in vars(args).items()
        if key not in _GLOBAL_OPTIONS
    }
    command = Command.create(CommandType(args.command))
    try:
        context = CommandContext(load_materials(args.materials), getattr(args, 'workers', None))
        request = command.resolve(
            options,
            context,
            OutputFormat(args.format),
            resolve_output(args.output, os.environ)
        )
    except MatterWaveError as error:
        _report(error)
        return EXIT_INVALID

    try:
        dataset = command.run(request, context)
        write_dataset(dataset, request.output_format, request.destination)
    except (MatterWaveError, OSError) as error:
        LOGGER.debug('%s failed', args.command, exc_info=True)
        _report(error)
        return EXIT_FAILED

    return EXIT_OK
