"""Dataset Writers"""

from abc import ABCMeta, abstractmethod
import csv
from enum import Enum
import json
import math
from typing import Any, Dict, List, TextIO

from .dataset import Dataset, Value


class OutputFormat(Enum):
    """Output formats"""
    CSV = 'csv'
    JSON = 'json'

    def __str__(self) -> str:
        return self.value


def format_value(val: Value) -> str:
    """Format a value for a text cell.

    Floats use 17 significant digits, so they read back exactly.

    Args:
        val (Value): The value.

    Returns:
        str: The text.
    """
    if val is None:
        return ''
    if isinstance(val, bool):
        return 'true' if val else 'false'
    if isinstance(val, float):
        return '%.17g' % val
    return str(val)


def json_value(val: Value) -> Any:
    """Make a value safe for strict JSON.

    Non-finite floats are written as the strings "inf", "-inf" and "nan".

    Args:
        val (Value): The value.

    Returns:
        Any: The JSON value.
    """
    if isinstance(val, float) and not math.isfinite(val):
        return format_value(val)
    return val


class DatasetWriter(metaclass=ABCMeta):
    """The base class for dataset writers"""

    def __init__(self, stream: TextIO) -> None:
        self.stream = stream

    @abstractmethod
    def write_dataset(self, dataset: Dataset) -> None:
        """Write a dataset.

        Args:
            dataset (Dataset): The dataset.
        """

    @classmethod
    def create(cls, output_format: OutputFormat, stream: TextIO) -> 'DatasetWriter':
        """Create the writer for a format.

        Args:
            output_format (OutputFormat): The format.
            stream (TextIO): The stream to write to.

        Raises:
            RuntimeError: When the format is unknown.

        Returns:
            DatasetWriter: The writer.
        """
        if output_format == OutputFormat.CSV:
            return CsvDatasetWriter(stream)
        elif output_format == OutputFormat.JSON:
            return JsonDatasetWriter(stream)
        else:
            raise RuntimeError(f'Invalid output format {output_format}')


class CsvDatasetWriter(DatasetWriter):
    """Writes comma separated values.

    Metadata is written first as "# key=value" lines, followed by a header of
    "name [unit]" labels and the rows.
    """

    def write_metadata(self, metadata: Dict[str, str]) -> None:
        """Write the metadata lines.

        Args:
            metadata (Dict[str, str]): The metadata.
        """
        for key, value in metadata.items():
            self.stream.write(f'# {key}={value}\n')

    def write_dataset(self, dataset: Dataset) -> None:
        self.write_metadata(dataset.metadata)
        writer = csv.writer(self.stream, lineterminator='\n')
        writer.writerow([column.label for column in dataset.columns])
        for row in dataset.rows:
            writer.writerow([format_value(val) for val in row])


class JsonDatasetWriter(DatasetWriter):
    """Writes a JSON document with the columns as arrays"""

    def write_dataset(self, dataset: Dataset) -> None:
        columns: List[Dict[str, Any]] = [
            {'name': column.name, 'unit': column.unit}
            for column in dataset.columns
        ]
        document = {
            'metadata': dataset.metadata,
            'columns': columns,
            'data': {
                name: [json_value(row[index]) for row in dataset.rows]
                for index, name in enumerate(dataset.names)
            }
        }
        json.dump(document, self.stream, indent=2, allow_nan=False)
        self.stream.write('\n')
