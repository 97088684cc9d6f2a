"""IO"""

from .dataset import Column, Dataset
from .dataset_reader import DatasetReader
from .dataset_writer import (
    CsvDatasetWriter,
    DatasetWriter,
    JsonDatasetWriter,
    OutputFormat
)

__all__ = [
    'Column',
    'Dataset',
    'DatasetReader',
    'CsvDatasetWriter',
    'DatasetWriter',
    'JsonDatasetWriter',
    'OutputFormat',
]
