"""Dataset Reader"""

import csv
import json
import math
from typing import List, TextIO

from .dataset import Column, Dataset, Value


def parse_value(text: str) -> Value:
    """Parse a text cell written by the CSV writer.

    Args:
        text (str): The text.

    Returns:
        Value: None for an empty cell, a bool, a float, or the text itself.
    """
    if text == '':
        return None
    if text in ('true', 'false'):
        return text == 'true'
    try:
        return float(text)
    except ValueError:
        return text


NON_FINITE = {
    'inf': math.inf,
    '-inf': -math.inf,
    'nan': math.nan
}


def _from_json(val: Value) -> Value:
    if isinstance(val, str) and val in NON_FINITE:
        return NON_FINITE[val]
    return val


class DatasetReader:
    """Reads datasets written by the dataset writers"""

    def __init__(self, stream: TextIO) -> None:
        self.stream = stream

    def read_dataset(self) -> Dataset:
        """Read a CSV or JSON dataset, detecting the format.

        Returns:
            Dataset: The dataset.
        """
        text = self.stream.read()
        if text.lstrip().startswith('{'):
            return self.read_json(text)
        return self.read_csv(text)

    @classmethod
    def read_csv(cls, text: str) -> Dataset:
        """Read a CSV dataset.

        Args:
            text (str): The text.

        Raises:
            ValueError: If the header is missing.

        Returns:
            Dataset: The dataset.
        """
        lines = text.splitlines()
        metadata = {}
        index = 0
        while index < len(lines) and lines[index].startswith('#'):
            key, _, value = lines[index][1:].strip().partition('=')
            metadata[key] = value
            index += 1
        if index == len(lines):
            raise ValueError('the dataset has no header')

        reader = csv.reader(lines[index:])
        header = next(reader)
        dataset = Dataset([Column.from_label(label) for label in header], metadata=metadata)
        for row in reader:
            dataset.append([parse_value(cell) for cell in row])
        return dataset

    @classmethod
    def read_json(cls, text: str) -> Dataset:
        """Read a JSON dataset.

        Args:
            text (str): The text.

        Returns:
            Dataset: The dataset.
        """
        document = json.loads(text)
        columns = [Column(item['name'], item['unit']) for item in document['columns']]
        data: List[List[Value]] = [
            [_from_json(val) for val in document['data'][column.name]]
            for column in columns
        ]
        rows = [list(row) for row in zip(*data)]
        return Dataset(columns, rows, document['metadata'])
