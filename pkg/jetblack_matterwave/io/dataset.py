"""Dataset"""

from __future__ import annotations
from typing import Any, Dict, Iterator, List, Optional, Sequence

Value = Any


class Column:
    """A named column with its unit"""

    def __init__(self, name: str, unit: str = 'dimensionless') -> None:
        """Initialise a column.

        Args:
            name (str): The column name.
            unit (str, optional): The unit. Defaults to 'dimensionless'.
        """
        self.name = name
        self.unit = unit

    @property
    def label(self) -> str:
        """The header label, e.g. "k [k_p]"."""
        return f'{self.name} [{self.unit}]'

    @classmethod
    def from_label(cls, label: str) -> Column:
        """Parse a header label.

        Args:
            label (str): A label like "k [k_p]".

        Returns:
            Column: The column.
        """
        label = label.strip()
        if label.endswith(']') and ' [' in label:
            name, _, unit = label[:-1].rpartition(' [')
            return cls(name, unit)
        return cls(label)

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f'Column({self.name!r}, {self.unit!r})'

    def __eq__(self, value: object) -> bool:
        return (
            isinstance(value, Column) and
            self.name == value.name and
            self.unit == value.unit
        )


class Dataset:
    """A table of rows with named columns and metadata"""

    def __init__(
            self,
            columns: Sequence[Column],
            rows: Optional[List[List[Value]]] = None,
            metadata: Optional[Dict[str, str]] = None
    ) -> None:
        """Initialise a dataset.

        Args:
            columns (Sequence[Column]): The columns.
            rows (Optional[List[List[Value]]], optional): The rows, each with
                one value per column. Defaults to None.
            metadata (Optional[Dict[str, str]], optional): The metadata, kept
                in insertion order. Defaults to None.
        """
        self.columns = list(columns)
        self.rows: List[List[Value]] = []
        self.metadata: Dict[str, str] = dict(metadata or {})
        for row in rows or []:
            self.append(row)

    def append(self, row: Sequence[Value]) -> None:
        """Append a row.

        Args:
            row (Sequence[Value]): One value per column.

        Raises:
            ValueError: If the row has the wrong length.
        """
        if len(row) != len(self.columns):
            raise ValueError(
                f'expected {len(self.columns)} values, got {len(row)}'
            )
        self.rows.append(list(row))

    @property
    def names(self) -> List[str]:
        """The column names."""
        return [column.name for column in self.columns]

    def column(self, name: str) -> List[Value]:
        """The values of a column.

        Args:
            name (str): The column name.

        Raises:
            KeyError: If there is no such column.

        Returns:
            List[Value]: The values.
        """
        try:
            index = self.names.index(name)
        except ValueError as error:
            raise KeyError(name) from error
        return [row[index] for row in self.rows]

    def records(self) -> Iterator[Dict[str, Value]]:
        """Iterate over the rows as dictionaries keyed by column name."""
        names = self.names
        for row in self.rows:
            yield dict(zip(names, row))

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return f'columns={self.names},rows={len(self.rows)},metadata={self.metadata}'

    def __repr__(self) -> str:
        return f'Dataset({self.columns!r}, {self.rows!r}, {self.metadata!r})'

    def __eq__(self, value: object) -> bool:
        return (
            isinstance(value, Dataset) and
            self.columns == value.columns and
            self.rows == value.rows and
            self.metadata == value.metadata
        )
