"""Tests for reading and writing datasets"""

import io
import json
import math

import pytest

from jetblack_matterwave.io import (
    Column,
    CsvDatasetWriter,
    Dataset,
    DatasetReader,
    DatasetWriter,
    JsonDatasetWriter,
    OutputFormat
)
from jetblack_matterwave.io.dataset_reader import parse_value
from jetblack_matterwave.io.dataset_writer import format_value


def _make_dataset() -> Dataset:
    return Dataset(
        [Column('k', 'k_p'), Column('E', 'E_p'), Column('stable', 'flag'), Column('error', 'text')],
        [
            [0.1, 1 / 3, True, None],
            [0.2, 2.0, False, 'NoDriveError: kd=0']
        ],
        {'command': 'dispersion', 'xi': '0.5'}
    )


def test_column_labels():
    """Test columns format and parse their labels"""
    column = Column('gamma', 'v_p')
    assert column.label == 'gamma [v_p]'
    assert str(column) == 'gamma [v_p]'
    assert Column.from_label(' gamma [v_p] ') == column
    assert Column.from_label('regime') == Column('regime')
    assert Column.from_label('k1 re [k_p]') == Column('k1 re', 'k_p')


def test_dataset_access():
    """Test the dataset accessors"""
    dataset = _make_dataset()
    assert len(dataset) == 2
    assert dataset.names == ['k', 'E', 'stable', 'error']
    assert dataset.column('k') == [0.1, 0.2]
    assert list(dataset.records())[1]['error'] == 'NoDriveError: kd=0'
    with pytest.raises(KeyError):
        dataset.column('missing')
    with pytest.raises(ValueError):
        dataset.append([1.0])


def test_format_value():
    """Test cells are formatted to read back exactly"""
    assert format_value(None) == ''
    assert format_value(True) == 'true'
    assert format_value(0.1) == '0.10000000000000001'
    assert float(format_value(1 / 3)) == 1 / 3
    assert format_value(3) == '3'
    assert format_value('both-real') == 'both-real'
    assert parse_value('') is None
    assert parse_value('false') is False
    assert parse_value('1e-3') == 0.001
    assert parse_value('wave-evanescent') == 'wave-evanescent'


def test_csv_writer():
    """Test the metadata lines, header and rows"""
    stream = io.StringIO()
    DatasetWriter.create(OutputFormat.CSV, stream).write_dataset(_make_dataset())
    lines = stream.getvalue().splitlines()
    assert lines[0] == '# command=dispersion'
    assert lines[1] == '# xi=0.5'
    assert lines[2] == 'k [k_p],E [E_p],stable [flag],error [text]'
    assert lines[3] == '0.10000000000000001,0.33333333333333331,true,'
    assert lines[4] == '0.20000000000000001,2,false,NoDriveError: kd=0'
    assert len(lines) == 5


def test_json_writer():
    """Test the columns are written as arrays"""
    stream = io.StringIO()
    writer = DatasetWriter.create(OutputFormat.JSON, stream)
    assert isinstance(writer, JsonDatasetWriter)
    writer.write_dataset(_make_dataset())
    document = json.loads(stream.getvalue())
    assert document['metadata'] == {'command': 'dispersion', 'xi': '0.5'}
    assert document['columns'][0] == {'name': 'k', 'unit': 'k_p'}
    assert document['data']['E'] == [1 / 3, 2.0]
    assert document['data']['error'] == [None, 'NoDriveError: kd=0']


@pytest.mark.parametrize('output_format', [OutputFormat.CSV, OutputFormat.JSON])
def test_read_back(output_format):
    """Test the reader recovers the written dataset"""
    dataset = _make_dataset()
    stream = io.StringIO()
    DatasetWriter.create(output_format, stream).write_dataset(dataset)
    stream.seek(0)
    assert DatasetReader(stream).read_dataset() == dataset


def test_reader_needs_header():
    """Test a CSV document of metadata alone is rejected"""
    with pytest.raises(ValueError):
        DatasetReader.read_csv('# command=dispersion\n')


def test_invalid_format():
    """Test an unknown format is rejected"""
    with pytest.raises(RuntimeError):
        DatasetWriter.create('xml', io.StringIO())
    assert isinstance(DatasetWriter.create(OutputFormat.CSV, io.StringIO()), CsvDatasetWriter)
    assert str(OutputFormat.JSON) == 'json'


def test_json_non_finite_values():
    """Test infinite and missing numbers give strict JSON that reads back"""
    dataset = Dataset(
        [Column('gamma_high', 'v_p'), Column('delta', 'dimensionless')],
        [[math.inf, math.nan], [2.5, -math.inf]]
    )
    stream = io.StringIO()
    DatasetWriter.create(OutputFormat.JSON, stream).write_dataset(dataset)

    def reject(token):
        raise ValueError(token)

    document = json.loads(stream.getvalue(), parse_constant=reject)
    assert document['data']['gamma_high'] == ['inf', 2.5]
    assert document['data']['delta'] == ['nan', '-inf']
    read = DatasetReader.read_json(stream.getvalue())
    assert read.column('gamma_high') == [math.inf, 2.5]
    assert math.isnan(read.column('delta')[0])
    assert read.column('delta')[1] == -math.inf
