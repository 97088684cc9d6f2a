"""Tests for the command line"""

import json
import math

import pytest

from jetblack_matterwave.cli import main, resolve_output
from jetblack_matterwave.io import DatasetReader


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dispersion_minimum(capsys):
    """Test the sampled dispersion has its minimum at k = 1"""
    code, out, _ = _run(capsys, 'dispersion', '--kmin', '0.2', '--kmax', '3', '--points', '561')
    assert code == 0
    dataset = DatasetReader.read_csv(out)
    assert dataset.names == ['k', 'E_free', 'E']
    assert len(dataset) == 561
    energies = dataset.column('E')
    index = energies.index(min(energies))
    assert dataset.column('k')[index] == pytest.approx(1.0, abs=1e-9)
    assert energies[index] == pytest.approx(1.0, abs=1e-12)
    assert dataset.metadata['command'] == 'dispersion'


def test_wavenumbers(capsys):
    """Test the wavenumbers of a fast classical beam"""
    code, out, _ = _run(capsys, 'wavenumbers', '--gamma', '2')
    assert code == 0
    record = next(DatasetReader.read_csv(out).records())
    assert record['k1_re'] == pytest.approx(0.51764, abs=1e-5)
    assert record['k2_re'] == pytest.approx(1.93185, abs=1e-5)
    assert record['k1_im'] == 0.0
    assert record['regime'] == 'BothReal'


def test_bragg_for_aluminium(capsys):
    """Test the Bragg speeds of screened aluminium"""
    code, out, _ = _run(
        capsys, 'bragg', '--G', '2', '--material', 'Al', '--convention', 'paper-compat'
    )
    assert code == 0
    dataset = DatasetReader.read_csv(out)
    assert dataset.column('n') == [1.0, 2.0, 3.0]
    first = next(dataset.records())
    assert first['xi'] == pytest.approx(0.25317, abs=1e-5)
    assert first['mu'] == pytest.approx(0.39)
    shifted = 4 + first['xi'] ** 2
    assert first['gamma_res'] == pytest.approx(math.sqrt(1 / shifted + shifted + 0.39))
    assert first['channel'] == 'particle-like'
    assert dataset.metadata['convention'] == 'paper-compat'


def test_material(capsys):
    """Test the screening of silver"""
    code, out, _ = _run(capsys, 'material', '--name', 'Ag', '--convention', 'paper-compat')
    assert code == 0
    record = next(DatasetReader.read_csv(out).records())
    assert record['name'] == 'Ag'
    assert record['xi'] == pytest.approx(0.36951, abs=1e-5)
    assert record['xi_paper_compat'] == record['xi']


def test_user_materials(capsys, tmp_path):
    """Test a material file adds materials"""
    path = tmp_path / 'materials.cfg'
    path.write_text('# noble metals\nname=Au;mu0_eV=5.53;Ep_eV=9.0\n')
    code, out, _ = _run(capsys, 'material', '--name', 'Au', '--materials', str(path))
    assert code == 0
    assert next(DatasetReader.read_csv(out).records())['mu0'] == 5.53


@pytest.mark.parametrize('argv', [
    ['wavenumbers', '--gamma', '2', '--bogus'],
    ['wavenumbers'],
    ['wavenumbers', '--gamma', '2', '--mu', '0.1', '--material', 'Al'],
    ['wavenumbers', '--gamma', '-1'],
    ['dispersion', '--preset', 'nope'],
    ['dispersion', '--preset', 'fig2a'],
    ['dispersion', '--kmin', '-1'],
    ['steady', '--gamma', '2'],
    ['steady', '--gamma', '2', '--xi', '0'],
    ['sweep', '--variable', 'gamma', '--range', '2', '1'],
    ['sweep', '--variable', 'G', '--range', '1', '2'],
    ['lattice', '--gamma', '2'],
    ['bragg', '--G', '2', '--nmax', '0'],
])
def test_invalid_flags(capsys, argv):
    """Test invalid flags exit with 2"""
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert out == ''
    assert err != ''


def test_invalid_flag_is_named(capsys):
    """Test the message names the flag"""
    code, _, err = _run(capsys, 'solve', '--gamma', '2', '--points', '1')
    assert code == 2
    assert err.startswith('error: DomainError: --points:')


def test_bad_materials_file(capsys, tmp_path):
    """Test a malformed material file exits with 2"""
    path = tmp_path / 'materials.cfg'
    path.write_text('name=Au;mu0_eV=5.53\n')
    code, _, err = _run(capsys, 'material', '--name', 'Al', '--materials', str(path))
    assert code == 2
    assert 'ConfigurationError' in err


@pytest.mark.parametrize('argv,error', [
    (['lattice', '--gamma', '2', '--G', '0.5176380902050415'], 'ResonantInputError'),
    (['regimes', '--gamma', '2', '--xi', '1.2'], 'UnsupportedRegimeError'),
    (['steady', '--gamma', '0', '--xi', '0.3'], 'NoDriveError'),
    (['solve', '--gamma', '2', '--mu', '2'], 'DegenerateEigenvalueError'),
    (['lattice', '--gamma', '2', '--G', '3', '--bvp'], 'IncommensurateDriveError'),
    (['lattice', '--gamma', '3', '--mu', '4.75', '--G', '1', '--bvp'], 'DegenerateLatticeError'),
    (['dispersion', '--xi', '0', '--kmin', '0'], 'SingularInputError'),
    (['wavenumbers', '--gamma', '0'], 'UndefinedQuantityError'),
    (['solve', '--gamma', '2', '--dpsi0', '0.1'], 'DomainError'),
])
def test_failed_computation(capsys, argv, error):
    """Test a failed computation exits with 3"""
    code, out, err = _run(capsys, *argv)
    assert code == 3
    assert out == ''
    assert err.startswith(f'error: {error}:')


def test_deterministic_output(capsys):
    """Test repeated runs write identical bytes"""
    argv = ['sweep', '--variable', 'gamma', '--range', '0.1', '3', '--points', '300', '--xi', '0.5']
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv, '--workers', '3')
    assert first == second
    assert len(DatasetReader.read_csv(first)) == 300


def test_sweep_records_failures(capsys):
    """Test a failed sweep point becomes a row with an error"""
    code, out, _ = _run(
        capsys, 'sweep', '--variable', 'gamma', '--range', '0', '2', '--points', '3',
        '--target', 'steady', '--xi', '0.3'
    )
    assert code == 0
    dataset = DatasetReader.read_csv(out)
    assert dataset.column('gamma') == [0.0, 1.0, 2.0]
    errors = dataset.column('error')
    assert errors[0].startswith('NoDriveError')
    assert errors[1:] == [None, None]
    assert dataset.column('amp_phi')[0] is None


def test_json_output(capsys):
    """Test the JSON format"""
    code, out, _ = _run(capsys, 'steady', '--gamma', '2', '--xi', '0.3', '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert document['metadata']['inferred.u0'] == '0.10000000000000001'
    assert document['data']['kd'] == [2.0]
    assert document['data']['amp_phi'][0] > 0


def test_output_directory(capsys, tmp_path, monkeypatch):
    """Test relative outputs are written below the output directory"""
    monkeypatch.setenv('MATTERWAVE_OUTPUT_DIR', str(tmp_path))
    code, out, _ = _run(capsys, 'wavenumbers', '--gamma', '1', '--output', 'run/k.csv')
    assert code == 0
    assert out == ''
    with open(tmp_path / 'run' / 'k.csv', encoding='utf-8') as stream:
        dataset = DatasetReader(stream).read_dataset()
    assert dataset.column('regime') == ['OscillatoryConjugate']


def test_resolve_output(tmp_path):
    """Test absolute outputs ignore the output directory"""
    environ = {'MATTERWAVE_OUTPUT_DIR': str(tmp_path)}
    assert resolve_output(None, environ) is None
    assert resolve_output('a.csv', environ) == tmp_path / 'a.csv'
    assert resolve_output(str(tmp_path / 'b.csv'), {}) == tmp_path / 'b.csv'


def test_preset(capsys):
    """Test a preset records its parameters and inferred choices"""
    code, out, _ = _run(capsys, 'sweep', '--preset', 'fig2a', '--points', '5')
    assert code == 0
    dataset = DatasetReader.read_csv(out)
    assert len(dataset) == 5
    assert dataset.metadata['preset'] == 'fig2a'
    assert dataset.metadata['inferred.gamma_range'] == '[0.01, 3]'
    assert dataset.metadata['inferred.u0'] == '0.10000000000000001'
    assert dataset.metadata['parameter.points'] == '5'
    assert dataset.column('gamma')[-1] == 3.0


def test_solve_fields(capsys):
    """Test the sampled fields start from the boundary values"""
    code, out, _ = _run(
        capsys, 'solve', '--gamma', '1.7', '--xi', '0.4', '--phi0', '0.2', '--points', '11'
    )
    assert code == 0
    dataset = DatasetReader.read_csv(out)
    assert dataset.names[:3] == ['x', 'phi', 'psi']
    assert 'phi_transient' in dataset.names
    assert dataset.column('phi')[0] == pytest.approx(0.2)
    assert dataset.column('x')[-1] == 20.0


def test_unbounded_window_json(capsys):
    """Test an unscreened window writes strict JSON with an infinite upper speed"""
    code, out, _ = _run(capsys, 'regimes', '--gamma', '2', '--xi', '0', '--format', 'json')
    assert code == 0

    def reject(token):
        raise ValueError(token)

    document = json.loads(out, parse_constant=reject)
    assert document['data']['gamma_high'] == ['inf']
    dataset = DatasetReader.read_json(out)
    assert dataset.column('gamma_high') == [math.inf]
    assert dataset.column('window_width') == [math.inf]


def test_steady_needs_screening(capsys):
    """Test the steady state names the screening flag when it is missing"""
    code, out, err = _run(capsys, 'steady', '--gamma', '2')
    assert code == 2
    assert out == ''
    assert err.startswith('error: DomainError: --xi:')
    code, _, _ = _run(capsys, 'steady', '--gamma', '2', '--material', 'Al')
    assert code == 0
