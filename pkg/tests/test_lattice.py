"""Tests for the beam-lattice interaction"""

import math

from hypothesis import given, settings
from hypothesis.strategies import floats
import numpy as np
import pytest

from jetblack_matterwave.dispersion import characteristic_wavenumbers, plasmon_energy
from jetblack_matterwave.errors import (
    DegenerateLatticeError,
    DomainError,
    IncommensurateDriveError,
    ResonantInputError
)
from jetblack_matterwave.lattice import (
    Channel,
    LatticeParameters,
    bragg_resonant_speeds,
    lattice_bloch_response,
    solve_lattice_bvp
)
from jetblack_matterwave.model import BeamParameters
from jetblack_matterwave.oracle import SystemSpec, system_residual
from jetblack_matterwave.pseudoforce import solve_undamped


def test_lattice_parameters():
    """Test the lattice constant and validation"""
    lat = LatticeParameters.from_constant(math.pi, ug=0.1)
    assert lat.g == pytest.approx(2.0)
    assert lat.a == pytest.approx(math.pi)
    assert lat.n_max == 1
    with pytest.raises(DomainError):
        LatticeParameters(0.0)
    with pytest.raises(DomainError):
        LatticeParameters(1.0, n_max=0)
    with pytest.raises(DomainError):
        LatticeParameters(1.0, ug=math.nan)
    with pytest.raises(DomainError):
        LatticeParameters.from_constant(-1.0)


def test_bragg_example():
    """Test the first Bragg speed for G = 2"""
    resonances = bragg_resonant_speeds(0.0, 0.0, LatticeParameters(2.0))
    assert len(resonances) == 1
    resonance = resonances[0]
    assert resonance.n == 1
    assert resonance.gamma_res == pytest.approx(2.06155, abs=1e-5)
    assert resonance.kd == 2.0
    assert resonance.channel == Channel.PARTICLE_LIKE


def test_bragg_channels():
    """Test the channel follows n^2 G^2 + xi^2 against one"""
    resonances = bragg_resonant_speeds(0.0, 0.0, LatticeParameters(0.5, n_max=3))
    assert [r.n for r in resonances] == [1, 2, 3]
    assert [r.channel for r in resonances] == [
        Channel.WAVE_LIKE,
        Channel.PARTICLE_LIKE,
        Channel.PARTICLE_LIKE
    ]
    assert resonances[1].gamma_res == pytest.approx(math.sqrt(2))
    assert str(Channel.WAVE_LIKE) == 'wave-like'


def test_bragg_large_lattice_vector():
    """Test the Bragg speed tends to n G for short lattices"""
    for resonance in bragg_resonant_speeds(0.0, 0.0, LatticeParameters(10.0, n_max=4)):
        assert resonance.gamma_res / resonance.kd == pytest.approx(1.0, rel=1e-2)


def test_bragg_errors():
    """Test negative parameters are rejected"""
    with pytest.raises(DomainError):
        bragg_resonant_speeds(-0.1, 0.0, LatticeParameters(1.0))
    with pytest.raises(DomainError):
        bragg_resonant_speeds(0.0, -0.1, LatticeParameters(1.0))


@settings(max_examples=100, deadline=None)
@given(floats(min_value=0.05, max_value=20.0), floats(min_value=0.0, max_value=2.0))
def test_bragg_meets_a_wavenumber(g, mu):
    """Test the harmonic wavenumber is a de Broglie wavenumber at the Bragg speed"""
    resonance = bragg_resonant_speeds(mu, 0.0, LatticeParameters(g))[0]
    beam = BeamParameters(gamma=resonance.gamma_res, mu=mu)
    pair = characteristic_wavenumbers(beam.energy)
    k = pair.k1 if resonance.channel == Channel.WAVE_LIKE else pair.k2
    assert k.real == pytest.approx(g, rel=1e-6)


def test_bloch_without_lattice_potential():
    """Test the response reduces to the driven beam for Ug = 0"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    x = np.linspace(0.0, 20.0, 2001)
    response = lattice_bloch_response(beam, LatticeParameters(3.0), 1, x)
    phi_d, psi_d = solve_undamped(beam, x_grid=x).part('driven')
    assert np.max(np.abs(response.phi - phi_d)) <= 1e-12
    assert np.max(np.abs(response.psi - psi_d)) <= 1e-12
    phi_l, _ = response.part('lattice')
    assert np.all(phi_l == 0)


def test_bloch_lattice_amplitude():
    """Test the lattice term has the amplitude Ug / P(q^2)"""
    beam = BeamParameters(gamma=2.0, u0=0.0)
    response = lattice_bloch_response(beam, LatticeParameters(3.0, ug=0.1))
    assert response.psi[0] == pytest.approx(-0.1 / 46)
    assert np.max(np.abs(response.psi)) == pytest.approx(0.1 / 46)
    # Phi carries the factor q^2 - 2E.
    assert response.phi[0] == pytest.approx(-0.5 / 46)


def test_bloch_errors():
    """Test screened beams and resonant harmonics are rejected"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    pair = characteristic_wavenumbers(beam.energy)
    with pytest.raises(ResonantInputError) as error:
        lattice_bloch_response(beam, LatticeParameters(pair.k1.real, ug=0.1))
    assert error.value.condition == 'nG=k1'
    with pytest.raises(ResonantInputError) as error:
        lattice_bloch_response(beam, LatticeParameters(pair.k2.real / 2, ug=0.1), 2)
    assert error.value.condition == 'nG=k2'
    with pytest.raises(DomainError):
        lattice_bloch_response(beam.with_values(xi=0.2), LatticeParameters(3.0))
    with pytest.raises(DomainError):
        lattice_bloch_response(beam, LatticeParameters(3.0), 0)


def test_periodic_solution():
    """Test a commensurate drive needs no homogeneous part"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    lat = LatticeParameters(1.0, ug=0.05)
    solution = solve_lattice_bvp(beam, lat)
    assert solution.x[-1] == pytest.approx(lat.a)
    phi_h, psi_h = solution.part('homogeneous')
    assert np.max(np.abs(phi_h)) < 1e-9
    assert np.max(np.abs(psi_h)) < 1e-9
    bloch = lattice_bloch_response(beam, lat, 1, solution.x)
    assert solution.sup_difference(bloch) < 1e-9
    assert solution.phi[0] == pytest.approx(solution.phi[-1])
    assert solution.psi[0] == pytest.approx(solution.psi[-1])


def test_incommensurate_drive():
    """Test the periodic problem needs whole drive cycles per lattice constant"""
    with pytest.raises(IncommensurateDriveError):
        solve_lattice_bvp(BeamParameters(gamma=2.0, u0=0.1), LatticeParameters(3.0, ug=0.1))


def test_degenerate_periodicity():
    """Test a mode with whole cycles per lattice constant leaves the periodic problem singular"""
    # E = 2.125 gives k1 = 0.5 and k2 = 2, and k2 a = 4 pi for G = 1.
    beam = BeamParameters(gamma=3.0, mu=4.75, u0=0.1)
    assert characteristic_wavenumbers(beam.energy).k2.real == pytest.approx(2.0)
    with pytest.raises(DegenerateLatticeError):
        solve_lattice_bvp(beam, LatticeParameters(1.0, ug=0.1))


@settings(max_examples=100, deadline=None)
@given(
    floats(min_value=0.05, max_value=5.0),
    floats(min_value=0.0, max_value=0.99),
    floats(min_value=0.0, max_value=2.0)
)
def test_bragg_on_screened_dispersion(g, xi, mu):
    """Test each Bragg speed puts the beam energy on the screened dispersion at n G"""
    for resonance in bragg_resonant_speeds(mu, xi, LatticeParameters(g, n_max=3)):
        energy = (resonance.gamma_res ** 2 - mu) / 2
        assert abs(energy - plasmon_energy(resonance.kd, xi)) <= 1e-10 * max(1.0, energy)


def test_wave_like_speed_above_later_harmonics():
    """Test a wave-like harmonic can need a faster beam than the next one"""
    speeds = [r.gamma_res for r in bragg_resonant_speeds(0.0, 0.0, LatticeParameters(0.5, n_max=3))]
    assert speeds == pytest.approx([math.sqrt(4.25), math.sqrt(2.0), math.sqrt(1 / 2.25 + 2.25)])
    assert speeds[0] > speeds[1] < speeds[2]


@settings(max_examples=100, deadline=None)
@given(
    floats(min_value=0.05, max_value=5.0),
    floats(min_value=0.0, max_value=2.0),
    floats(min_value=0.0, max_value=2.0)
)
def test_particle_like_speeds_increase_with_harmonic(g, xi, mu):
    """Test the particle-like Bragg speeds increase with n"""
    resonances = bragg_resonant_speeds(mu, xi, LatticeParameters(g, n_max=6))
    speeds = [r.gamma_res for r in resonances if r.channel == Channel.PARTICLE_LIKE]
    assert all(a < b for a, b in zip(speeds, speeds[1:]))
    for resonance in resonances:
        assert resonance.gamma_res ** 2 >= mu + 2 - 1e-12


def test_random_bloch_responses_satisfy_the_equations():
    """Test the Bloch response satisfies the lattice equations for random draws"""
    rng = np.random.default_rng(31)
    x = np.linspace(0.0, 10.0, 5001)
    checked = 0
    while checked < 50:
        beam = BeamParameters(gamma=float(rng.uniform(1.5, 3.0)), u0=float(rng.uniform(0.0, 0.1)))
        lat = LatticeParameters(float(rng.uniform(0.3, 3.0)), ug=float(rng.uniform(-0.1, 0.1)))
        try:
            response = lattice_bloch_response(beam, lat, 1, x)
        except ResonantInputError:
            continue
        spec = SystemSpec.from_lattice(beam, lat.g, lat.ug)
        assert system_residual(spec, response) <= 1e-8 * (1 + response.sup_norm())
        checked += 1
