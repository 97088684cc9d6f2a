"""Tests for the numerical oracles"""

import math

import numpy as np
import pytest

from jetblack_matterwave.errors import AccuracyError, DomainError, ResonantInputError
from jetblack_matterwave.fields import BoundaryConditions, FieldSolution
from jetblack_matterwave.lattice import LatticeParameters, lattice_bloch_response
from jetblack_matterwave.model import BeamParameters
from jetblack_matterwave.oracle import (
    IntegratorConfig,
    SystemKind,
    SystemSpec,
    integrate_many,
    integrate_system,
    scan_resonances,
    system_residual
)
from jetblack_matterwave.pseudoforce import (
    predicted_resonances,
    solve_damped,
    solve_undamped,
    steady_state
)


def test_zero_solution():
    """Test no drive and no boundary values stay at zero"""
    solution = integrate_system(SystemSpec(SystemKind.UNDAMPED, 2.0))
    assert solution.sup_norm() == 0.0
    assert solution.x[-1] == pytest.approx(20.0)


def test_undamped_matches_closed_form():
    """Test the integrated undamped system against the closed form"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    bc = BoundaryConditions(0.05, -0.02)
    numeric = integrate_system(SystemSpec.from_beam(beam), bc)
    assert str(SystemSpec.from_beam(beam).kind) == 'undamped'
    exact = solve_undamped(beam, bc, numeric.x)
    assert numeric.sup_difference(exact) <= 1e-6


def test_damped_matches_closed_form():
    """Test the integrated damped system against the closed form"""
    beam = BeamParameters(gamma=1.7, xi=0.4, u0=0.1)
    bc = BoundaryConditions(0.2, -0.1, 0.05, 0.3)
    numeric = integrate_system(SystemSpec.from_beam(beam), bc)
    exact = solve_damped(beam, numeric.x, bc)
    assert numeric.sup_difference(exact) <= 1e-6


def test_damped_late_amplitude():
    """Test the integrated field settles to the steady amplitude"""
    beam = BeamParameters(gamma=1.6, xi=0.5, u0=0.1)
    cfg = IntegratorConfig(step=4e-3, x_end=60.0, check_accuracy=False)
    numeric = integrate_system(SystemSpec.from_beam(beam), BoundaryConditions(0.2, 0.1), cfg)
    late = numeric.x >= 40
    assert np.max(np.abs(numeric.psi[late])) == pytest.approx(steady_state(beam).amp_psi, abs=1e-5)


def test_lattice_matches_bloch_response():
    """Test the integrated lattice system follows the Bloch response"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    lat = LatticeParameters(3.0, ug=0.05)
    spec = SystemSpec.from_lattice(beam, lat.g, lat.ug)
    assert spec.kind == SystemKind.LATTICE
    n_steps = IntegratorConfig().n_steps
    bloch = lattice_bloch_response(beam, lat, 1, np.linspace(0.0, 20.0, n_steps + 1))
    numeric = integrate_system(spec, BoundaryConditions(bloch.phi[0], bloch.psi[0]))
    assert numeric.sup_difference(bloch) <= 1e-6


def test_residual_of_closed_form():
    """Test the closed form satisfies the governing equations"""
    beam = BeamParameters(gamma=1.7, xi=0.4, u0=0.1)
    solution = solve_damped(beam, np.linspace(0.0, 20.0, 4001), BoundaryConditions(0.1, 0.0))
    assert system_residual(SystemSpec.from_beam(beam), solution) < 1e-6
    wrong = SystemSpec.from_beam(beam.with_values(u0=0.2))
    assert system_residual(wrong, solution) > 1e-2


def test_residual_needs_uniform_grid():
    """Test the residual rejects short and uneven grids"""
    spec = SystemSpec(SystemKind.UNDAMPED, 2.0)
    x = np.array([0.0, 0.1, 0.3, 0.4, 0.5, 0.6])
    with pytest.raises(DomainError):
        system_residual(spec, FieldSolution(x, np.zeros(6), np.zeros(6)))
    x = np.linspace(0.0, 1.0, 4)
    with pytest.raises(DomainError):
        system_residual(spec, FieldSolution(x, np.zeros(4), np.zeros(4)))


def test_accuracy_error():
    """Test a coarse step fails the step halving check"""
    spec = SystemSpec(SystemKind.UNDAMPED, 12.5)
    with pytest.raises(AccuracyError) as error:
        integrate_system(spec, BoundaryConditions(1.0, 0.0), IntegratorConfig(step=1e-2))
    assert error.value.difference > error.value.tolerance


def test_system_spec_validation():
    """Test invalid systems are rejected"""
    with pytest.raises(DomainError):
        SystemSpec(SystemKind.DAMPED, 2.0, xi=-0.1)
    with pytest.raises(DomainError):
        SystemSpec(SystemKind.UNDAMPED, 2.0, xi=0.1)
    with pytest.raises(DomainError):
        SystemSpec(SystemKind.DAMPED, 2.0, xi=0.1, ug=0.1)
    with pytest.raises(DomainError):
        SystemSpec(SystemKind.UNDAMPED, float('nan'))
    with pytest.raises(DomainError):
        IntegratorConfig(order='euler')
    with pytest.raises(DomainError):
        IntegratorConfig(step=0.1)
    with pytest.raises(DomainError):
        IntegratorConfig(x_end=0.0)


def test_integrate_many():
    """Test a batch gives the same solutions as single integrations"""
    specs = [
        SystemSpec.from_beam(BeamParameters(gamma=2.0, u0=0.1)),
        SystemSpec.from_beam(BeamParameters(gamma=1.5, xi=0.3, u0=0.05))
    ]
    bcs = [BoundaryConditions(0.1, 0.0), BoundaryConditions(0.0, 0.1, 0.2, 0.0)]
    cfg = IntegratorConfig(x_end=5.0)
    batch = integrate_many(specs, bcs, cfg)
    assert len(batch) == 2
    for spec, bc, solution in zip(specs, bcs, batch):
        single = integrate_system(spec, bc, cfg)
        assert np.allclose(single.phi, solution.phi, rtol=0, atol=1e-14)
        assert solution.params == spec
    assert integrate_many([], []) == []
    with pytest.raises(DomainError):
        integrate_many(specs, bcs[:1], cfg)


def test_scan_without_drive():
    """Test an undriven beam has no peaks"""
    beam = BeamParameters(gamma=2.0, xi=0.1, u0=0.0)
    assert scan_resonances(beam, (0.05, 3.0)) == []


def test_scan_finds_predicted_peaks():
    """Test the brute force peaks agree with the predicted resonances"""
    beam = BeamParameters(gamma=2.0, xi=0.01, u0=0.1)
    peaks = scan_resonances(beam, (0.05, 3.0), 6001)
    predicted = predicted_resonances(beam)
    assert len(peaks) == len(predicted) == 2
    for peak, kd in zip(peaks, predicted):
        assert peak.kd == pytest.approx(kd, abs=2e-3)
        assert peak.amplitude > 0


def test_scan_validation():
    """Test the scan needs screening and a valid window"""
    with pytest.raises(DomainError):
        scan_resonances(BeamParameters(gamma=2.0, u0=0.1), (0.0, 3.0))
    beam = BeamParameters(gamma=2.0, xi=0.1, u0=0.1)
    with pytest.raises(DomainError):
        scan_resonances(beam, (2.0, 1.0))
    with pytest.raises(DomainError):
        scan_resonances(beam, (0.0, 1.0), 2)


def _draw_beams(rng, count, xi_range):
    # E > 1.05 keeps the wavenumbers real and apart.
    beams = []
    for _ in range(count):
        mu = float(rng.uniform(0.0, 1.0))
        beams.append(BeamParameters(
            gamma=float(rng.uniform(math.sqrt(mu + 2.1), 3.0)),
            mu=mu,
            xi=float(rng.uniform(*xi_range)),
            u0=float(rng.uniform(0.0, 0.1))
        ))
    return beams


def test_random_undamped_draws():
    """Test the undamped closed form for random parameters"""
    rng = np.random.default_rng(11)
    beams = _draw_beams(rng, 100, (0.0, 0.0))
    bcs = [BoundaryConditions(*rng.uniform(-0.2, 0.2, 2)) for _ in beams]
    solutions = integrate_many([SystemSpec.from_beam(beam) for beam in beams], bcs)
    for beam, bc, numeric in zip(beams, bcs, solutions):
        exact = solve_undamped(beam, bc, numeric.x)
        assert numeric.sup_difference(exact) <= 1e-6


def test_random_damped_draws():
    """Test the damped closed form for random parameters"""
    rng = np.random.default_rng(12)
    beams = _draw_beams(rng, 100, (0.05, 0.8))
    bcs = [BoundaryConditions(*rng.uniform(-0.2, 0.2, 4)) for _ in beams]
    solutions = integrate_many([SystemSpec.from_beam(beam) for beam in beams], bcs)
    for beam, bc, numeric in zip(beams, bcs, solutions):
        exact = solve_damped(beam, numeric.x, bc)
        assert numeric.sup_difference(exact) <= 1e-6


def test_random_lattice_draws():
    """Test the Bloch response for random lattices"""
    rng = np.random.default_rng(13)
    specs, bcs, responses = [], [], []
    grid = np.linspace(0.0, 20.0, IntegratorConfig().n_steps + 1)
    while len(specs) < 100:
        beam = BeamParameters(gamma=float(rng.uniform(1.5, 3.0)), u0=float(rng.uniform(0.0, 0.1)))
        lat = LatticeParameters(float(rng.uniform(0.3, 4.0)), ug=float(rng.uniform(-0.1, 0.1)))
        try:
            response = lattice_bloch_response(beam, lat, 1, grid)
        except ResonantInputError:
            continue
        if response.sup_norm() > 1.0:
            continue
        specs.append(SystemSpec.from_lattice(beam, lat.g, lat.ug))
        bcs.append(BoundaryConditions(response.phi[0], response.psi[0]))
        responses.append(response)
    for numeric, response in zip(integrate_many(specs, bcs), responses):
        assert numeric.sup_difference(response) <= 1e-6


def test_fourth_order_convergence():
    """Test halving the step cuts the error sixteenfold"""
    beam = BeamParameters(gamma=2.0, u0=0.1)
    bc = BoundaryConditions(0.05, -0.02)
    errors = []
    for step in (1e-2, 5e-3):
        cfg = IntegratorConfig(step=step, check_accuracy=False)
        numeric = integrate_system(SystemSpec.from_beam(beam), bc, cfg)
        errors.append(numeric.sup_difference(solve_undamped(beam, bc, numeric.x)))
    assert 3.7 <= math.log2(errors[0] / errors[1]) <= 4.3


@pytest.mark.parametrize('bc', [BoundaryConditions(0.1, 0.0), BoundaryConditions(0.1, 0.05)])
def test_free_fields_stay_bounded(bc):
    """Test undriven unscreened fields stay near their initial size"""
    specs = [SystemSpec(SystemKind.UNDAMPED, energy) for energy in (1.5, 3.0, 8.0)]
    cfg = IntegratorConfig(step=1e-2, x_end=100.0, check_accuracy=False)
    for solution in integrate_many(specs, [bc] * len(specs), cfg):
        assert solution.sup_norm() <= 10 * max(abs(bc.phi0), abs(bc.psi0))
