"""Fermi-Dirac integrals and polylogarithms on the real line.

The complete Fermi-Dirac integral

    F_nu(eta) = int_0^inf x^nu / (exp(x - eta) + 1) dx

is related to the polylogarithm by F_nu(eta) = -Gamma(nu + 1) Li_{nu+1}(-exp(eta)).

Two evaluation paths are provided. For eta <= 0 the alternating series
sum_k (-1)^(k+1) exp(k eta) / k^(nu+1) is summed, with Cohen-Villegas-Zagier
(Euler type) acceleration when exp(eta) is close to one. For eta > 0 the
integral is computed by adaptive quadrature split at x = eta, with the tail
mapped onto the unit interval by u = exp(eta - x).
"""

from __future__ import annotations
from dataclasses import dataclass
import logging
import math
from typing import Union

from scipy.integrate import quad
from scipy.special import expit, gamma

from .errors import AccuracyError, DomainError

LOGGER = logging.getLogger(__name__)

QUAD_EPSABS = 1e-12
QUAD_EPSREL = 1e-11
QUAD_LIMIT = 200
SERIES_RELATIVE_CUTOFF = 1e-16
SERIES_MAX_TERMS = 5000
# Below this value of exp(eta) plain summation converges geometrically.
DIRECT_SUM_THRESHOLD = 0.5
ACCELERATED_TERMS = 40
INVERSION_TOLERANCE = 1e-12
INVERSION_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class FermiOrder:
    """The order nu of a Fermi-Dirac integral, nu > -1."""

    nu: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.nu) or self.nu <= -1:
            raise DomainError(f'Fermi order must be finite and > -1, got {self.nu}')

    @property
    def gamma(self) -> float:
        """Gamma(nu + 1)"""
        return float(gamma(self.nu + 1))


@dataclass(frozen=True)
class DegeneracyPoint:
    """A degeneracy parameter eta together with the fractional temperature."""

    eta: float
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.eta):
            raise DomainError(f'eta must be finite, got {self.eta}')
        if not self.theta > 0:
            raise DomainError(f'theta must be positive, got {self.theta}')

    @classmethod
    def from_chemical_potential(cls, mu: float, theta: float) -> DegeneracyPoint:
        """Create the point for a normalized chemical potential.

        Args:
            mu (float): The normalized chemical potential.
            theta (float): The fractional temperature T/T_p.

        Raises:
            DomainError: If theta is not positive.

        Returns:
            DegeneracyPoint: The point with eta = mu/theta.
        """
        if not theta > 0:
            raise DomainError(f'theta must be positive, got {theta}')
        return cls(mu / theta, theta)


Order = Union[FermiOrder, float]


def _as_order(order: Order) -> FermiOrder:
    return order if isinstance(order, FermiOrder) else FermiOrder(float(order))


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not math.isfinite(eta):
        raise DomainError(f'eta must be finite, got {eta}')
    return eta


def _alternating_sum_direct(z: float, s: float) -> float:
    total = 0.0
    power = 1.0
    for k in range(1, SERIES_MAX_TERMS + 1):
        power *= z
        term = power / k ** s
        total += term if k % 2 == 1 else -term
        if term < SERIES_RELATIVE_CUTOFF * abs(total):
            LOGGER.debug('direct series converged after %d terms', k)
            return total
    LOGGER.warning('direct series did not reach cutoff after %d terms', SERIES_MAX_TERMS)
    return total


def _alternating_sum_accelerated(z: float, s: float) -> float:
    # Cohen, Villegas and Zagier, algorithm 1, for sum_k (-1)^k a_k with
    # a_k = z^(k+1) / (k+1)^s, a totally monotone sequence for 0 < z <= 1.
    n = ACCELERATED_TERMS
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    total = 0.0
    for k in range(n):
        c = b - c
        total += c * z ** (k + 1) / (k + 1) ** s
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return total / d


def _negative_polylog_series(order: FermiOrder, eta: float) -> float:
    """Returns -Li_{nu+1}(-exp(eta)) for eta <= 0."""
    z = math.exp(eta)
    s = order.nu + 1.0
    if z <= DIRECT_SUM_THRESHOLD:
        return _alternating_sum_direct(z, s)
    return _alternating_sum_accelerated(z, s)


def fermi_integral_series(order: Order, eta: float) -> float:
    """Evaluate F_nu(eta) from the alternating series.

    Args:
        order (Order): The order nu > -1.
        eta (float): The degeneracy parameter, eta <= 0.

    Raises:
        DomainError: If eta is not finite or is positive.

    Returns:
        float: F_nu(eta).
    """
    fermi_order = _as_order(order)
    eta = _check_eta(eta)
    if eta > 0:
        raise DomainError(f'the series path requires eta <= 0, got {eta}')
    return fermi_order.gamma * _negative_polylog_series(fermi_order, eta)


def fermi_integral_quadrature(order: Order, eta: float) -> float:
    """Evaluate F_nu(eta) by adaptive quadrature.

    Args:
        order (Order): The order nu > -1.
        eta (float): The degeneracy parameter.

    Raises:
        DomainError: If eta is not finite.

    Returns:
        float: F_nu(eta).
    """
    nu = _as_order(order).nu
    eta = _check_eta(eta)
    options = dict(epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)

    if eta <= 0:
        # F = exp(eta) int_0^inf x^nu / (exp(x) + exp(eta)) dx, split at x = 1.
        z = math.exp(eta)
        head, _ = quad(
            lambda x: 1.0 / (math.exp(x) + z),
            0.0, 1.0,
            weight='alg', wvar=(nu, 0.0),
            **options
        )
        tail, _ = quad(
            lambda u: (1.0 - math.log(u)) ** nu / (math.e + z * u),
            0.0, 1.0,
            **options
        )
        return z * (head + tail)

    head, _ = quad(
        lambda x: expit(eta - x),
        0.0, eta,
        weight='alg', wvar=(nu, 0.0),
        **options
    )
    tail, _ = quad(
        lambda u: (eta - math.log(u)) ** nu / (1.0 + u),
        0.0, 1.0,
        **options
    )
    return head + tail


def fermi_integral(order: Order, eta: float) -> float:
    """Evaluate the complete Fermi-Dirac integral F_nu(eta).

    Args:
        order (Order): The order nu > -1.
        eta (float): The degeneracy parameter.

    Raises:
        DomainError: If nu <= -1 or eta is not finite.

    Returns:
        float: F_nu(eta), strictly positive and increasing in eta.
    """
    fermi_order = _as_order(order)
    eta = _check_eta(eta)
    if eta <= 0:
        return fermi_integral_series(fermi_order, eta)
    return fermi_integral_quadrature(fermi_order, eta)


def fermi_integral_derivative(order: Order, eta: float) -> float:
    """The derivative dF_nu/deta = nu F_{nu-1}(eta).

    Args:
        order (Order): The order, nu > 0.
        eta (float): The degeneracy parameter.

    Raises:
        DomainError: If nu <= 0.

    Returns:
        float: The derivative.
    """
    nu = _as_order(order).nu
    if nu <= 0:
        raise DomainError(f'the derivative needs nu > 0, got {nu}')
    return nu * fermi_integral(nu - 1.0, eta)


def polylog_neg_exp(order: Order, eta: float) -> float:
    """Evaluate Li_{nu+1}(-exp(eta)) = -F_nu(eta) / Gamma(nu + 1).

    Args:
        order (Order): The order nu > -1 of the matching Fermi integral.
        eta (float): The degeneracy parameter.

    Raises:
        DomainError: If nu <= -1 or eta is not finite.

    Returns:
        float: The (negative) polylogarithm.
    """
    fermi_order = _as_order(order)
    eta = _check_eta(eta)
    if eta <= 0:
        return -_negative_polylog_series(fermi_order, eta)
    return -fermi_integral_quadrature(fermi_order, eta) / fermi_order.gamma


def invert_eta(order: Order, target: float) -> float:
    """Find eta such that F_nu(eta) equals the target.

    The root of log F_nu(eta) - log(target) is bracketed by doubling from the
    classical estimate log(target / Gamma(nu + 1)), which is always a lower
    bound, and then refined with Newton steps that fall back to bisection when
    they leave the bracket. Secant steps replace Newton steps for nu <= 0.

    Args:
        order (Order): The order nu > -1.
        target (float): The value of the Fermi integral, > 0.

    Raises:
        DomainError: If the target is not positive and finite.
        AccuracyError: If the iteration does not converge.

    Returns:
        float: The degeneracy parameter eta.
    """
    fermi_order = _as_order(order)
    target = float(target)
    if not (math.isfinite(target) and target > 0):
        raise DomainError(f'target must be positive and finite, got {target}')

    log_target = math.log(target)

    def residual(eta: float) -> float:
        return math.log(fermi_integral(fermi_order, eta)) - log_target

    lower = math.log(target / fermi_order.gamma)
    lower_value = residual(lower)
    if abs(lower_value) <= INVERSION_TOLERANCE:
        return lower

    step = 1.0
    upper = lower + step
    upper_value = residual(upper)
    while upper_value < 0:
        lower, lower_value = upper, upper_value
        step *= 2.0
        upper = lower + step
        upper_value = residual(upper)
    LOGGER.debug('invert_eta bracket [%g, %g]', lower, upper)

    eta, value = (lower, lower_value) if -lower_value < upper_value else (upper, upper_value)
    previous_eta, previous_value = (upper, upper_value) if eta == lower else (lower, lower_value)

    for iteration in range(INVERSION_MAX_ITERATIONS):
        if fermi_order.nu > 0:
            slope = (
                fermi_integral_derivative(fermi_order, eta)
                / fermi_integral(fermi_order, eta)
            )
        else:
            slope = (value - previous_value) / (eta - previous_eta)

        candidate = eta - value / slope if slope > 0 else math.nan
        if not lower < candidate < upper:
            candidate = 0.5 * (lower + upper)

        previous_eta, previous_value = eta, value
        eta = candidate
        value = residual(eta)
        if value < 0:
            lower = eta
        else:
            upper = eta

        if abs(value) <= INVERSION_TOLERANCE or upper - lower <= 4e-16 * max(1.0, abs(eta)):
            LOGGER.debug('invert_eta converged in %d iterations', iteration + 1)
            return eta

    raise AccuracyError(abs(value), INVERSION_TOLERANCE)
