"""Series-based reference routines used to cross-check the closed forms.

These deliberately share no code path with the closed-form modules: the
exponential is a scaling-and-squaring Taylor sum, the logarithm is inverse
scaling with Denman-Beavers square roots followed by a Mercator series, and
:func:`bch_trunc3` is the plain order-3 commutator expansion.  They are
slower and only serve as independent ground truth in tests, benchmarks,
and the ``--oracle`` flag of the command line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import frobenius_norm
from .errors import ConvergenceError, DomainError, ShapeError

__all__ = [
    "OracleConfig",
    "DEFAULT_CONFIG",
    "bch_trunc3",
    "mat_exp_taylor",
    "mat_log_near_identity",
]

# Denman-Beavers iteration limits, independent of the user-facing config.
_DB_MAX_ITER = 50
_DB_TOL = 1e-15


@dataclass(frozen=True)
class OracleConfig:
    """Budgets for the series routines.

    ``tol`` bounds the Frobenius norm of the last summed term, ``max_terms``
    caps series length, and ``max_sqrt_steps`` caps the inverse-scaling
    depth of the logarithm.
    """

    tol: float = 1e-16
    max_terms: int = 64
    max_sqrt_steps: int = 32

    def __post_init__(self):
        if not self.tol > 0.0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 8:
            raise ValueError(f"max_terms must be at least 8, got {self.max_terms!r}")
        if self.max_sqrt_steps < 1:
            raise ValueError(f"max_sqrt_steps must be at least 1, got {self.max_sqrt_steps!r}")


DEFAULT_CONFIG = OracleConfig()


def mat_exp_taylor(m, config: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a Taylor sum.

    The argument is halved until its Frobenius norm drops below 0.5, the
    series is summed until the term norm falls under ``config.tol``, and the
    result is squared back up.
    """
    m = _as_square(m)
    n = m.shape[0]
    norm = frobenius_norm(m)
    steps = 0
    if norm >= 0.5:
        steps = int(math.floor(math.log2(norm / 0.5))) + 1
    x = m / float(2**steps)

    term = np.eye(n, dtype=x.dtype)
    acc = np.eye(n, dtype=x.dtype)
    for k in range(1, config.max_terms + 1):
        term = term @ x / k
        acc = acc + term
        if frobenius_norm(term) < config.tol:
            break
    else:
        raise ConvergenceError(
            f"exponential series did not reach tol {config.tol:g} in {config.max_terms} terms"
        )
    for _ in range(steps):
        acc = acc @ acc
    return acc


def mat_log_near_identity(m, config: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Principal matrix logarithm by inverse scaling and a Mercator series.

    Square roots are taken until ``|m - I|`` falls below 0.25, the series
    ``log(I + d)`` is summed, and the result is scaled back by the number of
    roots taken.  Inputs whose principal root chain does not approach the
    identity (a rotation through pi in some plane, say) fail with a domain
    error.
    """
    m = _as_square(m)
    n = m.shape[0]
    eye = np.eye(n, dtype=m.dtype)

    x = m
    steps = 0
    while frobenius_norm(x - eye) >= 0.25:
        if steps >= config.max_sqrt_steps:
            raise DomainError(
                f"matrix is still far from the identity after {steps} square roots"
            )
        x = _sqrt_denman_beavers(x)
        steps += 1

    d = x - eye
    power = d.copy()
    acc = d.copy()
    for k in range(2, config.max_terms + 1):
        power = power @ d
        acc = acc + (-1.0) ** (k + 1) / k * power
        if frobenius_norm(power) / k < config.tol:
            break
    else:
        raise ConvergenceError(
            f"logarithm series did not reach tol {config.tol:g} in {config.max_terms} terms"
        )
    return acc * float(2**steps)


def bch_trunc3(a, b) -> np.ndarray:
    """Order-3 truncation of the composition series.

    ``a + b + [a,b]/2 + ([[a,b],b] + [a,[a,b]])/12``; the remainder is
    order 4 in the inputs, which makes this a convergence-order probe for
    the closed forms rather than a ground truth.
    """
    a = _as_square(a)
    b = _as_square(b)
    if a.shape != b.shape:
        raise ShapeError(f"arguments must share a shape, got {a.shape} and {b.shape}")
    c = a @ b - b @ a
    return a + b + 0.5 * c + ((c @ b - b @ c) + (a @ c - c @ a)) / 12.0


def _sqrt_denman_beavers(m):
    # coupled Newton iteration for the principal square root
    n = m.shape[0]
    y = m
    z = np.eye(n, dtype=m.dtype)
    try:
        for _ in range(_DB_MAX_ITER):
            y_next = 0.5 * (y + np.linalg.inv(z))
            z_next = 0.5 * (z + np.linalg.inv(y))
            delta = frobenius_norm(y_next - y)
            y, z = y_next, z_next
            if delta < _DB_TOL:
                return y
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError("square-root iteration hit a singular iterate") from exc
    if not np.all(np.isfinite(y)):
        raise ConvergenceError("square-root iteration diverged")
    raise ConvergenceError(
        f"square-root iteration did not converge in {_DB_MAX_ITER} steps"
    )


def _as_square(m) -> np.ndarray:
    m = np.asarray(m)
    if m.dtype.kind not in "fc":
        m = m.astype(float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
        raise ShapeError(f"expected a square 2x2 or 4x4 matrix, got shape {m.shape}")
    return m
