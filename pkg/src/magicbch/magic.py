"""Magic-basis conjugation between 2x2 tensor products and real 4x4 frames.

A fixed unitary R built from phased Bell states conjugates every product
``U (x) V`` of special unitaries into a real special-orthogonal matrix, and
at the generator level carries ``i (a . sigma (x) 1 + 1 (x) b . sigma)``
into an antisymmetric real matrix.  :func:`split` and :func:`merge`
implement that generator correspondence in closed form with purely real
arithmetic; the 3-vector pair they exchange is the self-dual plus
anti-self-dual decomposition of the antisymmetric matrix.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .algebra import coeffs_from_so4, frobenius_norm, is_special_unitary, tensor_product, _as_vec3
from .errors import DomainError, InternalConsistencyError, ShapeError

__all__ = [
    "BellBasis",
    "SplitPair",
    "bell_basis",
    "magic_matrix",
    "merge",
    "split",
    "su2su2_to_so4",
    "to_orthogonal_frame",
    "to_tensor_frame",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# Columns are (psi1, -i psi2, -psi3, -i psi4) in the Bell notation below.
_MAGIC = _INV_SQRT2 * np.array(
    [
        [1.0, 0.0, 0.0, -1.0j],
        [0.0, -1.0j, -1.0, 0.0],
        [0.0, -1.0j, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0j],
    ]
)
_MAGIC_DAG = _MAGIC.conj().T

_IMAG_RESIDUE_TOL = 1e-10


class BellBasis(NamedTuple):
    """The four maximally entangled two-qubit states, basis order |00>,|01>,|10>,|11>."""

    psi1: np.ndarray
    psi2: np.ndarray
    psi3: np.ndarray
    psi4: np.ndarray


class SplitPair(NamedTuple):
    """Self-dual and anti-self-dual 3-vector halves of an antisymmetric matrix."""

    self_dual: np.ndarray
    anti_self_dual: np.ndarray


def bell_basis() -> BellBasis:
    s = _INV_SQRT2
    return BellBasis(
        psi1=np.array([s, 0.0, 0.0, s], dtype=complex),
        psi2=np.array([0.0, s, s, 0.0], dtype=complex),
        psi3=np.array([0.0, s, -s, 0.0], dtype=complex),
        psi4=np.array([s, 0.0, 0.0, -s], dtype=complex),
    )


def magic_matrix() -> np.ndarray:
    """The fixed unitary whose conjugation realizes the group isomorphism."""
    return _MAGIC.copy()


def to_orthogonal_frame(m) -> np.ndarray:
    """Conjugate ``R^dag m R``, carrying tensor-product operators to the real frame."""
    return _MAGIC_DAG @ _as_4x4_complex(m) @ _MAGIC


def to_tensor_frame(m) -> np.ndarray:
    """Conjugate ``R m R^dag``, the inverse of :func:`to_orthogonal_frame`."""
    return _MAGIC @ _as_4x4_complex(m) @ _MAGIC_DAG


def split(a, tol: float = 1e-12) -> SplitPair:
    """Decompose an antisymmetric real 4x4 matrix into two 3-vectors.

    The halves generate the two commuting 2x2 factors of the conjugated
    matrix: ``to_tensor_frame(a)`` equals
    ``i (a1 . sigma (x) 1 + 1 (x) a2 . sigma)`` for the returned pair.
    """
    c = coeffs_from_so4(a, tol=tol)
    self_dual = np.array(
        [
            0.5 * (c.f12 + c.f34),
            0.5 * (c.f13 - c.f24),
            0.5 * (c.f14 + c.f23),
        ]
    )
    anti_self_dual = np.array(
        [
            0.5 * (c.f12 - c.f34),
            -0.5 * (c.f13 + c.f24),
            0.5 * (c.f14 - c.f23),
        ]
    )
    return SplitPair(self_dual, anti_self_dual)


def merge(pair) -> np.ndarray:
    """Inverse of :func:`split`: rebuild the antisymmetric matrix from its halves.

    The result satisfies ``m + m.T == 0`` exactly because each lower-triangle
    entry is the negation of the float computed for the upper triangle.
    """
    a = _as_vec3(pair[0])
    b = _as_vec3(pair[1])
    a1, a2, a3 = (float(t) for t in a)
    b1, b2, b3 = (float(t) for t in b)
    f12 = a1 + b1
    f13 = a2 - b2
    f14 = a3 + b3
    f23 = a3 - b3
    f24 = -(a2 + b2)
    f34 = a1 - b1
    return np.array(
        [
            [0.0, f12, f13, f14],
            [-f12, 0.0, f23, f24],
            [-f13, -f23, 0.0, f34],
            [-f14, -f24, -f34, 0.0],
        ]
    )


def su2su2_to_so4(u, v) -> np.ndarray:
    """Map a pair of special unitaries to the rotation ``R^dag (u (x) v) R``.

    The conjugated matrix is real up to rounding; the imaginary residue is
    checked and discarded.  Both inputs of a pair ``(u, v)`` and ``(-u, -v)``
    land on the same rotation.
    """
    for m in (u, v):
        if not is_special_unitary(np.asarray(m, dtype=complex), tol=1e-10):
            raise DomainError("factors must be special unitary 2x2 matrices")
    w = to_orthogonal_frame(tensor_product(u, v))
    residue = float(np.abs(w.imag).max())
    if residue > _IMAG_RESIDUE_TOL:
        raise InternalConsistencyError(
            f"conjugated tensor product has imaginary residue {residue:.3e}"
        )
    return np.ascontiguousarray(w.real)


def _as_4x4_complex(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ShapeError(f"expected a 4x4 matrix, got shape {m.shape}")
    return m
