"""Exponential, logarithm, and closed composition on real 4x4 rotations.

Every operation here reduces to the 2x2 machinery: an antisymmetric matrix
splits into two commuting 3-vector channels, each channel is handled by the
closed-form routines in :mod:`magicbch.su2`, and the halves are merged back.
Two independent evaluation paths are provided for the composition law: the
channel path (:func:`bch_so4`) and a direct transcription of the six
expanded matrix entries (:func:`bch_so4_entries`) used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import So4Coeffs, frobenius_norm, is_special_orthogonal
from .errors import AntipodalSingularityError, DomainError, InternalConsistencyError, ShapeError
from .magic import SplitPair, merge, split, su2su2_to_so4, to_tensor_frame
from .su2 import BchCoefficients, BranchMode, bch_coefficients, su2_exp, su2_log

__all__ = [
    "So4BchResult",
    "bch_so4",
    "bch_so4_entries",
    "so4_exp",
    "so4_log",
]


@dataclass(frozen=True)
class So4BchResult:
    """Composition result with per-channel scalar diagnostics.

    ``coeffs1`` belongs to the self-dual channel and ``coeffs2`` to the
    anti-self-dual channel; their ``theta`` fields show how close each
    channel came to the branch cut.
    """

    result: np.ndarray
    coeffs1: BchCoefficients
    coeffs2: BchCoefficients
    mode: BranchMode


def so4_exp(a) -> np.ndarray:
    """Exponential of an antisymmetric real 4x4 matrix, a rotation.

    Evaluated channel-wise: both halves of :func:`~magicbch.magic.split` are
    exponentiated in closed form and conjugated back, so no matrix series
    is summed.
    """
    pair = split(a)
    return su2su2_to_so4(su2_exp(pair.self_dual), su2_exp(pair.anti_self_dual))


def so4_log(o) -> np.ndarray:
    """Invert :func:`so4_exp` on a special orthogonal 4x4 matrix.

    The conjugated rotation is factored into its two 2x2 tensor factors,
    the sign ambiguity of the factorization is resolved by a fixed lift
    rule (non-negative real trace, falling back to the first structurally
    nonzero entry of the first factor), and each factor is logged on the
    principal branch.  Rotations with a factor at the antipode have no
    recoverable direction and raise
    :class:`~magicbch.errors.AntipodalSingularityError`.
    """
    o = np.asarray(o)
    if np.iscomplexobj(o):
        raise ShapeError("expected a real 4x4 matrix, got complex entries")
    o = o.astype(float)
    if o.shape != (4, 4):
        raise ShapeError(f"expected a 4x4 matrix, got shape {o.shape}")
    if not is_special_orthogonal(o, tol=1e-10):
        raise DomainError("input is not special orthogonal to tolerance")
    w = to_tensor_frame(o)
    u, v = _factor_tensor_product(w)
    u, v = _canonical_lift(u, v)
    va = _channel_log(u, "self-dual")
    vb = _channel_log(v, "anti-self-dual")
    return merge(SplitPair(va, vb))


def bch_so4(a, b, mode: BranchMode = BranchMode.BRANCH_CORRECTED) -> So4BchResult:
    """Closed composition: ``so4_exp(result) = so4_exp(a) @ so4_exp(b)``.

    Both inputs are split, the two channels are composed independently by
    the scalar law, and the halves are merged.  Validity mirrors the 2x2
    case per channel: theta <= pi/2 in ``PAPER_FAITHFUL`` mode, theta < pi
    in ``BRANCH_CORRECTED`` mode.
    """
    pa = split(a)
    pb = split(b)
    c1 = _channel_coefficients(pa.self_dual, pb.self_dual, mode, "self-dual")
    c2 = _channel_coefficients(pa.anti_self_dual, pb.anti_self_dual, mode, "anti-self-dual")
    z1 = c1.alpha * pa.self_dual + c1.beta * pb.self_dual - c1.gamma * np.cross(pa.self_dual, pb.self_dual)
    z2 = (
        c2.alpha * pa.anti_self_dual
        + c2.beta * pb.anti_self_dual
        - c2.gamma * np.cross(pa.anti_self_dual, pb.anti_self_dual)
    )
    return So4BchResult(result=merge(SplitPair(z1, z2)), coeffs1=c1, coeffs2=c2, mode=mode)


def bch_so4_entries(f, g, mode: BranchMode = BranchMode.BRANCH_CORRECTED) -> So4Coeffs:
    """Entry-wise form of :func:`bch_so4` on coefficient six-tuples.

    The six output entries are written out fully in terms of the half-sum
    and half-difference combinations of the inputs.  This is a second,
    independently transcribed evaluation path; it must agree with the
    channel path to well below composite rounding error and is used as a
    cross-check of both.
    """
    f = So4Coeffs(*(float(t) for t in f))
    g = So4Coeffs(*(float(t) for t in g))

    fp1, fp2, fp3 = 0.5 * (f.f12 + f.f34), 0.5 * (f.f13 - f.f24), 0.5 * (f.f14 + f.f23)
    fm1, fm2, fm3 = 0.5 * (f.f12 - f.f34), 0.5 * (f.f13 + f.f24), 0.5 * (f.f14 - f.f23)
    gp1, gp2, gp3 = 0.5 * (g.f12 + g.f34), 0.5 * (g.f13 - g.f24), 0.5 * (g.f14 + g.f23)
    gm1, gm2, gm3 = 0.5 * (g.f12 - g.f34), 0.5 * (g.f13 + g.f24), 0.5 * (g.f14 - g.f23)

    c1 = _channel_coefficients(
        np.array([fp1, fp2, fp3]), np.array([gp1, gp2, gp3]), mode, "self-dual"
    )
    c2 = _channel_coefficients(
        np.array([fm1, -fm2, fm3]), np.array([gm1, -gm2, gm3]), mode, "anti-self-dual"
    )
    a1, b1, g1 = c1.alpha, c1.beta, c1.gamma
    a2, b2, g2 = c2.alpha, c2.beta, c2.gamma

    e12 = (
        a1 * fp1 + b1 * gp1 - g1 * (fp2 * gp3 - fp3 * gp2)
        + a2 * fm1 + b2 * gm1 - g2 * (-fm2 * gm3 + fm3 * gm2)
    )
    e13 = (
        a1 * fp2 + b1 * gp2 - g1 * (fp3 * gp1 - fp1 * gp3)
        + a2 * fm2 + b2 * gm2 - g2 * (-fm3 * gm1 + fm1 * gm3)
    )
    e14 = (
        a1 * fp3 + b1 * gp3 - g1 * (fp1 * gp2 - fp2 * gp1)
        + a2 * fm3 + b2 * gm3 - g2 * (-fm1 * gm2 + fm2 * gm1)
    )
    e23 = (
        a1 * fp3 + b1 * gp3 - g1 * (fp1 * gp2 - fp2 * gp1)
        - a2 * fm3 - b2 * gm3 + g2 * (-fm1 * gm2 + fm2 * gm1)
    )
    e24 = (
        -a1 * fp2 - b1 * gp2 + g1 * (fp3 * gp1 - fp1 * gp3)
        + a2 * fm2 + b2 * gm2 - g2 * (-fm3 * gm1 + fm1 * gm3)
    )
    e34 = (
        a1 * fp1 + b1 * gp1 - g1 * (fp2 * gp3 - fp3 * gp2)
        - a2 * fm1 - b2 * gm1 + g2 * (-fm2 * gm3 + fm3 * gm2)
    )
    return So4Coeffs(e12, e13, e14, e23, e24, e34)


def _channel_coefficients(x, y, mode, channel):
    try:
        return bch_coefficients(x, y, mode)
    except AntipodalSingularityError as exc:
        raise AntipodalSingularityError(f"{channel} channel: {exc}") from exc


def _channel_log(u, channel):
    try:
        # the factors come from a validated rotation, so the unitarity gate
        # only needs to absorb factorization roundoff
        return su2_log(u, unitary_tol=1e-8)
    except AntipodalSingularityError as exc:
        raise AntipodalSingularityError(f"{channel} channel: {exc}") from exc


def _factor_tensor_product(w):
    # w is numerically u (x) v with 2x2 unitary factors; recover them up to
    # a joint sign by pivoting on the largest entry
    p, q = np.unravel_index(int(np.argmax(np.abs(w))), (4, 4))
    i0, k0 = divmod(int(p), 2)
    j0, l0 = divmod(int(q), 2)
    outer = w[k0::2, l0::2].copy()
    inner = w[2 * i0 : 2 * i0 + 2, 2 * j0 : 2 * j0 + 2].copy()
    u = outer / np.sqrt(np.linalg.det(outer))
    v = inner / np.sqrt(np.linalg.det(inner))
    if (np.kron(u, v)[p, q] * np.conj(w[p, q])).real < 0.0:
        u = -u
    residue = frobenius_norm(np.kron(u, v) - w)
    if residue > 1e-8:
        raise InternalConsistencyError(
            f"tensor factorization failed to reproduce the input, residue {residue:.3e}"
        )
    return u, v


def _canonical_lift(u, v):
    # of the two lifts (u, v) and (-u, -v), pick the one whose first factor
    # has non-negative real trace; on a traceless factor fall back to the
    # first structurally nonzero entry in row-major order
    t = float(np.trace(u).real)
    if abs(t) > 1e-12:
        flip = t < 0.0
    else:
        flat = u.ravel()
        first = flat[int(np.argmax(np.abs(flat) > 1e-12))]
        flip = first.real < 0.0
    if flip:
        return -u, -v
    return u, v
