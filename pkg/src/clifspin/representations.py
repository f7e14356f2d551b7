"""Matrix pictures of Cl(3,0) and Cl(1,3)+, and the even-subalgebra isomorphism.

The 2x2 representation is pinned by the images of the four idempotent
products: ``f+ -> E11``, ``f- -> E22``, ``e1 f+ -> E21``, ``e1 f- -> E12``.
That forces ``e_k`` onto the Pauli matrices and ``e123`` onto ``i * 1``.
The 4x4 picture is assembled from the standard (Dirac) gamma matrices.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .algebra import (
    CL13,
    CL30,
    CenterScalar,
    CliffordError,
    Multivector,
    ParityError,
    SignatureError,
    blade_product,
    grade_of,
)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


def _standard_gammas() -> tuple[np.ndarray, ...]:
    z = np.zeros((2, 2), dtype=complex)
    g0 = np.block([[I2, z], [z, -I2]])
    gk = tuple(np.block([[z, s], [-s, z]]) for s in PAULI)
    return (g0,) + gk


GAMMA = _standard_gammas()
"""``GAMMA[mu]`` is the image of the generator gamma_mu; ``gamma_0**2 = +1``."""

GAMMA_UPPER = tuple(MINKOWSKI[mu, mu] * GAMMA[mu] for mu in range(4))


def _check(a: Multivector, sig, what: str) -> None:
    if a.sig != sig:
        raise SignatureError(f"{what} needs {sig}, got {a.sig}")


def _assemble(images: Sequence[np.ndarray], mask: int, size: int) -> np.ndarray:
    m = np.eye(size, dtype=complex)
    for i, g in enumerate(images):
        if mask >> i & 1:
            m = m @ g
    return m


@lru_cache(maxsize=None)
def _blade_images_30() -> np.ndarray:
    imgs = np.stack([_assemble(PAULI, m, 2) for m in range(8)])
    imgs.setflags(write=False)
    return imgs


@lru_cache(maxsize=None)
def _blade_images_13() -> np.ndarray:
    imgs = np.stack([_assemble(GAMMA, m, 4) for m in range(16)])
    imgs.setflags(write=False)
    return imgs


# --------------------------------------------------------------------------
# Cl(3,0) <-> M(2, C)


def rep_cl30(a: Multivector) -> np.ndarray:
    _check(a, CL30, "rep_cl30")
    return np.tensordot(a.coeffs, _blade_images_30(), axes=1)


def rep_cl30_inverse(m) -> Multivector:
    """Every blade image is unitary and the images are trace-orthogonal, so
    coefficients come out as ``Re tr(B^dagger M) / 2``."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise CliffordError(f"expected a 2x2 matrix, got shape {m.shape}")
    imgs = _blade_images_30()
    coeffs = [np.trace(b.conj().T @ m).real / 2 for b in imgs]
    return Multivector(CL30, coeffs)


def rotor_components(r: Multivector):
    """``(alpha, beta, gamma, delta)`` with ``R = alpha + beta e12 + gamma e13 + delta e23``
    and central (complex) coefficients."""
    _check(r, CL30, "rotor_components")
    s, v1, v2, v3 = r["1"], r["e1"], r["e2"], r["e3"]
    b12, b13, b23, p = r["e12"], r["e13"], r["e23"], r["e123"]
    return (
        CenterScalar(s, p),
        CenterScalar(b12, -v3),
        CenterScalar(b13, v2),
        CenterScalar(b23, -v1),
    )


def rep_R_matrix(r: Multivector) -> np.ndarray:
    """``[[a + b i, -c + d i], [c + d i, a - b i]]`` for real even ``R``."""
    _check(r, CL30, "rep_R_matrix")
    if not r.is_even():
        raise ParityError("rep_R_matrix takes an even element alpha + beta e12 + gamma e13 + delta e23")
    a, b, c, d = r["1"], r["e12"], r["e13"], r["e23"]
    return np.array([[a + b * 1j, -c + d * 1j], [c + d * 1j, a - b * 1j]])


# --------------------------------------------------------------------------
# Cl(1,3)+ <-> M(4, C) and Cl(1,3)+ <-> Cl(3,0)


def gamma(mu: int) -> Multivector:
    """The generator gamma_mu of Cl(1,3), stored as ``e_{mu+1}``."""
    if not 0 <= mu <= 3:
        raise CliffordError(f"gamma index {mu} out of range")
    return CL13.blade(1 << mu)


def rep_cl13(a: Multivector) -> np.ndarray:
    _check(a, CL13, "rep_cl13")
    return np.tensordot(a.coeffs, _blade_images_13(), axes=1)


def rep_cl13_even(a: Multivector) -> np.ndarray:
    _check(a, CL13, "rep_cl13_even")
    if not a.is_even():
        raise ParityError("rep_cl13_even takes an even element of Cl(1,3)")
    return rep_cl13(a)


def dirac_column(a: Multivector) -> np.ndarray:
    return rep_cl13_even(a)[:, 0].copy()


@lru_cache(maxsize=None)
def _iso_matrix() -> np.ndarray:
    # column m: Cl(1,3) coefficients of the image of Cl(3,0) blade m under
    # e_k -> gamma_k gamma_0, extended multiplicatively
    sq13 = CL13.squares
    images = []
    for k in range(3):
        s, mask = blade_product(1 << (k + 1), 1, sq13)
        images.append((s, mask))
    out = np.zeros((16, 8))
    for m in range(8):
        sign, mask = 1, 0
        for k in range(3):
            if m >> k & 1:
                s, mk = images[k]
                s2, mask = blade_product(mask, mk, sq13)
                sign *= s * s2
        out[mask, m] = sign
    out.setflags(write=False)
    return out


def iso_cl30_to_cl13even(a: Multivector) -> Multivector:
    _check(a, CL30, "iso_cl30_to_cl13even")
    return Multivector(CL13, _iso_matrix() @ a.coeffs)


def iso_cl13even_to_cl30(a: Multivector) -> Multivector:
    _check(a, CL13, "iso_cl13even_to_cl30")
    if not a.is_even():
        raise ParityError("only the even subalgebra of Cl(1,3) is isomorphic to Cl(3,0)")
    # the matrix is a signed partial permutation, so its transpose inverts it
    return Multivector(CL30, _iso_matrix().T @ a.coeffs)


def even_masks_13() -> list[int]:
    return [m for m in range(16) if grade_of(m) % 2 == 0]


# --------------------------------------------------------------------------
# the textbook Dirac operator


def central_difference(f: Callable[[float, np.ndarray], np.ndarray], t: float, x, h: float):
    x = np.asarray(x, dtype=float)
    dt = (f(t + h, x) - f(t - h, x)) / (2 * h)
    dxs = []
    for k in range(3):
        step = np.zeros(3)
        step[k] = h
        dxs.append((f(t, x + step) - f(t, x - step)) / (2 * h))
    return [dt] + dxs


def standard_dirac_residual(
    column_field: Callable[[float, np.ndarray], np.ndarray],
    m: float,
    t: float,
    x,
    derivative: Callable[[float, np.ndarray], Sequence[np.ndarray]] | None = None,
    h: float = 1e-4,
) -> np.ndarray:
    """``i gamma^mu d_mu psi - m psi`` at ``(t, x)`` for a free 4-component field.

    ``derivative(t, x)`` returns ``[d_t psi, d_1 psi, d_2 psi, d_3 psi]``; without
    it central differences of step ``h`` are used. Upper-index matrices are
    raised from :data:`GAMMA` with the (+,-,-,-) metric.
    """
    x = np.asarray(x, dtype=float)
    psi = np.asarray(column_field(t, x), dtype=complex)
    if derivative is not None:
        parts = [np.asarray(d, dtype=complex) for d in derivative(t, x)]
    else:
        parts = central_difference(lambda tt, xx: np.asarray(column_field(tt, xx), dtype=complex), t, x, h)
    out = -m * psi
    for mu in range(4):
        out = out + 1j * (GAMMA_UPPER[mu] @ parts[mu])
    return out


# --------------------------------------------------------------------------
# JSON


def matrix_to_json(m) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(data) -> np.ndarray:
    try:
        return np.array([[complex(re, im) for re, im in row] for row in data], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise CliffordError(f"malformed matrix JSON: {exc}") from exc
