"""Random inputs for property checks, drawn from a counter-based generator."""
from __future__ import annotations

import numpy as np

from .algebra import CL03, CL30, CenterScalar, Multivector, Signature, conjugation, mv_exp
from .weyl import SpinorKind, WeylSpinor


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox stream keyed by ``(seed, stream)``; independent of platform and of
    how many other streams were consumed."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(stream)])))


def multivector(rng, sig: Signature, scale: float = 1.0) -> Multivector:
    return Multivector(sig, rng.uniform(-scale, scale, sig.dim))


def even(rng, sig: Signature = CL30, scale: float = 1.0) -> Multivector:
    return multivector(rng, sig, scale).even()


def center(rng, scale: float = 1.0) -> CenterScalar:
    re, im = rng.uniform(-scale, scale, 2)
    return CenterScalar(float(re), float(im))


def spinor(rng, kind: SpinorKind = SpinorKind.CUS, scale: float = 1.0) -> WeylSpinor:
    return WeylSpinor(kind, center(rng, scale), center(rng, scale))


def nonzero_spinor(rng, kind: SpinorKind = SpinorKind.CUS) -> WeylSpinor:
    while True:
        s = spinor(rng, kind)
        if abs(s.c1) + abs(s.c2) > 1e-6:
            return s


def unit_rotor(rng, scale: float = 0.75) -> Multivector:
    """``exp(v + B)`` for a random vector ``v`` and bivector ``B``.

    Conjugation negates both grades, so ``R conj(R) = exp(X) exp(-X) = 1``.
    """
    x = multivector(rng, CL30, scale)
    x = x.grade(1) + x.grade(2)
    return mv_exp(x)


def real_even_rotor(rng) -> Multivector:
    """Unit element ``alpha + beta e12 + gamma e13 + delta e23`` with real coefficients."""
    r = even(rng)
    while r.norm() < 1e-3:
        r = even(rng)
    return r / float(np.sqrt((r * conjugation(r)).scalar))


def momentum(rng, m: float, max_ratio: float = 2.0) -> np.ndarray:
    """Uniform direction, magnitude uniform in ``[0, max_ratio * m]``."""
    d = rng.normal(size=3)
    d /= np.linalg.norm(d)
    return d * rng.uniform(0.0, max_ratio * m)


def point(rng, scale: float = 1.0) -> tuple[float, np.ndarray]:
    return float(rng.uniform(-scale, scale)), rng.uniform(-scale, scale, 3)


def cl03_even(rng) -> Multivector:
    return even(rng, CL03)


def well_conditioned(rng, min_ratio: float = 1e-3) -> Multivector:
    """Random Cl(3,0) element whose ``|Psi conj(Psi)|`` is at least
    ``min_ratio * |Psi|^2``, keeping polar-form round-off bounded."""
    while True:
        x = multivector(rng, CL30)
        w = x * conjugation(x)
        if np.hypot(w["1"], w["e123"]) >= min_ratio * x.norm() ** 2:
            return x
