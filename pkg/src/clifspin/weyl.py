"""Algebraic Weyl spinors of Cl(3,0).

A spinor is stored as two central components plus the kind of one-sided
ideal it lives in; :meth:`WeylSpinor.embed` builds the ideal element. The
four kinds are reached from a contravariant undotted spinor ``K`` by

    K*  = e1 conj(K)        (covariant undotted, f+ Cl)
    Kb  = e1 rev(K)         (contravariant dotted, f- Cl)
    Kb* = conj(e1 Kb)       (covariant dotted, Cl f-), which equals hat(K)
"""
from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np

from .algebra import (
    CL30,
    CenterScalar,
    CliffordError,
    Multivector,
    ParityError,
    SignatureError,
    conjugation,
    grade_involution,
    reversion,
)
from .representations import rep_cl30

E1 = CL30.blade("e1")
E3 = CL30.blade("e3")
F_PLUS = (1 + E3) / 2
F_MINUS = (1 - E3) / 2

RotorR = Multivector  # any Cl(3,0) element with R conj(R) = 1

ROTOR_TOL = 1e-10
IDEAL_TOL = 1e-12


class KindError(CliffordError):
    pass


class NormalizationError(CliffordError):
    pass


class IdealTag(enum.Enum):
    LEFT_PLUS = "Cl f+"
    RIGHT_PLUS = "f+ Cl"
    RIGHT_MINUS = "f- Cl"
    LEFT_MINUS = "Cl f-"


class SpinorKind(enum.Enum):
    CUS = "CUS"
    CVUS = "CVUS"
    CDS = "CDS"
    CVDS = "CVDS"

    @property
    def ideal(self) -> IdealTag:
        return _IDEALS[self]


_IDEALS = {
    SpinorKind.CUS: IdealTag.LEFT_PLUS,
    SpinorKind.CVUS: IdealTag.RIGHT_PLUS,
    SpinorKind.CDS: IdealTag.RIGHT_MINUS,
    SpinorKind.CVDS: IdealTag.LEFT_MINUS,
}

# basis elements carrying (c1, c2) for each kind
_BASIS = {
    SpinorKind.CUS: (F_PLUS, E1 * F_PLUS),
    SpinorKind.CVUS: (F_PLUS, F_PLUS * E1),
    SpinorKind.CDS: (F_MINUS * E1, F_MINUS),
    SpinorKind.CVDS: (E1 * F_MINUS, F_MINUS),
}

# where (c1, c2) sit in the 2x2 picture
_SLOTS = {
    SpinorKind.CUS: ((0, 0), (1, 0)),
    SpinorKind.CVUS: ((0, 0), (0, 1)),
    SpinorKind.CDS: ((1, 0), (1, 1)),
    SpinorKind.CVDS: ((0, 1), (1, 1)),
}


def _as_center(z) -> CenterScalar:
    if isinstance(z, CenterScalar):
        return z
    if isinstance(z, (list, tuple)) and len(z) == 2:
        return CenterScalar(float(z[0]), float(z[1]))
    return CenterScalar.from_complex(complex(z))


@dataclass(frozen=True)
class WeylSpinor:
    kind: SpinorKind
    c1: CenterScalar
    c2: CenterScalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SpinorKind(self.kind))
        object.__setattr__(self, "c1", _as_center(self.c1))
        object.__setattr__(self, "c2", _as_center(self.c2))

    @classmethod
    def cus(cls, k1, k2) -> "WeylSpinor":
        return cls(SpinorKind.CUS, k1, k2)

    def embed(self) -> Multivector:
        b1, b2 = _BASIS[self.kind]
        return self.c1 * b1 + self.c2 * b2

    @classmethod
    def from_multivector(cls, kind: SpinorKind, x: Multivector, tol: float = IDEAL_TOL) -> "WeylSpinor":
        """Read components off an element of the ideal named by ``kind``."""
        kind = SpinorKind(kind)
        m = rep_cl30(x)
        (i1, j1), (i2, j2) = _SLOTS[kind]
        mask = np.ones((2, 2), dtype=bool)
        mask[i1, j1] = mask[i2, j2] = False
        leak = float(np.max(np.abs(m[mask])))
        if leak > tol * max(1.0, float(np.max(np.abs(m)))):
            raise CliffordError(f"element is not in the ideal {kind.ideal.value} (off-ideal part {leak:.3g})")
        return cls(kind, CenterScalar.from_complex(m[i1, j1]), CenterScalar.from_complex(m[i2, j2]))

    def components(self) -> tuple[complex, complex]:
        return complex(self.c1), complex(self.c2)

    def isclose(self, other: "WeylSpinor", atol: float = 1e-12) -> bool:
        return self.kind == other.kind and self.c1.isclose(other.c1, atol) and self.c2.isclose(other.c2, atol)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "c1": [self.c1.re, self.c1.im], "c2": [self.c2.re, self.c2.im]}

    @classmethod
    def from_json(cls, data) -> "WeylSpinor":
        try:
            return cls(SpinorKind(data["kind"]), tuple(data["c1"]), tuple(data["c2"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliffordError(f"malformed spinor JSON: {exc}") from exc


def _need(s: WeylSpinor, kind: SpinorKind) -> None:
    if s.kind is not kind:
        raise KindError(f"expected a {kind.value} spinor, got {s.kind.value}")


# --------------------------------------------------------------------------
# constructing spinors


def reduce_to_even(psi: Multivector) -> Multivector:
    """Even element with the same image under right multiplication by f+.

    ``e3 f+ = f+`` lets the odd part trade its trailing ``e3``.
    """
    if psi.sig != CL30:
        raise SignatureError(f"reduce_to_even needs Cl(3,0), got {psi.sig}")
    return psi.even() + psi.odd() * E3


def cus_from_even(psi: Multivector) -> WeylSpinor:
    """``K = psi f+`` for even ``psi = s + b12 e12 + b13 e13 + b23 e23``."""
    if psi.sig != CL30:
        raise SignatureError(f"cus_from_even needs Cl(3,0), got {psi.sig}")
    if not psi.is_even():
        raise ParityError("cus_from_even takes an even element; call reduce_to_even first")
    return WeylSpinor(
        SpinorKind.CUS,
        CenterScalar(psi["1"], psi["e12"]),
        CenterScalar(psi["e13"], psi["e23"]),
    )


def to_cvus(k: WeylSpinor) -> WeylSpinor:
    _need(k, SpinorKind.CUS)
    return WeylSpinor(SpinorKind.CVUS, -k.c2, k.c1)


def to_cds(k: WeylSpinor) -> WeylSpinor:
    _need(k, SpinorKind.CUS)
    return WeylSpinor(SpinorKind.CDS, k.c1.conj(), k.c2.conj())


def to_cvds(kbar: WeylSpinor) -> WeylSpinor:
    _need(kbar, SpinorKind.CDS)
    return WeylSpinor(SpinorKind.CVDS, -kbar.c2, kbar.c1)


# --------------------------------------------------------------------------
# spinor metrics


def metric_fplus(k: WeylSpinor, eta: WeylSpinor) -> CenterScalar:
    """Coefficient of f+ in ``K* eta``: ``-k2 eta1 + k1 eta2``."""
    _need(k, SpinorKind.CUS)
    _need(eta, SpinorKind.CUS)
    return -(k.c2 * eta.c1) + k.c1 * eta.c2


def metric_fminus(kbar: WeylSpinor, eta_star: WeylSpinor) -> CenterScalar:
    """Coefficient of f- in ``Kb eta_b*`` for a dotted spinor and a covariant
    dotted one. In terms of the contravariant components of ``eta``
    (``eta1' = d2``, ``eta2' = -d1``) this is ``eta1' k2' - eta2' k1'``."""
    _need(kbar, SpinorKind.CDS)
    _need(eta_star, SpinorKind.CVDS)
    eta1 = eta_star.c2
    eta2 = -eta_star.c1
    return eta1 * kbar.c2 - eta2 * kbar.c1


def idempotent_coefficient(x: Multivector, f: Multivector) -> CenterScalar:
    """``z`` with ``x = z f`` for ``x`` in the line ``C f`` (``f = f+`` or ``f-``).

    ``z f`` has scalar part ``re/2`` and pseudoscalar part ``im/2``.
    """
    return CenterScalar(2 * x["1"], 2 * x["e123"])


# --------------------------------------------------------------------------
# SL(2, C) action


def rotor_norm(r: Multivector) -> Multivector:
    return r * conjugation(r)


def check_rotor(r: Multivector, tol: float = ROTOR_TOL) -> None:
    if r.sig != CL30:
        raise SignatureError(f"rotors live in Cl(3,0), got {r.sig}")
    err = (rotor_norm(r) - 1.0).norm_inf()
    if err > tol:
        raise NormalizationError(
            f"R conj(R) differs from 1 by {err:.3g}; divide R by sqrt(R conj(R)) (see normalize_rotor)"
        )


def normalize_rotor(r: Multivector) -> Multivector:
    """Scale ``R`` by the inverse square root of the central element ``R conj(R)``."""
    z = rotor_norm(r)
    zc = complex(z["1"], z["e123"])
    if abs(zc) <= 1e-300 or (z - CenterScalar.from_complex(zc).to_multivector()).norm_inf() > 1e-9 * abs(zc):
        raise NormalizationError("R conj(R) vanishes or is not central; R cannot be normalized")
    return CenterScalar.from_complex(1 / cmath.sqrt(zc)) * r


def transform(r: Multivector, s: WeylSpinor) -> WeylSpinor:
    """Apply the SL(2,C) law matching ``s.kind``:

    K -> R K,  K* -> K* R^-1,  Kb -> Kb hat(R)^-1,  Kb* -> hat(R) Kb*
    """
    check_rotor(r)
    x = s.embed()
    if s.kind is SpinorKind.CUS:
        y = r * x
    elif s.kind is SpinorKind.CVUS:
        y = x * conjugation(r)
    elif s.kind is SpinorKind.CDS:
        # hat(R)^-1 = conj(hat(R)) = rev(R)
        y = x * reversion(r)
    else:
        y = grade_involution(r) * x
    return WeylSpinor.from_multivector(s.kind, y, tol=1e-9)
