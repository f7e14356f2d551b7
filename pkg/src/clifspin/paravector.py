"""Paravectors ``a0 + a^k e_k`` of Cl(3,0) as Minkowski vectors.

A contravariant undotted spinor ``K`` yields the null, future-pointing
paravector ``2 K rev(K)``; in the 2x2 picture this is the hermitian matrix
``2 k k^dagger``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import CL30, CenterScalar, CliffordError, Multivector, ParityError, SignatureError, grade_involution, reversion
from .representations import rep_cl30
from .weyl import E1, F_MINUS, F_PLUS, SpinorKind, WeylSpinor

E3 = CL30.blade("e3")


@dataclass(frozen=True)
class Paravector:
    a0: float
    a: tuple[float, float, float]

    def __post_init__(self) -> None:
        a = tuple(float(v) for v in self.a)
        if len(a) != 3:
            raise CliffordError("paravector needs three vector components")
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "a", a)

    def embed(self) -> Multivector:
        return self.a0 + CL30.vector(self.a)

    @classmethod
    def from_multivector(cls, x: Multivector, tol: float = 1e-12) -> "Paravector":
        if x.sig != CL30:
            raise SignatureError(f"paravectors live in Cl(3,0), got {x.sig}")
        extra = max(x.grade(2).norm_inf(), x.grade(3).norm_inf())
        if extra > tol * max(1.0, x.norm_inf()):
            raise CliffordError(f"element has grade-2/3 content {extra:.3g}; not a paravector")
        return cls(x["1"], (x["e1"], x["e2"], x["e3"]))

    def __add__(self, other: "Paravector") -> "Paravector":
        return Paravector(self.a0 + other.a0, tuple(np.add(self.a, other.a)))

    @property
    def scale(self) -> float:
        return max(abs(self.a0), *(abs(v) for v in self.a))

    def to_json(self) -> dict:
        return {"a0": self.a0, "a": list(self.a)}

    @classmethod
    def from_json(cls, data) -> "Paravector":
        try:
            return cls(data["a0"], tuple(data["a"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliffordError(f"malformed paravector JSON: {exc}") from exc


def spinor_square(k: WeylSpinor) -> Multivector:
    """``2 K rev(K)`` as a full multivector (grades 2 and 3 should vanish)."""
    if k.kind is not SpinorKind.CUS:
        raise CliffordError(f"expected a CUS spinor, got {k.kind.value}")
    x = k.embed()
    return 2.0 * (x * reversion(x))


def paravector_from_spinor(k: WeylSpinor) -> Paravector:
    return Paravector.from_multivector(spinor_square(k), tol=1e-12)


def minkowski_square(a: Paravector) -> float:
    return a.a0**2 - sum(v * v for v in a.a)


def is_null(a: Paravector, tol: float = 1e-12) -> tuple[bool, float]:
    """``(null?, (a0)^2 - |a|^2)``; the tolerance scales with ``scale**2``."""
    r = minkowski_square(a)
    return abs(r) <= tol * max(1.0, a.scale**2), r


def is_future(a: Paravector) -> bool:
    return a.a0 > 0


def clifford_symmetrization(a: Paravector, b: Paravector) -> Multivector:
    """``(a hat(b) + b hat(a)) / 2``; a pure scalar for paravectors."""
    x, y = a.embed(), b.embed()
    return (x * grade_involution(y) + y * grade_involution(x)) / 2


def pv_metric(a: Paravector, b: Paravector) -> float:
    return clifford_symmetrization(a, b).scalar


def spin_density_axis(psi: Multivector) -> np.ndarray:
    """Vector part of ``psi e3 rev(psi)`` for even ``psi``."""
    if psi.sig != CL30:
        raise SignatureError(f"spin_density_axis needs Cl(3,0), got {psi.sig}")
    if not psi.is_even():
        raise ParityError("spin_density_axis takes an even element")
    v = psi * E3 * reversion(psi)
    return np.array([v["e1"], v["e2"], v["e3"]])


# --------------------------------------------------------------------------
# null tetrad


class NullTetradLabel(enum.Enum):
    OO = "oo"
    OI = "oi"
    IO = "io"
    II = "ii"

    @property
    def element(self) -> Multivector:
        return _TETRAD[self]


_TETRAD = {
    NullTetradLabel.OO: F_PLUS,
    NullTetradLabel.OI: F_PLUS * E1,
    NullTetradLabel.IO: F_MINUS * E1,
    NullTetradLabel.II: F_MINUS,
}

# matrix slot of each tetrad element under rep_cl30
_TETRAD_SLOT = {
    NullTetradLabel.OO: (0, 0),
    NullTetradLabel.OI: (0, 1),
    NullTetradLabel.IO: (1, 0),
    NullTetradLabel.II: (1, 1),
}


def tetrad_decompose(x: Multivector, tol: float = 1e-12) -> dict[NullTetradLabel, CenterScalar]:
    """Central coefficients of ``x`` on ``{f+, f+ e1, f- e1, f-}``.

    The four elements have the matrix units as images, so the coefficients are
    the matrix entries of ``x``. Recombination is checked against ``x``.
    """
    if x.sig != CL30:
        raise SignatureError(f"tetrad_decompose needs Cl(3,0), got {x.sig}")
    m = rep_cl30(x)
    coeffs = {lab: CenterScalar.from_complex(m[slot]) for lab, slot in _TETRAD_SLOT.items()}
    back = sum((c * lab.element for lab, c in coeffs.items()), CL30.zero())
    resid = (back - x).norm_inf()
    if resid > tol * max(1.0, x.norm_inf()):
        raise CliffordError(f"element is outside the tetrad span (projection residual {resid:.3g})")
    return coeffs


def tetrad_rank_defect(coeffs: dict[NullTetradLabel, CenterScalar]) -> CenterScalar:
    """``(oo)(ii) - (oi)(io)``; vanishes for every ``K rev(K)``."""
    c = coeffs
    L = NullTetradLabel
    return c[L.OO] * c[L.II] - c[L.OI] * c[L.IO]
