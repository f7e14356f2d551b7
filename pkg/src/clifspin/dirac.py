"""The Dirac-Hestenes equation carried into Cl(3,0).

In natural units the free/coupled equation reads

    d_t Psi + grad Psi = [e (A - phi) Psi - m hat(Psi)] I e3,    I = e123,

with ``grad = sum_k e_k d_k`` acting from the left. Fields are plain
callables of ``(t, x)``; derivatives come from an analytic callback when
one is supplied and from central differences otherwise.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import (
    CL30,
    CliffordError,
    Multivector,
    SignatureError,
    conjugation,
    grade_involution,
    mv_exp,
    to_json,
)
from .weyl import E1, F_MINUS, F_PLUS, SpinorKind, WeylSpinor

I = CL30.pseudoscalar()
E3 = CL30.blade("e3")
I_E3 = I * E3  # equals e12, squares to -1
GENERATORS = tuple(CL30.blade(f"e{k}") for k in (1, 2, 3))

DEFAULT_STEP = 1e-4

ValueFn = Callable[[float, np.ndarray], Multivector]
PartialsFn = Callable[[float, np.ndarray], Sequence[Multivector]]


class SingularError(CliffordError):
    """Psi conj(Psi) vanishes, so no polar decomposition exists."""


@dataclass(frozen=True)
class SpacetimePoint:
    t: float
    x: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        x = tuple(float(v) for v in self.x)
        if len(x) != 3:
            raise CliffordError("a spacetime point needs three spatial coordinates")
        if not all(math.isfinite(v) for v in (self.t, *x)):
            raise CliffordError("spacetime point must be finite")
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", x)

    @property
    def xa(self) -> np.ndarray:
        return np.array(self.x)


@dataclass(frozen=True)
class MultivectorField:
    """A Cl(3,0)-valued field.

    ``partials(t, x)`` returns ``[d_t, d_1, d_2, d_3]`` of the field; when it is
    ``None``, central differences with step ``h`` are used instead.
    """

    value: ValueFn
    partials: PartialsFn | None = None
    h: float = DEFAULT_STEP

    def __call__(self, pt: SpacetimePoint) -> Multivector:
        return self.value(pt.t, pt.xa)

    def derivatives(self, pt: SpacetimePoint) -> list[Multivector]:
        if self.partials is not None:
            return list(self.partials(pt.t, pt.xa))
        return central_partials(self.value, pt, self.h)

    def finite_difference(self, h: float = DEFAULT_STEP) -> "MultivectorField":
        return MultivectorField(self.value, None, h)

    def map(self, f: Callable[[Multivector], Multivector]) -> "MultivectorField":
        """Compose with a point-independent real-linear map ``f``."""
        value = self.value
        partials = self.partials

        def new_value(t, x):
            return f(value(t, x))

        new_partials = None
        if partials is not None:

            def new_partials(t, x):
                return [f(d) for d in partials(t, x)]

        return MultivectorField(new_value, new_partials, self.h)

    @classmethod
    def constant(cls, a: Multivector) -> "MultivectorField":
        zero = a.sig.zero()
        return cls(lambda t, x: a, lambda t, x: [zero] * 4)


def central_partials(f: ValueFn, pt: SpacetimePoint, h: float) -> list[Multivector]:
    t, x = pt.t, pt.xa
    out = [(f(t + h, x) - f(t - h, x)) / (2 * h)]
    for k in range(3):
        step = np.zeros(3)
        step[k] = h
        out.append((f(t, x + step) - f(t, x - step)) / (2 * h))
    return out


@dataclass(frozen=True)
class PotentialField:
    """Electromagnetic potential: scalar ``phi`` and vector ``A``."""

    phi: Callable[[float, np.ndarray], float] = lambda t, x: 0.0
    A: Callable[[float, np.ndarray], Sequence[float]] = lambda t, x: (0.0, 0.0, 0.0)

    def paravector(self, pt: SpacetimePoint) -> Multivector:
        """``A - phi`` as an element of Cl(3,0)."""
        return CL30.vector(self.A(pt.t, pt.xa)) - float(self.phi(pt.t, pt.xa))

    @classmethod
    def constant(cls, phi: float = 0.0, A=(0.0, 0.0, 0.0)) -> "PotentialField":
        A = tuple(float(v) for v in A)
        return cls(lambda t, x: phi, lambda t, x: A)


ZERO_POTENTIAL = PotentialField()


def gradient(parts: Sequence[Multivector]) -> Multivector:
    """``sum_k e_k d_k`` from ``[d_t, d_1, d_2, d_3]``."""
    return sum((g * d for g, d in zip(GENERATORS, parts[1:])), CL30.zero())


def dhe_residual(
    psi: MultivectorField,
    pot: PotentialField,
    m: float,
    pt: SpacetimePoint,
    e: float = 1.0,
) -> Multivector:
    """Left side minus right side of the Cl(3,0) Dirac-Hestenes equation."""
    val = psi(pt)
    if val.sig != CL30:
        raise SignatureError(f"fields must take values in Cl(3,0), got {val.sig}")
    parts = psi.derivatives(pt)
    lhs = parts[0] + gradient(parts)
    rhs = (e * (pot.paravector(pt) * val) - m * grade_involution(val)) * I_E3
    return lhs - rhs


def momentum_apply(psi: MultivectorField, pt: SpacetimePoint) -> Multivector:
    """``grad(Psi) I e3``."""
    return gradient(psi.derivatives(pt)) * I_E3


# --------------------------------------------------------------------------
# plane waves


class Branch(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def sign(self) -> int:
        # sign in the exponent exp(sign * I e3 * (E t - p.x))
        return -1 if self is Branch.POSITIVE else 1


class Spin(enum.Enum):
    UP = "up"
    DOWN = "down"


_SPIN_ALIASES = {"up": Spin.UP, "u": Spin.UP, "↑": Spin.UP, "down": Spin.DOWN, "d": Spin.DOWN, "↓": Spin.DOWN}

_PREFACTORS = {
    (Branch.POSITIVE, Spin.UP): CL30.scalar(1.0),
    (Branch.POSITIVE, Spin.DOWN): CL30.blade("e13"),
    (Branch.NEGATIVE, Spin.UP): CL30.blade("e123"),
    (Branch.NEGATIVE, Spin.DOWN): CL30.blade("e2"),
}


@dataclass(frozen=True)
class PlaneWaveParams:
    branch: Branch
    spin: Spin
    p: tuple[float, float, float]
    m: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "branch", Branch(self.branch))
        spin = self.spin
        if not isinstance(spin, Spin):
            try:
                spin = _SPIN_ALIASES[str(spin).lower()]
            except KeyError:
                raise CliffordError(f"unknown spin label {self.spin!r}") from None
        object.__setattr__(self, "spin", spin)
        p = tuple(float(v) for v in self.p)
        if len(p) != 3:
            raise CliffordError("momentum needs three components")
        object.__setattr__(self, "p", p)
        if not self.m > 0:
            raise CliffordError(f"mass must be positive, got {self.m}")
        object.__setattr__(self, "m", float(self.m))

    @property
    def energy(self) -> float:
        return math.sqrt(self.m**2 + sum(v * v for v in self.p))

    @property
    def prefactor(self) -> Multivector:
        return _PREFACTORS[self.branch, self.spin]

    def to_json(self) -> dict:
        return {"branch": self.branch.value, "spin": self.spin.value, "p": list(self.p), "m": self.m}

    @classmethod
    def from_json(cls, data) -> "PlaneWaveParams":
        try:
            return cls(Branch(data["branch"]), data["spin"], tuple(data["p"]), float(data["m"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliffordError(f"malformed plane-wave JSON: {exc}") from exc


def boost(p, m: float) -> Multivector:
    """``L(p) = (E + m + p) / sqrt(2 m (E + m))``; satisfies ``L conj(L) = 1``."""
    if not m > 0:
        raise CliffordError(f"boost needs a positive mass, got {m}")
    p = np.asarray(p, dtype=float)
    energy = math.sqrt(m * m + float(p @ p))
    return (energy + m + CL30.vector(p)) / math.sqrt(2 * m * (energy + m))


BoostFn = Callable[[Sequence[float], float], Multivector]


def _phase(params: PlaneWaveParams, t: float, x) -> Multivector:
    theta = params.energy * t - float(np.dot(params.p, x))
    return mv_exp(I_E3 * (params.branch.sign * theta))


def planewave(params: PlaneWaveParams, pt: SpacetimePoint, boost_fn: BoostFn = boost) -> Multivector:
    return boost_fn(params.p, params.m) * params.prefactor * _phase(params, pt.t, pt.xa)


def planewave_field(params: PlaneWaveParams, boost_fn: BoostFn = boost) -> MultivectorField:
    """Plane wave with exact partials: ``d_t Psi = Psi (s E I e3)`` and
    ``d_k Psi = Psi (-s p_k I e3)`` where ``s`` is the exponent sign."""
    front = boost_fn(params.p, params.m) * params.prefactor
    s = params.branch.sign
    energy = params.energy
    p = params.p

    def value(t, x):
        return front * _phase(params, t, x)

    def partials(t, x):
        psi = value(t, x)
        base = psi * I_E3
        return [base * (s * energy)] + [base * (-s * pk) for pk in p]

    return MultivectorField(value, partials)


def right_phase(psi: Multivector, c: float, d: float) -> Multivector:
    return psi * (c + d * I_E3)


def left_phase(psi: Multivector, c: float, d: float) -> Multivector:
    """The forbidden left action; kept for the negative control."""
    return (c + d * I_E3) * psi


# --------------------------------------------------------------------------
# polar form


@dataclass(frozen=True)
class LounestoDecomposition:
    rho: float
    beta: float
    R: Multivector

    def recompose(self) -> Multivector:
        return math.sqrt(self.rho) * (mv_exp(I * (self.beta / 2)) * self.R)

    def to_json(self) -> dict:
        return {"rho": self.rho, "beta": self.beta, "R": to_json(self.R)}


SINGULAR_TOL = 1e-12


def lounesto_decompose(psi: Multivector, tol: float = SINGULAR_TOL) -> LounestoDecomposition:
    """``Psi = sqrt(rho) exp(I beta / 2) R`` with ``R conj(R) = 1``.

    ``beta`` lies in ``(-pi, pi]``.
    """
    if psi.sig != CL30:
        raise SignatureError(f"lounesto_decompose needs Cl(3,0), got {psi.sig}")
    w = psi * conjugation(psi)
    a, b = w["1"], w["e123"]
    thresh = tol * psi.norm() ** 2
    if a * a + b * b <= thresh * thresh or (a == 0.0 and b == 0.0):
        raise SingularError("Psi conj(Psi) vanishes; the polar decomposition is undefined")
    rho = math.hypot(a, b)
    beta = math.atan2(b, a)
    if beta == -math.pi:
        beta = math.pi
    r = mv_exp(I * (-beta / 2)) * psi / math.sqrt(rho)
    return LounestoDecomposition(rho, beta, r)


# --------------------------------------------------------------------------
# chiral (Weyl) and Pauli splittings


def weyl_split(psi: Multivector) -> tuple[Multivector, Multivector]:
    """``(psi f+, psi f-)``."""
    if psi.sig != CL30:
        raise SignatureError(f"weyl_split needs Cl(3,0), got {psi.sig}")
    return psi * F_PLUS, psi * F_MINUS


def weyl_fields(psi: MultivectorField) -> tuple[MultivectorField, MultivectorField]:
    """``xi = psi f+`` and ``eta = hat(psi f-)`` as fields."""
    xi = psi.map(lambda v: v * F_PLUS)
    eta = psi.map(lambda v: grade_involution(v * F_MINUS))
    return xi, eta


def weyl_residuals(
    xi: MultivectorField, eta: MultivectorField, m: float, pt: SpacetimePoint
) -> tuple[Multivector, Multivector]:
    """Residuals of ``(d_t + grad) xi I = m eta`` and ``(d_t - grad) eta I = m xi``."""
    dx = xi.derivatives(pt)
    de = eta.derivatives(pt)
    r1 = (dx[0] + gradient(dx)) * I - m * eta(pt)
    r2 = (de[0] - gradient(de)) * I - m * xi(pt)
    return r1, r2


def pauli_split(psi: Multivector) -> tuple[Multivector, Multivector]:
    """``psi = phi + chi e3`` with both parts even."""
    if psi.sig != CL30:
        raise SignatureError(f"pauli_split needs Cl(3,0), got {psi.sig}")
    return psi.even(), psi.odd() * E3


def pauli_fields(psi: MultivectorField) -> tuple[MultivectorField, MultivectorField]:
    return psi.map(lambda v: v.even()), psi.map(lambda v: v.odd() * E3)


def pauli_residuals(
    phi: MultivectorField, chi: MultivectorField, m: float, pt: SpacetimePoint
) -> tuple[Multivector, Multivector]:
    """Residuals of ``d_t phi I e3 + grad chi I = m phi`` and
    ``d_t chi I e3 + grad phi I = -m chi``."""
    dp = phi.derivatives(pt)
    dc = chi.derivatives(pt)
    r1 = dp[0] * I_E3 + gradient(dc) * I - m * phi(pt)
    r2 = dc[0] * I_E3 + gradient(dp) * I + m * chi(pt)
    return r1, r2


def dirac_from_weyl(k: WeylSpinor, l: WeylSpinor) -> Multivector:
    """``psi = K + L e1``."""
    for s in (k, l):
        if s.kind is not SpinorKind.CUS:
            raise CliffordError(f"dirac_from_weyl takes two CUS spinors, got {s.kind.value}")
    return k.embed() + l.embed() * E1


def weyl_from_dirac(psi: Multivector) -> tuple[WeylSpinor, WeylSpinor]:
    """Inverse of :func:`dirac_from_weyl`: ``K = psi f+`` and ``L = psi e1 f+``."""
    return (
        WeylSpinor.from_multivector(SpinorKind.CUS, psi * F_PLUS),
        WeylSpinor.from_multivector(SpinorKind.CUS, psi * E1 * F_PLUS),
    )


__all__ = [
    "Branch",
    "LounestoDecomposition",
    "MultivectorField",
    "PlaneWaveParams",
    "PotentialField",
    "SingularError",
    "SpacetimePoint",
    "Spin",
    "ZERO_POTENTIAL",
    "boost",
    "dhe_residual",
    "dirac_from_weyl",
    "lounesto_decompose",
    "momentum_apply",
    "pauli_fields",
    "pauli_residuals",
    "pauli_split",
    "planewave",
    "planewave_field",
    "right_phase",
    "weyl_fields",
    "weyl_from_dirac",
    "weyl_residuals",
    "weyl_split",
]
