"""Cl(0,3) = H + H and its spinors.

``J = e1 e2 e3`` squares to ``+1`` and is central, so ``f(+-) = (1 +- J)/2``
are central idempotents splitting the algebra into two quaternion copies.
Spinor components live in ``span{1, e12}``, a commutative ring isomorphic to
the complex numbers but distinct from the centre of Cl(3,0).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from .algebra import CL03, CliffordError, Multivector, ParityError, SignatureError, conjugation

J = CL03.pseudoscalar()
F_PLUS = (1 + J) / 2
F_MINUS = (1 - J) / 2
E12 = CL03.blade("e12")
E13 = CL03.blade("e13")
E21 = CL03.blade("e21")
E23 = CL03.blade("e23")
E31 = CL03.blade("e31")
E32 = CL03.blade("e32")


def idempotents03() -> tuple[Multivector, Multivector]:
    return F_PLUS, F_MINUS


def _check(a: Multivector, what: str, even: bool = False) -> None:
    if a.sig != CL03:
        raise SignatureError(f"{what} needs Cl(0,3), got {a.sig}")
    if even and not a.is_even():
        raise ParityError(f"{what} takes an even element")


@dataclass(frozen=True)
class E12Number:
    """``re + im * e12`` in Cl(0,3)."""

    re: float = 0.0
    im: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))

    def _other(self, o):
        if isinstance(o, E12Number):
            return o
        if isinstance(o, (Real, np.floating, np.integer)):
            return E12Number(float(o), 0.0)
        return None

    def __add__(self, o):
        o = self._other(o)
        return NotImplemented if o is None else E12Number(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        return NotImplemented if o is None else E12Number(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        o = self._other(o)
        return NotImplemented if o is None else o - self

    def __neg__(self):
        return E12Number(-self.re, -self.im)

    def __mul__(self, o):
        if isinstance(o, Multivector):
            return self.to_multivector() * o
        o = self._other(o)
        if o is None:
            return NotImplemented
        return E12Number(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __rmul__(self, o):
        if isinstance(o, Multivector):
            return o * self.to_multivector()
        return self.__mul__(o)

    def conj(self) -> "E12Number":
        return E12Number(self.re, -self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def to_multivector(self) -> Multivector:
        return self.re + self.im * E12

    def isclose(self, o, atol: float = 1e-12) -> bool:
        return abs(self - o) <= atol


def e12_projection(x: Multivector) -> Multivector:
    """``(X + e21 X e12) / 2``: keeps the part of ``X`` commuting with ``e12``,
    which for even ``X`` is its ``span{1, e12}`` component."""
    return (x + E21 * x * E12) / 2


def line_coefficient03(x: Multivector, tol: float = 1e-12) -> E12Number:
    """``z`` with ``x = z f+`` for ``x`` in ``span{1, e12} f+``."""
    z = E12Number(2 * x["1"], 2 * x["e12"])
    leak = (z * F_PLUS - x).norm_inf()
    if leak > tol * max(1.0, x.norm_inf()):
        raise CliffordError(f"element is not on the line span(1, e12) f+ (residual {leak:.3g})")
    return z


# --------------------------------------------------------------------------
# the reduction to the even subalgebra


def reduce_even03(a: Multivector) -> Multivector:
    """Even ``A'`` with ``A' f+ = A f+``: the odd part is traded via ``J f+ = f+``.

    With ``A = a0 + a^k e_k + b^k (dual bivector) + b0 J`` this is
    ``(a0 + b0) + (a^k - b^k) e_k J``.
    """
    _check(a, "reduce_even03")
    return a.even() + a.odd() * J


class Kind03(enum.Enum):
    CUS03 = "CUS03"
    CDS03 = "CDS03"


@dataclass(frozen=True)
class WeylSpinor03:
    kind: Kind03
    c1: E12Number
    c2: E12Number

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind03(self.kind))
        for name in ("c1", "c2"):
            v = getattr(self, name)
            if not isinstance(v, E12Number):
                v = E12Number(*v) if isinstance(v, (tuple, list)) else E12Number(float(v))
                object.__setattr__(self, name, v)

    def embed(self) -> Multivector:
        if self.kind is Kind03.CUS03:
            return (self.c1.to_multivector() + E13 * self.c2.to_multivector()) * F_PLUS
        return F_PLUS * (self.c1.to_multivector() - self.c2.to_multivector() * E13)

    def isclose(self, o: "WeylSpinor03", atol: float = 1e-12) -> bool:
        return self.kind is o.kind and self.c1.isclose(o.c1, atol) and self.c2.isclose(o.c2, atol)


def _need(s: WeylSpinor03, kind: Kind03) -> None:
    if s.kind is not kind:
        raise CliffordError(f"expected a {kind.value} spinor, got {s.kind.value}")


def cus03_from_even(q: Multivector) -> WeylSpinor03:
    """``Q = a + b e12 + c e13 + d e23 = k1 + e13 k2`` with ``k1 = a + b e12``,
    ``k2 = c - d e12``."""
    _check(q, "cus03_from_even", even=True)
    return WeylSpinor03(
        Kind03.CUS03,
        E12Number(q["1"], q["e12"]),
        E12Number(q["e13"], -q["e23"]),
    )


def even_from_cus03(k: WeylSpinor03) -> Multivector:
    _need(k, Kind03.CUS03)
    return k.c1.to_multivector() + E13 * k.c2.to_multivector()


def to_cds03(k: WeylSpinor03) -> WeylSpinor03:
    """Clifford conjugate of ``K``: ``f+ (conj k1 - conj k2 e13)``."""
    _need(k, Kind03.CUS03)
    return WeylSpinor03(Kind03.CDS03, k.c1.conj(), k.c2.conj())


def metric03(k: WeylSpinor03, eta: WeylSpinor03) -> E12Number:
    """``k2 eta1 - k1 eta2``: the ``f+`` coefficient of ``e13 conj(K) eta``."""
    _need(k, Kind03.CUS03)
    _need(eta, Kind03.CUS03)
    return k.c2 * eta.c1 - k.c1 * eta.c2


def metric03_product(k: WeylSpinor03, eta: WeylSpinor03) -> Multivector:
    """The algebraic product ``e13 conj(K) eta`` whose line coefficient is the metric."""
    _need(k, Kind03.CUS03)
    _need(eta, Kind03.CUS03)
    return E13 * conjugation(k.embed()) * eta.embed()


def metric03_from_product(k: WeylSpinor03, eta: WeylSpinor03) -> E12Number:
    """Metric read off the algebra: line coefficient of the ``e12``-commuting
    part of ``e13 conj(K) eta``. Its real part is twice the scalar part."""
    return line_coefficient03(e12_projection(metric03_product(k, eta)))


# --------------------------------------------------------------------------
# the sigma map


def sigma(q: Multivector) -> Multivector:
    """``e32 conj(Q) e23``: an involutive antihomomorphism of the even subalgebra
    that moves left spinor components to the right."""
    _check(q, "sigma", even=True)
    return E32 * conjugation(q) * E23


def sigma_spinor(k: WeylSpinor03) -> Multivector:
    """``sigma`` applied to the spinor ``K = Q f+``; equals ``f+ sigma(Q)``."""
    _need(k, Kind03.CUS03)
    return E32 * conjugation(k.embed()) * E23


def sigma_dual_spinor(k: WeylSpinor03) -> tuple[E12Number, E12Number]:
    """Right-module components ``(c1, c2)`` of ``K* = sigma(K) e13 = f+ (c1 + c2 e13)``."""
    _need(k, Kind03.CUS03)
    return -k.c2, k.c1


def right_module_embed(c1: E12Number, c2: E12Number) -> Multivector:
    return F_PLUS * (c1.to_multivector() + c2.to_multivector() * E13)


def metric03_alt_raw(psi: Multivector, phi: Multivector) -> Multivector:
    """``sigma(psi) e13 phi`` before projection."""
    return sigma(psi) * E13 * phi


def metric03_alt(psi: Multivector, phi: Multivector) -> Multivector:
    """``(X + e21 X e12) / 2`` with ``X = sigma(psi) e13 phi``.

    For even ``X`` this keeps the ``span{1, e12}`` part.
    """
    _check(phi, "metric03_alt", even=True)
    return e12_projection(metric03_alt_raw(psi, phi))


def dictionary_even(k: WeylSpinor03) -> Multivector:
    """Even element for the first slot of :func:`metric03_alt`.

    ``e21 Q_K e12`` flips the sign of ``k2``; with it (and ``Q_eta`` in the
    second slot) the two metrics agree. Using ``Q_K`` directly instead yields
    the symmetric ``-(k1 eta2 + k2 eta1)``.
    """
    return E21 * even_from_cus03(k) * E12


def metric03_via_sigma(k: WeylSpinor03, eta: WeylSpinor03) -> E12Number:
    """:func:`metric03` evaluated through :func:`metric03_alt`."""
    x = metric03_alt(dictionary_even(k), even_from_cus03(eta))
    return E12Number(x["1"], x["e12"])


# --------------------------------------------------------------------------
# H + H


@dataclass(frozen=True)
class QPair:
    """Quaternion coordinates ``(w, x, y, z)`` of ``A f+`` and ``A f-`` on the
    units ``1, e23, e31, e12`` (``i, j, k``)."""

    plus: tuple[float, float, float, float]
    minus: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        for name in ("plus", "minus"):
            v = tuple(float(c) for c in getattr(self, name))
            if len(v) != 4:
                raise CliffordError("quaternions have four components")
            object.__setattr__(self, name, v)

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus)}

    @classmethod
    def from_json(cls, data) -> "QPair":
        try:
            return cls(tuple(data["plus"]), tuple(data["minus"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliffordError(f"malformed QPair JSON: {exc}") from exc


QUATERNION_UNITS = (CL03.scalar(1.0), E23, E31, E12)


def _quat_coords(q: Multivector) -> tuple[float, ...]:
    return (q["1"], q["e23"], q["e31"], q["e12"])


def _from_quat(c) -> Multivector:
    return sum((float(ci) * u for ci, u in zip(c, QUATERNION_UNITS)), CL03.zero())


def rep_h_plus_h(a: Multivector) -> QPair:
    """``A f(+-) = (E +- O J) f(+-)`` with ``E``, ``O`` the even and odd parts."""
    _check(a, "rep_h_plus_h")
    even, odd_j = a.even(), a.odd() * J
    return QPair(_quat_coords(even + odd_j), _quat_coords(even - odd_j))


def rep_h_plus_h_inverse(q: QPair) -> Multivector:
    return _from_quat(q.plus) * F_PLUS + _from_quat(q.minus) * F_MINUS
